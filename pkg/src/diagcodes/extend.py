"""Column-weight-3 extension: append one new check row per block.

Every pair {e, o} of block i grows into the triple {e, o, m+i-1}; the matrix
gains t rows and keeps its column count, raising all column weights from 2 to
3 while keeping girth 6 (no two triples share two points). t added rows is
optimal: a weight-t row already forces t distinct new rows to avoid 4-cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .board import DiagonalVector, broken_diagonal_pair
from .gf2 import BinaryMatrix


@dataclass(frozen=True)
class TripleSystem:
    """Triples {e, o, m+i-1} over points {0..m+t-1}, in block-major column order."""

    m: int
    t: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for tri in self.triples:
            high = [x for x in tri if x >= self.m]
            if len(high) != 1 or not self.m <= high[0] < self.m + self.t:
                raise ValueError(f"triple {tri} must contain exactly one new point")

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(tri) for tri in self.triples}

    def to_lists(self) -> list[list[int]]:
        return [list(tri) for tri in self.triples]


def triple_system(vec: DiagonalVector) -> TripleSystem:
    triples = []
    for i, p in enumerate(vec.offsets, start=1):
        for (a, b) in broken_diagonal_pair(vec.m, p).pairs:
            triples.append((a, b, vec.m + i - 1))
    return TripleSystem(vec.m, vec.t, tuple(triples))


def build_extension(vec: DiagonalVector) -> BinaryMatrix:
    """(m+t) x t*floor(m/2) matrix: the cycle-code rows plus one row per block.

    The first m rows equal build_parity_check(vec); row m+i-1 holds ones on
    exactly the columns of block i. Column order matches the parity check.
    """
    ts = triple_system(vec)
    return BinaryMatrix(vec.m + vec.t, len(ts.triples), ts.triples)


def extension_rate(vec: DiagonalVector) -> Fraction:
    """Published rate 1 - (t+m-1)/(t*floor(m/2)) of the extended code.

    This uses m+t-1 as the dependent-row count. Elimination actually gives
    rank m+t-2 for even m (the even-indexed rows and the t new rows both sum
    to the all-ones vector), so the rank-based rate is slightly higher; see
    code_rates with rank_gf2 for the exact value.
    """
    n = vec.block_length
    return 1 - Fraction(vec.t + vec.m - 1, n)


def added_rows_lower_bound(t: int) -> int:
    """Minimum rows any girth-6 column-weight-3 extension must add: t.

    The construction above meets this bound with equality.
    """
    if t < 1:
        raise ValueError("t must be positive")
    return t
