"""Board colorings built from broken diagonal pairs, and the cycle codes they induce.

An m x m board is colored by picking unordered index pairs {i, j} (the black
squares, symmetric about the white main diagonal). Each pair becomes a
weight-2 column of an incidence matrix, i.e. a parity-check column of a cycle
code. The structured colorings below select t disjoint broken diagonal pairs
via a vector of odd offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gf2 import BinaryMatrix


@dataclass(frozen=True)
class DiagonalVector:
    """Board size m plus strictly increasing odd diagonal offsets.

    The offsets select disjoint broken diagonal pairs; each offset contributes
    one block of floor(m/2) weight-2 columns.
    """

    m: int
    offsets: tuple[int, ...]

    def __post_init__(self):
        if self.m < 4:
            raise ValueError("m must be at least 4")
        if not self.offsets:
            raise ValueError("at least one offset is required")
        object.__setattr__(self, "offsets", tuple(int(v) for v in self.offsets))
        for v in self.offsets:
            if v % 2 == 0:
                raise ValueError("v components must be odd")
            if not 1 <= v <= self.m - 1:
                raise ValueError(f"v component {v} out of range 1..{self.m - 1}")
        if any(a >= b for a, b in zip(self.offsets, self.offsets[1:])):
            raise ValueError("v components must be strictly increasing")

    @property
    def t(self) -> int:
        return len(self.offsets)

    @property
    def block_size(self) -> int:
        return self.m // 2

    @property
    def block_length(self) -> int:
        return self.t * (self.m // 2)


@dataclass(frozen=True)
class PairSet:
    """Ordered list of unordered check-index pairs; the black squares of a coloring.

    The list order fixes the variable-node (column) indexing of the
    incidence matrix.
    """

    m: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for (i, j) in self.pairs:
            if not (0 <= i < j <= self.m - 1):
                raise ValueError(f"pair ({i},{j}) is not 0 <= i < j < m")
            if (i, j) in seen:
                raise ValueError(f"repeated pair ({i},{j})")
            seen.add((i, j))

    def incidence(self) -> BinaryMatrix:
        """m x len(pairs) matrix with one weight-2 column per pair."""
        return BinaryMatrix(self.m, len(self.pairs), self.pairs)

    def to_lists(self) -> list[list[int]]:
        return [[i, j] for (i, j) in self.pairs]


@dataclass(frozen=True)
class CodeRates:
    design_rate: Fraction
    actual_rate: Fraction
    block_length: int

    def __post_init__(self):
        if not 0 <= self.design_rate <= self.actual_rate < 1:
            raise ValueError("rates must satisfy 0 <= design <= actual < 1")


def broken_diagonal_pair(m: int, p: int) -> PairSet:
    """The coloring of one broken diagonal pair with offset p.

    Even m: pairs {2j, p+2j mod m} for j = 0..m/2-1 (the black squares of the
    alternately colored diagonal pair through (0, p)). Odd m: built on the
    (m+1)-board, then the pair containing index m is dropped. Either way the
    result has floor(m/2) pairs, each joining an even index to an odd one.
    """
    if m < 4:
        raise ValueError("m must be at least 4")
    if p % 2 == 0 or not 1 <= p <= m - 1:
        raise ValueError("p must be odd and in 1..m-1")
    if m % 2 == 0:
        pairs = []
        for j in range(m // 2):
            a, b = 2 * j, (p + 2 * j) % m
            pairs.append((a, b) if a < b else (b, a))
        return PairSet(m, tuple(pairs))
    parent = broken_diagonal_pair(m + 1, p)
    kept = tuple(pr for pr in parent.pairs if m not in pr)
    return PairSet(m, kept)


def coloring(vec: DiagonalVector) -> PairSet:
    """Union of the broken diagonal pairs of all offsets, in block order."""
    pairs: list[tuple[int, int]] = []
    for p in vec.offsets:
        pairs.extend(broken_diagonal_pair(vec.m, p).pairs)
    return PairSet(vec.m, tuple(pairs))


def build_parity_check(vec: DiagonalVector) -> BinaryMatrix:
    """Parity-check matrix of the cycle code selected by `vec`.

    m rows, one weight-2 column per pair; block i occupies columns
    i*floor(m/2) .. (i+1)*floor(m/2)-1 in ascending diagonal-step order.
    """
    return coloring(vec).incidence()


def code_rates(vec: DiagonalVector, rank: int) -> CodeRates:
    """Design and rank-based rates at block length t*floor(m/2).

    `rank` should come from rank_gf2 of the built matrix; it is not assumed.
    """
    n = vec.block_length
    return CodeRates(
        design_rate=1 - Fraction(vec.m, n),
        actual_rate=1 - Fraction(rank, n),
        block_length=n,
    )


def random_coloring(m: int, density: float, seed: int) -> PairSet:
    """Random symmetric coloring: each off-diagonal pair kept with prob `density`.

    Deterministic for a fixed seed; pairs are listed in lexicographic order.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    if not 0 < density <= 1:
        raise ValueError("density must be in (0, 1]")
    rng = np.random.default_rng(seed)
    all_pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    keep = rng.random(len(all_pairs)) < density
    return PairSet(m, tuple(pr for pr, k in zip(all_pairs, keep) if k))
