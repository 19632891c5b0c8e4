"""Binary matrices over GF(2): bit-packed rank, weight profiles, alist I/O."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np


class AlistError(ValueError):
    """Malformed alist text. `line` is the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"alist line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class BinaryMatrix:
    """Immutable sparse matrix over GF(2).

    Canonical storage is per-column sorted row indices; the row view is
    derived lazily. Equality is structural.
    """

    rows: int
    cols: int
    col_support: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.col_support) != self.cols:
            raise ValueError("col_support length does not match cols")
        for j, col in enumerate(self.col_support):
            prev = -1
            for i in col:
                if not 0 <= i < self.rows:
                    raise ValueError(f"row index {i} out of range in column {j}")
                if i <= prev:
                    raise ValueError(f"column {j} is unsorted or has duplicates")
                prev = i

    @classmethod
    def from_columns(cls, rows: int, cols: int, columns) -> "BinaryMatrix":
        """Build from an iterable of per-column row-index iterables (any order)."""
        support = tuple(tuple(sorted(set(col))) for col in columns)
        for j, (raw, dedup) in enumerate(zip(columns, support)):
            if len(tuple(raw)) != len(dedup):
                raise ValueError(f"duplicate row index in column {j}")
        return cls(rows, cols, support)

    @classmethod
    def from_dense(cls, arr) -> "BinaryMatrix":
        a = np.asarray(arr)
        if a.ndim != 2:
            raise ValueError("dense input must be 2-D")
        cols = tuple(tuple(int(i) for i in np.flatnonzero(a[:, j] % 2))
                     for j in range(a.shape[1]))
        return cls(a.shape[0], a.shape[1], cols)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for j, col in enumerate(self.col_support):
            for i in col:
                out[i, j] = 1
        return out

    @cached_property
    def row_support(self) -> tuple[tuple[int, ...], ...]:
        rows: list[list[int]] = [[] for _ in range(self.rows)]
        for j, col in enumerate(self.col_support):
            for i in col:
                rows[i].append(j)
        return tuple(tuple(r) for r in rows)

    @property
    def ones(self) -> int:
        return sum(len(col) for col in self.col_support)

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(self.cols, self.rows, self.row_support)

    def packed_rows(self) -> list[int]:
        """Each row as a Python int with bit j set iff entry (row, j) is 1."""
        out = []
        for row in self.row_support:
            acc = 0
            for j in row:
                acc |= 1 << j
            out.append(acc)
        return out

    def entries(self) -> tuple[tuple[int, int], ...]:
        """All 1-positions in row-major order."""
        return tuple((i, j) for i, row in enumerate(self.row_support) for j in row)


@dataclass(frozen=True)
class WeightProfile:
    row_weights: tuple[int, ...]
    col_weights: tuple[int, ...]

    @property
    def ones(self) -> int:
        return sum(self.row_weights)


def rank_gf2(M: BinaryMatrix) -> int:
    """Rank over GF(2) by elimination on rows packed into Python ints."""
    pivots: dict[int, int] = {}  # lowest set bit -> reduced row
    rank = 0
    for row in M.packed_rows():
        while row:
            low = row & -row
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = row
                rank += 1
                break
            row ^= piv
    return rank


def weight_profile(M: BinaryMatrix) -> WeightProfile:
    row_w = [0] * M.rows
    for col in M.col_support:
        for i in col:
            row_w[i] += 1
    return WeightProfile(tuple(row_w), tuple(len(col) for col in M.col_support))


def dumps_alist(M: BinaryMatrix) -> str:
    """Serialize in the standard alist layout.

    Line 1 is `N M` (columns then rows); index lists are 1-based and padded
    with zeros to the maximum degree, as in the de-facto standard files.
    """
    prof = weight_profile(M)
    max_col = max(prof.col_weights, default=0)
    max_row = max(prof.row_weights, default=0)
    lines = [
        f"{M.cols} {M.rows}",
        f"{max_col} {max_row}",
        " ".join(map(str, prof.col_weights)),
        " ".join(map(str, prof.row_weights)),
    ]
    for col in M.col_support:
        padded = [i + 1 for i in col] + [0] * (max_col - len(col))
        lines.append(" ".join(map(str, padded)))
    for row in M.row_support:
        padded = [j + 1 for j in row] + [0] * (max_row - len(row))
        lines.append(" ".join(map(str, padded)))
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise AlistError(lineno, f"non-integer token ({exc})") from None


def loads_alist(text: str) -> BinaryMatrix:
    """Parse alist text; raises AlistError with the offending line number."""
    lines = text.splitlines()
    if not lines:
        raise AlistError(1, "empty input")
    header = _ints(lines[0], 1)
    if len(header) != 2:
        raise AlistError(1, "header must be exactly 'N M'")
    n, m = header
    if n < 0 or m < 0:
        raise AlistError(1, "dimensions must be nonnegative")
    if len(lines) < 4 + n + m:
        raise AlistError(len(lines), f"expected {4 + n + m} lines, got {len(lines)}")
    col_w = _ints(lines[2], 3)
    row_w = _ints(lines[3], 4)
    if len(col_w) != n:
        raise AlistError(3, f"expected {n} column weights, got {len(col_w)}")
    if len(row_w) != m:
        raise AlistError(4, f"expected {m} row weights, got {len(row_w)}")

    columns: list[list[int]] = []
    for j in range(n):
        lineno = 5 + j
        vals = _ints(lines[4 + j], lineno)
        entries = [v for v in vals if v != 0]
        if any(v == 0 for v in vals[:len(entries)]):
            raise AlistError(lineno, "zero padding must follow all indices")
        if len(entries) != col_w[j]:
            raise AlistError(lineno, f"column {j + 1} lists {len(entries)} indices, "
                                     f"declared weight {col_w[j]}")
        seen = set()
        col = []
        for v in entries:
            if not 1 <= v <= m:
                raise AlistError(lineno, f"row index {v} out of range 1..{m}")
            if v in seen:
                raise AlistError(lineno, f"duplicate row index {v}")
            seen.add(v)
            col.append(v - 1)
        columns.append(sorted(col))

    # The per-row lists are redundant; verify them against the column lists.
    from_rows: list[set[int]] = [set() for _ in range(m)]
    for i in range(m):
        lineno = 5 + n + i
        vals = _ints(lines[4 + n + i], lineno)
        entries = [v for v in vals if v != 0]
        if len(entries) != row_w[i]:
            raise AlistError(lineno, f"row {i + 1} lists {len(entries)} indices, "
                                     f"declared weight {row_w[i]}")
        for v in entries:
            if not 1 <= v <= n:
                raise AlistError(lineno, f"column index {v} out of range 1..{n}")
            if v - 1 in from_rows[i]:
                raise AlistError(lineno, f"duplicate column index {v}")
            from_rows[i].add(v - 1)
    for j, col in enumerate(columns):
        for i in col:
            if j not in from_rows[i]:
                raise AlistError(5 + n + i, f"row {i + 1} and column {j + 1} lists disagree")
    if sum(len(s) for s in from_rows) != sum(len(c) for c in columns):
        raise AlistError(5 + n, "row and column lists disagree")

    return BinaryMatrix(m, n, tuple(tuple(c) for c in columns))


def write_alist(M: BinaryMatrix, path) -> None:
    Path(path).write_text(dumps_alist(M))


def read_alist(path) -> BinaryMatrix:
    return loads_alist(Path(path).read_text())
