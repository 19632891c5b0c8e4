"""Quasi-cyclic lifting: circulant expansion, exact lifted girth, exponent search.

A 1-entry with exponent e becomes the N x N circulant permutation sending row
r to column (r+e) mod N. A cycle of the lifted Tanner graph projects onto a
tailless non-backtracking closed walk of the base graph whose alternating
exponent sum (+e going check->variable, -e going back) vanishes mod N, and
conversely, so the lifted girth is the minimum length of such a walk. Walks
are enumerated once per (base, bound) and reused across exponent assignments.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded
from .gf2 import BinaryMatrix
from .girth import girth

MAX_WALK_LEN = 20


@dataclass(frozen=True)
class QcExponentMatrix:
    """Base matrix plus one shift exponent per 1-entry (row-major order)."""

    base: BinaryMatrix
    lift_size: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.lift_size < 1:
            raise ValueError("lift size must be at least 1")
        if len(self.exponents) != self.base.ones:
            raise ValueError("need exactly one exponent per 1-entry")
        if any(not 0 <= e < self.lift_size for e in self.exponents):
            raise ValueError("exponents must lie in [0, lift_size)")

    def exponent_of(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.base.entries(), self.exponents))

    def to_json_dict(self) -> dict:
        from .gf2 import dumps_alist
        return {
            "lift_size": self.lift_size,
            "exponents": list(self.exponents),
            "entry_order": "row-major over 1-entries",
            "base_alist": dumps_alist(self.base),
        }


@dataclass(frozen=True)
class LiftReport:
    """Lifted girth: exact when `lifted_girth` is set, else `>= lower_bound`.

    `limiting_cycle` is the base-entry traversal (row, col) sequence of a
    minimum-length zero-sum walk when the girth was determined exactly.
    """

    lifted_girth: int | None
    lower_bound: int
    searched_up_to: int
    limiting_cycle: tuple[tuple[int, int], ...] | None = None

    @property
    def exact(self) -> bool:
        return self.lifted_girth is not None

    def meets(self, target: int) -> bool:
        return self.lower_bound >= target

    def to_json_dict(self) -> dict:
        return {
            "lifted_girth": self.lifted_girth,
            "lower_bound": self.lower_bound,
            "searched_up_to": self.searched_up_to,
            "limiting_cycle": [list(e) for e in self.limiting_cycle]
                              if self.limiting_cycle else None,
        }


@dataclass(frozen=True)
class ExponentSearchResult:
    qc: QcExponentMatrix
    success: bool
    report: LiftReport
    restarts: int
    steps: int


def expand(qc: QcExponentMatrix) -> BinaryMatrix:
    """Blow each 1-entry up into its circulant permutation block."""
    N = qc.lift_size
    base = qc.base
    exp = qc.exponent_of()
    columns: list[tuple[int, ...]] = []
    for j in range(base.cols):
        checks = [(i, exp[(i, j)]) for i in base.col_support[j]]
        for c in range(N):
            columns.append(tuple(sorted(i * N + (c - e) % N for i, e in checks)))
    return BinaryMatrix(base.rows * N, base.cols * N, tuple(columns))


@dataclass(frozen=True)
class _WalkTable:
    """Deduplicated tailless non-backtracking closed walks up to a bound."""

    entries: tuple[tuple[int, int], ...]
    lengths: np.ndarray          # (n_walks,)
    coeffs: np.ndarray           # (n_walks, n_entries) signed traversal counts
    seqs: tuple[tuple[int, ...], ...]  # representative entry-index traversals

    def sums(self, exponents) -> np.ndarray:
        return self.coeffs @ np.asarray(exponents, dtype=np.int64)


@functools.lru_cache(maxsize=16)
def _walk_table(base: BinaryMatrix, max_len: int, budget: int) -> _WalkTable:
    entries = base.entries()
    index = {e: k for k, e in enumerate(entries)}
    by_check: list[list[int]] = [[] for _ in range(base.rows)]
    by_var: list[list[int]] = [[] for _ in range(base.cols)]
    for k, (i, j) in enumerate(entries):
        by_check[i].append(k)
        by_var[j].append(k)

    found: dict[tuple, tuple[int, ...]] = {}
    coeff = [0] * len(entries)
    path: list[int] = []
    steps = 0

    def key_of(length: int) -> tuple:
        support = tuple(k for k, c in enumerate(coeff) if c)
        vec = tuple(coeff[k] for k in support)
        if vec and vec[0] < 0:
            vec = tuple(-c for c in vec)
        return (length, support, vec)

    def rec(root: int, at_check: bool, node: int, first: int, prev: int,
            depth: int) -> None:
        nonlocal steps
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"walk enumeration budget {budget} exhausted")
        if at_check:
            if node == root and depth >= 4 and prev != first:
                found.setdefault(key_of(depth), tuple(path))
            if depth >= max_len:
                return
            for k in by_check[node]:
                if k == prev:
                    continue
                path.append(k)
                coeff[k] += 1
                rec(root, False, entries[k][1], first if depth else k, k, depth + 1)
                coeff[k] -= 1
                path.pop()
        else:
            if depth >= max_len:
                return
            for k in by_var[node]:
                if k == prev or entries[k][0] < root:
                    continue
                path.append(k)
                coeff[k] -= 1
                rec(root, True, entries[k][0], first, k, depth + 1)
                coeff[k] += 1
                path.pop()

    for root in range(base.rows):
        rec(root, True, root, -1, -1, 0)

    items = sorted(found.items())
    lengths = np.array([k[0] for k, _ in items], dtype=np.int64)
    coeffs = np.zeros((len(items), len(entries)), dtype=np.int8)
    for w, (k, _) in enumerate(items):
        _, support, vec = k
        coeffs[w, list(support)] = vec
    seqs = tuple(seq for _, seq in items)
    return _WalkTable(entries, lengths, coeffs, seqs)


def qc_girth(qc: QcExponentMatrix, search_bound: int,
             budget: int = 10_000_000) -> LiftReport:
    """Lifted girth by zero-sum walk search, exact up to `search_bound`.

    Returns the exact girth if it is <= search_bound, otherwise a report
    stating girth >= search_bound + 2. search_bound must be even and at most
    MAX_WALK_LEN; enumeration cost is guarded by `budget`.
    """
    if search_bound % 2 != 0:
        raise ValueError("search_bound must be even")
    if search_bound > MAX_WALK_LEN:
        raise ValueError(f"search_bound may not exceed {MAX_WALK_LEN}")
    table = _walk_table(qc.base, search_bound, budget)
    if len(table.lengths) == 0:
        return LiftReport(None, search_bound + 2, search_bound)
    zero = (table.sums(qc.exponents) % qc.lift_size) == 0
    if not zero.any():
        return LiftReport(None, search_bound + 2, search_bound)
    idx = np.flatnonzero(zero)
    w = idx[np.argmin(table.lengths[idx])]
    g = int(table.lengths[w])
    witness = tuple(table.entries[k] for k in table.seqs[w])
    return LiftReport(g, g, search_bound, witness)


def search_exponents(base: BinaryMatrix, lift_size: int, target_girth: int,
                     budget: int = 20_000, seed: int = 0) -> ExponentSearchResult:
    """Find exponents whose lift has girth >= target_girth.

    Greedy repair with random restarts: start from all-zero (then random)
    assignments and repeatedly reassign the entry lying on the most violated
    walks, choosing the value that minimizes a shortness-weighted violation
    count. Deterministic for a fixed seed. On budget exhaustion the best
    assignment found is returned with success=False.
    """
    if target_girth % 2 != 0 or target_girth < 4:
        raise ValueError("target_girth must be an even integer >= 4")
    base_girth = girth(base).girth
    if base_girth is not None and target_girth < base_girth:
        raise ValueError("target_girth must be at least the base girth")
    if target_girth - 2 > MAX_WALK_LEN:
        raise ValueError(f"targets above {MAX_WALK_LEN + 2} are not supported")

    table = _walk_table(base, target_girth - 2, 10_000_000)
    n_entries = base.ones
    rng = np.random.default_rng(seed)
    N = lift_size

    def report_for(x) -> LiftReport:
        qc = QcExponentMatrix(base, N, tuple(int(v) for v in x))
        return qc_girth(qc, target_girth - 2)

    if len(table.lengths) == 0:  # nothing shorter than the target can survive
        qc = QcExponentMatrix(base, N, (0,) * n_entries)
        return ExponentSearchResult(qc, True, report_for(np.zeros(n_entries)), 0, 0)

    weights = 1 << ((target_girth - table.lengths).astype(np.int64))
    participation = np.abs(table.coeffs).astype(np.int64)

    best_x = np.zeros(n_entries, dtype=np.int64)
    best_score = None
    steps = 0
    restarts = 0
    values = np.arange(N, dtype=np.int64)

    while steps < budget:
        x = (np.zeros(n_entries, dtype=np.int64) if restarts == 0
             else rng.integers(0, N, n_entries))
        sums = table.sums(x)
        stall = 0
        while steps < budget:
            steps += 1
            violated = (sums % N) == 0
            score = int(weights[violated].sum())
            if best_score is None or score < best_score:
                best_score = score
                best_x = x.copy()
            if score == 0:
                qc = QcExponentMatrix(base, N, tuple(int(v) for v in x))
                return ExponentSearchResult(qc, True, report_for(x), restarts, steps)
            # most-constrained entry among the violated walks
            load = participation[violated].sum(axis=0)
            j = int(np.argmax(load))
            col = table.coeffs[:, j].astype(np.int64)
            residual = sums - col * x[j]
            trial = (residual[:, None] + np.outer(col, values)) % N == 0
            cost = weights @ trial
            candidates = np.flatnonzero(cost == cost.min())
            new_v = int(rng.choice(candidates))
            if cost[new_v] >= score:
                stall += 1
                if stall >= 8:
                    break
            else:
                stall = 0
            sums = residual + col * new_v
            x[j] = new_v
        restarts += 1

    qc = QcExponentMatrix(base, N, tuple(int(v) for v in best_x))
    return ExponentSearchResult(qc, False, report_for(best_x), restarts, steps)
