"""Offset-vector search: the girth-12 sum condition, minimal board size, bounds.

A vector is girth-12 admissible iff for all index pairs {k1,k2} disjoint from
{k3,k4} (repeats inside a pair allowed) the pair sums differ mod m:
(v_k1 + v_k2) - (v_k3 + v_k4) is never 0 or +-m. The DFS grows vectors with
v_1 = 1, pruning candidates with incrementally maintained forbidden-residue
bitmasks, and only moves to m+2 after exhausting the whole tree at m, so the
returned board size is minimal.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass

from .board import DiagonalVector
from .errors import BudgetExceeded, SearchSpaceTooLarge


@dataclass(frozen=True)
class SearchResult:
    m: int
    vector: DiagonalVector
    nodes_expanded: int
    elapsed_s: float

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "v": list(self.vector.offsets),
            "nodes_expanded": self.nodes_expanded,
            "elapsed_s": self.elapsed_s,
        }


def girth12_condition_holds(vec: DiagonalVector) -> bool:
    """True iff all disjoint pair sums are distinct mod m.

    Equivalent to Tanner girth 12 of the built matrix for even m >= 14; for
    smaller boards or odd m the predicate is still computed but carries no
    girth guarantee.
    """
    v = vec.offsets
    m = vec.m
    t = len(v)
    for k1 in range(t):
        for k2 in range(k1, t):
            s12 = v[k1] + v[k2]
            for k3 in range(t):
                if k3 == k1 or k3 == k2:
                    continue
                for k4 in range(k3, t):
                    if k4 == k1 or k4 == k2:
                        continue
                    if s12 - (v[k3] + v[k4]) in (0, m, -m):
                        return False
    return True


def gallager_min_length(t: int) -> int:
    """Minimum block length of a girth-12 cycle code with row weight t.

    Closed form t*(t^2 - t + 1); t/2 times the degree-t Moore bound
    2*(1 + (t-1) + (t-1)^2) on check nodes.
    """
    if t < 3:
        raise ValueError("t must be at least 3")
    return t * (t * t - t + 1)


def _new_bans(m: int, old: list[int], vk: int) -> int:
    """Residue bitmask newly forbidden once vk joins the vector.

    Bans v == a+b-c (mod m) over element triples involving vk, and the two
    odd roots of 2v == a+vk (mod m). Together with the bans accumulated for
    earlier elements this is exactly the sum condition restricted to the
    current prefix.
    """
    mask = 0
    els = old + [vk]
    half = m // 2
    for ai, a in enumerate(els):
        for b in els[ai:]:
            mask |= 1 << ((a + b - vk) % m)
    for b in els:
        for c in old:
            mask |= 1 << ((vk + b - c) % m)
    for a in els:
        s = a + vk  # even: both elements odd
        mask |= 1 << ((s // 2) % m)
        mask |= 1 << ((s // 2 + half) % m)
    return mask


def _find_vector_at(m: int, t: int, rng: random.Random | None,
                    nodes_used: int, node_budget: int | None):
    """Exhaustive DFS at fixed even m. Returns (vector or None, nodes_used)."""
    odd_mask = sum(1 << x for x in range(1, m, 2))
    allowed0 = odd_mask & ~_new_bans(m, [], 1)
    found: list[tuple[int, ...]] = []

    def candidates(allowed: int, lo: int) -> list[int]:
        out = []
        cand = allowed >> lo
        v = lo
        while cand:
            if cand & 1:
                out.append(v)
            cand >>= 1
            v += 1
        if rng is not None:
            rng.shuffle(out)
        return out

    def rec(vs: list[int], allowed: int) -> bool:
        nonlocal nodes_used
        if len(vs) == t:
            found.append(tuple(vs))
            return True
        for v in candidates(allowed, vs[-1] + 2):
            nodes_used += 1
            if node_budget is not None and nodes_used > node_budget:
                raise BudgetExceeded(
                    f"node budget {node_budget} exhausted at m={m}")
            vs.append(v)
            if rec(vs, allowed & ~_new_bans(m, vs[:-1], v)):
                return True
            vs.pop()
        return False

    rec([1], allowed0)
    return (found[0] if found else None), nodes_used


def search_min_m(t: int, m_start: int = 14, seed: int | None = None,
                 node_budget: int | None = None) -> SearchResult:
    """Smallest even m >= m_start admitting a valid vector, with one witness.

    Fixing v_1 = 1 loses nothing: translating all offsets by an even constant
    preserves every pair-sum difference, so any valid vector can be shifted to
    contain 1. Each board is fully exhausted before moving to m+2, hence
    minimality. With no seed, candidates are tried ascending and the result is
    the lexicographically first vector; a seed randomizes the choice order
    (the minimal m is unaffected).
    """
    if t < 3:
        raise ValueError("t must be at least 3")
    if m_start < 14 or m_start % 2 != 0:
        raise ValueError("m_start must be an even integer >= 14")
    rng = random.Random(seed) if seed is not None else None
    start = time.perf_counter()
    nodes = 0
    m = m_start
    while True:
        vec, nodes = _find_vector_at(m, t, rng, nodes, node_budget)
        if vec is not None:
            result = SearchResult(
                m=m,
                vector=DiagonalVector(m, vec),
                nodes_expanded=nodes,
                elapsed_s=time.perf_counter() - start,
            )
            assert girth12_condition_holds(result.vector)
            return result
        m += 2


def enumerate_all_vectors(m: int, t: int, limit: int | None = None,
                          max_space: int = 5_000_000) -> list[DiagonalVector]:
    """All valid vectors with v_1 = 1 at board size m, by brute force.

    Independent of the DFS: every t-subset of odd offsets starting at 1 is
    tested against the sum condition directly. An empty result certifies that
    no valid vector exists at this m. Raises SearchSpaceTooLarge when the
    number of candidate subsets exceeds `max_space`.
    """
    if m % 2 != 0:
        raise ValueError("m must be even")
    if t < 1:
        raise ValueError("t must be positive")
    odds = range(3, m, 2)
    space = math.comb(len(odds), t - 1)
    if space > max_space:
        raise SearchSpaceTooLarge(
            f"{space} candidate vectors exceed the ceiling {max_space}")
    out: list[DiagonalVector] = []
    for rest in itertools.combinations(odds, t - 1):
        vec = DiagonalVector(m, (1,) + rest)
        if girth12_condition_holds(vec):
            out.append(vec)
            if limit is not None and len(out) >= limit:
                break
    return out
