"""Exact Tanner-graph girth and short-cycle census for binary matrices.

Nodes are addressed in a unified index space: checks are 0..rows-1 and
variables are rows..rows+cols-1. All functions are pure and exact (BFS from
every check node, depth-limited by the running minimum).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .board import DiagonalVector, coloring
from .gf2 import BinaryMatrix

MAX_CENSUS_LEN = 20


@dataclass(frozen=True)
class TannerGraph:
    """Bipartite adjacency of a binary matrix, both directions."""

    check_adj: tuple[tuple[int, ...], ...]  # check -> variable indices
    var_adj: tuple[tuple[int, ...], ...]    # variable -> check indices

    @classmethod
    def from_matrix(cls, M: BinaryMatrix) -> "TannerGraph":
        return cls(M.row_support, M.col_support)

    @property
    def check_count(self) -> int:
        return len(self.check_adj)

    @property
    def var_count(self) -> int:
        return len(self.var_adj)

    def unified_adjacency(self) -> list[list[int]]:
        m = self.check_count
        adj = [[m + v for v in vs] for vs in self.check_adj]
        adj += [list(cs) for cs in self.var_adj]
        return adj


@dataclass(frozen=True)
class GirthReport:
    """girth is None for a forest; witness nodes use the unified index space."""

    girth: int | None
    witness: tuple[int, ...] | None = None
    short_cycle_counts: dict[int, int] = field(default_factory=dict)

    @property
    def is_acyclic(self) -> bool:
        return self.girth is None

    def to_json_dict(self) -> dict:
        return {
            "girth": self.girth,
            "witness": list(self.witness) if self.witness is not None else None,
            "short_cycle_counts": {str(k): v for k, v in sorted(self.short_cycle_counts.items())},
        }


def _canonical_cycle(nodes: list[int], check_count: int) -> tuple[int, ...]:
    """Lexicographically smallest rotation/reflection that starts at a check node."""
    k = len(nodes)
    best = None
    for start in range(k):
        if nodes[start] >= check_count:
            continue
        for step in (1, -1):
            cand = tuple(nodes[(start + step * i) % k] for i in range(k))
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def _extract_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> list[int]:
    """Simple cycle through the non-tree edge (u, w): trim both paths to their LCA."""
    pu, pw = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        pu.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        pw.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        pu.append(a)
        pw.append(b)
    # pu ends at the LCA, pw ends one before it (drop the duplicated LCA)
    return pu + pw[-2::-1]


def girth(M: BinaryMatrix, *, count_upto: int | None = None,
          roots=None) -> GirthReport:
    """Exact girth of TG(M) via BFS from every check node.

    `roots` restricts the BFS roots (exact only if every shortest cycle meets
    one of them; the default, all checks, is always exact). When `count_upto`
    is given the short-cycle census is included in the report.
    """
    graph = TannerGraph.from_matrix(M)
    m = graph.check_count
    adj = graph.unified_adjacency()
    n_nodes = len(adj)
    if roots is None:
        roots = range(m)

    best: int | None = None
    best_witness: tuple[int, ...] | None = None
    depth = [0] * n_nodes
    parent = [-1] * n_nodes
    stamp = [0] * n_nodes
    run = 0
    for root in roots:
        run += 1
        stamp[root] = run
        depth[root] = 0
        parent[root] = -1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = depth[u]
            if best is not None and 2 * du > best:
                break
            for w in adj[u]:
                if stamp[w] != run:
                    stamp[w] = run
                    depth[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cand = du + depth[w] + 1
                    if best is None or cand <= best:
                        cycle = _extract_cycle(u, w, parent, depth)
                        length = len(cycle)
                        if best is None or length < best:
                            best = length
                            best_witness = _canonical_cycle(cycle, m)
                        elif length == best:
                            wit = _canonical_cycle(cycle, m)
                            if best_witness is None or wit < best_witness:
                                best_witness = wit
    counts = {}
    if count_upto is not None:
        counts = count_cycles_upto(M, count_upto)
    return GirthReport(best, best_witness, counts)


def count_cycles_upto(M: BinaryMatrix, max_len: int) -> dict[int, int]:
    """Exact number of simple cycles of each length <= max_len in TG(M).

    Cycles are anchored at their minimum node and deduplicated by direction;
    max_len must be even and at most MAX_CENSUS_LEN.
    """
    if max_len % 2 != 0:
        raise ValueError("max_len must be even")
    if max_len > MAX_CENSUS_LEN:
        raise ValueError(f"max_len may not exceed {MAX_CENSUS_LEN}")
    adj = TannerGraph.from_matrix(M).unified_adjacency()
    counts: dict[int, int] = {}
    visited = [False] * len(adj)

    def dfs(root: int, u: int, edges: int) -> None:
        for w in adj[u]:
            if w == root and edges >= 3:
                length = edges + 1
                counts[length] = counts.get(length, 0) + 1
            elif w > root and not visited[w] and edges + 1 < max_len:
                visited[w] = True
                dfs(root, w, edges + 1)
                visited[w] = False

    for root in range(len(adj)):
        dfs(root, root, 0)
    return {length: c // 2 for length, c in sorted(counts.items())}


def girth_structured(vec: DiagonalVector) -> GirthReport:
    """Fast exact girth for structured colorings (even m).

    TG(H) of a coloring is the subdivision of the multigraph on checks whose
    edges are the pairs, so its girth is twice the multigraph girth (parallel
    edges meaning Tanner girth 4). Odd m falls back to the generic BFS.
    """
    if vec.m % 2 == 1:
        from .board import build_parity_check
        return girth(build_parity_check(vec))

    pairs = coloring(vec)
    m = vec.m
    # parallel pairs would collapse to a Tanner 4-cycle
    col_of: dict[tuple[int, int], int] = {}
    for c, pr in enumerate(pairs.pairs):
        if pr in col_of:
            first = col_of[pr]
            witness = _canonical_cycle([pr[0], m + first, pr[1], m + c], m)
            return GirthReport(4, witness)
        col_of[pr] = c

    adj: list[list[tuple[int, int]]] = [[] for _ in range(m)]  # (neighbor, column)
    for c, (i, j) in enumerate(pairs.pairs):
        adj[i].append((j, c))
        adj[j].append((i, c))

    best: int | None = None
    best_cycle: list[int] | None = None
    depth = [0] * m
    parent = [-1] * m
    stamp = [0] * m
    run = 0
    for root in range(m):
        run += 1
        stamp[root] = run
        depth[root] = 0
        parent[root] = -1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = depth[u]
            if best is not None and 2 * du > best:
                break
            for (w, _) in adj[u]:
                if stamp[w] != run:
                    stamp[w] = run
                    depth[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cand = du + depth[w] + 1
                    if best is None or cand <= best:
                        cycle = _extract_cycle(u, w, parent, depth)
                        if best is None or len(cycle) < best:
                            best = len(cycle)
                            best_cycle = cycle
    if best is None:
        return GirthReport(None, None)
    # interleave variable nodes to produce a Tanner witness
    nodes: list[int] = []
    k = len(best_cycle)
    for idx, u in enumerate(best_cycle):
        v = best_cycle[(idx + 1) % k]
        pr = (u, v) if u < v else (v, u)
        nodes.append(u)
        nodes.append(m + col_of[pr])
    return GirthReport(2 * best, _canonical_cycle(nodes, m))
