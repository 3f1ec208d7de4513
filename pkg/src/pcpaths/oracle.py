"""Exact search for longest properly coloured (p.c.) paths and cycles.

Everything else in the package is checked against these routines, so they
favour obviously-admissible pruning over cleverness:

* paths: DFS from every start vertex over states (vertex, incoming colour,
  visited set); a branch is cut when the path length plus the number of
  unvisited vertices still reachable cannot beat the incumbent.
* cycles: every cycle lies inside one biconnected block, so the search runs
  block by block, rooting each cycle at its smallest vertex.

Witness ties are broken towards the lexicographically smallest tuple. DFS
visits tuples in lexicographic order and the incumbent only changes on a
strict improvement, so the first optimum found is the smallest one.

``budget`` counts DFS node expansions. When it runs out the best witness so
far is returned with ``exact=False``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from .graph import EdgeColouredGraph, EmptyGraphError, induced_subgraph


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an oracle run.

    ``witness`` is a vertex tuple (cycles repeat the first vertex at the end)
    or ``None`` when nothing exists. ``exact`` is False if the budget ran out.
    """

    witness: tuple[int, ...] | None
    exact: bool
    expansions: int

    @property
    def length(self) -> int | None:
        """Number of edges in the witness, or None."""
        return None if self.witness is None else len(self.witness) - 1


class _BudgetExhausted(Exception):
    pass


class _Found(Exception):
    pass


class _Search:
    def __init__(self, g: EdgeColouredGraph, budget: int | None):
        self.g = g
        self.adj = [sorted(g.neighbours(v).items()) for v in g.vertices()]
        self.nbr_mask = [sum(1 << w for w in g.neighbours(v)) for v in g.vertices()]
        self.budget = budget
        self.expansions = 0

    def tick(self) -> None:
        self.expansions += 1
        if self.budget is not None and self.expansions > self.budget:
            raise _BudgetExhausted

    def reach(self, v: int, allowed: int) -> int:
        """Number of vertices in ``allowed`` reachable from ``v`` through ``allowed``."""
        frontier = self.nbr_mask[v] & allowed
        seen = frontier
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = self.nbr_mask[low.bit_length() - 1] & allowed & ~seen
            seen |= new
            frontier |= new
        return seen.bit_count()


def _popcount(x: int) -> int:
    return x.bit_count()


def longest_pc_path(g: EdgeColouredGraph, budget: int | None = None) -> SearchResult:
    """Longest p.c. path; a single vertex (length 0) when ``g`` has no edges."""
    if g.n == 0:
        raise EmptyGraphError("no vertices")
    s = _Search(g, budget)
    full = (1 << g.n) - 1
    best: list[tuple[int, ...]] = [(0,)]
    path: list[int] = []
    # a path cannot leave the connected component of its start
    comp_size = {}
    for comp in nx.connected_components(_to_nx(g)):
        for v in comp:
            comp_size[v] = len(comp)
    cap = max(comp_size.values()) - 1

    def dfs(v: int, incoming: int | None, visited: int) -> None:
        s.tick()
        if len(path) - 1 > len(best[0]) - 1:
            best[0] = tuple(path)
            if len(best[0]) - 1 == cap:
                raise _Found
        remaining = s.reach(v, full & ~visited)
        if len(path) - 1 + remaining <= len(best[0]) - 1:
            return
        for w, c in s.adj[v]:
            if c == incoming or visited >> w & 1:
                continue
            path.append(w)
            dfs(w, c, visited | 1 << w)
            path.pop()

    exact = True
    try:
        for start in g.vertices():
            if comp_size[start] - 1 <= len(best[0]) - 1:
                continue
            path.append(start)
            dfs(start, None, 1 << start)
            path.pop()
    except _Found:
        pass
    except _BudgetExhausted:
        exact = False
    return SearchResult(best[0], exact, s.expansions)


def _to_nx(g: EdgeColouredGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from((u, v) for u, v, _ in g.edges())
    return h


def cycle_blocks(g: EdgeColouredGraph) -> list[list[int]]:
    """Vertex sets of the biconnected blocks that can hold a cycle (size >= 3)."""
    blocks = [sorted(b) for b in nx.biconnected_components(_to_nx(g)) if len(b) >= 3]
    return sorted(blocks)


def _cycle_search(
    g: EdgeColouredGraph,
    s: _Search,
    min_len: int,
    first_only: bool,
) -> tuple[int, ...] | None:
    """Longest p.c. cycle of ``g`` with length >= ``min_len`` (or the first such)."""
    n = g.n
    best: list[tuple[int, ...] | None] = [None]
    path: list[int] = []

    def best_len() -> int:
        return min_len - 1 if best[0] is None else len(best[0]) - 1

    def dfs(v: int, incoming: int, visited: int, allowed: int, root: int, first_colour: int) -> None:
        s.tick()
        # close the cycle back to the root
        if len(path) >= 3 and v in g.neighbours(root):
            c = g.colour(v, root)
            if c != incoming and c != first_colour and len(path) > best_len():
                best[0] = tuple(path) + (root,)
                if first_only or len(path) == _popcount(allowed):
                    raise _Found
        if len(path) + s.reach(v, allowed & ~visited) <= best_len():
            return
        for w, c in s.adj[v]:
            if c == incoming or visited >> w & 1 or not allowed >> w & 1:
                continue
            path.append(w)
            dfs(w, c, visited | 1 << w, allowed, root, first_colour)
            path.pop()

    for root in range(n):
        allowed = ((1 << n) - 1) & ~((1 << root) - 1)
        if _popcount(allowed) <= best_len():
            break
        path.append(root)
        try:
            for w, c in s.adj[root]:
                if w < root:
                    continue
                path.append(w)
                dfs(w, c, 1 << root | 1 << w, allowed, root, c)
                path.pop()
        except _Found:
            # first hit wanted, or a cycle through every remaining vertex
            return best[0]
        except _BudgetExhausted as exc:
            exc.partial = best[0]
            raise
        path.pop()
    return best[0]


def _blockwise_cycles(
    g: EdgeColouredGraph, budget: int | None, min_len: int, first_only: bool
) -> SearchResult:
    total = 0
    best: tuple[int, ...] | None = None
    exact = True
    for block in cycle_blocks(g):
        if len(block) < min_len or (best is not None and len(block) < len(best) - 1):
            continue
        sub, relabel = induced_subgraph(g, block)
        back = {new: old for old, new in relabel.items()}
        left = None if budget is None else budget - total
        s = _Search(sub, left)
        try:
            floor = min_len if best is None else len(best) - 1
            found = _cycle_search(sub, s, floor, first_only)
        except _BudgetExhausted as exc:
            exact = False
            total += s.expansions
            found = getattr(exc, "partial", None)
            if found is not None:
                cand = tuple(back[v] for v in found)
                if best is None or len(cand) > len(best):
                    best = cand
            break
        total += s.expansions
        if found is not None:
            cand = tuple(back[v] for v in found)
            if best is None or len(cand) > len(best) or (len(cand) == len(best) and cand < best):
                best = cand
            if first_only:
                break
    return SearchResult(best, exact, total)


def longest_pc_cycle(g: EdgeColouredGraph, budget: int | None = None) -> SearchResult:
    """Longest p.c. cycle, witness ``(v1, ..., vl, v1)``; ``None`` if there is none."""
    return _blockwise_cycles(g, budget, 3, first_only=False)


def has_pc_cycle_of_length_at_least(
    g: EdgeColouredGraph, k: int, budget: int | None = None
) -> SearchResult:
    """First p.c. cycle of length >= ``k`` found, or ``None``.

    Truthiness lives in ``result.witness is not None``; an inexact run with no
    witness is not evidence of absence.
    """
    if k < 3:
        raise ValueError("cycles in a simple graph have length >= 3")
    return _blockwise_cycles(g, budget, k, first_only=True)


def has_pc_hamiltonian_cycle(g: EdgeColouredGraph, budget: int | None = None) -> SearchResult:
    if g.n < 3:
        return SearchResult(None, True, 0)
    return has_pc_cycle_of_length_at_least(g, g.n, budget)


# -- unpruned reference enumerators ---------------------------------------


def enumerate_pc_paths(g: EdgeColouredGraph) -> Iterator[tuple[int, ...]]:
    """Every p.c. path with at least one edge, once per direction."""

    def grow(path: list[int], incoming: int | None) -> Iterator[tuple[int, ...]]:
        v = path[-1]
        for w, c in g.neighbours(v).items():
            if c != incoming and w not in path:
                path.append(w)
                yield tuple(path)
                yield from grow(path, c)
                path.pop()

    for v in g.vertices():
        yield from grow([v], None)


def enumerate_pc_cycles(g: EdgeColouredGraph) -> Iterator[tuple[int, ...]]:
    """Every p.c. cycle, rooted at its smallest vertex, once per direction."""
    for p in enumerate_pc_paths(g):
        if len(p) >= 3 and p[0] == min(p) and g.has_edge(p[-1], p[0]):
            c = g.colour(p[-1], p[0])
            if c != g.colour(p[-2], p[-1]) and c != g.colour(p[0], p[1]):
                yield p + (p[0],)


def naive_longest_pc_path(g: EdgeColouredGraph) -> tuple[int, ...]:
    best: tuple[int, ...] = (0,)
    for p in enumerate_pc_paths(g):
        if len(p) > len(best) or (len(p) == len(best) and p < best):
            best = p
    return best


def naive_longest_pc_cycle(g: EdgeColouredGraph) -> tuple[int, ...] | None:
    best = None
    for c in enumerate_pc_cycles(g):
        if best is None or len(c) > len(best) or (len(c) == len(best) and c < best):
            best = c
    return best


def is_pc_path(g: EdgeColouredGraph, seq) -> bool:
    """True iff ``seq`` is a p.c. path of ``g`` (a single vertex counts)."""
    try:
        seq = tuple(seq)
    except TypeError:
        return False
    if not seq or len(set(seq)) != len(seq):
        return False
    if not all(isinstance(v, int) and 0 <= v < g.n for v in seq):
        return False
    prev = None
    for x, y in zip(seq, seq[1:]):
        if not g.has_edge(x, y):
            return False
        c = g.colour(x, y)
        if c == prev:
            return False
        prev = c
    return True


def is_pc_cycle(g: EdgeColouredGraph, seq) -> bool:
    """True iff ``seq = (v1, ..., vl, v1)`` with l >= 3 is a p.c. cycle of ``g``."""
    try:
        seq = tuple(seq)
    except TypeError:
        return False
    if len(seq) < 4 or seq[0] != seq[-1]:
        return False
    body = seq[:-1]
    if not is_pc_path(g, body) or not g.has_edge(body[-1], body[0]):
        return False
    c = g.colour(body[-1], body[0])
    return c != g.colour(body[-2], body[-1]) and c != g.colour(body[0], body[1])


def is_rainbow(g: EdgeColouredGraph, vertices) -> bool:
    """True iff all edges of G[U] have pairwise distinct colours."""
    vs = set(vertices)
    seen = []
    for u, v, c in g.edges():
        if u in vs and v in vs:
            seen.append(c)
    return len(seen) == len(set(seen))
