"""Edge-coloured simple graphs and colour-degree arithmetic.

Vertices are ``0..n-1``. Each edge carries one non-negative integer colour.
Colour ids are opaque: they need not be contiguous, and the number of
colours is derived from the edges rather than stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping


class GraphError(ValueError):
    """Base class for malformed graph input."""


class LoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class EdgeMissingError(GraphError):
    pass


class InvalidPathError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


class EdgeColouredGraph:
    """Simple undirected graph with one integer colour per edge.

    The graph is mutable only through :meth:`add_edge` while it is being
    built; every other operation in this package treats it as read-only and
    returns fresh graphs.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise VertexRangeError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self._adj: list[dict[int, int]] = [dict() for _ in range(n)]
        for u, v, c in edges:
            self.add_edge(u, v, c)

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise VertexRangeError(f"vertex {v!r} out of range 0..{self.n - 1}")

    def add_edge(self, u: int, v: int, colour: int) -> "EdgeColouredGraph":
        """Insert edge ``uv`` with ``colour`` in place and return ``self``."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        if v in self._adj[u]:
            raise DuplicateEdgeError(f"duplicate edge ({u},{v})")
        if not isinstance(colour, int) or colour < 0:
            raise GraphError(f"colour must be a non-negative integer, got {colour!r}")
        self._adj[u][v] = colour
        self._adj[v][u] = colour
        return self

    def copy(self) -> "EdgeColouredGraph":
        g = EdgeColouredGraph(self.n)
        g._adj = [dict(a) for a in self._adj]
        return g

    # -- queries --------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    def colour(self, u: int, v: int) -> int:
        try:
            return self._adj[u][v]
        except (IndexError, KeyError):
            raise EdgeMissingError(f"no edge ({u},{v})") from None

    def neighbours(self, v: int) -> Mapping[int, int]:
        """Map neighbour -> colour of the joining edge."""
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbours(v))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, colour)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield u, v, self._adj[u][v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def colours(self) -> set[int]:
        return {c for a in self._adj for c in a.values()}

    def colour_class(self, colour: int) -> "EdgeColouredGraph":
        """The spanning subgraph formed by the edges of one colour."""
        return EdgeColouredGraph(self.n, ((u, v, c) for u, v, c in self.edges() if c == colour))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColouredGraph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"EdgeColouredGraph(n={self.n}, m={self.m})"


def add_edge(g: EdgeColouredGraph, u: int, v: int, colour: int) -> EdgeColouredGraph:
    """Return a copy of ``g`` with edge ``uv`` added."""
    return g.copy().add_edge(u, v, colour)


def colour_degree(g: EdgeColouredGraph, v: int) -> int:
    return len(set(g.neighbours(v).values()))


def min_colour_degree(g: EdgeColouredGraph) -> int:
    if g.n == 0:
        raise EmptyGraphError("minimum colour degree of the empty graph is undefined")
    return min(colour_degree(g, v) for v in g.vertices())


def max_degree(g: EdgeColouredGraph) -> int:
    return max((g.degree(v) for v in g.vertices()), default=0)


@dataclass(frozen=True)
class ColourNeighbourhoodChoice:
    """One representative neighbour per colour seen at ``vertex``."""

    vertex: int
    representatives: Mapping[int, int]
    forced: frozenset[int] = field(default_factory=frozenset)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self.representatives.values())

    def is_valid(self, g: EdgeColouredGraph) -> bool:
        nbrs = g.neighbours(self.vertex)
        if set(self.representatives) != set(nbrs.values()):
            return False
        for c, w in self.representatives.items():
            if nbrs.get(w) != c:
                return False
        return self.forced <= self.members


def colour_neighbourhood(
    g: EdgeColouredGraph, v: int, forced: Iterable[int] = ()
) -> ColourNeighbourhoodChoice:
    """Build N^c(v): forced members first, then the smallest vertex per colour."""
    nbrs = g.neighbours(v)
    forced = frozenset(forced)
    reps: dict[int, int] = {}
    for w in sorted(forced):
        if w not in nbrs:
            raise EdgeMissingError(f"forced vertex {w} is not adjacent to {v}")
        c = nbrs[w]
        if c in reps:
            raise GraphError(f"forced vertices {reps[c]} and {w} share colour {c} at {v}")
        reps[c] = w
    for w in sorted(nbrs):
        reps.setdefault(nbrs[w], w)
    return ColourNeighbourhoodChoice(v, dict(sorted(reps.items())), forced)


def all_colour_neighbourhoods(
    g: EdgeColouredGraph, v: int, forced: Iterable[int] = ()
) -> Iterator[ColourNeighbourhoodChoice]:
    """Enumerate every valid N^c(v) containing ``forced`` (exponential; for tests)."""
    from itertools import product

    nbrs = g.neighbours(v)
    forced = frozenset(forced)
    by_colour: dict[int, list[int]] = {}
    for w in sorted(nbrs):
        by_colour.setdefault(nbrs[w], []).append(w)
    colours = sorted(by_colour)
    for pick in product(*(by_colour[c] for c in colours)):
        if forced <= set(pick):
            yield ColourNeighbourhoodChoice(v, dict(zip(colours, pick)), forced)


def check_pc_path(g: EdgeColouredGraph, path: tuple[int, ...]) -> None:
    """Raise :class:`InvalidPathError` unless ``path`` is a p.c. path of ``g``."""
    if len(path) == 0:
        raise InvalidPathError("empty path")
    if len(set(path)) != len(path):
        raise InvalidPathError(f"repeated vertex in {path}")
    for v in path:
        g._check_vertex(v)
    prev = None
    for x, y in zip(path, path[1:]):
        if not g.has_edge(x, y):
            raise InvalidPathError(f"({x},{y}) is not an edge")
        c = g.colour(x, y)
        if c == prev:
            raise InvalidPathError(f"consecutive edges at {x} share colour {c}")
        prev = c


def eligible_endpoint_set(g: EdgeColouredGraph, path: tuple[int, ...], end: str) -> set[int]:
    """Vertices that belong to at least one valid N^c(e; P) for endpoint ``e``.

    ``end`` is ``"first"`` or ``"last"``. Any colour neighbourhood of an
    endpoint must keep its path neighbour ``p``, so the candidates are ``p``
    itself and every neighbour whose colour differs from ``c(e, p)``.
    """
    check_pc_path(g, path)
    if end == "first":
        e, p = path[0], (path[1] if len(path) > 1 else None)
    elif end == "last":
        e, p = path[-1], (path[-2] if len(path) > 1 else None)
    else:
        raise ValueError(f"end must be 'first' or 'last', got {end!r}")
    nbrs = g.neighbours(e)
    if p is None:
        return set(nbrs)
    blocked = nbrs[p]
    return {w for w, c in nbrs.items() if w == p or c != blocked}


def induced_subgraph(
    g: EdgeColouredGraph, vertices: Iterable[int]
) -> tuple[EdgeColouredGraph, dict[int, int]]:
    """G[U] relabelled to ``0..|U|-1`` in increasing order of old label.

    Returns the subgraph and the map old label -> new label.
    """
    keep = sorted(set(vertices))
    for v in keep:
        g._check_vertex(v)
    relabel = {v: i for i, v in enumerate(keep)}
    h = EdgeColouredGraph(len(keep))
    for u in keep:
        for w, c in g._adj[u].items():
            if u < w and w in relabel:
                h.add_edge(relabel[u], relabel[w], c)
    return h, relabel


def remove_vertex(g: EdgeColouredGraph, v: int) -> tuple[EdgeColouredGraph, dict[int, int]]:
    g._check_vertex(v)
    return induced_subgraph(g, (u for u in g.vertices() if u != v))


def remove_edge(g: EdgeColouredGraph, u: int, v: int) -> EdgeColouredGraph:
    g._check_vertex(u)
    g._check_vertex(v)
    if not g.has_edge(u, v):
        raise EdgeMissingError(f"no edge ({u},{v})")
    h = g.copy()
    del h._adj[u][v]
    del h._adj[v][u]
    return h


def disjoint_union(*graphs: EdgeColouredGraph) -> EdgeColouredGraph:
    """Place graphs side by side, keeping their colour ids."""
    out = EdgeColouredGraph(sum(h.n for h in graphs))
    offset = 0
    for h in graphs:
        for u, v, c in h.edges():
            out.add_edge(u + offset, v + offset, c)
        offset += h.n
    return out


def is_connected(g: EdgeColouredGraph) -> bool:
    if g.n == 0:
        return True
    return len(component_of(g, 0)) == g.n


def component_of(g: EdgeColouredGraph, start: int, removed: frozenset[int] = frozenset()) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g._adj[x]:
            if y not in seen and y not in removed:
                seen.add(y)
                stack.append(y)
    return seen


def components(g: EdgeColouredGraph, removed: Iterable[int] = ()) -> list[set[int]]:
    """Connected components of ``g - removed``, ordered by smallest vertex."""
    removed = frozenset(removed)
    seen: set[int] = set()
    out = []
    for v in g.vertices():
        if v in removed or v in seen:
            continue
        comp = component_of(g, v, removed)
        seen |= comp
        out.append(comp)
    return out
