"""Rotation-extension machinery for p.c. paths.

Paths are vertex tuples. Operations that talk about *positions* use the
1-based convention of a path written ``(1, 2, ..., l)``: position ``i`` is
``path[i - 1]``.

* ``f_i`` keeps the last vertex fixed and pivots at position i:
  ``(i-1, ..., 1, i, ..., l)``; it needs the edge between the first vertex
  and position i.
* ``g_j`` keeps the first vertex fixed and pivots at position j:
  ``(1, ..., j, l, ..., j+1)``; it needs the edge between position j and
  the last vertex.

``f_positional`` / ``g_positional`` apply the bare permutations with no
graph in sight.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graph import (
    EdgeColouredGraph,
    GraphError,
    InvalidPathError,
    check_pc_path,
    eligible_endpoint_set,
    induced_subgraph,
    min_colour_degree,
)
from .oracle import (
    enumerate_pc_cycles,
    enumerate_pc_paths,
    has_pc_hamiltonian_cycle,
    is_pc_cycle,
    is_pc_path,
    longest_pc_cycle,
)

Path = tuple[int, ...]

DEFAULT_CAP = 100_000


class RotationError(GraphError):
    """A rotation is undefined; ``clause`` names the failed condition."""

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        super().__init__(f"{clause}: {detail}" if detail else clause)


class HypothesisViolated(GraphError):
    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        super().__init__(f"hypothesis violated ({clause}){': ' + detail if detail else ''}")


class CrossingError(GraphError):
    """Raised when a path lacks the crossing / maximality a procedure needs."""


class ContractViolation(AssertionError):
    """The decomposition contract failed; this would refute the underlying lemma."""


# -- positional algebra ---------------------------------------------------


def f_positional(seq: Iterable, i: int) -> tuple:
    seq = tuple(seq)
    if not 2 <= i <= len(seq):
        raise RotationError("position out of range", f"f_{i} on a {len(seq)}-tuple")
    return seq[: i - 1][::-1] + seq[i - 1 :]


def g_positional(seq: Iterable, j: int) -> tuple:
    seq = tuple(seq)
    if not 1 <= j <= len(seq) - 1:
        raise RotationError("position out of range", f"g_{j} on a {len(seq)}-tuple")
    return seq[:j] + seq[j:][::-1]


def reflect(path: Iterable) -> tuple:
    return tuple(path)[::-1]


# -- validated rotations --------------------------------------------------


def _try_f(g: EdgeColouredGraph, p: Path, i: int) -> Path | None:
    first, pivot = p[0], p[i - 1]
    c = g.neighbours(first).get(pivot)
    if c is None or i == 2:
        return None
    if c == g.colour(first, p[1]):
        return None
    if i < len(p) and c == g.colour(pivot, p[i]):
        return None
    return p[: i - 1][::-1] + p[i - 1 :]


def _try_g(g: EdgeColouredGraph, p: Path, j: int) -> Path | None:
    last, pivot = p[-1], p[j - 1]
    c = g.neighbours(last).get(pivot)
    if c is None or j == len(p) - 1:
        return None
    if c == g.colour(last, p[-2]):
        return None
    if j > 1 and c == g.colour(pivot, p[j - 2]):
        return None
    return p[:j] + p[j:][::-1]


def rotate_f(g: EdgeColouredGraph, path: Iterable[int], i: int) -> Path:
    """Validated ``f_i``: rotation pivoting at position i, last vertex fixed."""
    p = tuple(path)
    check_pc_path(g, p)
    l = len(p)
    if not 2 <= i <= l:
        raise RotationError("position out of range", f"f_{i} needs 2 <= i <= {l}")
    first, pivot = p[0], p[i - 1]
    if not g.has_edge(first, pivot):
        raise RotationError("edge missing", f"({first},{pivot})")
    c = g.colour(first, pivot)
    if c == g.colour(first, p[1]):
        raise RotationError("colour clash", f"c({first},{p[1]}) = c({first},{pivot}) = {c}")
    if i < l and c == g.colour(pivot, p[i]):
        raise RotationError("colour clash", f"c({first},{pivot}) = c({pivot},{p[i]}) = {c}")
    out = p[: i - 1][::-1] + p[i - 1 :]
    assert is_pc_path(g, out)
    return out


def rotate_g(g: EdgeColouredGraph, path: Iterable[int], j: int) -> Path:
    """Validated ``g_j``: rotation pivoting at position j, first vertex fixed."""
    p = tuple(path)
    check_pc_path(g, p)
    l = len(p)
    if not 1 <= j <= l - 1:
        raise RotationError("position out of range", f"g_{j} needs 1 <= j <= {l - 1}")
    last, pivot = p[-1], p[j - 1]
    if not g.has_edge(last, pivot):
        raise RotationError("edge missing", f"({pivot},{last})")
    c = g.colour(last, pivot)
    if c == g.colour(last, p[-2]):
        raise RotationError("colour clash", f"c({last},{p[-2]}) = c({pivot},{last}) = {c}")
    if j > 1 and c == g.colour(pivot, p[j - 2]):
        raise RotationError("colour clash", f"c({p[j - 2]},{pivot}) = c({pivot},{last}) = {c}")
    out = p[:j] + p[j:][::-1]
    assert is_pc_path(g, out)
    return out


def rotations(g: EdgeColouredGraph, p: Path, which: str = "fg") -> Iterator[Path]:
    """All defined ``f_i`` (if 'f' in which) and ``g_j`` (if 'g' in which) of ``p``."""
    l = len(p)
    if l < 3:
        return
    if "f" in which:
        for i in range(3, l + 1):
            q = _try_f(g, p, i)
            if q is not None:
                yield q
    if "g" in which:
        for j in range(1, l - 1):
            q = _try_g(g, p, j)
            if q is not None:
                yield q


# -- crossings and extensibility -----------------------------------------


def endpoint_positions(g: EdgeColouredGraph, path: Path) -> tuple[list[int], list[int]]:
    """Sorted positions of the path lying in the eligible sets of first / last."""
    first = eligible_endpoint_set(g, path, "first")
    last = eligible_endpoint_set(g, path, "last")
    a_pos = [k for k, v in enumerate(path, 1) if v in first]
    b_pos = [k for k, v in enumerate(path, 1) if v in last]
    return a_pos, b_pos


def has_crossing(g: EdgeColouredGraph, path: Iterable[int]) -> tuple[int, int] | None:
    """Lexicographically smallest crossing ``(a, b)`` or ``None``.

    A crossing is a pair of positions ``a < b`` with ``path[a]`` eligible for
    the colour neighbourhood of the last vertex and ``path[b]`` eligible for
    that of the first vertex.
    """
    p = tuple(path)
    a_pos, b_pos = endpoint_positions(g, p)
    if not a_pos or not b_pos:
        return None
    a = b_pos[0]
    later = [b for b in a_pos if b > a]
    return (a, later[0]) if later else None


def extensions(g: EdgeColouredGraph, path: Iterable[int]) -> list[Path]:
    """Every p.c. path obtained by adding one new vertex at either end."""
    p = tuple(path)
    check_pc_path(g, p)
    on_path = set(p)
    out = []
    ends = [(p[-1], p[-2] if len(p) > 1 else None, False)]
    if len(p) > 1:
        ends.append((p[0], p[1], True))
    for e, nxt, front in ends:
        blocked = None if nxt is None else g.colour(e, nxt)
        for w, c in sorted(g.neighbours(e).items()):
            if w in on_path or c == blocked:
                continue
            out.append((w,) + p if front else p + (w,))
    if len(p) == 1:
        out.extend((w,) + p for w in sorted(g.neighbours(p[0])))
    return sorted(set(out))


def is_extensible(g: EdgeColouredGraph, path: Iterable[int]) -> bool:
    return bool(extensions(g, path))


# -- closures -------------------------------------------------------------


@dataclass(frozen=True)
class Closure:
    paths: frozenset[Path]
    complete: bool
    order: tuple[Path, ...] = field(default=(), compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.paths)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.paths

    def endpoints(self) -> tuple[set[int], set[int]]:
        """X and Y: first and last vertices over all members."""
        return {p[0] for p in self.paths}, {p[-1] for p in self.paths}


def closure_Rprime(g: EdgeColouredGraph, path: Iterable[int], cap: int = DEFAULT_CAP, which: str = "fg") -> Closure:
    """Paths reachable from ``path`` by rotations only (BFS, capped)."""
    start = tuple(path)
    check_pc_path(g, start)
    seen = {start}
    order = [start]
    queue = deque([start])
    complete = True
    while queue:
        p = queue.popleft()
        for q in rotations(g, p, which):
            if q in seen:
                continue
            if len(seen) >= cap:
                complete = False
                queue.clear()
                break
            seen.add(q)
            order.append(q)
            queue.append(q)
    return Closure(frozenset(seen), complete, tuple(order))


def closure_R(g: EdgeColouredGraph, path: Iterable[int], cap: int = DEFAULT_CAP) -> Closure:
    """Paths reachable by rotations and reflections.

    Each path is stored once as the smaller of itself and its reflection;
    ``cap`` bounds that canonical count.
    """
    start = tuple(path)
    check_pc_path(g, start)

    def canon(p: Path) -> Path:
        r = p[::-1]
        return p if p <= r else r

    seen = {canon(start)}
    order = [start]
    queue = deque([start])
    complete = True
    while queue and complete:
        p = queue.popleft()
        for orient in (p, p[::-1]):
            for q in rotations(g, orient):
                key = canon(q)
                if key in seen:
                    continue
                if len(seen) >= cap:
                    complete = False
                    break
                seen.add(key)
                order.append(q)
                queue.append(q)
            if not complete:
                break
    members = frozenset(seen | {p[::-1] for p in seen})
    return Closure(members, complete, tuple(order))


def two_phase_closure(g: EdgeColouredGraph, path: Iterable[int], first: str = "f", cap: int = DEFAULT_CAP) -> Closure:
    """Paths reachable by a run of one rotation family followed by the other.

    ``first='f'`` gives f-sequences then g-sequences; ``'g'`` the reverse.
    """
    second = "g" if first == "f" else "f"
    phase1 = closure_Rprime(g, path, cap, which=first)
    out: set[Path] = set()
    complete = phase1.complete
    for p in phase1.order:
        phase2 = closure_Rprime(g, p, cap, which=second)
        complete &= phase2.complete
        out |= phase2.paths
    return Closure(frozenset(out), complete)


@dataclass(frozen=True)
class MaximalPath:
    path: Path
    certified: bool


def extend_to_maximal(g: EdgeColouredGraph, path: Iterable[int], cap: int = DEFAULT_CAP) -> MaximalPath:
    """Grow ``path`` until no member of its closure is extensible.

    Each round explores R(P); the first extensible member found is extended
    by its smallest extension. ``certified`` is True only if the final
    closure was enumerated completely.
    """
    p = tuple(path)
    check_pc_path(g, p)
    while True:
        closure = closure_R(g, p, cap)
        grown = None
        for q in closure.order:
            for orient in (q, q[::-1]):
                ext = extensions(g, orient)
                if ext:
                    grown = ext[0]
                    break
            if grown:
                break
        if grown is None:
            return MaximalPath(p, closure.complete)
        p = grown


def is_maximal(g: EdgeColouredGraph, path: Iterable[int], cap: int = DEFAULT_CAP) -> bool | None:
    """True/False when decided, None when the closure hit ``cap`` undecided."""
    closure = closure_R(g, path, cap)
    if any(is_extensible(g, q) for q in closure.paths):
        return False
    return True if closure.complete else None


# -- constructive lemmas --------------------------------------------------


def _col(g: EdgeColouredGraph, p: Path, x: int, y: int) -> int | None:
    """Colour between positions x and y (1-based), None if absent or off the path."""
    if not (1 <= x <= len(p) and 1 <= y <= len(p)):
        return None
    return g.neighbours(p[x - 1]).get(p[y - 1])


def lemma_simplecycle(
    g: EdgeColouredGraph, path: Iterable[int], a: int, b: int, strict: bool = False
) -> Path:
    """The cycle ``(1, ..., b, l, l-1, ..., a, 1)`` built from positions a and b.

    Checks the local hypotheses (a, b eligible and distinct from the path
    neighbours of the endpoints, b < a, the two colour conditions). The
    global hypothesis that no p.c. cycle spans G[V(P)] only matters in the
    ``b = 1`` branch; it is checked up front with ``strict=True`` and
    otherwise diagnosed when the constructed tuple fails to be p.c.
    """
    p = tuple(path)
    check_pc_path(g, p)
    l = len(p)
    if not (1 <= a <= l and 1 <= b <= l):
        raise HypothesisViolated("position range", f"a={a}, b={b}, l={l}")
    if a == 2 or p[a - 1] not in eligible_endpoint_set(g, p, "first"):
        raise HypothesisViolated("a in N^c(1;P) minus {2}", f"a={a}")
    if b == l - 1 or p[b - 1] not in eligible_endpoint_set(g, p, "last"):
        raise HypothesisViolated("b in N^c(l;P) minus {l-1}", f"b={b}")
    if not b < a:
        raise HypothesisViolated("b < a", f"a={a}, b={b}")
    if a < l and _col(g, p, 1, a) == _col(g, p, a, a + 1):
        raise HypothesisViolated("c(1,a) != c(a,a+1)", f"a={a}")
    if b > 1 and _col(g, p, l, b) == _col(g, p, b, b - 1):
        raise HypothesisViolated("c(l,b) != c(b,b-1)", f"b={b}")
    if strict and _spans_pc_cycle(g, p):
        raise HypothesisViolated("no p.c. cycle spans G[V(P)]")
    cycle = p[:b] + p[a - 1 :][::-1] + (p[0],)
    if not is_pc_cycle(g, cycle):
        if _spans_pc_cycle(g, p):
            raise HypothesisViolated("no p.c. cycle spans G[V(P)]")
        raise HypothesisViolated("constructed tuple is not a p.c. cycle", str(cycle))
    return cycle


def _spans_pc_cycle(g: EdgeColouredGraph, vertices: Iterable[int]) -> bool:
    sub, _ = induced_subgraph(g, vertices)
    return has_pc_hamiltonian_cycle(sub).witness is not None


@dataclass(frozen=True)
class EndpointAnalysis:
    """Positions (1-based) describing how the endpoint neighbourhoods interleave.

    ``A`` and ``B`` are the chosen colour neighbourhoods of the first and last
    vertex, as positions. ``clauses`` maps clause letters to True/False, or
    None when a clause does not apply (u, w only exist when s >= 2).
    ``c_incl_2`` is clause (c) without excluding position 2.
    """

    A: frozenset[int]
    B: frozenset[int]
    r: int
    s: int | None
    u: int | None
    w: int | None
    S: frozenset[int]
    clauses: dict[str, bool | None]

    @property
    def holds(self) -> bool:
        return all(v is not False for k, v in self.clauses.items() if k != "c_incl_2")


def default_choices(g: EdgeColouredGraph, path: Path) -> tuple[frozenset[int], frozenset[int]]:
    """Colour neighbourhoods of the endpoints, as positions, favouring a crossing.

    N^c(1;P) takes the latest position per colour, N^c(l;P) the earliest,
    with the path neighbours forced in. The path must not be extensible, so
    every representative lies on it.
    """
    l = len(path)
    pos = {v: k for k, v in enumerate(path, 1)}

    def choose(end: int, forced: int, pick) -> frozenset[int]:
        e = path[end - 1]
        by_colour: dict[int, list[int]] = {}
        for w, c in g.neighbours(e).items():
            # off-path neighbours can only share the forced colour
            if w in pos:
                by_colour.setdefault(c, []).append(pos[w])
        forced_colour = _col(g, path, end, forced)
        return frozenset(forced if c == forced_colour else pick(ks) for c, ks in by_colour.items())

    return choose(1, 2, max), choose(l, l - 1, min)


def analyze_endpoints(
    g: EdgeColouredGraph,
    path: Iterable[int],
    A: Iterable[int] | None = None,
    B: Iterable[int] | None = None,
) -> EndpointAnalysis:
    """Compute r, s, u, w and S for a non-extensible path with a crossing.

    ``A``/``B`` optionally fix the endpoint colour neighbourhoods (as
    positions); by default :func:`default_choices` is used. The no-(C,Q)
    hypothesis of the underlying lemma is not checked here.
    """
    p = tuple(path)
    check_pc_path(g, p)
    if is_extensible(g, p):
        raise CrossingError("extensible")
    l = len(p)
    dA, dB = default_choices(g, p)
    A = dA if A is None else frozenset(A)
    B = dB if B is None else frozenset(B)
    if not any(a < b for a in B for b in A):
        raise CrossingError("no crossing")
    col = lambda x, y: _col(g, p, x, y)  # noqa: E731
    Bs, As = sorted(B), sorted(A)
    r = Bs[0]

    s = None
    for b in Bs:
        if col(b, l) == col(b, b + 1):
            s = b
        else:
            break
    clauses: dict[str, bool | None] = {}
    u = w = None
    if s is None:
        clauses["a"] = False
        S = frozenset()
        for k in ("b", "c", "c_incl_2", "d", "e", "f"):
            clauses[k] = None
        return EndpointAnalysis(A, B, r, s, u, w, S, clauses)

    S = frozenset(b for b in Bs if r <= b <= s)
    clauses["a"] = all(col(b, l) == col(b, b + 1) for b in S)
    after = [b for b in Bs if b > s]
    clauses["b"] = True if not after else col(after[0], l) != col(after[0], after[0] + 1)

    def good(a: int) -> bool:
        nxt = col(a, a + 1)
        return nxt is not None and col(1, a) == nxt and nxt != col(a, a - 1)

    window = [a for a in As if r + 1 <= a <= s]
    clauses["c"] = all(good(a) for a in window if a != 2)
    clauses["c_incl_2"] = all(good(a) for a in window)

    if s >= 2:
        for a in (a for a in As if a > s):
            if good(a):
                u = a
            else:
                break
        if u is not None:
            later = [a for a in As if a > u]
            w = later[0] if later else None
        clauses["d"] = u is not None and all(good(a) for a in As if s + 1 <= a <= u)
        clauses["e"] = u is not None and w is not None and all(a <= u for a in As if a < w)
        clauses["f"] = w is not None and (w == l or col(1, w) != col(w, w + 1))
        if u is not None and w is not None:
            clauses["order"] = 1 <= r <= s < u < w <= l
        else:
            clauses["order"] = False
    else:
        clauses["d"] = clauses["e"] = clauses["f"] = None
    return EndpointAnalysis(A, B, r, s, u, w, S, clauses)


@dataclass(frozen=True)
class CycleDecomposition:
    """A p.c. cycle C and a p.c. path Q that together cover V(P).

    ``attach`` is the 1-based index j of a cycle vertex adjacent to the head
    of Q in a colour different from Q's first edge (``None`` when Q is
    empty). ``method`` records how it was found.
    """

    cycle: Path
    path: Path
    attach: int | None
    method: str

    @property
    def cycle_length(self) -> int:
        return len(self.cycle) - 1


def _attachment(g: EdgeColouredGraph, cycle: Path, q: Path) -> int | None:
    head = q[0]
    blocked = g.colour(head, q[1]) if len(q) > 1 else None
    for j, x in enumerate(cycle[:-1], 1):
        c = g.neighbours(head).get(x)
        if c is not None and c != blocked:
            return j
    return None


def validate_decomposition(g: EdgeColouredGraph, dec: CycleDecomposition, vertices: Iterable[int]) -> bool:
    """Re-check the cycle/path predicates, disjoint cover, and attachment."""
    vs = set(vertices)
    body = set(dec.cycle[:-1])
    if not is_pc_cycle(g, dec.cycle):
        return False
    if dec.path:
        if not is_pc_path(g, dec.path) or body & set(dec.path):
            return False
        if dec.attach is None or _attachment_ok(g, dec) is False:
            return False
    return body | set(dec.path) == vs


def _attachment_ok(g: EdgeColouredGraph, dec: CycleDecomposition) -> bool:
    x = dec.cycle[dec.attach - 1]
    head = dec.path[0]
    if not g.has_edge(head, x):
        return False
    return len(dec.path) == 1 or g.colour(head, dec.path[1]) != g.colour(head, x)


def _decomposition(g: EdgeColouredGraph, cycle: Path, rest: Path, method: str) -> CycleDecomposition | None:
    """Try ``rest`` in both directions as Q; None if neither is attached and p.c."""
    if not is_pc_cycle(g, cycle):
        return None
    if not rest:
        return CycleDecomposition(cycle, (), None, method)
    for q in (rest, rest[::-1]):
        if is_pc_path(g, q):
            j = _attachment(g, cycle, q)
            if j is not None:
                return CycleDecomposition(cycle, q, j, method)
    return None


def _structural_candidates(g: EdgeColouredGraph, p: Path) -> Iterator[tuple[Path, Path]]:
    """Cycles from the proof's constructions whose complement is an interval of P."""
    l = len(p)
    a_pos, b_pos = endpoint_positions(g, p)
    yield p + (p[0],), ()
    for b in b_pos:  # (b, ..., l, b) with Q = (b-1, ..., 1)
        if l - b + 1 >= 3:
            yield p[b - 1 :] + (p[b - 1],), p[: b - 1][::-1]
    for a in a_pos:  # (1, ..., a, 1) with Q = (a+1, ..., l)
        if a >= 3:
            yield p[:a] + (p[0],), p[a:]
    for b in b_pos:  # (1, ..., b, l, ..., a, 1) with Q = (b+1, ..., a-1)
        for a in a_pos:
            if b < a and b + (l - a + 1) >= 3:
                yield p[:b] + p[a - 1 :][::-1] + (p[0],), p[b : a - 1]


def find_cq_decomposition(
    g: EdgeColouredGraph, vertices: Iterable[int], min_cycle: int
) -> CycleDecomposition | None:
    """Exhaustive search for a (C, Q) covering ``vertices`` with |C| >= min_cycle.

    Returns the one with the longest cycle (ties: first in enumeration order).
    Exponential; intended for path vertex sets of up to about a dozen.
    """
    keep = sorted(set(vertices))
    sub, relabel = induced_subgraph(g, keep)
    back = {new: old for old, new in relabel.items()}
    cycles = sorted(
        (c for c in enumerate_pc_cycles(sub) if len(c) - 1 >= max(min_cycle, 3)),
        key=lambda c: (-len(c), c),
    )
    for c in cycles:
        body = set(c[:-1])
        rest = [v for v in range(sub.n) if v not in body]
        cycle = tuple(back[v] for v in c)
        if not rest:
            return CycleDecomposition(cycle, (), None, "exhaustive")
        rest_g, rl = induced_subgraph(sub, rest)
        rb = {new: back[old] for old, new in rl.items()}
        spanning = [(0,)] if rest_g.n == 1 else (q for q in enumerate_pc_paths(rest_g) if len(q) == rest_g.n)
        for q in spanning:
            qq = tuple(rb[v] for v in q)
            j = _attachment(g, cycle, qq)
            if j is not None:
                return CycleDecomposition(cycle, qq, j, "exhaustive")
    return None


def crossing_decompose(
    g: EdgeColouredGraph, maximal_path: Iterable[int], cap: int = DEFAULT_CAP
) -> CycleDecomposition:
    """Split V(P) of a maximal crossing path into a p.c. cycle C and path Q.

    With d = minimum colour degree >= 3 the result has |C| >= d, and
    |C| >= d + 1 unless P has at least 2d + 1 vertices. For d = 2 only a
    p.c. cycle inside G[V(P)] is promised; Q is filled in when possible.

    Candidates come from the structured cycles ``(1..b, l..a, 1)`` and
    friends over the members of R(P) in BFS order. If none is long enough,
    an exhaustive search over G[V(P)] is used. Failing both raises
    :class:`ContractViolation`.
    """
    p = tuple(maximal_path)
    check_pc_path(g, p)
    d = min_colour_degree(g)
    if d < 2:
        raise ValueError(f"minimum colour degree must be >= 2, got {d}")
    if has_crossing(g, p) is None:
        raise CrossingError("no crossing")
    closure = closure_R(g, p, cap)
    if any(is_extensible(g, q) for q in closure.order):
        raise CrossingError("not maximal")
    if d == 2:
        target = 3
    else:
        target = d + 1 if len(p) < 2 * d + 1 else d

    best: CycleDecomposition | None = None
    for q in closure.order:
        for orient in (q, q[::-1]):
            if has_crossing(g, orient) is None:
                continue
            for cycle, rest in _structural_candidates(g, orient):
                if len(cycle) - 1 < target or (best and len(cycle) <= len(best.cycle)):
                    continue
                dec = _decomposition(g, cycle, rest, "structural")
                if dec is not None:
                    best = dec
        if best is not None:
            break
    if best is None:
        best = find_cq_decomposition(g, p, target)
    if best is None and d == 2:
        sub, relabel = induced_subgraph(g, p)
        back = {new: old for old, new in relabel.items()}
        found = longest_pc_cycle(sub).witness
        if found is not None:
            best = CycleDecomposition(tuple(back[v] for v in found), (), None, "cycle-only")
    if best is None:
        raise ContractViolation(f"no decomposition with |C| >= {target} for path {p}")
    if best.method != "cycle-only" and not validate_decomposition(g, best, p):
        raise ContractViolation(f"invalid decomposition {best}")
    return best
