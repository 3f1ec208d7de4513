"""Deterministic extremal families and seeded random instances.

Every construction draws "new" colours from a monotone counter, so distinct
blocks never share a colour id.
"""

from __future__ import annotations

import itertools
import math
import random

from .graph import EdgeColouredGraph


class ParameterError(ValueError):
    """Generator parameters outside the family's range."""


def rainbow_complete(n: int, first_colour: int = 0) -> EdgeColouredGraph:
    """K_n with every edge a distinct colour."""
    if n < 1:
        raise ParameterError("n >= 1 required")
    colours = itertools.count(first_colour)
    g = EdgeColouredGraph(n)
    for u, v in itertools.combinations(range(n), 2):
        g.add_edge(u, v, next(colours))
    return g


def _hub_of_copies(copies: list[EdgeColouredGraph]) -> EdgeColouredGraph:
    """New vertex 0 joined to every vertex of copy j by a fresh colour c_j.

    Copies are laid out after the hub in order and recoloured so that no two
    copies, and no copy and hub edge, share a colour.
    """
    g = EdgeColouredGraph(1 + sum(h.n for h in copies))
    fresh = itertools.count()
    offset = 1
    for h in copies:
        recolour: dict[int, int] = {}
        for u, v, c in h.edges():
            if c not in recolour:
                recolour[c] = next(fresh)
            g.add_edge(u + offset, v + offset, recolour[c])
        hub = next(fresh)
        for v in range(h.n):
            g.add_edge(0, v + offset, hub)
        offset += h.n
    return g


def gen_tilde(d: int, p: int) -> EdgeColouredGraph:
    """Hub ``x = 0`` plus ``p`` rainbow K_d blocks, block j joined to x in colour c_j.

    Block j occupies vertices ``1 + j*d .. (j+1)*d``. Minimum colour degree d,
    longest p.c. path 2d, longest p.c. cycle d (none when d = 2).
    """
    if not (p >= d >= 2):
        raise ParameterError(f"need p >= d >= 2, got d={d}, p={p}")
    return _hub_of_copies([rainbow_complete(d) for _ in range(p)])


def gen_hat(d: int, n: int) -> EdgeColouredGraph:
    """Rainbow K_d on X = {0..d-1}, independent Y = {d..n-1}, x_i--y in colour c_i."""
    if d < 1 or n < math.ceil(3 * d / 2) or n <= d:
        raise ParameterError(f"need d >= 1 and n >= ceil(3d/2), n > d; got d={d}, n={n}")
    g = rainbow_complete(d)
    fresh = itertools.count(d * (d - 1) // 2)
    out = EdgeColouredGraph(n, g.edges())
    for x in range(d):
        c = next(fresh)
        for y in range(d, n):
            out.add_edge(x, y, c)
    return out


def gen_recursive(d: int, k: int, p: int) -> EdgeColouredGraph:
    """Star of ``p`` copies of ``gen_recursive(d-1, k, p)`` around a new hub.

    The base case ``d = k - 1`` is ``gen_tilde(k - 1, p)``. The result has
    minimum colour degree >= d, no p.c. cycle of length >= k and longest p.c.
    path ``k * 2**(d-k+2) - 2``.
    """
    if not (d >= k - 1 >= 2) or p < d:
        raise ParameterError(f"need d >= k-1 >= 2 and p >= d; got d={d}, k={k}, p={p}")
    if d == k - 1:
        return gen_tilde(k - 1, p)
    child = gen_recursive(d - 1, k, p)
    return _hub_of_copies([child] * p)


def recursive_order(d: int, k: int, p: int) -> int:
    """Vertex count of ``gen_recursive(d, k, p)`` without building it."""
    size = 1 + p * (k - 1)
    for _ in range(d - (k - 1)):
        size = 1 + p * size
    return size


def gen_proper_complete(n: int) -> tuple[EdgeColouredGraph, dict[int, int | None]]:
    """Round-robin proper edge colouring of K_n.

    Even n: n-1 colours, each class a perfect matching. Odd n: n colours
    (schedule K_{n+1} and drop the phantom vertex), and vertex i misses
    exactly colour i. Returns the graph and the map vertex -> missing colour
    (``None`` for even n).
    """
    if n < 2:
        raise ParameterError("n >= 2 required")
    m = n if n % 2 == 0 else n + 1
    # circle method: vertex m-1 fixed, 0..m-2 rotate; round r pairs m-1 with r
    g = EdgeColouredGraph(n)
    missing: dict[int, int | None] = {v: None for v in range(n)}
    for r in range(m - 1):
        pairs = [(m - 1, r)]
        for i in range(1, m // 2):
            pairs.append(((r + i) % (m - 1), (r - i) % (m - 1)))
        for u, v in pairs:
            if u >= n or v >= n:
                missing[v if u >= n else u] = r
                continue
            g.add_edge(u, v, r)
    return g, missing


def blow_up(g: EdgeColouredGraph, delta: int) -> EdgeColouredGraph:
    """Replace each vertex v by copies ``v*delta .. v*delta + delta - 1``."""
    if delta < 1:
        raise ParameterError("delta >= 1 required")
    out = EdgeColouredGraph(g.n * delta)
    for u, v, c in g.edges():
        for a in range(delta):
            for b in range(delta):
                out.add_edge(u * delta + a, v * delta + b, c)
    return out


def gen_counterexample_mono(k: int, delta: int, y_size: int | None = None) -> EdgeColouredGraph:
    """k-edge-coloured graph with mono degree >= delta and only short p.c. paths.

    X = ``{0..k+eps-1}`` (eps = 1 for even k) carries a proper colouring with
    colours ``0..k-1`` in which ``x_i`` misses colour i. Y (default ``|X|``
    vertices) is independent and each ``y`` meets ``x_i`` in colour i for
    ``i < k``. The whole graph is then blown up by ``delta``.
    """
    if k < 3 or delta < 1:
        raise ParameterError(f"need k >= 3, delta >= 1; got k={k}, delta={delta}")
    eps = 1 if k % 2 == 0 else 0
    size_x = k + eps
    y_size = size_x if y_size is None else y_size
    if y_size < 1:
        raise ParameterError("Y must be non-empty")
    if k % 2 == 1:
        kx, _ = gen_proper_complete(k)
        x_edges = list(kx.edges())
    else:
        # K_{k+1} with k+1 colours, then drop the class of colour k
        kx, _ = gen_proper_complete(k + 1)
        x_edges = [(u, v, c) for u, v, c in kx.edges() if c != k]
    g = EdgeColouredGraph(size_x + y_size, x_edges)
    for y in range(size_x, size_x + y_size):
        for i in range(k):
            g.add_edge(i, y, i)
    return blow_up(g, delta) if delta > 1 else g


def mono_min_degree(g: EdgeColouredGraph) -> int:
    """Minimum over colours present of the minimum degree in that colour class."""
    colours = g.colours()
    if not colours:
        raise ParameterError("mono degree of an edgeless graph is undefined")
    best = None
    for c in colours:
        low = min(sum(1 for col in g.neighbours(v).values() if col == c) for v in g.vertices())
        best = low if best is None else min(best, low)
    return best


def _proper_block_colouring(size: int) -> list[tuple[int, int, int]]:
    kx, _ = gen_proper_complete(size)
    return list(kx.edges())


def gen_random_min_cdeg(
    n: int, d: int, colours: int, seed: int, density: float = 0.3
) -> EdgeColouredGraph:
    """Seeded graph on ``n`` vertices with minimum colour degree >= d.

    Disjoint K_{d+1} blocks are planted first. They are rainbow when the
    palette has ``d(d+1)/2`` colours, otherwise properly coloured, which gives
    every block vertex exactly d colours either way. Leftover vertices are
    wired to d block vertices in d distinct colours. Then each remaining pair
    becomes an edge with probability ``density`` and a uniform colour.
    """
    if d < 1 or n < d + 1:
        raise ParameterError(f"need n >= d + 1 and d >= 1; got n={n}, d={d}")
    if colours < d:
        raise ParameterError(f"need at least d={d} colours, got {colours}")
    if not 0.0 <= density <= 1.0:
        raise ParameterError("density must lie in [0, 1]")
    rainbow = colours >= d * (d + 1) // 2
    proper_needed = d if (d + 1) % 2 == 0 else d + 1
    if not rainbow and colours < proper_needed:
        raise ParameterError(f"{colours} colours cannot give colour degree {d} on K_{d + 1} blocks")
    rng = random.Random(seed)
    g = EdgeColouredGraph(n)
    blocks = n // (d + 1)
    for b in range(blocks):
        base = b * (d + 1)
        if rainbow:
            pairs = list(itertools.combinations(range(d + 1), 2))
            palette = rng.sample(range(colours), len(pairs))
            for (u, v), c in zip(pairs, palette):
                g.add_edge(base + u, base + v, c)
        else:
            shape = _proper_block_colouring(d + 1)
            used = sorted({c for _, _, c in shape})
            remap = dict(zip(used, rng.sample(range(colours), len(used))))
            for u, v, c in shape:
                g.add_edge(base + u, base + v, remap[c])
    planted = blocks * (d + 1)
    for v in range(planted, n):
        targets = rng.sample(range(planted), d)
        palette = rng.sample(range(colours), d)
        for t, c in zip(targets, palette):
            g.add_edge(v, t, c)
    for u, v in itertools.combinations(range(n), 2):
        if not g.has_edge(u, v) and rng.random() < density:
            g.add_edge(u, v, rng.randrange(colours))
    return g


def gen_random_connected(n: int, colours: int, seed: int, density: float = 0.4) -> EdgeColouredGraph:
    """Seeded connected graph: a random spanning tree plus random extra edges."""
    if n < 1 or colours < 1:
        raise ParameterError("need n >= 1 and colours >= 1")
    rng = random.Random(seed)
    g = EdgeColouredGraph(n)
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        g.add_edge(order[i], order[rng.randrange(i)], rng.randrange(colours))
    for u, v in itertools.combinations(range(n), 2):
        if not g.has_edge(u, v) and rng.random() < density:
            g.add_edge(u, v, rng.randrange(colours))
    return g
