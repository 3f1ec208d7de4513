import itertools

import pytest

from pcpaths.generators import (
    ParameterError, blow_up, gen_counterexample_mono, gen_hat, gen_proper_complete, gen_random_connected,
    gen_random_min_cdeg, gen_recursive, gen_tilde, mono_min_degree, rainbow_complete, recursive_order,
)
from pcpaths.graph import EdgeColouredGraph, colour_degree, induced_subgraph, is_connected, min_colour_degree
from pcpaths.oracle import is_rainbow


def _proper(g):
    return all(len(set(g.neighbours(v).values())) == g.degree(v) for v in g.vertices())


def test_rainbow_complete():
    g = rainbow_complete(5)
    assert g.m == 10 and len(g.colours()) == 10


@pytest.mark.parametrize("d,p", [(2, 2), (2, 3), (3, 3), (3, 4), (4, 5)])
def test_tilde(d, p):
    g = gen_tilde(d, p)
    assert g.n == 1 + p * d
    assert g.m == p * d * (d - 1) // 2 + p * d
    assert min_colour_degree(g) == d
    assert colour_degree(g, 0) == p
    for j in range(p):
        block = range(1 + j * d, 1 + (j + 1) * d)
        assert is_rainbow(g, block)
        assert len({g.colour(0, v) for v in block}) == 1


def test_tilde_block_is_rainbow_k3():
    sub, _ = induced_subgraph(gen_tilde(3, 4), {1, 2, 3})
    assert sub.m == 3 and is_rainbow(sub, sub.vertices())


@pytest.mark.parametrize("d,n", [(2, 4), (3, 6), (4, 10), (5, 9)])
def test_hat(d, n):
    g = gen_hat(d, n)
    assert g.n == n and min_colour_degree(g) == d
    assert is_rainbow(g, range(d))
    for y, z in itertools.combinations(range(d, n), 2):
        assert not g.has_edge(y, z)
    for x in range(d):
        assert len({g.colour(x, y) for y in range(d, n)}) == 1


def test_recursive_family():
    for d, k, p in [(2, 3, 2), (2, 3, 3), (3, 3, 3), (3, 4, 3), (4, 4, 4)]:
        g = gen_recursive(d, k, p)
        assert g.n == recursive_order(d, k, p)
        assert min_colour_degree(g) >= d
    assert gen_recursive(2, 3, 3) == gen_tilde(2, 3)
    assert recursive_order(3, 3, 3) == 22


@pytest.mark.parametrize("n", range(2, 11))
def test_proper_complete(n):
    g, missing = gen_proper_complete(n)
    assert g.m == n * (n - 1) // 2
    assert _proper(g)
    if n % 2 == 0:
        assert len(g.colours()) == n - 1
        assert set(missing.values()) == {None}
        for c in g.colours():
            assert g.colour_class(c).m == n // 2
    else:
        assert len(g.colours()) == n
        for v in g.vertices():
            assert missing[v] == v
            assert v not in g.neighbours(v).values()


def test_blow_up():
    g = EdgeColouredGraph(2, [(0, 1, 7)])
    h = blow_up(g, 3)
    assert h.n == 6 and h.m == 9
    assert all(h.colour(a, b) == 7 for a in range(3) for b in range(3, 6))
    assert blow_up(g, 1) == g


def test_counterexample_mono_small():
    g = gen_counterexample_mono(3, 1)
    assert g.n == 6 and len(g.colours()) == 3
    assert mono_min_degree(g) == 1
    g4 = gen_counterexample_mono(4, 1)
    assert g4.n == 10 and g4.colours() == {0, 1, 2, 3}
    x = range(5)
    for i in range(4):
        assert i not in {g4.colour(i, w) for w in x if w != i and g4.has_edge(i, w)}
    assert _proper(induced_subgraph(g4, x)[0])
    assert mono_min_degree(gen_counterexample_mono(3, 2)) >= 2


def test_mono_min_degree():
    g = EdgeColouredGraph(3, [(0, 1, 0), (1, 2, 1)])
    assert mono_min_degree(g) == 0
    with pytest.raises(ParameterError):
        mono_min_degree(EdgeColouredGraph(3))


def test_random_min_cdeg_properties_and_determinism():
    for seed in range(30):
        for d, colours in [(2, 3), (3, 4), (3, 6), (4, 10)]:
            g = gen_random_min_cdeg(10, d, colours, seed, 0.3)
            assert min_colour_degree(g) >= d
            assert max(g.colours()) < colours
            assert g == gen_random_min_cdeg(10, d, colours, seed, 0.3)
    assert gen_random_min_cdeg(10, 3, 5, 1) != gen_random_min_cdeg(10, 3, 5, 2)


def test_random_connected():
    for seed in range(20):
        g = gen_random_connected(8, 3, seed, 0.2)
        assert is_connected(g)
        assert g == gen_random_connected(8, 3, seed, 0.2)


@pytest.mark.parametrize("call", [
    lambda: gen_tilde(3, 2),
    lambda: gen_tilde(1, 3),
    lambda: gen_hat(4, 5),
    lambda: gen_recursive(2, 4, 3),
    lambda: gen_recursive(3, 3, 2),
    lambda: gen_proper_complete(1),
    lambda: blow_up(rainbow_complete(2), 0),
    lambda: gen_counterexample_mono(2, 1),
    lambda: gen_random_min_cdeg(3, 3, 5, 0),
    lambda: gen_random_min_cdeg(8, 3, 2, 0),
    lambda: gen_random_min_cdeg(8, 4, 4, 0),
    lambda: gen_random_min_cdeg(8, 2, 4, 0, density=1.5),
])
def test_parameter_errors(call):
    with pytest.raises(ParameterError):
        call()
