import random

from hypothesis import given, settings

from conftest import coloured_graphs, random_graph
from pcpaths.generators import gen_recursive, gen_tilde, rainbow_complete
from pcpaths.graph import EdgeColouredGraph
from pcpaths.oracle import is_pc_cycle, longest_pc_cycle
from pcpaths.yeo import certify_acyclic, find_yeo_vertex, validate_certificate


def test_tilde_hub_is_the_certificate():
    g = gen_tilde(2, 3)
    cert = find_yeo_vertex(g)
    assert cert.z == 0
    assert [sorted(c) for c, _ in cert.components] == [[1, 2], [3, 4], [5, 6]]
    hub_colours = [col for _, col in cert.components]
    assert len(set(hub_colours)) == 3
    for comp, col in cert.components:
        assert all(g.colour(0, v) == col for v in comp)


def test_rainbow_k4_has_no_certificate():
    assert find_yeo_vertex(rainbow_complete(4)) is None


def test_single_vertex():
    cert = find_yeo_vertex(EdgeColouredGraph(1))
    assert cert.z == 0 and cert.components == ()


def test_isolated_component_has_no_colour():
    g = EdgeColouredGraph(3, [(1, 2, 0)])
    cert = find_yeo_vertex(g)
    assert cert.z == 0 and cert.components == ((frozenset({1, 2}), None),)


def test_certify_acyclic_examples():
    r = certify_acyclic(gen_tilde(2, 5))
    assert r.acyclic and r.cycle is None
    assert all(validate_certificate(gen_tilde(2, 5), cert, part) for part, cert in r.chain)
    assert certify_acyclic(gen_recursive(3, 3, 3)).acyclic
    r = certify_acyclic(rainbow_complete(3))
    assert not r.acyclic and r.cycle == (0, 1, 2, 0)


def test_chain_covers_every_vertex_once():
    g = gen_recursive(3, 3, 3)
    chain = certify_acyclic(g).chain
    zs = [cert.z for _, cert in chain]
    assert sorted(zs) == list(g.vertices())


@settings(max_examples=300, deadline=None)
@given(coloured_graphs(max_n=8, max_colours=3))
def test_exactly_one_outcome_and_soundness(g):
    r = certify_acyclic(g)
    assert (r.chain is None) != (r.cycle is None)
    oracle = longest_pc_cycle(g).witness
    if r.acyclic:
        assert oracle is None
        for part, cert in r.chain:
            assert validate_certificate(g, cert, part)
    else:
        assert oracle is not None and is_pc_cycle(g, r.cycle)


def test_contrapositive_on_random_graphs():
    rng = random.Random(8)
    hits = 0
    for _ in range(400):
        g = random_graph(rng, rng.randint(1, 9), rng.randint(1, 4), rng.uniform(0.1, 0.7))
        if longest_pc_cycle(g).witness is None:
            cert = find_yeo_vertex(g)
            assert cert is not None and validate_certificate(g, cert)
            hits += 1
    assert hits > 50


def test_validate_rejects_tampered_certificate():
    g = gen_tilde(2, 3)
    cert = find_yeo_vertex(g)
    from pcpaths.yeo import YeoCertificate

    bad = YeoCertificate(cert.z, cert.components[:-1])
    assert not validate_certificate(g, bad)
    assert not validate_certificate(rainbow_complete(4), YeoCertificate(0, ()))
