"""Separating-vertex certificates for graphs without p.c. cycles.

If an edge-coloured graph has no p.c. cycle, some vertex z has the property
that every component of G - z is joined to z in a single colour. A p.c.
cycle through such a z would have to leave and re-enter z through one
component, so in the same colour; hence every p.c. cycle avoids z and lives
in one component. Recursing into the components therefore certifies that
no p.c. cycle exists at all.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import EdgeColouredGraph, components
from .oracle import longest_pc_cycle


@dataclass(frozen=True)
class YeoCertificate:
    """Vertex ``z`` with the components of G - z and their joining colours.

    The colour is ``None`` for a component not adjacent to z.
    """

    z: int
    components: tuple[tuple[frozenset[int], int | None], ...]


def _certificate_at(g: EdgeColouredGraph, z: int, within: frozenset[int]) -> YeoCertificate | None:
    removed = frozenset(v for v in g.vertices() if v not in within) | {z}
    parts = []
    for comp in components(g, removed):
        seen = {c for w, c in g.neighbours(z).items() if w in comp}
        if len(seen) > 1:
            return None
        parts.append((frozenset(comp), next(iter(seen)) if seen else None))
    return YeoCertificate(z, tuple(parts))


def find_yeo_vertex(g: EdgeColouredGraph, within=None) -> YeoCertificate | None:
    """Smallest qualifying z (optionally inside the vertex subset ``within``)."""
    within = frozenset(g.vertices()) if within is None else frozenset(within)
    for z in sorted(within):
        cert = _certificate_at(g, z, within)
        if cert is not None:
            return cert
    return None


@dataclass(frozen=True)
class AcyclicityResult:
    """Either a certificate chain (no p.c. cycle) or a p.c. cycle witness.

    ``chain`` lists ``(vertex set, certificate)`` pairs in the order the
    recursion visited them; vertex labels are those of the input graph.
    """

    chain: tuple[tuple[frozenset[int], YeoCertificate], ...] | None
    cycle: tuple[int, ...] | None

    @property
    def acyclic(self) -> bool:
        return self.chain is not None


def certify_acyclic(g: EdgeColouredGraph) -> AcyclicityResult:
    chain: list[tuple[frozenset[int], YeoCertificate]] = []
    stack = [frozenset(g.vertices())]
    while stack:
        part = stack.pop()
        if not part:
            continue
        cert = find_yeo_vertex(g, part)
        if cert is None:
            witness = longest_pc_cycle(g).witness
            # a subgraph without a qualifying vertex must hold a p.c. cycle
            assert witness is not None, "certificate search failed on a p.c.-cycle-free graph"
            return AcyclicityResult(None, witness)
        chain.append((part, cert))
        stack.extend(comp for comp, _ in reversed(cert.components))
    return AcyclicityResult(tuple(chain), None)


def validate_certificate(g: EdgeColouredGraph, cert: YeoCertificate, within=None) -> bool:
    """Recompute the components of G[within] - z and compare with ``cert``."""
    within = frozenset(g.vertices()) if within is None else frozenset(within)
    fresh = _certificate_at(g, cert.z, within)
    if fresh is None:
        return False
    return sorted(fresh.components, key=lambda t: min(t[0])) == sorted(cert.components, key=lambda t: min(t[0]))
