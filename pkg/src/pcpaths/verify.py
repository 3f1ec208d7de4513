"""Executable checks of the p.c. path/cycle bounds, plus conjecture hunting.

Each ``check_*`` runs the exact oracle on one graph and returns a
:class:`VerificationReport`. A report says ``fail`` only when every oracle
run behind the verdict completed; otherwise it says ``inconclusive``.

Real-valued bounds are compared against their ceiling, since path lengths
are integers.
"""

from __future__ import annotations

import json
import logging
import math
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import generators as gen
from .graph import EdgeColouredGraph, is_connected, min_colour_degree
from .oracle import (
    SearchResult,
    has_pc_cycle_of_length_at_least,
    has_pc_hamiltonian_cycle,
    longest_pc_cycle,
    longest_pc_path,
)
from .yeo import certify_acyclic

log = logging.getLogger(__name__)

SCHEMA = "pcpaths.report/1"
PROP_UPPER_MAX_ORDER = 25


class PreconditionError(ValueError):
    """The graph does not meet the hypotheses of the statement being checked."""


@dataclass
class VerificationReport:
    theorem: str
    instance: str
    quantities: dict
    bound: int | None
    verdict: str  # "pass" | "fail" | "inconclusive"
    branch: str | None = None
    tight: bool = False
    witness: list[int] | None = None
    exact: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    schema: str = SCHEMA

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def ceil_bound(value: Fraction) -> int:
    return math.ceil(value)


def _verdict(branches: list[tuple[str, bool, bool]]) -> tuple[str, str | None]:
    """Combine ``(name, holds, exact)`` branches of a disjunction."""
    for name, holds, _ in branches:
        if holds:
            return "pass", name
    if all(exact for _, _, exact in branches):
        return "fail", None
    return "inconclusive", None


def _witness(r: SearchResult | None) -> list[int] | None:
    return None if r is None or r.witness is None else list(r.witness)


def check_thm_2dplus1(g: EdgeColouredGraph, instance: str = "", budget: int | None = None) -> VerificationReport:
    """Path of length 2d or p.c. cycle of length >= d + 1, d the minimum colour degree."""
    d = min_colour_degree(g)
    if d < 2:
        raise PreconditionError(f"minimum colour degree {d} < 2")
    path = longest_pc_path(g, budget)
    cycle = longest_pc_cycle(g, budget)
    bound = 2 * d
    verdict, branch = _verdict([
        ("path", path.length >= bound, path.exact),
        ("cycle", cycle.length is not None and cycle.length >= d + 1, cycle.exact),
    ])
    return VerificationReport(
        theorem="thm2",
        instance=instance,
        quantities={"min_colour_degree": d, "longest_path": path.length, "longest_cycle": cycle.length,
                    "cycle_bound": d + 1},
        bound=bound,
        verdict=verdict,
        branch=branch,
        tight=path.exact and path.length == bound,
        witness=_witness(path if branch != "cycle" else cycle),
        exact={"path": path.exact, "cycle": cycle.exact},
    )


def kd_bound(k: int, d: int) -> int:
    return k * 2 ** (d - math.ceil(3 * k / 2) + 4) - 2


def check_thm_kd(g: EdgeColouredGraph, k: int, instance: str = "", budget: int | None = None) -> VerificationReport:
    """Path of length k*2^(d - ceil(3k/2) + 4) - 2 or a p.c. cycle of length >= k."""
    d = min_colour_degree(g)
    if k < 3:
        raise PreconditionError("k >= 3 required")
    if d < math.ceil(3 * k / 2) - 3:
        raise PreconditionError(f"minimum colour degree {d} < ceil(3k/2) - 3 = {math.ceil(3 * k / 2) - 3}")
    bound = kd_bound(k, d)
    path = longest_pc_path(g, budget)
    cycle = has_pc_cycle_of_length_at_least(g, k, budget)
    verdict, branch = _verdict([
        ("path", path.length >= bound, path.exact),
        ("cycle", cycle.witness is not None, cycle.exact),
    ])
    return VerificationReport(
        theorem=f"thm3:{k}",
        instance=instance,
        quantities={"min_colour_degree": d, "k": k, "longest_path": path.length,
                    "cycle_at_least_k": cycle.witness is not None},
        bound=bound,
        verdict=verdict,
        branch=branch,
        tight=path.exact and path.length == bound,
        witness=_witness(path if branch != "cycle" else cycle),
        exact={"path": path.exact, "cycle": cycle.exact},
    )


def check_cor_k3(g: EdgeColouredGraph, instance: str = "", budget: int | None = None) -> VerificationReport:
    """Path of length 3*2^(d-1) - 2 or any p.c. cycle; cross-checked with the Yeo chain."""
    d = min_colour_degree(g)
    if d < 1:
        raise PreconditionError("minimum colour degree >= 1 required")
    bound = 3 * 2 ** (d - 1) - 2
    path = longest_pc_path(g, budget)
    cycle = longest_pc_cycle(g, budget)
    notes = []
    certified = certify_acyclic(g)
    if cycle.exact and certified.acyclic != (cycle.witness is None):
        raise AssertionError("Yeo certificate disagrees with the exact oracle")
    notes.append("yeo chain agrees with oracle")
    verdict, branch = _verdict([
        ("path", path.length >= bound, path.exact),
        ("cycle", cycle.witness is not None, cycle.exact),
    ])
    return VerificationReport(
        theorem="cor3",
        instance=instance,
        quantities={"min_colour_degree": d, "longest_path": path.length, "longest_cycle": cycle.length,
                    "yeo_acyclic": certified.acyclic},
        bound=bound,
        verdict=verdict,
        branch=branch,
        tight=path.exact and path.length == bound,
        witness=_witness(path if branch != "cycle" else cycle),
        exact={"path": path.exact, "cycle": cycle.exact},
        notes=notes,
    )


def path_bound(d: int) -> int:
    return ceil_bound(Fraction(6 * d, 5) - 1)


def check_thm_path(g: EdgeColouredGraph, instance: str = "", budget: int | None = None) -> VerificationReport:
    """p.c. Hamiltonian cycle or a p.c. path of length 6d/5 - 1 (rounded up)."""
    d = min_colour_degree(g)
    if d < 1:
        raise PreconditionError("minimum colour degree >= 1 required")
    bound = path_bound(d)
    path = longest_pc_path(g, budget)
    ham = has_pc_hamiltonian_cycle(g, budget)
    verdict, branch = _verdict([
        ("hamiltonian", ham.witness is not None, ham.exact),
        ("path", path.length >= bound, path.exact),
    ])
    return VerificationReport(
        theorem="thm6",
        instance=instance,
        quantities={"min_colour_degree": d, "longest_path": path.length,
                    "hamiltonian": ham.witness is not None, "bound_real": str(Fraction(6 * d, 5) - 1)},
        bound=bound,
        verdict=verdict,
        branch=branch,
        tight=path.exact and path.length == bound,
        witness=_witness(ham if branch == "hamiltonian" else path),
        exact={"path": path.exact, "hamiltonian": ham.exact},
        notes=["real bound compared by ceiling"],
    )


def mono_bound(k: int, delta: int) -> int:
    return ceil_bound(Fraction(10 * (k - 1) * delta + 8, 9) - 1)


def check_thm_mono(g: EdgeColouredGraph, instance: str = "", budget: int | None = None) -> VerificationReport:
    """Connected k-edge-coloured graph: path of length (10(k-1)delta+8)/9 - 1 or p.c. Hamiltonian cycle."""
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    k = len(g.colours())
    if k < 2:
        raise PreconditionError("at least two colours required")
    delta = gen.mono_min_degree(g)
    if delta < 1:
        raise PreconditionError("every colour class must cover every vertex (mono degree >= 1)")
    bound = mono_bound(k, delta)
    path = longest_pc_path(g, budget)
    ham = has_pc_hamiltonian_cycle(g, budget)
    verdict, branch = _verdict([
        ("hamiltonian", ham.witness is not None, ham.exact),
        ("path", path.length >= bound, path.exact),
    ])
    return VerificationReport(
        theorem="thm8",
        instance=instance,
        quantities={"colours": k, "mono_min_degree": delta, "longest_path": path.length,
                    "hamiltonian": ham.witness is not None,
                    "bound_real": str(Fraction(10 * (k - 1) * delta + 8, 9) - 1)},
        bound=bound,
        verdict=verdict,
        branch=branch,
        tight=path.exact and path.length == bound,
        witness=_witness(ham if branch == "hamiltonian" else path),
        exact={"path": path.exact, "hamiltonian": ham.exact},
        notes=["real bound compared by ceiling", "delta taken as the graph's mono min degree"],
    )


def prop_upper_path(d: int, k: int) -> int:
    return k * 2 ** (d - k + 2) - 2


def check_prop_upper(d: int, k: int, p: int, budget: int | None = None) -> VerificationReport:
    """Exact longest path ``k*2^(d-k+2) - 2`` and no p.c. cycle of length >= k."""
    order = gen.recursive_order(d, k, p)
    if order > PROP_UPPER_MAX_ORDER:
        raise PreconditionError(f"{order} vertices exceeds the exact-oracle limit {PROP_UPPER_MAX_ORDER}")
    g = gen.gen_recursive(d, k, p)
    path = longest_pc_path(g, budget)
    cycle = longest_pc_cycle(g, budget)
    expected = prop_upper_path(d, k)
    path_ok = path.length == expected
    cycle_ok = cycle.length is None or cycle.length <= k - 1
    exact = path.exact and cycle.exact
    verdict = "pass" if (path_ok and cycle_ok and exact) else ("fail" if exact else "inconclusive")
    return VerificationReport(
        theorem=f"prop4:{d},{k},{p}",
        instance=f"recursive(d={d},k={k},p={p})",
        quantities={"order": order, "min_colour_degree": min_colour_degree(g), "longest_path": path.length,
                    "longest_cycle": cycle.length},
        bound=expected,
        verdict=verdict,
        branch="equality" if verdict == "pass" else None,
        tight=path_ok,
        witness=_witness(path),
        exact={"path": path.exact, "cycle": cycle.exact},
        notes=["cycle clause read as: no p.c. cycle of length >= k"],
    )


# -- conjectures ------------------------------------------------------------


def conj_kd_report(g: EdgeColouredGraph, k: int, offset: int = 0, instance: str = "",
                   budget: int | None = None) -> VerificationReport:
    """Path of length k*2^(d-k+2) - 2 (+ offset) or a p.c. cycle of length >= k."""
    d = min_colour_degree(g)
    if d < k - 1:
        raise PreconditionError(f"minimum colour degree {d} < k - 1")
    bound = prop_upper_path(d, k) + offset
    path = longest_pc_path(g, budget)
    cycle = has_pc_cycle_of_length_at_least(g, k, budget)
    verdict, branch = _verdict([
        ("path", path.length >= bound, path.exact),
        ("cycle", cycle.witness is not None, cycle.exact),
    ])
    return VerificationReport(
        theorem=f"conj5:{k}", instance=instance,
        quantities={"min_colour_degree": d, "k": k, "longest_path": path.length, "offset": offset},
        bound=bound, verdict=verdict, branch=branch, tight=path.exact and path.length == bound,
        witness=_witness(path if branch != "cycle" else cycle),
        exact={"path": path.exact, "cycle": cycle.exact},
    )


def conj_path_report(g: EdgeColouredGraph, offset: int = 0, instance: str = "",
                     budget: int | None = None) -> VerificationReport:
    """Connected graph: p.c. Hamiltonian cycle or path of length floor(3d/2) (+ offset)."""
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    d = min_colour_degree(g)
    bound = 3 * d // 2 + offset
    path = longest_pc_path(g, budget)
    ham = has_pc_hamiltonian_cycle(g, budget)
    verdict, branch = _verdict([
        ("hamiltonian", ham.witness is not None, ham.exact),
        ("path", path.length >= bound, path.exact),
    ])
    return VerificationReport(
        theorem="conj7", instance=instance,
        quantities={"min_colour_degree": d, "longest_path": path.length,
                    "hamiltonian": ham.witness is not None, "offset": offset},
        bound=bound, verdict=verdict, branch=branch, tight=path.exact and path.length == bound,
        witness=_witness(ham if branch == "hamiltonian" else path),
        exact={"path": path.exact, "hamiltonian": ham.exact},
    )


@dataclass
class HuntResult:
    counterexample: EdgeColouredGraph | None
    report: VerificationReport | None
    checked: int
    skipped: int
    inconclusive: int


FAMILIES = ("tilde", "hat", "recursive", "rainbow")


def family_instances(max_n: int, families=FAMILIES, k: int = 3) -> Iterator[tuple[str, EdgeColouredGraph]]:
    """Every generator instance with at most ``max_n`` vertices, smallest first."""
    out = []
    if "recursive" in families:
        for d in range(k - 1, max_n):
            for p in range(d, max_n):
                if gen.recursive_order(d, k, p) <= max_n:
                    out.append((f"recursive(d={d},k={k},p={p})", lambda d=d, p=p: gen.gen_recursive(d, k, p)))
    if "tilde" in families:
        for d in range(2, max_n):
            for p in range(d, max_n):
                if 1 + p * d <= max_n:
                    out.append((f"tilde(d={d},p={p})", lambda d=d, p=p: gen.gen_tilde(d, p)))
    if "hat" in families:
        for d in range(1, max_n):
            for n in range(math.ceil(3 * d / 2), max_n + 1):
                if n > d:
                    out.append((f"hat(d={d},n={n})", lambda d=d, n=n: gen.gen_hat(d, n)))
    if "rainbow" in families:
        for n in range(2, max_n + 1):
            out.append((f"rainbow_complete(n={n})", lambda n=n: gen.rainbow_complete(n)))
    for name, make in out:
        yield name, make()


def random_instances(max_n: int, seed: int, min_cdeg: int = 1, max_cdeg: int | None = None,
                     max_colours: int = 5) -> Iterator[tuple[str, EdgeColouredGraph]]:
    """Endless seeded stream of graphs with ``min_cdeg <= d <= max_cdeg`` planted."""
    rng = random.Random(seed)
    top = max_cdeg if max_cdeg is not None else max_n - 1
    while True:
        d = rng.randint(min_cdeg, min(top, max_n - 1))
        n = rng.randint(d + 1, max_n)
        colours = rng.randint(max(d + 1, 2), max(max_colours, d + 1))
        density = round(rng.uniform(0.1, 0.7), 3)
        s = rng.randrange(2**31)
        try:
            g = gen.gen_random_min_cdeg(n, d, colours, s, density)
        except gen.ParameterError:
            continue
        yield f"random_min_cdeg(n={n},d={d},colours={colours},seed={s},density={density})", g


def conjecture_search(
    which: str,
    max_n: int = 8,
    budget: int = 200,
    seed: int = 0,
    k: int = 3,
    offset: int = 0,
    max_cdeg: int | None = None,
    families=FAMILIES,
    random_instances_enabled: bool = True,
    oracle_budget: int | None = None,
) -> HuntResult:
    """Check a conjecture on generator families then random instances.

    ``which`` is ``"k<d"`` or ``"path"``. ``budget`` caps the number of
    instances examined. ``offset`` is added to the conjectured path bound,
    which lets a deliberately false variant exercise the harness. Only
    exact oracle runs can produce a counterexample.
    """
    if which not in ("k<d", "path"):
        raise ValueError(f"unknown conjecture {which!r}")
    min_cdeg = k - 1 if which == "k<d" else 1

    def stream():
        yield from family_instances(max_n, families, k)
        if random_instances_enabled:
            yield from random_instances(max_n, seed, min_cdeg, max_cdeg)

    checked = skipped = inconclusive = 0
    for name, g in stream():
        if checked + skipped >= budget:
            break
        d = min_colour_degree(g)
        if max_cdeg is not None and d > max_cdeg:
            skipped += 1
            continue
        try:
            if which == "k<d":
                rep = conj_kd_report(g, k, offset, name, oracle_budget)
            else:
                rep = conj_path_report(g, offset, name, oracle_budget)
        except PreconditionError:
            skipped += 1
            continue
        checked += 1
        if rep.verdict == "fail":
            log.info("counterexample after %d instances: %s", checked, name)
            return HuntResult(g, rep, checked, skipped, inconclusive)
        if rep.verdict == "inconclusive":
            inconclusive += 1
    log.info("no counterexample in %d instances (%d skipped)", checked, skipped)
    return HuntResult(None, None, checked, skipped, inconclusive)


def run_parallel(fn: Callable, items: list, jobs: int = 1) -> list:
    """Map ``fn`` over ``items`` with ``jobs`` processes; output keeps input order."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
