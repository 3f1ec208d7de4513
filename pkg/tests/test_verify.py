import json
import random

import pytest

from pcpaths.generators import gen_counterexample_mono, gen_hat, gen_random_min_cdeg, gen_tilde, rainbow_complete
from pcpaths.graph import EdgeColouredGraph
from pcpaths.verify import (
    SCHEMA, PreconditionError, VerificationReport, check_cor_k3, check_prop_upper, check_thm_2dplus1, check_thm_kd,
    check_thm_mono, check_thm_path, conj_kd_report, conj_path_report, conjecture_search, kd_bound, mono_bound,
    path_bound, prop_upper_path, run_parallel,
)


def test_bounds():
    assert kd_bound(3, 2) == 3 * 2 ** (2 - 5 + 4) - 2 == 4
    assert kd_bound(4, 5) == 4 * 2 ** 3 - 2
    assert path_bound(5) == 5
    assert path_bound(3) == 3  # 18/5 - 1 = 2.6
    assert mono_bound(3, 1) == 3  # 28/9 - 1
    assert prop_upper_path(3, 3) == 10 and prop_upper_path(2, 3) == 4


def test_thm2_tight_on_tilde():
    r = check_thm_2dplus1(gen_tilde(2, 3), "tilde")
    assert r.verdict == "pass" and r.branch == "path" and r.tight
    assert r.quantities["longest_path"] == 4 and r.bound == 4
    r = check_thm_2dplus1(rainbow_complete(5))
    assert r.passed


def test_thm2_precondition():
    with pytest.raises(PreconditionError):
        check_thm_2dplus1(EdgeColouredGraph(3, [(0, 1, 0), (1, 2, 1)]))


def test_thm_kd_and_cor():
    r = check_thm_kd(gen_tilde(3, 3), 3)
    assert r.passed and r.branch == "cycle"
    with pytest.raises(PreconditionError):
        check_thm_kd(gen_tilde(3, 3), 2)
    r = check_cor_k3(gen_tilde(2, 3))
    assert r.passed and r.quantities["yeo_acyclic"] is True and r.branch == "path"


def test_thm_path_on_hat():
    r = check_thm_path(gen_hat(5, 9))
    assert r.bound == 5 and r.passed


def test_thm_mono():
    r = check_thm_mono(gen_counterexample_mono(3, 1))
    assert r.bound == 3 and r.passed and r.quantities["mono_min_degree"] == 1
    with pytest.raises(PreconditionError):
        check_thm_mono(EdgeColouredGraph(4, [(0, 1, 0), (2, 3, 1)]))
    with pytest.raises(PreconditionError):
        check_thm_mono(EdgeColouredGraph(3, [(0, 1, 0), (1, 2, 0)]))


def test_prop_upper():
    r = check_prop_upper(2, 3, 3)
    assert r.passed and r.quantities["longest_path"] == 4
    with pytest.raises(PreconditionError):
        check_prop_upper(4, 3, 4)


def test_inexact_runs_are_inconclusive_not_failures():
    g = rainbow_complete(9)
    r = check_thm_path(g, budget=3)
    assert r.verdict in ("pass", "inconclusive")
    r = conj_kd_report(g, 3, offset=1000, budget=3)
    assert r.verdict in ("pass", "inconclusive")


def test_report_json_schema():
    r = check_thm_2dplus1(gen_tilde(2, 2), "t")
    d = json.loads(r.to_json())
    assert d["schema"] == SCHEMA
    assert set(d) == {"schema", "theorem", "instance", "quantities", "bound", "verdict", "branch", "tight",
                      "witness", "exact", "notes"}
    assert isinstance(r, VerificationReport)


def test_random_thm2_sample():
    rng = random.Random(4)
    for _ in range(40):
        g = gen_random_min_cdeg(rng.randint(3, 9), 2, rng.randint(3, 5), rng.randrange(10**6), 0.3)
        assert check_thm_2dplus1(g).verdict == "pass"


def test_conjecture_reports():
    assert conj_path_report(gen_hat(4, 10)).passed
    with pytest.raises(PreconditionError):
        conj_path_report(EdgeColouredGraph(4, [(0, 1, 0), (2, 3, 1)]))
    assert conj_kd_report(gen_tilde(2, 3), 3).passed
    assert conj_kd_report(gen_tilde(2, 3), 3, offset=1).verdict == "fail"


def test_hunt_detects_shifted_bound():
    res = conjecture_search("k<d", max_n=10, budget=50, offset=1, families=("recursive",),
                            random_instances_enabled=False)
    assert res.counterexample is not None and res.report.verdict == "fail"
    clean = conjecture_search("k<d", max_n=10, budget=50, families=("recursive",), random_instances_enabled=False)
    assert clean.counterexample is None and clean.checked > 0


def test_hunt_conj_path_small():
    res = conjecture_search("path", max_n=6, budget=80, seed=1, max_cdeg=3)
    assert res.counterexample is None and res.checked > 0


def test_run_parallel_keeps_order():
    items = list(range(7))
    assert run_parallel(abs, items, jobs=2) == items
    assert run_parallel(abs, items, jobs=1) == items
