"""Command-line front end: ``pcpaths <command> ...``.

Exit codes:

    0  success / check passed / no counterexample
    2  check failed
    3  check inconclusive (oracle budget exhausted)
    4  counterexample found by ``hunt``
    5  malformed or unreadable ECG input
    6  invalid path, rotation, or parameters
    64 command-line usage error
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import ecg
from . import generators as gen
from .graph import GraphError
from .oracle import longest_pc_cycle, longest_pc_path
from .rotation import (
    RotationError,
    closure_R,
    closure_Rprime,
    f_positional,
    g_positional,
    reflect,
    rotate_f,
    rotate_g,
)
from .verify import (
    FAMILIES,
    PreconditionError,
    check_cor_k3,
    check_prop_upper,
    check_thm_2dplus1,
    check_thm_kd,
    check_thm_mono,
    check_thm_path,
    conjecture_search,
    run_parallel,
)
from .yeo import certify_acyclic

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_INCONCLUSIVE = 3
EXIT_COUNTEREXAMPLE = 4
EXIT_BAD_FILE = 5
EXIT_BAD_INPUT = 6
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _read_graph(path: str | None):
    try:
        if path in (None, "-"):
            return ecg.loads(sys.stdin.read())
        return ecg.read(path)
    except OSError as exc:
        raise ecg.ECGFormatError(str(exc)) from None


def _parse_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
    except ValueError:
        raise RotationError("invalid tuple", text) from None


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


# -- commands -------------------------------------------------------------


def cmd_gen(args) -> int:
    fam, p = args.family, args.params
    need = {"tilde": 2, "hat": 2, "recursive": 3, "mono-counterexample": 2,
            "rainbow-complete": 1, "proper-complete": 1, "random": 3}[fam]
    if len(p) != need:
        raise gen.ParameterError(f"{fam} takes {need} integer parameters, got {len(p)}")
    if fam == "tilde":
        g = gen.gen_tilde(*p)
    elif fam == "hat":
        g = gen.gen_hat(*p)
    elif fam == "recursive":
        g = gen.gen_recursive(*p)
    elif fam == "mono-counterexample":
        g = gen.gen_counterexample_mono(*p, y_size=args.y_size)
    elif fam == "rainbow-complete":
        g = gen.rainbow_complete(*p)
    elif fam == "proper-complete":
        g, _ = gen.gen_proper_complete(*p)
    else:
        g = gen.gen_random_min_cdeg(*p, seed=args.seed, density=args.density)
    _emit(ecg.dumps(g), args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _read_graph(args.file)
    res = longest_pc_path(g, args.budget) if args.kind == "path" else longest_pc_cycle(g, args.budget)
    exactness = "exact" if res.exact else "inexact (budget exhausted)"
    if res.witness is None:
        print(f"no p.c. cycle, {exactness}")
    else:
        print(f"length {res.length}, {exactness}")
        print("witness " + ",".join(map(str, res.witness)))
    return EXIT_OK


def cmd_rotate(args) -> int:
    p = _parse_tuple(args.path)
    g = None if args.positional and args.file is None else _read_graph(args.file)
    for op in args.op or []:
        name, _, arg = op.partition(":")
        if name == "reflect":
            p = reflect(p)
            continue
        try:
            k = int(arg)
        except ValueError:
            raise RotationError("invalid operation", op) from None
        if name == "f":
            p = f_positional(p, k) if args.positional else rotate_f(g, p, k)
        elif name == "g":
            p = g_positional(p, k) if args.positional else rotate_g(g, p, k)
        else:
            raise RotationError("invalid operation", op)
    print(",".join(map(str, p)))
    return EXIT_OK


def cmd_closure(args) -> int:
    g = _read_graph(args.file)
    p = _parse_tuple(args.path)
    cl = closure_Rprime(g, p, args.cap) if args.prime else closure_R(g, p, args.cap)
    xs, ys = cl.endpoints()
    label = "R'(P)" if args.prime else "R(P)"
    print(f"|{label}| = {len(cl)}{'' if cl.complete else ' (truncated at cap)'}")
    print("X(P) = " + ",".join(map(str, sorted(xs))))
    print("Y(P) = " + ",".join(map(str, sorted(ys))))
    return EXIT_OK


def cmd_yeo(args) -> int:
    g = _read_graph(args.file)
    res = certify_acyclic(g)
    if res.acyclic:
        print(f"no p.c. cycle; certificate chain of {len(res.chain)} steps")
        for part, cert in res.chain:
            comps = "; ".join(
                f"{{{','.join(map(str, sorted(c)))}}}:{'-' if col is None else col}" for c, col in cert.components
            )
            print(f"  on {{{','.join(map(str, sorted(part)))}}}: z={cert.z} components [{comps}]")
    else:
        print("p.c. cycle " + ",".join(map(str, res.cycle)))
    return EXIT_OK


def _run_check(job):
    spec, label, text, budget = job
    g = ecg.loads(text)
    name, _, arg = spec.partition(":")
    if name == "thm2":
        return check_thm_2dplus1(g, label, budget)
    if name == "thm3":
        return check_thm_kd(g, int(arg or 3), label, budget)
    if name == "cor3":
        return check_cor_k3(g, label, budget)
    if name == "thm6":
        return check_thm_path(g, label, budget)
    if name == "thm8":
        return check_thm_mono(g, label, budget)
    raise UsageError(f"unknown check {spec!r}")


def cmd_check(args) -> int:
    name, _, arg = args.spec.partition(":")
    if name == "prop4":
        try:
            d, k, p = (int(x) for x in arg.split(","))
        except ValueError:
            raise UsageError("prop4 expects prop4:d,k,p") from None
        reports = [check_prop_upper(d, k, p, args.budget)]
    else:
        if name not in ("thm2", "thm3", "cor3", "thm6", "thm8"):
            raise UsageError(f"unknown check {args.spec!r}")
        files = args.files or ["-"]
        jobs = [(args.spec, "stdin" if f == "-" else f, ecg.dumps(_read_graph(f)), args.budget) for f in files]
        reports = run_parallel(_run_check, jobs, args.jobs)
    for rep in reports:
        print(rep.to_json())
    verdicts = {r.verdict for r in reports}
    if "fail" in verdicts:
        return EXIT_FAIL
    if "inconclusive" in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_hunt(args) -> int:
    which = {"conj5": "k<d", "conj7": "path"}[args.conjecture]
    families = tuple(args.families.split(",")) if args.families else FAMILIES
    res = conjecture_search(
        which, max_n=args.max_n, budget=args.budget, seed=args.seed, k=args.k, offset=args.offset,
        max_cdeg=args.max_cdeg, families=families, random_instances_enabled=not args.families_only,
        oracle_budget=args.oracle_budget,
    )
    summary = {"conjecture": args.conjecture, "checked": res.checked, "skipped": res.skipped,
               "inconclusive": res.inconclusive, "counterexample": res.counterexample is not None}
    if res.counterexample is None:
        print(json.dumps(summary, sort_keys=True))
        return EXIT_OK
    ecg.write(res.counterexample, args.output)
    summary["file"] = args.output
    print(json.dumps(summary, sort_keys=True))
    print(res.report.to_json())
    return EXIT_COUNTEREXAMPLE


def cmd_export_dot(args) -> int:
    g = _read_graph(args.file)
    _emit(ecg.to_dot(g), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="pcpaths", description="Properly coloured paths and cycles in edge-coloured graphs.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="emit a generated graph in ECG v1")
    p.add_argument("family", choices=["tilde", "hat", "recursive", "mono-counterexample",
                                      "rainbow-complete", "proper-complete", "random"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--y-size", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="exact longest p.c. path or cycle")
    p.add_argument("kind", choices=["path", "cycle"])
    p.add_argument("file", nargs="?")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("rotate", help="apply rotations f:i, g:j, reflect in order")
    p.add_argument("file", nargs="?")
    p.add_argument("--path", required=True)
    p.add_argument("--op", action="append", help="f:i | g:j | reflect (repeatable)")
    p.add_argument("--positional", action="store_true", help="apply bare permutations, no colour checks")
    p.set_defaults(func=cmd_rotate)

    p = sub.add_parser("closure", help="size of R(P) or R'(P) and endpoint sets")
    p.add_argument("file", nargs="?")
    p.add_argument("--path", required=True)
    p.add_argument("--cap", type=int, default=100_000)
    p.add_argument("--prime", action="store_true", help="rotations only")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("yeo", help="certificate chain or p.c. cycle witness")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_yeo)

    p = sub.add_parser("check", help="verify a bound, JSON-lines report")
    p.add_argument("spec", help="thm2 | thm3:k | cor3 | thm6 | thm8 | prop4:d,k,p")
    p.add_argument("files", nargs="*")
    p.add_argument("--budget", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hunt", help="bounded conjecture counterexample search")
    p.add_argument("conjecture", choices=["conj5", "conj7"])
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=500, help="instances to examine")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--offset", type=int, default=0, help="add to the conjectured path bound")
    p.add_argument("--max-cdeg", type=int)
    p.add_argument("--families", help="comma list of tilde,hat,recursive,rainbow")
    p.add_argument("--families-only", action="store_true")
    p.add_argument("--oracle-budget", type=int)
    p.add_argument("--jobs", type=int, default=1, help="accepted for symmetry; the hunt stops at the first hit")
    p.add_argument("-o", "--output", default="counterexample.ecg")
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("export-dot", help="Graphviz DOT export")
    p.add_argument("file", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except ecg.ECGFormatError as exc:
        print(f"error: malformed ECG input: {exc}", file=sys.stderr)
        return EXIT_BAD_FILE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
