"""Command-line front end: verify axiom suites and evaluate expressions.

    hopfsmash verify --algebra sl2 --suite all --dmax 3 --rmax 2 \
        --mode heuristic:6 --seed 0 --json report.json
    hopfsmash eval --algebra solvable2 "X2*X1"

Exit codes: 0 all pass, 1 any fail, 2 inconclusive only, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .lie import (BUILTIN_NAMES, LieAlgebra, LieStructureError, adjoint_matrix,
                  builtin, lie_from_json, modular_vector, validate_structure)
from .dual import check_theorem61, parse_mode
from .smash import yd_suite
from .algebroid import algebroid_suite
from .exprs import ExprError, eval_expr
from .report import CheckRecord, Report, timed

SUITES = ("validate", "theorem61", "yd", "algebroid")


@dataclass
class SuiteConfig:
    """What to verify, and at which bounds."""

    source: str
    suites: tuple = SUITES
    dmax: int = 3
    rmax: int = 2
    mode: str = "heuristic:6"
    seed: int = 0
    dim_cap: int = 512

    def __post_init__(self):
        if self.dmax < 1 or self.rmax < 1:
            raise ValueError("dmax and rmax must be >= 1")
        kind, degree = parse_mode(self.mode)
        if kind == "heuristic" and degree < self.dmax:
            raise ValueError("heuristic degree must be >= dmax")
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ValueError(f"unknown suites: {bad}")


def load_algebra(source: str) -> LieAlgebra:
    """A catalog name or a JSON file path; always validated."""
    if source in BUILTIN_NAMES:
        return builtin(source)
    try:
        with open(source, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise LieStructureError(
            f"{source!r} is neither a catalog name ({', '.join(BUILTIN_NAMES)}) "
            f"nor a readable file")
    except json.JSONDecodeError as exc:
        raise ExprError(f"{source}: JSON parse error at line {exc.lineno}, "
                        f"column {exc.colno}: {exc.msg}")
    return lie_from_json(data)


def validate_suite(alg: LieAlgebra):
    """Re-check the Lie axioms and the adjoint representation identity."""
    recs = []
    with timed() as t:
        try:
            validate_structure([[list(r) for r in plane] for plane in alg.c], alg.n,
                               labels=alg.labels, name=alg.name)
            ok, wit = True, None
        except LieStructureError as exc:
            ok, wit = False, (str(exc), "")
    recs.append(CheckRecord(suite="validate", code="lie-axioms",
                            instance="antisymmetry and Jacobi",
                            status="pass" if ok else "fail", witness=wit, ms=t.ms))
    with timed() as t:
        bad = None
        n = alg.n
        ads = [adjoint_matrix(alg, k) for k in range(1, n + 1)]

        def mat_mul(a, b):
            return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
                    for i in range(n)]

        for i in range(n):
            for j in range(n):
                comm = mat_mul(ads[i], ads[j])
                rev = mat_mul(ads[j], ads[i])
                want = [[sum(alg.c[k][i][j] * ads[k][a][b] for k in range(n))
                         for b in range(n)] for a in range(n)]
                got = [[comm[a][b] - rev[a][b] for b in range(n)] for a in range(n)]
                if got != want:
                    bad = (f"[ad X{i + 1}, ad X{j + 1}]", "sum_k C^k_ij ad X_k")
    recs.append(CheckRecord(suite="validate", code="adjoint-rep",
                            instance="ad is a Lie algebra representation",
                            status="pass" if bad is None else "fail",
                            witness=bad, ms=t.ms))
    with timed() as t:
        c = modular_vector(alg)
    recs.append(CheckRecord(suite="validate", code="modular",
                            instance="modular vector c = (" + ", ".join(map(str, c)) + ")",
                            status="pass", witness=None, ms=t.ms))
    return recs


def run_suite(cfg: SuiteConfig) -> Report:
    """Deterministic given (algebra, config, seed); see Report.exit_code."""
    meta = {"tool": "hopfsmash", "version": __version__, "algebra": cfg.source,
            "suites": list(cfg.suites), "dmax": cfg.dmax, "rmax": cfg.rmax,
            "mode": cfg.mode, "seed": cfg.seed, "dim_cap": cfg.dim_cap}
    report = Report(meta=meta)
    try:
        alg = load_algebra(cfg.source)
    except LieStructureError as exc:
        # a structurally invalid algebra is a check failure, not a crash
        report.extend([CheckRecord(suite="validate", code="lie-axioms",
                                   instance=f"load {cfg.source}", status="fail",
                                   witness=(str(exc), ""), ms=0.0)])
        return report
    meta["algebra_name"] = alg.name or cfg.source
    if "validate" in cfg.suites:
        report.extend(validate_suite(alg))
    if "theorem61" in cfg.suites:
        report.extend(check_theorem61(alg, dim_cap=cfg.dim_cap))
    if "yd" in cfg.suites:
        report.extend(yd_suite(alg, dmax=cfg.dmax, rmax=cfg.rmax, mode=cfg.mode,
                               seed=cfg.seed, dim_cap=cfg.dim_cap))
    if "algebroid" in cfg.suites:
        report.extend(algebroid_suite(alg, dmax=cfg.dmax, rmax=cfg.rmax,
                                      mode=cfg.mode, seed=cfg.seed,
                                      dim_cap=cfg.dim_cap))
    return report


def _build_parser():
    ps = argparse.ArgumentParser(prog="hopfsmash", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ps.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run axiom suites and report")
    pv.add_argument("--algebra", required=True,
                    help=f"catalog name ({', '.join(BUILTIN_NAMES)}) or JSON file")
    pv.add_argument("--suite", default="all",
                    help="all or comma list of: " + ", ".join(SUITES))
    pv.add_argument("--dmax", type=int, default=3, help="PBW degree bound")
    pv.add_argument("--rmax", type=int, default=2, help="dual monomial length bound")
    pv.add_argument("--mode", default="heuristic:6",
                    help="equality mode: heuristic:D or exact")
    pv.add_argument("--seed", type=int, default=0, help="seed for sampled instances")
    pv.add_argument("--dim-cap", type=int, default=512,
                    help="representation dimension cap for exact equality")
    pv.add_argument("--json", metavar="PATH", help="write the JSON report here")
    pv.add_argument("--verbose", action="store_true", help="print passing checks too")

    pe = sub.add_parser("eval", help="evaluate an expression to normal form")
    pe.add_argument("--algebra", required=True)
    pe.add_argument("expression")
    return ps


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "eval":
        try:
            alg = load_algebra(args.algebra)
            print(eval_expr(alg, args.expression))
        except (ExprError, LieStructureError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
        return 0

    suites = SUITES if args.suite == "all" else tuple(args.suite.split(","))
    try:
        cfg = SuiteConfig(source=args.algebra, suites=suites, dmax=args.dmax,
                          rmax=args.rmax, mode=args.mode, seed=args.seed,
                          dim_cap=args.dim_cap)
        report = run_suite(cfg)
    except (ExprError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    for line in report.human_lines(verbose=args.verbose):
        print(line)
    if args.json:
        report.dump_json(args.json)
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
