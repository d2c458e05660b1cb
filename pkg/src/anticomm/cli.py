"""Command-line front end.  Every subcommand prints one JSON report.

The exit status is 0 exactly when every oracle comparison in the report
holds; invalid parameters give status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import algebra as alg
from . import crosscheck
from .count import CountSpec, count_hyperplane_closed_form, count_subalgebras_formula, telescoping_check
from .crosscheck import Comparison, geometric_count_with_reseeds
from .dualdeg import (
    WeightParams,
    bgg_normalization,
    bracket_degree,
    dual_degree_closed_form,
    dual_degree_weight_two,
    kleiman_degree,
)
from .enumerate.regular import pentahedral_suite
from .enumerate.systems import PositiveDimensionalError
from .exact import GF, QQ, PrimeField

SCHEMA = 1


def _report(command, parameters, results, comparisons, seeds=None, timings=None):
    return {
        "schema": SCHEMA,
        "command": command,
        "parameters": parameters,
        "results": results,
        "oracle_comparisons": [c.to_json() for c in comparisons],
        "seeds": seeds or [],
        "timings": timings or {},
    }


def cmd_count(args):
    spec = CountSpec(args.n, args.k)
    value = count_subalgebras_formula(spec)
    results = {"count": str(value)}
    comparisons = []
    if args.k == args.n - 2:
        closed = count_hyperplane_closed_form(args.n)
        results["closed_form"] = str(closed)
        results["telescoping_chain"] = telescoping_check(args.n)
        comparisons.append(Comparison("count = (2^n - (-1)^n)/3", value, closed))
        comparisons.append(Comparison("telescoping chain agrees", results["telescoping_chain"], True))
    return results, comparisons, []


def cmd_dual_degree(args):
    w = WeightParams(args.a, args.b)
    kl = kleiman_degree(args.n, w)
    br = bracket_degree(args.n, w)
    results = {"kleiman": str(kl), "bracket": str(br), "degenerate_weight": w.degenerate}
    comparisons = [Comparison("kleiman = bracket", kl, br)]
    if args.b == 1 and args.a >= 2:
        cf = dual_degree_closed_form(args.n, args.a)
        results["closed_form"] = str(cf)
        comparisons.append(Comparison("kleiman = closed form", kl, cf))
        if args.a == 2 and args.n >= 4:
            e3 = dual_degree_weight_two(args.n)
            results["cubic_formula"] = str(e3)
            comparisons.append(Comparison("kleiman = cubic formula", kl, e3))
    return results, comparisons, []


def cmd_bgg(args):
    value = bgg_normalization(args.n)
    return {"normalization": str(value)}, [Comparison("A_w0 normalization = 1", value, 1)], []


def cmd_enumerate(args):
    field = PrimeField(args.field)
    m = args.m if args.m is not None else args.k + 1
    got, tried, res = geometric_count_with_reseeds(
        args.n, args.k, args.seed, m=m, field=field, zero_trace=args.zero_trace, reseeds=args.reseeds
    )
    results = {"m": m}
    comparisons = []
    if isinstance(res, PositiveDimensionalError):
        results.update({"count": None, "positive_dimensional": True, "chart": list(res.chart), "krull_dim": res.krull_dim})
    else:
        results.update(res.to_json())
        results["count"] = str(res.total)
        formula_applies = m == args.k + 1 and 1 < args.k < args.n - 1 and args.zero_trace
        if formula_applies:
            comparisons.append(
                Comparison("geometric count = Chern formula", res.total if got is not None else None, count_subalgebras_formula((args.n, args.k)))
            )
    return results, comparisons, tried


def cmd_pentahedral(args):
    rep = pentahedral_suite(args.seed, attempts=args.reseeds)
    comparisons = [Comparison(f"probe {p.name} passes", p.passed, True) for p in rep.probes]
    seeds = list(range(args.seed, args.seed + rep.attempts))
    return rep.to_json(), comparisons, seeds


def cmd_crosscheck(args):
    comparisons, timings = crosscheck.run_all(quick=not args.full)
    results = {"mode": "full" if args.full else "quick", "checks": [name for name, _ in crosscheck.CHECKS]}
    return results, comparisons, [], timings


def _field_arg(text):
    if text.upper() == "Q":
        return QQ
    return PrimeField(int(text))


def cmd_algebra(args):
    if args.action == "gen":
        field = _field_arg(args.field)
        A = alg.random_algebra(args.n, args.k, field, seed=args.seed, zero_trace=args.zero_trace)
        text = A.dumps()
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        results = {"algebra": A.to_json(), "written_to": args.out}
        return results, [], [args.seed]
    with open(args.file) as fh:
        A = alg.AnticommAlgebra.loads(fh.read())
    tau = alg.trace_form(A)
    results = {
        "algebra": A.to_json(),
        "zero_trace": tau.is_zero(),
        "trace_form": {",".join(map(str, I)): A.field.to_str(v) for I, v in tau.values.items()},
    }
    return results, [], []


def build_parser():
    ap = argparse.ArgumentParser(prog="anticomm", description=__doc__.splitlines()[0])
    ap.add_argument("--no-timings", action="store_true", help="omit timings for byte-stable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="subalgebra count from the Chern class formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("dual-degree", help="degree of the dual flag variety")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, default=1)
    p.set_defaults(func=cmd_dual_degree)

    p = sub.add_parser("enumerate", help="count subalgebras of a random algebra over F_p")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--field", type=int, default=GF().p)
    p.add_argument("--zero-trace", action="store_true")
    p.add_argument("--reseeds", type=int, default=crosscheck.RESEEDS)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("pentahedral", help="build and probe a regular (4,2) algebra")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--reseeds", type=int, default=crosscheck.RESEEDS)
    p.set_defaults(func=cmd_pentahedral)

    p = sub.add_parser("bgg", help="divided-difference normalization")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bgg)

    p = sub.add_parser("crosscheck", help="run the whole comparison matrix")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--quick", action="store_true", help="reduced ranges (default)")
    g.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("algebra", help="generate or inspect algebra JSON files")
    asub = p.add_subparsers(dest="action", required=True)
    q = asub.add_parser("gen")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--field", default=str(GF().p), help="a prime, or Q")
    q.add_argument("--zero-trace", action="store_true")
    q.add_argument("--out")
    q = asub.add_parser("show")
    q.add_argument("file")
    p.set_defaults(func=cmd_algebra)
    return ap


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k not in ("func", "no_timings")}
    t0 = time.perf_counter()
    try:
        outcome = args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as err:
        report = _report(args.command, params, {"error": str(err)}, [])
        if args.no_timings:
            del report["timings"]
        print(json.dumps(report, indent=1, sort_keys=True), file=out)
        return 2
    results, comparisons, seeds = outcome[:3]
    timings = outcome[3] if len(outcome) > 3 else {}
    timings = dict(timings, total=round(time.perf_counter() - t0, 3))
    report = _report(args.command, params, results, comparisons, seeds, None if args.no_timings else timings)
    if args.no_timings:
        del report["timings"]
    print(json.dumps(report, indent=1, sort_keys=True), file=out)
    return 0 if all(c.equal for c in comparisons) else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
