"""Batch front end: compute amplitude series, expand coefficients, run the
check suite, and print comparison tables.

Every command is deterministic: identical flags produce byte-identical
output.  The check command exits nonzero when any check misses its expected
verdict.
"""

import argparse
import json
import sys

from .amplitude import AmplitudeSpec, closed_amplitude, normalize, open_amplitude
from .analysis import SuiteRunner, summary_table
from .partitions import parse_partition
from .ring import ExpansionError, expand, rf_equal

DEFAULT_CUTOFF_CEILING = 4
DEFAULT_QORDER_CEILING = 20


def emit_text(series):
    """Aligned text for a bidegree series: graded-lex rows '(r,s): value'."""
    rows = series.support()
    if not rows:
        return "0"
    if rows == [(0, 0)] and series.coeffs[(0, 0)].is_one():
        return "1"
    lines = []
    for rs in rows:
        lines.append(f"({rs[0]},{rs[1]}): {series.coeffs[rs].text()}")
    return "\n".join(lines)


def _spec_from_args(args):
    alpha = parse_partition(args.alpha)
    gamma = parse_partition(args.gamma)
    geometry = args.geometry.replace("-", "_")
    return AmplitudeSpec(geometry=geometry, alpha=alpha, gamma=gamma,
                         refined=args.refined, cutoff=args.cutoff,
                         q_order=getattr(args, "q_order", 20))


def _check_ceilings(args, parser):
    if args.cutoff > args.max_cutoff:
        parser.error(f"cutoff {args.cutoff} above ceiling {args.max_cutoff} "
                     f"(raise with --max-cutoff)")
    q_order = getattr(args, "q_order", None)
    if q_order is not None and q_order > args.max_q_order:
        parser.error(f"q-order {q_order} above ceiling {args.max_q_order} "
                     f"(raise with --max-q-order)")


def cmd_compute(args, parser):
    _check_ceilings(args, parser)
    spec = _spec_from_args(args)
    series = open_amplitude(spec)
    normalized = not args.raw and (spec.alpha or spec.gamma)
    if normalized:
        series = normalize(series, closed_amplitude(spec.refined, spec.cutoff,
                                                    spec.geometry))
    if args.output == "json":
        doc = {
            "command": "compute",
            "geometry": spec.geometry,
            "alpha": str(spec.alpha), "gamma": str(spec.gamma),
            "refined": spec.refined, "cutoff": spec.cutoff,
            "normalized": bool(normalized),
            "series": series.to_json(),
        }
        print(json.dumps(doc, indent=1, sort_keys=True))
    else:
        print(emit_text(series))
    return 0


def cmd_expand(args, parser):
    _check_ceilings(args, parser)
    spec = _spec_from_args(args)
    try:
        r, s = (int(x) for x in args.coeff.split(","))
    except ValueError:
        parser.error(f"--coeff must look like 'r,s', got {args.coeff!r}")
    if r + s > spec.cutoff:
        parser.error(f"coefficient ({r},{s}) beyond cutoff {spec.cutoff}")
    series = open_amplitude(spec)
    if not args.raw and (spec.alpha or spec.gamma):
        series = normalize(series, closed_amplitude(spec.refined, spec.cutoff,
                                                    spec.geometry))
    rf = series.coeff(r, s)
    try:
        ser = expand(rf, args.q_order)
    except ExpansionError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    if args.output == "json":
        doc = {
            "command": "expand", "coeff": [r, s], "q_order": args.q_order,
            "series": ser.to_json(),
        }
        print(json.dumps(doc, indent=1, sort_keys=True))
    else:
        print(ser.text())
    return 0


def cmd_check(args, parser):
    runner = SuiteRunner(fixtures_dir=args.fixtures_dir,
                         q_order=min(args.q_order, args.max_q_order),
                         deep_cutoff=min(4, args.max_cutoff))
    pattern = None if args.suite in ("all", "*") else args.suite
    entries = runner.run(pattern)
    if not entries:
        parser.error(f"no checks match {args.suite!r}")
    if args.output == "json":
        doc = [dict(e.report.to_json(), expected=e.expected, ok=e.ok)
               for e in entries]
        print(json.dumps(doc, indent=1, sort_keys=True))
    else:
        print(summary_table(entries))
    return 0 if all(e.ok for e in entries) else 1


def cmd_compare(args, parser):
    _check_ceilings(args, parser)
    if args.mode == "reduction":
        spec_r = _spec_from_args(args)
        regular = open_amplitude(AmplitudeSpec(
            geometry=spec_r.geometry, alpha=spec_r.alpha, gamma=spec_r.gamma,
            refined=False, cutoff=spec_r.cutoff))
        refined = open_amplitude(AmplitudeSpec(
            geometry=spec_r.geometry, alpha=spec_r.alpha, gamma=spec_r.gamma,
            refined=True, cutoff=spec_r.cutoff))
        if not args.raw and (spec_r.alpha or spec_r.gamma):
            regular = normalize(regular, closed_amplitude(False, spec_r.cutoff,
                                                          spec_r.geometry))
            refined = normalize(refined, closed_amplitude(True, spec_r.cutoff,
                                                          spec_r.geometry))
        reduced = refined.substitute_t_eq_q()
        lines = []
        for rs in sorted(regular.determined, key=lambda rs: (rs[0] + rs[1], rs)):
            a = regular.coeffs.get(rs)
            b = reduced.coeffs.get(rs)
            if a is None and b is None:
                continue
            same = (a is None) == (b is None) and (a is None or rf_equal(a, b))
            lines.append(f"({rs[0]},{rs[1]}): {'equal' if same else 'DIFFER'}  "
                         f"{(a or b).text()}")
        print("\n".join(lines))
        return 0

    # geometries: the square graph against the single-edge one
    local_spec = AmplitudeSpec(alpha=parse_partition(args.alpha),
                               gamma=parse_partition(args.gamma),
                               refined=args.refined, cutoff=args.cutoff)
    local = normalize(open_amplitude(local_spec),
                      closed_amplitude(args.refined, args.cutoff))
    con_spec = AmplitudeSpec(geometry="resolved_conifold",
                             alpha=local_spec.alpha, gamma=local_spec.gamma,
                             refined=args.refined, cutoff=args.cutoff)
    con = normalize(open_amplitude(con_spec),
                    closed_amplitude(args.refined, args.cutoff,
                                     "resolved_conifold"))
    lines = []
    for r in range(args.cutoff + 1):
        a = local.coeffs.get((r, 0))
        b = con.coeffs.get((r, 0))
        if a is None and b is None:
            relation = "both zero"
        elif a is None or b is None:
            relation = "one zero"
        elif rf_equal(a, b):
            relation = "equal"
        elif rf_equal(a, -b):
            relation = "opposite"
        else:
            relation = "differ"
        lines.append(f"({r},0): {relation}")
        lines.append(f"    square graph: {a.text() if a else '0'}")
        lines.append(f"    single edge : {b.text() if b else '0'}")
    print("\n".join(lines))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rp3vertex",
        description="Exact vertex partition-function series on the square "
                    "toric geometry, with fixture and conjecture checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, q_order_default=20):
        p.add_argument("--geometry", default="local-p1xp1",
                       choices=["local-p1xp1", "resolved-conifold"])
        p.add_argument("--alpha", default="[]",
                       help="first color, bracket form like [1,1]")
        p.add_argument("--gamma", default="[]", help="second color")
        p.add_argument("--refined", action="store_true",
                       help="two-parameter mode")
        p.add_argument("--cutoff", type=int, default=3,
                       help="total degree cutoff in the gluing weights")
        p.add_argument("--q-order", dest="q_order", type=int,
                       default=q_order_default)
        p.add_argument("--raw", action="store_true",
                       help="skip the closed-string normalization")
        p.add_argument("--output", choices=["json", "text"], default="text")
        p.add_argument("--max-cutoff", type=int, default=DEFAULT_CUTOFF_CEILING)
        p.add_argument("--max-q-order", type=int, default=DEFAULT_QORDER_CEILING)

    p = sub.add_parser("compute", help="emit one amplitude series")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("expand", help="q-expand one coefficient")
    common(p)
    p.add_argument("--coeff", required=True, metavar="r,s",
                   help="bidegree to expand")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("check", help="run the fixture and conjecture suite")
    p.add_argument("--suite", default="all",
                   help="check id glob, e.g. 'fixture:*' (default: all)")
    p.add_argument("--fixtures-dir", default=None)
    p.add_argument("--q-order", dest="q_order", type=int, default=20)
    p.add_argument("--output", choices=["json", "text"], default="text")
    p.add_argument("--max-cutoff", type=int, default=DEFAULT_CUTOFF_CEILING)
    p.add_argument("--max-q-order", type=int, default=DEFAULT_QORDER_CEILING)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compare", help="side-by-side tables")
    common(p)
    p.add_argument("--mode", choices=["reduction", "geometries"],
                   default="reduction")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ValueError as err:
        parser.error(str(err))


if __name__ == "__main__":
    sys.exit(main())
