"""Command-line front end: decomposition queries, branching tables,
verification campaigns, self test.

Exit codes: 0 success, 2 theorem/consistency violation, 3 inconclusive where
exactness was required, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import branchcalc as bc
from . import selftest as selftest_mod
from . import weightlab as wl
from .verify.reporting import (EXIT_USAGE, EXIT_VIOLATION, ConfigError,
                               ExperimentConfig)
from .verify.campaigns import run_campaign


class UsageError(SystemExit):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_lambda(text: str, n: int):
    try:
        entries = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise SystemExit(_usage(f"cannot parse weight {text!r}"))
    try:
        ok = wl.validate_highest_weight(n, entries)
    except wl.WeightError as exc:
        raise SystemExit(_usage(str(exc)))
    if not ok:
        raise SystemExit(_usage(f"{entries} is not a valid highest weight for SO({n})"))
    return entries


def _usage(msg: str) -> int:
    print(f"valharm: error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _emit_table(rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=1, sort_keys=True))
        return
    if not rows:
        print("(empty)")
        return
    headers = list(rows[0])
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(headers)
        for row in rows:
            writer.writerow([row[h] for h in headers])
        sys.stdout.write(out.getvalue())
        return
    widths = [max(len(str(h)), max(len(str(r[h])) for r in rows)) for h in headers]
    print("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
    for row in rows:
        print("  ".join(str(row[h]).ljust(w) for h, w in zip(headers, widths)))


def cmd_decompose(args) -> int:
    n, i, cap = args.n, args.i, args.cap
    if n < 3 or not 0 <= i <= n:
        return _usage(f"need n >= 3 and 0 <= i <= n, got n={n}, i={i}")
    rows = []
    for lam in bc.enumerate_val_weights(n, i, cap):
        reality = bc.reality_classification(n, lam)
        lift = bc.on_lift_classification(n, lam)
        rows.append({
            "lambda": ",".join(str(x) for x in lam),
            "dimension": wl.dimension(n, lam),
            "reality": reality.kind + ("" if reality.partner is None
                                       else " with " + ",".join(map(str, reality.partner))),
            "on_lift": lift.kind + ("" if lift.partner is None
                                    else " with " + ",".join(map(str, lift.partner))),
        })
    _emit_table(rows, args.format)
    return 0


def cmd_multiplicity(args) -> int:
    n, i = args.n, args.i
    if n < 3 or not 0 <= i <= n:
        return _usage(f"need n >= 3 and 0 <= i <= n, got n={n}, i={i}")
    lam = _parse_lambda(args.lam, n)
    record = {"n": n, "i": i, "lambda": list(lam)}
    if args.method in ("conditions", "both"):
        record["mult_conditions"] = bc.val_multiplicity_conditions(n, i, lam)
    if args.method in ("alternating", "both"):
        record["mult_alternating"] = bc.val_multiplicity_alternating_reduced(n, i, lam)
        record["lefschetz_degree"] = bc.reduce_by_lefschetz(n, i)
    print(json.dumps(record, indent=1, sort_keys=True))
    if args.method == "both" and record["mult_conditions"] != record["mult_alternating"]:
        print("valharm: the two multiplicity computations disagree", file=sys.stderr)
        return EXIT_VIOLATION
    return 0


def cmd_branch(args) -> int:
    n = args.n
    if n < 4:
        return _usage("branching needs n >= 4")
    lam = _parse_lambda(args.lam, n)
    blist = bc.branch_restriction(n, lam)
    if args.format == "json":
        print(json.dumps(blist.to_json(), indent=1, sort_keys=True))
    else:
        rows = [{"mu": ",".join(map(str, mu)),
                 "dimension": wl.dimension(n - 1, mu) if n - 1 >= 3 else 1}
                for mu in blist.children]
        _emit_table(rows, args.format)
    return 0


def cmd_tensor_dim(args) -> int:
    n, i = args.n, args.i
    if n < 3 or not 0 <= i <= n:
        return _usage(f"need n >= 3 and 0 <= i <= n, got n={n}, i={i}")
    spec = args.gamma
    m = n // 2
    if spec == "trivial":
        constituents = [((0,) * m, 1)]
    elif spec == "standard":
        constituents = [((1,) + (0,) * (m - 1), 1)]
    elif spec.startswith("sym:"):
        k = int(spec.split(":", 1)[1])
        constituents = wl.decompose_character(wl.symmetric_power_character(n, k))
    elif spec.startswith("lambda-power:"):
        k = int(spec.split(":", 1)[1])
        constituents = wl.decompose_character(wl.fundamental_character(n, k))
    elif spec.startswith("weight:"):
        lam = _parse_lambda(spec.split(":", 1)[1], n)
        constituents = [(lam, 1)]
    else:
        return _usage(f"unknown gamma spec {spec!r} "
                      "(use trivial | standard | sym:k | lambda-power:k | weight:a,b,...)")
    dim = bc.equivariant_dimension(n, i, constituents)
    print(json.dumps({"n": n, "i": i, "gamma": spec, "equivariant_dimension": dim},
                     indent=1, sort_keys=True))
    return 0


def cmd_classify(args) -> int:
    n = args.n
    if n < 3:
        return _usage("need n >= 3")
    degrees = [args.i] if args.i is not None else list(range(n + 1))
    rows = []
    for i in degrees:
        verdict = bc.bivaluation_symmetry_verdict(n, i, cap=args.cap)
        rows.append({
            "n": n,
            "i": i,
            "O(n)": bc.ALWAYS_SYMMETRIC_ON,
            "SO(n)": verdict,
            "formula_asymmetric": bc.asymmetric_pair_formula(n, i),
        })
    _emit_table(rows, args.format)
    return 0


def cmd_verify(args) -> int:
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        return _usage(f"cannot read config {args.config}: {exc}")
    try:
        cfg = ExperimentConfig.from_json(data)
    except ConfigError as exc:
        return _usage(f"bad config: {exc}")
    if args.seed is not None:
        cfg.seed = args.seed
    report = run_campaign(cfg)
    text = report.dumps()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerows(report.csv_rows())
    summary = report.summary()
    print(f"verify {cfg.campaign} i={cfg.i}: " +
          ", ".join(f"{k}={v}" for k, v in summary.items()), file=sys.stderr)
    return report.exit_code()


def cmd_selftest(args) -> int:
    wanted = None
    if args.criteria:
        try:
            wanted = sorted({int(x) for x in args.criteria.split(",")})
        except ValueError:
            return _usage(f"bad criteria list {args.criteria!r}")
    return selftest_mod.run(quick=args.quick, criteria=wanted,
                            trials_override=args.trials,
                            tamper=args.inject_tamper)


def build_parser() -> _Parser:
    parser = _Parser(prog="valharm",
                     description="Decomposition of translation invariant valuations "
                                 "into SO(n) irreducibles, and exact verification of "
                                 "the induced geometric inequalities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="irreducible constituents of Val_i")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--cap", type=int, default=4, help="bound on lambda_1")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("multiplicity", help="m(Val_i, lambda) by one or both routes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True,
                   help="comma separated weight, e.g. 2,2,-2")
    p.add_argument("--method", choices=("conditions", "alternating", "both"),
                   default="both")
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("branch", help="restriction of Gamma_lambda to SO(n-1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("tensor-dim",
                       help="dimension of the space of equivariant Gamma-valued valuations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--gamma", required=True,
                   help="trivial | standard | sym:k | lambda-power:k | weight:a,b,...")
    p.set_defaults(func=cmd_tensor_dim)

    p = sub.add_parser("classify", help="bivaluation symmetry verdicts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--cap", type=int, default=4)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run a verification campaign from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.add_argument("--csv", default=None, help="write a CSV summary here")
    p.add_argument("--seed", type=int, default=None, help="override the config seed")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--quick", action="store_true", help="reduced trial counts (< 60 s)")
    p.add_argument("--criteria", default=None, help="comma list, e.g. 1,2,10")
    p.add_argument("--trials", type=int, default=None, help=argparse.SUPPRESS)
    p.add_argument("--inject-tamper", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except bc.InternalInconsistencyError as exc:
        print(f"valharm: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
