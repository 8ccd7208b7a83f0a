"""Command-line surface: compute, bound, witness, classify, scan.

Exit codes: 0 clean, 2 theorem violation (an engine bug surfaced by a
verify scan), 3 conjecture counterexample found, 64 usage error, 65 domain
error from the library.
"""
from __future__ import annotations

import argparse
import csv
import sys

from .bounds import audit
from .core import (
    SetFamily,
    SumsetKind,
    canonical_json,
    family_of,
    parse_set_literal,
)
from .errors import (
    EngineMismatch,
    InvalidSetLiteral,
    SumsetError,
    TheoremViolation,
)
from .explorer import CSV_HEADER, ScanConfig, parse_mode, scan
from .inverse import classify_extremal
from .kernel import sumset_layered, sumset_naive
from .witness import (
    is_superincreasing,
    s_family,
    t_family,
    u_family,
    verify_family,
)

EXIT_OK = 0
EXIT_THEOREM_VIOLATION = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_USAGE = 64
EXIT_DOMAIN = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="sumsets", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: _Parser) -> None:
        p.add_argument("--set", required=True, help="set literal, e.g. 1,3,5,7")
        p.add_argument("--h", required=True, type=int, help="fold count")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("compute", help="compute one sumset")
    common(p)
    p.add_argument(
        "--kind",
        choices=[k.value for k in SumsetKind],
        default=SumsetKind.RESTRICTED_SIGNED.value,
    )
    p.add_argument("--engine", choices=["naive", "layered"], default="layered")

    p = sub.add_parser("bound", help="audit a set against all applicable bounds")
    common(p)

    p = sub.add_parser("witness", help="dump certificate families with checks")
    common(p)
    p.add_argument("--zero-in-a", action="store_true")
    p.add_argument("--superincreasing", action="store_true")

    p = sub.add_parser("classify", help="classify a set against inverse theory")
    common(p)

    p = sub.add_parser("scan", help="exhaustive scan of a normalized space")
    p.add_argument("--mode", required=True, help="verify:<id> or conj:<id>")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--h", help="fold, or inclusive range like 3-5")
    p.add_argument(
        "--family", choices=["positive", "contains-zero"], default="positive"
    )
    p.add_argument("--max", required=True, type=int, dest="max_element")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--csv", help="write the CSV report here")
    p.add_argument("--json", action="store_true", help="print report JSON to stdout")
    return parser


def _parse_h_range(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    lo, sep, hi = text.partition("-")
    try:
        if sep:
            return tuple(range(int(lo), int(hi) + 1))
        return (int(text),)
    except ValueError:
        raise InvalidSetLiteral(f"malformed fold range: {text!r}") from None


def _cmd_compute(args) -> int:
    a = parse_set_literal(args.set)
    engine = sumset_naive if args.engine == "naive" else sumset_layered
    result = engine(a, args.h, SumsetKind(args.kind))
    if args.json:
        sys.stdout.write(
            canonical_json(
                {
                    "set": a.canonical(),
                    "h": args.h,
                    "kind": result.kind.value,
                    "engine": args.engine,
                    "values": list(result.values),
                    "cardinality": result.cardinality,
                }
            )
        )
    else:
        print(",".join(str(v) for v in result.values))
        print(f"cardinality {result.cardinality}")
    return EXIT_OK


def _cmd_bound(args) -> int:
    a = parse_set_literal(args.set)
    report = audit(a, args.h)
    if args.json:
        sys.stdout.write(canonical_json(report.to_json_dict()))
    else:
        print(f"set {report.set}")
        print(f"h {report.h}")
        print(f"cardinality {report.cardinality}")
        print(f"restricted_cardinality {report.restricted_cardinality}")
        for entry in report.bounds:
            print(f"{entry.id} bound={entry.value} {entry.status.value}")
    return EXIT_COUNTEREXAMPLE if report.has_conjecture_violation else EXIT_OK


def _cmd_witness(args) -> int:
    a = parse_set_literal(args.set)
    h = args.h
    zero = args.zero_in_a
    if args.superincreasing and not is_superincreasing(a):
        raise SumsetError(f"set {a} is not superincreasing")
    membership = sumset_layered(a, h).values
    families = [s_family(a, h)]
    t = t_family(a, h, zero_in_a=zero, superincreasing=args.superincreasing)
    families.append(t)
    families.extend(t.subfamilies)
    if not zero and h == a.k and a.k >= 3:
        families.append(u_family(a))
    payload = []
    all_ok = True
    for fam in families:
        check = verify_family(fam, membership)
        all_ok = all_ok and check.ok
        payload.append(
            {
                "name": fam.name,
                "elements": [e.to_json_dict() for e in fam.elements],
                "chain_ok": check.chain_ok,
                "broken_links": list(check.broken_links),
                "distinct": check.distinct,
                "expected_distinct": check.expected_distinct,
                "missing_members": list(check.missing_members),
                "ok": check.ok,
            }
        )
    sys.stdout.write(
        canonical_json(
            {
                "set": a.canonical(),
                "h": h,
                "zero_in_a": zero,
                "families": payload,
                "all_ok": all_ok,
            }
        )
    )
    return EXIT_OK if all_ok else EXIT_THEOREM_VIOLATION


def _cmd_classify(args) -> int:
    a = parse_set_literal(args.set)
    family_of(a)  # surface domain violations before computing
    cls = classify_extremal(a, args.h)
    if args.json:
        sys.stdout.write(canonical_json(cls.to_json_dict()))
    else:
        if not cls.covered:
            print(f"set {cls.set} h {cls.h}: not covered by a proven inverse theorem")
            print(f"cardinality {cls.cardinality}")
        else:
            print(f"set {cls.set} h {cls.h}: theorem {cls.theorem}")
            print(f"cardinality {cls.cardinality} bound {cls.bound}")
            print(f"equality {cls.equality}")
            print(f"family {cls.family} params {cls.params}")
            print(f"consistent {cls.consistent}")
    return EXIT_OK


def _cmd_scan(args) -> int:
    config = ScanConfig(
        k=args.k,
        max_element=args.max_element,
        family=SetFamily(args.family),
        mode=parse_mode(args.mode),
        h_values=_parse_h_range(args.h),
        jobs=args.jobs,
        output=args.out,
    )
    try:
        report = scan(config)
    except (TheoremViolation, EngineMismatch) as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM_VIOLATION
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json())
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_HEADER)
            writer.writerows(report.csv_rows())
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print(f"mode {config.mode} k={config.k} family={config.family.value} "
              f"max={config.max_element}")
        print(f"sets_scanned {report.sets_scanned}")
        print(f"equalities {len(report.equalities)}")
        for rec in report.equalities:
            fam = rec.get("family")
            print(f"  {rec['set']} h={rec['h']} cardinality={rec['cardinality']}"
                  + (f" family={fam}" if fam else ""))
        for rec in report.classification_failures:
            print(
                f"  INVERSE COUNTEREXAMPLE {rec['set']} h={rec['h']} "
                f"cardinality={rec['cardinality']} bound={rec['bound']} "
                f"naive_cardinality={rec['naive_cardinality']} "
                f"expected_family={rec['expected_family']}"
            )
        for rec in report.conjecture_counterexamples:
            print(
                f"  BOUND COUNTEREXAMPLE {rec['set']} h={rec['h']} "
                f"cardinality={rec['cardinality']} < bound={rec['bound']} "
                f"naive_cardinality={rec['naive_cardinality']}"
            )
        print(f"wall_time {report.wall_time:.3f}s")
    return EXIT_OK if report.clean else EXIT_COUNTEREXAMPLE


_COMMANDS = {
    "compute": _cmd_compute,
    "bound": _cmd_bound,
    "witness": _cmd_witness,
    "classify": _cmd_classify,
    "scan": _cmd_scan,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except InvalidSetLiteral as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SumsetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
