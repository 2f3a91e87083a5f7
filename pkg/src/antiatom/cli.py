"""Command-line front end.

Subcommands: analyze a single semigroup or partition, enumerate semigroups,
scan genus/Frobenius ranges for lambda-minimality, validate the parametric
families, and render Young diagrams.  All output is deterministic: identical
invocations produce byte-identical output.

Exit codes: 0 success, 2 invalid input, 3 resource bound exceeded,
4 expected-file or prediction mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import NumericalSemigroup, NumericalSet
from .enumerate import (BoundExceeded, EnumerationQuery, scan_minimality,
                        semigroups_by_frobenius, semigroups_by_genus)
from .families import interval_k, interval_m, staircase, validate
from .partitions import (Partition, enumeration, numerical_set_of,
                         render_young, walk_string)
from .solver import solve
from .voidposet import VoidPoset


def _ints(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (tuple, list)):
        return ",".join(str(v) for v in value) if value else "-"
    return str(value)


def _print_kv(rows: list[tuple[str, object]]) -> None:
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key.ljust(width)}  {_fmt(value)}")


def _input_set(args) -> NumericalSet:
    if getattr(args, "gens", None) is not None:
        return NumericalSemigroup.from_generators(_ints(args.gens))
    if getattr(args, "gaps", None) is not None:
        return NumericalSet(_ints(args.gaps))
    return numerical_set_of(Partition(_ints(args.partition)))


def cmd_analyze(args) -> int:
    partition_rows: list[tuple[str, object]] = []
    partition_doc = None
    if args.partition is not None:
        p = Partition(_ints(args.partition))
        t = numerical_set_of(p)
        s = t.atom_monoid()
        partition_rows = [
            ("partition", p.parts),
            ("size", p.size),
            ("hook_set", tuple(sorted(p.hook_set()))),
            ("numerical_set", str(t)),
            ("atom_monoid", str(s)),
        ]
        partition_doc = {"parts": list(p.parts), "size": p.size,
                         "hook_set": sorted(p.hook_set()),
                         "numerical_set": t.to_json()}
    else:
        t = _input_set(args)
        if not t.is_semigroup():
            print(f"error: {t} is not closed under addition; "
                  "semigroup analysis needs a numerical semigroup",
                  file=sys.stderr)
            return 2
        s = t.as_semigroup()

    if s.frobenius < 0:
        # N has no gaps: the empty partition is the only associated one
        doc = {"semigroup": s.to_json(), "pa": 1, "sizes": [0],
               "lambda_size": 0, "min_size": 0, "lambda_minimal": True,
               "witness_ideal": []}
        if partition_doc is not None:
            doc["partition"] = partition_doc
        if args.json:
            print(json.dumps(doc, sort_keys=True, indent=2))
        else:
            _print_kv(partition_rows + [("set", str(s)), ("frobenius", -1),
                                        ("genus", 0), ("pa", 1), ("sizes", (0,)),
                                        ("lambda_minimal", True)])
        return 0

    poset = VoidPoset(s)
    solution = solve(s, verify=args.verify)
    if args.json:
        doc = solution.to_json()
        doc["void_poset"] = poset.to_json()
        doc["semigroup"].update({
            "frobenius": s.frobenius, "genus": s.genus,
            "multiplicity": s.multiplicity, "depth": s.depth, "type": s.type,
            "pseudo_frobenius": list(s.pseudo_frobenius),
        })
        if partition_doc is not None:
            doc["partition"] = partition_doc
        print(json.dumps(doc, sort_keys=True, indent=2))
        return 0

    rows = partition_rows + [
        ("set", str(s)),
        ("gaps", s.gaps),
        ("frobenius", s.frobenius),
        ("genus", s.genus),
        ("multiplicity", s.multiplicity),
        ("depth", s.depth),
        ("type", s.type),
        ("pseudo_frobenius", s.pseudo_frobenius),
        ("small_elements", s.small_elements),
        ("special_gaps", s.special_gaps),
        ("void", s.void),
        ("hasse", tuple(f"{x}<{y}" for x, y in poset.hasse_edges())),
        ("pa", solution.pa),
        ("lambda_size", solution.lambda_s_size),
        ("sizes", solution.sizes),
        ("min_size", solution.min_size),
        ("lambda_minimal", solution.lambda_minimal),
        ("witness_ideal", solution.witness_ideal),
        ("min_partition", solution.min_report().partition().parts),
    ]
    _print_kv(rows)
    return 0


def cmd_enumerate(args) -> int:
    if args.genus is not None:
        bucket, stream = f"genus={args.genus}", semigroups_by_genus(args.genus)
    else:
        bucket, stream = (f"frobenius={args.frobenius}",
                          semigroups_by_frobenius(args.frobenius))
    count = 0
    for s in stream:
        count += 1
        print(json.dumps({"gaps": list(s.gaps), "frobenius": s.frobenius,
                          "genus": s.genus},
                         sort_keys=True, separators=(",", ":")))
    print(f"{'bucket':<16}count", file=sys.stderr)
    print(f"{bucket:<16}{count}", file=sys.stderr)
    return 0


def cmd_scan(args) -> int:
    mode = "genus" if args.genus is not None else "frobenius"
    bound = args.genus if args.genus is not None else args.frobenius
    query = EnumerationQuery(mode=mode, bound=bound, only=args.only,
                             filter=args.filter)
    result = scan_minimality(query, workers=args.threads)

    if args.json:
        print(json.dumps(result.to_json(), sort_keys=True, indent=2))
    else:
        print(f"scan mode={result.mode} bound={result.bound} "
              f"filter={result.filter or '-'}")
        print(f"{'bucket':>6}  {'count':>6}  {'non_minimal':>11}")
        for b in result.buckets:
            print(f"{b.bucket:>6}  {b.count:>6}  {len(b.non_minimal):>11}")
        print(f"total {result.total}, non-minimal {len(result.non_minimal)}")
        for b in result.buckets:
            for gaps in b.non_minimal:
                print(f"non-minimal: {mode}={b.bucket} gaps={_fmt(gaps)}")

    if args.expected is not None:
        with open(args.expected, encoding="utf-8") as fh:
            expected = sorted(tuple(g) for g in json.load(fh))
        got = sorted(result.non_minimal)
        if got != expected:
            print(f"error: non-minimal list {got} does not match expected "
                  f"{expected}", file=sys.stderr)
            return 4
    return 0


def cmd_family(args) -> int:
    if args.family == "staircase":
        inst = staircase(args.m, args.k, args.s)
    elif args.family == "interval-m":
        inst = interval_m(args.m)
    else:
        inst = interval_k(args.k, args.l)
    rows = validate(inst)
    ok = all(r.ok for r in rows)

    if args.json:
        doc = {
            "family": inst.family,
            "params": inst.params,
            "semigroup": inst.semigroup.to_json(),
            "checks": [{"name": r.name, "predicted": _jsonable(r.predicted),
                        "computed": _jsonable(r.computed), "ok": r.ok}
                       for r in rows],
            "ok": ok,
        }
        if inst.witness is not None:
            doc["witness"] = inst.witness.to_json()
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        params = " ".join(f"{k}={v}" for k, v in inst.params.items())
        print(f"family {inst.family} {params}")
        print(f"{'check':<20}{'predicted':<24}{'computed':<24}ok")
        for r in rows:
            print(f"{r.name:<20}{_fmt(r.predicted):<24}"
                  f"{_fmt(r.computed):<24}{_fmt(r.ok)}")
        print(f"result: {'ok' if ok else 'MISMATCH'}")
    return 0 if ok else 4


def cmd_render(args) -> int:
    if args.partition is not None:
        p = Partition(_ints(args.partition))
        t = numerical_set_of(p)
    else:
        t = _input_set(args)
        p = enumeration(t)
    if args.walk:
        print(f"walk: {walk_string(t)}")
    diagram = render_young(p, hooks=args.hooks)
    if diagram:
        print(diagram)
    return 0


def _jsonable(value):
    if isinstance(value, (tuple, frozenset)):
        return [_jsonable(v) for v in (sorted(value) if isinstance(value, frozenset) else value)]
    return value


def _add_input_flags(p: argparse.ArgumentParser, partition: bool = True) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--gens", help="comma-separated generators, e.g. 9,10,11,12,13")
    group.add_argument("--gaps", help="comma-separated gaps, e.g. 1,2,3,4,6,8")
    if partition:
        group.add_argument("--partition", help="comma-separated parts, e.g. 9,8,2,2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antiatom",
        description="Numerical semigroups, hook sets, and lambda-minimality.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one semigroup or partition")
    _add_input_flags(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true",
                   help="cross-check the ideal classification against the "
                        "atom monoid definition")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="list semigroups as newline-delimited JSON")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--genus", type=int)
    group.add_argument("--frobenius", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("scan", help="lambda-minimality scan over an enumeration range")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--genus", type=int)
    group.add_argument("--frobenius", type=int)
    p.add_argument("--only", type=int, help="restrict to a single bucket")
    p.add_argument("--filter", help="predicate, e.g. depth=2 or type=3")
    p.add_argument("--threads", type=int, default=1, help="worker processes")
    p.add_argument("--expected", help="JSON file with the expected non-minimal gap lists")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("family", help="check closed-form predictions for a family")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("staircase")
    q.add_argument("m", type=int)
    q.add_argument("k", type=int)
    q.add_argument("s", type=int)
    q = fam.add_parser("interval-m")
    q.add_argument("m", type=int)
    q = fam.add_parser("interval-k")
    q.add_argument("k", type=int)
    q.add_argument("l", type=int)
    for q in fam.choices.values():
        q.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("render", help="ASCII Young diagram")
    _add_input_flags(p)
    p.add_argument("--hooks", action="store_true", help="label boxes with hook lengths")
    p.add_argument("--walk", action="store_true", help="print the profile walk")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
