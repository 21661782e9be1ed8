"""Command-line front end.

Subcommands mirror the library operations one to one:

  pair            Euler pairing of two classes
  coh             cohomology dimensions of a line bundle
  twist           reflection of a class under a spherical twist
  mutate          apply a braid-and-flip word to a collection
  normalize-word  canonical form of a twist word
  reduce          search for a mutation word back to the standard collection
  verify          run the property suites and optionally render a report

All structured input and output is JSON; ``--json`` switches the human
summaries to machine form.  ``verify`` exits 0 exactly when no check failed,
``reduce`` exits 1 when the search budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .cohomology import line_bundle_cohomology
from .jsonio import SchemaError
from .lattice import euler_pairing
from .mutations import apply_group_word, reduce_to_standard
from .twists import normalize, twist_on_class
from .verify import ALL_SUITES, VerifyBounds, run_verify


def _emit(args, payload, human: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _cmd_pair(args) -> int:
    v = jsonio.parse_kclass(json.loads(args.v))
    w = jsonio.parse_kclass(json.loads(args.w))
    chi = euler_pairing(v, w)
    _emit(args, {"chi": chi}, str(chi))
    return 0


def _cmd_coh(args) -> int:
    surface = jsonio.parse_surface(args.surface)
    try:
        a, b = (int(x) for x in args.divisor.split(","))
    except ValueError:
        raise SchemaError(f"divisor must look like 'a,b', got {args.divisor!r}")
    dims = line_bundle_cohomology(jsonio.parse_pic([a, b], surface))
    payload = {"h0": dims.h0, "h1": dims.h1, "h2": dims.h2}
    print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_twist(args) -> int:
    v = jsonio.parse_kclass(json.loads(args.kclass))
    out = twist_on_class(args.a, -1 if args.inverse else 1, v)
    print(json.dumps(jsonio.kclass_to_json(out), sort_keys=True))
    return 0


def _cmd_mutate(args) -> int:
    col = jsonio.parse_collection(json.loads(args.collection))
    g = jsonio.parse_group_word(args.word)
    out = apply_group_word(col, g)
    print(json.dumps(jsonio.collection_to_json(out)))
    return 0


def _cmd_normalize_word(args) -> int:
    w = jsonio.parse_twist_word(json.loads(args.word))
    nf = normalize(w)
    print(json.dumps(jsonio.normal_form_to_json(nf), sort_keys=True))
    return 0


def _cmd_reduce(args) -> int:
    col = jsonio.parse_collection(json.loads(args.collection))
    found = reduce_to_standard(col, max_depth=args.depth,
                               max_nodes=args.max_nodes)
    if found is None:
        payload = {"found": False, "depth": args.depth}
        _emit(args, payload, f"no word found within depth {args.depth}")
        return 1
    payload = {"found": True, "word": str(found), "length": len(found)}
    _emit(args, payload, str(found) if len(found) else "(empty word)")
    return 0


def _cmd_verify(args) -> int:
    suites = args.suites.split(",") if args.suites else None
    if suites == [""]:
        suites = []
    bounds = VerifyBounds()
    report = run_verify(suites=suites, seed=args.seed, bounds=bounds)
    if args.report_dir:
        from .report import write_report_files

        for path in write_report_files(report, args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    if args.json:
        print(report.to_json())
    else:
        for s in report.suites:
            status = "ok" if not s.failures else f"{len(s.failures)} FAILED"
            print(f"{s.name:16s} {s.cases:6d} checks  {status}"
                  f"  ({s.wall_time_s:.2f}s)")
        print(f"total: {report.total_cases} checks, "
              f"{report.total_failures} failures")
    return 0 if report.total_failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigma2",
        description="Exact lattice computations for exceptional collections "
                    "on the degree-2 Hirzebruch surface and the quadric.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pair", help="Euler pairing chi(v, w)")
    p.add_argument("--v", required=True, help="first class as JSON")
    p.add_argument("--w", required=True, help="second class as JSON")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_pair)

    p = sub.add_parser("coh", help="line bundle cohomology dimensions")
    p.add_argument("--surface", required=True, choices=["sigma2", "quadric"])
    p.add_argument("--divisor", required=True, metavar="a,b")
    p.set_defaults(func=_cmd_coh)

    p = sub.add_parser("twist", help="spherical twist acting on a class")
    p.add_argument("--a", type=int, required=True, help="twist index")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--class", dest="kclass", required=True,
                   help="class as JSON")
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("mutate", help="apply a group word to a collection")
    p.add_argument("--collection", required=True, help="JSON list of classes")
    p.add_argument("--word", required=True, metavar="s1,-s2,f3")
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("normalize-word", help="canonical form of a twist word")
    p.add_argument("--word", required=True,
                   help="JSON list like '[{\"T\":0},{\"T\":1}]'")
    p.set_defaults(func=_cmd_normalize_word)

    p = sub.add_parser("reduce", help="find a mutation word to the standard "
                                      "collection")
    p.add_argument("--collection", required=True, help="JSON list of classes")
    p.add_argument("--depth", type=int, default=16)
    p.add_argument("--max-nodes", type=int, default=200_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suites", default=None,
                   help=f"comma-separated subset of: {', '.join(ALL_SUITES)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--report-dir", default=None,
                   help="write JSON, CSV and PNG figures to this directory")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SchemaError, ValueError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
