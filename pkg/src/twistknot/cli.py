"""Command-line front end.

Verbs: ``build``, ``inv``, ``verify``, ``scan``, ``render``. Exit codes:
0 success, 1 usage error, 2 resource limit, 3 unexpected suite verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings

from .braid import BraidError, BraidWord, component_count, format_braid
from .config import ResourceLimitError
from .families import CableSpec, FamilyError, build, family_text, parse_family_spec
from .invariants import identify_torus_knot, positive_braid_genus
from .verify import SUITES, SuiteError, alexander, jones, run_suite, scan_conjecture

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def render_ascii(w: BraidWord) -> str:
    """One row per letter, first letter on top; ``\\+/`` is a positive crossing, ``\\-/`` a negative one."""
    n = w.strands
    lines = [" ".join("|" * n)]
    for e in w.letters:
        i = abs(e) - 1
        row = ["|" if k % 2 == 0 else " " for k in range(2 * n - 1)]
        row[2 * i:2 * i + 3] = ["\\", "+" if e > 0 else "-", "/"]
        label = f"s{abs(e)}" if e > 0 else f"s{abs(e)}^-1"
        lines.append("".join(row) + "   " + label)
    return "\n".join(lines) + "\n"


def _read_word(text: str | None) -> BraidWord:
    if text is None or text == "-":
        text = sys.stdin.read()
    spec = parse_family_spec(text)
    return build(spec)


def _emit(args, text: str, payload: dict):
    out = json.dumps(payload, indent=2, sort_keys=True) + "\n" if args.format == "json" else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def cmd_build(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        spec = parse_family_spec(args.spec, strict=not args.relaxed)
        w = build(spec)
    flags = [str(c.message) for c in caught]
    payload = {"spec": family_text(spec), "braid": format_braid(w), "strands": w.strands,
               "crossings": len(w), "components": component_count(w), "flags": flags}
    if isinstance(spec, CableSpec):
        payload["seifert_slope"] = [spec.m, spec.seifert_coefficient()]
    text = format_braid(w) + "\n" + "".join(f"# {f}\n" for f in flags)
    _emit(args, text, payload)
    return EXIT_OK


def cmd_inv(args) -> int:
    w = _read_word(args.braid)
    wanted = [k for k in ("alexander", "jones", "genus", "torus") if getattr(args, k)]
    if not wanted:
        wanted = ["alexander", "jones", "genus"]
    payload: dict = {"braid": format_braid(w), "components": component_count(w)}
    lines = [f"braid       {format_braid(w)}", f"components  {payload['components']}"]
    if "alexander" in wanted:
        a = alexander(w)
        payload["alexander"] = a.to_json()
        lines.append(f"alexander   {a}")
    if "jones" in wanted:
        j = jones(w)  # a resource error propagates to exit code 2 when asked for explicitly
        payload["jones"] = j.to_json()
        lines.append(f"jones       {j}")
    if "genus" in wanted:
        try:
            g = positive_braid_genus(w)
            payload["genus"] = str(g)
            lines.append(f"genus       {g}")
        except ValueError as exc:
            payload["genus"] = None
            lines.append(f"genus       n/a ({exc})")
    if "torus" in wanted:
        pair = identify_torus_knot(w)
        payload["torus"] = list(pair) if pair else None
        lines.append(f"torus       {'consistent with T' + str(pair) if pair else 'no match'}")
    _emit(args, "\n".join(lines) + "\n", payload)
    return EXIT_OK


def _parse_params(items: list[str]) -> list[tuple]:
    out = []
    for item in items:
        try:
            out.append(tuple(int(x) for x in item.split(",")))
        except ValueError:
            raise UsageError(f"parameters must be comma-separated integers, got {item!r}") from None
    return out


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    ids = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite == "all" and args.params:
        raise UsageError("explicit parameters need a single suite")
    params = _parse_params(args.params)
    reports = [run_suite(s, params or None) for s in ids]
    ok = all(r.ok for r in reports)
    text = "".join(r.text(args.timings) for r in reports)
    if args.timings:
        text += f"total {time.perf_counter() - t0:.2f}s\n"
    payload = {"ok": ok, "reports": [r.to_json(args.timings) for r in reports]}
    _emit(args, text, payload)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_scan(args) -> int:
    report = scan_conjecture(args.pmax, args.qmax, args.crossing_cap, q_min=args.qmin)
    _emit(args, report.text(), report.to_json())
    return EXIT_OK


def cmd_render(args) -> int:
    w = _read_word(args.braid)
    _emit(args, render_ascii(w), {"braid": format_braid(w), "ascii": render_ascii(w)})
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = _Parser(prog="twistknot", description="Braid families and knot invariants of their closures.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("build", parents=[common], help="family spec -> braid word")
    p.add_argument("spec", help="e.g. 'ttk 5 4 2 1', 'klink 6,2 4,3', 'cable (2: 1 1 1) 2 5'")
    p.add_argument("--relaxed", action="store_true", help="admit non-canonical K-/T-link specs")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("inv", parents=[common], help="invariants of a braid closure")
    p.add_argument("braid", nargs="?", help="braid text 'n: e1 e2 ...' or a family spec; '-' or absent reads stdin")
    for flag in ("alexander", "jones", "genus", "torus"):
        p.add_argument(f"--{flag}", action="store_true")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("verify", parents=[common], help="run a theorem suite")
    p.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    p.add_argument("params", nargs="*", help="parameter sets such as 5,2,1 (defaults if absent)")
    p.add_argument("--timings", action="store_true", help="include timings (output no longer byte-stable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="evidence table for T(p,q;r,1)")
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--qmax", type=int)
    p.add_argument("--qmin", type=int, default=2)
    p.add_argument("--crossing-cap", type=int)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("render", parents=[common], help="ASCII braid diagram")
    p.add_argument("braid", nargs="?")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:  # --help and argparse usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"twistknot: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, FamilyError, BraidError, SuiteError, ValueError) as exc:
        print(f"twistknot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
