"""Command-line front end.

Usage examples::

  surjtop parse "< x, y | x^4 y x y >"
  surjtop h2 "< x | x^2 >" --alpha x=-1
  surjtop systems k3.pres
  surjtop classify "< x, y | x^4 y x y >" --format json
  surjtop family case3 --p 0 --q 0 --n 2
  surjtop realize --a 3 --b 2 --c 5
  surjtop sweep --family example-k1 --k 1..9

Exit codes: 0 success, 1 usage error, 2 parse or validation error,
3 hypothesis failure in ``classify``.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional

from .classify import classify_presentation
from .coeffsys import enumerate_systems, parse_signs, system_count
from .families import FAMILIES, FamilySpec, realize_order, realize_spec, twisted_order
from .foxcalc import twisted_matrix
from .intlinalg import cokernel, smith_normal_form
from .presentation import (
    ParseError,
    Presentation,
    exponent_matrix,
    format_presentation,
    parse_presentation,
    read_presentation_file,
)

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_HYPOTHESIS = 0, 1, 2, 3
FORMAT_ENV = "SURJTOP_FORMAT"
FAMILY_PARAMS = ("k", "l", "p", "q", "j", "n")
SWEEP_FAMILIES = FAMILIES + ("realize",)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_input(source: str) -> Presentation:
    """Inline text when it starts with '<', otherwise a file path."""
    if source.lstrip().startswith("<"):
        return parse_presentation(source)
    return read_presentation_file(source)


def parse_range(text: str) -> List[int]:
    """``3``, ``1..9`` (inclusive) or comma-separated mixtures of both."""
    values = []
    for part in text.split(","):
        part = part.strip()
        lo, sep, hi = part.partition("..")
        try:
            if sep:
                values.extend(range(int(lo), int(hi) + 1))
            else:
                values.append(int(part))
        except ValueError:
            raise UsageError(f"bad range {text!r}; use N, A..B or a comma list") from None
    return values


def _delta_rows(matrix) -> str:
    return "; ".join(" ".join(str(x) for x in row) for row in matrix.tolist()) or "(empty)"


# commands return (payload dict, table text, exit code)

def cmd_parse(args):
    p = load_input(args.input)
    delta = exponent_matrix(p)
    payload = {"presentation": format_presentation(p), "generators": list(p.generators.names),
               "relators": [str(r) for r in p.relators], "delta": delta.tolist()}
    table = f"presentation  {payload['presentation']}\nDelta         {_delta_rows(delta)}"
    return payload, table, EXIT_OK


def cmd_h2(args):
    p = load_input(args.input)
    system = parse_signs(p.generators, args.alpha)
    delta = exponent_matrix(p)
    delta_alpha = twisted_matrix(p, system)
    snf = smith_normal_form(delta_alpha)
    h2 = cokernel(delta_alpha)
    payload = {
        "presentation": format_presentation(p),
        "signs": system.as_dict(),
        "label": system.label,
        "delta": delta.tolist(),
        "delta_alpha": delta_alpha.tolist(),
        "snf_diagonal": list(snf.diag),
        "h2": h2.to_dict(),
        "order": h2.order,
    }
    table = "\n".join([
        f"presentation  {payload['presentation']}",
        f"system        {system.name}",
        f"Delta         {_delta_rows(delta)}",
        f"Delta^alpha   {_delta_rows(delta_alpha)}",
        f"SNF diagonal  {' '.join(map(str, snf.diag)) or '(none)'}",
        f"H^2           {h2}",
        f"order         {h2.order if h2.order is not None else 'infinite'}",
    ])
    return payload, table, EXIT_OK


def cmd_systems(args):
    p = load_input(args.input)
    systems = enumerate_systems(p)
    payload = {
        "presentation": format_presentation(p),
        "count": len(systems),
        "expected_count": system_count(p),
        "systems": [{"signs": s.as_dict(), "label": s.label} for s in systems],
    }
    lines = [f"presentation  {payload['presentation']}", f"systems       {len(systems)}"]
    for s in systems:
        signs = " ".join(f"{g}={v:+d}" for g, v in s.as_dict().items())
        lines.append(f"  {s.label or '-':<8} {signs}")
    return payload, "\n".join(lines), EXIT_OK


def cmd_classify(args):
    p = load_input(args.input)
    report = classify_presentation(p, paranoid=args.paranoid)
    payload = report.to_dict()
    lines = [f"presentation  {payload['presentation']}", f"H^2 (untwisted) {report.h2_untwisted}"]
    if not report.hypothesis_ok:
        lines.append(f"hypothesis FAILED: {report.reason}")
        return payload, "\n".join(lines), EXIT_HYPOTHESIS
    lines.append(f"{'system':<12} {'Delta^alpha':<14} {'H^2':<12} {'c*':>4} {'c':>4} {'strong':>6}")
    for r in report.reports:
        lines.append(f"{r.system.name:<12} {_delta_rows(r.delta_alpha):<14} {str(r.h2):<12} "
                     f"{r.c_star:>4} {r.c_free:>4} {r.strongly_surjective:>6}")
    lines.append(f"totals: {report.free_classes} free classes, "
                 f"{report.strongly_surjective} strongly surjective "
                 f"(in each system the zero class is the non-surjective one)")
    return payload, "\n".join(lines), EXIT_OK


def _family_payload(spec: FamilySpec, pres: Presentation, system) -> dict:
    r = pres.relators[0]
    return {
        "family": spec.family,
        "params": dict(spec.params),
        "presentation": format_presentation(pres),
        "exponent_sums": [r.exponent_sum(0), r.exponent_sum(1)],
        "system": system.label,
        "predicted_order": spec.predicted_order(),
        "computed_order": twisted_order(pres, system),
    }


def _family_table(payload: dict) -> str:
    a, b = payload["exponent_sums"]
    verdict = "verified" if payload["computed_order"] == payload["predicted_order"] else "MISMATCH"
    return (f"presentation  {payload['presentation']}\n"
            f"(a, b)        ({a}, {b})\n"
            f"order {payload['computed_order']} under {payload['system']}, {verdict}")


def cmd_family(args):
    params = {k: getattr(args, k) for k in FamilySpec.param_names(args.name) if getattr(args, k) is not None}
    spec = FamilySpec(args.name, params)
    pres = spec.build()
    payload = _family_payload(spec, pres, spec.system())
    code = EXIT_OK if payload["computed_order"] == payload["predicted_order"] else EXIT_INVALID
    return payload, _family_table(payload), code


def cmd_realize(args):
    pres, system = realize_order(args.a, args.b, args.c)
    spec = realize_spec(args.a, args.b, args.c)
    payload = _family_payload(spec, pres, system)
    payload = {"target": {"a": args.a, "b": args.b, "c": args.c}, **payload}
    return payload, _family_table(payload), EXIT_OK


def sweep_row(family: str, params: dict) -> dict:
    if family == "realize":
        spec = realize_spec(params["a"], params["b"], params["c"])
        predicted = params["c"]
    else:
        spec = FamilySpec(family, params)
        predicted = spec.predicted_order()
    pres = spec.build()
    r = pres.relators[0]
    computed = twisted_order(pres, spec.system())
    return {"params": dict(params), "family": spec.family,
            "a": r.exponent_sum(0), "b": r.exponent_sum(1),
            "predicted_order": predicted, "computed_order": computed,
            "match": computed == predicted}


def _sweep_job(item):
    return sweep_row(*item)


def cmd_sweep(args):
    if args.family == "realize":
        names = ("a", "b", "c")
    else:
        names = FamilySpec.param_names(args.family)
    missing = [k for k in names if getattr(args, k) is None]
    if missing:
        raise UsageError(f"sweep --family {args.family} needs " + ", ".join(f"--{k}" for k in missing))
    ranges = [parse_range(getattr(args, k)) for k in names]
    items, skipped = [], 0
    for combo in sorted(set(itertools.product(*ranges))):
        params = dict(zip(names, combo))
        try:
            if args.family == "realize":
                realize_spec(**params)
            else:
                FamilySpec(args.family, params).build()
        except ValueError:
            skipped += 1
            continue
        items.append((args.family, params))
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_job, items))
    else:
        rows = [_sweep_job(item) for item in items]
    payload = {"family": args.family, "rows": rows, "skipped": skipped,
               "all_match": all(r["match"] for r in rows)}
    header = " ".join(f"{k:>3}" for k in names)
    lines = [f"{header}  {'family':<10} {'(a, b)':<10} {'predicted':>9} {'computed':>9}  match"]
    for row in rows:
        vals = " ".join(f"{row['params'][k]:>3}" for k in names)
        ab = f"({row['a']}, {row['b']})"
        lines.append(f"{vals}  {row['family']:<10} {ab:<10} {row['predicted_order']:>9} "
                     f"{str(row['computed_order']):>9}  {'yes' if row['match'] else 'NO'}")
    lines.append(f"{len(rows)} rows, {skipped} parameter tuples skipped (outside family preconditions)")
    return payload, "\n".join(lines), EXIT_OK if payload["all_match"] else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=None,
                        help=f"output format (default: table on a terminal, json otherwise; env {FORMAT_ENV})")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    parser = _Parser(prog="surjtop", description="Twisted H^2 and maps to RP^2 for group presentations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, func, help_text in (
        ("parse", cmd_parse, "canonical form and exponent matrix"),
        ("h2", cmd_h2, "twisted second cohomology for one system"),
        ("systems", cmd_systems, "enumerate sign coefficient systems"),
        ("classify", cmd_classify, "count homotopy classes and strong surjections"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("input", help="presentation text starting with '<', or a file path")
        sp.set_defaults(func=func)
        if name == "h2":
            sp.add_argument("--alpha", default=None, help="sign assignment, e.g. x=-1,y=+1 (default trivial)")
        if name == "classify":
            sp.add_argument("--paranoid", action="store_true", help="re-verify odd finiteness for every system")

    sp = sub.add_parser("family", parents=[common], help="build a member of a word family")
    sp.add_argument("name", choices=FAMILIES)
    for k in FAMILY_PARAMS:
        sp.add_argument(f"--{k}", type=int)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("realize", parents=[common], help="word with exponent sums (a, b) and twisted order c")
    for k in ("a", "b", "c"):
        sp.add_argument(f"--{k}", type=int, required=True)
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("sweep", parents=[common], help="check predicted orders over parameter ranges")
    sp.add_argument("--family", required=True, choices=SWEEP_FAMILIES)
    for k in FAMILY_PARAMS + ("a", "b", "c"):
        sp.add_argument(f"--{k}", metavar="RANGE", help="N, A..B or comma list")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for rows (default 1)")
    sp.set_defaults(func=cmd_sweep)
    return parser


def _resolve_format(args, stream) -> str:
    if args.format:
        return args.format
    env = os.environ.get(FORMAT_ENV)
    if env:
        if env not in ("json", "table"):
            raise UsageError(f"{FORMAT_ENV} must be 'json' or 'table', got {env!r}")
        return env
    if args.out is None and stream.isatty():
        return "table"
    return "json"


def main(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        fmt = _resolve_format(args, stdout)
        payload, table, code = args.func(args)
    except UsageError as err:
        print(f"surjtop: usage error: {err}", file=stderr)
        return EXIT_USAGE
    except ParseError as err:
        print(f"surjtop: {err.kind} at byte {err.position}: {err.message}", file=stderr)
        return EXIT_INVALID
    except (ValueError, KeyError, OSError) as err:
        print(f"surjtop: error: {err}", file=stderr)
        return EXIT_INVALID
    text = json.dumps(payload, indent=2, ensure_ascii=False) if fmt == "json" else table
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text, file=stdout)
    if code == EXIT_HYPOTHESIS:
        print(f"surjtop: hypothesis failed: {payload.get('presentation')}", file=stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
