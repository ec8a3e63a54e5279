"""Command-line interface.

Every command prints one output document on stdout: the command echo, the
input description, the result payload and the tool version.  Wall-clock
timing goes to stderr so that stdout is byte-stable across runs.

Exit codes: 0 computation completed (also when the verdict is "fail"),
1 usage or input error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Any, Sequence

from . import __version__
from .intlat import CoeffRing
from .polynomial import Polynomial, PolynomialError
from .rootdata import RootDatum, RootDatumError, build_root_datum, load_root_datum, parse_type
from .schubert import SchubertError, characteristic_map
from .splitting import splitting_series_identity, verify_splitting
from .tate import (
    SeriesError,
    classifying_group_motive,
    classifying_torus_motive,
    flag_motive,
    verify_motive_splitting,
)
from .torsion import TorsionBudgetError, torsion_index, torsion_index_via_chevalley
from .weyl import enumerate_weyl, fundamental_degrees, longest_element, poincare_polynomial, reduced_word

log = logging.getLogger("torsplit")


class UsageError(Exception):
    pass


class InvariantViolation(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse default exit code is 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_group_args(p: argparse.ArgumentParser, allow_file: bool = False) -> None:
    p.add_argument("--type", dest="cartan_type", help="Cartan type, e.g. A2, B3, G2, F4")
    p.add_argument(
        "--isogeny",
        default="sc",
        help="sc (simply connected), adjoint, or gl (type A only); default sc",
    )
    if allow_file:
        p.add_argument("--file", help="JSON root-datum description file")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "table"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="torsplit",
        description="Torsion indices, Schubert expansions and splitting checks for split reductive groups.",
    )
    parser.add_argument("--version", action="version", version=f"torsplit {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rootdatum", help="describe a root datum")
    _add_group_args(p, allow_file=True)
    _add_format(p)

    p = sub.add_parser("weyl", help="Weyl group order, W(q), degrees, longest word")
    _add_group_args(p, allow_file=True)
    _add_format(p)

    p = sub.add_parser("torsion", help="torsion index t(G)")
    _add_group_args(p, allow_file=True)
    p.add_argument("--cross-check", action="store_true", help="also run the Chevalley route")
    p.add_argument("--budget", type=int, default=10**6, help="max monomials to examine")
    _add_format(p)

    p = sub.add_parser("charmap", help="Schubert expansion of a homogeneous polynomial")
    _add_group_args(p, allow_file=True)
    p.add_argument("--poly", required=True, help="polynomial such as '2*x1^2*x2 - x2^3'")
    _add_format(p)

    p = sub.add_parser("split", help="verify the Chow-level splitting over a coefficient ring")
    _add_group_args(p, allow_file=True)
    ring = p.add_mutually_exclusive_group()
    ring.add_argument("--invert", default=None, help='comma-separated primes to invert, e.g. "2,3"')
    ring.add_argument("--mod-p", type=int, default=None, help="use the prime field F_p")
    p.add_argument("--cutoff", type=int, default=None, help="top degree (default 2 dim G/B)")
    _add_format(p)

    p = sub.add_parser("motive", help="Tate series of G/B, BT, BG, or the splitting check")
    p.add_argument("kind", choices=("flag", "bt", "bg", "check"))
    _add_group_args(p, allow_file=True)
    p.add_argument("--trunc", type=int, default=-16, help="lowest twist computed (default -16)")
    _add_format(p)
    return parser


def _root_datum(args: argparse.Namespace) -> RootDatum:
    if getattr(args, "file", None):
        if args.cartan_type:
            raise UsageError("--type and --file are mutually exclusive")
        return load_root_datum(args.file)
    if not args.cartan_type:
        raise UsageError("one of --type or --file is required")
    series, rank = parse_type(args.cartan_type)
    return build_root_datum(series, rank, args.isogeny)


def _input_description(args: argparse.Namespace, rd: RootDatum) -> dict[str, Any]:
    desc: dict[str, Any] = {"label": rd.label, "lattice_rank": rd.lattice_rank}
    if getattr(args, "file", None):
        desc["file"] = args.file
    return desc


def cmd_rootdatum(args: argparse.Namespace, rd: RootDatum) -> dict[str, Any]:
    return {
        "lattice_rank": rd.lattice_rank,
        "semisimple_rank": rd.semisimple_rank,
        "simple_roots": [list(v) for v in rd.simple_roots],
        "simple_coroots": [list(v) for v in rd.simple_coroots],
        "cartan_matrix": [list(r) for r in rd.cartan],
        "positive_roots": rd.num_positive_roots,
        "positive_root_list": [
            {"root": list(rt.root), "coroot": list(rt.coroot)} for rt in rd.positive_roots
        ],
        "weyl_order": len(enumerate_weyl(rd)),
    }


def cmd_weyl(args: argparse.Namespace, rd: RootDatum) -> dict[str, Any]:
    return {
        "weyl_order": len(enumerate_weyl(rd)),
        "poincare_polynomial": poincare_polynomial(rd).to_list(),
        "fundamental_degrees": fundamental_degrees(rd),
        "longest_element_length": longest_element(rd).length,
        "longest_element_word": reduced_word(longest_element(rd)),
    }


def cmd_torsion(args: argparse.Namespace, rd: RootDatum) -> dict[str, Any]:
    report = torsion_index(rd, budget=args.budget)
    out = report.to_dict()
    if args.cross_check:
        other = torsion_index_via_chevalley(rd, budget=args.budget)
        out["chevalley_torsion_index"] = other
        out["agreement"] = other == report.torsion_index
        if not out["agreement"]:
            raise InvariantViolation(
                f"torsion routes disagree: divided differences {report.torsion_index}, "
                f"Chevalley {other}"
            )
    return out


def cmd_charmap(args: argparse.Namespace, rd: RootDatum) -> dict[str, Any]:
    f = Polynomial.parse(args.poly, rd.lattice_rank)
    image = characteristic_map(rd, f)
    return {"polynomial": str(f), "degree": image.degree, "expansion": image.to_dict()}


def cmd_split(args: argparse.Namespace, rd: RootDatum) -> dict[str, Any]:
    if args.mod_p is not None:
        ring = CoeffRing.prime_field(args.mod_p)
    else:
        ring = CoeffRing.parse_inverted(args.invert or "")
    cutoff = args.cutoff if args.cutoff is not None else 2 * rd.num_positive_roots
    report = verify_splitting(rd, ring, cutoff)
    out = {"ring": ring.label, "cutoff": cutoff}
    out.update(report.to_dict())
    out["series_identity"] = splitting_series_identity(rd, cutoff)
    return out


def cmd_motive(args: argparse.Namespace, rd: RootDatum) -> dict[str, Any]:
    t = args.trunc
    if args.kind == "flag":
        return {"series": flag_motive(rd).to_dict()}
    if args.kind == "bt":
        return {"series": classifying_torus_motive(rd.lattice_rank, t).to_dict()}
    if args.kind == "bg":
        try:
            return {"series": classifying_group_motive(rd, t).to_dict()}
        except SeriesError as exc:
            return {"series": None, "error": str(exc)}
    return {"truncation": t, "splitting": verify_motive_splitting(rd, t)}


COMMANDS = {
    "rootdatum": cmd_rootdatum,
    "weyl": cmd_weyl,
    "torsion": cmd_torsion,
    "charmap": cmd_charmap,
    "split": cmd_split,
    "motive": cmd_motive,
}


def _flatten(prefix: str, value: Any, out: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, json.dumps(value)))


def render(doc: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2)
    rows: list[tuple[str, str]] = []
    _flatten("", doc, rows)
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    start = time.perf_counter()
    try:
        rd = _root_datum(args)
        result = COMMANDS[args.command](args, rd)
    except (UsageError, RootDatumError, PolynomialError, SchubertError, TorsionBudgetError, ValueError) as exc:
        print(f"torsplit: error: {exc}", file=sys.stderr)
        return 1
    except (InvariantViolation, AssertionError, ArithmeticError) as exc:
        print(f"torsplit: internal invariant violation: {exc}", file=sys.stderr)
        return 2
    doc = {
        "command": ["torsplit", *argv],
        "input": _input_description(args, rd),
        "result": result,
        "version": __version__,
    }
    print(render(doc, args.format))
    print(f"# elapsed {time.perf_counter() - start:.3f} s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
