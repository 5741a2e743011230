"""Command line interface: the ``poly`` tool.

Exit codes: 0 success, 1 validation failure, 2 budget exhausted, 3 I/O
error.  The POLY_BUDGET environment variable overrides the default step
budgets of the Groebner engine and the certificate searches.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import (
    MonomialOrder,
    VariableSet,
    binomial_str,
    certify_groebner,
    inner_minors,
    parse_variable_name,
)
from .dimension import groebner_basis, krull_dim
from .enumeration import DIHEDRAL, TRANSLATION, EnumerationConfig, enumerate_polyominoes
from .errors import BudgetExceededError, LogCorruptError, PolyominoIdealsError
from .harness import run_harness
from .koenig import (
    certificate_from_json,
    certificate_to_json,
    search_certificate,
    verify_certificate,
    walk_order,
)
from .lattice import Point
from .polyomino import classify, from_file, inner_intervals, to_json_obj
from .render import render_text, save_polyomino_figure


class CLIError(PolyominoIdealsError, ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep exit code 2 reserved for budget
        raise CLIError(message)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _parse_order(spec: str, variables: VariableSet) -> MonomialOrder:
    if spec == "lex1":
        return MonomialOrder.lex1(variables)
    if spec == "lexT":
        return MonomialOrder.transposed_lex(variables)
    if spec.startswith("yset:"):
        pts = []
        body = spec[len("yset:") :]
        if body:
            for chunk in body.split(";"):
                xy = chunk.split(",")
                if len(xy) != 2:
                    raise CLIError(f"bad yset member {chunk!r}; expected 'x,y'")
                pts.append(Point(int(xy[0]), int(xy[1])))
        return MonomialOrder.yset(variables, pts)
    if spec.startswith("weights:"):
        path = spec[len("weights:") :]
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        table = obj["weights"] if isinstance(obj, dict) else obj
        weight_map = {
            parse_variable_name(name): Fraction(int(num), int(den))
            for name, num, den in table
        }
        return MonomialOrder.from_weights(variables, weight_map, label=f"weights:{path}")
    raise CLIError(f"unknown order spec {spec!r} (use lex1, lexT, yset:..., weights:FILE)")


def _add_order_option(sub):
    sub.add_argument(
        "--order",
        default="lex1",
        help="monomial order: lex1 | lexT | yset:x,y;x,y | weights:FILE",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="poly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="rank, vertices, holes, thinness, closed-path flag")
    s.add_argument("file")

    s = sub.add_parser("minors", help="list the inner 2-minors")
    s.add_argument("file")

    s = sub.add_parser("gb", help="reduced Groebner basis of the inner-2-minor ideal")
    s.add_argument("file")
    _add_order_option(s)
    s.add_argument("--certify", action="store_true", help="re-check all S-pairs reduce to zero")
    s.add_argument("--budget", type=int, default=None)

    for name in ("dim", "height"):
        s = sub.add_parser(name, help=f"Krull {name} via the initial ideal")
        s.add_argument("file")
        _add_order_option(s)
        s.add_argument("--budget", type=int, default=None)

    s = sub.add_parser("koenig", help="find a Koenig-type certificate")
    s.add_argument("file")
    group = s.add_mutually_exclusive_group()
    group.add_argument("--walk", action="store_true", help="cycle-walk labelling (closed paths)")
    group.add_argument("--search", action="store_true", help="complete backtracking search (default)")
    s.add_argument("--out", default=None, help="write the certificate JSON here")
    s.add_argument("--budget", type=int, default=None)

    s = sub.add_parser("verify", help="verify a certificate file against a polyomino")
    s.add_argument("file")
    s.add_argument("certificate")

    s = sub.add_parser("enumerate", help="enumerate polyominoes; with --out, run the harness")
    s.add_argument("--max-rank", type=int, required=True)
    s.add_argument("--filter", action="append", default=[], dest="filters",
                   choices=["closed-path", "thin", "non-simple", "simple"])
    s.add_argument("--dedup", choices=[TRANSLATION, DIHEDRAL], default=DIHEDRAL)
    s.add_argument("--out", default=None, help="harness log (JSONL), appended")
    s.add_argument("--resume", action="store_true", help="skip instances already in the log")
    s.add_argument("--figures", default=None, help="directory for summary/witness figures")
    s.add_argument("--skip-height", action="store_true")
    s.add_argument("--timestamps", action="store_true")
    s.add_argument("--budget", type=int, default=None)

    s = sub.add_parser("render", help="ASCII (and optionally PNG) picture")
    s.add_argument("file")
    s.add_argument("--png", default=None, help="also render a figure to this file")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "classify":
        p = from_file(args.file)
        report = classify(p)
        from .configurations import closed_path_sequence, is_prime_closed_path

        is_cp = closed_path_sequence(p) is not None
        _emit(
            {
                "rank": report.rank,
                "vertices": report.vertex_count,
                "simple": report.simple,
                "thin": report.thin,
                "holes": [to_json_obj(h)["cells"] for h in report.holes],
                "closed_path": is_cp,
                "prime": is_prime_closed_path(p) if is_cp else None,
            }
        )
        return 0

    if args.command == "minors":
        p = from_file(args.file)
        variables = VariableSet.of_polyomino(p)
        for b in inner_minors(p, variables):
            print(binomial_str(b, variables))
        return 0

    if args.command == "gb":
        p = from_file(args.file)
        variables = VariableSet.of_polyomino(p)
        order = _parse_order(args.order, variables)
        gb = groebner_basis(p, order, budget=args.budget)
        out = {
            "order": order.describe(),
            "reduced": gb.reduced,
            "elements": [binomial_str(b, variables) for b in gb.elements],
        }
        if args.certify:
            out["certified"] = certify_groebner(gb)
        _emit(out)
        return 0

    if args.command in ("dim", "height"):
        p = from_file(args.file)
        variables = VariableSet.of_polyomino(p)
        order = _parse_order(args.order, variables)
        d = krull_dim(p, order, budget=args.budget)
        _emit(
            {
                "vertices": len(p.vertices),
                "rank": p.rank,
                "dim": d,
                "height": len(p.vertices) - d,
                "order": order.label,
            }
        )
        return 0

    if args.command == "koenig":
        p = from_file(args.file)
        if args.walk:
            result = walk_order(p, budget=args.budget)
            cert, out = result.certificate, {"mode": "walk", "fallback": result.fallback}
        else:
            cert = search_certificate(p, budget=args.budget)
            out = {"mode": "search"}
        out["status"] = "certificate" if cert is not None else "exhausted"
        if cert is not None:
            out["certificate"] = certificate_to_json(cert)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    json.dump(certificate_to_json(cert), fh, indent=2, sort_keys=True)
                    fh.write("\n")
        _emit(out)
        return 0

    if args.command == "verify":
        p = from_file(args.file)
        with open(args.certificate, "r", encoding="utf-8") as fh:
            cert = certificate_from_json(json.load(fh))
        report = verify_certificate(p, cert)
        _emit(
            {
                "ok": report.ok,
                "checks": [
                    {"name": c.name, "passed": c.passed, "detail": c.detail}
                    for c in report.checks
                ],
            }
        )
        return 0 if report.ok else 1

    if args.command == "enumerate":
        config = EnumerationConfig(
            max_rank=args.max_rank, filters=frozenset(args.filters), dedup=args.dedup
        )
        if args.out is None:
            for p in enumerate_polyominoes(config):
                print(json.dumps(to_json_obj(p)["cells"], separators=(",", ":")))
            return 0
        import os

        if os.path.exists(args.out) and not args.resume:
            raise CLIError(f"{args.out} exists; pass --resume to append")
        summary = run_harness(
            config,
            args.out,
            figures_dir=args.figures,
            budget=args.budget,
            skip_height=args.skip_height,
            timestamps=args.timestamps,
        )
        _emit(summary.to_json_obj())
        return 0

    if args.command == "render":
        p = from_file(args.file)
        print(render_text(p))
        if args.png:
            save_polyomino_figure(p, args.png)
        return 0

    raise CLIError(f"unhandled command {args.command!r}")


def main(argv=None) -> None:
    try:
        sys.exit(run(argv))
    except BudgetExceededError as exc:
        print(f"poly: budget exhausted: {exc}", file=sys.stderr)
        sys.exit(2)
    except LogCorruptError as exc:
        print(f"poly: {exc}", file=sys.stderr)
        sys.exit(3)
    except OSError as exc:
        print(f"poly: i/o error: {exc}", file=sys.stderr)
        sys.exit(3)
    except (PolyominoIdealsError, ValueError) as exc:
        print(f"poly: {exc}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
