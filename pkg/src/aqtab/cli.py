"""Command-line front end.

Subcommands: build, classify, nonvanishing, dirac, verify.  Input is a
JSON document {"pairs": [[p,q], ...], "lambda": [l1, ...]} from a file,
stdin ("-"), or inline --pairs/--lambda flags.  Output is JSON on stdout
(diagnostics on stderr).  Exit codes: 0 affirmative/clean, 1 negative
(vanishes, index zero, counterexample found), 2 invalid input or
undecidable.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import LambdaParam, ParabolicDatum, validate_input
from .criteria import dirac_index_nonzero, mediocre_necessary_check, nonvanishing_nice
from .errors import AqtabError, InputError
from .oracle import sweep_dirac_equivalence, sweep_overlap, sweep_positional_lemma
from .ranges import classify
from .render import ascii_tableau, latex_tableau, tableau_to_dict
from .tableau import build_quasitableau, build_signed_tableau

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _fail(message: str) -> int:
    _emit({"error": message})
    return EXIT_INVALID


def _parse_pairs_flag(text: str) -> list[list[int]]:
    pairs = []
    for chunk in text.split(";"):
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 2:
            raise InputError(f"bad pair {chunk!r}; expected 'p,q'")
        pairs.append([int(parts[0]), int(parts[1])])
    return pairs


def _load_input(args) -> tuple[ParabolicDatum, LambdaParam]:
    if args.pairs is not None or args.lam is not None:
        if args.pairs is None or args.lam is None:
            raise InputError("--pairs and --lambda must be given together")
        pairs = _parse_pairs_flag(args.pairs)
        lam_values = [int(v.strip()) for v in args.lam.split(",")]
        doc = {"pairs": pairs, "lambda": lam_values}
    else:
        if args.input == "-":
            raw = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                raw = fh.read()
        try:
            doc = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "pairs" not in doc or "lambda" not in doc:
        raise InputError('input must be {"pairs": [[p,q],...], "lambda": [...]}')
    datum = ParabolicDatum(doc["pairs"])
    lam = LambdaParam(doc["lambda"])
    validate_input(datum, lam)
    return datum, lam


def cmd_build(args) -> int:
    datum, lam = _load_input(args)
    signed = build_signed_tableau(datum)
    quasi = build_quasitableau(datum, lam, signed=signed)
    if args.format == "json":
        _emit(
            {
                "pairs": [list(p) for p in datum.pairs],
                "lambda": list(lam.values),
                "signed": tableau_to_dict(signed),
                "quasitableau": tableau_to_dict(quasi),
            }
        )
    elif args.format == "latex":
        print("% signed tableau")
        print(latex_tableau(signed))
        print("% quasitableau")
        print(latex_tableau(quasi))
    else:
        print("signed tableau:")
        print(ascii_tableau(signed, show_blocks=args.show_blocks))
        print("quasitableau:")
        print(ascii_tableau(quasi, show_blocks=args.show_blocks))
    return EXIT_OK


def cmd_classify(args) -> int:
    datum, lam = _load_input(args)
    _emit(classify(datum, lam).to_dict())
    return EXIT_OK


def cmd_nonvanishing(args) -> int:
    datum, lam = _load_input(args)
    rc = classify(datum, lam)
    payload: dict = {"range": rc.to_dict()}
    if rc.is_nice:
        nonzero, failing = nonvanishing_nice(datum, lam)
        payload.update(
            {
                "decidable": True,
                "nonzero": nonzero,
                "failing_pair": failing,
                "method": "nice-range criterion",
            }
        )
        _emit(payload)
        return EXIT_OK if nonzero else EXIT_NEGATIVE
    if rc.is_mediocre:
        passes, failing = mediocre_necessary_check(datum, lam)
        if not passes:
            payload.update(
                {
                    "decidable": True,
                    "nonzero": False,
                    "failing_pair": failing,
                    "method": "mediocre necessary condition",
                }
            )
            _emit(payload)
            return EXIT_NEGATIVE
        payload.update(
            {
                "decidable": False,
                "nonzero": None,
                "failing_pair": None,
                "method": "mediocre necessary condition",
                "note": "inconclusive: necessary condition passes outside the nice range",
            }
        )
        _emit(payload)
        return EXIT_INVALID
    payload.update(
        {
            "decidable": False,
            "nonzero": None,
            "failing_pair": None,
            "method": None,
            "note": "outside the mediocre range; no criterion applies",
        }
    )
    _emit(payload)
    return EXIT_INVALID


def cmd_dirac(args) -> int:
    datum, lam = _load_input(args)
    rc = classify(datum, lam)
    if not rc.is_nice:
        return _fail("not in the nice range; the Dirac-index criterion does not apply")
    nonzero, failing = nonvanishing_nice(datum, lam)
    if not nonzero:
        _emit({"error": "module vanishes", "failing_pair": failing})
        return EXIT_NEGATIVE
    verdict = dirac_index_nonzero(datum, lam)
    _emit(verdict.to_dict())
    return EXIT_OK if verdict.dirac_index_nonzero else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    reports = []
    if args.which in ("overlap", "all"):
        reports.append(sweep_overlap(args.n_max))
    if args.which in ("positional", "all"):
        reports.append(sweep_positional_lemma(args.n_max))
    if args.which in ("dirac", "all"):
        span = args.span if args.span is not None else args.n_max + 2
        reports.append(sweep_dirac_equivalence(args.n_max, span))
    payload = {"reports": [r.to_dict() for r in reports]}
    _emit(payload)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_NEGATIVE


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--input",
        default="-",
        help="JSON input file, or '-' for stdin (default)",
    )
    parser.add_argument("--pairs", help="inline pairs, e.g. '2,1;3,1;0,2'")
    parser.add_argument(
        "--lambda", dest="lam", help="inline lambda values, e.g. '0,2,4'"
    )


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aqtab",
        description="Signed tableaux, positivity ranges and Dirac-index "
        "verdicts for cohomologically induced modules of U(p,q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build the signed tableau and quasitableau")
    _add_input_flags(p_build)
    p_build.add_argument(
        "--format", choices=("ascii", "latex", "json"), default="ascii"
    )
    p_build.add_argument("--show-blocks", action="store_true")
    p_build.set_defaults(func=cmd_build)

    p_classify = sub.add_parser("classify", help="positivity-range classification")
    _add_input_flags(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_nonvan = sub.add_parser("nonvanishing", help="module non-vanishing verdict")
    _add_input_flags(p_nonvan)
    p_nonvan.set_defaults(func=cmd_nonvanishing)

    p_dirac = sub.add_parser("dirac", help="Dirac-index non-vanishing verdict")
    _add_input_flags(p_dirac)
    p_dirac.set_defaults(func=cmd_dirac)

    p_verify = sub.add_parser("verify", help="run exhaustive verification sweeps")
    p_verify.add_argument(
        "--which",
        choices=("overlap", "dirac", "positional", "all"),
        default="all",
    )
    p_verify.add_argument("--n-max", type=int, default=5)
    p_verify.add_argument("--span", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        return _fail(str(exc))
    except AqtabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"error": str(exc)})
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
