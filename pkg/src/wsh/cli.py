"""Command line front end.

Exit codes: 0 on success, 1 for usage errors, 2 for input that fails
validation, 3 when --check finds a disagreement between the fast path and
the verification path.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ComplexError, ParseError, PrecisionExhausted
from .fields import FieldSpec
from .fileio import parse_complex_file, render_json_report, render_text_report
from .homology import homology, homology_all
from .oracle import homology_via_snf

USAGE_ERROR = 1
INPUT_ERROR = 2
CHECK_MISMATCH = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; this tool reserves 2 for input
    # validation, so usage problems exit 1 instead
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="wsh",
        description="Weighted simplicial homology over a discrete valuation ring.",
    )
    p.add_argument("file", help="input file of weighted simplex records")
    p.add_argument(
        "--field",
        default="rational",
        help="coefficient field: 'rational' or 'gf:<p>' for a prime p",
    )
    p.add_argument(
        "--dim",
        type=int,
        default=None,
        metavar="N",
        help="report only this homology dimension",
    )
    p.add_argument(
        "--json",
        metavar="PATH",
        default=None,
        help="write a JSON report to PATH ('-' for stdout) instead of text",
    )
    p.add_argument(
        "--generators",
        action="store_true",
        help="include homology generators in the report",
    )
    p.add_argument(
        "--check",
        action="store_true",
        help="recompute every module with the independent verifier",
    )
    p.add_argument(
        "--complete-faces",
        action="store_true",
        help="add faces missing from the input instead of rejecting it",
    )
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    try:
        field = FieldSpec.from_name(args.field)
    except ValueError as e:
        print(f"wsh: error: {e}", file=sys.stderr)
        return USAGE_ERROR

    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print(f"wsh: error: cannot read {args.file}: {e.strerror}", file=sys.stderr)
        return INPUT_ERROR

    try:
        X = parse_complex_file(text, complete=args.complete_faces)
    except ParseError as e:
        print(f"wsh: error: {args.file}: {e}", file=sys.stderr)
        return INPUT_ERROR
    except ComplexError as e:
        print(f"wsh: error: {args.file}: {e}", file=sys.stderr)
        return INPUT_ERROR

    if args.dim is not None:
        if args.dim < 0:
            print("wsh: error: --dim must be non-negative", file=sys.stderr)
            return USAGE_ERROR
        modules = [homology(X, args.dim, field, with_generators=args.generators)]
    else:
        modules = homology_all(X, field, with_generators=args.generators)

    if args.check:
        mismatches = []
        for mod in modules:
            try:
                free, torsion = homology_via_snf(X, mod.n, field)
            except PrecisionExhausted as e:
                print(f"wsh: check failed at H_{mod.n}: {e}", file=sys.stderr)
                return CHECK_MISMATCH
            if (free, torsion) != (mod.free_rank, list(mod.torsion)):
                mismatches.append((mod.n, (mod.free_rank, list(mod.torsion)), (free, torsion)))
        if mismatches:
            for n, fast, slow in mismatches:
                print(
                    f"wsh: check mismatch at H_{n}: "
                    f"fast path {fast[0]} free {fast[1]} torsion, "
                    f"verifier {slow[0]} free {slow[1]} torsion",
                    file=sys.stderr,
                )
            return CHECK_MISMATCH

    if args.json is not None:
        payload = render_json_report(modules, field, with_generators=args.generators)
        if args.json == "-":
            sys.stdout.write(payload)
        else:
            try:
                with open(args.json, "w", encoding="utf-8") as fh:
                    fh.write(payload)
            except OSError as e:
                print(f"wsh: error: cannot write {args.json}: {e.strerror}", file=sys.stderr)
                return INPUT_ERROR
    else:
        sys.stdout.write(render_text_report(modules, field, with_generators=args.generators))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
