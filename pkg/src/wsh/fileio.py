"""Reading and writing weighted complexes, and rendering results.

The file format is line based. Each record is the vertices of a simplex
separated by whitespace, then a semicolon, then a non-negative integer
weight:

    a b c ; 2

Full-line comments start with '#', blank lines are skipped. If the first
significant line is '!maximal W', only maximal simplices need to be listed:
every missing face is added with the weight W.
"""

from __future__ import annotations

import json

from .complexes import WeightedComplex, build_complex, complete_faces, from_maximal
from .errors import (
    ComplexError,
    DuplicateSimplex,
    EmptyInput,
    MissingFace,
    MonotonicityViolation,
    ParseError,
)

__all__ = [
    "parse_complex_file",
    "serialize_complex",
    "render_text_report",
    "render_json_report",
]


def _decorate(err, line_of):
    """Re-raise a construction error with the line of the offending record."""
    key = None
    if isinstance(err, MonotonicityViolation):
        key = err.face if err.face in line_of else err.coface
    elif isinstance(err, (DuplicateSimplex, MissingFace)):
        key = err.simplex
    if key is not None and key in line_of:
        err.line = line_of[key]
        err.args = (f"line {err.line}: {err.args[0]}",)
    raise err


def parse_complex_file(text: str, complete: bool = False) -> WeightedComplex:
    """Parse the record format into a validated complex.

    With complete=True, faces missing from the file are filled in with the
    maximum weight among their listed cofaces instead of being an error.
    """
    lines = text.splitlines()
    records = []
    line_of = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("!"):
            if records:
                raise ParseError(lineno, "directives must precede all records")
            parts = line[1:].split()
            if len(parts) != 2 or parts[0] != "maximal":
                raise ParseError(lineno, f"unknown directive {line!r}")
            try:
                default = int(parts[1])
            except ValueError:
                raise ParseError(lineno, f"bad default weight {parts[1]!r}") from None
            if default < 0:
                raise ParseError(lineno, "default weight must be non-negative")
            return _parse_maximal(lines, lineno, default)
        if line.count(";") != 1:
            raise ParseError(lineno, "expected 'v1 v2 ... ; weight'")
        left, right = line.split(";")
        labels = tuple(left.split())
        if not labels:
            raise ParseError(lineno, "record has no vertices")
        if len(set(labels)) != len(labels):
            raise ParseError(lineno, f"repeated vertex in {' '.join(labels)!r}")
        try:
            weight = int(right.strip())
        except ValueError:
            raise ParseError(lineno, f"bad weight {right.strip()!r}") from None
        if weight < 0:
            raise ParseError(lineno, "weight must be non-negative")
        key = tuple(sorted(labels))
        if key in line_of:
            raise ParseError(
                lineno, f"simplex {' '.join(key)!r} already given on line {line_of[key]}"
            )
        line_of[key] = lineno
        records.append((labels, weight))

    if not records:
        raise EmptyInput("no simplices in input")
    try:
        if complete:
            return complete_faces(records)
        return build_complex(records)
    except ComplexError as err:
        _decorate(err, line_of)


def _parse_maximal(lines, directive_lineno: int, weight: int) -> WeightedComplex:
    """Bare-record mode: one maximal simplex per line, faces filled in."""
    simplices = []
    line_of = {}
    for lineno, raw in enumerate(lines, start=1):
        if lineno <= directive_lineno:
            continue
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("!"):
            raise ParseError(lineno, "directives must precede all records")
        if ";" in line:
            raise ParseError(lineno, "maximal mode lists bare simplices, no weights")
        labels = tuple(line.split())
        if len(set(labels)) != len(labels):
            raise ParseError(lineno, f"repeated vertex in {line!r}")
        key = tuple(sorted(labels))
        if key in line_of:
            raise ParseError(
                lineno, f"simplex {' '.join(key)!r} already given on line {line_of[key]}"
            )
        line_of[key] = lineno
        simplices.append(labels)
    if not simplices:
        raise EmptyInput("no simplices in input")
    return from_maximal(simplices, weight)


def serialize_complex(X: WeightedComplex) -> str:
    """Inverse of parse_complex_file up to ordering and formatting."""
    lines = []
    for n in range(X.dim + 1):
        for s in X.n_simplices(n):
            lines.append(f"{' '.join(s)} ; {X.weight(s)}")
    return "\n".join(lines) + "\n"


def _module_text(module) -> str:
    parts = ["R"] * module.free_rank + [f"R/(pi^{m})" for m in module.torsion]
    return " (+) ".join(parts) if parts else "0"


def _chain_text(chain, field) -> str:
    terms = []
    for s in sorted(chain.terms):
        for e, c in chain.terms[s]:
            cs = field.to_str(c)
            terms.append(f"{cs}*pi^{e}*({' '.join(s)})")
    return " + ".join(terms)


def render_text_report(modules, field, with_generators: bool = False) -> str:
    """Human-readable summary, one homology module per line."""
    lines = [f"field: {field.name}"]
    for mod in modules:
        lines.append(f"H_{mod.n} = {_module_text(mod)}")
        if with_generators and mod.generators:
            for chain in mod.generators:
                lines.append(f"  generator: {_chain_text(chain, field)}")
    return "\n".join(lines) + "\n"


def render_json_report(modules, field, with_generators: bool = False) -> str:
    """Machine-readable summary with a stable key layout."""
    dims = []
    for mod in modules:
        entry = {
            "n": mod.n,
            "free_rank": mod.free_rank,
            "torsion": list(mod.torsion),
            "pairs": [
                {"kappa": list(p.kappa), "mu": list(p.mu), "m": p.m}
                for p in mod.pairing.pairs
            ],
        }
        if with_generators and mod.generators is not None:
            entry["generators"] = [
                {
                    "terms": [
                        {
                            "simplex": list(s),
                            "poly": [[e, field.to_str(c)] for e, c in chain.terms[s]],
                        }
                        for s in sorted(chain.terms)
                    ]
                }
                for chain in mod.generators
            ]
        dims.append(entry)
    return json.dumps({"field": field.name, "dimensions": dims}, indent=2) + "\n"
