"""Weighted simplicial complexes.

A weighted complex is a finite simplicial complex together with a natural
number weight per simplex that never increases when passing from a face to
a coface. A simplex is a sorted tuple of string vertex labels; every
deterministic tie-break downstream uses the lexicographic order on those
tuples.

The boundary of an edge (a, b) is b - a; in general the i-th face drops
the i-th smallest vertex and carries sign (-1)^i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionOutOfRange,
    DuplicateSimplex,
    EmptyInput,
    InvalidSimplex,
    MissingFace,
    MonotonicityViolation,
)

__all__ = [
    "WeightedComplex",
    "BoundaryMatrix",
    "build_complex",
    "from_maximal",
    "complete_faces",
    "signed_faces",
    "boundary_exponent_matrix",
]


def signed_faces(simplex):
    """[(face, sign)] with the i-th vertex dropped and sign (-1)^i.

    Vertices have zero boundary, so a 0-simplex yields the empty list.
    """
    if len(simplex) <= 1:
        return []
    out = []
    for i in range(len(simplex)):
        face = simplex[:i] + simplex[i + 1 :]
        out.append((face, 1 if i % 2 == 0 else -1))
    return out


def _canonical_labels(vertices):
    labels = tuple(sorted(str(v) for v in vertices))
    if not labels:
        raise InvalidSimplex("empty simplex")
    if len(set(labels)) != len(labels):
        raise InvalidSimplex(f"repeated vertex in simplex {{{' '.join(labels)}}}")
    return labels


def _check_weight(labels, w):
    if isinstance(w, bool) or not isinstance(w, int) or w < 0:
        raise ValueError(
            f"weight of {{{' '.join(labels)}}} must be a non-negative integer, got {w!r}"
        )


class WeightedComplex:
    """Immutable weighted complex. Construct via build_complex and friends."""

    __slots__ = ("labels", "_weights", "_per_dim", "_index", "dim")

    def __init__(self, weight_by_labels):
        # weight_by_labels: {sorted label tuple: weight}, assumed validated
        self._weights = dict(weight_by_labels)
        self.labels = tuple(sorted({v for s in self._weights for v in s}))
        self.dim = max(len(s) for s in self._weights) - 1
        per_dim = [[] for _ in range(self.dim + 1)]
        for s in self._weights:
            per_dim[len(s) - 1].append(s)
        self._per_dim = tuple(tuple(sorted(d)) for d in per_dim)
        self._index = tuple({s: i for i, s in enumerate(d)} for d in self._per_dim)

    def __contains__(self, simplex):
        s = tuple(simplex)
        if s in self._weights:
            return True
        try:
            return _canonical_labels(s) in self._weights
        except InvalidSimplex:
            return False

    def __len__(self):
        return len(self._weights)

    def __eq__(self, other):
        return (
            isinstance(other, WeightedComplex)
            and self.labels == other.labels
            and self._weights == other._weights
        )

    def __repr__(self):
        return f"WeightedComplex({len(self)} simplices, dim {self.dim})"

    def weight(self, simplex) -> int:
        s = tuple(simplex)
        w = self._weights.get(s)
        if w is None:
            w = self._weights[_canonical_labels(s)]
        return w

    def total_weight(self) -> int:
        return sum(self._weights.values())

    def n_simplices(self, n):
        """All n-simplices in ascending lexicographic id order."""
        if n < 0 or n > self.dim:
            return ()
        return self._per_dim[n]

    def index_of(self, simplex) -> int:
        s = tuple(simplex)
        return self._index[len(s) - 1][s]

    def simplices(self):
        for d in self._per_dim:
            yield from d

    def canonical(self, vertices):
        """Sorted label tuple for arbitrary vertex input."""
        return _canonical_labels(vertices)


def build_complex(pairs) -> WeightedComplex:
    """Build from (vertices, weight) pairs listing every simplex explicitly.

    Validates distinct records, face closure, and weight monotonicity
    (a face never weighs less than its cofaces).
    """
    weights = {}
    for vertices, w in pairs:
        labels = _canonical_labels(vertices)
        _check_weight(labels, w)
        if labels in weights:
            raise DuplicateSimplex(labels)
        weights[labels] = w
    if not weights:
        raise EmptyInput("no simplices given")
    for labels, w in weights.items():
        if len(labels) == 1:
            continue
        # dropping the last vertex first scans faces in ascending
        # lexicographic order, for deterministic error reporting
        for i in reversed(range(len(labels))):
            face = labels[:i] + labels[i + 1 :]
            if face not in weights:
                raise MissingFace(labels, face)
            if weights[face] < w:
                raise MonotonicityViolation(face, labels, weights[face], w)
    return WeightedComplex(weights)


def _closure(label_simplices):
    out = set(label_simplices)
    frontier = list(out)
    while frontier:
        s = frontier.pop()
        if len(s) == 1:
            continue
        for i in range(len(s)):
            face = s[:i] + s[i + 1 :]
            if face not in out:
                out.add(face)
                frontier.append(face)
    return out


def from_maximal(simplices, weight: int) -> WeightedComplex:
    """Closure of the given simplices with one uniform weight."""
    tops = [_canonical_labels(s) for s in simplices]
    if not tops:
        raise EmptyInput("no simplices given")
    _check_weight(tops[0], weight)
    return WeightedComplex({s: weight for s in _closure(tops)})


def complete_faces(pairs) -> WeightedComplex:
    """Build from an incomplete listing, filling in missing faces.

    A missing face receives the maximum weight among the listed simplices
    that contain it, the least weight that keeps monotonicity possible.
    The listed simplices themselves must already be mutually monotone.
    """
    listed = {}
    for vertices, w in pairs:
        labels = _canonical_labels(vertices)
        _check_weight(labels, w)
        if labels in listed:
            raise DuplicateSimplex(labels)
        listed[labels] = w
    if not listed:
        raise EmptyInput("no simplices given")
    items = sorted(listed.items(), key=lambda kv: len(kv[0]))
    for i, (s, ws) in enumerate(items):
        sset = set(s)
        for t, wt in items[i + 1 :]:
            if len(t) > len(s) and sset.issubset(t) and ws < wt:
                raise MonotonicityViolation(s, t, ws, wt)
    weights = dict(listed)
    for face in _closure(listed):
        if face in weights:
            continue
        fset = set(face)
        weights[face] = max(w for s, w in listed.items() if fset.issubset(s))
    return build_complex(weights.items())


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse weighted boundary structure in dimension n.

    Rows are the (n-1)-simplices, columns the n-simplices, both in the
    complex's lexicographic order. Each column holds (row index, sign,
    exponent) triples; the exponent is weight(face) - weight(simplex),
    always non-negative by monotonicity. Dropping the exponents gives the
    ordinary boundary matrix over a coefficient field.
    """

    n: int
    row_simplices: tuple
    col_simplices: tuple
    columns: tuple


def boundary_exponent_matrix(X: WeightedComplex, n: int) -> BoundaryMatrix:
    if n < 1 or n > X.dim:
        raise DimensionOutOfRange(n, f"boundary defined for 1 <= n <= {X.dim}, got {n}")
    rows = X.n_simplices(n - 1)
    cols = X.n_simplices(n)
    row_index = {s: i for i, s in enumerate(rows)}
    columns = []
    for s in cols:
        ws = X.weight(s)
        col = tuple(
            (row_index[face], sign, X.weight(face) - ws) for face, sign in signed_faces(s)
        )
        columns.append(col)
    return BoundaryMatrix(n, rows, cols, tuple(columns))
