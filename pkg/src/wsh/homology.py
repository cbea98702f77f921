"""Homology of weighted complexes over F[[pi]].

All linear algebra here runs over the coefficient field F. The valuation
ring structure enters only through processing orders, through the exponent
by which a cycle lifts, and through the exponent attached to each pair.

The computation in each dimension n has two stages.

Stage one (cycle_basis) scans the n-simplices by decreasing weight, ties in
ascending lexicographic order, and greedily splits them: a simplex whose
boundary is dependent on the boundaries of the earlier independent ones
receives a cycle in which it appears with coefficient one and minimal
weight; the rest keep linearly independent boundary columns. The cycles
span the kernel of the ordinary boundary map, and each dependent simplex
appears in no cycle but its own.

Stage two (simplex_pairing) expresses the boundaries of the independent
(n+1)-simplices in that cycle basis. Because each dependent n-simplex is
exclusive to its own cycle, the coefficient on a cycle equals the signed
incidence coefficient of its owner, so the projection matrix is read off
the face lists directly. A single greedy column scan with eliminations
then pairs cycle owners with (n+1)-simplices; the weight drop across a
pair is the pi-power of one torsion summand, and unpaired owners give
free summands.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import NamedTuple

from .complexes import WeightedComplex, boundary_exponent_matrix, signed_faces
from .errors import DimensionOutOfRange, MismatchedDimensions, ZeroChain
from .fields import FieldSpec

__all__ = [
    "CycleBasis",
    "WeightedChain",
    "PairedSimplices",
    "SimplexPairing",
    "HomologyModule",
    "cycle_basis",
    "lift_cycle",
    "simplex_pairing",
    "homology",
    "homology_all",
]


@dataclass
class CycleBasis:
    """Split of the n-simplices produced by the greedy boundary scan.

    dependent: simplices owning a cycle, in processing order.
    independent: simplices whose boundary columns are linearly independent.
    cycles: owner simplex -> cycle as a {simplex: coefficient} chain; the
    owner has coefficient one and minimal weight within the support.
    """

    n: int
    dependent: list
    independent: list
    cycles: dict


@dataclass
class WeightedChain:
    """Chain with pi-polynomial coefficients, one term list per simplex.

    terms maps a simplex to a tuple of (exponent, field scalar) pairs with
    strictly increasing exponents.
    """

    n: int
    terms: dict


class PairedSimplices(NamedTuple):
    kappa: tuple  # dependent n-simplex owning the cycle
    mu: tuple  # independent (n+1)-simplex
    m: int  # weight(kappa) - weight(mu), never negative


@dataclass
class SimplexPairing:
    """Result of the greedy column scan in dimension n.

    pairs come in scan order (cycle owners by increasing weight). Each pair
    carries the coefficients the selected row had at pairing time, expressed
    over cycle owners; those drive the torsion generators. unpaired owners
    correspond to free summands.
    """

    n: int
    pairs: list
    unpaired: list
    row_coefficients: list = dataclass_field(default_factory=list)


@dataclass
class HomologyModule:
    """H_n as R^free_rank plus one R/(pi^m) summand per torsion entry.

    torsion is sorted ascending. generators, when requested, line up with
    the rendered module: free generators first, then torsion generators in
    torsion order. All generators are cycles of the weighted boundary map.
    """

    n: int
    free_rank: int
    torsion: list
    pairing: SimplexPairing
    generators: list | None = None


class _SpanTracker:
    """Incremental column elimination with combination tracking.

    Inserted columns stay linearly independent. For a query vector the
    tracker either returns its unique coefficients over the inserted
    columns or None when it falls outside their span. Reduced columns are
    kept with the combination that produced them, so each query is a single
    back-reduction pass; answers agree with solve_in_span on the same data.
    """

    def __init__(self, field, nrows):
        self.field = field
        self.nrows = nrows
        self.count = 0
        self._reduced = []  # (pivot row, reduced column, combination over inserted columns)

    def _reduce(self, vec):
        F = self.field
        v = list(vec)
        combo = [F.zero()] * self.count
        for pivot, col, c in self._reduced:
            if F.is_zero(v[pivot]):
                continue
            f = F.div(v[pivot], col[pivot])
            for i in range(self.nrows):
                if not F.is_zero(col[i]):
                    v[i] = F.sub(v[i], F.mul(f, col[i]))
            for j in range(len(c)):
                combo[j] = F.add(combo[j], F.mul(f, c[j]))
        return v, combo

    def coefficients(self, vec):
        v, combo = self._reduce(vec)
        if any(not self.field.is_zero(x) for x in v):
            return None
        return combo

    def insert(self, vec):
        F = self.field
        v, combo = self._reduce(vec)
        pivot = next(i for i in range(self.nrows) if not F.is_zero(v[i]))
        self.count += 1
        full = [F.neg(x) for x in combo] + [F.one()]
        for k in range(len(self._reduced)):
            p, col, c = self._reduced[k]
            self._reduced[k] = (p, col, c + [F.zero()])
        self._reduced.append((pivot, v, full))


def _processing_order(X, n):
    # decreasing weight, ties ascending lexicographic
    return sorted(X.n_simplices(n), key=lambda s: (-X.weight(s), s))


def cycle_basis(X: WeightedComplex, n: int, field: FieldSpec) -> CycleBasis:
    """Greedy kernel basis of the dimension-n boundary map over the field."""
    if n < 0:
        raise DimensionOutOfRange(n)
    simplices = X.n_simplices(n)
    if not simplices:
        return CycleBasis(n, [], [], {})
    if n == 0:
        # zero boundary: every vertex owns the cycle consisting of itself
        order = _processing_order(X, 0)
        return CycleBasis(0, order, [], {v: {v: field.one()} for v in order})

    bm = boundary_exponent_matrix(X, n)
    col_pos = {s: j for j, s in enumerate(bm.col_simplices)}
    nrows = len(bm.row_simplices)

    def column(s):
        vec = [field.zero()] * nrows
        for row, sign, _exp in bm.columns[col_pos[s]]:
            vec[row] = field.from_int(sign)
        return vec

    tracker = _SpanTracker(field, nrows)
    dependent, independent, cycles = [], [], {}
    for s in _processing_order(X, n):
        target = column(s)
        coeffs = tracker.coefficients(target)
        if coeffs is None:
            tracker.insert(target)
            independent.append(s)
        else:
            chain = {s: field.one()}
            for mu, c in zip(independent, coeffs):
                if not field.is_zero(c):
                    chain[mu] = field.neg(c)
            dependent.append(s)
            cycles[s] = chain
    return CycleBasis(n, dependent, independent, cycles)


def lift_cycle(chain: dict, X: WeightedComplex, field: FieldSpec) -> WeightedChain:
    """Scale each simplex by pi^(weight - minimum weight in the support).

    The result is a cycle of the weighted boundary map whenever the input
    is a cycle of the ordinary one, and at least one exponent is zero.
    """
    support = [s for s, c in chain.items() if not field.is_zero(c)]
    if not support:
        raise ZeroChain("cannot lift a zero chain")
    dims = {len(s) for s in support}
    if len(dims) != 1:
        raise MismatchedDimensions("chain mixes simplices of different dimensions")
    wmin = min(X.weight(s) for s in support)
    terms = {s: ((X.weight(s) - wmin, chain[s]),) for s in sorted(support)}
    return WeightedChain(len(support[0]) - 1, terms)


def simplex_pairing(
    X: WeightedComplex,
    n: int,
    basis_n: CycleBasis,
    basis_up: CycleBasis,
    field: FieldSpec,
) -> SimplexPairing:
    """Pair cycle owners in dimension n against independent (n+1)-simplices.

    Owners are scanned by increasing weight (ties lexicographic), candidate
    rows by decreasing weight. Each column takes the first unused row with a
    nonzero entry; the entry's column is then cleared from the other rows
    and the used row is zeroed out elsewhere, keeping later choices valid.
    Every independent (n+1)-simplex ends up in exactly one pair because
    their boundaries are linearly independent.
    """
    owners = sorted(basis_n.dependent, key=lambda s: (X.weight(s), s))
    images = sorted(basis_up.independent, key=lambda s: (-X.weight(s), s))
    q, p = len(owners), len(images)
    owner_pos = {s: i for i, s in enumerate(owners)}

    # projection of each boundary onto the cycle basis: owner exclusivity
    # makes the cycle coefficient equal the raw incidence coefficient
    rows = []
    for mu in images:
        row = [field.zero()] * q
        for face, sign in signed_faces(mu):
            i = owner_pos.get(face)
            if i is not None:
                row[i] = field.from_int(sign)
        rows.append(row)

    pairs, unpaired, row_coeffs = [], [], []
    used = [False] * p
    for k, kappa in enumerate(owners):
        j_k = next((j for j in range(p) if not used[j] and not field.is_zero(rows[j][k])), None)
        if j_k is None:
            unpaired.append(kappa)
            continue
        mu = images[j_k]
        m = X.weight(kappa) - X.weight(mu)
        assert m >= 0, "weight monotonicity should keep pair exponents non-negative"
        snapshot = {
            owners[i]: rows[j_k][i] for i in range(q) if not field.is_zero(rows[j_k][i])
        }
        pairs.append(PairedSimplices(kappa, mu, m))
        row_coeffs.append(snapshot)
        used[j_k] = True
        pivot = rows[j_k][k]
        for j in range(p):
            if j != j_k and not used[j] and not field.is_zero(rows[j][k]):
                f = field.div(rows[j][k], pivot)
                rows[j] = [
                    field.sub(a, field.mul(f, b)) for a, b in zip(rows[j], rows[j_k])
                ]
        rows[j_k] = [field.zero()] * q
        rows[j_k][k] = pivot

    assert len(pairs) == p, "independent boundaries must all be paired"
    return SimplexPairing(n, pairs, unpaired, row_coeffs)


def _combine_cycles(snapshot, basis: CycleBasis, field):
    acc = {}
    for owner, coeff in snapshot.items():
        for s, c in basis.cycles[owner].items():
            v = field.add(acc.get(s, field.zero()), field.mul(coeff, c))
            if field.is_zero(v):
                acc.pop(s, None)
            else:
                acc[s] = v
    return acc


def _module_from_pairing(X, n, basis_n, pairing, field, with_generators):
    free_rank = len(basis_n.dependent) - len(pairing.pairs)
    torsion_pairs = sorted(
        (i for i in range(len(pairing.pairs)) if pairing.pairs[i].m >= 1),
        key=lambda i: (pairing.pairs[i].m, i),
    )
    torsion = [pairing.pairs[i].m for i in torsion_pairs]
    generators = None
    if with_generators:
        generators = []
        for kappa in pairing.unpaired:
            generators.append(lift_cycle(basis_n.cycles[kappa], X, field))
        for i in torsion_pairs:
            chain = _combine_cycles(pairing.row_coefficients[i], basis_n, field)
            lifted = lift_cycle(chain, X, field)
            # the paired owner keeps the minimal weight in the combination
            assert min(X.weight(s) for s in lifted.terms) == X.weight(pairing.pairs[i].kappa)
            generators.append(lifted)
    return HomologyModule(n, free_rank, torsion, pairing, generators)


def homology(
    X: WeightedComplex, n: int, field: FieldSpec, with_generators: bool = False
) -> HomologyModule:
    """H_n of the weighted complex as a module over F[[pi]]."""
    if n < 0:
        raise DimensionOutOfRange(n)
    basis_n = cycle_basis(X, n, field)
    basis_up = cycle_basis(X, n + 1, field)
    pairing = simplex_pairing(X, n, basis_n, basis_up, field)
    return _module_from_pairing(X, n, basis_n, pairing, field, with_generators)


def homology_all(
    X: WeightedComplex, field: FieldSpec, with_generators: bool = False
) -> list:
    """H_0 through H_dim, computing each cycle basis once."""
    bases = [cycle_basis(X, n, field) for n in range(X.dim + 2)]
    out = []
    for n in range(X.dim + 1):
        pairing = simplex_pairing(X, n, bases[n], bases[n + 1], field)
        out.append(_module_from_pairing(X, n, bases[n], pairing, field, with_generators))
    return out
