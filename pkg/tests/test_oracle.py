import random

import pytest

from wsh import (
    PrecisionExhausted,
    SeriesMatrix,
    TruncatedSeries,
    build_complex,
    chain_to_series,
    choose_precision,
    from_maximal,
    homology_via_snf,
    in_column_span,
    lift_cycle,
    snf_valuations,
    weighted_boundary_matrix,
)
from .conftest import (
    RATIONALS as Q,
    GF2,
    random_weighted_complex,
    tetra_boundary_complex,
)

N = 8


def mono(exp, coeff=1, field=Q, prec=N):
    return TruncatedSeries.monomial(field, prec, exp, field.from_int(coeff))


def zero(field=Q, prec=N):
    return TruncatedSeries.zero(field, prec)


def test_series_construction_and_valuation():
    s = TruncatedSeries.from_coefficients(Q, [Q.zero(), Q.one(), Q.from_int(2)])
    assert s.precision == 3
    assert s.valuation() == 1
    assert s.coefficient_list() == [Q.zero(), Q.one(), Q.from_int(2)]
    assert zero().valuation() is None
    assert zero().is_zero()


def test_series_addition_cancels():
    s = mono(2) + mono(2, -1)
    assert s.is_zero()
    t = mono(1) + mono(3)
    assert t.coeffs == {1: Q.one(), 3: Q.one()}
    assert (t - t).is_zero()


def test_series_multiplication_truncates():
    s = mono(3) * mono(6)
    assert s.is_zero()
    t = (mono(0) + mono(1)) * (mono(0) + mono(1, -1))
    assert t.coeffs == {0: Q.one(), 2: Q.neg(Q.one())}


def test_series_division_exact():
    num = mono(2) + mono(4)
    q = num.divide_exact(mono(2))
    assert q.coeffs == {0: Q.one(), 2: Q.one()}
    # quotient is only known below precision - divisor valuation
    assert (q * mono(2)).coeffs == num.coeffs


def test_series_division_by_unit_geometric():
    one_minus_pi = mono(0) + mono(1, -1)
    inv = one_minus_pi.inverse()
    assert inv.coeffs == {e: Q.one() for e in range(N)}
    assert (inv * one_minus_pi).coeffs == {0: Q.one()}


def test_series_division_guards():
    with pytest.raises(ZeroDivisionError):
        mono(1).divide_exact(zero())
    with pytest.raises(ValueError):
        mono(0).divide_exact(mono(1))
    with pytest.raises(ValueError):
        mono(1).inverse()


def test_monomial_beyond_precision():
    with pytest.raises(PrecisionExhausted):
        TruncatedSeries.monomial(Q, 4, 4)
    with pytest.raises(PrecisionExhausted):
        TruncatedSeries.monomial(Q, 1, 3)
    # a zero coefficient stores nothing, any exponent is fine
    assert TruncatedSeries.monomial(Q, 2, 5, Q.zero()).is_zero()


def test_choose_precision_examples():
    assert choose_precision(from_maximal([("a", "b", "c")], 0)) == 1
    assert choose_precision(tetra_boundary_complex()) == 39
    edge = build_complex([(("a",), 2), (("b",), 2), (("a", "b"), 2)])
    assert choose_precision(edge) == 7


def _matrix(rows, prec=N, field=Q):
    return SeriesMatrix(field, prec, rows, ncols=len(rows[0]) if rows else 0)


def test_snf_diagonal():
    m = _matrix([[mono(1), zero()], [zero(), mono(2)]])
    assert snf_valuations(m) == [1, 2]


def test_snf_rank_one():
    m = _matrix([[mono(1), mono(1)], [mono(1), mono(1)]])
    assert snf_valuations(m) == [1]


def test_snf_unit_pivot():
    m = _matrix([[mono(0), mono(1)], [mono(1), mono(2)]])
    assert snf_valuations(m) == [0]


def test_snf_zero_and_empty():
    assert snf_valuations(_matrix([[zero(), zero()]])) == []
    assert snf_valuations(SeriesMatrix(Q, N, [], ncols=3)) == []


def test_snf_needs_column_ops():
    # [[pi, 1], [pi^2, pi^3]]: unit pivot at (0,1) after a column swap,
    # remaining entry pi^2 + pi^4 has valuation 2
    m = _matrix([[mono(1), mono(0)], [mono(2), mono(3)]])
    assert snf_valuations(m) == [0, 2]


def test_snf_invariant_under_unimodular_factors():
    rng = random.Random(13)
    for _ in range(20):
        nr, nc = rng.randint(1, 4), rng.randint(1, 4)
        prec = 12
        rows = [
            [
                TruncatedSeries(
                    Q,
                    prec,
                    {
                        e: Q.from_int(rng.randint(-2, 2))
                        for e in rng.sample(range(6), rng.randint(0, 3))
                    },
                )
                for _ in range(nc)
            ]
            for _ in range(nr)
        ]
        m = SeriesMatrix(Q, prec, rows, ncols=nc)

        def unimodular(k):
            # product of unit-triangular factors, determinant exactly 1
            low = SeriesMatrix.identity(Q, prec, k)
            up = SeriesMatrix.identity(Q, prec, k)
            for i in range(k):
                for j in range(k):
                    if i == j or rng.random() < 0.4:
                        continue
                    entry = TruncatedSeries(
                        Q, prec, {rng.randint(0, 3): Q.from_int(rng.randint(-2, 2))}
                    )
                    if i > j:
                        low.rows[i][j] = entry
                    else:
                        up.rows[i][j] = entry
            return low.mat_mul(up)

        left = unimodular(nr)
        right = unimodular(nc)
        product = left.mat_mul(m).mat_mul(right)
        assert snf_valuations(product) == snf_valuations(m)


def test_weighted_boundary_matrix_entries(filled_triangle):
    A = weighted_boundary_matrix(filled_triangle, 2, Q)
    prec = choose_precision(filled_triangle)
    assert A.precision == prec
    col = A.column(0)
    vals = [s.valuation() for s in col]
    assert vals == [1, 1, 1]


def test_weighted_boundary_matrix_rejects_tiny_precision(filled_triangle):
    with pytest.raises(PrecisionExhausted):
        weighted_boundary_matrix(filled_triangle, 2, Q, precision=1)


def test_weighted_boundary_squares_to_zero():
    rng = random.Random(3)
    for _ in range(15):
        X = random_weighted_complex(rng, max_simplices=20)
        prec = choose_precision(X)
        for n in range(2, X.dim + 1):
            lower = weighted_boundary_matrix(X, n - 1, Q, prec)
            upper = weighted_boundary_matrix(X, n, Q, prec)
            assert lower.mat_mul(upper).is_zero()


def test_in_column_span_weighted_image(filled_triangle):
    prec = choose_precision(filled_triangle)
    A = weighted_boundary_matrix(filled_triangle, 2, Q, prec)
    beta = {("a", "b"): Q.one(), ("a", "c"): Q.neg(Q.one()), ("b", "c"): Q.one()}
    lifted = lift_cycle(beta, filled_triangle, Q)
    vec = chain_to_series(lifted, filled_triangle, Q, prec)
    pi = TruncatedSeries.monomial(Q, prec, 1)
    assert not in_column_span(A, vec)
    assert in_column_span(A, [pi * x for x in vec])


def test_in_column_span_identity_like():
    cols = _matrix([[mono(0), zero()], [zero(), mono(2)]])
    assert in_column_span(cols, [mono(3), mono(2)])
    assert not in_column_span(cols, [mono(3), mono(1)])
    assert not in_column_span(_matrix([[mono(1)], [zero()]]), [zero(), mono(0)])


def test_homology_via_snf_tetra():
    X = tetra_boundary_complex()
    assert homology_via_snf(X, 0, Q) == (1, [1, 3, 3])
    assert homology_via_snf(X, 1, Q) == (0, [1, 1, 1])
    assert homology_via_snf(X, 2, Q) == (1, [])
    assert homology_via_snf(X, 1, GF2) == (0, [1, 1, 1])


def test_homology_via_snf_filled_triangle(filled_triangle):
    assert homology_via_snf(filled_triangle, 1, Q) == (0, [1])


def test_homology_via_snf_constant_weights_is_classical():
    X = from_maximal([("a", "b", "c"), ("a", "c", "d"), ("a", "b", "d"), ("b", "c", "d")], 4)
    assert homology_via_snf(X, 0, Q) == (1, [])
    assert homology_via_snf(X, 1, Q) == (0, [])
    assert homology_via_snf(X, 2, Q) == (1, [])


def test_homology_via_snf_empty_dimension(hollow_triangle):
    assert homology_via_snf(hollow_triangle, 2, Q) == (0, [])
