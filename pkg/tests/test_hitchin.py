import random

import pytest

from pflags.errors import PreconditionError
from pflags.fields import GF
from pflags.hitchin import (
    ChartConn,
    HitchinDims,
    Verdict,
    char_poly_psi,
    hitchin_dims,
    nilpotent_flag_chart,
    no_flag_certificate_rank2,
    p_curvature_chart,
)
from pflags.matrix import MatRF, charpoly_berkowitz, gauge_transform, inverse, kernel
from pflags.poly import Poly
from pflags.pone import complete_flag, p_curvature, verify_flag
from pflags.ratfunc import RatFunc, in_frobenius_subfield
from pflags.sampling import (
    random_chart_conn,
    random_conn0,
    random_polynomial_gauge,
    random_strict_upper,
)

F2, F3, F5 = GF(2), GF(3), GF(5)


def rf(field, coeffs, den=None):
    return RatFunc(Poly(field, coeffs), Poly(field, den) if den else None)


def chart(field, rows):
    mat = MatRF(field, [[rf(field, e) if isinstance(e, list) else e for e in row]
                        for row in rows])
    return ChartConn(field, mat.n, mat)


CYCLIC = chart(F3, [[[], [1]], [[0, 1], []]])


# -- p-curvature on the chart ---------------------------------------------------------


def test_p_curvature_chart_pinned_examples():
    assert p_curvature_chart(chart(F3, [[[], []], [[], []]])).is_zero()
    scalar = p_curvature_chart(chart(F2, [[[0, 1]]]))
    assert scalar.rows[0][0] == rf(F2, [1, 0, 1])  # 1 + x^2
    psi = p_curvature_chart(CYCLIC)
    assert psi == MatRF(F3, [[rf(F3, [2]), rf(F3, [0, 1])],
                             [rf(F3, [0, 0, 1]), rf(F3, [1])]])


def test_p_curvature_chart_rational_entries():
    rng = random.Random(51)
    for _ in range(10):
        field = GF(rng.choice([2, 3]))
        c = random_chart_conn(rng, field, r_max=2)
        psi = p_curvature_chart(c)
        # O-linearity as a matrix identity: psi(x * e_i) = x * psi(e_i)
        x = RatFunc.x(field)
        for i in range(c.r):
            e = tuple(RatFunc.one(field) if t == i else RatFunc.zero(field)
                      for t in range(c.r))
            v = tuple(x * s for s in e)
            lhs = v
            for _ in range(field.p):
                from pflags.matrix import apply_connection

                lhs = apply_connection(c.A, lhs)
            assert lhs == tuple(x * s for s in psi.matvec(e))


# -- characteristic polynomial and descent -----------------------------------------------


def test_char_poly_psi_pinned_examples():
    cp = char_poly_psi(chart(F3, [[[], []], [[], []]]))
    assert all(a.is_zero() for a in cp.coeffs) and cp.descent_ok
    cp = char_poly_psi(chart(F2, [[[0, 1]]]))
    assert cp.coeffs == (rf(F2, [1, 0, 1]),) and cp.descent_ok
    cp = char_poly_psi(CYCLIC)
    assert cp.coeffs[0] == rf(F3, [2, 0, 0, 2]) and cp.coeffs[1].is_zero()
    assert cp.descent_ok


def test_descent_holds_on_random_charts():
    rng = random.Random(52)
    for _ in range(40):
        field = GF(rng.choice([2, 3, 5]))
        cp = char_poly_psi(random_chart_conn(rng, field, r_max=3))
        assert cp.descent_ok
        for a in cp.coeffs:
            if not a.is_zero():
                assert in_frobenius_subfield(a, 1)


def test_charpoly_gauge_invariance():
    rng = random.Random(53)
    for _ in range(15):
        field = GF(rng.choice([2, 3, 5]))
        c = random_chart_conn(rng, field, r_max=2, num_deg=2, den_deg=1)
        g = random_polynomial_gauge(rng, field, c.r)
        gauged = ChartConn(field, c.r, gauge_transform(c.A, g))
        psi_c = p_curvature_chart(c)
        psi_g = p_curvature_chart(gauged)
        assert psi_g == inverse(g) * psi_c * g
        assert charpoly_berkowitz(psi_c) == charpoly_berkowitz(psi_g)


# -- dimension count -------------------------------------------------------------------------


def test_hitchin_dims_pinned_examples():
    assert hitchin_dims(2, 2) == HitchinDims(5, 4, True)
    assert hitchin_dims(2, 1) == HitchinDims(2, 2, False)
    assert hitchin_dims(3, 2) == HitchinDims(9, 6, True)


def test_hitchin_dims_formula_range():
    for g in range(2, 8):
        for r in range(1, 7):
            dims = hitchin_dims(g, r)
            assert dims.dim_b == g + (r * r - 1) * (g - 1)
            assert dims.dim_d == r * g
            assert dims.gamma_nondominant == (r >= 2)


def test_hitchin_dims_preconditions():
    with pytest.raises(PreconditionError):
        hitchin_dims(1, 2)
    with pytest.raises(PreconditionError):
        hitchin_dims(2, 0)


# -- rank-2 no-flag certificates ----------------------------------------------------------------


def test_certificate_hyperbolic_fixture():
    cert = no_flag_certificate_rank2(CYCLIC)
    assert cert.verdict == Verdict.CERTIFIED
    # Char = t^2 - (x+1)^3; the witness discriminant 4(x+1)^3 has odd valuation
    assert cert.char.coeffs[0] == rf(F3, [2, 0, 0, 2])
    assert cert.witness == rf(F3, [1, 0, 0, 1])
    # no eigenline over the ambient field: constant candidates never kill Char
    psi = p_curvature_chart(CYCLIC)
    for a in F3.elements():
        shifted = psi - MatRF.identity(F3, 2).scale(RatFunc.constant(F3, a))
        if charpoly_berkowitz(shifted)[0].is_zero():
            assert not kernel(shifted)


def test_certificate_negative_cases():
    nilp = chart(F5, [[[], [1]], [[], []]])
    cert = no_flag_certificate_rank2(nilp)
    assert cert.verdict == Verdict.NOT_CERTIFIED
    assert cert.witness is not None and cert.witness.is_zero()  # double eigenvalue 0
    assert no_flag_certificate_rank2(chart(F3, [[[], []], [[], []]])).verdict \
        == Verdict.NOT_CERTIFIED


def test_certificate_char2_cases():
    # zero trace: the constant coefficient descends to F_2(x^2), so it is a
    # square in F_2(x) and an eigenvalue always exists; never certified
    c = chart(F2, [[[], [1]], [[0, 1], []]])
    psi = p_curvature_chart(c)
    assert (psi.rows[0][0] + psi.rows[1][1]).is_zero()
    cert = no_flag_certificate_rank2(c)
    assert cert.verdict == Verdict.NOT_CERTIFIED
    assert cert.witness == rf(F2, [0, 1])  # Char = (t + x)^2
    # nonzero trace: undecided rather than possibly wrong
    u = chart(F2, [[[0, 1], [1]], [[], []]])
    assert no_flag_certificate_rank2(u).verdict == Verdict.UNKNOWN


def test_certificate_requires_rank_2():
    with pytest.raises(PreconditionError):
        no_flag_certificate_rank2(chart(F3, [[[0, 1]]]))


def test_embedded_split_connections_never_certified():
    rng = random.Random(54)
    for _ in range(60):
        field = GF(rng.choice([2, 3, 5]))
        c = random_conn0(rng, field, r_max=2, r=2)
        emb = ChartConn.from_conn0(c)
        assert p_curvature_chart(emb) == p_curvature(c)
        assert no_flag_certificate_rank2(emb).verdict != Verdict.CERTIFIED
        assert verify_flag(c, complete_flag(c))


# -- nilpotent triangularization ----------------------------------------------------------------


def test_nilpotent_flag_pinned_examples():
    out = nilpotent_flag_chart(chart(F3, [[[], [1]], [[], []]]))
    assert out.gauge == MatRF.identity(F3, 2) and out.perm == (0, 1)
    out = nilpotent_flag_chart(chart(F2, [[[], [0, 1]], [[], []]]))
    assert out.gauge == MatRF.identity(F2, 2)
    with pytest.raises(PreconditionError):
        nilpotent_flag_chart(CYCLIC)


def test_nilpotent_flag_randomized_conjugates():
    rng = random.Random(55)
    for _ in range(25):
        field = GF(rng.choice([2, 3, 5]))
        r = rng.randint(2, 3)
        upper = random_strict_upper(rng, field, r)
        g = random_polynomial_gauge(rng, field, r)
        conn = ChartConn(field, r, gauge_transform(upper, g))
        out = nilpotent_flag_chart(conn)
        transformed = gauge_transform(conn.A, out.gauge)
        for i in range(r):
            for j in range(i):
                assert transformed.rows[i][j].is_zero()
            diag = transformed.rows[i][i]
            scalar = diag
            for _ in range(field.p - 1):
                scalar = scalar.derivative()
            assert (scalar + diag**field.p).is_zero()
