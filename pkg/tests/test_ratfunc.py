import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pflags.fields import GF
from pflags.poly import Poly, poly_gcd
from pflags.ratfunc import RatFunc, in_frobenius_subfield, sqrt_ratfunc

FIELDS = [GF(2), GF(3), GF(5), GF(2, 2)]


def ratfuncs(field, max_len=4):
    coeff = st.integers(0, field.q - 1)
    num = st.lists(coeff, max_size=max_len)
    den = st.lists(coeff, max_size=max_len).filter(lambda cs: any(cs))
    return st.tuples(num, den).map(
        lambda nd: RatFunc(Poly(field, nd[0]), Poly(field, nd[1]))
    )


def field_and_ratfuncs(n):
    return st.sampled_from(FIELDS).flatmap(
        lambda f: st.tuples(*([st.just(f)] + [ratfuncs(f)] * n))
    )


@given(field_and_ratfuncs(1))
@settings(max_examples=100)
def test_canonical_form(fr):
    _, f = fr
    assert f.den.is_monic()
    if f.is_zero():
        assert f.den.is_one()
    else:
        assert poly_gcd(f.num, f.den).is_one()


@given(field_and_ratfuncs(2))
@settings(max_examples=100)
def test_field_arithmetic_exact(fr):
    _, f, g = fr
    assert (f + g) - g == f
    assert f * g == g * f
    if not g.is_zero():
        assert (f / g) * g == f


@given(field_and_ratfuncs(2))
@settings(max_examples=100)
def test_derivative_is_a_derivation(fr):
    _, f, g = fr
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()
    assert (f + g).derivative() == f.derivative() + g.derivative()


def test_canonical_equality_is_structural():
    F = GF(5)
    a = RatFunc(Poly(F, (0, 2)), Poly(F, (2, 0, 2)))   # 2x / (2 + 2x^2)
    b = RatFunc(Poly(F, (0, 1)), Poly(F, (1, 0, 1)))   # x / (1 + x^2)
    assert a == b and hash(a) == hash(b)


def test_zero_denominator_rejected():
    F = GF(3)
    with pytest.raises(ZeroDivisionError):
        RatFunc(Poly.one(F), Poly.zero(F))


def test_pole_order_at_zero():
    F = GF(3)
    f = RatFunc(Poly.one(F), Poly(F, (0, 0, 1)))  # 1/x^2
    assert f.pole_order_at_zero() == 2
    assert RatFunc.x(F).pole_order_at_zero() == 0


# -- square roots ---------------------------------------------------------------


def test_sqrt_pinned_examples():
    F3, F5 = GF(3), GF(5)
    assert sqrt_ratfunc(RatFunc(Poly(F3, (0, 0, 1)))) == RatFunc(Poly.x(F3))
    cube = RatFunc((Poly.x(F3) + Poly.one(F3)) ** 3)
    assert sqrt_ratfunc(cube) is None  # odd valuation at x + 1
    f = RatFunc(Poly(F5, (0, 0, 4)), Poly(F5, (1, 3, 1)))  # 4x^2/(x-1)^2
    root = sqrt_ratfunc(f)
    assert root == RatFunc(Poly(F5, (0, 2)), Poly(F5, (4, 1)))
    assert root * root == f


@given(field_and_ratfuncs(1))
@settings(max_examples=100, deadline=None)
def test_sqrt_of_square_roundtrip(fr):
    field, f = fr
    sq = f * f
    root = sqrt_ratfunc(sq)
    assert root is not None
    assert root * root == sq
    # the root matches f up to sign
    assert root == f or root == -f


@given(field_and_ratfuncs(1))
@settings(max_examples=60, deadline=None)
def test_nonsquare_rejected_odd_characteristic(fr):
    field, f = fr
    if field.p == 2 or f.is_zero():
        return
    nonsquare = next(a for a in range(1, field.q) if not field.is_square(a))
    bad = f * f * RatFunc.constant(field, nonsquare)
    assert sqrt_ratfunc(bad) is None


def test_sqrt_char2_constants_are_squares():
    F = GF(2, 3)
    for a in F.elements():
        root = sqrt_ratfunc(RatFunc.constant(F, a))
        assert root is not None and root * root == RatFunc.constant(F, a)


# -- Frobenius subfield membership ------------------------------------------------


def test_frobenius_membership_pinned_examples():
    F3 = GF(3)
    assert in_frobenius_subfield(RatFunc(Poly(F3, (0, 0, 0, 1))), 1)  # x^3
    assert not in_frobenius_subfield(RatFunc.x(F3), 1)
    f = RatFunc(Poly(F3, (1, 0, 0, 1)), Poly(F3, (2, 0, 0, 0, 0, 0, 1)))
    assert in_frobenius_subfield(f, 1)
    assert not in_frobenius_subfield(f, 2)  # x^3 is not a 9th power


@given(field_and_ratfuncs(1), st.integers(1, 2))
@settings(max_examples=60, deadline=None)
def test_membership_of_composed_functions(fr, s):
    field, f = fr
    g = f.compose_xpow(field.p**s)
    assert in_frobenius_subfield(g, s)


def test_membership_over_extension_field_uses_coefficient_roots():
    F = GF(2, 2)
    g = 2  # a field generator outside the prime subfield
    f = RatFunc(Poly(F, (0, 0, g)))  # g * x^2 = (sqrt(g) x)^2 in char 2
    assert in_frobenius_subfield(f, 1)
    assert not in_frobenius_subfield(RatFunc(Poly(F, (0, g))), 1)
