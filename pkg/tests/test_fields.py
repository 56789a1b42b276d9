import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pflags.errors import InvalidFieldError
from pflags.fields import GF, Field, find_irreducible_coeffs, is_prime

SMALL_FIELDS = [GF(2), GF(3), GF(5), GF(7), GF(2, 2), GF(2, 3), GF(3, 2)]


def brute_force_irreducible(coeffs, p):
    """Oracle: a monic polynomial of degree k >= 2 over F_p is reducible iff it
    factors as (monic of degree a)(monic of degree k - a); checked by
    expanding every product."""
    k = len(coeffs) - 1
    for a in range(1, k // 2 + 1):
        b = k - a
        for f_low in itertools.product(range(p), repeat=a):
            f = list(f_low) + [1]
            for g_low in itertools.product(range(p), repeat=b):
                g = list(g_low) + [1]
                prod = [0] * (k + 1)
                for i, x in enumerate(f):
                    for j, y in enumerate(g):
                        prod[i + j] = (prod[i + j] + x * y) % p
                if prod == list(coeffs):
                    return False
    return True


def test_find_irreducible_prime_field_marker():
    assert find_irreducible_coeffs(3, 1) == (0, 1)


@pytest.mark.parametrize("p,k,expected", [(2, 2, (1, 1, 1)), (2, 3, (1, 1, 0, 1))])
def test_find_irreducible_matches_exhaustive_search(p, k, expected):
    # oracle first: enumerate candidates in base-p integer order, test each by
    # brute-force factoring, and freeze the first hit
    for n in range(p**k):
        digits = []
        v = n
        for _ in range(k):
            digits.append(v % p)
            v //= p
        cand = tuple(digits) + (1,)
        if brute_force_irreducible(cand, p):
            assert cand == expected
            break
    assert find_irreducible_coeffs(p, k) == expected


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_find_irreducible_is_irreducible_and_minimal(p, k):
    got = find_irreducible_coeffs(p, k)
    assert brute_force_irreducible(got, p)
    value = sum(c * p**i for i, c in enumerate(got[:-1]))
    for n in range(value):
        digits = []
        v = n
        for _ in range(k):
            digits.append(v % p)
            v //= p
        assert not brute_force_irreducible(tuple(digits) + (1,), p)


def test_non_prime_rejected():
    with pytest.raises(InvalidFieldError):
        Field(6)
    with pytest.raises(InvalidFieldError):
        find_irreducible_coeffs(4, 2)
    assert is_prime(2) and is_prime(97) and not is_prime(91)


def test_reducible_modulus_rejected():
    with pytest.raises(InvalidFieldError):
        Field(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2 over F_2


@pytest.mark.parametrize("field", SMALL_FIELDS, ids=repr)
def test_field_axioms_exhaustive(field):
    els = list(field.elements())
    for a in els:
        assert field.add(a, field.neg(a)) == 0
        assert field.mul(a, 1) == a
        if a:
            assert field.mul(a, field.inv(a)) == 1
    for a in els:
        for b in els:
            assert field.add(a, b) == field.add(b, a)
            assert field.mul(a, b) == field.mul(b, a)


@pytest.mark.parametrize("field", [GF(3, 2), GF(2, 3)], ids=repr)
def test_distributivity_exhaustive(field):
    els = list(field.elements())
    for a, b, c in itertools.product(els, repeat=3):
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))


@given(st.data())
@settings(max_examples=60)
def test_frobenius_and_pth_root(data):
    field = data.draw(st.sampled_from(SMALL_FIELDS))
    a = data.draw(st.integers(0, field.q - 1))
    assert field.pth_root(field.frobenius(a)) == a
    assert field.frobenius(field.pth_root(a)) == a


@pytest.mark.parametrize("field", SMALL_FIELDS, ids=repr)
def test_sqrt_against_exhaustive_squares(field):
    squares = {field.mul(a, a) for a in field.elements()}
    for a in field.elements():
        assert field.is_square(a) == (a in squares)
        root = field.sqrt(a)
        if a in squares:
            assert root is not None and field.mul(root, root) == a
        else:
            assert root is None


def test_element_codec_roundtrip():
    field = GF(3, 2)
    for a in field.elements():
        assert field.from_coeffs(field.coeffs(a)) == a
    assert field.from_coeffs([2, 1]) == 5


def test_gf_cache_shares_instances():
    assert GF(5) is GF(5)
    assert GF(2, 3) == Field(2, 3)
