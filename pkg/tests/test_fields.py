import fractions

import pytest
from hypothesis import given, settings, strategies as st

from fractions import Fraction

from raddeg.errors import FieldError
from raddeg.fields import (GF, QQ, ExtensionField, parse_field, poly_coprime_split,
                           poly_gcd, poly_is_irreducible, poly_monic, poly_mul)


def test_prime_field_basics():
    F = GF(7)
    assert F.char == 7 and F.order == 7 and F.degree == 1
    assert F.add(3, 5) == 1
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(2) == 5
    assert F.sub(2, 5) == 4


def test_gf4_arithmetic_table():
    # modulus x^2 + x + 1; w = (0,1) satisfies w^2 = w + 1
    F = GF(4)
    assert F.modulus == (1, 1, 1)
    w = (0, 1)
    assert F.mul(w, w) == (1, 1)
    assert F.mul(w, F.mul(w, w)) == F.one  # w^3 = 1
    assert F.inv(w) == (1, 1)
    assert F.add(w, F.one) == (1, 1)


def test_gf8_and_gf9_default_moduli():
    assert GF(8).modulus == (1, 1, 0, 1)  # x^3 + x + 1
    assert GF(9).modulus == (1, 0, 1)  # x^2 + 1


def test_gf9_arithmetic():
    F = GF(9)
    i = (0, 1)  # i^2 = -1 = 2
    assert F.mul(i, i) == (2, 0)
    assert F.inv(i) == F.mul((2, 0), i)  # 1/i = -i


def test_extension_inverse_roundtrip_exhaustive():
    for q in (4, 8, 9, 25):
        F = GF(q)
        seen = set()
        for a in F.elements():
            seen.add(a)
            if a == F.zero:
                continue
            assert F.mul(a, F.inv(a)) == F.one
        assert len(seen) == q


def test_frobenius_is_field_automorphism():
    F = GF(9)
    els = list(F.elements())
    for a in els:
        for b in els:
            assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
            assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
        assert F.frobenius_inverse(F.frobenius(a)) == a


def test_frobenius_fixed_field_is_prime_field():
    F = GF(8)
    fixed = [a for a in F.elements() if F.frobenius(a) == a]
    assert sorted(fixed) == sorted([F.zero, F.one])


def test_rationals():
    F = QQ
    half = fractions.Fraction(1, 2)
    assert F.add(half, half) == 1
    assert F.inv(fractions.Fraction(-2, 3)) == fractions.Fraction(-3, 2)
    assert F.char == 0
    assert F.parse("3/4") == fractions.Fraction(3, 4)
    assert F.parse("-5") == -5
    assert F.format(fractions.Fraction(7, 3)) == "7/3"
    assert F.format(fractions.Fraction(4, 2)) == "2"


def test_parse_field_spellings():
    assert parse_field("GF(2)").order == 2
    assert parse_field("GF(3^2)").order == 9
    assert parse_field("GF(9)").order == 9
    assert parse_field("QQ") is QQ
    assert parse_field("Q") is QQ
    with pytest.raises(FieldError):
        parse_field("GF(6)")
    with pytest.raises(FieldError):
        parse_field("GF(101)")  # prime too large
    with pytest.raises(FieldError):
        GF(2, k=9)  # degree too large


def test_field_equality_and_identity():
    assert GF(4) == GF(2, k=2)
    assert GF(4) != GF(2)
    assert GF(9) != GF(4)


def test_default_modulus_is_irreducible():
    for p, k in [(2, 2), (2, 3), (2, 8), (3, 2), (5, 3), (7, 2), (97, 2)]:
        F = GF(p, k=k)
        Fp = GF(p)
        assert poly_is_irreducible(Fp, list(F.modulus))


def test_custom_modulus_rejected_if_reducible():
    with pytest.raises(FieldError):
        ExtensionField(2, 2, modulus=(1, 0, 1))  # x^2 + 1 = (x+1)^2 over GF(2)


def test_element_parse_format_roundtrip():
    F = GF(4)
    for a in F.elements():
        assert F.parse(F.format(a)) == a
    P = GF(5)
    for a in range(5):
        assert P.parse(P.format(a)) == a


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 26), st.integers(0, 26), st.integers(0, 26))
def test_gf27_ring_axioms(ia, ib, ic):
    F = GF(27)
    els = list(F.elements())
    a, b, c = els[ia], els[ib], els[ic]
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == F.zero


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 24))
def test_gf25_mul_inverse(i):
    F = GF(25)
    els = list(F.elements())
    a = els[i]
    assert F.mul(F.inv(a), a) == F.one


def _check_split(F, m, expect_split):
    out = poly_coprime_split(F, m)
    if not expect_split:
        assert out is None
        return
    assert out is not None
    g, h = out
    assert poly_monic(F, poly_mul(F, g, h)) == poly_monic(F, list(m))
    assert len(poly_gcd(F, g, h)) == 1
    assert len(g) >= 2 and len(h) >= 2


def test_coprime_split_prime_field():
    F = GF(2)
    _check_split(F, [0, 1, 1], True)        # x(x+1)
    _check_split(F, [1, 1, 1], False)       # irreducible
    _check_split(F, [1, 0, 1], False)       # (x+1)^2
    _check_split(F, [0, 1, 0, 0], False)    # x^3
    _check_split(F, [0, 0, 1, 1], True)     # x^2(x+1)
    _check_split(F, [0, 1, 0, 1], True)     # x(x+1)^2
    _check_split(F, [0, 0, 1, 0, 1], True)  # (x^2+x)^2, derivative vanishes
    # product of the two irreducible cubics: forces equal-degree splitting
    _check_split(F, poly_mul(F, [1, 1, 0, 1], [1, 0, 1, 1]), True)


def test_coprime_split_extension_field():
    F = GF(4)
    w = (0, 1)
    wp1 = F.add(w, F.one)
    lin = poly_mul(F, [F.neg(F.one), F.one], [F.neg(w), F.one])
    _check_split(F, lin, True)
    quads = poly_mul(F, [w, F.one, F.one], [wp1, F.one, F.one])
    _check_split(F, quads, True)
    F9 = GF(9)
    i = (0, 1)  # i^2 = 2
    _check_split(F9, poly_mul(F9, [F9.neg(i), F9.one], [i, F9.one]), True)


def test_coprime_split_rationals():
    _check_split(QQ, [Fraction(-1), Fraction(0), Fraction(1)], True)   # x^2-1
    _check_split(QQ, [Fraction(0), Fraction(0), Fraction(1), Fraction(1)], True)  # x^2(x+1)
    _check_split(QQ, [Fraction(2), Fraction(3), Fraction(1)], True)    # (x+1)(x+2)
    _check_split(QQ, [Fraction(1), Fraction(0), Fraction(1)], False)   # x^2+1, no rational root
    _check_split(QQ, [Fraction(0), Fraction(0), Fraction(0), Fraction(1)], False)  # x^3
