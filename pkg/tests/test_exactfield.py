from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lrtriples.exactfield import (
    GF, QQ, DivisionByZero, FieldError, FieldSpec, MixedFields, NoSuchRoot, Scalar,
    characteristic_ok, field_arith, find_root_of_unity, is_prime, multiplicative_order,
    smallest_prime_with_root,
)

PRIMES = [2, 3, 5, 7, 11, 13, 17, 29, 101]


def test_rational_sum():
    assert Scalar(Fraction(1, 2)) + Scalar(Fraction(1, 3)) == Scalar(Fraction(5, 6))
    assert str(Scalar("1/2") + Scalar("1/3")) == "5/6"


def test_gf13_product():
    F = GF(13)
    assert field_arith(F(5), F(8), "mul") == 1


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QQ(3) / QQ(0)
    with pytest.raises(DivisionByZero):
        GF(7)(3) / GF(7)(14)


def test_mixed_fields_rejected():
    with pytest.raises(MixedFields):
        GF(7)(1) + GF(11)(1)
    with pytest.raises(MixedFields):
        field_arith(QQ(1), GF(5)(1), "add")


def test_roots_of_unity():
    assert find_root_of_unity(GF(13), 4) == 5
    assert find_root_of_unity(GF(7), 6) == 3
    assert find_root_of_unity(QQ, 2) == -1
    with pytest.raises(NoSuchRoot):
        find_root_of_unity(QQ, 3)
    with pytest.raises(NoSuchRoot):
        find_root_of_unity(GF(7), 4)


def test_characteristic_constraints():
    assert characteristic_ok(QQ, "zero_or_greater", 6)
    assert not characteristic_ok(GF(3), "zero_or_greater", 4)
    assert not characteristic_ok(GF(2), "not_two")
    assert characteristic_ok(GF(5), "equals", 5)


def test_prime_helpers():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert smallest_prime_with_root(6) == 7
    assert smallest_prime_with_root(12) == 13
    assert smallest_prime_with_root(6, exclude=(7,)) == 13
    with pytest.raises(FieldError):
        GF(9)


def test_field_parsing_and_json():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("gfp:7") == GF(7)
    for F in (QQ, GF(13)):
        assert FieldSpec.from_json(F.to_json()) == F
    with pytest.raises(FieldError):
        FieldSpec.parse("r")


def test_canonical_encoding():
    assert Scalar("6/4").to_json() == "3/2"
    assert Scalar(-3).to_json() == "-3"
    assert GF(7)(Fraction(1, 2)).to_json() == "4"


def test_sqrt():
    assert QQ.sqrt(QQ("9/4")) == QQ("3/2")
    assert QQ.sqrt(QQ(2)) is None
    assert GF(7).sqrt(GF(7)(2)) == 3
    assert GF(13).sqrt(GF(13)(2)) is None


fields = st.sampled_from([QQ] + [GF(p) for p in PRIMES])


@st.composite
def field_and_values(draw, k=2):
    F = draw(fields)
    if F.p is None:
        vals = [F(draw(st.fractions(max_denominator=50))) for _ in range(k)]
    else:
        vals = [F(draw(st.integers(0, F.p - 1))) for _ in range(k)]
    return F, vals


@given(field_and_values(k=1))
def test_inverse_property(fv):
    F, (a,) = fv
    if a:
        assert a * (1 / a) == F.one
        assert a * a.inverse() == 1


@given(field_and_values(k=3))
def test_ring_axioms(fv):
    F, (a, b, c) = fv
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    assert Scalar(a.to_json(), F) == a


@given(st.sampled_from([GF(p) for p in (7, 11, 13, 17, 29, 101)]), st.integers(1, 12))
def test_root_of_unity_has_exact_order(F, n):
    if (F.p - 1) % n:
        with pytest.raises(NoSuchRoot):
            find_root_of_unity(F, n)
        return
    w = find_root_of_unity(F, n)
    assert w ** n == 1
    assert multiplicative_order(w) == n
    assert all(w ** m != 1 for m in range(1, n) if n % m == 0)
