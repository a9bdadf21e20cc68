from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qha.errors import FieldMismatch, ValidationError
from qha.field import QQ, FieldSpec, Mod, is_prime
from qha.linalg import Echelon, kernel, rank, rref, solve

PRIMES = [2, 3, 5, 7, 101]


def test_parse_field_names():
    assert FieldSpec.parse("Q") == QQ
    assert FieldSpec.parse("F5").p == 5
    assert FieldSpec.parse(" F2 ").name == "F2"
    with pytest.raises(ValidationError):
        FieldSpec.parse("F4")
    with pytest.raises(ValidationError):
        FieldSpec.parse("R")


def test_is_prime_small():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_scalar_literals():
    assert QQ.parse_scalar("3/6") == Fraction(1, 2)
    assert QQ.parse_scalar("-4") == -4
    f5 = FieldSpec(5)
    assert f5.parse_scalar("7") == Mod(2, 5)
    assert f5.parse_scalar("1/2") == Mod(3, 5)
    with pytest.raises(ZeroDivisionError):
        f5.parse_scalar("1/5")
    with pytest.raises(ZeroDivisionError):
        QQ.parse_scalar("1/0")
    with pytest.raises(ValidationError):
        QQ.parse_scalar("x")


def test_mixing_fields_is_rejected():
    with pytest.raises(FieldMismatch):
        Mod(1, 3) + Mod(1, 5)
    with pytest.raises(FieldMismatch):
        QQ(Mod(1, 3))
    with pytest.raises(FieldMismatch):
        FieldSpec(5)(Mod(1, 3))


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, a, b, c):
    x, y, z = Mod(a, p), Mod(b, p), Mod(c, p)
    assert (x + y) * z == x * z + y * z
    assert x - x == 0
    assert -x + x == 0
    if y:
        assert (x / y) * y == x
        assert (1 / y) * y == 1


@given(st.sampled_from(PRIMES), st.integers(-50, 50), st.integers(1, 50))
def test_fraction_image_in_prime_field(p, num, den):
    f = FieldSpec(p)
    x = Fraction(num, den)
    if x.denominator % p == 0:
        with pytest.raises(ZeroDivisionError):
            f(x)
    else:
        assert f(x) * x.denominator == Mod(x.numerator, p)


vectors = st.lists(
    st.dictionaries(st.integers(0, 5), st.integers(-3, 3).filter(bool).map(Fraction), max_size=4),
    max_size=6)


@given(vectors)
def test_kernel_and_rank_nullity(cols):
    ker = kernel(cols)
    assert rank(cols) + len(ker) == len(cols)
    for rel in ker:
        acc = {}
        for j, c in rel.items():
            for k, v in cols[j].items():
                acc[k] = acc.get(k, 0) + c * v
        assert all(v == 0 for v in acc.values())


@given(vectors)
def test_rref_is_reduced_and_spans(vs):
    rows = rref(vs)
    pivots = [max(r) for r in rows]
    assert len(set(pivots)) == len(rows) == rank(vs)
    for r, p in zip(rows, pivots):
        assert r[p] == 1
        assert not any(q in r for q in pivots if q != p)
    e = Echelon()
    for r in rows:
        e.add(r)
    assert all(e.contains(v) for v in vs)


@given(vectors, st.data())
def test_solve_roundtrip(cols, data):
    coeffs = data.draw(st.lists(st.integers(-2, 2), min_size=len(cols), max_size=len(cols)))
    target = {}
    for c, col in zip(coeffs, cols):
        for k, v in col.items():
            target[k] = target.get(k, 0) + c * v
    target = {k: v for k, v in target.items() if v}
    sol = solve(cols, target)
    assert sol is not None
    acc = {}
    for j, c in sol.items():
        for k, v in cols[j].items():
            acc[k] = acc.get(k, 0) + c * v
    assert {k: v for k, v in acc.items() if v} == target


def test_linalg_over_prime_field():
    f = FieldSpec(2)
    one = f.one
    cols = [{0: one, 1: one}, {1: one, 2: one}, {0: one, 2: one}]
    assert rank(cols) == 2
    assert len(kernel(cols)) == 1
