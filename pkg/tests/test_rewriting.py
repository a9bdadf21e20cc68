from __future__ import annotations

from itertools import product

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from qha.errors import CapExceeded, ValidationError
from qha.field import QQ, FieldSpec
from qha.quiver import Element, Path, Presentation, Quiver, compose, path_key
from qha.rewriting import Algebra, buchberger, default_cap, enumerate_basis

from conftest import AB_BA, DUAL_NUMBERS, presentation

QUIVERS = [
    Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")]),
    Quiver(["u", "w"], [("a", "u", "w"), ("b", "w", "u"), ("c", "u", "w")]),
    Quiver(["u", "w", "z"], [("a", "u", "w"), ("b", "w", "z"), ("c", "z", "u"), ("d", "u", "z")]),
]


def all_paths(q: Quiver, length: int):
    out = []
    for v in range(q.n_vertices):
        out += [p for p in q.paths_from(v, length) if len(p.arrows) == length]
    return out


@st.composite
def presentations(draw):
    """Finite-dimensional presentations: all paths of length ``L`` are
    relations, plus a few random uniform combinations of shorter paths."""
    q = draw(st.sampled_from(QUIVERS))
    top = draw(st.integers(3, 4))
    rels = [Element.from_path(p, QQ.one) for p in all_paths(q, top)]
    short = [p for n in range(2, top) for p in all_paths(q, n)]
    for _ in range(draw(st.integers(0, 3))):
        ends = draw(st.sampled_from(sorted({(p.source, p.target) for p in short})))
        pool = sorted((p for p in short if (p.source, p.target) == ends), key=path_key)
        picked = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3, unique=True))
        coeffs = draw(st.lists(st.integers(-2, 2).filter(bool), min_size=len(picked),
                               max_size=len(picked)))
        rels.append(Element({p: QQ(c) for p, c in zip(picked, coeffs)}))
    return Presentation(QQ, q, rels)


SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@SETTINGS
@given(presentations())
def test_relations_reduce_to_zero(pres):
    gb = buchberger(pres)
    q = pres.quiver
    for r in pres.relations:
        assert not gb.normal_form(r)
        o, t = r.endpoints()
        for a in q.in_arrows[o]:
            assert not gb.normal_form(compose(Element.from_path(q.arrow_path(a), QQ.one), r))
        for a in q.out_arrows[t]:
            assert not gb.normal_form(compose(r, Element.from_path(q.arrow_path(a), QQ.one)))


@SETTINGS
@given(presentations())
def test_normal_form_is_unique_across_tie_breaks(pres):
    left = buchberger(pres, tie_break="leftmost")
    right = buchberger(pres, tie_break="rightmost")
    assert sorted(left.tips, key=path_key) == sorted(right.tips, key=path_key)
    for n in range(0, 5):
        for p in all_paths(pres.quiver, n):
            assert left.nf_path(p) == right.nf_path(p)


@SETTINGS
@given(presentations())
def test_normal_form_is_multiplicative(pres):
    gb = buchberger(pres)
    alg = Algebra(gb)
    q = pres.quiver
    paths = [p for n in range(1, 3) for p in all_paths(q, n)]
    for p, r in product(paths, paths):
        if p.target != r.source:
            continue
        whole = gb.nf_path(Path(p.source, r.target, p.arrows + r.arrows))
        assert alg.mul(gb.nf_path(p), gb.nf_path(r)) == whole


@SETTINGS
@given(presentations())
def test_basis_is_closed_under_subpaths(pres):
    basis = enumerate_basis(buchberger(pres))
    members = set(basis.paths)
    q = pres.quiver
    for p in basis.paths:
        n = len(p.arrows)
        for i in range(n + 1):
            for j in range(i, n + 1):
                assert q.subpath(p, i, j) in members


@SETTINGS
@given(presentations(), st.randoms(use_true_random=False))
def test_dimension_is_order_invariant(pres, rnd):
    order = [a for a, _, _ in pres.quiver.arrows]
    rnd.shuffle(order)
    d0 = enumerate_basis(buchberger(pres)).dim
    d1 = enumerate_basis(buchberger(pres.with_arrow_order(order))).dim
    assert d0 == d1


@SETTINGS
@given(presentations())
def test_multiplication_is_associative(pres):
    alg = Algebra(buchberger(pres))
    paths = alg.basis.paths
    assume(len(paths) <= 14)
    for x, y, z in product(paths, repeat=3):
        if x.target != y.source or y.target != z.source:
            continue
        left = alg.mul(alg.mul_paths(x, y), {z: QQ.one})
        right = alg.mul({x: QQ.one}, alg.mul_paths(y, z))
        assert left == right


def test_dual_numbers_basis():
    gb = buchberger(presentation(DUAL_NUMBERS))
    basis = enumerate_basis(gb)
    assert basis.dim == 2
    assert basis.nil_index == 2
    assert Algebra(gb).loewy_length() == 2


def test_commutative_square_zero():
    pres = presentation("""field Q
quiver { vertex v; arrow x : v -> v; arrow y : v -> v; }
relations { x y - y x; x x; y y; }""")
    alg = Algebra(buchberger(pres))
    assert alg.dim == 4
    assert alg.loewy_length() == 3


def test_overlap_creates_new_member():
    # y y x = x x x x = x y y = 0 is only visible through an overlap
    pres = presentation("""field Q
quiver { vertex v; arrow x : v -> v; arrow y : v -> v; }
relations { x x x - y y; x y; y x x; }""")
    gb = buchberger(pres)
    alg = Algebra(gb)
    assert not gb.normal_form(pres.element([(1, ["y", "y", "x"])]))
    assert alg.dim == len(alg.basis.paths)


def test_polynomial_ring_exceeds_cap():
    pres = presentation("""field Q
quiver { vertex v; arrow x : v -> v; arrow y : v -> v; }
relations { x y - y x; }""")
    gb = buchberger(pres)
    with pytest.raises(CapExceeded) as err:
        enumerate_basis(gb)
    assert err.value.exit_code == 4


def test_non_nilpotent_radical_is_rejected():
    pres = presentation("""field Q
quiver { vertex v; arrow x : v -> v; }
relations { x x - x x x; }""")
    alg = Algebra(buchberger(pres))
    assert alg.dim == 3
    with pytest.raises(ValidationError):
        alg.loewy_length()


def test_small_cap_rejected():
    with pytest.raises(ValidationError):
        buchberger(presentation(AB_BA), cap=1)
    assert default_cap(2) == 12


def test_prime_field_changes_the_algebra():
    text = """field Q
quiver { vertex v; arrow x : v -> v; arrow y : v -> v; }
relations { x y + y x; x x; y y; x y x; }"""
    from qha.dsl import parse_presentation
    over_q = Algebra(buchberger(parse_presentation(text)))
    over_f2 = Algebra(buchberger(parse_presentation(text, FieldSpec(2))))
    assert over_q.dim == over_f2.dim == 4
    xy = over_q.quiver.path(["x", "y"])
    assert over_q.gb.nf_path(Path(0, 0, (1, 0))) == {xy: QQ(-1)}
    assert over_f2.gb.nf_path(Path(0, 0, (1, 0))) == {xy: FieldSpec(2).one}
