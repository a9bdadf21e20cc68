from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from qha.dsl import format_presentation, parse_presentation, tokenize
from qha.errors import DSLSyntaxError, ValidationError
from qha.families import build_gamma_star, build_lambda_family
from qha.field import FieldSpec, Mod

from conftest import AB_BA, DUAL_NUMBERS, POINT, random_monomial


def test_point_quiver():
    pres = parse_presentation(POINT)
    assert pres.quiver.vertices == ("v",)
    assert pres.relations == []


def test_labels_and_default_names():
    pres = parse_presentation(AB_BA)
    assert pres.names == ["r1", "r2"]
    pres = parse_presentation("""field Q
quiver { vertex v; arrow x : v -> v; arrow y : v -> v; }
relations { comm: x y - y x; y y; }""")
    assert pres.names == ["comm", "r1"]


def test_coefficients_and_signs():
    pres = parse_presentation("""field Q
quiver { vertex v; arrow x : v -> v; arrow y : v -> v; }
relations { -x y + 3/2 y x - 2 x x; }""")
    q = pres.quiver
    rel = pres.relations[0]
    assert rel.terms[q.path(["x", "y"])] == -1
    assert rel.terms[q.path(["y", "x"])] == pytest.approx(1.5)
    assert rel.terms[q.path(["x", "x"])] == -2


def test_prime_field_reduces_literals():
    pres = parse_presentation("""field F 3
quiver { vertex v; arrow x : v -> v; }
relations { 4 x x; }""")
    assert pres.field == FieldSpec(3)
    assert pres.relations[0].terms[pres.quiver.path(["x", "x"])] == Mod(1, 3)


def test_field_override():
    pres = parse_presentation(DUAL_NUMBERS, FieldSpec(7))
    assert pres.field.name == "F7"


@pytest.mark.parametrize("text, line", [
    ("fieldQ quiver {} relations {}", 1),
    ("field Q\nquiver { vertex v }\nrelations {}", 2),
    ("field Q\nquiver { vertex v; }\nrelations { @ }", 3),
    ("field F4\nquiver { vertex v; }\nrelations {}", 1),
    ("field Q\nquiver { vertex v; arrow x : v -> v; }\nrelations { 1/0 x x; }", 3),
    ("field F3\nquiver { vertex v; arrow x : v -> v; }\nrelations { 1/3 x x; }", 3),
    ("field Q quiver { vertex v; } relations { } extra", 1),
])
def test_syntax_errors_carry_positions(text, line):
    with pytest.raises(DSLSyntaxError) as err:
        parse_presentation(text)
    assert err.value.line == line
    assert err.value.exit_code == 2


@pytest.mark.parametrize("body", [
    "quiver { vertex v; arrow x : v -> w; } relations { }",
    "quiver { vertex v; arrow x : v -> v; } relations { y y; }",
    "quiver { vertex v; arrow x : v -> v; } relations { x; }",
    "quiver { vertex v, w; arrow x : v -> w; arrow y : w -> v; } relations { x y - y x; }",
    "quiver { vertex v, w; arrow x : v -> w; } relations { x x; }",
    "quiver { vertex v; arrow x : v -> v; } relations { x x - x x; }",
    "quiver { vertex v, v; } relations { }",
    "quiver { vertex v; arrow v : v -> v; } relations { }",
])
def test_validation_errors(body):
    with pytest.raises(ValidationError) as err:
        parse_presentation("field Q\n" + body)
    assert err.value.exit_code == 3


def test_comments_and_whitespace():
    toks = tokenize("field Q # a comment\n\tquiver")
    assert [t.text for t in toks] == ["field", "Q", "quiver", ""]
    assert toks[2].line == 2


@pytest.mark.parametrize("pres", [
    build_lambda_family(1, 1, 4, 1, 2),
    build_lambda_family(2, 1, 3, 2, -1),
    build_gamma_star(3),
    build_gamma_star(2, FieldSpec(5)),
])
def test_family_round_trip(pres):
    text = format_presentation(pres)
    again = parse_presentation(text)
    assert again == pres
    assert format_presentation(again) == text


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_random_round_trip(seed):
    pres = random_monomial(seed)
    assert parse_presentation(format_presentation(pres)) == pres
