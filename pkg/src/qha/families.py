"""Constructors for the one-parametric self-injective families and their
deformations.

Naming (DSL identifiers, so no parentheses):

* ``Lambda(p, q, k, s, lam)``: corner vertices ``v{i}``; the vertices on the
  alpha segment from ``v{i}`` to ``v{i-1}`` are ``v{i}_a{t}`` (``t = 1..q``);
  the vertices on the beta segment from ``v{i-1}`` to ``v{i+s}`` are
  ``v{i}_b{j}`` (``j = 1..p``).  Arrows are ``a{i}_{t}`` (``t = 0..q``) and
  ``b{i}_{j}`` (``j = 0..p``).
* ``GammaStar(n)``: vertices ``v1..v{n+2}``; arrows ``b1..b{n}`` (cyclic on
  ``v1..v{n}``), ``a1, a2`` through ``v{n+1}`` and ``c1, c2`` through ``v{n+2}``.

Relations carry names ``f2_<family>_<indices>``; the minimal generators come
first, then the redundant relations of the original presentation.  Cyclic
corner indices are reduced into ``1..k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ValidationError
from .field import QQ, FieldSpec
from .quiver import Element, Presentation, Quiver
from .rewriting import AlgebraBasis, buchberger, enumerate_basis


@dataclass(frozen=True)
class LambdaSpec:
    p: int
    q: int
    k: int
    s: int
    lam: object = 1

    def validate(self, field: FieldSpec = QQ) -> None:
        if self.p < 0 or self.q < 0:
            raise ValidationError("p and q must be >= 0")
        if self.k < 2:
            raise ValidationError("k must be >= 2")
        if not 1 <= self.s <= self.k - 1:
            raise ValidationError("s must satisfy 1 <= s <= k-1")
        if gcd(self.s, self.k) != 1:
            raise ValidationError(f"gcd(s, k) = {gcd(self.s, self.k)} != 1")
        if gcd(self.s + 2, self.k) != 1:
            raise ValidationError(f"gcd(s+2, k) = {gcd(self.s + 2, self.k)} != 1")
        if not field(self.lam):
            raise ValidationError("lambda must be nonzero")

    def wrap(self, x: int) -> int:
        return (x - 1) % self.k + 1


class _Builder:
    def __init__(self, field: FieldSpec):
        self.field = field
        self.rels: List[Tuple[str, List[Tuple[object, List[str]]]]] = []

    def add(self, name: str, *terms: Tuple[object, List[str]]) -> None:
        self.rels.append((name, [(c, list(w)) for c, w in terms if c]))

    def build(self, vertices: Sequence[str], arrows: Sequence[Tuple[str, str, str]]) -> Presentation:
        quiver = Quiver(vertices, arrows)
        elems, names = [], []
        for name, terms in self.rels:
            out = Element()
            for c, word in terms:
                out = out + Element.from_path(quiver.path(word), self.field(c))
            elems.append(out)
            names.append(name)
        return Presentation(self.field, quiver, elems, names)


def _lambda_quiver(spec: LambdaSpec):
    p, q, k, s = spec.p, spec.q, spec.k, spec.s
    w = spec.wrap
    vertices = [f"v{i}" for i in range(1, k + 1)]
    for i in range(1, k + 1):
        vertices += [f"v{i}_a{t}" for t in range(1, q + 1)]
        vertices += [f"v{i}_b{j}" for j in range(1, p + 1)]
    arrows = []
    for i in range(1, k + 1):
        chain = [f"v{i}"] + [f"v{i}_a{t}" for t in range(1, q + 1)] + [f"v{w(i - 1)}"]
        arrows += [(f"a{i}_{t}", chain[t], chain[t + 1]) for t in range(q + 1)]
    for i in range(1, k + 1):
        chain = [f"v{w(i - 1)}"] + [f"v{i}_b{j}" for j in range(1, p + 1)] + [f"v{w(i + s)}"]
        arrows += [(f"b{i}_{j}", chain[j], chain[j + 1]) for j in range(p + 1)]
    return vertices, arrows


def alpha(i: int, t0: int, t1: int) -> List[str]:
    """Arrow names ``alpha_(i,t0) ... alpha_(i,t1)``."""
    return [f"a{i}_{t}" for t in range(t0, t1 + 1)]


def beta(i: int, j0: int, j1: int) -> List[str]:
    """Arrow names ``beta_(i^j0) ... beta_(i^j1)``."""
    return [f"b{i}_{j}" for j in range(j0, j1 + 1)]


def rho(spec: LambdaSpec, i: int) -> List[str]:
    """The path from ``v{i}`` round its alpha then beta segment."""
    return alpha(i, 0, spec.q) + beta(i, 0, spec.p)


def _lambda_relations(spec: LambdaSpec, b: _Builder, minimal: bool, t_eta=None) -> None:
    p, q, k, s = spec.p, spec.q, spec.k, spec.s
    w = spec.wrap
    for i in range(1, k + 1):
        c = spec.lam if i == 1 else 1
        other = beta(w(i + 1), 0, p) + alpha(w(s + i + 1), 0, q)
        if i == 1 and t_eta is not None:
            b.add(f"f2_1_{i}", (1 - b.field(t_eta), rho(spec, i)), (-b.field(c), other))
        else:
            b.add(f"f2_1_{i}", (1, rho(spec, i)), (-b.field(c), other))
    for i in range(1, k + 1):
        b.add(f"f2_2_{i}", (1, [f"b{i}_{p}", f"b{w(s + i + 1)}_0"]))
    for i in range(1, k + 1):
        b.add(f"f2_3_{i}", (1, [f"a{i}_{q}", f"a{w(i - 1)}_0"]))

    def f4(i, j):
        return beta(i, j, p) + alpha(w(s + i), 0, q) + beta(w(s + i), 0, j)

    def f5(i, t):
        return alpha(i, t, q) + beta(i, 0, p) + alpha(w(s + i), 0, t)

    for i in range(1, k + 1):
        for j in range(1, p):
            b.add(f"f2_4_{i}_{j}", (1, f4(i, j)))
    for i in range(1, k + 1):
        for t in range(1, q):
            b.add(f"f2_5_{i}_{t}", (1, f5(i, t)))
    if minimal:
        return
    for i in range(1, k + 1):
        for j in sorted({0, p}):
            b.add(f"x4_{i}_{j}", (1, f4(i, j)))
        for t in sorted({0, q}):
            b.add(f"x5_{i}_{t}", (1, f5(i, t)))


def build_lambda_family(p: int, q: int, k: int, s: int, lam=1, field: FieldSpec = QQ,
                        minimal: bool = False) -> Presentation:
    """``Lambda(p, q, k, s, lam)``; ``minimal=True`` omits redundant relations."""
    spec = LambdaSpec(p, q, k, s, lam)
    spec.validate(field)
    b = _Builder(field)
    _lambda_relations(spec, b, minimal)
    return b.build(*_lambda_quiver(spec))


def build_lambda_eta(p: int, q: int, k: int, s: int, lam=1, t=1,
                     field: FieldSpec = QQ) -> Presentation:
    """Deformation of ``Lambda`` along ``f2_1_1 -> f2_1_1 - t rho_1``, with
    ``rho_1`` killed by the radical on both sides."""
    spec = LambdaSpec(p, q, k, s, lam)
    spec.validate(field)
    b = _Builder(field)
    _lambda_relations(spec, b, minimal=True, t_eta=t)
    vertices, arrows = _lambda_quiver(spec)
    r1 = rho(spec, 1)
    by_name = {a: (src, tgt) for a, src, tgt in arrows}
    start, end = by_name[r1[0]][0], by_name[r1[-1]][1]
    for a, src, tgt in arrows:
        if src == end:
            b.add(f"rho_{a}", (1, r1 + [a]))
    for a, src, tgt in arrows:
        if tgt == start:
            b.add(f"{a}_rho", (1, [a] + r1))
    return b.build(vertices, arrows)


def _gamma_quiver(n: int):
    vertices = [f"v{i}" for i in range(1, n + 3)]
    arrows = [(f"b{j}", f"v{j}", f"v{j % n + 1}") for j in range(1, n + 1)]
    arrows += [("a1", "v1", f"v{n + 1}"), ("a2", f"v{n + 1}", "v1"),
               ("c1", "v1", f"v{n + 2}"), ("c2", f"v{n + 2}", "v1")]
    return vertices, arrows


def beta_cycle(n: int, j: int, length: int) -> List[str]:
    """``length`` consecutive beta arrows starting with ``b{j}``."""
    return [f"b{(j - 1 + m) % n + 1}" for m in range(length)]


def _gamma_relations(n: int, b: _Builder, minimal: bool, t=None) -> None:
    two_cycles = beta_cycle(n, 1, 2 * n)
    b.add("f2_1_1", (1, ["a1", "a2"]), (-1, ["c1", "c2"]))
    if t is None:
        b.add("f2_1_2", (1, ["a1", "a2"]), (-1, two_cycles))
    else:
        b.add("f2_1_2", (1, ["a1", "a2"]), (-1, two_cycles), (-b.field(t), beta_cycle(n, 1, n)))
    b.add("f2_2_1", (1, [f"b{n}", "a1"]))
    b.add("f2_2_2", (1, [f"b{n}", "c1"]))
    b.add("f2_2_3", (1, ["a2", "b1"]))
    b.add("f2_2_4", (1, ["c2", "b1"]))
    b.add("f2_2_5", (1, ["a2", "a1"]))
    b.add("f2_2_6", (1, ["c2", "c1"]))
    for j in range(2, n):
        word = beta_cycle(n, j, 2 * n + 1)
        if t is None:
            b.add(f"f2_3_{j}", (1, word))
        else:
            b.add(f"f2_3_{j}", (1, word), (b.field(t), beta_cycle(n, j, n + 1)))
    if not minimal and n >= 2:
        b.add(f"x3_{n}", (1, beta_cycle(n, n, 2 * n + 1)))


def build_gamma_star(n: int, field: FieldSpec = QQ, minimal: bool = False) -> Presentation:
    """``Gamma*(n)``; ``minimal=True`` omits the redundant relation."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    b = _Builder(field)
    _gamma_relations(n, b, minimal)
    return b.build(*_gamma_quiver(n))


def build_gamma_eta2(n: int, t=1, field: FieldSpec = QQ) -> Presentation:
    """Deformation of ``Gamma*(n)`` in the direction of the second HH^2 class."""
    if n < 2:
        raise ValidationError(
            "n must be >= 2: for n = 1 the deformed relation contains the single arrow b1")
    b = _Builder(field)
    _gamma_relations(n, b, minimal=True, t=t)
    return b.build(*_gamma_quiver(n))


@dataclass
class DimReport:
    vertices: List[str]
    per_vertex: Dict[str, int]
    total: int

    def to_json(self) -> dict:
        return {"per_vertex": dict(self.per_vertex), "total": self.total}


def dim_report(pres: Presentation, cap: Optional[int] = None,
               basis: Optional[AlgebraBasis] = None) -> DimReport:
    """``dim e_v Lambda`` for each vertex, from the irreducible-path basis."""
    if basis is None:
        basis = enumerate_basis(buchberger(pres, cap))
    q = pres.quiver
    per = {v: 0 for v in q.vertices}
    for path in basis.paths:
        per[q.vertices[path.source]] += 1
    return DimReport(list(q.vertices), per, basis.dim)
