"""Hochschild cochains from the minimal resolution, and the bar-complex oracle.

``Hom(Lambda v (x) w Lambda, Lambda)`` is identified with ``v Lambda w`` by
evaluating at ``v (x) w``; a cochain on ``Q^n`` is therefore a vector indexed
by pairs (generator, basis path from its origin to its terminus).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InvariantError, OracleTooLarge
from .field import FieldSpec
from .linalg import Echelon, add_scaled, kernel, matmul_columns, rank
from .quiver import Element, Path, Quiver
from .resolution import BimoduleMapData, ProjectiveDescriptor, Resolution
from .rewriting import Algebra, AlgebraBasis

DEFAULT_ORACLE_BOUND = 12


@dataclass
class HomSpace:
    level: int
    summands: List[Tuple[int, int]]
    names: List[str]
    paths: List[List[Path]]
    coords: List[Tuple[int, Path]] = dc_field(default_factory=list)
    index: Dict[Tuple[int, Path], int] = dc_field(default_factory=dict)

    def __post_init__(self):
        self.coords = [(j, p) for j, ps in enumerate(self.paths) for p in ps]
        self.index = {c: i for i, c in enumerate(self.coords)}

    @property
    def dim(self) -> int:
        return len(self.coords)

    def vector(self, values: Dict[int, Dict[Path, object]]) -> Dict[int, object]:
        """Coordinates of the cochain ``summand j -> values[j]`` (NF dicts)."""
        out = {}
        for j, v in values.items():
            for p, c in v.items():
                if c:
                    out[self.index[(j, p)]] = c
        return out

    def describe(self, vec: Dict[int, object], quiver: Quiver, field: FieldSpec) -> Dict[str, str]:
        """``{generator name: element string}`` for the nonzero components."""
        per: Dict[int, Dict[Path, object]] = {}
        for i, c in vec.items():
            j, p = self.coords[i]
            per.setdefault(j, {})[p] = c
        return {self.names[j]: Element(per[j]).format(quiver, field) for j in sorted(per)}


def hom_space(desc: ProjectiveDescriptor, basis: AlgebraBasis) -> HomSpace:
    return HomSpace(desc.level, list(desc.summands), list(desc.names),
                    [list(basis.between(o, t)) for o, t in desc.summands])


def induced_matrix(A: BimoduleMapData, source: HomSpace, target: HomSpace,
                   algebra: Algebra) -> List[Dict[int, object]]:
    """Columns of ``Hom(A, Lambda)`` from ``source`` (level n-1) to ``target`` (level n)."""
    cols: List[Dict[int, object]] = [{} for _ in range(source.dim)]
    gb = algebra.gb
    for x, comps in enumerate(A.components):
        for (j, left, right, c) in comps:
            for b in source.paths[j]:
                col = cols[source.index[(j, b)]]
                word = Path(left.source, right.target, left.arrows + b.arrows + right.arrows)
                for p, d in gb.nf_path(word).items():
                    add_scaled(col, {target.index[(x, p)]: 1}, c * d)
    return cols


@dataclass
class CochainComplex:
    homs: List[HomSpace]
    matrices: List[List[Dict[int, object]]]  # M1, M2, M3
    ranks: List[int] = dc_field(default_factory=list)

    def __post_init__(self):
        if not self.ranks:
            self.ranks = [rank(m) for m in self.matrices]

    def check(self) -> None:
        """``M2 M1 = 0`` and ``M3 M2 = 0``."""
        for k in (1, 2):
            prod = matmul_columns(self.matrices[k], self.matrices[k - 1])
            if any(prod):
                raise InvariantError(f"M{k + 1} M{k} != 0")

    @property
    def dims(self) -> Tuple[int, int, int]:
        h = [m.dim for m in self.homs]
        r1, r2, r3 = self.ranks
        return (h[0] - r1, h[1] - r2 - r1, h[2] - r3 - r2)


def cochain_complex(res: Resolution) -> CochainComplex:
    basis = res.algebra.basis
    homs = [hom_space(g.descriptor(), basis) for g in res.generator_sets()]
    mats = [induced_matrix(A, homs[n], homs[n + 1], res.algebra) for n, A in enumerate(res.maps())]
    return CochainComplex(homs, mats)


@dataclass
class HHReport:
    field: FieldSpec
    dim_algebra: int
    f2_count: int
    f3_count: int
    hom_dims: List[int]
    rank_d1: int
    rank_d2: int
    dim_ker_d3: int
    hh0: int
    hh1: int
    hh2: int
    hh2_basis: List[Dict[str, str]]

    @property
    def dim_im_d2(self) -> int:
        return self.rank_d2

    @property
    def hh(self) -> Tuple[int, int, int]:
        return (self.hh0, self.hh1, self.hh2)

    def to_json(self) -> dict:
        return {
            "field": self.field.name,
            "dim_algebra": self.dim_algebra,
            "f2_count": self.f2_count,
            "f3_count": self.f3_count,
            "hom_dims": {f"q{i}": d for i, d in enumerate(self.hom_dims)},
            "rank_d1": self.rank_d1,
            "rank_d2": self.rank_d2,
            "dim_ker_d3": self.dim_ker_d3,
            "hh": {"hh0": self.hh0, "hh1": self.hh1, "hh2": self.hh2},
            "hh2_basis": [dict(b) for b in self.hh2_basis],
        }


def hh2_representatives(cx: CochainComplex) -> List[Dict[int, object]]:
    """Reduced-echelon cocycles spanning a complement of ``Im M2`` in ``Ker M3``."""
    im = Echelon()
    for col in cx.matrices[1]:
        im.add(col)
    im_rows = im.reduced_rows()
    im_full = {max(r): r for r in im_rows}
    reps = Echelon()
    for k in kernel(cx.matrices[2]):
        rest = dict(k)
        for piv in sorted(im_full, reverse=True):
            c = rest.get(piv)
            if c:
                add_scaled(rest, im_full[piv], -c)
        if rest:
            reps.add(rest)
    return reps.reduced_rows()


def hh_dims(res: Resolution, complex_: Optional[CochainComplex] = None,
            check: bool = True) -> HHReport:
    cx = complex_ or cochain_complex(res)
    if check:
        cx.check()
    hh0, hh1, hh2 = cx.dims
    reps = hh2_representatives(cx)
    if len(reps) != hh2:
        raise InvariantError("HH^2 representatives do not match its dimension")
    q2 = cx.homs[2]
    return HHReport(
        field=res.field,
        dim_algebra=res.algebra.dim,
        f2_count=len(res.f2),
        f3_count=len(res.f3),
        hom_dims=[h.dim for h in cx.homs],
        rank_d1=cx.ranks[0],
        rank_d2=cx.ranks[1],
        dim_ker_d3=q2.dim - cx.ranks[2],
        hh0=hh0, hh1=hh1, hh2=hh2,
        hh2_basis=[q2.describe(r, res.quiver, res.field) for r in reps],
    )


def in_kernel(cx: CochainComplex, level: int, vec: Dict[int, object]) -> bool:
    """Whether the level-``level`` cochain ``vec`` is a cocycle."""
    out: Dict[int, object] = {}
    for j, c in vec.items():
        add_scaled(out, cx.matrices[level][j], c)
    return not out


def independent_mod_image(cx: CochainComplex, level: int, vecs: Sequence[Dict[int, object]]) -> bool:
    """Whether ``vecs`` are linearly independent modulo ``Im M_level``."""
    e = Echelon()
    for col in cx.matrices[level - 1]:
        e.add(col)
    base = e.rank
    for v in vecs:
        e.add(v)
    return e.rank == base + len(vecs)


def bar_hh_dims(algebra: Algebra, max_degree: int = 2,
                bound: int = DEFAULT_ORACLE_BOUND) -> Tuple[int, ...]:
    """``HH^0..HH^max_degree`` from the unnormalised bar complex over K.

    Cochains are ``Hom_K(Lambda^{(x)n}, Lambda)`` with the Hochschild
    differential; a basis cochain sends one tensor of basis elements to one
    basis element.
    """
    basis = algebra.basis
    d = basis.dim
    if d > bound:
        raise OracleTooLarge(f"dim Lambda = {d} exceeds the oracle bound {bound}")
    paths = basis.paths
    idx = basis.index
    one = algebra.field.one
    # mult[i][j] = {k: c}
    mult = [[{idx[p]: c for p, c in algebra.mul_paths(x, y).items()} for y in paths] for x in paths]
    # pairs producing each basis element: prod_of[k] = [(i, j, c)]
    prod_of: List[List[Tuple[int, int, object]]] = [[] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for k, c in mult[i][j].items():
                prod_of[k].append((i, j, c))

    def differential(n: int) -> List[Dict]:
        cols = []
        for tup in product(range(d), repeat=n):
            for k in range(d):
                col: Dict = {}
                # a_1 f(a_2..a_{n+1})
                for a in range(d):
                    for m, c in mult[a][k].items():
                        add_scaled(col, {((a,) + tup, m): one}, c)
                # sum_i (-1)^i f(.., a_i a_{i+1}, ..)
                for pos in range(n):
                    sign = one if (pos + 1) % 2 == 0 else -one
                    for (x, y, c) in prod_of[tup[pos]]:
                        row = tup[:pos] + (x, y) + tup[pos + 1:]
                        add_scaled(col, {(row, k): one}, sign * c)
                # (-1)^{n+1} f(a_1..a_n) a_{n+1}
                sign = one if (n + 1) % 2 == 0 else -one
                for a in range(d):
                    for m, c in mult[k][a].items():
                        add_scaled(col, {(tup + (a,), m): one}, sign * c)
                cols.append(col)
        return cols

    ranks = [rank(differential(n)) for n in range(max_degree + 1)]
    dims = []
    for n in range(max_degree + 1):
        cochains = d ** (n + 1)
        dims.append(cochains - ranks[n] - (ranks[n - 1] if n else 0))
    return tuple(dims)


def reduced_bar_hh_dims(algebra: Algebra, max_degree: int = 2) -> Tuple[int, ...]:
    """``HH^0..HH^max_degree`` from the normalised bar complex relative to the
    vertex algebra ``E``.

    Cochains are ``E``-bimodule maps ``rad^{(x)_E n} -> Lambda``; a basis
    cochain sends one composable tuple of radical basis paths ``(b_1..b_n)``
    to a basis path from ``o(b_1)`` to ``t(b_n)``.  Much smaller than the
    unnormalised complex, so it reaches algebras beyond the plain oracle.
    """
    basis = algebra.basis
    q = algebra.quiver
    rad = basis.radical()
    one = algebra.field.one
    by_src: Dict[int, List[Path]] = {}
    by_tgt: Dict[int, List[Path]] = {}
    for r in rad:
        by_src.setdefault(r.source, []).append(r)
        by_tgt.setdefault(r.target, []).append(r)
    # radical pairs producing each radical path
    prod_of: Dict[Path, List[Tuple[Path, Path, object]]] = {}
    for x in rad:
        for y in by_src.get(x.target, ()):
            for z, c in algebra.mul_paths(x, y).items():
                prod_of.setdefault(z, []).append((x, y, c))

    def tuples(n: int):
        if n == 0:
            return [(v,) for v in range(q.n_vertices)]
        layer = [(r,) for r in rad]
        for _ in range(n - 1):
            layer = [t + (r,) for t in layer for r in by_src.get(t[-1].target, ())]
        return layer

    def ends(t) -> Tuple[int, int]:
        if isinstance(t[0], int):
            return t[0], t[0]
        return t[0].source, t[-1].target

    def differential(n: int) -> List[Dict]:
        cols = []
        for tup in tuples(n):
            o, t = ends(tup)
            body = () if n == 0 else tup
            for k in basis.between(o, t):
                col: Dict = {}
                for a in by_tgt.get(o, ()):
                    for m, c in algebra.mul_paths(a, k).items():
                        add_scaled(col, {((a,) + body, m): one}, c)
                for pos in range(n):
                    sign = one if (pos + 1) % 2 == 0 else -one
                    for (x, y, c) in prod_of.get(body[pos], ()):
                        row = body[:pos] + (x, y) + body[pos + 1:]
                        add_scaled(col, {(row, k): one}, sign * c)
                sign = one if (n + 1) % 2 == 0 else -one
                for a in by_src.get(t, ()):
                    for m, c in algebra.mul_paths(k, a).items():
                        add_scaled(col, {(body + (a,), m): one}, sign * c)
                cols.append(col)
        return cols

    sizes, ranks = [], []
    for n in range(max_degree + 1):
        cols = differential(n)
        sizes.append(len(cols))
        ranks.append(rank(cols))
    return tuple(sizes[n] - ranks[n] - (ranks[n - 1] if n else 0) for n in range(max_degree + 1))
