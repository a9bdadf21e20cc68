"""The first four terms of the minimal projective bimodule resolution.

    Q^3 --A3--> Q^2 --A2--> Q^1 --A1--> Q^0 --g--> Lambda

with ``Q^n = (+)_{x in f^n} Lambda o(x) (x) t(x) Lambda``.  ``f^0`` are the
vertices, ``f^1`` the arrows, ``f^2`` a minimal generating set of the ideal
and ``f^3`` the third-step generators.

An element of ``Q^n`` is stored sparsely as ``{(summand, left, right): c}``
where ``left`` and ``right`` are algebra-basis paths; a map ``A_n`` is stored
as, for every generator, a list of components ``(summand, L, R, c)`` meaning
``c * L (x) R`` with ``L, R`` arbitrary paths of KQ.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import InvariantError, NonUnique, NoSolution, ReductionStuck
from .linalg import Echelon, add_scaled, kernel, rank
from .quiver import Element, Path, Presentation, Quiver, path_key
from .rewriting import Algebra, GroebnerBasis, complete, default_cap

Component = Tuple[int, Path, Path, object]
TwoSided = Tuple[object, Path, int, Path]


@dataclass
class GeneratorSet:
    """Uniform generators ``f^n`` together with their names."""

    level: int
    elements: List[Element]
    names: List[str]
    ends: List[Tuple[int, int]]

    def __len__(self) -> int:
        return len(self.elements)

    def targets(self) -> List[int]:
        return [t for _, t in self.ends]

    def descriptor(self) -> "ProjectiveDescriptor":
        return ProjectiveDescriptor(self.level, list(self.ends), list(self.names))


@dataclass
class ProjectiveDescriptor:
    level: int
    summands: List[Tuple[int, int]]
    names: List[str]


@dataclass
class F3Element:
    """A third-step generator ``y`` with ``y = sum f2_i p_i = sum q f2_u r``."""

    element: Element
    origin: int
    terminus: int
    right: Dict[int, Element]
    two_sided: List[TwoSided]


@dataclass
class BimoduleMapData:
    level: int
    components: List[List[Component]]


def vertex_set(pres: Presentation) -> GeneratorSet:
    q = pres.quiver
    return GeneratorSet(0, [Element.from_path(q.trivial(v), pres.field.one) for v in range(q.n_vertices)],
                        list(q.vertices), [(v, v) for v in range(q.n_vertices)])


def arrow_set(pres: Presentation) -> GeneratorSet:
    q = pres.quiver
    return GeneratorSet(1, [Element.from_path(q.arrow_path(a), pres.field.one) for a in range(q.n_arrows)],
                        [a for a, _, _ in q.arrows],
                        [(q.arrow_source[a], q.arrow_target[a]) for a in range(q.n_arrows)])


def _truncate(x: Dict[Path, object], n: int) -> Dict[Path, object]:
    return {p: c for p, c in x.items() if len(p.arrows) <= n}


def minimal_generators(pres: Presentation, algebra: Algebra,
                       loewy: Optional[int] = None) -> GeneratorSet:
    """Greedy minimal subset of the input relations.

    A relation is dropped when it lies in ``JI + IJ`` plus the span of the
    relations kept before it.  Since ``J^N`` is inside ``I`` for the Loewy
    length ``N``, everything of length > ``N`` is inside ``JI``, so the test
    runs in the finite space of paths of length <= ``N``.
    """
    q = pres.quiver
    n = loewy if loewy is not None else algebra.loewy_length()
    rels = pres.relations
    ends = [r.endpoints() for r in rels]
    blocks: Dict[Tuple[int, int], Echelon] = {}

    def block(v: int, w: int) -> Echelon:
        if (v, w) not in blocks:
            blocks[(v, w)] = Echelon()
        return blocks[(v, w)]

    # spanning set of JI + IJ truncated at length n
    for r, (o, t) in zip(rels, ends):
        m = r.min_length()
        room = n - m
        if room < 1:
            continue
        lefts = list(q.paths_into(o, room))
        rights_by_len: Dict[int, List[Path]] = {}
        for rp in q.paths_from(t, room):
            rights_by_len.setdefault(len(rp.arrows), []).append(rp)
        for lp in lefts:
            for rl in range(0, room - len(lp.arrows) + 1):
                if len(lp.arrows) + rl == 0:
                    continue
                for rp in rights_by_len.get(rl, ()):
                    vec = {}
                    for p, c in r.terms.items():
                        if len(lp.arrows) + len(p.arrows) + rl <= n:
                            vec[Path(lp.source, rp.target, lp.arrows + p.arrows + rp.arrows)] = c
                    if vec:
                        block(lp.source, rp.target).add(vec)

    keep = []
    for i, (r, (o, t)) in enumerate(zip(rels, ends)):
        if block(o, t).add(_truncate(r.terms, n)) is None:
            keep.append(i)
    return GeneratorSet(2, [rels[i] for i in keep], [pres.names[i] for i in keep],
                        [ends[i] for i in keep])


class Resolution:
    """Generator sets and maps ``g, A1, A2, A3`` for one presentation."""

    def __init__(self, pres: Presentation, gb: GroebnerBasis, algebra: Optional[Algebra] = None,
                 f2: Optional[GeneratorSet] = None, f3: Optional[List[F3Element]] = None,
                 tie_break: str = "leftmost"):
        self.pres = pres
        self.quiver: Quiver = pres.quiver
        self.field = pres.field
        self.gb = gb
        self.algebra = algebra or Algebra(gb)
        self.tie_break = tie_break
        self.f0 = vertex_set(pres)
        self.f1 = arrow_set(pres)
        self.loewy = self.algebra.loewy_length()
        self.f2 = f2 if f2 is not None else minimal_generators(pres, self.algebra, self.loewy)
        self._traced: Optional[GroebnerBasis] = None
        self.f3_data = f3 if f3 is not None else compute_f3(self)
        self.f3 = GeneratorSet(3, [y.element for y in self.f3_data],
                               [f"f3_{i + 1}" for i in range(len(self.f3_data))],
                               [(y.origin, y.terminus) for y in self.f3_data])
        self.A1 = build_A1(self)
        self.A2 = build_A2(self)
        self.A3 = build_A3(self)

    def generator_sets(self) -> List[GeneratorSet]:
        return [self.f0, self.f1, self.f2, self.f3]

    def maps(self) -> List[BimoduleMapData]:
        return [self.A1, self.A2, self.A3]

    def traced_basis(self) -> GroebnerBasis:
        """Groebner basis of ``I`` generated by ``f^2`` with cofactor traces."""
        if self._traced is None:
            cap = max(self.gb.cap, default_cap(max((x.max_length() for x in self.f2.elements), default=0)))
            self._traced = complete(self.quiver, self.field, self.f2.elements, cap,
                                    trace=True, tie_break=self.tie_break)
        return self._traced

    # -- decompositions ------------------------------------------------------

    def decompose_right(self, y: Element) -> Dict[int, Element]:
        return decompose_right(y, self.f2, self.quiver)

    def decompose_two_sided(self, y: Element) -> List[TwoSided]:
        return decompose_two_sided(y, self.traced_basis(), self.quiver)

    # -- checks --------------------------------------------------------------

    def apply(self, level: int, x: Dict[Tuple[int, Path, Path], object]) -> Dict:
        """Apply ``A_level`` to an element of ``Q^level`` in tensor coordinates."""
        comps = self.maps()[level - 1].components
        alg = self.algebra
        out: Dict = {}
        for (j, b, b2), c in x.items():
            for (m, left, right, d) in comps[j]:
                lv = alg.mul_paths(b, left)
                if not lv:
                    continue
                rv = alg.mul_paths(right, b2)
                for lp, lc in lv.items():
                    for rp, rc in rv.items():
                        add_scaled(out, {(m, lp, rp): lc * rc}, c * d)
        return out

    def generator_image(self, level: int, j: int) -> Dict:
        """``A_level`` applied to ``o(x) (x) t(x)`` for generator ``j``, reduced."""
        o, t = self.generator_sets()[level].ends[j]
        q = self.quiver
        return self.apply(level, {(j, q.trivial(o), q.trivial(t)): self.field.one})

    def check_complex(self) -> None:
        """Assert ``g A1 = 0``, ``A1 A2 = 0`` and ``A2 A3 = 0`` on generators."""
        alg = self.algebra
        for j in range(len(self.f1)):
            img = self.generator_image(1, j)
            tot: Dict[Path, object] = {}
            for (_, lp, rp), c in img.items():
                add_scaled(tot, alg.mul_paths(lp, rp), c)
            if tot:
                raise InvariantError(f"g A1 != 0 on arrow {self.f1.names[j]}")
        for level in (2, 3):
            gens = self.generator_sets()[level]
            for j in range(len(gens)):
                img = self.generator_image(level, j)
                if self.apply(level - 1, img):
                    raise InvariantError(
                        f"A{level - 1} A{level} != 0 on generator {gens.names[j]}")

    def check_exact(self, level: int = 0, limit: int = 4000) -> Optional[bool]:
        """Exactness at ``Q^level`` (``level`` in 0, 1, 2) as a rank identity.

        At ``Q^0``: ``rank A1 = dim Q0 - dim Lambda``; at ``Q^n``:
        ``rank A_{n+1} = dim Q^n - rank A_n``.  Returns None when the tensor
        spaces are larger than ``limit``.
        """
        basis = self.algebra.basis
        nv = self.quiver.n_vertices
        ending = {v: basis.ending_at(v) for v in range(nv)}
        starting = {v: basis.starting_at(v) for v in range(nv)}
        sets = self.generator_sets()

        def dim(n: int) -> int:
            return sum(len(ending[o]) * len(starting[t]) for o, t in sets[n].ends)

        def map_rank(n: int) -> int:
            cols = []
            for j, (o, t) in enumerate(sets[n].ends):
                for b in ending[o]:
                    for b2 in starting[t]:
                        cols.append(self.apply(n, {(j, b, b2): self.field.one}))
            return rank(cols)

        if max(dim(level), dim(level + 1)) > limit:
            return None
        below = basis.dim if level == 0 else map_rank(level)
        return map_rank(level + 1) == dim(level) - below

def build_A1(res: Resolution) -> BimoduleMapData:
    q = res.quiver
    one = res.field.one
    comps = []
    for a in range(q.n_arrows):
        o, t = q.arrow_source[a], q.arrow_target[a]
        comps.append([(o, q.trivial(o), q.arrow_path(a), one),
                      (t, q.arrow_path(a), q.trivial(t), -one)])
    return BimoduleMapData(1, comps)


def build_A2(res: Resolution) -> BimoduleMapData:
    q = res.quiver
    comps = []
    for x in res.f2.elements:
        out = []
        for p, c in x.sorted_terms():
            for k, a in enumerate(p.arrows):
                out.append((a, q.subpath(p, 0, k), q.subpath(p, k + 1, len(p.arrows)), c))
        comps.append(out)
    return BimoduleMapData(2, comps)


def build_A3(res: Resolution) -> BimoduleMapData:
    q = res.quiver
    comps = []
    for y in res.f3_data:
        out = []
        left = q.trivial(y.origin)
        for i in sorted(y.right):
            for p, c in y.right[i].sorted_terms():
                out.append((i, left, p, c))
        for c, ql, u, r in y.two_sided:
            out.append((u, ql, r, -c))
        comps.append(out)
    return BimoduleMapData(3, comps)


def build_A(n: int, res: Resolution) -> BimoduleMapData:
    return {1: res.A1, 2: res.A2, 3: res.A3}[n]


def _rest(q: Quiver, p: Path, k: int) -> Path:
    return q.subpath(p, k, len(p.arrows))


def compute_f3(res: Resolution) -> List[F3Element]:
    """Third-step generators from the kernel of ``P2 -> P1``.

    The right-module map sends the ``f2_i`` summand ``t(f2_i) Lambda`` to
    ``sum_a a u_{i,a}`` where ``f2_i = sum_a a u_{i,a}`` in KQ.  Its kernel
    ``Omega`` splits by origin and terminus; each block's generators modulo
    ``Omega * rad`` give one ``y = sum_i f2_i lift(x_i)`` apiece.  Such a
    ``y`` lies in ``(+) f2 KQ`` and in ``(+) a I``, and the chosen ``y`` form a
    complement of ``(+) f2 I`` there.
    """
    q, alg, basis = res.quiver, res.algebra, res.algebra.basis
    f2 = res.f2
    nv = q.n_vertices
    one = res.field.one
    # u[i][a]: NF of the cofactor of arrow a in f2_i
    u: List[Dict[int, Dict[Path, object]]] = []
    for x in f2.elements:
        parts: Dict[int, Dict[Path, object]] = {}
        for p, c in x.terms.items():
            add_scaled(parts.setdefault(p.arrows[0], {}), alg.gb.nf_path(_rest(q, p, 1)), c)
        u.append({a: v for a, v in parts.items() if v})

    out: List[F3Element] = []
    for v in range(nv):
        idx = [i for i, (o, _) in enumerate(f2.ends) if o == v]
        if not idx:
            continue
        omega: Dict[int, List[Dict]] = {}
        for w in range(nv):
            coords = [(i, b) for i in idx for b in basis.between(f2.ends[i][1], w)]
            cols = []
            for i, b in coords:
                col: Dict = {}
                for a, ua in u[i].items():
                    for up, uc in ua.items():
                        for bp, bc in alg.mul_paths(up, b).items():
                            add_scaled(col, {(a, bp): one}, uc * bc)
                cols.append(col)
            omega[w] = [{coords[j]: c for j, c in kv.items()} for kv in kernel(cols)]
        for w in range(nv):
            rad = Echelon()
            for w2 in range(nv):
                for a in q.out_arrows[w2]:
                    if q.arrow_target[a] != w:
                        continue
                    for x in omega[w2]:
                        xa: Dict = {}
                        for (i, b), c in x.items():
                            for bp, bc in alg.mul_paths(b, q.arrow_path(a)).items():
                                add_scaled(xa, {(i, bp): one}, c * bc)
                        if xa:
                            rad.add(xa)
            for x in omega[w]:
                if rad.add(x) is not None:
                    continue
                right: Dict[int, Element] = {}
                for (i, b), c in x.items():
                    if not b.arrows:
                        raise InvariantError("third syzygy not inside P2 * rad")
                    right[i] = right.get(i, Element()) + Element({b: c})
                right = {i: e for i, e in right.items() if e}
                y = Element()
                for i, e in right.items():
                    y = y + f2.elements[i] * e
                if not y:
                    raise InvariantError("zero third-step generator")
                solved = decompose_right(y, f2, q)
                if solved != right:
                    raise InvariantError("right decomposition disagrees with the syzygy lift")
                out.append(F3Element(y, v, w, right, res.decompose_two_sided(y)))
    return out


def decompose_right(y: Element, f2: GeneratorSet, quiver: Quiver) -> Dict[int, Element]:
    """Solve ``y = sum_i f2_i p_i`` in KQ with every ``p_i`` in the arrow ideal."""
    ends = y.endpoints()
    if ends is None:
        raise NoSolution("element is not uniform")
    o, t = ends
    top = y.max_length()
    unknowns: List[Tuple[int, Path]] = []
    for i, (fo, ft) in enumerate(f2.ends):
        if fo != o:
            continue
        room = top - f2.elements[i].min_length()
        if room < 1:
            continue
        unknowns.extend((i, p) for p in quiver.paths_between(ft, t, room, min_len=1))
    cols = []
    for i, p in unknowns:
        col = {}
        for fp, c in f2.elements[i].terms.items():
            col[Path(fp.source, p.target, fp.arrows + p.arrows)] = c
        cols.append(col)
    e = Echelon(track=True)
    null = False
    for j, col in enumerate(cols):
        if e.add(col, j) is not None:
            null = True
    sol = e.express(y.terms)
    if sol is None:
        raise NoSolution("element is not in the right ideal generated by f2 (+) J")
    if null:
        raise NonUnique("right coefficients p_i are not unique")
    out: Dict[int, Element] = {}
    for j, c in sol.items():
        i, p = unknowns[j]
        out[i] = out.get(i, Element()) + Element({p: c})
    return {i: x for i, x in out.items() if x}


def decompose_two_sided(y: Element, traced: GroebnerBasis, quiver: Quiver) -> List[TwoSided]:
    """Write ``y = sum c * q * f2_u * r`` with every ``q`` in the arrow ideal.

    ``y`` must lie in ``(+)_a a I``: splitting off the first arrow gives
    ``y = sum_a a z_a`` with ``z_a`` in ``I``, and traced reduction of each
    ``z_a`` supplies the cofactors.
    """
    parts: Dict[int, Dict[Path, object]] = {}
    for p, c in y.terms.items():
        if not p.arrows:
            raise ReductionStuck("element has a trivial-path term")
        parts.setdefault(p.arrows[0], {})[_rest(quiver, p, 1)] = c
    out: Dict[Tuple[Path, int, Path], object] = {}
    for a in sorted(parts):
        rem, trace = traced.reduce_traced(parts[a])
        if rem:
            raise ReductionStuck(
                f"cofactor of arrow {quiver.arrows[a][0]!r} does not reduce to zero")
        ap = quiver.arrow_path(a)
        for (l, g, r), c in trace.items():
            add_scaled(out, {(Path(ap.source, l.target, ap.arrows + l.arrows), g, r): 1}, c)
    return [(c, l, g, r) for (l, g, r), c in
            sorted(out.items(), key=lambda kv: (kv[0][1], path_key(kv[0][0]), path_key(kv[0][2])))]


@dataclass
class SimpleResolutionReport:
    """Terminus vertices of the projectives ``P_0..P_depth`` per simple."""

    steps: Dict[int, List[List[int]]]  # simple vertex -> per step vertex list

    def multiset(self, n: int) -> List[int]:
        return sorted(w for per in self.steps.values() for w in per[n])


def min_resolution_simples(algebra: Algebra, depth: int = 3) -> SimpleResolutionReport:
    """Minimal right-module resolutions of the simples, by projective covers."""
    q = algebra.quiver
    basis = algebra.basis
    one = algebra.field.one
    nv = q.n_vertices
    steps: Dict[int, List[List[int]]] = {}

    def times_arrow(x: Dict, a: int) -> Dict:
        out: Dict = {}
        ap = q.arrow_path(a)
        for (j, b), c in x.items():
            for bp, bc in algebra.mul_paths(b, ap).items():
                add_scaled(out, {(j, bp): one}, c * bc)
        return out

    for v in range(nv):
        per: List[List[int]] = [[v]]
        # Omega^1 = rad e_v Lambda inside P_0 = e_v Lambda
        module = [{(0, b): one} for b in basis.starting_at(v) if b.arrows]
        for _ in range(depth):
            gens: List[Tuple[int, Dict]] = []
            for w in range(nv):
                part = Echelon()
                for x in module:
                    xw = {k: c for k, c in x.items() if k[1].target == w}
                    if xw:
                        part.add(xw)
                rad = Echelon()
                for w2 in range(nv):
                    for a in q.out_arrows[w2]:
                        if q.arrow_target[a] != w:
                            continue
                        for x in module:
                            xa = times_arrow({k: c for k, c in x.items() if k[1].target == w2}, a)
                            if xa:
                                rad.add(xa)
                for row in list(part.rows.values()):
                    if rad.add(row) is None:
                        gens.append((w, row))
            per.append([w for w, _ in gens])
            # kernel of P = (+) e_w Lambda -> module
            coords = [(i, b) for i, (w, _) in enumerate(gens) for b in basis.starting_at(w)]
            cols = []
            for i, b in coords:
                m = gens[i][1]
                col: Dict = {}
                for (j, mb), c in m.items():
                    for bp, bc in algebra.mul_paths(mb, b).items():
                        add_scaled(col, {(j, bp): one}, c * bc)
                cols.append(col)
            module = [{coords[j]: c for j, c in kv.items()} for kv in kernel(cols)]
        steps[v] = per
    return SimpleResolutionReport(steps)
