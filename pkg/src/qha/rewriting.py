"""Noncommutative Groebner bases for ideals of a path algebra.

The completion is the overlap (Buchberger/Bergman) procedure for path
algebras.  Elements are uniform; tips are compared with
:func:`~qha.quiver.path_key`.  Because relations may mix path lengths, the
only termination guard is ``cap``: overlaps whose word is longer than the cap
are not resolved, and if any of them survive among the final members the
result is not certified and :class:`CapExceeded` is raised.

Optionally every member carries a *trace* ``{(L, g, R): c}`` expressing it
as ``sum c * L * gens[g] * R`` in KQ.  Traced reduction is what turns a
membership certificate into an explicit two-sided decomposition.
"""

from __future__ import annotations

import heapq
import sys
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import CapExceeded, ValidationError
from .field import FieldSpec
from .linalg import Echelon, add_scaled
from .quiver import Element, Path, Presentation, Quiver, path_key

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

Poly = Dict[Path, object]
Trace = Dict[Tuple[Path, int, Path], object]


def default_cap(max_relation_length: int) -> int:
    return 4 * max_relation_length + 4


@dataclass
class Member:
    tip: Path
    poly: Poly  # monic: poly[tip] == 1
    trace: Optional[Trace] = None

    @property
    def element(self) -> Element:
        return Element(self.poly)


def _mul3(left: Path, mid: Path, right: Path) -> Path:
    return Path(left.source, right.target, left.arrows + mid.arrows + right.arrows)


class _TipIndex:
    """Lookup of member tips occurring as subwords of a path."""

    def __init__(self, quiver: Quiver, tie_break: str = "leftmost"):
        if tie_break not in ("leftmost", "rightmost"):
            raise ValueError("tie_break must be 'leftmost' or 'rightmost'")
        self.quiver = quiver
        self.tie_break = tie_break
        self.words: Dict[Tuple[int, ...], int] = {}
        self.vertices: Dict[int, int] = {}
        self.lengths: List[int] = []

    def add(self, tip: Path, idx: int) -> None:
        if tip.arrows:
            self.words[tip.arrows] = idx
            n = len(tip.arrows)
            if n not in self.lengths:
                self.lengths.append(n)
                self.lengths.sort()
        else:
            self.vertices[tip.source] = idx

    def remove(self, tip: Path) -> None:
        if tip.arrows:
            del self.words[tip.arrows]
            n = len(tip.arrows)
            if not any(len(w) == n for w in self.words):
                self.lengths.remove(n)
        else:
            del self.vertices[tip.source]

    def find(self, p: Path) -> Optional[Tuple[int, int, int]]:
        """``(i, j, member)`` with ``p.arrows[i:j]`` the member's tip."""
        arrows = p.arrows
        n = len(arrows)
        starts = range(n + 1) if self.tie_break == "leftmost" else range(n, -1, -1)
        words, verts, lengths = self.words, self.vertices, self.lengths
        tgt = self.quiver.arrow_target
        for i in starts:
            if verts:
                v = p.source if i == 0 else tgt[arrows[i - 1]]
                m = verts.get(v)
                if m is not None:
                    return i, i, m
            for length in lengths:
                if i + length > n:
                    break
                m = words.get(arrows[i:i + length])
                if m is not None:
                    return i, i + length, m
        return None


class GroebnerBasis:
    """A complete rewriting system for an ideal of KQ.

    ``members`` are monic with pairwise non-divisible tips.  ``normal_form``
    is memoised per path, so the object should be treated as immutable.
    """

    def __init__(self, quiver: Quiver, field: FieldSpec, members: Sequence[Member],
                 cap: int, tie_break: str = "leftmost", n_generators: int = 0):
        self.quiver = quiver
        self.field = field
        self.members = list(members)
        self.cap = cap
        self.tie_break = tie_break
        self.n_generators = n_generators
        self._index = _TipIndex(quiver, tie_break)
        for i, m in enumerate(self.members):
            self._index.add(m.tip, i)
        self._nf: Dict[Path, Poly] = {}

    def __len__(self) -> int:
        return len(self.members)

    @property
    def tips(self) -> List[Path]:
        return sorted((m.tip for m in self.members), key=path_key)

    def is_reducible(self, p: Path) -> bool:
        return self._index.find(p) is not None

    def nf_path(self, p: Path) -> Poly:
        """Normal form of a single path as ``{irreducible path: coeff}``."""
        hit = self._nf.get(p)
        if hit is not None:
            return hit
        occ = self._index.find(p)
        if occ is None:
            out = {p: self.field.one}
        else:
            i, j, k = occ
            m = self.members[k]
            left = self.quiver.subpath(p, 0, i)
            right = self.quiver.subpath(p, j, len(p.arrows))
            out = {}
            for u, d in m.poly.items():
                if u == m.tip:
                    continue
                add_scaled(out, self.nf_path(_mul3(left, u, right)), -d)
        self._nf[p] = out
        return out

    def nf(self, poly: Poly) -> Poly:
        out: Poly = {}
        for p, c in poly.items():
            add_scaled(out, self.nf_path(p), c)
        return out

    def normal_form(self, x: Element) -> Element:
        return Element(self.nf(x.terms))

    def reduce_traced(self, poly: Poly) -> Tuple[Poly, Trace]:
        """Reduce ``poly``; returns ``(remainder, cofactors)`` where
        ``poly = remainder + sum c * L * gens[g] * R`` over the cofactors."""
        if any(m.trace is None for m in self.members):
            raise ValueError("basis was computed without traces")
        rem, tr = _reduce(self.quiver, self._index, self.members, poly, {})
        return rem, {k: -v for k, v in tr.items()}


def _reduce(quiver: Quiver, index: _TipIndex, members: Sequence[Member], poly: Poly,
            trace: Optional[Trace]) -> Tuple[Poly, Optional[Trace]]:
    """Full reduction; ``trace`` accumulates ``-c * L * trace(m) * R`` per step."""
    work = dict(poly)
    result: Poly = {}
    while work:
        p = max(work, key=path_key)
        c = work.pop(p)
        occ = index.find(p)
        if occ is None:
            result[p] = c
            continue
        i, j, k = occ
        m = members[k]
        left = quiver.subpath(p, 0, i)
        right = quiver.subpath(p, j, len(p.arrows))
        for u, d in m.poly.items():
            if u == m.tip:
                continue
            q = _mul3(left, u, right)
            v = work.get(q)
            v = -c * d if v is None else v - c * d
            if v:
                work[q] = v
            else:
                work.pop(q, None)
        if trace is not None:
            for (l, g, r), d in m.trace.items():
                key = (Path(left.source, l.target, left.arrows + l.arrows), g,
                       Path(r.source, right.target, r.arrows + right.arrows))
                v = trace.get(key)
                v = -c * d if v is None else v - c * d
                if v:
                    trace[key] = v
                else:
                    trace.pop(key, None)
    return result, trace


def _right_mul(poly: Poly, right: Path) -> Poly:
    return {Path(p.source, right.target, p.arrows + right.arrows): c for p, c in poly.items()}


def _left_mul(left: Path, poly: Poly) -> Poly:
    return {Path(left.source, p.target, left.arrows + p.arrows): c for p, c in poly.items()}


def _trace_right(tr: Trace, right: Path) -> Trace:
    return {(l, g, Path(r.source, right.target, r.arrows + right.arrows)): c
            for (l, g, r), c in tr.items()}


def _trace_left(left: Path, tr: Trace) -> Trace:
    return {(Path(left.source, l.target, left.arrows + l.arrows), g, r): c
            for (l, g, r), c in tr.items()}


def _tip_occurs(small: Path, big: Path, quiver: Quiver) -> bool:
    if not small.arrows:
        return any(quiver.vertex_at(big, i) == small.source for i in range(len(big.arrows) + 1))
    s, b = small.arrows, big.arrows
    n = len(s)
    return any(b[i:i + n] == s for i in range(len(b) - n + 1))


def complete(quiver: Quiver, field: FieldSpec, generators: Sequence[Element], cap: int,
             trace: bool = False, tie_break: str = "leftmost",
             interreduce: bool = True) -> GroebnerBasis:
    """Complete ``generators`` to a Groebner basis of the ideal they generate."""
    index = _TipIndex(quiver, tie_break)
    members: List[Member] = []
    alive: Dict[int, bool] = {}
    heap: List[Tuple[int, int, int, int, int]] = []
    counter = [0]
    skipped: List[Tuple[int, int]] = []

    def push_overlaps(j: int) -> None:
        tj = members[j].tip.arrows
        if not tj:
            return
        for i in list(alive):
            ti = members[i].tip.arrows
            if not ti:
                continue
            pairs = [(i, j)] if i == j else [(i, j), (j, i)]
            for a, b in pairs:
                ta, tb = members[a].tip.arrows, members[b].tip.arrows
                for k in range(1, min(len(ta), len(tb))):
                    if ta[-k:] == tb[:k]:
                        counter[0] += 1
                        heapq.heappush(heap, (len(ta) + len(tb) - k, counter[0], a, b, k))

    def add(poly: Poly, tr: Optional[Trace]) -> None:
        pending = [(poly, tr)]
        while pending:
            poly, tr = pending.pop()
            live = [members[i] for i in range(len(members))]
            rem, tr = _reduce(quiver, index, live, poly, tr)
            if not rem:
                continue
            tip = max(rem, key=path_key)
            inv = 1 / rem[tip]
            rem = {p: c * inv for p, c in rem.items()}
            if tr is not None:
                tr = {k: c * inv for k, c in tr.items()}
            j = len(members)
            members.append(Member(tip, rem, tr))
            for i in list(alive):
                if _tip_occurs(tip, members[i].tip, quiver):
                    del alive[i]
                    index.remove(members[i].tip)
                    pending.append((members[i].poly, members[i].trace))
            alive[j] = True
            index.add(tip, j)
            push_overlaps(j)

    for g, x in enumerate(generators):
        if not x:
            continue
        ends = x.endpoints()
        if ends is None:
            raise ValidationError(f"generator {g} is not uniform")
        tr = None
        if trace:
            tr = {(quiver.trivial(ends[0]), g, quiver.trivial(ends[1])): field.one}
        add(dict(x.terms), tr)

    while heap:
        length, _, a, b, k = heapq.heappop(heap)
        if a not in alive or b not in alive:
            continue
        if length > cap:
            skipped.append((a, b))
            continue
        ma, mb = members[a], members[b]
        ta, tb = ma.tip, mb.tip
        right = quiver.subpath(tb, k, len(tb.arrows))
        left = quiver.subpath(ta, 0, len(ta.arrows) - k)
        s = _right_mul(ma.poly, right)
        add_scaled(s, _left_mul(left, mb.poly), -1)
        tr = None
        if trace:
            tr = _trace_right(ma.trace, right)
            add_scaled(tr, _trace_left(left, mb.trace), -1)
        add(s, tr)

    if any(a in alive and b in alive for a, b in skipped):
        raise CapExceeded(
            f"Groebner completion did not close below path length {cap}; "
            "the algebra may be infinite-dimensional or the cap too small")

    final = [members[i] for i in sorted(alive)]
    final.sort(key=lambda m: path_key(m.tip))
    if interreduce and not trace:
        idx = _TipIndex(quiver, tie_break)
        for i, m in enumerate(final):
            idx.add(m.tip, i)
        tidy = []
        for i, m in enumerate(final):
            tail = {p: c for p, c in m.poly.items() if p != m.tip}
            rem, _ = _reduce(quiver, idx, final, tail, None)
            rem[m.tip] = field.one
            tidy.append(Member(m.tip, rem, None))
        final = tidy
    return GroebnerBasis(quiver, field, final, cap, tie_break, len(generators))


def buchberger(pres: Presentation, cap: Optional[int] = None,
               tie_break: str = "leftmost") -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``pres.relations``."""
    if cap is None:
        cap = default_cap(pres.max_relation_length())
    if cap < 2:
        raise ValidationError("cap must be at least 2")
    return complete(pres.quiver, pres.field, pres.relations, cap, tie_break=tie_break)


@dataclass
class AlgebraBasis:
    """Irreducible paths: a K-basis of the quotient algebra."""

    quiver: Quiver
    paths: List[Path]
    nil_index: int
    index: Dict[Path, int] = dc_field(default_factory=dict)
    by_pair: Dict[Tuple[int, int], List[Path]] = dc_field(default_factory=dict)

    def __post_init__(self):
        self.index = {p: i for i, p in enumerate(self.paths)}
        self.by_pair = {}
        for p in self.paths:
            self.by_pair.setdefault((p.source, p.target), []).append(p)

    @property
    def dim(self) -> int:
        return len(self.paths)

    def between(self, v: int, w: int) -> List[Path]:
        """Basis of ``e_v Lambda e_w``."""
        return self.by_pair.get((v, w), [])

    def starting_at(self, v: int) -> List[Path]:
        return [p for p in self.paths if p.source == v]

    def ending_at(self, w: int) -> List[Path]:
        return [p for p in self.paths if p.target == w]

    def radical(self) -> List[Path]:
        return [p for p in self.paths if p.arrows]


def enumerate_basis(gb: GroebnerBasis) -> AlgebraBasis:
    """Breadth-first list of irreducible paths, shortest first."""
    q = gb.quiver
    layer = [q.trivial(v) for v in range(q.n_vertices) if not gb.is_reducible(q.trivial(v))]
    paths: List[Path] = []
    length = 0
    while layer:
        if length >= gb.cap:
            raise CapExceeded(f"irreducible paths of length {length} >= cap {gb.cap}")
        paths.extend(sorted(layer, key=path_key))
        nxt = []
        for p in layer:
            for a in q.out_arrows[p.target]:
                r = Path(p.source, q.arrow_target[a], p.arrows + (a,))
                if not gb.is_reducible(r):
                    nxt.append(r)
        layer = nxt
        length += 1
    return AlgebraBasis(q, paths, length)


class Algebra:
    """Multiplication in ``Lambda = KQ/I`` on basis-path coordinates."""

    def __init__(self, gb: GroebnerBasis, basis: Optional[AlgebraBasis] = None):
        self.gb = gb
        self.basis = basis or enumerate_basis(gb)
        self.quiver = gb.quiver
        self.field = gb.field

    @property
    def dim(self) -> int:
        return self.basis.dim

    def mul_paths(self, p: Path, q: Path) -> Poly:
        if p.target != q.source:
            return {}
        return self.gb.nf_path(Path(p.source, q.target, p.arrows + q.arrows))

    def mul(self, x: Poly, y: Poly) -> Poly:
        out: Poly = {}
        for p, c in x.items():
            for q, d in y.items():
                if p.target == q.source:
                    add_scaled(out, self.mul_paths(p, q), c * d)
        return out

    def loewy_length(self) -> int:
        """Least ``N`` with ``rad^N = 0``; raises if the radical is not nilpotent."""
        rad = self.basis.radical()
        one = self.field.one
        layer = Echelon()
        for p in rad:
            layer.add({p: one})
        n = 1
        prev = None
        while layer.rank:
            if prev is not None and layer.rank >= prev:
                raise ValidationError("radical is not nilpotent: the ideal is not admissible")
            prev = layer.rank
            nxt = Echelon()
            for row in layer.rows.values():
                for p in rad:
                    v = self.mul(row, {p: one})
                    if v:
                        nxt.add(v)
            layer = nxt
            n += 1
        return n
