"""Quivers, paths and elements of the path algebra KQ.

Paths are written left to right: ``a b`` means first ``a``, then ``b``, so
``a b`` is composable iff the target of ``a`` is the source of ``b``.

Vertices and arrows are referred to by their position in the quiver's
declared lists.  The monomial order is length first, then lexicographic in
the declared arrow order, then by source vertex (see :func:`path_key`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .errors import ValidationError
from .field import QQ, FieldSpec


class Path(NamedTuple):
    source: int
    target: int
    arrows: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows


def path_key(p: Path):
    """Sort key realising the monomial order."""
    return (len(p.arrows), p.arrows, p.source)


def concat(p: Path, q: Path) -> Optional[Path]:
    if p.target != q.source:
        return None
    return Path(p.source, q.target, p.arrows + q.arrows)


class Quiver:
    """Finite quiver with named vertices and arrows."""

    def __init__(self, vertices: Sequence[str], arrows: Sequence[Tuple[str, str, str]]):
        self.vertices: Tuple[str, ...] = tuple(vertices)
        self.arrows: Tuple[Tuple[str, str, str], ...] = tuple((a, s, t) for a, s, t in arrows)
        self.vertex_index: Dict[str, int] = {}
        for i, v in enumerate(self.vertices):
            if v in self.vertex_index:
                raise ValidationError(f"duplicate vertex {v!r}")
            self.vertex_index[v] = i
        self.arrow_index: Dict[str, int] = {}
        src, tgt = [], []
        for i, (a, s, t) in enumerate(self.arrows):
            if a in self.arrow_index or a in self.vertex_index:
                raise ValidationError(f"duplicate identifier {a!r}")
            for end in (s, t):
                if end not in self.vertex_index:
                    raise ValidationError(f"arrow {a!r} uses undeclared vertex {end!r}")
            self.arrow_index[a] = i
            src.append(self.vertex_index[s])
            tgt.append(self.vertex_index[t])
        self.arrow_source: Tuple[int, ...] = tuple(src)
        self.arrow_target: Tuple[int, ...] = tuple(tgt)
        self.out_arrows: List[List[int]] = [[] for _ in self.vertices]
        self.in_arrows: List[List[int]] = [[] for _ in self.vertices]
        for i, (s, t) in enumerate(zip(src, tgt)):
            self.out_arrows[s].append(i)
            self.in_arrows[t].append(i)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def trivial(self, v: int) -> Path:
        return Path(v, v, ())

    def arrow_path(self, a: int) -> Path:
        return Path(self.arrow_source[a], self.arrow_target[a], (a,))

    def path(self, names: Sequence[str], source: Optional[str] = None) -> Path:
        """Path from arrow names; ``source`` is needed for trivial paths."""
        if not names:
            if source is None:
                raise ValidationError("trivial path needs a source vertex")
            v = self.vertex_index[source]
            return Path(v, v, ())
        idx = []
        for n in names:
            if n not in self.arrow_index:
                raise ValidationError(f"unknown arrow {n!r}")
            idx.append(self.arrow_index[n])
        return self.path_from_indices(idx)

    def path_from_indices(self, idx: Sequence[int]) -> Path:
        for a, b in zip(idx, idx[1:]):
            if self.arrow_target[a] != self.arrow_source[b]:
                raise ValidationError(
                    f"arrows {self.arrows[a][0]!r} and {self.arrows[b][0]!r} do not compose"
                )
        return Path(self.arrow_source[idx[0]], self.arrow_target[idx[-1]], tuple(idx))

    def vertex_at(self, p: Path, i: int) -> int:
        """Vertex reached after the first ``i`` arrows of ``p``."""
        return p.source if i == 0 else self.arrow_target[p.arrows[i - 1]]

    def subpath(self, p: Path, i: int, j: int) -> Path:
        return Path(self.vertex_at(p, i), self.vertex_at(p, j), p.arrows[i:j])

    def format_path(self, p: Path) -> str:
        if not p.arrows:
            return f"e_{self.vertices[p.source]}"
        return " ".join(self.arrows[a][0] for a in p.arrows)

    def paths_from(self, v: int, max_len: int) -> Iterator[Path]:
        """All paths starting at ``v`` of length at most ``max_len``."""
        layer = [self.trivial(v)]
        for _ in range(max_len + 1):
            yield from layer
            layer = [Path(p.source, self.arrow_target[a], p.arrows + (a,))
                     for p in layer for a in self.out_arrows[p.target]]

    def paths_between(self, v: int, w: int, max_len: int, min_len: int = 0) -> List[Path]:
        return [p for p in self.paths_from(v, max_len) if p.target == w and len(p.arrows) >= min_len]

    def paths_into(self, w: int, max_len: int) -> Iterator[Path]:
        layer = [self.trivial(w)]
        for _ in range(max_len + 1):
            yield from layer
            layer = [Path(self.arrow_source[a], p.target, (a,) + p.arrows)
                     for p in layer for a in self.in_arrows[p.source]]

    def reordered(self, order: Sequence[str]) -> "Quiver":
        """Same quiver with the arrows declared in ``order``."""
        if sorted(order) != sorted(a for a, _, _ in self.arrows):
            raise ValidationError("arrow order must be a permutation of the arrow names")
        by_name = {a: (a, s, t) for a, s, t in self.arrows}
        return Quiver(self.vertices, [by_name[a] for a in order])


class Element:
    """Finite linear combination of paths; an element of KQ.

    ``terms`` maps :class:`Path` to nonzero scalars and must not be mutated
    after construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Path, object]] = None):
        self.terms: Dict[Path, object] = {p: c for p, c in (terms or {}).items() if c}

    @classmethod
    def from_path(cls, p: Path, c=1) -> "Element":
        return cls({p: c})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def sorted_terms(self) -> List[Tuple[Path, object]]:
        """Terms in decreasing monomial order."""
        return sorted(self.terms.items(), key=lambda t: path_key(t[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out[p] + c if p in out else c
        return Element(out)

    def __neg__(self) -> "Element":
        return Element({p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c) -> "Element":
        if not c:
            return Element()
        return Element({p: c * v for p, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def tip(self) -> Path:
        return max(self.terms, key=path_key)

    def leading_coefficient(self):
        return self.terms[self.tip()]

    def min_length(self) -> int:
        return min(len(p.arrows) for p in self.terms)

    def max_length(self) -> int:
        return max(len(p.arrows) for p in self.terms)

    def endpoints(self) -> Optional[Tuple[int, int]]:
        """``(origin, terminus)`` if the element is uniform, else None."""
        ends = {(p.source, p.target) for p in self.terms}
        return ends.pop() if len(ends) == 1 else None

    def bracket(self, v: int, w: int) -> "Element":
        """``e_v * self * e_w``."""
        return Element({p: c for p, c in self.terms.items() if p.source == v and p.target == w})

    def format(self, quiver: Quiver, field: FieldSpec = QQ) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (p, c) in enumerate(self.sorted_terms()):
            word = quiver.format_path(p)
            neg = _is_negative(c, field)
            mag = -c if neg else c
            coef = "" if mag == 1 else f"{field.format_scalar(mag)} "
            sign = ("-" if neg else "") if i == 0 else (" - " if neg else " + ")
            parts.append(f"{sign}{coef}{word}")
        return "".join(parts)

    def __repr__(self):
        return f"Element({self.terms!r})"


def _is_negative(c, field: FieldSpec) -> bool:
    if field.p:
        return False
    return c < 0


def compose(x: Element, y: Element) -> Element:
    """Product in KQ: bilinear extension of concatenation."""
    out: Dict[Path, object] = {}
    by_source: Dict[int, List[Tuple[Path, object]]] = {}
    for q, d in y.terms.items():
        by_source.setdefault(q.source, []).append((q, d))
    for p, c in x.terms.items():
        for q, d in by_source.get(p.target, ()):
            r = Path(p.source, q.target, p.arrows + q.arrows)
            v = out.get(r)
            out[r] = c * d if v is None else v + c * d
    return Element(out)


@dataclass
class Presentation:
    """``K Q / I`` with ``I`` generated by uniform relations in ``J^2``."""

    field: FieldSpec
    quiver: Quiver
    relations: List[Element]
    names: List[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.names:
            self.names = [f"r{i + 1}" for i in range(len(self.relations))]
        if len(self.names) != len(self.relations):
            raise ValidationError("one name per relation required")
        if len(set(self.names)) != len(self.names):
            raise ValidationError("relation names must be unique")
        for name, r in zip(self.names, self.relations):
            validate_relation(r, name)

    def __eq__(self, other):
        return (isinstance(other, Presentation) and self.field == other.field
                and self.quiver == other.quiver and self.names == other.names
                and self.relations == other.relations)

    def max_relation_length(self) -> int:
        return max((r.max_length() for r in self.relations), default=0)

    def relation(self, name: str) -> Element:
        return self.relations[self.names.index(name)]

    def element(self, words: Iterable[Tuple[object, Sequence[str]]]) -> Element:
        """Build an element from ``(coeff, [arrow names])`` pairs."""
        out = Element()
        for c, names in words:
            out = out + Element.from_path(self.quiver.path(names), self.field(c))
        return out

    def with_arrow_order(self, order: Sequence[str]) -> "Presentation":
        """Same algebra with the arrows redeclared in ``order``."""
        q2 = self.quiver.reordered(order)
        remap = {self.quiver.arrow_index[a]: q2.arrow_index[a] for a, _, _ in self.quiver.arrows}
        rels = [Element({Path(p.source, p.target, tuple(remap[a] for a in p.arrows)): c
                         for p, c in r.terms.items()}) for r in self.relations]
        return Presentation(self.field, q2, rels, list(self.names))

    def with_relations(self, relations: Sequence[Element], names: Sequence[str]) -> "Presentation":
        return Presentation(self.field, self.quiver, list(relations), list(names))


def validate_relation(r: Element, name: str = "relation") -> Tuple[int, int]:
    if not r:
        raise ValidationError(f"{name} is zero")
    ends = r.endpoints()
    if ends is None:
        raise ValidationError(f"{name} is not uniform (its paths have different endpoints)")
    if r.min_length() < 2:
        raise ValidationError(f"{name} contains a path of length < 2")
    return ends
