"""Sparse exact Gaussian elimination.

Vectors are dicts ``{index: scalar}`` without zero entries.  Indices can be
any mutually comparable hashables; the largest index of a vector is used as
its pivot.  Scalars only need ``+ - * /`` and truthiness, so the same code
serves ``Fraction`` and ``Mod``.
"""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Vector = Dict[Hashable, object]


def add_scaled(target: Vector, source: Vector, c) -> None:
    """In place: ``target += c * source``."""
    for k, v in source.items():
        w = target.get(k)
        if w is None:
            target[k] = c * v
        else:
            w = w + c * v
            if w:
                target[k] = w
            else:
                del target[k]


def scaled(source: Vector, c) -> Vector:
    if not c:
        return {}
    return {k: c * v for k, v in source.items()}


class Echelon:
    """Incrementally built echelon basis of a subspace.

    With ``track=True`` every stored row remembers which combination of the
    inserted vectors produced it, which gives kernels and solutions for free.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.rows: Dict[Hashable, Vector] = {}
        self.combos: Dict[Hashable, Vector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vector, combo: Optional[Vector] = None) -> Tuple[Vector, Optional[Vector]]:
        """Return ``(remainder, combo)``; the remainder has no pivot of ours
        as its leading index, so it is zero iff ``v`` lies in the span."""
        v = dict(v)
        rest: Vector = {}
        rows = self.rows
        while v:
            p = max(v)
            c = v[p]
            row = rows.get(p)
            if row is None:
                rest[p] = c
                del v[p]
                continue
            add_scaled(v, row, -c)
            if combo is not None:
                add_scaled(combo, self.combos[p], -c)
        return rest, combo

    def contains(self, v: Vector) -> bool:
        rest, _ = self.reduce(v)
        return not rest

    def add(self, v: Vector, label: Hashable = None) -> Optional[Vector]:
        """Insert ``v``.  Returns ``None`` if ``v`` was independent, otherwise
        (with tracking) the kernel relation it produced, else ``{}``."""
        combo = {label: 1} if self.track else None
        rest, combo = self.reduce(v, combo)
        if not rest:
            return combo if self.track else {}
        p = max(rest)
        inv = 1 / rest[p]
        self.rows[p] = scaled(rest, inv)
        if self.track:
            self.combos[p] = scaled(combo, inv)
        return None

    def express(self, v: Vector) -> Optional[Vector]:
        """Coefficients over the inserted labels summing to ``v``, or None."""
        if not self.track:
            raise ValueError("express() needs a tracking echelon")
        rest, combo = self.reduce(v, {})
        if rest:
            return None
        return scaled(combo, -1)

    def reduced_rows(self) -> List[Vector]:
        """Rows of the fully reduced echelon form, ordered by pivot."""
        out: Dict[Hashable, Vector] = {}
        for p in sorted(self.rows):
            row = dict(self.rows[p])
            # out[q] is already reduced, so this only adds non-pivot entries
            for q in [q for q in row if q != p and q in out]:
                add_scaled(row, out[q], -row[q])
            out[p] = row
        return [out[p] for p in sorted(out)]


def rank(vectors: Iterable[Vector]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


def kernel(columns: Sequence[Vector]) -> List[Vector]:
    """Basis of ``{c : sum_j c_j columns[j] = 0}`` as dicts over ``j``."""
    e = Echelon(track=True)
    out = []
    for j, col in enumerate(columns):
        rel = e.add(col, j)
        if rel is not None:
            out.append(rel)
    return out


def solve(columns: Sequence[Vector], target: Vector) -> Optional[Vector]:
    """Some ``c`` with ``sum_j c_j columns[j] == target``, or None."""
    e = Echelon(track=True)
    for j, col in enumerate(columns):
        e.add(col, j)
    return e.express(target)


def rref(vectors: Iterable[Vector]) -> List[Vector]:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.reduced_rows()


def matmul_columns(a_cols: Sequence[Vector], b_cols: Sequence[Vector]) -> List[Vector]:
    """Columns of ``A @ B`` where ``B``'s columns index into ``A``'s columns."""
    out = []
    for bc in b_cols:
        acc: Vector = {}
        for j, c in bc.items():
            add_scaled(acc, a_cols[j], c)
        out.append(acc)
    return out
