"""Shared builders for the test suite."""

from __future__ import annotations

import random
from typing import Dict, List, Sequence, Tuple

import pytest

from qha import HochschildEstimator, parse_presentation
from qha.field import QQ
from qha.quiver import Element, Presentation, Quiver
from qha.rewriting import buchberger, enumerate_basis

POINT = """
field Q
quiver { vertex v; }
relations { }
"""

DUAL_NUMBERS = """
field Q
quiver { vertex v; arrow x : v -> v; }
relations { x x; }
"""

AB_BA = """
field Q
quiver { vertex u, w; arrow a : u -> w; arrow b : w -> u; }
relations { a b; b a; }
"""

TRUNCATED_CYCLE_3 = """
field Q
quiver { vertex v; arrow x : v -> v; }
relations { x x x; }
"""


def presentation(text: str) -> Presentation:
    return parse_presentation(text)


def fit(pres: Presentation, **kw) -> HochschildEstimator:
    return HochschildEstimator(**kw).fit(pres)


def random_monomial(seed: int, max_dim: int = 12) -> Presentation:
    """A random admissible monomial algebra with ``dim <= max_dim``.

    Every path of length 3 is a relation, together with a random subset of
    the length-2 paths; redundant generators are kept on purpose.
    """
    rng = random.Random(seed)
    while True:
        nv = rng.randint(1, 3)
        verts = [f"v{i}" for i in range(nv)]
        arrows = []
        for i in range(rng.randint(1, 3)):
            arrows.append((f"x{i}", rng.choice(verts), rng.choice(verts)))
        q = Quiver(verts, arrows)
        two = [q.path_from_indices(ix) for ix in _words(q, 2)]
        three = [q.path_from_indices(ix) for ix in _words(q, 3)]
        keep = [p for p in two if rng.random() < 0.5]
        rels = [Element.from_path(p, QQ.one) for p in keep + three]
        pres = Presentation(QQ, q, rels)
        if enumerate_basis(buchberger(pres)).dim <= max_dim:
            return pres
        seed += 1000
        rng = random.Random(seed)


def _words(q: Quiver, n: int) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = [(a,) for a in range(q.n_arrows)]
    for _ in range(n - 1):
        out = [w + (a,) for w in out for a in q.out_arrows[q.arrow_target[w[-1]]]]
    return out


def cochain(est: HochschildEstimator, values: Dict[str, Sequence[Tuple[object, Sequence[str]]]],
            level: int = 2) -> Dict[int, object]:
    """Coordinates of the cochain ``generator name -> sum c * NF(path)``.

    An empty word list means the trivial path at the generator's origin.
    """
    hom = est.complex_.homs[level]
    pres = est.presentation_
    gb = est.groebner_basis_
    per: Dict[int, Dict] = {}
    for name, terms in values.items():
        j = hom.names.index(name)
        o, _ = hom.summands[j]
        acc: Dict = {}
        for c, words in terms:
            path = pres.quiver.path(words) if words else pres.quiver.trivial(o)
            for p, d in gb.nf_path(path).items():
                acc[p] = acc.get(p, 0) + pres.field(c) * d
        per[j] = {p: c for p, c in acc.items() if c}
    return hom.vector(per)


@pytest.fixture
def tmp_cache(tmp_path):
    return str(tmp_path / "cache")
