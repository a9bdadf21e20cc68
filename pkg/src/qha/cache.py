"""On-disk JSON cache for Groebner bases, algebra bases and resolution data.

Entries are keyed by a SHA-256 of the canonical presentation text, the arrow
order, the cap, the tie-break rule and :data:`SCHEMA_VERSION`, so a stale
entry can never be picked up for a different input.  Writers hold a lock
file and replace the entry atomically.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path as FsPath
from typing import Any, Dict, List, Optional, Tuple

from filelock import FileLock

from .dsl import format_presentation
from .quiver import Element, Path, Presentation
from .resolution import F3Element, GeneratorSet
from .rewriting import AlgebraBasis, GroebnerBasis, Member

SCHEMA_VERSION = 1
ENV_VAR = "QHA_CACHE_DIR"


def cache_key(pres: Presentation, cap: int, tie_break: str) -> str:
    order = ",".join(a for a, _, _ in pres.quiver.arrows)
    text = "\n".join([format_presentation(pres), f"order={order}", f"cap={cap}",
                      f"tie_break={tie_break}", f"schema={SCHEMA_VERSION}"])
    return hashlib.sha256(text.encode()).hexdigest()


def default_cache_dir() -> Optional[str]:
    return os.environ.get(ENV_VAR) or None


def _path(p: Path) -> List[Any]:
    return [p.source, p.target, list(p.arrows)]


def _unpath(x) -> Path:
    return Path(x[0], x[1], tuple(x[2]))


def _poly(terms: Dict[Path, Any]) -> List[List[Any]]:
    return [[_path(p), str(c)] for p, c in sorted(terms.items(), key=lambda t: (len(t[0].arrows), t[0]))]


def _unpoly(x, field) -> Dict[Path, Any]:
    return {_unpath(p): field.parse_scalar(c) for p, c in x}


class Cache:
    """Directory of JSON entries; ``None``-safe wrapper used by the pipeline."""

    def __init__(self, directory: str):
        self.dir = FsPath(directory)
        self.dir.mkdir(parents=True, exist_ok=True)

    def _file(self, key: str) -> FsPath:
        return self.dir / f"{key}.json"

    def load(self, key: str) -> Optional[dict]:
        f = self._file(key)
        if not f.exists():
            return None
        try:
            data = json.loads(f.read_text())
        except (OSError, ValueError):
            return None
        if data.get("schema") != SCHEMA_VERSION or data.get("key") != key:
            return None
        return data

    def store(self, key: str, data: dict) -> None:
        f = self._file(key)
        with FileLock(str(f) + ".lock"):
            tmp = f.with_suffix(".tmp")
            tmp.write_text(json.dumps(data, sort_keys=True))
            os.replace(tmp, f)


def encode(key: str, pres: Presentation, gb: GroebnerBasis, basis: AlgebraBasis,
           f2: GeneratorSet, f3: List[F3Element]) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "key": key,
        "cap": gb.cap,
        "tie_break": gb.tie_break,
        "groebner": [{"tip": _path(m.tip), "poly": _poly(m.poly)} for m in gb.members],
        "basis": {"paths": [_path(p) for p in basis.paths], "nil_index": basis.nil_index},
        "f2": list(f2.names),
        "f3": [{
            "element": _poly(y.element.terms),
            "origin": y.origin,
            "terminus": y.terminus,
            "right": [[i, _poly(e.terms)] for i, e in sorted(y.right.items())],
            "two_sided": [[str(c), _path(q), u, _path(r)] for c, q, u, r in y.two_sided],
        } for y in f3],
    }


def decode(data: dict, pres: Presentation) -> Tuple[GroebnerBasis, AlgebraBasis, GeneratorSet, List[F3Element]]:
    field, quiver = pres.field, pres.quiver
    members = []
    for m in data["groebner"]:
        members.append(Member(_unpath(m["tip"]), _unpoly(m["poly"], field)))
    gb = GroebnerBasis(quiver, field, members, data["cap"], data["tie_break"])
    basis = AlgebraBasis(quiver, [_unpath(p) for p in data["basis"]["paths"]], data["basis"]["nil_index"])
    names = data["f2"]
    elems = [pres.relation(n) for n in names]
    f2 = GeneratorSet(2, elems, list(names), [e.endpoints() for e in elems])
    f3 = []
    for y in data["f3"]:
        f3.append(F3Element(
            Element(_unpoly(y["element"], field)), y["origin"], y["terminus"],
            {i: Element(_unpoly(e, field)) for i, e in y["right"]},
            [(field.parse_scalar(c), _unpath(q), u, _unpath(r)) for c, q, u, r in y["two_sided"]],
        ))
    return gb, basis, f2, f3
