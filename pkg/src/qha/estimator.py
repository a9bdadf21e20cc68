"""Estimator-style front end for the whole pipeline.

``HochschildEstimator().fit(presentation)`` runs completion, basis
enumeration, the resolution and the cochain complex, and exposes the results
as fitted attributes with a trailing underscore.  There is nothing to
predict or transform, so only ``fit`` and the parameter API are provided.
"""

from __future__ import annotations

from typing import Optional, Union

from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .cache import Cache, cache_key, decode, encode
from .dsl import parse_presentation
from .errors import ValidationError
from .hochschild import CochainComplex, HHReport, cochain_complex, hh_dims
from .quiver import Presentation
from .resolution import Resolution
from .rewriting import Algebra, buchberger, default_cap


def check_presentation(x: Union[Presentation, str]) -> Presentation:
    """Accept a :class:`Presentation` or DSL source text."""
    if isinstance(x, Presentation):
        return x
    if isinstance(x, str):
        return parse_presentation(x)
    raise ValidationError(f"expected a Presentation or DSL text, got {type(x).__name__}")


def check_is_fitted(est: "HochschildEstimator") -> None:
    if not hasattr(est, "report_"):
        raise NotFittedError("call fit() first")


class HochschildEstimator(BaseEstimator):
    """Computes ``HH^0..HH^2`` of ``KQ/I`` from the minimal bimodule resolution.

    Parameters
    ----------
    cap : int or None
        Path-length cap for Groebner completion; None uses ``4 m + 4`` with
        ``m`` the longest relation path.
    tie_break : {"leftmost", "rightmost"}
        Which tip occurrence is rewritten first.  Dimensions do not depend on it.
    check : bool
        Verify ``A_n A_{n+1} = 0`` and ``M_{n+1} M_n = 0`` (raises on failure).
    cache_dir : str or None
        Directory for the JSON cache; None disables caching.
    """

    def __init__(self, cap: Optional[int] = None, tie_break: str = "leftmost",
                 check: bool = True, cache_dir: Optional[str] = None):
        self.cap = cap
        self.tie_break = tie_break
        self.check = check
        self.cache_dir = cache_dir

    def fit(self, presentation, y=None) -> "HochschildEstimator":
        pres = check_presentation(presentation)
        if self.tie_break not in ("leftmost", "rightmost"):
            raise ValidationError("tie_break must be 'leftmost' or 'rightmost'")
        cap = self.cap if self.cap is not None else default_cap(pres.max_relation_length())
        if cap < 2:
            raise ValidationError("cap must be at least 2")
        cache = Cache(self.cache_dir) if self.cache_dir else None
        key = cache_key(pres, cap, self.tie_break)
        data = cache.load(key) if cache else None
        if data is not None:
            gb, basis, f2, f3 = decode(data, pres)
            algebra = Algebra(gb, basis)
            res = Resolution(pres, gb, algebra, f2=f2, f3=f3, tie_break=self.tie_break)
        else:
            gb = buchberger(pres, cap, tie_break=self.tie_break)
            algebra = Algebra(gb)
            res = Resolution(pres, gb, algebra, tie_break=self.tie_break)
            if cache:
                cache.store(key, encode(key, pres, gb, algebra.basis, res.f2, res.f3_data))
        if self.check:
            res.check_complex()
        cx = cochain_complex(res)
        self.presentation_ = pres
        self.groebner_basis_ = gb
        self.algebra_ = algebra
        self.resolution_ = res
        self.complex_: CochainComplex = cx
        self.report_: HHReport = hh_dims(res, cx, check=self.check)
        self.hh_ = self.report_.hh
        self.cache_hit_ = data is not None
        return self

    @property
    def hh2_basis_(self):
        check_is_fitted(self)
        return self.report_.hh2_basis
