"""Vanishing order of a symbol at a point, and its removal by prolongation.

A symbol vanishes to order exactly c at x0 when every coefficient's
derivatives through order c vanish there while some order c+1 derivative
does not.  Prolonging c+1 times always produces a nonzero fiber map at
such a point; ``desingularization_order`` finds that minimal level by
direct computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import RationalPoint, shift
from .errors import DimensionMismatch
from .jets import _indices, weight
from .symbols import LinearSymbol, _total_derivative_cached

NOT_VANISHING = "not_vanishing"
EXACTLY = "exactly"
IDENTICALLY_ZERO = "identically_zero"


@dataclass(frozen=True)
class VanishingReport:
    point: tuple
    kind: str
    order: Optional[int] = None

    @property
    def is_zero_map(self) -> bool:
        return self.kind != NOT_VANISHING

    def to_json_dict(self) -> dict:
        if self.kind == EXACTLY:
            order = {"exactly": self.order}
        else:
            order = self.kind
        return {"point": [str(c) for c in self.point], "order": order}

    def __str__(self):
        if self.kind == EXACTLY:
            return f"vanishes to order exactly {self.order}"
        if self.kind == NOT_VANISHING:
            return "does not vanish"
        return "identically zero"


def _check_point(sym: LinearSymbol, x0: RationalPoint) -> None:
    if len(x0) != sym.base_dim:
        raise DimensionMismatch(
            f"point of length {len(x0)} for dimension {sym.base_dim}"
        )


def vanishing_order(sym: LinearSymbol, x0: RationalPoint) -> VanishingReport:
    """Classify the vanishing order of all coefficients at a point.

    For a polynomial coefficient the lowest total degree after recentring
    at x0 equals the order of its first nonvanishing derivative there, so
    the classification is exact and always terminates.
    """
    _check_point(sym, x0)
    point = tuple(x0)
    if sym.is_zero:
        return VanishingReport(point, IDENTICALLY_ZERO)
    low = min(shift(coeff, x0).min_degree for coeff in sym.terms.values())
    if low == 0:
        return VanishingReport(point, NOT_VANISHING)
    return VanishingReport(point, EXACTLY, low - 1)


def desingularization_order(
    sym: LinearSymbol, x0: RationalPoint, cap: int
) -> Optional[int]:
    """Minimal prolongation level whose fiber matrix at x0 is nonzero.

    Builds prolongation components weight by weight and stops at the first
    level carrying a coefficient that survives evaluation at x0.  Returns
    None when every level through ``cap`` gives the zero matrix.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    _check_point(sym, x0)
    point = tuple(x0)
    comps = {}
    for beta in _indices(sym.base_dim, cap):
        if weight(beta) == 0:
            comps[beta] = sym
        else:
            pos = next(j for j, b in enumerate(beta) if b)
            prev = beta[:pos] + (beta[pos] - 1,) + beta[pos + 1 :]
            comps[beta] = _total_derivative_cached(comps[prev], pos + 1)
        if any(coeff.evaluate(point) for coeff in comps[beta].terms.values()):
            return weight(beta)
    return None


def finsupp_scan(sym: LinearSymbol, grid) -> list[VanishingReport]:
    """Pointwise vanishing classification over a grid of points."""
    return [vanishing_order(sym, x0) for x0 in grid]
