"""Exact jet lifting and polynomial solution construction.

Solving P(f) = g to order s at a point means finding an (r+s)-jet that the
prolonged symbol maps onto the s-jet of g; realizing that jet as its Taylor
polynomial then gives an honest polynomial solution.  Gluing at several
points goes through exact jet interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg, roots
from .algebra import (
    MultiPoly,
    RationalPoint,
    hermite_interpolate,
    rational_point,
    taylor_jet,
    taylor_polynomial,
)
from .errors import DimensionMismatch, DuplicatePoints, UnsolvableError
from .jets import JetVector, MultiIndex, _indices, jet_dimension
from .scalar import Scalar
from .symbols import GeneralSymbol, LinearSymbol, fiber_matrix, prolong


@dataclass(frozen=True)
class LiftResult:
    """Outcome of one exact jet lift; pivots record the elimination path."""

    jet: Optional[JetVector]
    pivots: tuple[MultiIndex, ...] = ()

    @property
    def solved(self) -> bool:
        return self.jet is not None


@dataclass(frozen=True)
class RankReport:
    rank: int
    full: bool


@dataclass(frozen=True)
class PCPWitness:
    """A jet fiber point hitting the target value, or a note on why not."""

    jet: Optional[JetVector]
    note: str = ""

    @property
    def found(self) -> bool:
        return self.jet is not None


def lift_jet(sym: LinearSymbol, x0: RationalPoint, target: JetVector) -> LiftResult:
    """Solve the prolonged fiber map for a preimage of the target jet.

    Elimination runs in graded-lex column order and free variables are
    pinned to zero, so identical inputs give identical jets and pivots.
    """
    if target.base_dim != sym.base_dim:
        raise DimensionMismatch(
            f"target jet over R^{target.base_dim} for a symbol over "
            f"R^{sym.base_dim}"
        )
    s = target.order
    matrix = fiber_matrix(prolong(sym, s), x0)
    solution, pivot_cols = linalg.solve(matrix, list(target.entries))
    columns = _indices(sym.base_dim, sym.order + s)
    pivots = tuple(columns[c] for c in pivot_cols)
    if solution is None:
        return LiftResult(None, pivots)
    return LiftResult(JetVector(sym.base_dim, sym.order + s, solution), pivots)


def borel_realize(jet: JetVector, x0: RationalPoint) -> MultiPoly:
    """The polynomial whose jet at x0 is exactly the given jet."""
    if len(x0) != jet.base_dim:
        raise DimensionMismatch(
            f"point of length {len(x0)} for dimension {jet.base_dim}"
        )
    return taylor_polynomial(jet, x0)


def solve_to_order(
    sym: LinearSymbol, g: MultiPoly, x0: RationalPoint, s: int
) -> MultiPoly:
    """Polynomial f with the s-jet of P(f) - g vanishing at x0, exactly.

    Raises UnsolvableError when the s-jet of g is outside the image of the
    prolonged symbol at x0.
    """
    if g.num_vars != sym.base_dim:
        raise DimensionMismatch(
            f"right-hand side in {g.num_vars} variables for dimension "
            f"{sym.base_dim}"
        )
    target = taylor_jet(g, x0, s)
    lifted = lift_jet(sym, x0, target)
    if not lifted.solved:
        raise UnsolvableError(
            f"no order-{s} solution jet at {tuple(x0)}", point=tuple(x0)
        )
    return borel_realize(lifted.jet, x0)


def solve_at_points(
    sym: LinearSymbol, g: MultiPoly, points, s: int
) -> MultiPoly:
    """One polynomial solving P(f) = g to order s at every listed point.

    Solves pointwise at jet order r+s and glues the solution jets with
    exact interpolation; the per-point s-jet guarantee survives because
    the glued polynomial reproduces each solution jet exactly.
    """
    pts = [rational_point(p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            if pts[a] == pts[b]:
                raise DuplicatePoints(f"point {pts[a]} repeated")
    jets = []
    for p in pts:
        target = taylor_jet(g, p, s)
        lifted = lift_jet(sym, p, target)
        if not lifted.solved:
            raise UnsolvableError(
                f"no order-{s} solution jet at {tuple(p)}", point=tuple(p)
            )
        jets.append(lifted.jet)
    return hermite_interpolate(pts, jets, sym.order + s)


def check_surjectivity(sym: LinearSymbol, x0: RationalPoint, k: int) -> RankReport:
    """Exact rank of the level-k prolonged fiber map at x0."""
    if k < 0:
        raise ValueError("prolongation level must be >= 0")
    matrix = fiber_matrix(prolong(sym, k), x0)
    r = linalg.rank(matrix)
    return RankReport(rank=r, full=r == jet_dimension(sym.base_dim, k))


def membership_I(
    sym: LinearSymbol, g: MultiPoly, x0: RationalPoint, s: int
) -> bool:
    """Does every jet of g through order s lift through the symbol at x0?"""
    if g.num_vars != sym.base_dim:
        raise DimensionMismatch(
            f"right-hand side in {g.num_vars} variables for dimension "
            f"{sym.base_dim}"
        )
    for k in range(s + 1):
        if not lift_jet(sym, x0, taylor_jet(g, x0, k)).solved:
            return False
    return True


def _linear_witness(
    sym: LinearSymbol, g: MultiPoly, x0: RationalPoint
) -> PCPWitness:
    gx = g.evaluate(x0)
    for alpha in _indices(sym.base_dim, sym.order):
        coeff = sym.terms.get(alpha)
        if coeff is None:
            continue
        value = coeff.evaluate(x0)
        if value:
            jet = JetVector.from_mapping(
                sym.base_dim, sym.order, {alpha: gx / value}
            )
            return PCPWitness(jet)
    if not gx:
        return PCPWitness(JetVector.zeros(sym.base_dim, sym.order))
    return PCPWitness(
        None, "every coefficient vanishes at the point but g does not"
    )


def _freeze_univariate(gsym: GeneralSymbol, x0, var: int) -> list[Scalar]:
    """Coefficients in y_var after pinning x = x0 and the other jet
    coordinates to zero."""
    m = gsym.base_dim
    coords = rational_point(x0)
    coeffs: dict[int, Scalar] = {}
    for exps, c in gsym.body.terms.items():
        if any(e for j, e in enumerate(exps[m:]) if j != var and e):
            continue
        f = Fraction(1)
        for x, e in zip(coords, exps[:m]):
            if e:
                f *= x**e
        d = exps[m + var]
        coeffs[d] = coeffs.get(d, Scalar()) + c * f
    top = max(coeffs, default=0)
    return [coeffs.get(d, Scalar()) for d in range(top + 1)]


def _nonlinear_witness(
    gsym: GeneralSymbol, g: MultiPoly, x0: RationalPoint
) -> PCPWitness:
    gx = g.evaluate(x0)
    m = gsym.base_dim
    jet_vars = gsym.jet_variables()
    chosen = None
    univariate = None
    for var in range(len(jet_vars)):
        coeffs = _freeze_univariate(gsym, x0, var)
        if len(coeffs) > 1 and any(coeffs[1:]):
            chosen = var
            univariate = coeffs
            break
    if chosen is None:
        constant = gsym.body.eval_scalars(
            [Scalar(c) for c in rational_point(x0)]
            + [Scalar()] * len(jet_vars)
        )
        if constant == gx:
            return PCPWitness(JetVector.zeros(m, gsym.order))
        return PCPWitness(
            None,
            "freeze-and-solve: every single-coordinate freeze is constant "
            "and misses the target value",
        )

    equation = list(univariate)
    equation[0] = equation[0] - gx
    alpha = jet_vars[chosen]
    label = "y[" + ",".join(str(a) for a in alpha) + "]"

    if all(c.is_real for c in equation):
        real_eq = [c.re for c in equation]
        gcd_note = ""
    else:
        real_eq = roots.poly_gcd(
            [c.re for c in equation], [c.im for c in equation]
        )
        gcd_note = " (common roots of the real and imaginary parts)"

    root = roots.first_rational_root(real_eq)
    if root is not None:
        jet = JetVector.from_mapping(m, gsym.order, {alpha: Scalar(root)})
        return PCPWitness(jet)

    count = roots.count_real_roots(real_eq)
    depends = {
        j
        for exps in gsym.body.terms
        for j, e in enumerate(exps[m:])
        if e
    }
    exhaustive = depends == {chosen}
    note = (
        f"freeze-and-solve univariate in {label}{gcd_note}: no rational "
        f"root; isolated {count} real root(s)"
    )
    if exhaustive and count == 0:
        note += "; the reduction is exhaustive, so no real witness exists"
    return PCPWitness(None, note)


def pcp_check(sym, g: MultiPoly, x0: RationalPoint) -> PCPWitness:
    """Search for a jet fiber point p with symbol(p) = g(x0).

    Linear symbols get the constructive witness along the first
    graded-lex coordinate with a nonvanishing coefficient.  Nonlinear
    symbols are reduced to one jet coordinate at a time and solved over
    the rationals; a miss is reported with the count of isolated real
    roots, and is only a proof of emptiness when the reduction covers
    the symbol's whole jet dependence.
    """
    if g.num_vars != sym.base_dim:
        raise DimensionMismatch(
            f"right-hand side in {g.num_vars} variables for dimension "
            f"{sym.base_dim}"
        )
    if len(x0) != sym.base_dim:
        raise DimensionMismatch(
            f"point of length {len(x0)} for dimension {sym.base_dim}"
        )
    if isinstance(sym, LinearSymbol):
        return _linear_witness(sym, g, x0)
    if isinstance(sym, GeneralSymbol):
        return _nonlinear_witness(sym, g, x0)
    raise TypeError(f"expected a symbol, got {type(sym).__name__}")
