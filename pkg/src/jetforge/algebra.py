"""Sparse multivariate polynomials over the Gaussian rationals.

Polynomials are stored as ``multiindex -> Scalar`` maps with zero
coefficients pruned; all operations are exact.  This module also carries
the jet-level operations on polynomials: Taylor jets, truncated local
inversion, and multi-point jet interpolation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from .errors import DimensionMismatch, DuplicatePoints, NotAUnit
from .jets import JetVector, MultiIndex, _indices, factorial, graded_key, weight
from .scalar import Scalar, as_fraction

RationalPoint = tuple[Fraction, ...]


def rational_point(coords) -> RationalPoint:
    """Coerce a sequence of ints/Fractions/strings to an exact point."""
    return tuple(as_fraction(c) for c in coords)


class MultiPoly:
    """A sparse polynomial in ``num_vars`` variables over Scalar.

    Treat instances as immutable; every operation returns a new value.
    """

    __slots__ = ("num_vars", "terms", "_hash")

    def __init__(self, num_vars: int, terms=None):
        if num_vars < 1:
            raise ValueError("polynomials need at least one variable")
        clean: dict[MultiIndex, Scalar] = {}
        for alpha, coeff in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != num_vars or any(a < 0 for a in alpha):
                raise DimensionMismatch(
                    f"exponent {alpha} invalid for {num_vars} variables"
                )
            c = Scalar.coerce(coeff)
            if c:
                clean[alpha] = c
        self.num_vars = num_vars
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPoly":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value) -> "MultiPoly":
        return cls(num_vars, {(0,) * num_vars: Scalar.coerce(value)})

    @classmethod
    def variable(cls, num_vars: int, i: int) -> "MultiPoly":
        """The coordinate x_i (1-based)."""
        if not 1 <= i <= num_vars:
            raise DimensionMismatch(f"variable index {i} outside 1..{num_vars}")
        alpha = tuple(1 if j == i - 1 else 0 for j in range(num_vars))
        return cls(num_vars, {alpha: Scalar(1)})

    @classmethod
    def monomial(cls, num_vars: int, alpha: MultiIndex, coeff=1) -> "MultiPoly":
        return cls(num_vars, {tuple(alpha): Scalar.coerce(coeff)})

    def coeff(self, alpha: MultiIndex) -> Scalar:
        return self.terms.get(tuple(alpha), Scalar())

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((weight(a) for a in self.terms), default=-1)

    @property
    def min_degree(self) -> int:
        """Smallest total degree among stored terms; -1 for zero."""
        return min((weight(a) for a in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.num_vars == other.num_vars and self.terms == other.terms
        if isinstance(other, (int, Fraction, Scalar)):
            c = Scalar.coerce(other)
            if not c:
                return not self.terms
            return self.terms == {(0,) * self.num_vars: c}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self.terms.items())))
        return self._hash

    def _check_same(self, other: "MultiPoly") -> None:
        if self.num_vars != other.num_vars:
            raise DimensionMismatch(
                f"mixing polynomials in {self.num_vars} and {other.num_vars} variables"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = MultiPoly.constant(self.num_vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same(other)
        out = dict(self.terms)
        for alpha, c in other.terms.items():
            s = out.get(alpha, Scalar()) + c
            if s:
                out[alpha] = s
            else:
                out.pop(alpha, None)
        return MultiPoly(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.num_vars, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = MultiPoly.constant(self.num_vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            c = Scalar.coerce(other)
            if not c:
                return MultiPoly(self.num_vars)
            return MultiPoly(
                self.num_vars, {a: v * c for a, v in self.terms.items()}
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same(other)
        out: dict[MultiIndex, Scalar] = {}
        for a1, c1 in self.terms.items():
            for a2, c2 in other.terms.items():
                key = tuple(x + y for x, y in zip(a1, a2))
                s = out.get(key, Scalar()) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return MultiPoly(self.num_vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers take nonnegative integer exponents")
        out = MultiPoly.constant(self.num_vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def partial(self, i: int) -> "MultiPoly":
        """Exact partial derivative with respect to x_i (1-based)."""
        if not 1 <= i <= self.num_vars:
            raise DimensionMismatch(f"variable index {i} outside 1..{self.num_vars}")
        j = i - 1
        out = {}
        for alpha, c in self.terms.items():
            e = alpha[j]
            if e:
                key = alpha[:j] + (e - 1,) + alpha[j + 1 :]
                out[key] = out.get(key, Scalar()) + c * e
        return MultiPoly(self.num_vars, out)

    def evaluate(self, x0: RationalPoint) -> Scalar:
        """Exact value at a rational point."""
        if len(x0) != self.num_vars:
            raise DimensionMismatch(
                f"point of length {len(x0)} for {self.num_vars} variables"
            )
        coords = rational_point(x0)
        total = Scalar()
        for alpha, c in self.terms.items():
            f = Fraction(1)
            for x, e in zip(coords, alpha):
                if e:
                    f *= x**e
            total = total + c * f
        return total

    def eval_scalars(self, values) -> Scalar:
        """Exact value with arbitrary Scalar substitutions per variable."""
        vals = [Scalar.coerce(v) for v in values]
        if len(vals) != self.num_vars:
            raise DimensionMismatch(
                f"{len(vals)} values for {self.num_vars} variables"
            )
        total = Scalar()
        for alpha, c in self.terms.items():
            f = c
            for x, e in zip(vals, alpha):
                if e:
                    f = f * x**e
            total = total + f
        return total

    def __repr__(self):
        return f"MultiPoly({self.num_vars}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def derivative(p: MultiPoly, alpha: MultiIndex) -> MultiPoly:
    """Iterated partial derivative D^alpha p."""
    if len(alpha) != p.num_vars:
        raise DimensionMismatch(
            f"multiindex of length {len(alpha)} for {p.num_vars} variables"
        )
    out = p
    for i, e in enumerate(alpha, start=1):
        for _ in range(e):
            if not out:
                return out
            out = out.partial(i)
    return out


def evaluate(p: MultiPoly, x0: RationalPoint) -> Scalar:
    return p.evaluate(x0)


def shift(p: MultiPoly, x0: RationalPoint) -> MultiPoly:
    """Recentre: returns q with q(u) = p(u + x0)."""
    if len(x0) != p.num_vars:
        raise DimensionMismatch(
            f"point of length {len(x0)} for {p.num_vars} variables"
        )
    coords = rational_point(x0)
    if not any(coords):
        return p
    acc: dict[MultiIndex, Scalar] = {}
    for alpha, coeff in p.terms.items():
        per_var = []
        for e, c in zip(alpha, coords):
            if e == 0 or c == 0:
                per_var.append([(e, Fraction(1))])
            else:
                per_var.append(
                    [(t, Fraction(math.comb(e, t)) * c ** (e - t)) for t in range(e + 1)]
                )
        for combo in product(*per_var):
            key = tuple(t for t, _ in combo)
            f = Fraction(1)
            for _, w in combo:
                f *= w
            s = acc.get(key, Scalar()) + coeff * f
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
    return MultiPoly(p.num_vars, acc)


def truncate(p: MultiPoly, k: int) -> MultiPoly:
    """Drop all terms of total degree above k."""
    return MultiPoly(p.num_vars, {a: c for a, c in p.terms.items() if weight(a) <= k})


def taylor_jet(p: MultiPoly, x0: RationalPoint, k: int) -> JetVector:
    """The order-k jet of p at x0: raw derivatives D^alpha p(x0), |alpha| <= k."""
    if k < 0:
        raise ValueError("jet order must be >= 0")
    if len(x0) != p.num_vars:
        raise DimensionMismatch(
            f"point of length {len(x0)} for {p.num_vars} variables"
        )
    point = rational_point(x0)
    # walk the multiindex tree so each D^alpha p is derived once
    derivatives: dict[MultiIndex, MultiPoly] = {}
    entries = []
    for alpha in _indices(p.num_vars, k):
        if weight(alpha) == 0:
            derivatives[alpha] = p
        else:
            pos = next(j for j, a in enumerate(alpha) if a)
            parent = alpha[:pos] + (alpha[pos] - 1,) + alpha[pos + 1 :]
            derivatives[alpha] = derivatives[parent].partial(pos + 1)
        entries.append(derivatives[alpha].evaluate(point))
    return JetVector(p.num_vars, k, entries)


def taylor_polynomial(jet: JetVector, x0: RationalPoint) -> MultiPoly:
    """The polynomial sum of jet[alpha]/alpha! * (x - x0)^alpha.

    Its jet at x0 reproduces the input exactly.
    """
    m = jet.base_dim
    if len(x0) != m:
        raise DimensionMismatch(f"point of length {len(x0)} for dimension {m}")
    centred = MultiPoly(
        m,
        {
            alpha: v / factorial(alpha)
            for alpha, v in zip(_indices(m, jet.order), jet.entries)
        },
    )
    back = tuple(-c for c in rational_point(x0))
    return shift(centred, back)


def local_inverse_truncated(p: MultiPoly, x0: RationalPoint, k: int) -> MultiPoly:
    """Degree <= k polynomial q with jet_k(p*q - 1, x0) = 0.

    Geometric-series inversion of the recentred polynomial; requires
    p(x0) != 0.
    """
    if k < 0:
        raise ValueError("truncation order must be >= 0")
    c0 = p.evaluate(x0)
    if not c0:
        raise NotAUnit("polynomial vanishes at the expansion point")
    # only the k-jet of p matters for a degree <= k inverse
    centred = truncate(shift(p, x0), k)
    tail = (centred - c0) * (Scalar(1) / c0)
    series = MultiPoly.constant(p.num_vars, 1)
    power = MultiPoly.constant(p.num_vars, 1)
    for _ in range(k):
        power = truncate(power * (-tail), k)
        if not power:
            break
        series = series + power
    series = series * (Scalar(1) / c0)
    back = tuple(-c for c in rational_point(x0))
    return shift(series, back)


def _norm_squared(m: int, x0: RationalPoint) -> MultiPoly:
    """The polynomial ||x - x0||^2 = sum_i (x_i - x0_i)^2."""
    total = MultiPoly.zero(m)
    for i in range(1, m + 1):
        d = MultiPoly.variable(m, i) - MultiPoly.constant(m, Fraction(x0[i - 1]))
        total = total + d * d
    return total


def hermite_interpolate(points, jets, k: int) -> MultiPoly:
    """Polynomial matching a prescribed order-k jet at each of several points.

    Each point x_j gets a bump polynomial B_j that equals 1 at x_j and
    vanishes to order >= k+1 at every other point; the jet data is carried
    by a degree <= k factor corrected with the truncated local inverse of
    B_j.  The result matches every prescribed jet exactly.
    """
    points = [rational_point(p) for p in points]
    if not points:
        raise ValueError("need at least one interpolation point")
    m = len(points[0])
    if len(jets) != len(points):
        raise DimensionMismatch("one jet per point required")
    for p in points:
        if len(p) != m:
            raise DimensionMismatch("interpolation points have mixed dimensions")
    for jet in jets:
        if jet.base_dim != m or jet.order != k:
            raise DimensionMismatch(
                f"jets must have dimension {m} and order {k}"
            )
    for a in range(len(points)):
        for b in range(a + 1, len(points)):
            if points[a] == points[b]:
                raise DuplicatePoints(f"point {points[a]} repeated")

    result = MultiPoly.zero(m)
    for j, (pj, jet) in enumerate(zip(points, jets)):
        bump_poly = MultiPoly.constant(m, 1)
        for l, pl in enumerate(points):
            if l == j:
                continue
            nsq = _norm_squared(m, pl)
            denom = nsq.evaluate(pj)
            bump_poly = bump_poly * (nsq * (Scalar(1) / denom)) ** (k + 1)
        inv = local_inverse_truncated(bump_poly, pj, k)
        target = taylor_polynomial(jet, pj)
        corrected = taylor_polynomial(taylor_jet(target * inv, pj, k), pj)
        result = result + corrected * bump_poly
    return result


def format_poly(p: MultiPoly, var=None) -> str:
    """Render a polynomial in the DSL syntax (parse round-trips exactly)."""
    if not p:
        return "0"
    namer = var or (lambda j: f"x{j}")
    parts = []
    for alpha in sorted(p.terms, key=graded_key):
        c = p.terms[alpha]
        factors = [
            f"{namer(j + 1)}^{e}" if e > 1 else namer(j + 1)
            for j, e in enumerate(alpha)
            if e
        ]
        mono = "*".join(factors)
        parts.append(_term_text(c, mono))
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out


def _term_text(c: Scalar, mono: str) -> str:
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"
