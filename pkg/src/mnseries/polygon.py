"""Newton polygons as nonincreasing piecewise-linear convex functions.

The polygon of a series is the nonincreasing lower convex hull of the
points (exponent, coefficient valuation).  It is +oo to the left of its
first node and constant beyond its last one, so its infimum Legendre
transform ``L(F)(s) = inf_x (F(x) + s*x)`` is attained at a node and is
exact rational arithmetic throughout.  The commuting-diagram checker
:func:`verify_npf` confirms that the Legendre transform of the polygon
reproduces the Gauss valuation and that the induced map is superadditive
and multiplicative on sample grids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

from .errors import ZeroSeriesError
from .series import Series, add, gauss_valuation, mul
from .values import INF, Value, as_gauss_param, format_value, is_finite

__all__ = [
    "PLConvexFn",
    "lower_hull",
    "newton_polygon",
    "legendre_eval",
    "tropical_min",
    "tropical_add",
    "sup_distance",
    "NPFReport",
    "verify_npf",
]


@dataclass(frozen=True, slots=True)
class PLConvexFn:
    """Nonincreasing convex piecewise-linear function on [x_first, oo).

    ``nodes`` are the hull vertices with strictly increasing x.  The
    function is +oo on [0, x_first) and extends with constant value beyond
    the last node; consecutive slopes are nondecreasing and nonpositive.
    """

    nodes: Tuple[Tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if not self.nodes:
            raise ValueError("a polygon needs at least one node")
        xs = [x for x, _ in self.nodes]
        ys = [y for _, y in self.nodes]
        if any(x < 0 for x in xs):
            raise ValueError("node abscissae must be nonnegative")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("node abscissae must be strictly increasing")
        if any(b > a for a, b in zip(ys, ys[1:])):
            raise ValueError("node ordinates must be nonincreasing")
        slopes = [
            (y2 - y1) / (x2 - x1)
            for (x1, y1), (x2, y2) in zip(self.nodes, self.nodes[1:])
        ]
        if any(s2 < s1 for s1, s2 in zip(slopes, slopes[1:])):
            raise ValueError("slopes must be nondecreasing (convexity)")

    @property
    def x_first(self) -> Fraction:
        return self.nodes[0][0]

    @property
    def x_last(self) -> Fraction:
        return self.nodes[-1][0]

    @property
    def y_last(self) -> Fraction:
        return self.nodes[-1][1]

    def value_at(self, x) -> Value:
        """Evaluate; +oo left of the first node, constant beyond the last."""
        x = Fraction(x)
        if x < self.x_first:
            return INF
        if x >= self.x_last:
            return self.y_last
        for (x1, y1), (x2, y2) in zip(self.nodes, self.nodes[1:]):
            if x1 <= x <= x2:
                return y1 + (y2 - y1) * (x - x1) / (x2 - x1)
        raise AssertionError("unreachable")  # pragma: no cover

    def legendre(self, s) -> Fraction:
        return legendre_eval(self, s)

    def translate(self, dx, dy) -> "PLConvexFn":
        dx, dy = Fraction(dx), Fraction(dy)
        return PLConvexFn(tuple((x + dx, y + dy) for x, y in self.nodes))


def lower_hull(points: Sequence[Tuple[Fraction, Fraction]]) -> PLConvexFn:
    """Nonincreasing lower convex hull of finite points with rational coords.

    Takes the running-minimum envelope left to right, then a monotone-chain
    lower hull; collinear interior points are dropped.
    """
    if not points:
        raise ValueError("need at least one point")
    pts = sorted(points)
    enveloped: List[Tuple[Fraction, Fraction]] = []
    running = None
    for x, y in pts:
        running = y if running is None else min(running, y)
        if enveloped and enveloped[-1][0] == x:
            enveloped[-1] = (x, running)
        else:
            enveloped.append((x, running))
    hull: List[Tuple[Fraction, Fraction]] = []
    for pt in enveloped:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it sits on or above the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    # a trailing constant stretch collapses onto its first node
    while len(hull) >= 2 and hull[-1][1] == hull[-2][1]:
        hull.pop()
    return PLConvexFn(tuple(hull))


def newton_polygon(f: Series) -> PLConvexFn:
    """Polygon of a series: hull of (exponent, coefficient valuation).

    Terms whose coefficient valuation is infinite impose no constraint and
    are skipped; the series must have at least one finite-valuation term.
    """
    if f.is_zero:
        raise ZeroSeriesError("the zero series has no Newton polygon")
    pts = []
    for i, a in f.terms:
        v = f.domain.coeff_valuation(a)
        if is_finite(v):
            pts.append((i, v))
    if not pts:
        raise ZeroSeriesError("no term with finite coefficient valuation")
    return lower_hull(pts)


def legendre_eval(F: PLConvexFn, s) -> Fraction:
    """Infimum Legendre transform ``inf_x (F(x) + s*x)`` at the point s.

    The infimum of a convex piecewise-linear function plus a nonnegative
    linear term is attained at a hull node, so a node minimum is exact.
    """
    s = as_gauss_param(s)
    return min(y + s * x for x, y in F.nodes)


def tropical_min(F: Callable[[Fraction], Value], G: Callable[[Fraction], Value]):
    """Pointwise minimum (tropical sum) of two value-level functions of s."""
    return lambda s: min(F(s), G(s))


def tropical_add(F: Callable[[Fraction], Value], G: Callable[[Fraction], Value]):
    """Pointwise sum (tropical product) of two value-level functions of s."""
    return lambda s: F(s) + G(s)


def sup_distance(F: PLConvexFn, G: PLConvexFn) -> Fraction:
    """Sup-distance of two polygons sharing the same starting abscissa."""
    if F.x_first != G.x_first:
        raise ValueError("polygons start at different abscissae")
    breakpoints = sorted({x for x, _ in F.nodes} | {x for x, _ in G.nodes})
    best = Fraction(0)
    for x in breakpoints:
        d = abs(F.value_at(x) - G.value_at(x))
        if d > best:
            best = d
    return best


@dataclass(frozen=True, slots=True)
class NPFReport:
    """Outcome of the commuting-diagram checks for one pair of series.

    Any failed check carries concrete witnesses (label, s, lhs, rhs) so a
    failure is reproducible from the report alone.
    """

    commutation: bool
    superadditive: bool
    multiplicative: bool
    witnesses: Tuple[Tuple[str, Fraction, str, str], ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.commutation and self.superadditive and self.multiplicative


def _ln(h: Series) -> Callable[[Fraction], Value]:
    def fn(s):
        v, exact = gauss_valuation(h, s)
        if not exact:
            raise ValueError("inexact Gauss valuation on the sample grid")
        return v

    return fn


def _legendre_of_polygon(h: Series) -> Callable[[Fraction], Value]:
    if h.is_zero:
        return lambda s: INF
    F = newton_polygon(h)
    return lambda s: legendre_eval(F, s)


def verify_npf(f: Series, g: Series, s_grid: Sequence) -> NPFReport:
    """Check diagram commutation, superadditivity and multiplicativity.

    For h in {f, g, f+g, fg} the Legendre transform of the polygon must
    reproduce the Gauss valuation at every grid point; the valuation map
    must satisfy ``min(v(f), v(g)) <= v(f+g)`` and ``v(f) + v(g) = v(fg)``.
    Failures are recorded as data, not raised.
    """
    grid = [as_gauss_param(s) for s in s_grid]
    h_sum = add(f, g)
    h_prod, _ = mul(f, g)
    labelled = [("f", f), ("g", g), ("f+g", h_sum), ("f*g", h_prod)]
    witnesses: List[Tuple[str, Fraction, str, str]] = []

    commutation = True
    for label, h in labelled:
        leg = _legendre_of_polygon(h)
        val = _ln(h)
        for s in grid:
            lhs, rhs = leg(s), val(s)
            if lhs != rhs:
                commutation = False
                witnesses.append(
                    (f"commutation[{label}]", s, format_value(lhs), format_value(rhs))
                )

    superadditive = True
    lhs_fn = tropical_min(_ln(f), _ln(g))
    for s in grid:
        lo, hi = lhs_fn(s), _ln(h_sum)(s)
        if not lo <= hi:
            superadditive = False
            witnesses.append(("superadditivity", s, format_value(lo), format_value(hi)))

    multiplicative = True
    prod_fn = tropical_add(_ln(f), _ln(g))
    for s in grid:
        lhs, rhs = prod_fn(s), _ln(h_prod)(s)
        if lhs != rhs:
            multiplicative = False
            witnesses.append(("multiplicativity", s, format_value(lhs), format_value(rhs)))

    return NPFReport(commutation, superadditive, multiplicative, tuple(witnesses))
