"""Newton polygons and their exact Legendre transforms.

The polygon of a series is the nonincreasing lower convex hull of the
points (exponent, coefficient valuation).  Its infimum Legendre transform
L(F)(s) = inf_x { F(x) + s*x } is attained at a hull node, and it equals
the Gauss valuation at s -- the commuting diagram this package exists to
check.

Run:  python demos/02_newton_polygons.py
"""

from fractions import Fraction as Q

from mnseries import (
    Mode,
    PerfectPoly,
    format_series,
    gauss_valuation,
    legendre_eval,
    newton_polygon,
    parse_series,
    tropical_add,
    tropical_min,
    verify_npf,
)
from mnseries.export import points_csv, points_svg

F3 = PerfectPoly(3)

f = parse_series("x^{2} + x*t + t^{2}", F3, Mode.FORMAL)
poly = newton_polygon(f)
print("series :", format_series(f))
print("points : (0,2) (1,1) (2,0)   -- the middle point lies on the hull edge")
print("nodes  :", [(str(x), str(y)) for x, y in poly.nodes])

# Increasing valuations flatten out: the hull must be nonincreasing.
g = parse_series("x + x^{2}*t", F3, Mode.FORMAL)
print("\nseries :", format_series(g))
print("nodes  :", [(str(x), str(y)) for x, y in newton_polygon(g).nodes],
      "  (constant 1 from x=0)")

# Legendre transform = Gauss valuation, exactly, at every parameter.
print("\ns      L(N(f))(s)   v_s(f)")
for s in (Q(1, 4), Q(1, 2), Q(1), Q(2), Q(4)):
    left = legendre_eval(poly, s)
    right, _ = gauss_valuation(f, s)
    print(f"{str(s):6} {str(left):12} {str(right)}")

# The valuation map is "tropical": min plays addition, + plays product.
L_f = lambda s: gauss_valuation(f, s)[0]
L_g = lambda s: gauss_valuation(g, s)[0]
print("\ntropical check at s=1:")
print("  min(v(f), v(g)) =", tropical_min(L_f, L_g)(Q(1)))
print("  v(f) + v(g)     =", tropical_add(L_f, L_g)(Q(1)))

# One call checks the whole diagram: commutation, superadditivity,
# multiplicativity, with counterexamples as data if anything fails.
h = parse_series("x + 2*t", F3, Mode.FORMAL)
report = verify_npf(f, h, [Q(1, 2), Q(1), Q(2)])
print("\ndiagram report: commutation =", report.commutation,
      "| superadditive =", report.superadditive,
      "| multiplicative =", report.multiplicative)

# Exact rationals export to CSV (with numerator/denominator columns) and
# to a static SVG polyline.
print("\nCSV of the polygon nodes:")
print(points_csv(poly.nodes))
svg = points_svg(poly.nodes, "exponent", "valuation")
print("SVG starts with:", svg.splitlines()[0], "...", len(svg), "bytes total")
