"""The concrete rings behind the three coefficient domains.

The same series machinery instantiates several rings of interest by
choosing the coefficient domain and the mode:

  PerfectPoly(p, 'p-power')  + formal      -- characteristic-p model:
      F_p-polynomials in x^(1/p^k) as coefficients of powers of t.
      Note the swap: x, usually the series variable, here lives *inside*
      the coefficients, and the former uniformizer t is the series
      variable.  That swap is what makes the coefficient valuation
      nondiscrete (x-exponents can be arbitrarily small), so Newton
      polygons of essentially arbitrary convex shapes are realizable.
  MixedPoly(p, N, 'p-power') + arithmetic  -- mixed-characteristic model:
      integer-mod-p^N coefficients on x^(1/p^k), series variable p itself.
  MixedPoly(p, N, 'any')     + arithmetic  -- Puiseux-style model:
      x-exponents with arbitrary denominators.
  PadicDigits(p, N)          + arithmetic  -- plain p-adic integers as
      the coefficient ring (no x at all).

Run:  python demos/05_ring_instances.py
"""

from fractions import Fraction as Q

from mnseries import (
    MixedPoly,
    Mode,
    PadicDigits,
    PerfectPoly,
    format_series,
    gauss_valuation,
    in_m,
    mul,
    newton_polygon,
    parse_series,
)

# --- characteristic p: nondiscrete x-valuations, formal t ------------------

char_p = PerfectPoly(3, "p-power")
f = parse_series("x^{1/3}*t + x^{1/9}*t^{2} + x^{1/27}*t^{3}", char_p, Mode.FORMAL)
print("char-p element :", format_series(f))
print("polygon nodes  :", [(str(a), str(b)) for a, b in newton_polygon(f).nodes])
print("   (coefficient valuations 1/3, 1/9, 1/27 -- the p-power lattice is dense)")

# --- mixed characteristic: digits carry in the series variable -------------

mixed = MixedPoly(2, 16, "p-power")
g = parse_series("(x^{1/2} + 1)*p + x^{1/4}*p^{2}", mixed, Mode.ARITHMETIC)
print("\nmixed element  :", format_series(g))
sq, _ = mul(g, g)
print("its square     :", format_series(sq))
print("   (every doubled term carried up one power of p)")

# --- Puiseux-style exponents: any denominator at all -----------------------

puiseux = MixedPoly(2, 16, "any")
h = parse_series("x^{1/3}*p + x^{1/5}*p^{2}", puiseux, Mode.ARITHMETIC)
print("\npuiseux element:", format_series(h))
print("gauss at s=1   :", gauss_valuation(h, 1)[0])

# the strict lattice rejects such exponents
try:
    parse_series("x^{1/3}*p", mixed, Mode.ARITHMETIC)
except Exception as exc:
    print("p-power lattice rejects x^{1/3}:", type(exc).__name__)

# --- plain p-adic integers --------------------------------------------------

zp = PadicDigits(5, 12)
k = parse_series("7 + 6*p^{1/2}", zp, Mode.ARITHMETIC)
print("\np-adic element :", format_series(k), "  (7 = 2 + 5, 6 = 1 + 5, per coset)")

# --- the positive-valuation ideal -------------------------------------------

inside = parse_series("x^{1/2}*p + x*p^{2}", mixed, Mode.ARITHMETIC)
outside = parse_series("1 + x*p", mixed, Mode.ARITHMETIC)
print("\nin ideal:", in_m(inside), " |  unit digit present:", not in_m(outside))
print("   (an element with any valuation-0 digit escapes the ideal,")
print("    so the series variable itself is never inside)")
