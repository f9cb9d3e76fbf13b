"""Truncated generalized power series and their Gauss valuations.

A series here is a finite sum  a_1 r^(e_1) + ... + a_n r^(e_n)  with exact
rational exponents e_i, plus an optional precision frontier O(r^prec).
The variable r is a formal `t` over a characteristic-p coefficient ring,
or the prime `p` itself, in which case arithmetic carries across
integer-shifted exponents like ordinary base-p addition.

Run:  python demos/01_series_and_valuations.py
"""

from fractions import Fraction as Q

from mnseries import (
    Mode,
    PadicDigits,
    PerfectPoly,
    Series,
    add,
    argnorm,
    bar_witness,
    box_witness,
    format_series,
    gauss_valuation,
    localize,
    mul,
    parse_series,
)

# --- formal mode: F_3-polynomials in fractional powers of x as coefficients

F3 = PerfectPoly(3)
f = parse_series("x*t^{1/2} + x^{3}", F3, Mode.FORMAL)
print("f          =", format_series(f))

# The Gauss valuation at parameter s is min_i { v(a_i) + s * e_i }, where
# v is the x-adic valuation of the coefficient.  Everything is an exact
# rational; no floating point is involved.
for s in (Q(1, 2), Q(1), Q(2)):
    value, exact = gauss_valuation(f, s)
    print(f"v_{s}(f)     = {value}   (exact={exact}, attained at index {argnorm(f, s)})")

# Addition can cancel; the coefficient ring has characteristic 3:
g = parse_series("x*t + 2*x*t", F3, Mode.FORMAL)
print("x*t + 2*x*t =", format_series(g), " (cancels to zero)")

# Multiplication is exact convolution.  (x + t)(x + 2t) loses its cross
# terms because 3*x*t = 0 mod 3:
a = parse_series("x + t", F3, Mode.FORMAL)
b = parse_series("x + 2*t", F3, Mode.FORMAL)
prod, trace = mul(a, b)
print("(x+t)(x+2t) =", format_series(prod))
print("carry trace entries:", sorted(trace.entries))

# --- arithmetic mode: the variable IS the prime, so digits carry

Z2 = PadicDigits(2)
one = parse_series("1", Z2, Mode.ARITHMETIC)
print("\n1 + 1       =", format_series(add(one, one)), " (carried to p)")

h = parse_series("1 + p^{1/2}", Z2, Mode.ARITHMETIC)
sq, _ = mul(h, h)
print("(1+p^{1/2})^2 =", format_series(sq), " (2*p^{1/2} carries to p^{3/2})")

# Carrying only moves along integer shifts: the support classes mod 1
# ("cosets") never mix.  3*p^{1/2} expands like the integer 3 = 1 + 2,
# but anchored at exponent 1/2:
k = parse_series("3*p^{1/2} + 1", Z2, Mode.ARITHMETIC)
print("3*p^{1/2}+1 =", format_series(k))

# --- truncation: a frontier O(r^q) absorbs everything at or beyond q

t3 = parse_series("x + t^{3} + O(t^{2})", F3, Mode.FORMAL)
print("\nx + t^3 + O(t^2) =", format_series(t3), " (the t^3 term is absorbed)")
value, exact = gauss_valuation(t3, Q(1, 4))
print(f"v_(1/4) = {value}, exact = {exact}  (terms behind the frontier could undercut)")

# --- locating the valuation: box and bar witnesses, localization

w = parse_series("t + x*t^{3/2}", F3, Mode.FORMAL)
eps_a, delta_a = box_witness(w, 1)
print(f"\nbox witness of {format_series(w)} at s=1:  eps={eps_a} delta={delta_a}")
print("   -> no support in the open window just above the argnorm")
delta_b = bar_witness(w, 1, Q(1, 4))
print(f"bar witness with eps=1/4: delta={delta_b}")
print("   -> no near-minimal term far left of the argnorm")

(a_loc, b_loc), predicted = localize(a, b, 2)
print(f"localize((x+t), (x+2t)) at s=2: prediction v(f)+v(g) = {predicted}")
print(f"   localized factors: {format_series(a_loc)} | {format_series(b_loc)}")
prod_val, _ = gauss_valuation(prod, 2)
print(f"   direct product valuation: {prod_val}  (they agree: multiplicativity)")
