#!/usr/bin/env python3
"""Walk through the number triangles and their continued fractions.

The Ward triangle W(n,k) counts rooted trees with n+1 labeled leaves and k
internal vertices (each with at least two children).  Its row-generating
polynomials come out of a Thron-type continued fraction with linear
coefficients, and a twist of the same fraction produces the second-order
Eulerian numbers.
"""

from wardcf.contfrac import expand_T, named_family
from wardcf.eulerian import E2_reversed, eulerian2_triangle, ward_euler_identity
from wardcf.poly import VarId, var
from wardcf.ward import ward_poly, ward_reversed, ward_triangle

# The triangle itself, from the two-term recurrence.
print("Ward triangle, rows 0..6:")
for row in ward_triangle(6):
    print("   ", row)

# The same polynomials fall out of the continued fraction
#   1/(1 - x t/(1 - t - 2x t/(1 - 2t - 3x t/(1 - ...))))
# with alpha_i = i*x and delta_i = i-1.
series = expand_T(named_family("ward"), 6)
print("\nfraction coefficients vs triangle rows:")
for n in range(7):
    cf = series.coefficient(n)
    assert cf == ward_poly(n)
    print(f"    [t^{n}] {cf}")

# Reversing the polynomials (x^n W_n(1/x)) swaps the roles of the two
# coefficient families: alpha_i = i, delta_i = (i-1) x.
reversed_series = expand_T(named_family("ward-reversed"), 6)
for n in range(7):
    assert reversed_series.coefficient(n) == ward_reversed(n)

# Row sums of the reversed polynomials at x = 0 and x = -1:
print("\nreversed-polynomial evaluations:")
for n in range(7):
    rev = ward_reversed(n)
    at0 = rev.substitute({VarId("x"): 0})
    atm1 = rev.substitute({VarId("x"): -1})
    print(f"    n={n}: Wbar({n},0) = {at0}  (odd semifactorial),  Wbar({n},-1) = {atm1}  (factorial)")

# Second-order Eulerian numbers: same machine, coefficients alpha_i = i,
# delta_i = (i-1)(x-1), and the two triangles are a shift apart:
# Wbar_n(x) = E2bar_n(1+x).
print("\nsecond-order Eulerian triangle, rows 0..6:")
for row in eulerian2_triangle(6):
    print("   ", row)
for n in range(9):
    assert ward_euler_identity(n)
print("\nWbar_n(x) = E2bar_n(1+x) holds for n <= 8, e.g. n=2:",
      ward_reversed(2), "=", E2_reversed(2).substitute({VarId("x"): var("x") + 1}))
