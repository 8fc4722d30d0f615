#!/usr/bin/env python3
"""Series inversion against the tree polynomials, and exact Hankel
total-positivity scans.

Any sequence with a_0 = 1 can be written as the tree-counting polynomials
evaluated at suitable arguments x_1, x_2, ...; the x_i are recovered by
compositionally inverting the exponential generating function
sum a_n t^(n+1)/(n+1)!.  For the four-variable polynomial family the first
few x_i are computed here, together with the closed form available when
u = x.  Finally, Hankel sections of the polynomial sequences are scanned:
every minor must have nonnegative coefficients.
"""

from wardcf.hankel import (
    all_minors_nonneg,
    e2_reversed_sequence,
    generalized_ward_sequence,
    hankel_section,
    ward_sequence,
)
from wardcf.poly import Polynomial, var
from wardcf.ward import (
    closed_form_u_eq_x,
    invert_generalized_ward,
    invert_sequence,
    multivariate_ward_via_inversion,
)

# Inverting a generic sequence: the coefficients are signed tree counts.
a = [Polynomial.one()] + [var("a", i) for i in range(1, 5)]
print("inversion of a generic sequence:")
for i, value in enumerate(invert_sequence(a, 4), start=1):
    print(f"    x{i} = {value}")

# Inverting the tree polynomials themselves is the identity.
trees = multivariate_ward_via_inversion(4)
assert invert_sequence(trees, 4) == [var("x", i) for i in range(1, 5)]
print("\ninverting the tree polynomials recovers x1..x4 exactly")

# The four-variable family: no closed form is known in general, but the
# first values are small.
print("\ninversion of the four-variable family:")
for i, value in enumerate(invert_generalized_ward(3), start=1):
    print(f"    x{i} = {value}")

# When u = x there IS a closed form, polynomial after the 1/w terms cancel.
print("\nclosed form at u = x:")
for m in range(1, 5):
    print(f"    x{m} = {closed_form_u_eq_x(m)}")

# Hankel total positivity: every minor of every section checked so far is
# coefficientwise nonnegative.
for name, seq in [
    ("plain polynomials", ward_sequence),
    ("four-variable polynomials", generalized_ward_sequence),
    ("reversed second-order Eulerian", e2_reversed_sequence),
]:
    ok, counterexample = all_minors_nonneg(hankel_section(seq, 5), 5)
    print(f"\nall minors of the 5x5 {name} section nonnegative: {ok}")
    assert ok

# A sequence that fails, for contrast.
bad = hankel_section(lambda n: Polynomial.const([1, 2, 1][n]), 2)
ok, (rows, cols, minor) = all_minors_nonneg(bad, 2)
print(f"\ncounterexample scan: rows {rows} x cols {cols} has minor {minor}")
