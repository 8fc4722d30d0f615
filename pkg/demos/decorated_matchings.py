#!/usr/bin/env python3
"""Decorated perfect matchings as brute-force oracles for continued fractions.

A matching of [2n] may carry wiggly lines on closer-opener adjacencies and
dashed lines on opener-closer adjacencies (never touching the same vertex).
Weighting every vertex by crossing/nesting statistics and summing over all
decorated matchings reproduces, exactly, the coefficients of a T-fraction
whose level weights are anti-diagonal sums of the vertex weights.
"""

from wardcf.contfrac import expand_T, named_family
from wardcf.matchings import (
    IndexedWeights,
    SuperMatching,
    cr,
    enumerate_matchings,
    enumerate_super,
    format_matching,
    generalized_ward_oracle,
    master_poly_T,
    ne,
    qne,
)

# Enumerate the decorated matchings of [4] and show their statistics.
print("decorated matchings of [4]:")
for sm in enumerate_super(2):
    stats = ", ".join(
        f"cr({k})={cr(k, sm.base)} ne({k})={ne(k, sm.base)}"
        for k in sm.base.closers()
    )
    print(f"    {format_matching(sm):55s} {stats}")

# The fully symbolic check: sum of weights over decorated matchings equals
# the fraction coefficient, with independent weights a[l], b[l,l'], f[l,l'],
# g[l,l'] for pure openers, pure closers, wiggly pairs and dashed pairs.
w = IndexedWeights.symbolic()
series = expand_T(named_family("master-T"), 3)
for n in range(4):
    assert master_poly_T(n, w) == series.coefficient(n)
print("\nsymbolic oracle = fraction coefficient for n <= 3")
print("n=1 polynomial:", master_poly_T(1, w))

# Specializing to five variables: x / u for pure closers with zero /
# positive crossing number, z for a dashed line closing its own arch,
# w'' for other dashed lines, w' for wiggly lines.
print("\nfive-variable polynomials:")
for n in range(4):
    print(f"    n={n}:", generalized_ward_oracle(n))

# Sanity: straddle counts of openers in a fixed matching.
pm = next(iter(enumerate_matchings(3)))
print("\nstraddle counts qne(i) for", format_matching(SuperMatching(pm)))
for i in pm.openers():
    print(f"    qne({i}) = {qne(i, pm)}")
