#!/usr/bin/env python3
"""Walk a wiggly-decorated matching through every stage of its bijection
with phylogenetic trees.

Stage 1 shifts each closer right by one and adds a horizontal line after
each opener, producing a tree-shaped arch system on [2n+1].  Stage 2 reads
that arch system as a planar binary tree (horizontals = left edges, arches
= right edges, wiggly arches = wiggly right edges).  Stage 3 contracts the
wiggly edges.  Each wiggly line removed merges two binary vertices, so a
matching with l wiggly lines lands on a tree with n - l internal vertices.
"""

from wardcf.matchings import PerfectMatching, SuperMatching, enumerate_augmented, format_matching
from wardcf.trees import (
    arch_system_of,
    augmented_to_tree,
    binary_tree_of,
    serialize_tree,
    tree_to_augmented,
)
from wardcf.ward import ward_triangle

example = SuperMatching(
    PerfectMatching.from_pairs(
        [(1, 5), (2, 4), (3, 7), (6, 10), (8, 9), (11, 12), (13, 14)]
    ),
    wiggly=[5, 7, 10],
)
print("matching:", format_matching(example))

arch = arch_system_of(example)
print("\narch system on [15]:")
print("    arches:     ", arch.arches)
print("    horizontals:", arch.horizontals)
print("    leaf labels:", arch.labels)

bt = binary_tree_of(arch)
print("\nbinary tree:", bt)

tree = augmented_to_tree(example)
print("\ncontracted tree:", serialize_tree(tree))
print("leaves:", tree.n + 1, " internal vertices:", tree.internal_count(),
      " (= n - #wiggly =", example.n - len(example.wiggly), ")")

assert tree_to_augmented(tree) == example
print("\nreverse construction recovers the matching")

# Counting: matchings of [2n] with l wiggly lines match the triangle entry
# W(n, n-l).
tri = ward_triangle(5)
for n in range(6):
    counts = {}
    for sm in enumerate_augmented(n):
        counts[len(sm.wiggly)] = counts.get(len(sm.wiggly), 0) + 1
    assert all(counts[l] == tri[n][n - l] for l in counts)
print("wiggly-line distribution matches the triangle for n <= 5")
