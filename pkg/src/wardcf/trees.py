"""Phylogenetic trees, their bijection with wiggly-decorated matchings, and
set partitions with all blocks of size >= 2.

A phylogenetic tree of type (n, k) has n+1 leaves labeled 1..n+1 and k
unlabeled internal vertices, each with at least two children; (0, 0) is the
single labeled vertex.  Trees are canonicalized by sorting children by
minimum descendant label, so structural equality is tree equality.

The bijection runs through two inspectable intermediate stages:

  matching  ->  arch system on [2n+1]  ->  planar binary tree with wiggly
  right edges  ->  phylogenetic tree (wiggly edges contracted),

and back, splitting high-degree vertices into wiggly right chains and
linearizing by (minimum descendant label, depth along left-child chains).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Union

from .matchings import PerfectMatching, SuperMatching
from .poly import Polynomial, var

# A tree node is an int leaf label or a tuple of child nodes.
Node = Union[int, tuple]


def _min_leaf(node: Node) -> int:
    while not isinstance(node, int):
        node = node[0]
    return node


def _canon(children) -> tuple:
    return tuple(sorted(children, key=_min_leaf))


class PhyloTree:
    """Canonical rooted tree with labeled leaves and >=2 children per
    internal vertex."""

    __slots__ = ("root",)

    def __init__(self, root: Node):
        self.root = self._normalize(root)
        labels = sorted(self.leaves())
        if labels != list(range(1, len(labels) + 1)):
            raise ValueError("leaf labels must be 1..n+1")

    @classmethod
    def _normalize(cls, node: Node) -> Node:
        if isinstance(node, int):
            return node
        children = tuple(cls._normalize(c) for c in node)
        if len(children) < 2:
            raise ValueError("internal vertices need at least two children")
        return _canon(children)

    def leaves(self) -> list[int]:
        out = []

        def walk(node):
            if isinstance(node, int):
                out.append(node)
            else:
                for c in node:
                    walk(c)

        walk(self.root)
        return out

    @property
    def n(self) -> int:
        return len(self.leaves()) - 1

    def internal_count(self) -> int:
        def walk(node):
            if isinstance(node, int):
                return 0
            return 1 + sum(walk(c) for c in node)

        return walk(self.root)

    def child_sizes(self) -> list[int]:
        """Number of children of each internal vertex, in walk order."""
        out = []

        def walk(node):
            if isinstance(node, int):
                return
            out.append(len(node))
            for c in node:
                walk(c)

        walk(self.root)
        return out

    def __eq__(self, other):
        return isinstance(other, PhyloTree) and self.root == other.root

    def __hash__(self):
        return hash(self.root)

    def __repr__(self):
        return f"PhyloTree({serialize_tree(self)})"


def serialize_tree(tree: PhyloTree) -> str:
    def walk(node):
        if isinstance(node, int):
            return str(node)
        return "(" + ",".join(walk(c) for c in node) + ")"

    return walk(tree.root)


def parse_tree(text: str) -> PhyloTree:
    pos = 0

    def parse_node():
        nonlocal pos
        if pos < len(text) and text[pos] == "(":
            pos += 1
            children = [parse_node()]
            while pos < len(text) and text[pos] == ",":
                pos += 1
                children.append(parse_node())
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"unbalanced parse at {pos} in {text!r}")
            pos += 1
            return tuple(children)
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise ValueError(f"expected leaf at {pos} in {text!r}")
        return int(text[start:pos])

    node = parse_node()
    if pos != len(text):
        raise ValueError(f"trailing text in {text!r}")
    return PhyloTree(node)


# -- enumeration --------------------------------------------------------------------


@lru_cache(maxsize=None)
def _phylo_cache(n: int, k: int) -> tuple[Node, ...]:
    if n == 0 and k == 0:
        return (1,)
    if not 1 <= k <= n:
        return ()
    new_leaf = n + 1
    out: list[Node] = []
    # Attach leaf n+1 as an extra child of each internal vertex.
    for t in _phylo_cache(n - 1, k):
        out.extend(_attach_everywhere(t, new_leaf))
    # Subdivide each edge with a new binary vertex, or grow a new root.
    for t in _phylo_cache(n - 1, k - 1):
        out.extend(_subdivide_everywhere(t, new_leaf))
        out.append(_canon((t, new_leaf)))
    return tuple(out)


def _attach_everywhere(node: Node, leaf: int) -> Iterator[Node]:
    if isinstance(node, int):
        return
    yield _canon(node + (leaf,))
    for i, c in enumerate(node):
        for c2 in _attach_everywhere(c, leaf):
            yield _canon(node[:i] + (c2,) + node[i + 1 :])


def _subdivide_everywhere(node: Node, leaf: int) -> Iterator[Node]:
    if isinstance(node, int):
        return
    for i, c in enumerate(node):
        yield _canon(node[:i] + (_canon((c, leaf)),) + node[i + 1 :])
        for c2 in _subdivide_everywhere(c, leaf):
            yield _canon(node[:i] + (c2,) + node[i + 1 :])


def enumerate_phylo(n: int, k: int) -> Iterator[PhyloTree]:
    """All phylogenetic trees of type (n, k), deterministically ordered."""
    for node in _phylo_cache(n, k):
        yield PhyloTree(node)


def multivariate_ward(n: int) -> Polynomial:
    """Generating polynomial of trees on n+1 leaves: an internal vertex
    with i+1 children contributes x[i]."""
    total = Polynomial.zero()
    for k in range(0, n + 1) if n else (0,):
        for tree in enumerate_phylo(n, k):
            term = Polynomial.one()
            for size in tree.child_sizes():
                term = term * var("x", size - 1)
            total = total + term
    return total


# -- intermediate structures of the bijection --------------------------------------------


@dataclass(frozen=True)
class ArchSystem:
    """Arches and horizontal lines on [2n+1] forming a tree rooted at 1.

    arches are (opener, closer, wiggly) with opener < closer; horizontals
    join (i, i+1); labels number the non-opener vertices left to right.
    """

    size: int
    arches: tuple[tuple[int, int, bool], ...]
    horizontals: tuple[tuple[int, int], ...]
    labels: tuple[tuple[int, int], ...]  # (vertex, label), increasing vertex


@dataclass(frozen=True)
class BinNode:
    """Internal vertex of a planar binary tree; the right edge may be
    wiggly.  Leaves are plain ints."""

    left: "BinTree"
    right: "BinTree"
    right_wiggly: bool = False


BinTree = Union[int, BinNode]


def arch_system_of(sm: SuperMatching) -> ArchSystem:
    """First stage: shift each closer right by one, inherit wiggly flags,
    and add a horizontal line after each opener."""
    if sm.dashed:
        raise ValueError("arch systems are defined for wiggly-only decorations")
    pm = sm.base
    arches = tuple(
        (i, pm.partner[i] + 1, pm.partner[i] in sm.wiggly)
        for i in range(1, 2 * pm.n + 1)
        if pm.is_opener(i)
    )
    horizontals = tuple((i, i + 1) for i in range(1, 2 * pm.n + 1) if pm.is_opener(i))
    openers = {i for i in range(1, 2 * pm.n + 1) if pm.is_opener(i)}
    non_openers = [v for v in range(1, 2 * pm.n + 2) if v not in openers]
    labels = tuple((v, idx + 1) for idx, v in enumerate(non_openers))
    return ArchSystem(2 * pm.n + 1, arches, horizontals, labels)


def binary_tree_of(arch: ArchSystem) -> BinTree:
    """Second stage: horizontals become left edges, arches right edges."""
    label_of = dict(arch.labels)
    right = {i: (j, wig) for i, j, wig in arch.arches}

    def build(v: int) -> BinTree:
        if v in label_of:
            return label_of[v]
        j, wig = right[v]
        return BinNode(left=build(v + 1), right=build(j), right_wiggly=wig)

    return build(1)


def contract_wiggly(bt: BinTree) -> PhyloTree:
    """Third stage: contracting every wiggly right edge merges chains of
    binary vertices into one vertex with many children."""

    def children(node: BinNode) -> list[Node]:
        out = [convert(node.left)]
        if node.right_wiggly:
            out.extend(children(node.right))  # type: ignore[arg-type]
        else:
            out.append(convert(node.right))
        return out

    def convert(node: BinTree) -> Node:
        if isinstance(node, int):
            return node
        return _canon(children(node))

    return PhyloTree(convert(bt))


def augmented_to_tree(sm: SuperMatching) -> PhyloTree:
    """Wiggly-decorated matching of [2n] -> tree with n+1 leaves and
    n - #wiggly internal vertices."""
    if sm.base.n == 0:
        return PhyloTree(1)
    return contract_wiggly(binary_tree_of(arch_system_of(sm)))


def tree_to_binary(tree: PhyloTree) -> BinTree:
    """Split each vertex with more than two children into a right chain of
    binary vertices joined by wiggly edges."""

    def convert(node: Node) -> BinTree:
        if isinstance(node, int):
            return node
        kids = [convert(c) for c in node]  # already sorted by min label
        out = BinNode(left=kids[-2], right=kids[-1], right_wiggly=False)
        for c in reversed(kids[:-2]):
            out = BinNode(left=c, right=out, right_wiggly=True)
        return out

    return convert(tree.root)


def binary_to_arch_system(bt: BinTree) -> ArchSystem:
    """Linearize a planar binary tree back into an arch system.

    Vertices are ordered by (minimum descendant label, depth along the
    left-child chain); each internal vertex then sits immediately left of
    its left child, so horizontals are adjacent pairs."""
    entries: list[tuple[int, int, BinTree]] = []  # (label, chain_depth, node)

    def key(node: BinTree):
        return ("leaf", node) if isinstance(node, int) else ("node", id(node))

    def walk(node: BinTree, depth: int) -> int:
        if isinstance(node, int):
            entries.append((node, depth, node))
            return node
        label = walk(node.left, depth + 1)
        walk(node.right, 0)
        entries.append((label, depth, node))
        return label

    walk(bt, 0)
    entries.sort(key=lambda e: (e[0], e[1]))
    position = {key(node): i + 1 for i, (_, _, node) in enumerate(entries)}

    arches = []
    horizontals = []
    labels = []

    def emit(node: BinTree):
        if isinstance(node, int):
            return
        pos = position[key(node)]
        horizontals.append((pos, position[key(node.left)]))
        arches.append((pos, position[key(node.right)], node.right_wiggly))
        emit(node.left)
        emit(node.right)

    emit(bt)
    for label, _, node in entries:
        if isinstance(node, int):
            labels.append((position[key(node)], node))
    return ArchSystem(
        len(entries),
        tuple(sorted(arches)),
        tuple(sorted(horizontals)),
        tuple(sorted(labels)),
    )


def arch_system_to_matching(arch: ArchSystem) -> SuperMatching:
    """Undo the right shift: arch (i, j) -> pair (i, j-1), wiggly arches
    leaving a wiggly line at j-1."""
    pairs = [(i, j - 1) for i, j, _ in arch.arches]
    wiggly = [j - 1 for _, j, wig in arch.arches if wig]
    return SuperMatching(PerfectMatching.from_pairs(pairs), wiggly, ())


def tree_to_augmented(tree: PhyloTree) -> SuperMatching:
    """Inverse of augmented_to_tree."""
    if tree.n == 0:
        return SuperMatching(PerfectMatching.from_pairs([]))
    return arch_system_to_matching(binary_to_arch_system(tree_to_binary(tree)))


# -- partitions with all blocks of size >= 2 ------------------------------------------------


def enumerate_partitions_min2(elements: tuple[int, ...], k: int) -> Iterator[tuple]:
    """Partitions of the elements into exactly k blocks, each of size >= 2.

    The block containing the smallest element is chosen first, so the
    stream is deterministic.
    """
    m = len(elements)
    if m == 0:
        if k == 0:
            yield ()
        return
    if k <= 0 or m < 2 * k:
        return
    first, rest = elements[0], elements[1:]
    max_extra = m - 2 * (k - 1) - 1
    for size in range(1, max_extra + 1):
        for combo in combinations(rest, size):
            chosen = set(combo)
            block = (first,) + combo
            remaining = tuple(v for v in rest if v not in chosen)
            for more in enumerate_partitions_min2(remaining, k - 1):
                yield (block,) + more


def count_assoc_stirling(n: int, k: int) -> int:
    """Partitions of an n-set into k blocks of size >= 2, by direct
    enumeration."""
    return sum(1 for _ in enumerate_partitions_min2(tuple(range(1, n + 1)), k))
