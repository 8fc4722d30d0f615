"""Lattice paths, height-dependent weights, and the bijection between
decorated matchings and labeled 2-colored Schroeder paths.

Schroeder paths use unit rises ("R"), unit falls ("F"), and width-2 long
level steps of two colors ("W" and "D").  The step starting at abscissa
i-1 is s_i; when s_i is a long level step, s_{i+1} and the height h_i are
undefined.  Motzkin and Dyck paths are plain tuples over "R"/"F"/"L".

The bijection sends a decorated matching of [2n] to a path of length 2n:
pure openers become rises, pure closers falls, wiggly pairs color-1 long
levels, dashed pairs color-2 long levels.  Labels record which open arch
each closing vertex attaches to, counted among the arches started but
unfinished so far in increasing order of opener; a dashed pair closing its
own arch gets the out-of-range label h+1.

T-fractions also admit an older interpretation as Dyck paths whose falls
are weighted differently at peaks; this module implements only the
Schroeder-path view, which subsumes it with simpler bookkeeping.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .matchings import IndexedWeights, PerfectMatching, SuperMatching, star
from .poly import Polynomial, Series

RISE, FALL, LL1, LL2 = "R", "F", "W", "D"
_LONG = (LL1, LL2)


class SchroederPath:
    """2-colored Schroeder path, stored as per-abscissa step kinds.

    steps[i-1] is s_i ("R", "F", "W", "D"), or None at the skipped
    abscissa inside a long level step.
    """

    __slots__ = ("steps", "heights")

    def __init__(self, steps):
        steps = tuple(steps)
        if len(steps) % 2 != 0:
            raise ValueError("path length must be even")
        heights: list[Optional[int]] = [0]
        h = 0
        i = 0
        while i < len(steps):
            kind = steps[i]
            if kind == RISE:
                h += 1
                heights.append(h)
                i += 1
            elif kind == FALL:
                h -= 1
                heights.append(h)
                i += 1
            elif kind in _LONG:
                if i + 1 >= len(steps) or steps[i + 1] is not None:
                    raise ValueError("long level step must skip one abscissa")
                heights.append(None)
                heights.append(h)
                i += 2
            else:
                raise ValueError(f"bad step {kind!r} at abscissa {i}")
            if h < 0:
                raise ValueError("path dips below zero")
        if h != 0:
            raise ValueError("path must end at height zero")
        self.steps = steps
        self.heights = tuple(heights)

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def height(self, i: int) -> Optional[int]:
        return self.heights[i]

    def __eq__(self, other):
        return isinstance(other, SchroederPath) and self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return f"SchroederPath({''.join('.' if s is None else s for s in self.steps)})"


class LabeledSchroederPath:
    """A Schroeder path plus integer labels, one per defined step."""

    __slots__ = ("path", "labels")

    def __init__(self, path: SchroederPath, labels):
        labels = tuple(labels)
        if len(labels) != path.length:
            raise ValueError("one label slot per abscissa")
        for s, xi in zip(path.steps, labels):
            if (s is None) != (xi is None):
                raise ValueError("labels must be defined exactly on defined steps")
        self.path = path
        self.labels = labels

    def __eq__(self, other):
        return (
            isinstance(other, LabeledSchroederPath)
            and self.path == other.path
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.path, self.labels))

    def __repr__(self):
        return f"LabeledSchroederPath({format_path(self)!r})"


@dataclass(frozen=True)
class LabelBounds:
    """Height-indexed ceilings for labels, by step kind."""

    rise: Callable[[int], int]
    fall: Callable[[int], int]
    level1: Callable[[int], int]
    level2: Callable[[int], int]


# Bounds realized by the matching bijection: rises are forced, falls and
# color-1 levels choose an open arch, color-2 levels may also close their own.
KZ_BOUNDS = LabelBounds(
    rise=lambda k: 1,
    fall=lambda k: k,
    level1=lambda k: k,
    level2=lambda k: k + 1,
)


def satisfies_bounds(lp: LabeledSchroederPath, bounds: LabelBounds = KZ_BOUNDS) -> bool:
    path = lp.path
    ceiling = {RISE: bounds.rise, FALL: bounds.fall, LL1: bounds.level1, LL2: bounds.level2}
    for i, (s, xi) in enumerate(zip(path.steps, lp.labels)):
        if s is None:
            continue
        h = path.heights[i]
        if not 1 <= xi <= ceiling[s](h):
            return False
    return True


# -- text format -----------------------------------------------------------------


def format_path(lp: LabeledSchroederPath) -> str:
    steps = "".join("." if s is None else s for s in lp.path.steps)
    labels = ",".join("." if xi is None else str(xi) for xi in lp.labels)
    return f"{steps}; labels=[{labels}]"


def parse_path(text: str) -> LabeledSchroederPath:
    m = re.match(r"^(?P<steps>[RFWD.]*); labels=\[(?P<labels>[\d,.]*)\]$", text.strip())
    if not m:
        raise ValueError(f"bad path text: {text!r}")
    steps = tuple(None if ch == "." else ch for ch in m.group("steps"))
    raw = m.group("labels").split(",") if m.group("labels") else []
    labels = tuple(None if s == "." else int(s) for s in raw)
    return LabeledSchroederPath(SchroederPath(steps), labels)


# -- enumeration -----------------------------------------------------------------


def enumerate_motzkin(length: int) -> Iterator[tuple[str, ...]]:
    """Motzkin paths of the given length, steps R < F < L at each abscissa."""

    def rec(prefix, h, remaining):
        if remaining == 0:
            if h == 0:
                yield tuple(prefix)
            return
        if h + 1 <= remaining - 1:
            yield from rec(prefix + ["R"], h + 1, remaining - 1)
        if h >= 1:
            yield from rec(prefix + ["F"], h - 1, remaining - 1)
        if h <= remaining - 1:
            yield from rec(prefix + ["L"], h, remaining - 1)

    yield from rec([], 0, length)


def enumerate_dyck(length: int) -> Iterator[tuple[str, ...]]:
    """Dyck paths of the given (even) length."""
    if length % 2 != 0:
        raise ValueError("Dyck paths have even length")

    def rec(prefix, h, remaining):
        if remaining == 0:
            if h == 0:
                yield tuple(prefix)
            return
        if h + 1 <= remaining - 1:
            yield from rec(prefix + ["R"], h + 1, remaining - 1)
        if h >= 1:
            yield from rec(prefix + ["F"], h - 1, remaining - 1)

    yield from rec([], 0, length)


def enumerate_schroeder2(length: int) -> Iterator[SchroederPath]:
    """2-colored Schroeder paths of the given length.

    Depth-first with step order R < F < W < D at each abscissa.
    """
    if length % 2 != 0:
        raise ValueError("Schroeder paths have even length")

    def rec(prefix, h, remaining):
        if remaining == 0:
            if h == 0:
                yield SchroederPath(tuple(prefix))
            return
        if h + 1 <= remaining - 1:
            yield from rec(prefix + [RISE], h + 1, remaining - 1)
        if h >= 1 and h - 1 <= remaining - 1:
            yield from rec(prefix + [FALL], h - 1, remaining - 1)
        if remaining >= 2 and h <= remaining - 2:
            yield from rec(prefix + [LL1, None], h, remaining - 2)
            yield from rec(prefix + [LL2, None], h, remaining - 2)

    yield from rec([], 0, length)


def enumerate_labeled_schroeder2(
    length: int, bounds: LabelBounds = KZ_BOUNDS
) -> Iterator[LabeledSchroederPath]:
    """All labeled 2-colored paths obeying the bounds; step sequences first,
    label vectors in lexicographic order within each path."""
    ceiling = {RISE: bounds.rise, FALL: bounds.fall, LL1: bounds.level1, LL2: bounds.level2}
    for path in enumerate_schroeder2(length):
        slots = [
            (i, ceiling[s](path.heights[i]))
            for i, s in enumerate(path.steps)
            if s is not None
        ]
        if any(c < 1 for _, c in slots):
            continue

        def rec(idx, acc):
            if idx == len(slots):
                labels: list[Optional[int]] = [None] * path.length
                for (pos, _), xi in zip(slots, acc):
                    labels[pos] = xi
                yield LabeledSchroederPath(path, labels)
                return
            _, cap = slots[idx]
            for xi in range(1, cap + 1):
                yield from rec(idx + 1, acc + [xi])

        yield from rec(0, [])


# -- height-dependent path weights --------------------------------------------------


@dataclass(frozen=True)
class FlajoletWeights:
    """Weights per step kind, indexed by starting height.

    rise a_k, fall b_k, level c_k; level2 covers the second color of long
    level steps for 2-colored Schroeder paths.
    """

    rise: Callable[[int], Polynomial]
    fall: Callable[[int], Polynomial]
    level: Callable[[int], Polynomial]
    level2: Callable[[int], Polynomial] = lambda k: Polynomial.zero()


def flajolet_weight(path, w: FlajoletWeights) -> Polynomial:
    """Product of per-step weights over a Motzkin/Dyck tuple or a
    SchroederPath."""
    total = Polynomial.one()
    if isinstance(path, SchroederPath):
        for i, s in enumerate(path.steps):
            if s is None:
                continue
            h = path.heights[i]
            if s == RISE:
                total = total * w.rise(h)
            elif s == FALL:
                total = total * w.fall(h)
            elif s == LL1:
                total = total * w.level(h)
            else:
                total = total * w.level2(h)
        return total
    h = 0
    for s in path:
        if s == "R":
            total = total * w.rise(h)
            h += 1
        elif s == "F":
            total = total * w.fall(h)
            h -= 1
        else:
            total = total * w.level(h)
    return total


def flajolet_check(order: int, w: FlajoletWeights) -> bool:
    """Desk-scale master-theorem check for the given weights.

    Sums path weights exhaustively and compares against the matching
    continued fractions: J for Motzkin (beta_i = a_{i-1} b_i, gamma_i = c_i),
    S for Dyck (alpha_i = a_{i-1} b_i), and T for 2-colored Schroeder
    (alpha_i = a_{i-1} b_i, delta_i = c_{i-1} + c2_{i-1}).
    """
    from .contfrac import TCoeffs, expand_J, expand_S, expand_T

    motzkin = Series(
        order,
        [
            Polynomial.sum(flajolet_weight(p, w) for p in enumerate_motzkin(n))
            for n in range(order + 1)
        ],
    )
    if motzkin != expand_J(lambda i: w.level(i), lambda i: w.rise(i - 1) * w.fall(i), order):
        return False

    dyck = Series(
        order,
        [
            Polynomial.sum(flajolet_weight(p, w) for p in enumerate_dyck(2 * n))
            for n in range(order + 1)
        ],
    )
    if dyck != expand_S(lambda i: w.rise(i - 1) * w.fall(i), order):
        return False

    schroeder = Series(
        order,
        [
            Polynomial.sum(flajolet_weight(p, w) for p in enumerate_schroeder2(2 * n))
            for n in range(order + 1)
        ],
    )
    seq = TCoeffs(
        alpha=lambda i: w.rise(i - 1) * w.fall(i),
        delta=lambda i: w.level(i - 1) + w.level2(i - 1),
    )
    return schroeder == expand_T(seq, order)


# -- the bijection ----------------------------------------------------------------------


def matching_to_path(sm: SuperMatching) -> LabeledSchroederPath:
    """Decorated matching -> labeled 2-colored Schroeder path.

    Pure openers map to rises (label 1); pure closers to falls; wiggly
    pairs to color-1 and dashed pairs to color-2 long levels.  A closing
    vertex is labeled by the rank of its opener among the arches started
    but unfinished before the step, except that a dashed pair closing its
    own arch is labeled h+1.
    """
    pm = sm.base
    size = 2 * pm.n
    steps: list[Optional[str]] = []
    labels: list[Optional[int]] = []
    active: list[int] = []  # openers of started-but-unfinished arches, increasing
    i = 1
    while i <= size:
        if i in sm.wiggly:
            j = pm.partner[i]
            steps += [LL1, None]
            labels += [active.index(j) + 1, None]
            active.remove(j)
            active.append(i + 1)
            i += 2
        elif i in sm.dashed:
            if pm.partner[i] == i + 1:
                steps += [LL2, None]
                labels += [len(active) + 1, None]
            else:
                j = pm.partner[i + 1]
                steps += [LL2, None]
                labels += [active.index(j) + 1, None]
                active.remove(j)
                active.append(i)
                active.sort()
            i += 2
        elif pm.is_opener(i):
            steps.append(RISE)
            labels.append(1)
            active.append(i)
            i += 1
        else:
            j = pm.partner[i]
            steps.append(FALL)
            labels.append(active.index(j) + 1)
            active.remove(j)
            i += 1
    return LabeledSchroederPath(SchroederPath(steps), labels)


def path_to_matching(lp: LabeledSchroederPath) -> SuperMatching:
    """Inverse of matching_to_path; raises ValueError on label-bound
    violations."""
    path = lp.path
    size = path.length
    partner = [0] * (size + 1)
    wiggly: list[int] = []
    dashed: list[int] = []
    active: list[int] = []

    def close(opener_rank: int, closer: int, step: str):
        if not 1 <= opener_rank <= len(active):
            raise ValueError(f"label {opener_rank} out of range at step {closer} ({step})")
        j = active.pop(opener_rank - 1)
        partner[j] = closer
        partner[closer] = j

    i = 1
    while i <= size:
        s = lp.path.steps[i - 1]
        xi = lp.labels[i - 1]
        if s == RISE:
            if xi != 1:
                raise ValueError(f"rise label must be 1 at step {i}")
            active.append(i)
            i += 1
        elif s == FALL:
            close(xi, i, s)
            i += 1
        elif s == LL1:
            close(xi, i, s)
            active.append(i + 1)
            active.sort()
            wiggly.append(i)
            i += 2
        elif s == LL2:
            if xi == len(active) + 1:
                partner[i] = i + 1
                partner[i + 1] = i
            else:
                close(xi, i + 1, s)
                active.append(i)
                active.sort()
            dashed.append(i)
            i += 2
        else:
            raise ValueError(f"undefined step at abscissa {i}")
    return SuperMatching(PerfectMatching(tuple(partner)), wiggly, dashed)


def verify_heights(sm: SuperMatching) -> bool:
    """Every defined height equals the number of arches started but not yet
    finished."""
    pm = sm.base
    path = matching_to_path(sm).path
    for i in range(2 * pm.n + 1):
        h = path.heights[i]
        if h is None:
            continue
        started = sum(1 for j in range(1, i + 1) if pm.partner[j] > i)
        if h != started:
            return False
    return True


def verify_statistics(sm: SuperMatching) -> bool:
    """Check the statistic translation along the bijection.

    Pure openers: qne(i) = h_{i-1}.  Pure closers and wiggly pairs:
    cr(i) = h_{i-1} - label, ne(i) = label - 1.  Dashed pairs:
    cr(i+1) = h_{i-1} + 1 - label, ne(i+1) = label - 1.
    """
    from .matchings import cr, ne, qne

    pm = sm.base
    lp = matching_to_path(sm)
    heights = lp.path.heights
    for i in range(1, 2 * pm.n + 1):
        s = lp.path.steps[i - 1]
        if s is None:
            continue
        h = heights[i - 1]
        xi = lp.labels[i - 1]
        if s == RISE:
            if qne(i, pm) != h:
                return False
        elif s in (FALL, LL1):
            if cr(i, pm) != h - xi or ne(i, pm) != xi - 1:
                return False
        else:
            if cr(i + 1, pm) != h + 1 - xi or ne(i + 1, pm) != xi - 1:
                return False
    return True


def label_summed_weights(w: IndexedWeights) -> FlajoletWeights:
    """Sum the matching weights over labels at fixed path shape.

    Falls at height k collect the anti-diagonal sum of the pure-closer
    weights, color-1 levels the wiggly sums, color-2 levels the dashed
    sums; rises keep the straddle-indexed opener weight."""
    return FlajoletWeights(
        rise=lambda k: w.a(k),
        fall=lambda k: star(w.b, k - 1),
        level=lambda k: star(w.f, k - 1),
        level2=lambda k: star(w.g, k),
    )
