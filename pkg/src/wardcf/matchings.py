"""Perfect matchings with crossing/nesting statistics and their decorated
(wiggly/dashed) extensions.

Vertices are 1-indexed: a matching of [2n] pairs each vertex with exactly
one other.  The smaller element of a pair is its opener, the larger its
closer.  A decorated matching may carry

  * a wiggly line on (i, i+1) when i is a closer and i+1 an opener,
  * a dashed line on (i, i+1) when i is an opener and i+1 a closer,

with no vertex touched by both kinds of line.  Vertex statistics:

  cr(k)  = #{i<j<k<l : i~k, j~l}   arches crossing the arch closed by k
  ne(k)  = #{i<j<k<l : i~l, j~k}   arches nesting over the arch closed by k
  qne(i) = #{j<i<l : j~l}          arches strictly straddling vertex i

Enumeration order is fixed (smallest unmatched vertex first) so streams are
reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .poly import Monomial, Polynomial, Rat, VarId, var


class PerfectMatching:
    """Fixed-point-free involution of [2n], stored as a 1-indexed partner array."""

    __slots__ = ("n", "partner")

    def __init__(self, partner: tuple[int, ...]):
        # partner[0] is unused padding so that partner[i] is the mate of i.
        size = len(partner) - 1
        if size % 2 != 0:
            raise ValueError("matching needs an even number of vertices")
        for i in range(1, size + 1):
            j = partner[i]
            if not 1 <= j <= size or j == i or partner[j] != i:
                raise ValueError("not a fixed-point-free involution")
        self.n = size // 2
        self.partner = tuple(partner)

    @classmethod
    def from_pairs(cls, pairs) -> "PerfectMatching":
        pairs = list(pairs)
        size = 2 * len(pairs)
        partner = [0] * (size + 1)
        for a, b in pairs:
            partner[a] = b
            partner[b] = a
        return cls(tuple(partner))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, self.partner[i])
            for i in range(1, 2 * self.n + 1)
            if i < self.partner[i]
        )

    def is_opener(self, i: int) -> bool:
        return i < self.partner[i]

    def is_closer(self, i: int) -> bool:
        return i > self.partner[i]

    def openers(self) -> list[int]:
        return [i for i in range(1, 2 * self.n + 1) if self.is_opener(i)]

    def closers(self) -> list[int]:
        return [i for i in range(1, 2 * self.n + 1) if self.is_closer(i)]

    def __eq__(self, other):
        return isinstance(other, PerfectMatching) and self.partner == other.partner

    def __hash__(self):
        return hash(self.partner)

    def __repr__(self):
        return f"PerfectMatching({''.join(f'({a},{b})' for a, b in self.pairs())})"


class SuperMatching:
    """A perfect matching plus disjoint wiggly and dashed decorations.

    wiggly and dashed hold the left endpoints of the decorated (i, i+1)
    edges.
    """

    __slots__ = ("base", "wiggly", "dashed")

    def __init__(self, base: PerfectMatching, wiggly=(), dashed=()):
        wiggly = frozenset(wiggly)
        dashed = frozenset(dashed)
        for i in wiggly:
            if not (base.is_closer(i) and i + 1 <= 2 * base.n and base.is_opener(i + 1)):
                raise ValueError(f"wiggly line at {i} needs closer,opener")
        for i in dashed:
            if not (base.is_opener(i) and i + 1 <= 2 * base.n and base.is_closer(i + 1)):
                raise ValueError(f"dashed line at {i} needs opener,closer")
        wiggly_verts = {v for i in wiggly for v in (i, i + 1)}
        dashed_verts = {v for i in dashed for v in (i, i + 1)}
        if wiggly_verts & dashed_verts:
            raise ValueError("wiggly and dashed lines sharing a vertex")
        self.base = base
        self.wiggly = wiggly
        self.dashed = dashed

    @property
    def n(self) -> int:
        return self.base.n

    def is_pure(self, i: int) -> bool:
        return not (
            i in self.wiggly
            or i - 1 in self.wiggly
            or i in self.dashed
            or i - 1 in self.dashed
        )

    def __eq__(self, other):
        return (
            isinstance(other, SuperMatching)
            and self.base == other.base
            and self.wiggly == other.wiggly
            and self.dashed == other.dashed
        )

    def __hash__(self):
        return hash((self.base, self.wiggly, self.dashed))

    def __repr__(self):
        return f"SuperMatching({format_matching(self)!r})"


# -- text format ----------------------------------------------------------------

_PAIRS_RE = re.compile(r"\((\d+),(\d+)\)")


def format_matching(sm: SuperMatching) -> str:
    pairs = "".join(f"({a},{b})" for a, b in sm.base.pairs())
    wig = "{" + ",".join(map(str, sorted(sm.wiggly))) + "}"
    dash = "{" + ",".join(map(str, sorted(sm.dashed))) + "}"
    return f"pairs={pairs}; wiggly={wig}; dashed={dash}"


def parse_matching(text: str) -> SuperMatching:
    m = re.match(
        r"^pairs=(?P<pairs>(\(\d+,\d+\))*); wiggly=\{(?P<w>[\d,]*)\}; dashed=\{(?P<d>[\d,]*)\}$",
        text.strip(),
    )
    if not m:
        raise ValueError(f"bad matching text: {text!r}")
    pairs = [(int(a), int(b)) for a, b in _PAIRS_RE.findall(m.group("pairs"))]
    wig = [int(s) for s in m.group("w").split(",") if s]
    dash = [int(s) for s in m.group("d").split(",") if s]
    return SuperMatching(PerfectMatching.from_pairs(pairs), wig, dash)


# -- enumeration ------------------------------------------------------------------


def enumerate_matchings(n: int) -> Iterator[PerfectMatching]:
    """All (2n-1)!! matchings of [2n]: repeatedly pair the smallest
    unmatched vertex with each larger unmatched vertex, in increasing order."""
    size = 2 * n
    partner = [0] * (size + 1)

    def rec(unmatched: tuple[int, ...]):
        if not unmatched:
            yield PerfectMatching(tuple(partner))
            return
        i = unmatched[0]
        for j in unmatched[1:]:
            partner[i], partner[j] = j, i
            rest = tuple(v for v in unmatched[1:] if v != j)
            yield from rec(rest)
        partner[i] = 0

    yield from rec(tuple(range(1, size + 1)))


def _decoration_sites(pm: PerfectMatching) -> tuple[list[int], list[int]]:
    wiggly_sites = [
        i
        for i in range(1, 2 * pm.n)
        if pm.is_closer(i) and pm.is_opener(i + 1)
    ]
    dashed_sites = [
        i
        for i in range(1, 2 * pm.n)
        if pm.is_opener(i) and pm.is_closer(i + 1)
    ]
    return wiggly_sites, dashed_sites


def enumerate_super(n: int) -> Iterator[SuperMatching]:
    """All decorated matchings: every legal wiggly/dashed subset of every
    base matching, subject to the shared-vertex exclusion."""
    for pm in enumerate_matchings(n):
        wsites, dsites = _decoration_sites(pm)
        for wk in range(len(wsites) + 1):
            for wset in combinations(wsites, wk):
                blocked = {v for i in wset for v in (i, i + 1)}
                free_d = [i for i in dsites if i not in blocked and i + 1 not in blocked]
                for dk in range(len(free_d) + 1):
                    for dset in combinations(free_d, dk):
                        yield SuperMatching(pm, wset, dset)


def enumerate_augmented(n: int) -> Iterator[SuperMatching]:
    """Decorated matchings with wiggly lines only."""
    for pm in enumerate_matchings(n):
        wsites, _ = _decoration_sites(pm)
        for wk in range(len(wsites) + 1):
            for wset in combinations(wsites, wk):
                yield SuperMatching(pm, wset, ())


# -- vertex statistics --------------------------------------------------------------


def cr(k: int, pm: PerfectMatching) -> int:
    """Arches crossing the arch closed by k; zero unless k is a closer."""
    j = pm.partner[k]
    if j > k:
        return 0
    return sum(1 for i in range(j + 1, k) if pm.partner[i] > k)


def ne(k: int, pm: PerfectMatching) -> int:
    """Arches nesting over the arch closed by k; zero unless k is a closer."""
    j = pm.partner[k]
    if j > k:
        return 0
    return sum(1 for i in range(1, j) if pm.partner[i] > k)


def qne(i: int, pm: PerfectMatching) -> int:
    """Arches strictly straddling vertex i."""
    return sum(1 for j in range(1, i) if pm.partner[j] > i)


def is_record(j: int, pm: PerfectMatching) -> bool:
    """Opener with no arch nesting strictly above its own."""
    if not pm.is_opener(j):
        raise ValueError(f"{j} is not an opener")
    k = pm.partner[j]
    return not any(pm.partner[i] > k for i in range(1, j))


def is_antirecord(k: int, pm: PerfectMatching) -> bool:
    """Closer whose arch has nothing nesting above it (equivalently ne = 0)."""
    if not pm.is_closer(k):
        raise ValueError(f"{k} is not a closer")
    j = pm.partner[k]
    return not any(pm.partner[l] < j for l in range(k + 1, 2 * pm.n + 1))


def crossing_total(pm: PerfectMatching) -> int:
    """Total crossings, counted by direct quadruple scan."""
    total = 0
    for (i, k), (j, l) in combinations(pm.pairs(), 2):
        if i < j < k < l or j < i < l < k:
            total += 1
    return total


def nesting_total(pm: PerfectMatching) -> int:
    """Total nestings, counted by direct quadruple scan."""
    total = 0
    for (i, l), (j, k) in combinations(pm.pairs(), 2):
        if i < j < k < l or j < i < l < k:
            total += 1
    return total


def clop_count(pm: PerfectMatching) -> int:
    """Number of positions i with i a closer and i+1 an opener."""
    return sum(
        1
        for i in range(1, 2 * pm.n)
        if pm.is_closer(i) and pm.is_opener(i + 1)
    )


def count_Mprime(n: int, l: int) -> int:
    """Matchings of [2n] with exactly l closer/opener adjacencies."""
    return sum(1 for pm in enumerate_matchings(n) if clop_count(pm) == l)


def count_augmented(n: int, l: int) -> int:
    """Wiggly-only decorated matchings of [2n] with l wiggly lines."""
    return sum(1 for sm in enumerate_augmented(n) if len(sm.wiggly) == l)


# -- weight families and master polynomials --------------------------------------------


@dataclass(frozen=True)
class IndexedWeights:
    """Weight lookups for decorated matchings.

    a is indexed by a single straddle count; b, f, g by (crossing, nesting)
    pairs.  b weighs pure closers, f wiggly pairs, g dashed pairs.
    """

    a: Callable[[int], Polynomial]
    b: Callable[[int, int], Polynomial]
    f: Callable[[int, int], Polynomial]
    g: Callable[[int, int], Polynomial]

    @classmethod
    def symbolic(cls) -> "IndexedWeights":
        """Fresh indeterminates a[l], b[l,l'], f[l,l'], g[l,l']."""
        return cls(
            a=lambda l: var("a", l),
            b=lambda l, lp: var("b", l, lp),
            f=lambda l, lp: var("f", l, lp),
            g=lambda l, lp: var("g", l, lp),
        )


def star(w: Callable[[int, int], Polynomial], m: int) -> Polynomial:
    """Anti-diagonal sum: sum_{l=0}^{m} w(l, m-l); zero for m = -1."""
    if m < 0:
        return Polynomial.zero()
    return Polynomial.sum(w(l, m - l) for l in range(m + 1))


def super_weight(sm: SuperMatching, w: IndexedWeights) -> Polynomial:
    """Product of the per-vertex / per-edge weights of one decorated matching."""
    pm = sm.base
    weight = Polynomial.one()
    for i in range(1, 2 * pm.n + 1):
        if pm.is_opener(i):
            if sm.is_pure(i):
                weight = weight * w.a(qne(i, pm))
        else:
            if sm.is_pure(i):
                weight = weight * w.b(cr(i, pm), ne(i, pm))
    for i in sm.wiggly:
        weight = weight * w.f(cr(i, pm), ne(i, pm))
    for i in sm.dashed:
        weight = weight * w.g(cr(i + 1, pm), ne(i + 1, pm))
    return weight


def master_poly_T(n: int, w: IndexedWeights) -> Polynomial:
    """Sum of super_weight over all decorated matchings of [2n]."""
    return Polynomial.sum(super_weight(sm, w) for sm in enumerate_super(n))


def master_poly_S(
    n: int,
    a: Callable[[int], Polynomial],
    b: Callable[[int, int], Polynomial],
) -> Polynomial:
    """Undecorated specialization: wiggly and dashed weights vanish."""
    zero2 = lambda l, lp: Polynomial.zero()
    weights = IndexedWeights(a=a, b=b, f=zero2, g=zero2)
    return Polynomial.sum(
        super_weight(SuperMatching(pm), weights) for pm in enumerate_matchings(n)
    )


# -- specialized statistics polynomials -------------------------------------------------

_VARS_18 = [
    VarId(s)
    for s in ("x", "y", "u", "v", "x'", "y'", "u'", "v'", "x''", "y''", "u''", "v''",
              "p", "q", "p'", "q'", "p''", "q''")
]


def poly_18var(n: int) -> Polynomial:
    """Count decorated matchings by 18 statistics computed directly.

    Closers are classified three ways (pure / wiggly / dashed), and within
    each class by parity and by antirecord status; crossings and nestings
    are split by the class of the closer in third position.
    """
    (x, y, u, v, xp, yp, up, vp, xpp, ypp, upp, vpp,
     p, q, pp, qp, ppp, qpp) = _VARS_18
    total: dict[Monomial, Rat] = {}
    for sm in enumerate_super(n):
        pm = sm.base
        exps: dict[VarId, int] = {}

        def bump(vid: VarId, by: int = 1):
            if by:
                exps[vid] = exps.get(vid, 0) + by

        for k in pm.closers():
            if k - 1 in sm.dashed:
                vset = (xpp, ypp, upp, vpp)
                pq = (ppp, qpp)
            elif k in sm.wiggly:
                vset = (xp, yp, up, vp)
                pq = (pp, qp)
            else:
                vset = (x, y, u, v)
                pq = (p, q)
            even = k % 2 == 0
            anti = is_antirecord(k, pm)
            if anti:
                bump(vset[0] if even else vset[1])
            else:
                bump(vset[2] if even else vset[3])
            bump(pq[0], cr(k, pm))
            bump(pq[1], ne(k, pm))
        mono = Monomial(exps.items())
        total[mono] = total.get(mono, 0) + 1
    return Polynomial(total)


def poly_12var(n: int) -> Polynomial:
    """poly_18var with the even/odd distinction forgotten."""
    merge = {
        VarId("y"): var("x"),
        VarId("v"): var("u"),
        VarId("y'"): var("x'"),
        VarId("v'"): var("u'"),
        VarId("y''"): var("x''"),
        VarId("v''"): var("u''"),
    }
    return poly_18var(n).substitute(merge)


def pq_bracket(n: int, p: Polynomial, q: Polynomial) -> Polynomial:
    """sum_{j=0}^{n-1} p^j q^(n-1-j), the (p,q)-analogue of the integer n."""
    return Polynomial.sum(p**j * q ** (n - 1 - j) for j in range(n))


def tfraction_18var():
    """Coefficient sequences matching poly_18var.

    Odd and even levels carry the x/u resp. y/v pairs; the wiggly and
    dashed families contribute to the level weights one resp. zero steps
    behind, with delta_1 = x''.
    """
    from .contfrac import TCoeffs

    x, y, u, v = var("x"), var("y"), var("u"), var("v")
    xp, yp, up, vp = var("x'"), var("y'"), var("u'"), var("v'")
    xpp, ypp, upp, vpp = var("x''"), var("y''"), var("u''"), var("v''")
    p, q = var("p"), var("q")
    pp, qp = var("p'"), var("q'")
    ppp, qpp = var("p''"), var("q''")

    def alpha(i: int) -> Polynomial:
        if i % 2 == 1:
            return p ** (i - 1) * x + q * pq_bracket(i - 1, p, q) * u
        return p ** (i - 1) * y + q * pq_bracket(i - 1, p, q) * v

    def delta(i: int) -> Polynomial:
        if i == 1:
            return xpp
        if i % 2 == 1:
            return (
                pp ** (i - 2) * yp
                + qp * pq_bracket(i - 2, pp, qp) * vp
                + ppp ** (i - 1) * xpp
                + qpp * pq_bracket(i - 1, ppp, qpp) * upp
            )
        return (
            pp ** (i - 2) * xp
            + qp * pq_bracket(i - 2, pp, qp) * up
            + ppp ** (i - 1) * ypp
            + qpp * pq_bracket(i - 1, ppp, qpp) * vpp
        )

    return TCoeffs(alpha, delta)


def tfraction_12var():
    """Coefficient sequences matching poly_12var (parity forgotten)."""
    from .contfrac import TCoeffs

    x, u = var("x"), var("u")
    xp, up = var("x'"), var("u'")
    xpp, upp = var("x''"), var("u''")
    p, q = var("p"), var("q")
    pp, qp = var("p'"), var("q'")
    ppp, qpp = var("p''"), var("q''")

    def alpha(i: int) -> Polynomial:
        return p ** (i - 1) * x + q * pq_bracket(i - 1, p, q) * u

    def delta(i: int) -> Polynomial:
        if i == 1:
            return xpp
        return (
            pp ** (i - 2) * xp
            + qp * pq_bracket(i - 2, pp, qp) * up
            + ppp ** (i - 1) * xpp
            + qpp * pq_bracket(i - 1, ppp, qpp) * upp
        )

    return TCoeffs(alpha, delta)


def tfraction_12var_bis1():
    """The u' = x' collapse of tfraction_12var."""
    from .contfrac import TCoeffs

    base = tfraction_12var()
    xp = var("x'")
    pp, qp = var("p'"), var("q'")
    xpp, upp = var("x''"), var("u''")
    ppp, qpp = var("p''"), var("q''")

    def delta(i: int) -> Polynomial:
        return (
            pq_bracket(i - 1, pp, qp) * xp
            + ppp ** (i - 1) * xpp
            + qpp * pq_bracket(i - 1, ppp, qpp) * upp
        )

    return TCoeffs(base.alpha, delta)


def tfraction_12var_bis2():
    """The further u = x and u'' = x'' collapse."""
    from .contfrac import TCoeffs

    x, xp, xpp = var("x"), var("x'"), var("x''")
    p, q = var("p"), var("q")
    pp, qp = var("p'"), var("q'")
    ppp, qpp = var("p''"), var("q''")

    def alpha(i: int) -> Polynomial:
        return pq_bracket(i, p, q) * x

    def delta(i: int) -> Polynomial:
        return pq_bracket(i - 1, pp, qp) * xp + pq_bracket(i, ppp, qpp) * xpp

    return TCoeffs(alpha, delta)


def generalized_ward_oracle(n: int) -> Polynomial:
    """Five-variable decorated matching count.

    Pure closers weigh x (crossing number 0) or u (>= 1); dashed lines
    weigh z when their endpoints share an arch and w'' otherwise; wiggly
    lines weigh w'.
    """
    x, u, z = VarId("x"), VarId("u"), VarId("z")
    wp, wpp = VarId("w'"), VarId("w''")
    total: dict[Monomial, Rat] = {}
    for sm in enumerate_super(n):
        pm = sm.base
        exps = {x: 0, u: 0, z: 0, wp: 0, wpp: 0}
        for k in pm.closers():
            if k - 1 in sm.dashed:
                if pm.partner[k] == k - 1:
                    exps[z] += 1
                else:
                    exps[wpp] += 1
            elif k in sm.wiggly:
                exps[wp] += 1
            else:
                if cr(k, pm) == 0:
                    exps[x] += 1
                else:
                    exps[u] += 1
        mono = Monomial((vid, e) for vid, e in exps.items() if e)
        total[mono] = total.get(mono, 0) + 1
    return Polynomial(total)
