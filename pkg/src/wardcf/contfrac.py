"""Truncated expansion of S-, J- and T-type continued fractions.

A T-fraction with coefficient sequences alpha (1-indexed) and delta
(1-indexed) is the formal power series

    1 / (1 - delta_1 t - alpha_1 t / (1 - delta_2 t - alpha_2 t / (1 - ...)))

S-fractions are the delta = 0 case; J-fractions carry gamma (0-indexed)
level weights and beta (1-indexed) weights on t^2.  Expansion is bottom-up
with finite depth: every level contributes at least one power of t, so
depth order+1 determines the series exactly modulo t^(order+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .poly import Polynomial, Series, var

CoeffFn = Callable[[int], Polynomial]


def _zero(_: int) -> Polynomial:
    return Polynomial.zero()


@dataclass(frozen=True)
class JCoeffs:
    gamma: CoeffFn  # i >= 0
    beta: CoeffFn  # i >= 1


@dataclass(frozen=True)
class TCoeffs:
    alpha: CoeffFn  # i >= 1
    delta: CoeffFn  # i >= 1


def expand_T(seq: TCoeffs, order: int, depth: int | None = None) -> Series:
    """Expand a T-fraction to a Series of the given truncation order.

    depth overrides the number of levels (default order+1); any depth
    >= order+1 yields the same truncated series.  Level i only influences
    coefficients of t^i and above, so it is computed at the reduced order
    max(order - i, 0).
    """
    levels = order + 1 if depth is None else depth
    f = Series.one(max(order - levels, 0))
    for i in range(levels, 0, -1):
        target = max(order - (i - 1), 0)
        one = Series.one(target)
        body = (
            one
            - Series.t(target).scale(seq.delta(i))
            - f.shift_to(target).scale(seq.alpha(i))
        )
        f = body.reciprocal()
    return f


def expand_S(alpha: CoeffFn, order: int, depth: int | None = None) -> Series:
    return expand_T(TCoeffs(alpha, _zero), order, depth)


def expand_J(gamma: CoeffFn, beta: CoeffFn, order: int, depth: int | None = None) -> Series:
    levels = order + 1 if depth is None else depth
    f = Series.one(max(order - levels, 0))
    for k in range(levels - 1, -1, -1):
        target = max(order - k, 0)
        one = Series.one(target)
        body = (
            one
            - Series.t(target).scale(gamma(k))
            - f.shift_to(max(target - 1, 0)).shift_to(target).scale(beta(k + 1))
        )
        f = body.reciprocal()
    return f


def contract_T_to_J(seq: TCoeffs) -> JCoeffs:
    """Contract a T-fraction with vanishing even deltas to a J-fraction.

    gamma_0 = alpha_1 + delta_1,
    gamma_n = alpha_{2n} + alpha_{2n+1} + delta_{2n+1}  (n >= 1),
    beta_n  = alpha_{2n-1} alpha_{2n}.

    The requirement delta_{2n} = 0 is enforced lazily: evaluating gamma_n
    or beta_n checks the even delta it would bury.
    """

    def _require_even_zero(n: int):
        if n >= 1 and not seq.delta(2 * n).is_zero():
            raise ValueError(f"contraction needs delta_{2 * n} = 0")

    def gamma(n: int) -> Polynomial:
        _require_even_zero(n)
        if n == 0:
            return seq.alpha(1) + seq.delta(1)
        return seq.alpha(2 * n) + seq.alpha(2 * n + 1) + seq.delta(2 * n + 1)

    def beta(n: int) -> Polynomial:
        _require_even_zero(n)
        return seq.alpha(2 * n - 1) * seq.alpha(2 * n)

    return JCoeffs(gamma, beta)


def euler_identity_check(alpha: CoeffFn, order: int) -> bool:
    """Check that the T-fraction with delta_1 = 0, delta_i = -alpha_{i-1}
    expands to the partial-product series sum_n alpha_1 ... alpha_n t^n."""

    def delta(i: int) -> Polynomial:
        return Polynomial.zero() if i == 1 else -alpha(i - 1)

    expanded = expand_T(TCoeffs(alpha, delta), order)
    prod = Polynomial.one()
    coeffs = [prod]
    for n in range(1, order + 1):
        prod = prod * alpha(n)
        coeffs.append(prod)
    return expanded == Series(order, coeffs)


# -- named coefficient families ------------------------------------------------
#
# The registry backs the command-line `expand` verb and reappears across the
# verification suites.

def _ward() -> TCoeffs:
    x = var("x")
    return TCoeffs(lambda i: i * x, lambda i: Polynomial.const(i - 1))


def _ward_reversed() -> TCoeffs:
    x = var("x")
    return TCoeffs(lambda i: Polynomial.const(i), lambda i: (i - 1) * x)


def _generalized_ward() -> TCoeffs:
    x, u, z, w = var("x"), var("u"), var("z"), var("w")
    return TCoeffs(lambda i: x + (i - 1) * u, lambda i: z + (i - 1) * w)


def _semifactorial() -> TCoeffs:
    return TCoeffs(lambda i: Polynomial.const(i), _zero)


def _eulerian2_reversed() -> TCoeffs:
    x = var("x")
    return TCoeffs(lambda i: Polynomial.const(i), lambda i: (i - 1) * (x - 1))


def _master_T() -> TCoeffs:
    # Fully symbolic coefficients of the master T-fraction for decorated
    # matchings: alpha_n = a[n-1] * bstar_{n-1}, delta_n = fstar_{n-2} + gstar_{n-1},
    # where wstar_m = sum_{l=0}^m w[l, m-l].
    def star(name: str, m: int) -> Polynomial:
        total = Polynomial.zero()
        for l in range(m + 1):
            total = total + var(name, l, m - l)
        return total

    def alpha(n: int) -> Polynomial:
        return var("a", n - 1) * star("b", n - 1)

    def delta(n: int) -> Polynomial:
        return star("f", n - 2) + star("g", n - 1)

    return TCoeffs(alpha, delta)


FAMILIES: dict[str, Callable[[], TCoeffs]] = {
    "ward": _ward,
    "ward-reversed": _ward_reversed,
    "generalized-ward": _generalized_ward,
    "semifactorial": _semifactorial,
    "eulerian2-reversed": _eulerian2_reversed,
    "master-T": _master_T,
}


def named_family(name: str) -> TCoeffs:
    try:
        return FAMILIES[name]()
    except KeyError:
        raise ValueError(f"unknown coefficient family {name!r}") from None
