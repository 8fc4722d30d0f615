"""Ward numbers and polynomials, their four-variable generalization, the
differential recurrences they satisfy, and series inversion.

The triangle W(n,k) obeys

    W(n,k) = (n+k-1) W(n-1,k-1) + k W(n-1,k),     W(0,k) = [k=0],

with row-generating polynomials W_n(x) and reversals Wbar_n(x) =
x^n W_n(1/x).  The four-variable family W_n(x,u,z,w) is generated by the
T-fraction with alpha_i = x + (i-1)u and delta_i = z + (i-1)w.

Series inversion: any sequence (a_n) with a_0 = 1 is matched by choosing
x_1, x_2, ... so that the tree-counting polynomials in those variables
reproduce it; concretely the exponential generating function
sum a_n t^(n+1)/(n+1)! is compositionally inverted and the x_i are read
off the inverse.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .contfrac import expand_T, named_family
from .poly import Polynomial, Series, VarId, var

X, U, Z, W = VarId("x"), VarId("u"), VarId("z"), VarId("w")


def ward_triangle(rows: int) -> list[list[int]]:
    """Rows 0..rows of the triangle W(n,k), 0 <= k <= n."""
    tri = [[1]]
    for n in range(1, rows + 1):
        prev = tri[-1]
        row = []
        for k in range(n + 1):
            above_left = prev[k - 1] if 1 <= k <= n else 0
            above = prev[k] if k <= n - 1 else 0
            row.append((n + k - 1) * above_left + k * above)
        tri.append(row)
    return tri


def ward_poly(n: int) -> Polynomial:
    row = ward_triangle(n)[n]
    x = var("x")
    return Polynomial.sum(c * x**k for k, c in enumerate(row) if c)


def ward_reversed(n: int) -> Polynomial:
    return ward_poly(n).reversed_in(X, n)


def generalized_ward_cf(order: int) -> list[Polynomial]:
    """W_0 .. W_order in x,u,z,w from the defining T-fraction."""
    s = expand_T(named_family("generalized-ward"), order)
    return [s.coefficient(n) for n in range(order + 1)]


def check_prop_B1(order: int) -> bool:
    """Nonlinear differential recurrence for the four-variable family:

    W_n = [n=0] + (z+nu) W_{n-1}
          + (u+w)(u dW_{n-1}/du + x dW_{n-1}/dx)
          + (x-u) sum_{j=0}^{n-1} W_j W_{n-1-j}.
    """
    ws = generalized_ward_cf(order)
    x, u, z, w = var("x"), var("u"), var("z"), var("w")
    for n in range(order + 1):
        if n == 0:
            if ws[0] != Polynomial.one():
                return False
            continue
        prev = ws[n - 1]
        rhs = (
            (z + n * u) * prev
            + (u + w) * (u * prev.deriv(U) + x * prev.deriv(X))
            + (x - u) * Polynomial.sum(ws[j] * ws[n - 1 - j] for j in range(n))
        )
        if ws[n] != rhs:
            return False
    return True


def check_cor_B2(order: int) -> bool:
    """Linear recurrences of the u = x specialization, in both forms.

    P_n = W_n(x,x,z,w) satisfies
        P_n = [n=0] + (z+nx) P_{n-1} + x(x+w) dP_{n-1}/dx,
    and its x-coefficients satisfy
        W_{n,k} = (n+k-1) W_{n-1,k-1} + (z+kw) W_{n-1,k}.
    The z=0, w=1 specialization must collapse to the integer triangle.
    """
    x, z, w = var("x"), var("z"), var("w")
    ps = [p.substitute({U: x}) for p in generalized_ward_cf(order)]
    for n in range(order + 1):
        if n == 0:
            if ps[0] != Polynomial.one():
                return False
            continue
        rhs = (z + n * x) * ps[n - 1] + x * (x + w) * ps[n - 1].deriv(X)
        if ps[n] != rhs:
            return False
    # coefficientwise form
    for n in range(1, order + 1):
        for k in range(n + 1):
            wnk = ps[n].coefficient_of(X, k)
            left = ps[n - 1].coefficient_of(X, k - 1) if k >= 1 else Polynomial.zero()
            same = ps[n - 1].coefficient_of(X, k)
            if wnk != (n + k - 1) * left + (z + k * w) * same:
                return False
    # z=0, w=1 collapse
    tri = ward_triangle(order)
    sub = {Z: Polynomial.zero(), W: Polynomial.one()}
    for n in range(order + 1):
        expected = Polynomial.sum(
            c * var("x") ** k for k, c in enumerate(tri[n]) if c
        )
        if ps[n].substitute(sub) != expected:
            return False
    return True


def check_cor_B3(order: int) -> bool:
    """Nonlinear recurrence of the w = -u specialization:

    Q_n = [n=0] + (z+nu) Q_{n-1} + (x-u) sum Q_j Q_{n-1-j}.
    """
    x, u, z = var("x"), var("u"), var("z")
    qs = [p.substitute({W: -u}) for p in generalized_ward_cf(order)]
    for n in range(order + 1):
        if n == 0:
            if qs[0] != Polynomial.one():
                return False
            continue
        rhs = (z + n * u) * qs[n - 1] + (x - u) * Polynomial.sum(
            qs[j] * qs[n - 1 - j] for j in range(n)
        )
        if qs[n] != rhs:
            return False
    return True


def check_cor_B4(order: int) -> bool:
    """Riccati-type identity for the u = 0 specialization, as a truncated
    series identity:  H = 1 + ztH + wxt dH/dx + xt H^2."""
    x, z, w = var("x"), var("z"), var("w")
    hs = [p.substitute({U: Polynomial.zero()}) for p in generalized_ward_cf(order)]
    h = Series(order, hs)
    hx = h.map_coeffs(lambda c: c.deriv(X))
    rhs = (
        Series.one(order)
        + h.shift().scale(z)
        + hx.shift().scale(w * x)
        + (h * h).shift().scale(x)
    )
    return h == rhs


def invert_sequence(a: Sequence[Polynomial | int], order: int) -> list[Polynomial]:
    """Solve for x_1..x_order so the tree polynomials in the x_i equal a_n.

    Builds the exponential generating function sum a_n t^(n+1)/(n+1)!,
    inverts it compositionally, and reads x_m off the coefficient of
    t^(m+1) in the inverse (scaled by -(m+1)!).  Requires a_0 = 1 and
    len(a) > order.
    """
    coerced = [Polynomial._coerce(p) for p in a]
    if not coerced or coerced[0] != Polynomial.one():
        raise ValueError("inversion needs a_0 = 1")
    if len(coerced) <= order:
        raise ValueError(f"need a_0..a_{order}")
    egf = [Polynomial.zero()] + [
        coerced[n] * Fraction(1, factorial(n + 1)) for n in range(order + 1)
    ]
    inv = Series(order + 1, egf).compositional_inverse()
    return [
        inv.coefficient(m + 1) * (-factorial(m + 1)) for m in range(1, order + 1)
    ]


def multivariate_ward_via_inversion(order: int) -> list[Polynomial]:
    """The tree polynomials themselves, from the generic series inverse."""
    xs = [var("x", i) for i in range(1, order + 1)]
    egf = [Polynomial.zero(), Polynomial.one()] + [
        -xs[n - 1] * Fraction(1, factorial(n + 1)) for n in range(1, order + 1)
    ]
    inv = Series(order + 1, egf).compositional_inverse()
    return [
        inv.coefficient(n + 1) * factorial(n + 1) for n in range(order + 1)
    ]


def invert_generalized_ward(order: int) -> list[Polynomial]:
    """invert_sequence applied to the four-variable family."""
    return invert_sequence(generalized_ward_cf(order), order)


def closed_form_u_eq_x(m: int) -> Polynomial:
    """The u = x inversion coefficient x_m in closed form, as a polynomial.

    x_m = (-1)^(m+1) m! (1 + x/w) z^m + (x/w) prod_{j=1..m} (w - jz);
    the 1/w terms cancel, which is verified here by exact division.
    """
    x, z, w = var("x"), var("z"), var("w")
    sign = 1 if (m + 1) % 2 == 0 else -1
    lead = sign * factorial(m) * z**m
    prod = Polynomial.one()
    for j in range(1, m + 1):
        prod = prod * (w - j * z)
    bracket = lead + prod  # divisible by w
    return lead + x * bracket.div_var(W)


def check_closed_form_u_eq_x(order: int) -> bool:
    """Verify the u = x closed form and its explicit inverse-EGF series.

    Three facts are checked to the given order:
      1. inversion of W_n(x,x,z,w) reproduces closed_form_u_eq_x;
      2. the explicit series
             (1 + x/w)/z * log(1+zt) - (x/w^2) ((1+zt)^(w/z) - 1),
         expanded with the exponent handled as a formal symbol s = w/z,
         has exactly those coefficients (so it is polynomial in w, z);
      3. that series satisfies F_t = 1 - xF - ztF_t + x(x+w) F_x.
    """
    x = var("x")
    ps = [p.substitute({U: x}) for p in generalized_ward_cf(order)]
    computed = invert_sequence(ps, order)
    closed = [closed_form_u_eq_x(m) for m in range(1, order + 1)]
    if computed != closed:
        return False
    # z=0, w=1 degeneration: every x_m collapses to x.
    sub01 = {Z: Polynomial.zero(), W: Polynomial.one()}
    if any(c.substitute(sub01) != x for c in closed):
        return False

    f = _explicit_inverse_series(order)
    for n in range(2, order + 1):
        if f.coefficient(n) * (-factorial(n)) != closed[n - 2]:
            return False
    if f.coefficient(0) != Polynomial.zero() or f.coefficient(1) != Polynomial.one():
        return False

    # PDE check, coefficientwise to order-1.
    w = var("w")
    fx = f.map_coeffs(lambda c: c.deriv(X))
    for m in range(order):
        lhs = f.coefficient(m + 1) * (m + 1)
        rhs = (
            (Polynomial.one() if m == 0 else Polynomial.zero())
            - x * f.coefficient(m)
            - var("z") * m * f.coefficient(m)
            + x * (x + w) * fx.coefficient(m)
        )
        if lhs != rhs:
            return False
    return True


def _explicit_inverse_series(order: int) -> Series:
    """Coefficients of (1+x/w)/z log(1+zt) - (x/w^2)((1+zt)^(w/z) - 1).

    The binomial series for (1+zt)^(w/z) is expanded in a formal exponent
    symbol s; each monomial s^a z^b it produces has b >= a, so replacing
    s^a z^b by w^a z^(b-a) is an exact polynomial substitution.  The log
    and 1/w, 1/w^2 prefactors are then cleared by exact division.
    """
    x, z, w = var("x"), var("z"), var("w")
    s = var("s")
    s_var = VarId("s")
    coeffs = [Polynomial.zero()]
    for m in range(1, order + 1):
        # falling factorial s(s-1)...(s-m+1) times z^m / m!
        falling = Polynomial.one()
        for j in range(m):
            falling = falling * (s - j)
        body = falling * z**m * Fraction(1, factorial(m))
        # substitute s -> w/z monomial by monomial
        replaced = Polynomial.zero()
        for mono, c in body.terms.items():
            a = mono.exponent(s_var)
            rest = Polynomial({mono: c})
            for _ in range(a):
                rest = rest.div_var(s_var).div_var(Z)
            if a:
                rest = rest * w**a
            replaced = replaced + rest
        # coefficient of t^m:
        #   (1 + x/w) (-1)^(m+1) z^(m-1)/m  -  (x/w^2) * replaced
        sign = 1 if (m + 1) % 2 == 0 else -1
        log_part = sign * Fraction(1, m) * z ** (m - 1)
        total_w2 = (w**2 + x * w) * log_part - x * replaced
        c_m = total_w2.div_var(W).div_var(W)
        coeffs.append(c_m)
    return Series(order, coeffs)
