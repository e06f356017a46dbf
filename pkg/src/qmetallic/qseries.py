"""q-deformed integers, rationals, and metallic numbers.

The q-deformation of a nonnegative integer n is the polynomial
[n]_q = 1 + q + ... + q^(n-1); negative integers deform to Laurent
polynomials in 1/q. A metallic number (n + sqrt(n^2+4))/2 deforms to a
power series Phi_n that is a root of an explicit quadratic equation with
polynomial coefficients; `metallic_model` builds that equation and
`series_of_model` expands any such root as an exact power series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import Domain, ZZ, LaurentPair, Poly, Series


def q_integer(n: int, dom: Domain = ZZ):
    """The q-deformation of an integer.

    Returns a Poly for n >= 0 and a LaurentPair for n < 0 (the deformation
    of a negative integer is -q^-1 - q^-2 - ... - q^n, polynomial in 1/q).
    Satisfies [n+1]_q = q*[n]_q + 1 for every integer n.
    """
    one = dom.from_int(1)
    if n >= 0:
        return Poly(dom, (one,) * n, normalized=True)
    m = -n
    neg_one = dom.neg(one)
    return LaurentPair(Poly(dom, (neg_one,) * m, normalized=True), m)


def q_integer_inv(n: int, dom: Domain = ZZ) -> LaurentPair:
    """The deformation of n evaluated at 1/q, i.e. [n] with q -> q^-1.

    For n >= 1 this is q^(1-n) * [n]_q; exponents flip sign, so the result
    is a LaurentPair in general (a plain polynomial when n <= 0).
    """
    if n >= 0:
        return LaurentPair(Poly(dom, (dom.from_int(1),) * n, normalized=True), max(n - 1, 0))
    m = -n
    neg_one = dom.neg(dom.from_int(1))
    # exponents +1 .. +m
    return LaurentPair(Poly(dom, (dom.from_int(0),) + (neg_one,) * m), 0)


def angle_bracket(n: int, dom: Domain = ZZ) -> Poly:
    """The auxiliary polynomial q*[n]_q + (1 + q^n)(1 - q), defined for n >= 2.

    Explicitly 1 + 2q^2 - q^3 for n = 2 and
    1 + q^2 + q^3 + ... + q^(n-1) + 2q^n - q^(n+1) for n >= 3.
    """
    if n < 2:
        raise ValueError(f"angle bracket needs n >= 2, got {n}")
    q = Poly.q(dom)
    one = Poly.one(dom)
    return q * q_integer(n, dom) + (one + Poly.monomial(dom, n)) * (one - q)


@dataclass(frozen=True)
class Model:
    """A quadratic equation A + B*F + C*F^2 = 0 for a power series F.

    The expansion algorithms require A != 0, B(0) = 1, C != 0, C(0) = 0;
    `validate` checks those. Instances are immutable and hashable, which
    the cycle detection in the fraction expansion relies on.
    """

    a: Poly
    b: Poly
    c: Poly

    @property
    def dom(self) -> Domain:
        return self.b.dom

    def validate(self) -> "Model":
        dom = self.dom
        if self.a.dom != dom or self.c.dom != dom:
            raise ValueError("model polynomials live in different domains")
        if self.a.is_zero():
            raise ValueError("model needs A != 0")
        if self.b.constant() != dom.from_int(1):
            raise ValueError(f"model needs B(0) = 1, got {self.b.constant()}")
        if self.c.is_zero():
            raise ValueError("model needs C != 0")
        if not dom.is_zero(self.c.constant()):
            raise ValueError("model needs C(0) = 0")
        return self

    def map_domain(self, new_dom: Domain) -> "Model":
        return Model(
            self.a.map_domain(new_dom),
            self.b.map_domain(new_dom),
            self.c.map_domain(new_dom),
        )

    def residual(self, f: Series) -> Series:
        """A + B*f + C*f^2, truncated to f's precision. Zero iff f is a root."""
        return (
            Series.from_poly(self.a, f.prec)
            + f.mul_poly(self.b)
            + (f * f).mul_poly(self.c)
        )


def metallic_model(n: int, dom: Domain = ZZ) -> Model:
    """The quadratic equation satisfied by the q-metallic power series.

    Phi_n is the unique power-series root of
        -1 + ((1 + q^n)(1 - q) - q*[n]_q) * F + q * F^2 = 0.
    """
    if n < 1:
        raise ValueError(f"metallic index must be >= 1, got {n}")
    one = Poly.one(dom)
    q = Poly.q(dom)
    b = (one + Poly.monomial(dom, n)) * (one - q) - q * q_integer(n, dom)
    return Model(a=-one, b=b, c=q)


def series_of_model(model: Model, prec: int) -> Series:
    """Expand the unique power-series root of a model to a given precision.

    Coefficient recursion: with G = F^2, the q^m coefficient of
    A + B*F + C*G determines f_m because B(0) is a unit and C(0) = 0.
    Exact in the model's domain; O(prec^2) coefficient operations.
    """
    model.validate()
    dom = model.dom
    if prec <= 0:
        return Series.zero(dom, max(prec, 0))
    zero = dom.from_int(0)
    a = list(model.a.coeffs) + [zero] * max(0, prec - len(model.a.coeffs))
    b = list(model.b.coeffs) + [zero] * max(0, prec - len(model.b.coeffs))
    c = list(model.c.coeffs) + [zero] * max(0, prec - len(model.c.coeffs))
    b0_inv = dom.inv(b[0])

    f = [zero] * prec
    g = [zero] * prec  # running coefficients of F^2
    f[0] = dom.neg(dom.mul(a[0], b0_inv))
    g[0] = dom.mul(f[0], f[0])
    for m in range(1, prec):
        acc = a[m]
        for i in range(1, m + 1):
            bi = b[i]
            if not dom.is_zero(bi):
                acc = dom.add(acc, dom.mul(bi, f[m - i]))
            ci = c[i]
            if not dom.is_zero(ci):
                acc = dom.add(acc, dom.mul(ci, g[m - i]))
        fm = dom.neg(dom.mul(acc, b0_inv))
        f[m] = fm
        # update G at index m now that f_m is known
        gm = zero
        for i in range(0, m + 1):
            gm = dom.add(gm, dom.mul(f[i], f[m - i]))
        g[m] = gm
    return Series(dom, tuple(f), prec, normalized=True)


def metallic_series(n: int, prec: int, dom: Domain = ZZ) -> Series:
    """Taylor expansion of the q-metallic number Phi_n."""
    return series_of_model(metallic_model(n, dom), prec)


def continued_fraction_digits(x: Fraction) -> list:
    """Regular continued fraction digits [a0; a1, a2, ...] of x >= 0."""
    if x < 0:
        raise ValueError("negative values have no deformation here")
    digits = []
    num, den = x.numerator, x.denominator
    while True:
        a, r = divmod(num, den)
        digits.append(a)
        if r == 0:
            return digits
        num, den = den, r


def q_rational_pair(x, dom: Domain = ZZ):
    """The q-deformation of a nonnegative rational as a fraction (P, Q) of
    polynomials with Q(0) = 1.

    Built bottom-up from the continued fraction of x, alternating between
    deformations in q (even levels) and in 1/q (odd levels).
    """
    x = Fraction(x)
    digits = continued_fraction_digits(x)
    m = len(digits) - 1
    last = digits[m]
    if m % 2 == 0:
        p_cur, q_cur = q_integer(last, dom), Poly.one(dom)
    else:
        p_cur, q_cur = q_integer(last, dom), Poly.monomial(dom, last - 1)
    for i in range(m - 1, -1, -1):
        ai = digits[i]
        if i % 2 == 0:
            p_next = q_integer(ai, dom) * p_cur + Poly.monomial(dom, ai) * q_cur
            q_next = p_cur
        else:
            p_next = Poly.q(dom) * q_integer(ai, dom) * p_cur + q_cur
            q_next = Poly.monomial(dom, ai) * p_cur
        p_cur, q_cur = p_next, q_next
    if not dom.is_unit(q_cur.constant()):
        raise ArithmeticError(f"denominator constant term {q_cur.constant()} not a unit")
    if q_cur.constant() != dom.from_int(1):
        # normalize so Q(0) = 1 (only a sign over ZZ)
        u = dom.inv(q_cur.constant())
        p_cur, q_cur = p_cur.scale(u), q_cur.scale(u)
    return p_cur, q_cur


def q_rational(x, prec: int, dom: Domain = ZZ) -> Series:
    """Taylor expansion of the q-deformation of a nonnegative rational."""
    p, q = q_rational_pair(x, dom)
    return Series.from_poly(p, prec).div(Series.from_poly(q, prec))


def catalan_series(prec: int, dom: Domain = ZZ) -> Series:
    """Generating series of the Catalan numbers 1, 1, 2, 5, 14, ..."""
    coeffs = [dom.from_int(comb(2 * i, i) // (i + 1)) for i in range(max(prec, 0))]
    return Series(dom, coeffs, prec)


def motzkin_series(prec: int, dom: Domain = ZZ) -> Series:
    """Generating series of the Motzkin numbers 1, 1, 2, 4, 9, 21, ..."""
    coeffs = []
    for i in range(max(prec, 0)):
        m = sum(comb(i, 2 * k) * (comb(2 * k, k) // (k + 1)) for k in range(i // 2 + 1))
        coeffs.append(dom.from_int(m))
    return Series(dom, coeffs, prec)
