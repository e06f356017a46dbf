"""Exact coefficient arithmetic.

Domains (integers, rationals, prime fields), dense univariate polynomials,
truncated power series, Laurent pairs, and fraction-free determinants.
Everything here is exact; no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

# Degree of the zero polynomial. Sentinel only: it is compared against,
# never fed back into arithmetic.
NEG_INF = float("-inf")


class ExactDivisionError(ArithmeticError):
    """A division that had to be exact left a remainder."""


class PrecisionError(ValueError):
    """A series was asked for data beyond its stated precision."""


# ---------------------------------------------------------------------------
# Domains


class Domain:
    """A coefficient ring.

    Instances are stateless and shared (ZZ, QQ, prime_field(p)). Elements
    are plain Python values: int for ZZ and prime fields, Fraction for QQ.
    """

    name: str = "?"
    is_field: bool = False
    characteristic: int = 0

    def __repr__(self):
        return self.name

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    # int and Fraction share operator semantics; prime fields override.
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a == 0

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def exact_div(self, a, b):
        raise NotImplementedError

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        return a**e


class IntegerDomain(Domain):
    name = "ZZ"

    def from_int(self, n):
        return int(n)

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("bool is not an integer coefficient")
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return x.numerator
            raise ExactDivisionError(f"{x} is not an integer")
        raise TypeError(f"cannot coerce {type(x).__name__} into ZZ")

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a in (1, -1):
            return a
        raise ExactDivisionError(f"{a} is not a unit in ZZ")

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in ZZ")
        q, r = divmod(a, b)
        if r:
            raise ExactDivisionError(f"{a} is not divisible by {b}")
        return q


class RationalDomain(Domain):
    name = "QQ"
    is_field = True

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("bool is not a rational coefficient")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into QQ")

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        return Fraction(1) / a

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b


class PrimeFieldDomain(Domain):
    """Integers modulo a prime, stored as ints in range(p)."""

    is_field = True

    def __init__(self, p: int):
        if p < 2:
            raise ValueError("modulus must be a prime >= 2")
        d = 2
        while d * d <= p:
            if p % d == 0:
                raise ValueError(f"{p} is not prime")
            d += 1
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __eq__(self, other):
        return isinstance(other, PrimeFieldDomain) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def from_int(self, n):
        return n % self.p

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("bool is not a field coefficient")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {type(x).__name__} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 is not invertible in {self.name}")
        return pow(a, -1, self.p)

    def exact_div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)


ZZ = IntegerDomain()
QQ = RationalDomain()


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeFieldDomain:
    return PrimeFieldDomain(p)


# ---------------------------------------------------------------------------
# Dense polynomials


class Poly:
    """Dense univariate polynomial over a Domain.

    Immutable. coeffs[i] is the coefficient of q^i; trailing zeros are
    stripped, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("dom", "coeffs")

    def __init__(self, dom: Domain, coeffs, normalized: bool = False):
        if not normalized:
            coeffs = [dom.coerce(c) for c in coeffs]
            while coeffs and dom.is_zero(coeffs[-1]):
                coeffs.pop()
            coeffs = tuple(coeffs)
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- construction helpers

    @staticmethod
    def zero(dom: Domain) -> "Poly":
        return Poly(dom, (), normalized=True)

    @staticmethod
    def one(dom: Domain) -> "Poly":
        return Poly(dom, (dom.from_int(1),), normalized=True)

    @staticmethod
    def const(dom: Domain, c) -> "Poly":
        return Poly(dom, (c,))

    @staticmethod
    def q(dom: Domain) -> "Poly":
        return Poly.monomial(dom, 1)

    @staticmethod
    def monomial(dom: Domain, e: int, c=1) -> "Poly":
        if e < 0:
            raise ValueError("monomial exponent must be >= 0")
        c = dom.coerce(c)
        if dom.is_zero(c):
            return Poly.zero(dom)
        coeffs = (dom.from_int(0),) * e + (c,)
        return Poly(dom, coeffs, normalized=True)

    # -- structure

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self):
        """Degree, or the NEG_INF sentinel for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient. Undefined for zero."""
        for i, c in enumerate(self.coeffs):
            if not self.dom.is_zero(c):
                return i
        raise ValueError("the zero polynomial has no valuation")

    def coefficient(self, i: int):
        if i < 0:
            raise IndexError("negative exponent")
        if i < len(self.coeffs):
            return self.coeffs[i]
        return self.dom.from_int(0)

    def constant(self):
        return self.coefficient(0)

    def leading(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.dom == other.dom
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.dom.name, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic

    def __add__(self, other):
        a, b, dom = self.coeffs, other.coeffs, self._same_dom(other)
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = dom.add(out[i], c)
        while out and dom.is_zero(out[-1]):
            out.pop()
        return Poly(dom, tuple(out), normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        dom = self.dom
        return Poly(dom, tuple(dom.neg(c) for c in self.coeffs), normalized=True)

    def __mul__(self, other):
        dom = self._same_dom(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(dom)
        zero = dom.from_int(0)
        out = [zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if dom.is_zero(ca):
                continue
            for j, cb in enumerate(b):
                out[i + j] = dom.add(out[i + j], dom.mul(ca, cb))
        while out and dom.is_zero(out[-1]):
            out.pop()
        return Poly(dom, tuple(out), normalized=True)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.dom)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c) -> "Poly":
        dom = self.dom
        c = dom.coerce(c)
        return Poly(dom, tuple(dom.mul(x, c) for x in self.coeffs))

    def shift(self, k: int) -> "Poly":
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise ValueError("use exact_div_monomial for negative shifts")
        if not self.coeffs:
            return self
        zero = self.dom.from_int(0)
        return Poly(self.dom, (zero,) * k + self.coeffs, normalized=True)

    def exact_div_monomial(self, k: int) -> "Poly":
        """Divide by q^k; the low k coefficients must vanish."""
        if k == 0:
            return self
        if not self.coeffs:
            return self
        low = self.coeffs[:k]
        if any(not self.dom.is_zero(c) for c in low):
            raise ExactDivisionError(f"polynomial not divisible by q^{k}")
        return Poly(self.dom, self.coeffs[k:], normalized=True)

    def divrem(self, other: "Poly"):
        """Euclidean division. Over ZZ each elimination step must divide
        exactly, otherwise ExactDivisionError is raised."""
        dom = self._same_dom(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = len(other.coeffs) - 1, other.coeffs[-1]
        if len(rem) - 1 < db:
            return Poly.zero(dom), self
        quot = [dom.from_int(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if dom.is_zero(c):
                continue
            f = dom.exact_div(c, lb)
            quot[i - db] = f
            for j, cb in enumerate(other.coeffs):
                rem[i - db + j] = dom.sub(rem[i - db + j], dom.mul(f, cb))
        return Poly(dom, tuple(quot)), Poly(dom, tuple(rem))

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divrem(other)
        if not r.is_zero():
            raise ExactDivisionError("polynomial division left a remainder")
        return q

    def eval_at(self, x):
        """Horner evaluation at a domain element."""
        dom = self.dom
        x = dom.coerce(x)
        acc = dom.from_int(0)
        for c in reversed(self.coeffs):
            acc = dom.add(dom.mul(acc, x), c)
        return acc

    def map_domain(self, new_dom: Domain) -> "Poly":
        return Poly(new_dom, tuple(new_dom.coerce(c) for c in self.coeffs))

    def _same_dom(self, other) -> Domain:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if self.dom != other.dom:
            raise TypeError(f"domain mismatch: {self.dom} vs {other.dom}")
        return self.dom

    # -- rendering

    def __str__(self):
        return format_terms(self.dom, enumerate(self.coeffs))

    def __repr__(self):
        return f"Poly({self.dom}, {list(self.coeffs)!r})"


def format_terms(dom: Domain, indexed_coeffs) -> str:
    """Render coefficient data in ascending powers of q: '1 - 2q - q^3'."""
    parts = []
    for i, c in indexed_coeffs:
        if dom.is_zero(c):
            continue
        neg = _is_negative(c)
        mag = -c if neg else c
        if i == 0:
            body = _coeff_str(mag)
        else:
            var = "q" if i == 1 else f"q^{i}"
            body = var if mag == 1 else f"{_coeff_str(mag)}{var}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts) if parts else "0"


def _is_negative(c) -> bool:
    return isinstance(c, (int, Fraction)) and c < 0


def _coeff_str(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"({c})"
    return str(c)


def poly_divrem(a: Poly, b: Poly):
    return a.divrem(b)


# ---------------------------------------------------------------------------
# Truncated power series


class Series:
    """Truncated power series: the coefficients f_0 .. f_{prec-1} are known.

    len(coeffs) == prec always. Arithmetic propagates the minimum precision
    of its inputs; asking for a coefficient at or past prec raises.
    """

    __slots__ = ("dom", "coeffs", "prec")

    def __init__(self, dom: Domain, coeffs, prec: int = None, normalized=False):
        if not normalized:
            coeffs = [dom.coerce(c) for c in coeffs]
            if prec is None:
                prec = len(coeffs)
            if prec < 0:
                raise PrecisionError("series precision must be >= 0")
            zero = dom.from_int(0)
            if len(coeffs) < prec:
                coeffs = coeffs + [zero] * (prec - len(coeffs))
            else:
                coeffs = coeffs[:prec]
            coeffs = tuple(coeffs)
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "prec", len(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @staticmethod
    def from_poly(p: Poly, prec: int) -> "Series":
        return Series(p.dom, list(p.coeffs), prec)

    @staticmethod
    def zero(dom: Domain, prec: int) -> "Series":
        return Series(dom, [], prec)

    @staticmethod
    def one(dom: Domain, prec: int) -> "Series":
        return Series(dom, [dom.from_int(1)], prec)

    def coefficient(self, i: int):
        if i < 0:
            raise IndexError("negative exponent")
        if i >= self.prec:
            raise PrecisionError(
                f"coefficient {i} requested from a series known to O(q^{self.prec})"
            )
        return self.coeffs[i]

    def valuation(self):
        """Index of the first nonzero known coefficient, or None if the
        series is zero to its precision."""
        for i, c in enumerate(self.coeffs):
            if not self.dom.is_zero(c):
                return i
        return None

    def is_zero_to_precision(self) -> bool:
        return self.valuation() is None

    def truncate(self, prec: int) -> "Series":
        if prec > self.prec:
            raise PrecisionError(f"cannot extend precision {self.prec} to {prec}")
        return Series(self.dom, self.coeffs[:prec], prec, normalized=True)

    def shift_down(self, ell: int) -> "Series":
        """Drop the first ell coefficients: (F - sum_{i<ell} f_i q^i)/q^ell."""
        if ell < 0:
            raise ValueError("shift must be >= 0")
        if ell > self.prec:
            raise PrecisionError(f"cannot drop {ell} terms of a {self.prec}-term series")
        return Series(self.dom, self.coeffs[ell:], self.prec - ell, normalized=True)

    def shift_up(self, k: int) -> "Series":
        """Multiply by q^k: prepends k zero coefficients."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        zero = self.dom.from_int(0)
        return Series(self.dom, (zero,) * k + self.coeffs, self.prec + k, normalized=True)

    def __eq__(self, other):
        return (
            isinstance(other, Series)
            and self.dom == other.dom
            and self.prec == other.prec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.dom.name, self.prec, self.coeffs))

    def agrees_with(self, other: "Series", prec: int = None) -> bool:
        """Coefficientwise equality up to min precision (or an explicit one)."""
        if self.dom != other.dom:
            return False
        n = min(self.prec, other.prec)
        if prec is not None:
            if prec > n:
                raise PrecisionError("comparison precision exceeds operands")
            n = prec
        return self.coeffs[:n] == other.coeffs[:n]

    def _same_dom(self, other) -> Domain:
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if self.dom != other.dom:
            raise TypeError(f"domain mismatch: {self.dom} vs {other.dom}")
        return self.dom

    def __add__(self, other):
        dom = self._same_dom(other)
        n = min(self.prec, other.prec)
        return Series(
            dom,
            tuple(dom.add(a, b) for a, b in zip(self.coeffs[:n], other.coeffs[:n])),
            n,
            normalized=True,
        )

    def __sub__(self, other):
        dom = self._same_dom(other)
        n = min(self.prec, other.prec)
        return Series(
            dom,
            tuple(dom.sub(a, b) for a, b in zip(self.coeffs[:n], other.coeffs[:n])),
            n,
            normalized=True,
        )

    def __neg__(self):
        dom = self.dom
        return Series(dom, tuple(dom.neg(c) for c in self.coeffs), self.prec, normalized=True)

    def __mul__(self, other):
        dom = self._same_dom(other)
        n = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        zero = dom.from_int(0)
        out = [zero] * n
        for i in range(n):
            ca = a[i]
            if dom.is_zero(ca):
                continue
            for j in range(n - i):
                cb = b[j]
                if not dom.is_zero(cb):
                    out[i + j] = dom.add(out[i + j], dom.mul(ca, cb))
        return Series(dom, tuple(out), n, normalized=True)

    def mul_poly(self, p: Poly) -> "Series":
        if p.dom != self.dom:
            raise TypeError(f"domain mismatch: {self.dom} vs {p.dom}")
        return self * Series.from_poly(p, self.prec)

    def scale(self, c) -> "Series":
        dom = self.dom
        c = dom.coerce(c)
        return Series(dom, tuple(dom.mul(x, c) for x in self.coeffs), self.prec, normalized=True)

    def invert(self) -> "Series":
        """Multiplicative inverse; the constant term must be a unit."""
        dom = self.dom
        if self.prec == 0:
            raise PrecisionError("cannot invert a zero-precision series")
        f0 = self.coeffs[0]
        if not dom.is_unit(f0):
            raise ExactDivisionError(f"constant term {f0} is not a unit in {dom}")
        inv0 = dom.inv(f0)
        n = self.prec
        out = [inv0] + [dom.from_int(0)] * (n - 1)
        f = self.coeffs
        for m in range(1, n):
            acc = dom.from_int(0)
            for i in range(1, m + 1):
                fi = f[i]
                if not dom.is_zero(fi):
                    acc = dom.add(acc, dom.mul(fi, out[m - i]))
            out[m] = dom.neg(dom.mul(acc, inv0))
        return Series(dom, tuple(out), n, normalized=True)

    def div(self, other: "Series") -> "Series":
        """Divide, cancelling the divisor's valuation v; the dividend must
        vanish to order v. The result loses v terms of precision."""
        dom = self._same_dom(other)
        v = other.valuation()
        if v is None:
            raise ZeroDivisionError("division by a series that is zero to precision")
        if v:
            for i in range(min(v, self.prec)):
                if not dom.is_zero(self.coeffs[i]):
                    raise ExactDivisionError(
                        f"dividend has valuation < divisor valuation {v}"
                    )
        num = self.shift_down(min(v, self.prec))
        den = other.shift_down(v)
        n = min(num.prec, den.prec)
        return (num.truncate(n) * den.truncate(n).invert())

    def map_domain(self, new_dom: Domain) -> "Series":
        return Series(new_dom, [new_dom.coerce(c) for c in self.coeffs], self.prec)

    def __str__(self):
        body = format_terms(self.dom, enumerate(self.coeffs))
        return f"{body} + O(q^{self.prec})"

    def __repr__(self):
        return f"Series({self.dom}, {list(self.coeffs)!r}, prec={self.prec})"


def series_invert(f: Series) -> Series:
    return f.invert()


def series_lowest_term(f: Series):
    """(valuation, coefficient) of the lowest nonzero term.

    Raises ValueError when the series vanishes to its stated precision;
    callers that expect possible exact zeros must catch it.
    """
    v = f.valuation()
    if v is None:
        raise ValueError(f"series is zero to its precision O(q^{f.prec})")
    return v, f.coeffs[v]


# ---------------------------------------------------------------------------
# Laurent pairs


class LaurentPair:
    """A Laurent polynomial with finite negative tail: poly(q) * q^(-shift).

    Normalized so that shift == 0 or poly has a nonzero constant term.
    Used for values like the q-deformation of negative integers and for
    continued-fraction entries polynomial in 1/q.
    """

    __slots__ = ("poly", "shift")

    def __init__(self, poly: Poly, shift: int = 0):
        if shift < 0:
            poly, shift = poly.shift(-shift), 0
        if poly.is_zero():
            shift = 0
        elif shift:
            v = poly.valuation()
            drop = min(v, shift)
            if drop:
                poly, shift = poly.exact_div_monomial(drop), shift - drop
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "shift", shift)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPair is immutable")

    @staticmethod
    def from_poly(p: Poly) -> "LaurentPair":
        return LaurentPair(p, 0)

    @property
    def dom(self) -> Domain:
        return self.poly.dom

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def min_exponent(self) -> int:
        if self.poly.is_zero():
            raise ValueError("zero has no exponent range")
        return self.poly.valuation() - self.shift

    def max_exponent(self) -> int:
        if self.poly.is_zero():
            raise ValueError("zero has no exponent range")
        return len(self.poly.coeffs) - 1 - self.shift

    def coefficient(self, e: int):
        return self.poly.coefficient(e + self.shift)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPair)
            and self.poly == other.poly
            and self.shift == other.shift
        )

    def __hash__(self):
        return hash((self.poly, self.shift))

    def __add__(self, other):
        other = _as_laurent(other, self.dom)
        s = max(self.shift, other.shift)
        return LaurentPair(
            self.poly.shift(s - self.shift) + other.poly.shift(s - other.shift), s
        )

    def __sub__(self, other):
        return self + (-_as_laurent(other, self.dom))

    def __neg__(self):
        return LaurentPair(-self.poly, self.shift)

    def __mul__(self, other):
        other = _as_laurent(other, self.dom)
        return LaurentPair(self.poly * other.poly, self.shift + other.shift)

    def __str__(self):
        if self.poly.is_zero():
            return "0"
        return format_terms(
            self.dom, ((i - self.shift, c) for i, c in enumerate(self.poly.coeffs))
        )

    def __repr__(self):
        return f"LaurentPair({self.poly!r}, shift={self.shift})"


def _as_laurent(x, dom: Domain) -> LaurentPair:
    if isinstance(x, LaurentPair):
        return x
    if isinstance(x, Poly):
        return LaurentPair(x, 0)
    raise TypeError(f"cannot treat {type(x).__name__} as a Laurent pair")


# ---------------------------------------------------------------------------
# Fraction-free determinants


class ExactMatrix:
    """A dense matrix over a Domain. Rows are tuples; the matrix is square
    for determinant purposes but rectangular storage is allowed."""

    __slots__ = ("dom", "rows", "nrows", "ncols")

    def __init__(self, dom: Domain, rows):
        rows = [tuple(dom.coerce(c) for c in row) for row in rows]
        ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    def det(self):
        return det_fraction_free(self)


def det_fraction_free(matrix, dom: Domain = None):
    """Determinant by Bareiss fraction-free elimination with row pivoting.

    Accepts an ExactMatrix, or raw rows plus a domain. All intermediate
    divisions are exact by construction (Sylvester's identity), so the
    computation stays in the domain. The empty 0x0 matrix has determinant 1.
    """
    if isinstance(matrix, ExactMatrix):
        dom, rows = matrix.dom, matrix.rows
    else:
        if dom is None:
            raise TypeError("raw rows need an explicit domain")
        rows = [tuple(dom.coerce(c) for c in row) for row in matrix]
    n = len(rows)
    if n == 0:
        return dom.from_int(1)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant of a non-square matrix")
    if dom is ZZ:
        return _bareiss_int([list(r) for r in rows])
    return _bareiss_generic(dom, [list(r) for r in rows])


def _bareiss_int(m):
    # Raw-int fast path: same algorithm as the generic one below.
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi, mk = m[i], m[k]
            lead = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - lead * mk[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _bareiss_generic(dom: Domain, m):
    n = len(m)
    sign = 1
    prev = dom.from_int(1)
    for k in range(n - 1):
        if dom.is_zero(m[k][k]):
            for r in range(k + 1, n):
                if not dom.is_zero(m[r][k]):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return dom.from_int(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            lead = m[i][k]
            for j in range(k + 1, n):
                val = dom.sub(dom.mul(m[i][j], pivot), dom.mul(lead, m[k][j]))
                m[i][j] = dom.exact_div(val, prev)
        prev = pivot
    d = m[n - 1][n - 1]
    return dom.neg(d) if sign < 0 else d
