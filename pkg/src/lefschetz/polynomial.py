"""Univariate polynomials and rational functions with rational coefficients.

Coefficients are stored lowest degree first with trailing zeros stripped,
so ``Polynomial([1, -2])`` is ``1 - 2t``.

>>> p = Polynomial([-1, 0, 1])
>>> p
Polynomial('t^2 - 1')
>>> p.gcd(Polynomial([-1, 1]))
Polynomial('t - 1')
>>> cyclotomic(6)
Polynomial('t^2 - t + 1')
>>> sorted(root_of_unity_orders(Polynomial([-1, 0, 1])))
[1, 2]
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .linalg import Matrix, matmul, trace


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Polynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.leading
        d = other.degree
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + d] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return Polynomial(quot), Polynomial(rem[:d] if d > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: Polynomial) -> bool:
        """True when ``self`` divides ``other`` exactly."""
        return (other % self).is_zero()

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Polynomial) else Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return Polynomial(c / self.leading for c in self.coeffs)

    def derivative(self) -> Polynomial:
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def reversed(self, degree: int | None = None) -> Polynomial:
        """``t^n p(1/t)`` with ``n = degree`` (default: the actual degree)."""
        n = self.degree if degree is None else degree
        return Polynomial(self[n - k] for k in range(n + 1))

    def gcd(self, other: Polynomial) -> Polynomial:
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, _coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def to_strings(self) -> list[str]:
        return [fraction_str(c) for c in self.coeffs]

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        return format_polynomial(self)


def _coerce(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_polynomial(p: Polynomial, var: str = "t", ascending: bool = False) -> str:
    if p.is_zero():
        return "0"
    parts = []
    order = range(p.degree + 1) if ascending else range(p.degree, -1, -1)
    for k in order:
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = fraction_str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{fraction_str(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class RationalFunction:
    """A reduced quotient ``numerator / denominator``.

    The denominator is normalised to constant term 1 when that is nonzero,
    otherwise to a monic polynomial, which makes the representation unique.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=1):
        num, den = _coerce(numerator), _coerce(denominator)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den) if not num.is_zero() else den.monic()
        num, den = num // g, den // g
        norm = den[0] if den[0] else den.leading
        self.numerator = Polynomial(c / norm for c in num.coeffs)
        self.denominator = Polynomial(c / norm for c in den.coeffs)

    def is_one(self) -> bool:
        return self.numerator == 1 and self.denominator == 1

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return (self.numerator, self.denominator) == (other.numerator, other.denominator)

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return RationalFunction(self.numerator * other.numerator,
                                self.denominator * other.denominator)

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return RationalFunction(self.numerator * other.denominator,
                                self.denominator * other.numerator)

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"

    def __str__(self):
        num = format_polynomial(self.numerator, ascending=True)
        if self.denominator == 1:
            return num
        return f"({num}) / ({format_polynomial(self.denominator, ascending=True)})"


def series_divide(num: Polynomial, den: Polynomial, n: int) -> list[Fraction]:
    """First ``n`` power-series coefficients of ``num / den``; needs ``den(0) != 0``."""
    d0 = den[0]
    if not d0:
        raise ZeroDivisionError("series division needs a unit constant term")
    out: list[Fraction] = []
    for k in range(n):
        acc = num[k] - sum((den[i] * out[k - i] for i in range(1, min(k, den.degree) + 1)),
                           Fraction(0))
        out.append(acc / d0)
    return out


def log_derivative_series(f: RationalFunction, n: int) -> list[Fraction]:
    """First ``n`` coefficients of ``f'/f`` as a power series at 0."""
    num, den = f.numerator, f.denominator
    a = series_divide(num.derivative(), num, n)
    b = series_divide(den.derivative(), den, n)
    return [x - y for x, y in zip(a, b)]


def char_poly(m: Matrix) -> Polynomial:
    """Monic ``det(tI - M)`` by the Faddeev-LeVerrier recurrence.

    >>> char_poly(((0, -1), (1, -1)))
    Polynomial('t^2 + t + 1')
    """
    m = tuple(tuple(Fraction(x) for x in row) for row in m)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("char_poly needs a square matrix")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    am = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))  # M @ M_{k-1}
    for k in range(1, n + 1):
        # M_k = M M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(M M_k) / k
        c = coeffs[n - k + 1]
        mk = tuple(tuple(am[i][j] + (c if i == j else 0) for j in range(n)) for i in range(n))
        am = matmul(m, mk)
        coeffs[n - k] = -trace(am) / k
    return Polynomial(coeffs)


def det_one_minus_t(m: Matrix) -> Polynomial:
    """``det(I - tM)``, the reversal of the characteristic polynomial."""
    return char_poly(m).reversed(len(m))


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> Polynomial:
    """The m-th cyclotomic polynomial, by exact division of ``t^m - 1``."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    p = Polynomial.monomial(m) - 1
    for d in range(1, m):
        if m % d == 0:
            q, r = divmod(p, cyclotomic(d))
            if not r.is_zero():
                raise ArithmeticError(f"inexact cyclotomic division at m={m}, d={d}")
            p = q
    return p


def euler_phi(m: int) -> int:
    result, n, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def root_of_unity_orders(p: Polynomial) -> set[int]:
    """All ``m`` such that the m-th cyclotomic polynomial divides ``p``.

    Candidates satisfy ``phi(m) <= deg p`` and hence ``m <= 2 deg(p)^2``.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every number as a root")
    d = p.degree
    return {m for m in range(1, 2 * d * d + 1)
            if euler_phi(m) <= d and cyclotomic(m).divides(p)}


def polynomial_from_strings(items: Sequence[str]) -> Polynomial:
    return Polynomial(Fraction(s) for s in items)
