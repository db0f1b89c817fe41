"""Lefschetz numbers of iterates, the Lefschetz zeta function, and LPPF.

The zeta function is assembled from the per-degree factors
``det(I - t F_d)`` with exponent ``(-1)^(d+1)``: odd degrees feed the
numerator and even degrees the denominator.  Both therefore have constant
term 1 and the reduced quotient is canonical, so "ζ ≡ 1" is a plain equality
test.

Finite certificate
------------------
``L(f^k) = sum_i ε_i μ_i^k`` where ``μ_i`` runs over the eigenvalues of all
blocks and ``ε_i = ±1`` by degree parity.  The zeta function is
``prod_i (1 - μ_i t)^(-ε_i)``; its log-derivative has coefficients
``L(f^k)``.  If ``L(f^k) = 0`` for ``k = 1..D`` with ``D`` the total
dimension, the numerator and denominator power sums agree up to
``max(deg num, deg den) <= D``, Newton's identities make the two polynomials
equal, and ζ ≡ 1.  So LPPF is decided by ``D`` Lefschetz numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .endomorphism import GradedLinearMap
from .linalg import matmul
from .polynomial import Polynomial, RationalFunction, det_one_minus_t, log_derivative_series


@dataclass(frozen=True)
class LefschetzSequence:
    values: tuple[Fraction, ...]

    @property
    def horizon(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> Fraction:
        """``L(f^k)`` for ``1 <= k <= horizon`` (1-based, like the exponent)."""
        if not 1 <= k <= len(self.values):
            raise IndexError(k)
        return self.values[k - 1]

    def __iter__(self):
        return iter(self.values)

    def first_nonzero(self) -> int | None:
        return next((k for k, v in enumerate(self.values, start=1) if v), None)


def lefschetz_sequence(f: GradedLinearMap, horizon: int) -> LefschetzSequence:
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    # same as alternating_trace(power(f, k)), iterating on the raw blocks;
    # integral blocks (the common case) are powered in plain ints
    values = [Fraction(0)] * horizon
    for d, block in f.blocks.items():
        sign = -1 if d % 2 else 1
        if all(x.denominator == 1 for row in block for x in row):
            block = tuple(tuple(int(x) for x in row) for row in block)
            mul = _int_matmul
        else:
            mul = matmul
        mk = block
        for k in range(horizon):
            if k:
                mk = mul(mk, block)
            values[k] += sign * sum(mk[i][i] for i in range(len(mk)))
    return LefschetzSequence(tuple(values))


def _int_matmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def zeta_factors(f: GradedLinearMap) -> tuple[Polynomial, Polynomial]:
    """Unreduced (numerator, denominator): products of ``det(I - tF_d)``."""
    num, den = Polynomial([1]), Polynomial([1])
    for d, block in f.blocks.items():
        factor = det_one_minus_t(block)
        if d % 2:
            num = num * factor
        else:
            den = den * factor
    return num, den


def zeta_function(f: GradedLinearMap) -> RationalFunction:
    cached = getattr(f, "_zeta", None)
    if cached is None:
        cached = f._zeta = RationalFunction(*zeta_factors(f))
    return cached


def is_lppf(f: GradedLinearMap) -> bool:
    """Whether every ``L(f^k)`` vanishes, decided by ``ζ_f ≡ 1``."""
    return zeta_function(f).is_one()


def lppf_horizon(f: GradedLinearMap) -> int:
    return f.presentation.dimension


def is_lppf_by_horizon(f: GradedLinearMap) -> bool:
    """LPPF decided by ``L(f^k) = 0`` for ``k <= D`` (see module docstring)."""
    return not any(lefschetz_sequence(f, lppf_horizon(f)))


def zeta_series_check(f: GradedLinearMap, horizon: int) -> bool:
    """Compare ``ζ'/ζ`` (exact series division) with the Lefschetz numbers."""
    series = log_derivative_series(zeta_function(f), horizon)
    return tuple(series) == lefschetz_sequence(f, horizon).values
