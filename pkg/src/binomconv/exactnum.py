"""Exact arithmetic kernel.

Rationals, dense univariate polynomials over the rationals, falling
factorials, generalized binomial coefficients, and forward finite
differences.  Everything here is exact; floats never appear.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Union

Rational = Fraction

Scalar = Union[int, Fraction]

NEG_INFINITY = float("-inf")


class OutOfRangeError(ValueError):
    """An index or order parameter lies outside its admissible range."""


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients.

    Coefficients are stored lowest degree first with no trailing zeros,
    so equal polynomials always compare and hash equal.  The zero
    polynomial has an empty coefficient tuple and degree -inf.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls((value,))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> float:
        return len(self._coeffs) - 1 if self._coeffs else NEG_INFINITY

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            raise OutOfRangeError("coefficient index must be nonnegative")
        return self._coeffs[k] if k < len(self._coeffs) else Fraction(0)

    @property
    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self!r} is not constant")
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def __call__(self, point: Scalar) -> Fraction:
        point = Fraction(point)
        value = Fraction(0)
        for c in reversed(self._coeffs):
            value = value * point + c
        return value

    def __add__(self, other: object) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other: object) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial()
            return Polynomial(c * other for c in self._coeffs)
        if isinstance(other, Polynomial):
            a, b = self._coeffs, other._coeffs
            if not a or not b:
                return Polynomial()
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
            return Polynomial(out)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise OutOfRangeError("polynomial powers take nonnegative integer exponents")
        result = Polynomial((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def taylor_shift(self, offset: Scalar) -> "Polynomial":
        """Substitute (variable + offset) for the variable."""
        shift = Polynomial((Fraction(offset), 1))
        result = Polynomial()
        for c in reversed(self._coeffs):
            result = result * shift + c
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant:
            return hash(self.constant_value())
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _coerce(value: object) -> Polynomial | None:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial((value,))
    return None


#: The polynomial variable.
X = Polynomial((0, 1))

PolyOrScalar = Union[Polynomial, int, Fraction]


def falling_factorial(x: PolyOrScalar, k: int) -> Union[Fraction, Polynomial]:
    """Product x(x-1)...(x-k+1); the empty product (k=0) is 1."""
    if not isinstance(k, int) or k < 0:
        raise OutOfRangeError("falling factorial length must be a nonnegative integer")
    if isinstance(x, Polynomial):
        result = Polynomial((1,))
        for m in range(k):
            result = result * (x - m)
        return result
    x = Fraction(x)
    result = Fraction(1)
    for m in range(k):
        result *= x - m
    return result


def binomial(x: PolyOrScalar, k: int) -> Union[Fraction, Polynomial]:
    """Generalized binomial coefficient: falling_factorial(x, k) / k!.

    Zero for negative k, matching the summation conventions used
    throughout the identity checkers.
    """
    if not isinstance(k, int):
        raise OutOfRangeError("binomial lower index must be an integer")
    if k < 0:
        return Polynomial() if isinstance(x, Polynomial) else Fraction(0)
    return falling_factorial(x, k) * Fraction(1, factorial(k))


def finite_difference(
    f: Callable[[int], PolyOrScalar], m: int, i: int
) -> Union[Fraction, Polynomial]:
    """m-fold forward difference of the sequence f, evaluated at index i."""
    if not isinstance(m, int) or m < 0:
        raise OutOfRangeError("difference order must be a nonnegative integer")
    total = None
    for r in range(m + 1):
        term = f(i + r) * comb(m, r)
        if (m - r) % 2:
            term = -term
        total = term if total is None else total + term
    return Fraction(total) if isinstance(total, int) else total
