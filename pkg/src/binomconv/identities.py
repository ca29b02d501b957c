"""Exact checkers for convolution identities of central binomial type.

The central object is the t-fold convolution sum

    S(n; o_1..o_t) = sum over compositions m_1+...+m_t = n of
                     prod_k binomial(2*m_k + o_k, m_k).

With all offsets zero this is 4^n times a binomial in n and t/2; other
offset patterns (a pair summing to zero, a general zero-sum vector)
reduce to the same closed form.  The polynomial checks at the end
establish the offset-shift invariance used to prove the closed form:
the sum is unchanged when a single offset pair (a, 0) is deformed to
(a - x, x), and the finite-difference formula that drives that proof
holds symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Union

from .exactnum import (
    OutOfRangeError,
    Polynomial,
    Scalar,
    binomial,
    falling_factorial,
    finite_difference,
)


@dataclass(frozen=True)
class ConvolutionSpec:
    """Width n and the offset vector of a convolution sum."""

    n: int
    offsets: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError("n must be a nonnegative integer")
        offsets = tuple(Fraction(o) for o in self.offsets)
        if not offsets:
            raise ValueError("at least one offset is required")
        object.__setattr__(self, "offsets", offsets)

    @property
    def width(self) -> int:
        return len(self.offsets)


def _offset_column(offset: Fraction, n: int) -> list[Fraction]:
    return [binomial(2 * m + offset, m) for m in range(n + 1)]


def convolution_sum(spec: ConvolutionSpec) -> Fraction:
    """The t-fold convolution sum of offset central binomial columns.

    Computed by iterated truncated sequence convolution rather than by
    enumerating compositions, so the cost is t*n^2 exact products.
    """
    n = spec.n
    acc = _offset_column(spec.offsets[0], n)
    for offset in spec.offsets[1:]:
        col = _offset_column(offset, n)
        acc = [
            sum((acc[k] * col[m - k] for k in range(m + 1)), Fraction(0))
            for m in range(n + 1)
        ]
    return acc[n]


def closed_form(n: int, t: Scalar) -> Fraction:
    """4^n * binomial(n + t/2 - 1, n), the zero-offset sum in closed form."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    t = Fraction(t)
    return Fraction(4) ** n * binomial(n + t / 2 - 1, n)


def odd_t_forms(n: int, L: int) -> bool:
    """For odd width t = 2L+1 the closed form has two all-integer-binomial
    rewritings; true iff all three expressions agree."""
    if n < 0 or L < 0:
        raise ValueError("n and L must be nonnegative integers")
    lhs = closed_form(n, 2 * L + 1)
    first = binomial(2 * n + 2 * L, 2 * n) / binomial(n + L, n) * binomial(2 * n, n)
    second = binomial(2 * n + 2 * L, n + L) / binomial(2 * L, L) * binomial(n + L, n)
    return lhs == first == second


def recurrence_check(t: int, n: int) -> bool:
    """Zero-offset sums satisfy S_{t+2}(n+1) = S_t(n+1) + 4*S_{t+2}(n)."""
    if not isinstance(t, int) or t < 1:
        raise ValueError("t must be a positive integer")
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a nonnegative integer")

    def s(width: int, size: int) -> Fraction:
        return convolution_sum(ConvolutionSpec(size, (Fraction(0),) * width))

    return s(t + 2, n + 1) == s(t, n + 1) + 4 * s(t + 2, n)


PolyOrRational = Union[Polynomial, Fraction, int]


def inclusion_exclusion_sum(L: PolyOrRational, p: int) -> PolyOrRational:
    """Alternating sum over i of binomial(L-i, p-i)*binomial(L-p, i).

    Identically 1: as a polynomial when L is symbolic, and numerically
    for any rational L (for integers, L >= p so the subset-counting
    regime applies).  The summand uses the lower index p-i, which is
    polynomial-safe; for integer L the equivalent subset-counting form
    with lower index L-p is evaluated too and must agree.
    """
    if not isinstance(p, int) or p < 0:
        raise ValueError("p must be a nonnegative integer")
    symbolic = isinstance(L, Polynomial)
    if not symbolic:
        L = Fraction(L)
        if L.denominator == 1 and L < p:
            raise ValueError("integer L must be at least p")
    total: PolyOrRational = Polynomial() if symbolic else Fraction(0)
    for i in range(p + 1):
        term = binomial(L - i, p - i) * binomial(L - p, i)
        total = total - term if i % 2 else total + term
    if not symbolic and L.denominator == 1:
        counting = Fraction(0)
        for i in range(p + 1):
            term = binomial(L - i, int(L) - p) * binomial(L - p, i)
            counting = counting - term if i % 2 else counting + term
        assert counting == total, "the two summand rewritings disagree"
    return total


def opposite_offsets_check(n: int, L: Scalar) -> bool:
    """A cancelling offset pair changes nothing: the two-fold sum with
    offsets [-L, L] equals 4^n for every rational L."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    L = Fraction(L)
    return convolution_sum(ConvolutionSpec(n, (-L, L))) == Fraction(4) ** n


def shift_invariance_poly(n: int, a: Scalar) -> Polynomial:
    """The two-fold sum with offsets (a - x, x), as a polynomial in x.

    Contract: degree <= 0, with constant value equal to the unshifted
    sum convolution_sum(n, [a, 0]).
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    a = Fraction(a)
    total = Polynomial()
    for i in range(n + 1):
        j = n - i
        left = binomial(Polynomial((2 * i + a, -1)), i)
        right = binomial(Polynomial((2 * j, 1)), j)
        total = total + left * right
    return total


def _difference_poly(n: int, a: Fraction, index: int) -> Polynomial:
    """The polynomial (x - a + index - 1) falling index, times
    (x + 2n) falling (n - index); the sequence the difference formula
    is about."""
    lead = falling_factorial(Polynomial((index - 1 - a, 1)), index)
    tail = falling_factorial(Polynomial((2 * n, 1)), n - index)
    return lead * tail


def delta_formula_check(n: int, a: Scalar, i: int, m: int) -> bool:
    """The m-fold forward difference of the sequence above has the
    closed form (-1)^m (a+n+m)_m (x-a+i-1)_i (x+2n)_{n-i-m}.

    Also checks the companion identity obtained by substituting
    x -> x - 2*index into each sequence entry: its alternating binomial
    sum collapses to n! times the two-fold convolution sum with offsets
    [a, 0], tying the symbolic computation back to the numeric one.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    if not isinstance(i, int) or i < 0:
        raise ValueError("i must be a nonnegative integer")
    if not isinstance(m, int) or m < 1:
        raise OutOfRangeError("m must be a positive integer")
    if m > n - i:
        raise OutOfRangeError(f"m must be at most n - i = {n - i}")
    a = Fraction(a)
    lhs = finite_difference(lambda index: _difference_poly(n, a, index), m, i)
    rhs = (
        falling_factorial(a + n + m, m)
        * falling_factorial(Polynomial((i - 1 - a, 1)), i)
        * falling_factorial(Polynomial((2 * n, 1)), n - i - m)
    )
    if m % 2:
        rhs = -rhs
    if lhs != rhs:
        return False
    bridge = Polynomial()
    for index in range(n + 1):
        term = _difference_poly(n, a, index).taylor_shift(-2 * index) * comb(n, index)
        bridge = bridge - term if index % 2 else bridge + term
    target = factorial(n) * convolution_sum(ConvolutionSpec(n, (a, Fraction(0))))
    return bridge == target
