"""Exact integer power series: sigma, sigma*, and the T(n) coefficients.

Everything here is exact arbitrary-precision integer arithmetic; no
floating point is used.  The two q-hypergeometric series

    sigma(q)  = sum_{n>=0} q^{n(n+1)/2} / ((1+q)(1+q^2)...(1+q^n))
    sigma*(q) = 2 sum_{n>=1} (-1)^n q^{n^2} / ((1-q)(1-q^3)...(1-q^{2n-1}))

also admit indefinite-theta expansions over two cones of (n, j) pairs;
both routes are implemented and compared coefficientwise.  The combined
coefficients T(n), supported on n = 1 mod 24, are read off from

    q^{1/24} sigma(q) + q^{-1/24} sigma*(q) = sum T(n) q^{|n|/24}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "IntPowerSeries",
    "TCoefficients",
    "sigma_series",
    "sigma_star_series",
    "sigma_indefinite_series",
    "sigma_star_indefinite_series",
    "t_coefficients",
    "verify_identity",
    "IdentityReport",
]

_MAX_ORDER = 10**5


@dataclass(frozen=True)
class IntPowerSeries:
    """Polynomial truncation of an integer power series in q.

    The global exponent offset is offset24/24, so the series represents
    q^{offset24/24} * sum coeffs[k] q^k, exact up to order ``order``.
    """

    coeffs: tuple
    offset24: int = 0

    def __post_init__(self):
        if not all(isinstance(c, int) for c in self.coeffs):
            raise TypeError("coefficients must be exact integers")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient q^{k} beyond truncation order")
        return self.coeffs[k]

    def __add__(self, other: "IntPowerSeries") -> "IntPowerSeries":
        if self.offset24 != other.offset24:
            raise ValueError("offsets differ; series not addable")
        n = min(self.order, other.order)
        return IntPowerSeries(
            tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])),
            self.offset24,
        )

    def __neg__(self) -> "IntPowerSeries":
        return IntPowerSeries(tuple(-c for c in self.coeffs), self.offset24)

    def __sub__(self, other: "IntPowerSeries") -> "IntPowerSeries":
        return self + (-other)

    def scaled(self, k: int) -> "IntPowerSeries":
        return IntPowerSeries(tuple(k * c for c in self.coeffs), self.offset24)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntPowerSeries)
            and self.offset24 == other.offset24
            and self.coeffs == other.coeffs
        )


def _check_order(n: int) -> None:
    if not 1 <= n <= _MAX_ORDER:
        raise ValueError(f"order must be in [1, {_MAX_ORDER}], got {n}")


def sigma_series(order: int) -> IntPowerSeries:
    """sigma(q) through q^order via the q-hypergeometric sum.

    The running product 1/((1+q)...(1+q^n)) is updated in place by one
    O(order) convolution per factor.
    """
    _check_order(order)
    prod = [0] * (order + 1)
    prod[0] = 1
    out = [0] * (order + 1)
    out[0] = 1  # n = 0 term
    n = 1
    while n * (n + 1) // 2 <= order:
        # multiply prod by (1 + q^n)^{-1}: new[j] = old[j] - new[j - n]
        for j in range(n, order + 1):
            prod[j] -= prod[j - n]
        t = n * (n + 1) // 2
        for j in range(order + 1 - t):
            out[t + j] += prod[j]
        n += 1
    return IntPowerSeries(tuple(out), offset24=0)


def sigma_star_series(order: int) -> IntPowerSeries:
    """sigma*(q) through q^order via the q-hypergeometric sum."""
    _check_order(order)
    prod = [0] * (order + 1)
    prod[0] = 1
    out = [0] * (order + 1)
    n = 1
    while n * n <= order:
        m = 2 * n - 1
        # multiply prod by (1 - q^m)^{-1}: new[j] = old[j] + new[j - m]
        for j in range(m, order + 1):
            prod[j] += prod[j - m]
        t = n * n
        s = 2 if n % 2 == 0 else -2
        for j in range(order + 1 - t):
            out[t + j] += s * prod[j]
        n += 1
    return IntPowerSeries(tuple(out), offset24=0)


def sigma_indefinite_series(order: int) -> IntPowerSeries:
    """The indefinite-theta expansion of q^{1/24} sigma(q), shifted to q^0.

    Sums (-1)^{n+j} q^{n(3n+1)/2 - j^2} over the cones
    {n+j >= 0, n-j >= 0} and {n+j < 0, n-j < 0}.  In the first cone
    |j| <= n gives exponent >= n(n+1)/2, in the second (with m = -n)
    |j| <= m-1 gives exponent >= (m^2+3m-2)/2, which bounds the
    enumeration.
    """
    _check_order(order)
    out = [0] * (order + 1)
    # cone 1: n >= 0, -n <= j <= n
    n = 0
    while n * (n + 1) // 2 <= order:
        base = n * (3 * n + 1) // 2
        for j in range(-n, n + 1):
            e = base - j * j
            if 0 <= e <= order:
                out[e] += -1 if (n + j) % 2 else 1
        n += 1
    # cone 2: n = -m <= -1, |j| <= m-1
    m = 1
    while (m * m + 3 * m - 2) // 2 <= order:
        base = m * (3 * m - 1) // 2
        for j in range(-(m - 1), m):
            e = base - j * j
            if 0 <= e <= order:
                out[e] += -1 if (m + j) % 2 else 1  # (-1)^(n+j), n = -m
        m += 1
    return IntPowerSeries(tuple(out), offset24=1)


def sigma_star_indefinite_series(order: int) -> IntPowerSeries:
    """The indefinite-theta expansion of q^{-1/24} sigma*(q), shifted to q^0.

    Sums (-1)^{n+j} q^{j^2 - n(3n+1)/2} over the cones
    {2j+3n >= 0, 2j-3n > 0} and {2j+3n < 0, 2j-3n <= 0}.  Both force
    2|j| >= 3|n|, hence exponent >= j(|j|-1)/3, bounding the enumeration.
    """
    _check_order(order)
    out = [0] * (order + 1)
    j = 1
    while j * (j - 1) // 3 <= order:
        # cone 1: j >= 1, -2j/3 <= n < 2j/3 (strict upper from 2j - 3n > 0)
        for n in range(-(2 * j) // 3, (2 * j - 1) // 3 + 1):
            if 2 * j + 3 * n < 0 or 2 * j - 3 * n <= 0:
                continue
            e = j * j - n * (3 * n + 1) // 2
            if 0 <= e <= order:
                out[e] += -1 if (n + j) % 2 else 1
        j += 1
    j = -1
    while (-j) * (-j - 1) // 3 <= order:
        # cone 2: j <= -1, 2j/3 <= n < -2j/3 (strict lower from 2j + 3n < 0)
        for n in range(-((-2 * j) // 3), (-2 * j) // 3 + 1):
            if 2 * j + 3 * n >= 0 or 2 * j - 3 * n > 0:
                continue
            e = j * j - n * (3 * n + 1) // 2
            if 0 <= e <= order:
                out[e] += -1 if (n + j) % 2 else 1
        j -= 1
    return IntPowerSeries(tuple(out), offset24=-1)


@dataclass(frozen=True)
class TCoefficients:
    """Table of T(n) for n = 1 mod 24, |n| <= n_max."""

    n_max: int
    table: dict = field(default_factory=dict)

    def __call__(self, n: int) -> int:
        if n % 24 != 1 % 24:
            return 0
        if abs(n) > self.n_max:
            raise IndexError(f"|n| = {abs(n)} beyond table range {self.n_max}")
        return self.table.get(n, 0)

    def support(self):
        return sorted(self.table)


def t_coefficients(n_max: int) -> TCoefficients:
    """T(n) for |n| <= n_max from the sigma and sigma* expansions.

    Positive side: q^{1/24} sigma contributes exponent (24k+1)/24, so
    T(24k+1) is the q^k coefficient of sigma.  Negative side:
    q^{-1/24} sigma* contributes exponent (24k-1)/24 = |1-24k|/24, so
    T(1-24k) is the q^k coefficient of sigma* (k >= 1; the k = 0
    coefficient of sigma* vanishes, consistent with |n| = 1 coming only
    from sigma).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if (n_max - 1) // 24 > _MAX_ORDER or (n_max + 1) // 24 > _MAX_ORDER:
        raise ValueError("n_max too large")
    k_pos = (n_max - 1) // 24
    k_neg = (n_max + 1) // 24
    s = sigma_series(max(k_pos, 1))
    ss = sigma_star_series(max(k_neg, 1))
    table = {}
    for k in range(k_pos + 1):
        c = s.coeff(k)
        if c:
            table[24 * k + 1] = c
    for k in range(1, k_neg + 1):
        c = ss.coeff(k)
        if c:
            table[1 - 24 * k] = c
    return TCoefficients(n_max=n_max, table=table)


@dataclass(frozen=True)
class IdentityReport:
    match: bool
    first_mismatch: int | None = None


def verify_identity(kind: str, order: int) -> IdentityReport:
    """Coefficientwise comparison of hypergeometric vs indefinite series.

    kind is "sigma" or "sigma-star".
    """
    _check_order(order)
    if kind == "sigma":
        lhs = sigma_series(order)
        rhs = sigma_indefinite_series(order)
    elif kind in ("sigma-star", "sigma_star"):
        lhs = sigma_star_series(order)
        rhs = sigma_star_indefinite_series(order)
    else:
        raise ValueError(f"unknown identity kind {kind!r}")
    for k in range(order + 1):
        if lhs.coeff(k) != rhs.coeff(k):
            return IdentityReport(match=False, first_mismatch=k)
    return IdentityReport(match=True)
