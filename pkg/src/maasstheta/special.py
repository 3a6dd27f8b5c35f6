"""Scalar special functions and one-dimensional Gaussian-type integrals.

The modified Bessel function K0 and the family of integrals

    int e^{-pi y B(nu, c(t))^2} dt

over segments of the geodesic parametrization, which reduce to complete
or incomplete versions of the cosh-integral representation

    K0(x) = int_{-inf}^{inf} e^{-x cosh 2t} dt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import k0 as _scipy_k0
from scipy.special import k0e as _scipy_k0e

from .quadform import QuadraticForm

__all__ = [
    "Tolerance",
    "K0_UNDERFLOW_CUTOFF",
    "bessel_k0",
    "bessel_k0_scaled",
    "k0_upper_bound",
    "adaptive_quadrature",
    "incomplete_k0",
    "gauss_segment_integral",
    "alpha",
    "lemma_segment_decomposition",
]

#: beyond this argument e^{-x} underflows double precision entirely
K0_UNDERFLOW_CUTOFF = 745.0


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative error targets for the quadrature routines."""

    eps_abs: float = 1e-12
    eps_rel: float = 1e-12

    def __post_init__(self):
        if not (self.eps_abs > 0 and self.eps_rel > 0):
            raise ValueError("tolerances must be positive")
        if self.eps_abs < 1e-14:
            raise ValueError("eps_abs below 1e-14 is not supported")


def bessel_k0(x: float) -> float:
    """Modified Bessel function K0(x) for x > 0.

    Relative error <= 1e-12 on [1e-6, 700]; returns exact 0 for
    x > K0_UNDERFLOW_CUTOFF where the true value is below the smallest
    subnormal.
    """
    if not x > 0:
        raise ValueError(f"bessel_k0 requires x > 0, got {x}")
    if x > K0_UNDERFLOW_CUTOFF:
        return 0.0
    return float(_scipy_k0(x))


def k0_underflowed(x: float) -> bool:
    """True when bessel_k0 returned the exact-0 underflow value."""
    return x > K0_UNDERFLOW_CUTOFF


def bessel_k0_scaled(x: float) -> float:
    """Exponentially scaled e^x K0(x), usable for any positive x."""
    if not x > 0:
        raise ValueError(f"bessel_k0_scaled requires x > 0, got {x}")
    return float(_scipy_k0e(x))


def k0_upper_bound(x: float) -> float:
    """The elementary bound sqrt(pi/(2x)) e^{-x} >= K0(x)."""
    if not x > 0:
        raise ValueError("bound requires x > 0")
    if x > K0_UNDERFLOW_CUTOFF:
        return 0.0
    return math.sqrt(math.pi / (2.0 * x)) * math.exp(-x)


# -- adaptive Gauss-Legendre -------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(15)


def _panel(f, a: float, b: float) -> float:
    half = 0.5 * (b - a)
    x = 0.5 * (a + b) + half * _GL_NODES
    return half * float(np.dot(f(x), _GL_WEIGHTS))


def adaptive_quadrature(f, a: float, b: float, eps_abs: float,
                        max_depth: int = 48) -> float:
    """Integrate a vectorized integrand on [a, b] to absolute accuracy.

    15-point Gauss-Legendre panels with bisection on the whole-vs-halves
    error estimate; the tolerance is allocated proportionally to panel
    length.
    """
    if a == b:
        return 0.0
    total_len = abs(b - a)
    stack = [(a, b, _panel(f, a, b), 0)]
    result = 0.0
    while stack:
        lo, hi, whole, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid)
        right = _panel(f, mid, hi)
        err = abs(whole - (left + right))
        if err <= eps_abs * abs(hi - lo) / total_len or depth >= max_depth:
            result += left + right
        else:
            stack.append((lo, mid, left, depth + 1))
            stack.append((mid, hi, right, depth + 1))
    return result


# -- incomplete K0 ------------------------------------------------------


def incomplete_k0(theta: float, w: float, eps_abs: float = 1e-14) -> float:
    """The tail integral int_w^inf e^{-theta cosh v} dv, theta > 0.

    At w -> -inf this tends to 2 K0(theta); at w = 0 it equals K0(theta).
    Returns exact 0 when theta is past the underflow cutoff.
    """
    if not theta > 0:
        raise ValueError("incomplete_k0 requires theta > 0")
    if theta > K0_UNDERFLOW_CUTOFF:
        return 0.0
    if w < 0:
        return 2.0 * bessel_k0(theta) - incomplete_k0(theta, -w, eps_abs)
    # integrand tail beyond v is below e^{-theta cosh v} / (theta sinh v)
    v = max(w, 1.0)
    while True:
        expo = theta * math.cosh(v)
        bound = 0.0 if expo > 745.0 else math.exp(-expo) / (theta * math.sinh(v))
        if bound < 0.5 * eps_abs:
            break
        v += 0.5
    if v <= w:
        return 0.0

    def f(t):
        e = theta * np.cosh(t)
        return np.where(e > 745.0, 0.0, np.exp(-np.minimum(e, 750.0)))

    return adaptive_quadrature(f, w, v, 0.5 * eps_abs)


# -- segment integrals over the geodesic --------------------------------


def _split_pair(form: QuadraticForm, nu) -> tuple[float, float]:
    w = form.P @ np.asarray(nu, dtype=float)
    return float(w[0]), float(w[1])


def gauss_segment_integral(form: QuadraticForm, nu, t1: float, t2: float,
                           y: float = 1.0, tol: Tolerance | None = None) -> float:
    """int_{t1}^{t2} e^{-pi y B(nu, c(t))^2} dt, antisymmetric in (t1, t2)."""
    if tol is None:
        tol = Tolerance()
    if not y > 0:
        raise ValueError("y > 0 required")
    for v in (t1, t2, y, float(nu[0]), float(nu[1])):
        if not math.isfinite(v):
            raise ValueError("non-finite input")
    if t1 == t2:
        return 0.0
    sign = 1.0
    if t1 > t2:
        t1, t2, sign = t2, t1, -1.0
    w1, w2 = _split_pair(form, nu)

    def f(t):
        bval = w2 * np.exp(t) - w1 * np.exp(-t)
        e = math.pi * y * bval * bval
        return np.exp(-np.minimum(e, 750.0))

    return sign * adaptive_quadrature(f, t1, t2, tol.eps_abs)


def alpha(form: QuadraticForm, t0: float, nu,
          tol: Tolerance | None = None) -> float:
    """The boundary integral attached to c0 = c(t0).

    Equals int_{t0}^inf e^{-pi B(nu,c(t))^2} dt when
    B(nu,c0) B(nu,c0perp) > 0, minus the mirror integral when the product
    is negative, and 0 on the boundary.  Requires Q(nu) != 0.
    """
    if tol is None:
        tol = Tolerance()
    qv = form.q(nu)
    if qv == 0:
        raise ValueError(f"alpha undefined: Q(nu) = 0 at nu = {tuple(nu)}")
    g = form.geodesic(t0)
    p = float(form.b(nu, g.c))
    r = float(form.b(nu, g.cperp))
    if p == 0.0 or r == 0.0:
        return 0.0
    sign = 1.0 if p * r > 0 else -1.0
    r_eff = r * sign
    # after shifting to u >= 0 the integrand is exp(-pi (p cosh u + r_eff sinh u)^2)
    # with p r_eff > 0, bounded by exp(-pi (p^2 + (p^2 + r^2) u^2))
    p2, s2 = p * p, p * p + r * r
    u_cut = math.sqrt(max(0.0, (math.log(10.0 / tol.eps_abs) - math.pi * p2))
                      / (math.pi * s2))
    while True:
        tail = (math.exp(-min(math.pi * (p2 + s2 * u_cut * u_cut), 745.0))
                / (2.0 * math.pi * s2 * max(u_cut, 1e-3)))
        if tail < 0.5 * tol.eps_abs or u_cut > 60.0:
            break
        u_cut += 0.25

    def f(u):
        gval = p * np.cosh(u) + r_eff * np.sinh(u)
        e = math.pi * gval * gval
        return np.exp(-np.minimum(e, 750.0))

    return sign * adaptive_quadrature(f, 0.0, u_cut, 0.5 * tol.eps_abs)


def scaled_full_line_integral(q_of_nu: float) -> float:
    """e^{2 pi Q} K0(2 pi |Q|) without overflow (vanishes for large -Q)."""
    if q_of_nu == 0:
        raise ValueError("Q(nu) = 0 has no full-line closed form")
    theta = 2.0 * math.pi * abs(q_of_nu)
    if q_of_nu > 0:
        return bessel_k0_scaled(theta)
    if 2.0 * theta > 1400.0:
        return 0.0
    return math.exp(-2.0 * theta) * bessel_k0_scaled(theta)


def lemma_segment_decomposition(form: QuadraticForm, nu, t1: float, t2: float,
                                tol: Tolerance | None = None):
    """Segment integral split into boundary terms plus an indicator term.

    Returns (alpha(t1), alpha(t2), indicator_term) with

        int_{t1}^{t2} e^{-pi B(nu,c(t))^2} dt
            = alpha(t1) - alpha(t2) + indicator_term,

    where the indicator term carries sgn(t2 - t1), the two sign-change
    weights at (c1, c2) and (c1perp, c2perp), and e^{2 pi Q} K0(2 pi |Q|).
    """
    if tol is None:
        tol = Tolerance()
    qv = form.q(nu)
    if qv == 0:
        raise ValueError(f"Q(nu) = 0 at nu = {tuple(nu)}")
    a1 = alpha(form, t1, nu, tol)
    a2 = alpha(form, t2, nu, tol)
    if t1 == t2:
        return a1, a2, 0.0
    g1, g2 = form.geodesic(t1), form.geodesic(t2)
    b1 = float(form.b(nu, g1.c))
    b2 = float(form.b(nu, g2.c))
    b1p = float(form.b(nu, g1.cperp))
    b2p = float(form.b(nu, g2.cperp))
    weight = 0.5 * (1.0 - _sgn(b1 * b2)) + 0.5 * (1.0 - _sgn(b1p * b2p))
    indicator = _sgn(t2 - t1) * weight * scaled_full_line_integral(float(qv))
    return a1, a2, indicator


def _sgn(x: float) -> float:
    if x > 0:
        return 1.0
    if x < 0:
        return -1.0
    return 0.0
