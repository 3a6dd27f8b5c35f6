"""Binary quadratic forms of signature (1,1).

A symmetric integer 2x2 matrix A with det A < 0 defines the form
Q(v) = v^T A v / 2 and its bilinear form B(v, w) = v^T A w.  Over the
reals Q factors as a product of two linear forms, Q(v) = (Pv)_1 (Pv)_2,
which fixes one sheet C_Q of the hyperbola {Q = -1} together with the
parametrization

    c(t) = P^{-1} (e^t, -e^{-t}),    cperp(t) = P^{-1} (e^t, e^{-t}),

satisfying Q(c) = -1, Q(cperp) = +1 and B(c, cperp) = 0.  Integer
automorphs of Q preserving the lattice and the sheet act on C_Q as
translations in t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "QuadFormError",
    "ComponentError",
    "GeodesicPoint",
    "QuadraticForm",
    "automorph_failure",
    "is_automorph",
    "t_shift",
    "act_on_t",
    "search_automorphs",
    "rational_vector",
    "rational_str",
]

#: parameter values beyond this overflow e^{2t} after squaring in B(nu, c(t))^2
T_GUARD = 50.0

_SPLIT_TOL = 1e-12


class QuadFormError(ValueError):
    """Matrix is not integer, symmetric, of signature (1,1)."""


class ComponentError(ValueError):
    """Vector does not lie on the chosen sheet of {Q = -1}."""


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) or (isinstance(x, np.integer))


def rational_vector(v) -> tuple[Fraction, Fraction]:
    """Parse a 2-vector of exact rationals from strings/ints/Fractions.

    Accepts the external literal format ["p/q", "r/s"] as well as numeric
    entries; floats are converted exactly (binary value).
    """
    if len(v) != 2:
        raise ValueError("expected a 2-vector")
    out = []
    for entry in v:
        if isinstance(entry, str):
            out.append(Fraction(entry.strip()))
        else:
            out.append(Fraction(entry))
    return (out[0], out[1])


def rational_str(v: tuple[Fraction, Fraction]) -> list[str]:
    """Inverse of :func:`rational_vector` (external "p/q" literal form)."""
    return [str(v[0]), str(v[1])]


@dataclass(frozen=True)
class GeodesicPoint:
    """A point c(t) on C_Q with its orthogonal companion cperp(t)."""

    t: float
    c: tuple[float, float]
    cperp: tuple[float, float]


class QuadraticForm:
    """Integer symmetric 2x2 matrix of signature (1,1) with its splitting.

    Parameters
    ----------
    matrix : 2x2 integer symmetric matrix (nested sequence), det < 0.

    Attributes
    ----------
    A : tuple of tuples of int
    detA : int
    astar : tuple of int, the diagonal of A
    P : (2, 2) float ndarray with A = P^T S P, S antidiagonal ones
    """

    def __init__(self, matrix, _P=None):
        A = [[_as_int(x) for x in row] for row in matrix]
        if len(A) != 2 or any(len(r) != 2 for r in A):
            raise QuadFormError("A must be 2x2")
        if A[0][1] != A[1][0]:
            raise QuadFormError("A must be symmetric")
        det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
        if det >= 0:
            raise QuadFormError(
                f"A must have signature (1,1), got det A = {det} >= 0"
            )
        self.A = ((A[0][0], A[0][1]), (A[1][0], A[1][1]))
        self.detA = det
        self.astar = (A[0][0], A[1][1])
        self.P = self._split() if _P is None else np.asarray(_P, dtype=float)
        self.Pinv = np.linalg.inv(self.P)
        self._check_split()

    # -- construction -------------------------------------------------

    def _split(self) -> np.ndarray:
        """Factor Q into two linear forms; deterministic canonical gauge.

        For A11 != 0 the rows come from the two roots of the binary form,
        both scaled by sqrt(|A11|/2) (the second carrying sign(A11)), the
        first row taking the root (-A12 - sqrt(D))/A11.  For A11 == 0 the
        factorization Q = v2 * (A12 v1 + (A22/2) v2) is used directly.
        """
        a, b = self.A[0]
        c = self.A[1][1]
        if a != 0:
            d = math.sqrt(b * b - a * c)  # sqrt(-det A) > 0
            r_minus = (-b - d) / a
            r_plus = (-b + d) / a
            s = math.sqrt(abs(a) / 2.0)
            sgn = 1.0 if a > 0 else -1.0
            return np.array(
                [[s, -s * r_minus], [sgn * s, -sgn * s * r_plus]]
            )
        # a == 0 forces b != 0 (det = -b^2 < 0)
        return np.array([[float(b), c / 2.0], [0.0, 1.0]])

    def _check_split(self) -> None:
        S = np.array([[0.0, 1.0], [1.0, 0.0]])
        resid = self.P.T @ S @ self.P - np.array(self.A, dtype=float)
        if np.max(np.abs(resid)) > _SPLIT_TOL * max(1.0, self._anorm()):
            raise QuadFormError("splitting P^T S P = A failed tolerance")

    def _anorm(self) -> float:
        return max(abs(x) for row in self.A for x in row)

    def with_gauge(self, r: float) -> "QuadraticForm":
        """Same form with P replaced by diag(e^r, e^-r) P (t shifts by r)."""
        D = np.array([[math.exp(r), 0.0], [0.0, math.exp(-r)]])
        return QuadraticForm(self.A, _P=D @ self.P)

    # -- evaluation ----------------------------------------------------

    def q(self, v):
        """Q(v) = v^T A v / 2; exact Fraction for exact inputs."""
        (a, b), (_, c) = self.A
        v1, v2 = v[0], v[1]
        if _is_exact(v1) and _is_exact(v2):
            v1, v2 = Fraction(v1), Fraction(v2)
            return (a * v1 * v1 + 2 * b * v1 * v2 + c * v2 * v2) / 2
        return 0.5 * (a * v1 * v1 + 2.0 * b * v1 * v2 + c * v2 * v2)

    def b(self, v, w):
        """B(v, w) = v^T A w; exact Fraction for exact inputs."""
        (a, b), (_, c) = self.A
        v1, v2, w1, w2 = v[0], v[1], w[0], w[1]
        if all(_is_exact(x) for x in (v1, v2, w1, w2)):
            v1, v2 = Fraction(v1), Fraction(v2)
            w1, w2 = Fraction(w1), Fraction(w2)
            return a * v1 * w1 + b * (v1 * w2 + v2 * w1) + c * v2 * w2
        return a * v1 * w1 + b * (v1 * w2 + v2 * w1) + c * v2 * w2

    def split_coords(self, v) -> tuple[float, float]:
        """(Pv)_1, (Pv)_2, so that Q(v) = (Pv)_1 (Pv)_2."""
        w = self.P @ np.asarray(v, dtype=float)
        return float(w[0]), float(w[1])

    def geodesic(self, t: float) -> GeodesicPoint:
        """The point c(t) on C_Q together with cperp(t)."""
        if not abs(t) <= T_GUARD:
            raise ValueError(f"|t| <= {T_GUARD} required, got t={t}")
        ep, em = math.exp(t), math.exp(-t)
        c = self.Pinv @ np.array([ep, -em])
        cp = self.Pinv @ np.array([ep, em])
        return GeodesicPoint(t=float(t), c=(float(c[0]), float(c[1])),
                             cperp=(float(cp[0]), float(cp[1])))

    def c_ref(self) -> tuple[float, float]:
        """Reference point c(0) = P^{-1}(1, -1) fixing the sheet C_Q."""
        return self.geodesic(0.0).c

    def parameter(self, c) -> float:
        """Inverse of the parametrization: t with c(t) = c.

        Requires Q(c) = -1 within 1e-9 and c on the chosen sheet
        (first split coordinate positive).
        """
        w1, w2 = self.split_coords(c)
        if abs(w1 * w2 + 1.0) > 1e-9:
            raise ComponentError(f"Q(c) = {w1 * w2} is not -1")
        if w1 <= 0.0:
            raise ComponentError("c lies on the opposite sheet of Q = -1")
        return 0.5 * (math.log(w1) - math.log(-w2))

    # -- positive-definite majorant ------------------------------------

    def pos_gram(self, t: float) -> np.ndarray:
        """Gram matrix of nu -> Q(nu) + B(nu, c(t))^2 / 2.

        Equals ((A c)(A c)^T + (A cperp)(A cperp)^T) / 4, positive
        definite for every t, with determinant -det A / 4.
        """
        g = self.geodesic(t)
        Af = np.array(self.A, dtype=float)
        u = Af @ np.asarray(g.c)
        v = Af @ np.asarray(g.cperp)
        return 0.25 * (np.outer(u, u) + np.outer(v, v))

    def min_pos_eig(self, t: float) -> float:
        """Least eigenvalue of :meth:`pos_gram` at t."""
        G = self.pos_gram(t)
        tr = G[0, 0] + G[1, 1]
        det = G[0, 0] * G[1, 1] - G[0, 1] * G[1, 0]
        disc = math.sqrt(max(tr * tr - 4.0 * det, 0.0))
        return 0.5 * (tr - disc)

    def min_pos_eig_window(self, t1: float, t2: float) -> float:
        """min over t in [t1, t2] of the least eigenvalue of pos_gram(t).

        det pos_gram is t-independent and the least eigenvalue decreases
        in the trace, which is convex in t, so the minimum sits at the
        endpoint with the larger trace.
        """
        g1, g2 = self.pos_gram(t1), self.pos_gram(t2)
        pick = t1 if np.trace(g1) >= np.trace(g2) else t2
        return self.min_pos_eig(pick)

    # -- dunder --------------------------------------------------------

    def __repr__(self) -> str:
        return f"QuadraticForm({[list(r) for r in self.A]})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuadraticForm)
            and self.A == other.A
            and np.array_equal(self.P, other.P)
        )


def _as_int(x) -> int:
    if isinstance(x, (bool, float)) and not float(x).is_integer():
        raise QuadFormError(f"non-integer entry {x!r}")
    if isinstance(x, Fraction) and x.denominator != 1:
        raise QuadFormError(f"non-integer entry {x!r}")
    return int(x)


def _as_int_matrix(gamma) -> tuple[tuple[int, int], tuple[int, int]]:
    g = [[_as_int(x) for x in row] for row in gamma]
    if len(g) != 2 or any(len(r) != 2 for r in g):
        raise ValueError("gamma must be 2x2")
    return ((g[0][0], g[0][1]), (g[1][0], g[1][1]))


# -- automorphs ---------------------------------------------------------


def automorph_failure(form: QuadraticForm, gamma) -> str | None:
    """None if gamma is in Aut+(Q, Z^2), else a short reason code.

    The form and lattice conditions are exact integer arithmetic; the
    sheet condition uses B(gamma c_ref, c_ref) < 0.
    """
    try:
        g = _as_int_matrix(gamma)
    except (ValueError, QuadFormError):
        return "not-integer"
    (a, b), (_, c) = form.A
    (g11, g12), (g21, g22) = g
    # gamma^T A gamma == A, entrywise exact
    e11 = a * g11 * g11 + 2 * b * g11 * g21 + c * g21 * g21
    e12 = a * g11 * g12 + b * (g11 * g22 + g12 * g21) + c * g21 * g22
    e22 = a * g12 * g12 + 2 * b * g12 * g22 + c * g22 * g22
    if (e11, e12, e22) != (a, b, c):
        return "form-not-preserved"
    if g11 * g22 - g12 * g21 != 1:
        return "det-not-one"
    cref = form.c_ref()
    gc = (g11 * cref[0] + g12 * cref[1], g21 * cref[0] + g22 * cref[1])
    if not form.b(gc, cref) < 0:
        return "component-flipped"
    return None


def is_automorph(form: QuadraticForm, gamma) -> bool:
    """True iff gamma preserves Q, Z^2 and C_Q with det 1."""
    return automorph_failure(form, gamma) is None


def t_shift(form: QuadraticForm, gamma) -> float:
    """Translation length s with c(t + s) = gamma c(t) for all t."""
    g = np.array(_as_int_matrix(gamma), dtype=float)
    M = form.P @ g @ form.Pinv  # diag(e^s, e^-s) for a sheet-preserving gamma
    if M[0, 0] <= 0 or M[1, 1] <= 0:
        raise ComponentError("gamma does not preserve C_Q")
    return 0.5 * (math.log(M[0, 0]) - math.log(M[1, 1]))


def act_on_t(form: QuadraticForm, gamma, t: float) -> float:
    """Parameter t' with c(t') = gamma c(t)."""
    reason = automorph_failure(form, gamma)
    if reason is not None:
        raise ValueError(f"gamma is not in Aut+(Q, Z^2): {reason}")
    g = np.array(_as_int_matrix(gamma), dtype=float)
    gc = g @ np.asarray(form.geodesic(t).c)
    return form.parameter(gc)


def search_automorphs(form: QuadraticForm, entry_bound: int) -> list:
    """All gamma in Aut+(Q, Z^2) with max |entry| <= entry_bound.

    Sorted by translation length; always contains the identity.
    First columns are enumerated and the remaining column solved from
    the linear conditions (Cramer), so the cost is O(entry_bound^2).
    """
    if entry_bound < 1:
        raise ValueError("entry_bound must be >= 1")
    if entry_bound > 10**4:
        raise ValueError("entry_bound too large (max 10^4)")
    (a, b), (_, c) = form.A
    found = []
    if a != 0 or c != 0:
        swap = a == 0  # solve for column 1 from column 2 instead
        diag = c if swap else a
        B = int(entry_bound)
        rng = np.arange(-B, B + 1, dtype=np.int64)
        X, Y = np.meshgrid(rng, rng, indexing="ij")
        x, y = X.ravel(), Y.ravel()
        # enumerated column must represent the matching diagonal entry
        vals = a * x * x + 2 * b * x * y + c * y * y
        keep = vals == diag
        for x0, y0 in zip(x[keep].tolist(), y[keep].tolist()):
            if swap:
                # column 2 = (x0, y0); solve column 1
                v1 = a * x0 + b * y0
                v2 = b * x0 + c * y0
                num_a = b * x0 + v2
                num_c = b * y0 - v1
                if num_a % c or num_c % c:
                    continue
                cand = ((num_a // c, x0), (num_c // c, y0))
            else:
                # column 1 = (x0, y0); solve column 2
                u1 = a * x0 + b * y0
                u2 = b * x0 + c * y0
                num_b = b * x0 - u2
                num_d = u1 + b * y0
                if num_b % a or num_d % a:
                    continue
                cand = ((x0, num_b // a), (y0, num_d // a))
            if max(abs(e) for row in cand for e in row) > entry_bound:
                continue
            if is_automorph(form, cand):
                found.append(cand)
    else:
        # A is antidiagonal: only signed diagonal matrices can qualify
        for s1 in (1, -1):
            for s2 in (1, -1):
                cand = ((s1, 0), (0, s2))
                if is_automorph(form, cand):
                    found.append(cand)
    found = sorted(set(found), key=lambda g: t_shift(form, g))
    return found
