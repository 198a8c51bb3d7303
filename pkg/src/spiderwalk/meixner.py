"""Free Meixner laws and their orthogonal polynomials.

A free Meixner law here is the probability measure mu whose Jacobi
coefficients are constant after the first step:

    omega_1, omega, omega, ...     (off-diagonal squares)
    0, alpha, alpha, ...           (diagonal)

Its absolutely continuous part lives on [alpha - 2 sqrt(omega),
alpha + 2 sqrt(omega)] with density

    rho(x) = (omega_1 / 2 pi) * sqrt(4 omega - (x - alpha)^2) / D(x),
    D(x) = (omega - omega_1) x^2 + omega_1 alpha x + omega_1^2,

plus at most two atoms at the real roots of D outside that interval.

The reduced spidernet walk with parameters (p, q, r) produces the member
(omega_1, omega, alpha) = (q, pq, r), restricted to p >= q > 0, r >= 0.
In that regime the only possible atom sits at xi = -q / (1 - p) with mass

    w = max((1-p)^2 - pq, 0) / ((1-p) (1-p+q)),

and the spectral amplitudes of the walk are integrals of Chebyshev
polynomials against mu, which is what :func:`integrate` is tuned for: the
substitution x = alpha + 2 sqrt(omega) cos(phi) turns the density factor
into the smooth sin^2(phi) / D(x(phi)), so Gauss-Legendre in phi
converges geometrically for polynomial integrands.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre

from .errors import (
    InvalidParamsError,
    OutOfDomainError,
    OutOfSupportError,
    ParamsOutOfRangeError,
)
from .reduction import PqParams

__all__ = [
    "FreeMeixnerLaw",
    "law_from_pq",
    "density",
    "chebyshev_U",
    "orth_poly_recurrence",
    "orth_poly_closed_cheb",
    "orth_poly_closed_R",
    "normalized_p",
    "normalized_sequence",
    "special_value",
    "QuadratureSpec",
    "integrate",
]


@dataclass(frozen=True)
class FreeMeixnerLaw:
    """Free Meixner law with Jacobi data (omega1; omega constant tail) and
    diagonal (0; alpha constant tail), plus an optional single atom.

    ``atom_mass == 0`` means no atom; the walk laws built by
    :func:`law_from_pq` always record the candidate atom location, with
    zero mass in the non-localized regime.
    """

    omega1: float
    omega: float
    alpha: float
    atom_location: float | None = None
    atom_mass: float = 0.0

    def __post_init__(self) -> None:
        if not (self.omega1 > 0 and self.omega > 0):
            raise InvalidParamsError("omega1 and omega must be positive")
        if not 0.0 <= self.atom_mass <= 1.0:
            raise InvalidParamsError(f"atom mass must lie in [0, 1], got {self.atom_mass}")
        if self.atom_mass > 0 and self.atom_location is None:
            raise InvalidParamsError("an atom with positive mass needs a location")

    @property
    def support(self) -> tuple[float, float]:
        """Endpoints of the absolutely continuous part."""
        h = 2.0 * np.sqrt(self.omega)
        return (self.alpha - h, self.alpha + h)

    @property
    def has_atom(self) -> bool:
        return self.atom_mass > 0.0

    def denominator(self, x):
        """The polynomial D(x) dividing the density."""
        o1, om, al = self.omega1, self.omega, self.alpha
        return (om - o1) * x * x + o1 * al * x + o1 * o1


def law_from_pq(params: PqParams) -> FreeMeixnerLaw:
    """Spectral law of the reduced walk: (omega1, omega, alpha) = (q, pq, r).

    Only p >= q is admissible; the atom candidate is xi = -q/(1-p) with
    mass ((1-p)^2 - pq) / ((1-p)(1-p+q)) clamped at zero.
    """
    p, q, r = params.p, params.q, params.r
    if p < q:
        raise ParamsOutOfRangeError(f"needs p >= q, got p={p} < q={q}")
    xi = -q / (1.0 - p)
    mass = max(((1.0 - p) ** 2 - p * q) / ((1.0 - p) * (1.0 - p + q)), 0.0)
    return FreeMeixnerLaw(q, p * q, r, xi, mass)


def density(law: FreeMeixnerLaw, x):
    """Absolutely continuous density rho(x); scalar or array argument.

    Raises OutOfSupportError if any point lies outside the closed support
    (up to a 1e-12 slack for endpoint roundoff).
    """
    arr = np.asarray(x, dtype=float)
    lo, hi = law.support
    if np.any(arr < lo - 1e-12) or np.any(arr > hi + 1e-12):
        raise OutOfSupportError(f"point outside the support [{lo}, {hi}]")
    radicand = np.maximum(4.0 * law.omega - (arr - law.alpha) ** 2, 0.0)
    out = (law.omega1 / (2.0 * np.pi)) * np.sqrt(radicand) / law.denominator(arr)
    return out if out.ndim else float(out)


def chebyshev_U(n: int, x):
    """Chebyshev polynomial of the second kind, U_n(cos t) = sin((n+1)t)/sin t.

    Evaluated by the forward recurrence, which is stable on and off
    [-1, 1] for the moderate degrees used here.
    """
    if n < -1:
        raise OutOfDomainError("U_n is defined for n >= -1")
    arr = np.asarray(x, dtype=float)
    if n == -1:
        out = np.zeros_like(arr)
        return out if out.ndim else float(out)
    prev = np.zeros_like(arr)          # U_{-1}
    cur = np.ones_like(arr)            # U_0
    for _ in range(n):
        prev, cur = cur, 2.0 * arr * cur - prev
    return cur if cur.ndim else float(cur)


def _monic_sequence(law: FreeMeixnerLaw, nmax: int, x: np.ndarray) -> np.ndarray:
    """All monic orthogonal polynomials P_0..P_nmax at x, shape (nmax+1, len(x))."""
    out = np.empty((nmax + 1, len(x)))
    out[0] = 1.0
    if nmax >= 1:
        out[1] = x                      # first diagonal coefficient is 0
    for k in range(1, nmax):
        om = law.omega1 if k == 1 else law.omega
        out[k + 1] = (x - law.alpha) * out[k] - om * out[k - 1]
    return out


def orth_poly_recurrence(law: FreeMeixnerLaw, n: int, x):
    """Monic orthogonal polynomial P_n(x) by the three-term recurrence

        P_0 = 1,  P_1 = x,  x P_k = P_{k+1} + alpha P_k + omega_k P_{k-1},

    with omega_1 = omega1 and omega_k = omega afterwards."""
    if n < 0:
        raise OutOfDomainError("polynomial degree must be non-negative")
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    val = _monic_sequence(law, n, arr)[n]
    return val if np.ndim(x) else float(val[0])


def orth_poly_closed_cheb(law: FreeMeixnerLaw, n: int, x):
    """P_n(x) in closed Chebyshev form, valid for all real x:

        P_n = om^{n/2} W_n + alpha om^{(n-1)/2} W_{n-1}
              + (om - om1) om^{(n-2)/2} W_{n-2},   n >= 2,

    where W_k(y) = U_k((x - alpha) / (2 sqrt(om)))."""
    if n < 0:
        raise OutOfDomainError("polynomial degree must be non-negative")
    arr = np.asarray(x, dtype=float)
    if n == 0:
        out = np.ones_like(arr)
        return out if out.ndim else float(out)
    if n == 1:
        return arr if np.ndim(x) else float(arr)
    o1, om, al = law.omega1, law.omega, law.alpha
    y = (arr - al) / (2.0 * np.sqrt(om))
    out = (om ** (n / 2.0) * chebyshev_U(n, y)
           + al * om ** ((n - 1) / 2.0) * chebyshev_U(n - 1, y)
           + (om - o1) * om ** ((n - 2) / 2.0) * chebyshev_U(n - 2, y))
    return out if np.ndim(x) else float(out)


def orth_poly_closed_R(law: FreeMeixnerLaw, n: int, x):
    """P_n(x) in resolvent form, valid where (x - alpha)^2 > 4 omega:

        R_pm = (x - alpha) pm sqrt((x - alpha)^2 - 4 omega),
        P_n = ((x R_+ - 2 omega1) R_+^{n-1} - (x R_- - 2 omega1) R_-^{n-1})
              / (2^{n-1} (R_+ - R_-)).
    """
    if n < 0:
        raise OutOfDomainError("polynomial degree must be non-negative")
    arr = np.asarray(x, dtype=float)
    if n == 0:
        out = np.ones_like(arr)
        return out if out.ndim else float(out)
    disc = (arr - law.alpha) ** 2 - 4.0 * law.omega
    if np.any(disc <= 0):
        raise OutOfDomainError("resolvent form needs (x - alpha)^2 > 4 omega")
    root = np.sqrt(disc)
    rp = (arr - law.alpha) + root
    rm = (arr - law.alpha) - root
    out = ((arr * rp - 2.0 * law.omega1) * rp ** (n - 1)
           - (arr * rm - 2.0 * law.omega1) * rm ** (n - 1)) / (2.0 ** (n - 1) * (rp - rm))
    return out if np.ndim(x) else float(out)


def normalized_p(law: FreeMeixnerLaw, n: int, x):
    """Orthonormal polynomial p_n = P_n / sqrt(omega1 * omega^{n-1}) (p_0 = 1)."""
    if n == 0:
        arr = np.asarray(x, dtype=float)
        out = np.ones_like(arr)
        return out if np.ndim(x) else 1.0
    scale = np.sqrt(law.omega1 * law.omega ** (n - 1))
    val = orth_poly_recurrence(law, n, x)
    return val / scale


def normalized_sequence(law: FreeMeixnerLaw, nmax: int, x: np.ndarray) -> np.ndarray:
    """p_0..p_nmax at x, shape (nmax+1, len(x)); used by the integrators."""
    monic = _monic_sequence(law, nmax, x)
    scales = np.ones(nmax + 1)
    if nmax >= 1:
        scales[1:] = np.sqrt(law.omega1 * law.omega ** (np.arange(1, nmax + 1) - 1.0))
    return monic / scales[:, None]


def special_value(params: PqParams, n: int) -> float:
    """Closed-form p_n at the atom location xi = -q/(1-p) of the walk law:

        p_n(xi) = (1/sqrt(p)) * (-sqrt(pq) / (1-p))^n,   n >= 1,

    valid in the atomic regime (1-p)^2 > pq."""
    if n < 0:
        raise OutOfDomainError("polynomial degree must be non-negative")
    if n == 0:
        return 1.0
    p, q = params.p, params.q
    if (1.0 - p) ** 2 - p * q <= 0:
        raise ParamsOutOfRangeError(
            "the closed form needs (1-p)^2 > pq (atomic regime)")
    return (1.0 / np.sqrt(p)) * (-np.sqrt(p * q) / (1.0 - p)) ** n


@dataclass(frozen=True)
class QuadratureSpec:
    """Node budget for :func:`integrate`; only Gauss-Legendre is provided.

    ``for_order`` picks the default budget for an integrand that
    oscillates/varies like a degree-``order`` Chebyshev polynomial over
    the support: 16 nodes per unit of order, floored at 2048 and rounded
    up to a power of two so that rules are shared across nearby orders.
    """

    nodes: int = 2048
    scheme: str = "gauss-legendre"

    def __post_init__(self) -> None:
        if self.nodes < 2:
            raise InvalidParamsError("quadrature needs at least 2 nodes")
        if self.scheme != "gauss-legendre":
            raise InvalidParamsError(f"unknown quadrature scheme {self.scheme!r}")

    @classmethod
    def for_order(cls, order: int) -> "QuadratureSpec":
        needed = max(2048, 16 * max(order, 0))
        return cls(nodes=1 << (needed - 1).bit_length())


@lru_cache(maxsize=32)
def _phi_rule(nodes: int):
    t, w = roots_legendre(nodes)
    return 0.5 * np.pi * (t + 1.0), 0.5 * np.pi * w


def integrate(law: FreeMeixnerLaw, f, spec: QuadratureSpec | None = None) -> float:
    """Integral of f against the law (absolutely continuous part + atom).

    ``f`` must accept a float ndarray and return values elementwise.  The
    continuous part is computed after substituting
    x = alpha + 2 sqrt(omega) cos(phi), which makes the integrand
    sin^2(phi) / D(x(phi)) smooth even when D vanishes at a support
    endpoint; Gauss-Legendre nodes never touch the endpoints.
    """
    if spec is None:
        spec = QuadratureSpec()
    phi, w = _phi_rule(spec.nodes)
    x = law.alpha + 2.0 * np.sqrt(law.omega) * np.cos(phi)
    g = f(x) * np.sin(phi) ** 2 / law.denominator(x)
    total = (2.0 * law.omega1 * law.omega / np.pi) * float(np.dot(g, w))
    if law.has_atom:
        total += law.atom_mass * float(np.asarray(f(np.array([law.atom_location])))[0])
    return total
