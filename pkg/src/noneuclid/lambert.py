"""Lambert cube geometry: classification, principal parameter, edge lengths,
and volume by several independent routes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from . import specfun
from .errors import DomainError
from .quadrature import (DEFAULT_ABS_TOL, IntegrationProblem, integrate,
                         integrate_semiinfinite)

_PI = math.pi
_HALF_PI = 0.5 * math.pi

# tan overflows at the right-angle boundary; the open angle boxes are strict
_BOUNDARY_MARGIN = 1e-9


class GeometryClass(Enum):
    SPHERICAL = "spherical"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class CubeAngles:
    """The three essential dihedral angles and their geometry class."""
    alpha: float
    beta: float
    gamma: float
    klass: GeometryClass


@dataclass(frozen=True)
class PrincipalData:
    """Tangents L, M, N, the principal parameter (T, theta), and for the
    spherical cube the box ratios A, B, C."""
    L: float
    M: float
    N: float
    p: float
    T: float
    theta: float
    A: Optional[float]
    B: Optional[float]
    C: Optional[float]
    klass: GeometryClass


@dataclass(frozen=True)
class EdgeLengths:
    l_alpha: float
    l_beta: float
    l_gamma: float


@dataclass(frozen=True)
class EuclideanRealization:
    """Coordinates a, b, c of the Euclidean polyhedron whose projection is
    the spherical cube."""
    a: float
    b: float
    c: float


def classify(alpha: float, beta: float, gamma: float) -> CubeAngles:
    """Classify an essential-angle triple as spherical or hyperbolic."""
    angles = (alpha, beta, gamma)
    if any(not math.isfinite(a) for a in angles):
        raise DomainError("angles must be finite")
    if any(abs(a - _HALF_PI) < _BOUNDARY_MARGIN for a in angles):
        raise DomainError("angles too close to pi/2: geometry degenerates")
    if all(_HALF_PI < a < _PI for a in angles):
        return CubeAngles(alpha, beta, gamma, GeometryClass.SPHERICAL)
    if all(0.0 < a < _HALF_PI for a in angles):
        return CubeAngles(alpha, beta, gamma, GeometryClass.HYPERBOLIC)
    raise DomainError(
        "angles must all lie in (0, pi/2) or all in (pi/2, pi)")


def _principal_t_squared(p: float, q: float, spherical: bool) -> float:
    """Positive root s = T^2 of s^2 + 2ps - q = 0 (spherical) or
    s^2 - 2ps - q = 0 (hyperbolic), in cancellation-free form, polished by
    one Newton step."""
    root = math.sqrt(p * p + q)
    if spherical:
        s = q / (p + root)  # equals -p + sqrt(p^2+q) without cancellation
        s -= (s * s + 2.0 * p * s - q) / (2.0 * s + 2.0 * p)
    else:
        s = p + root
        s -= (s * s - 2.0 * p * s - q) / (2.0 * s - 2.0 * p)
    return s


def principal_spherical(angles: CubeAngles) -> PrincipalData:
    """Principal parameter of the spherical cube: the negative root T of
    T^4 + 2 p T^2 = (LMN)^2, with theta = pi + arctan T in (pi/2, pi) and
    the box ratios A, B, C."""
    if angles.klass is not GeometryClass.SPHERICAL:
        raise DomainError("principal_spherical requires a spherical cube")
    L = math.tan(angles.alpha)
    M = math.tan(angles.beta)
    N = math.tan(angles.gamma)
    p = (L * L + M * M + N * N + 1.0) / 2.0
    q = (L * M * N) ** 2
    s = _principal_t_squared(p, q, spherical=True)
    T = -math.sqrt(s)
    theta = _PI + math.atan(T)
    A = math.sqrt((s + M * M) / (1.0 + N * N))
    B = math.sqrt((s + N * N) / (1.0 + L * L))
    C = math.sqrt((s + L * L) / (1.0 + M * M))
    return PrincipalData(L, M, N, p, T, theta, A, B, C,
                         GeometryClass.SPHERICAL)


def principal_hyperbolic(angles: CubeAngles) -> PrincipalData:
    """Principal parameter of the hyperbolic cube: T > 0 with
    T^2 = p + sqrt(p^2 + (LMN)^2) and theta = arctan T in (pi/4, pi/2)."""
    if angles.klass is not GeometryClass.HYPERBOLIC:
        raise DomainError("principal_hyperbolic requires a hyperbolic cube")
    L = math.tan(angles.alpha)
    M = math.tan(angles.beta)
    N = math.tan(angles.gamma)
    p = (L * L + M * M + N * N + 1.0) / 2.0
    q = (L * M * N) ** 2
    s = _principal_t_squared(p, q, spherical=False)
    T = math.sqrt(s)
    return PrincipalData(L, M, N, p, T, math.atan(T), None, None, None,
                         GeometryClass.HYPERBOLIC)


def abc(pd: PrincipalData) -> tuple[float, float, float]:
    """The positive box ratios (A, B, C); satisfies T = -A B C."""
    if pd.klass is not GeometryClass.SPHERICAL or pd.A is None:
        raise DomainError("A, B, C are defined only for the spherical cube")
    return pd.A, pd.B, pd.C


def euclidean_realization(A: float, B: float, C: float) -> EuclideanRealization:
    """Coordinates of the underlying Euclidean polyhedron:
    a = 1 + 1/A^2 etc."""
    if not (A > 0.0 and B > 0.0 and C > 0.0):
        raise DomainError("A, B, C must be positive")
    return EuclideanRealization(1.0 + 1.0 / (A * A),
                                1.0 + 1.0 / (B * B),
                                1.0 + 1.0 / (C * C))


def edge_lengths_spherical(pd: PrincipalData) -> EdgeLengths:
    """Spherical lengths of the three essential edges,
    tan l_a = sqrt(A^2+1)/(A B) etc.; all lie in (0, pi/2)."""
    A, B, C = abc(pd)
    l_a = math.atan(math.sqrt(A * A + 1.0) / (A * B))
    l_b = math.atan(math.sqrt(B * B + 1.0) / (B * C))
    l_c = math.atan(math.sqrt(C * C + 1.0) / (A * C))
    return EdgeLengths(l_a, l_b, l_c)


# --- volumes -----------------------------------------------------------------

def _spherical_volume_detail(angles: CubeAngles,
                             tol: float) -> tuple[float, float, PrincipalData]:
    pd = principal_spherical(angles)
    th = pd.theta
    cs = [math.cos(2.0 * a) for a in (angles.alpha, angles.beta, angles.gamma)]
    total = 0.0
    err = 0.0
    for c in cs:
        v, e = specfun.integrate_log_kernel([(1.0, c)], th, _HALF_PI, tol / 5.0)
        total += v
        err += e
    v, e = specfun.integrate_log_kernel([(1.0, -1.0)], th, _HALF_PI, tol / 5.0)
    total -= 2.0 * v
    err += 2.0 * e
    v, e = specfun.integrate_log_kernel([(1.0, 1.0)], th, _HALF_PI, tol / 5.0)
    total -= v
    err += e
    return total / 4.0, err / 4.0, pd


def volume_spherical(angles: CubeAngles, tol: float = DEFAULT_ABS_TOL) -> float:
    """Volume of the spherical cube via the five-term delta_s combination."""
    if angles.klass is not GeometryClass.SPHERICAL:
        raise DomainError("volume_spherical requires a spherical cube")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    return _spherical_volume_detail(angles, tol)[0]


def volume_spherical_integral(angles: CubeAngles,
                              tol: float = DEFAULT_ABS_TOL,
                              method: str = "transformed") -> float:
    """Volume of the spherical cube by the direct integral over the
    principal-parameter ray.

    method="transformed" folds all five log factors into one finite
    integral via t = tan(tau); method="ray" integrates the original
    improper integral over (-inf, T], bridging the removable point t = -1.
    """
    if angles.klass is not GeometryClass.SPHERICAL:
        raise DomainError("volume_spherical_integral requires a spherical cube")
    pd = principal_spherical(angles)
    cs = [math.cos(2.0 * a) for a in (angles.alpha, angles.beta, angles.gamma)]

    if method == "transformed":
        terms = [(1.0, cs[0]), (1.0, cs[1]), (1.0, cs[2]),
                 (-2.0, -1.0), (-1.0, 1.0)]
        v, _ = specfun.integrate_log_kernel(terms, pd.theta, _HALF_PI, tol)
        return v / 4.0
    if method == "ray":
        f = _ray_integrand([(1.0, pd.L * pd.L), (1.0, pd.M * pd.M),
                            (1.0, pd.N * pd.N), (-1.0, 0.0)])
        res = integrate_semiinfinite(f, pd.T, tol, direction="down")
        return res.value / 4.0
    raise ValueError("method must be 'transformed' or 'ray'")


def _ray_integrand(factors):
    """Integrand t -> sum_j w_j log((t^2 + a_j)/(1 + a_j)) / (t^2 - 1).

    `factors` is a list of (weight, a_j); a_j = 0 contributes log t^2.
    The zero of the numerator at t^2 = 1 makes t = +/-1 removable; near it
    the quotient is evaluated by a Taylor expansion in s - 1, s = t^2.
    """
    factors = tuple(factors)

    def f(t: float) -> float:
        s = t * t
        d = s - 1.0
        if abs(d) < 1e-5:
            c1 = c2 = c3 = 0.0
            for w, a in factors:
                r = 1.0 / (1.0 + a)
                c1 += w * r
                c2 -= w * r * r
                c3 += 2.0 * w * r ** 3
            return c1 + 0.5 * c2 * d + c3 * d * d / 6.0
        acc = 0.0
        for w, a in factors:
            if a == 0.0:
                acc += w * math.log(s)
            else:
                acc += w * (math.log(s + a) - math.log1p(a))
        return acc / d

    return f


def volume_hyperbolic(angles: CubeAngles, tol: float = DEFAULT_ABS_TOL) -> float:
    """Volume of the hyperbolic cube via the Lobachevsky-difference
    combination at the hyperbolic principal parameter."""
    if angles.klass is not GeometryClass.HYPERBOLIC:
        raise DomainError("volume_hyperbolic requires a hyperbolic cube")
    pd = principal_hyperbolic(angles)
    th = pd.theta
    d = specfun.delta_cap
    return (d(angles.alpha, th) + d(angles.beta, th) + d(angles.gamma, th)
            - 2.0 * d(_HALF_PI, th) - d(0.0, th)) / 4.0


def volume_special_family(alpha: float, beta: float,
                          tol: float = DEFAULT_ABS_TOL) -> tuple[float, float]:
    """For the family cos^2 a + cos^2 b + cos^2 c = 1: returns the induced
    gamma in (pi/2, pi) and the closed-form volume
    (pi^2/2 - (pi-a)^2 - (pi-b)^2 - (pi-c)^2) / 4."""
    if not (_HALF_PI < alpha < _PI and _HALF_PI < beta < _PI):
        raise DomainError("alpha and beta must lie in (pi/2, pi)")
    k = 1.0 - math.cos(alpha) ** 2 - math.cos(beta) ** 2
    if k <= 0.0:
        raise DomainError("cos^2 alpha + cos^2 beta must be below 1")
    gamma = _PI - math.acos(math.sqrt(k))
    vol = (0.5 * _PI * _PI - (_PI - alpha) ** 2 - (_PI - beta) ** 2
           - (_PI - gamma) ** 2) / 4.0
    return gamma, vol


def volume_singular(alpha: float, beta: float) -> float:
    """Volume of the singular cube with the third angle equal to pi:
    (alpha + beta - pi) * pi."""
    if not (_HALF_PI < alpha < _PI and _HALF_PI < beta < _PI):
        raise DomainError("alpha and beta must lie in (pi/2, pi)")
    return (alpha + beta - _PI) * _PI
