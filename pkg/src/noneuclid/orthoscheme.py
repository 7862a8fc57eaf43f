"""Double-rectangular tetrahedra: curvature classification, volume by three
routes (Schlaefli series, delta_s combination, direct integral), and the
Tangent/Cosine rules for the spherical case."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from . import specfun
from .errors import DomainError
from .lambert import _ray_integrand
from .quadrature import DEFAULT_ABS_TOL, integrate_semiinfinite

_PI = math.pi
_HALF_PI = 0.5 * math.pi

_EUCLIDEAN_EPS = 1e-12
_DEGENERATE_EPS = 1e-12


class Curvature(Enum):
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class OrthoschemeAngles:
    """Reduced angles (a, b, c); the tetrahedron carries dihedral angles
    pi/2 - a, b and pi/2 - c."""
    alpha: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.alpha <= _HALF_PI):
            raise DomainError("alpha must lie in [0, pi/2]")
        if not (0.0 <= self.beta <= _PI):
            raise DomainError("beta must lie in [0, pi]")
        if not (0.0 <= self.gamma <= _HALF_PI):
            raise DomainError("gamma must lie in [0, pi/2]")


@dataclass(frozen=True)
class OrthoschemeData:
    curvature: Curvature
    D: float
    X: Optional[float]
    T: Optional[float]
    theta: Optional[float]


def classify_orthoscheme(angles: OrthoschemeAngles) -> OrthoschemeData:
    """Curvature from the sign of cos^2 a cos^2 c - cos^2 b; for the
    spherical case also D, X, T = sin a sin c / D and theta = arctan T."""
    d2 = (math.cos(angles.alpha) * math.cos(angles.gamma)) ** 2 \
        - math.cos(angles.beta) ** 2
    if d2 < -_EUCLIDEAN_EPS:
        return OrthoschemeData(Curvature.HYPERBOLIC, 0.0, None, None, None)
    if d2 <= _EUCLIDEAN_EPS:
        return OrthoschemeData(Curvature.EUCLIDEAN, 0.0, None, None, None)
    d = math.sqrt(d2)
    sg = math.sin(angles.alpha) * math.sin(angles.gamma)
    x = (sg - d) / (sg + d)
    t = sg / d
    return OrthoschemeData(Curvature.SPHERICAL, d, x, t, math.atan(t))


def _require_spherical(angles: OrthoschemeAngles) -> OrthoschemeData:
    if min(angles.alpha, angles.gamma) < _DEGENERATE_EPS or \
            min(_HALF_PI - angles.alpha, _HALF_PI - angles.gamma) < _DEGENERATE_EPS:
        raise DomainError("alpha and gamma must lie strictly inside (0, pi/2)")
    data = classify_orthoscheme(angles)
    if data.curvature is Curvature.HYPERBOLIC:
        raise DomainError("volume formulas implemented for the spherical case only")
    return data


def volume_orthoscheme_schlaefli(angles: OrthoschemeAngles,
                                 tol: float = 1e-12) -> float:
    """Volume as one quarter of the Schlaefli series; 0 on the Euclidean
    boundary."""
    data = _require_spherical(angles)
    if data.curvature is Curvature.EUCLIDEAN:
        return 0.0
    args = specfun.SchlaefliArgs(angles.alpha, angles.beta, angles.gamma)
    return specfun.schlaefli_series(args, tol) / 4.0


def volume_via_delta(angles: OrthoschemeAngles,
                     tol: float = DEFAULT_ABS_TOL) -> float:
    """Volume via the four-term delta_s combination at theta."""
    data = _require_spherical(angles)
    if data.curvature is Curvature.EUCLIDEAN:
        return 0.0
    th = data.theta
    d = specfun.delta_s
    seg = tol / 4.0
    s = (-d(angles.alpha, th, seg) + d(angles.beta, th, seg)
         - d(angles.gamma, th, seg) + d(0.0, th, seg))
    return s / 4.0


def volume_orthoscheme_integral(angles: OrthoschemeAngles,
                                tol: float = DEFAULT_ABS_TOL) -> float:
    """Volume by the direct improper integral over [T, +inf), with the
    removable point t = 1 bridged when T < 1.

    beta = pi/2 makes tan(beta) blow up; its log factor is then the
    B -> infinity limit, which drops out of the integrand entirely.
    """
    data = _require_spherical(angles)
    if data.curvature is Curvature.EUCLIDEAN:
        return 0.0
    A2 = math.tan(angles.alpha) ** 2
    C2 = math.tan(angles.gamma) ** 2
    factors = [(-1.0, A2), (-1.0, C2), (1.0, 0.0)]
    B2 = math.tan(angles.beta) ** 2
    if B2 < 1e28:  # else (t^2+B^2)/(1+B^2) ~ 1 and contributes nothing
        factors.append((1.0, B2))
    f = _ray_integrand(factors)
    res = integrate_semiinfinite(f, data.T, tol, direction="up")
    # the integral as printed carries the opposite sign; negating makes it
    # agree with the series and delta_s routes (checked numerically)
    return -res.value / 4.0


def orthoscheme_edges(data: OrthoschemeData,
                      angles: OrthoschemeAngles) -> tuple[float, float, float]:
    """Edge lengths from the Tangent Rule tan(angle)/tan(length) = T.

    a and c lie in (0, pi/2); b lies in (0, pi), landing above pi/2 exactly
    when beta does (b = pi/2 at beta = pi/2 is taken as the limit value).
    """
    if data.curvature is not Curvature.SPHERICAL or data.T is None:
        raise DomainError("edges are defined for the spherical case only")
    t = data.T
    a = math.atan(math.tan(angles.alpha) / t)
    c = math.atan(math.tan(angles.gamma) / t)
    if abs(angles.beta - _HALF_PI) < 1e-15:
        b = _HALF_PI
    else:
        b = math.atan(math.tan(angles.beta) / t)
        if b < 0.0:
            b += _PI
    return a, b, c
