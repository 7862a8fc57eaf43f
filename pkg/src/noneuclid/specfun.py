"""Special functions for non-Euclidean volume computations.

Provides the Lobachevsky function, its two-argument difference, the
spherical analog delta_s with closed forms and symmetry reductions, a
two-parameter dilogarithm, and the Schlaefli series for double-rectangular
tetrahedra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from scipy.special import zeta

from .errors import DomainError, NonConvergence
from .quadrature import (DEFAULT_ABS_TOL, DEFAULT_MAX_EVALS,
                         IntegrationProblem, integrate)

_LOG2 = math.log(2.0)
_PI = math.pi
_HALF_PI = 0.5 * math.pi

# Coefficients of the expansion -log(sin t / t) = sum_n zeta(2n)/n (t/pi)^2n.
# 80 terms are far more than double precision needs on |t| <= pi/2.
_LAMBDA_COEFFS = tuple(
    float(zeta(2 * n)) / (n * (2 * n + 1) * _PI ** (2 * n))
    for n in range(1, 81)
)


def lobachevsky(x: float) -> float:
    """Lobachevsky function: -integral of log|2 sin t| from 0 to x.

    Odd and pi-periodic.  Evaluated through the power-series form of
    log(sin t / t), after reduction to [0, pi/2].
    """
    if not math.isfinite(x):
        raise DomainError("lobachevsky requires a finite argument")
    y = math.remainder(x, _PI)  # pi-periodic, y in [-pi/2, pi/2]
    sign = 1.0
    if y < 0.0:
        y = -y
        sign = -1.0
    if y == 0.0:
        return 0.0
    acc = y - y * math.log(2.0 * y)
    r2 = y * y
    p = y
    for c in _LAMBDA_COEFFS:
        p *= r2
        term = c * p
        acc += term
        if term < 1e-18:
            break
    return sign * acc


def delta_cap(alpha: float, theta: float) -> float:
    """Difference form: lobachevsky(alpha+theta) - lobachevsky(alpha-theta)."""
    return lobachevsky(alpha + theta) - lobachevsky(alpha - theta)


# --- the spherical analog delta_s ------------------------------------------

def _log_kernel(terms: Sequence[tuple[float, float]]) -> Callable[[float], float]:
    """Integrand tau -> sum_j w_j log(1 - cos(2 tau) c_j) / cos(2 tau).

    The point cos(2 tau) = 0 is removable; log1p keeps the quotient accurate
    near it without a dedicated series branch.  Terms with c = +/-1 carry
    integrable log singularities where the argument vanishes; those are
    rewritten through 2 log|sin tau| / 2 log|cos tau| so the argument never
    cancels catastrophically.
    """
    terms = tuple(terms)
    tiny = math.ulp(0.0)

    def f(tau: float) -> float:
        u = math.cos(2.0 * tau)
        acc = 0.0
        if u == 0.0:
            for w, c in terms:
                acc -= w * c
            return acc
        for w, c in terms:
            if c == 1.0 and u >= 0.5:
                lg = _LOG2 + 2.0 * math.log(abs(math.sin(tau)))
            elif c == -1.0 and u <= -0.5:
                lg = _LOG2 + 2.0 * math.log(abs(math.cos(tau)))
            else:
                arg = -u * c
                if arg <= -1.0:
                    lg = math.log(tiny)
                else:
                    lg = math.log1p(arg)
            acc += w * lg
        return acc / u

    return f


def _split_points(lo: float, hi: float) -> list[float]:
    """Multiples of pi/2 inside (lo, hi): candidate singular endpoints."""
    pts = [lo]
    k = math.floor(lo / _HALF_PI) + 1
    while k * _HALF_PI < hi:
        p = k * _HALF_PI
        if p > lo:
            pts.append(p)
        k += 1
    pts.append(hi)
    return pts


def integrate_log_kernel(terms: Sequence[tuple[float, float]], lo: float, hi: float,
                      tol: float, max_evals: int = DEFAULT_MAX_EVALS
                      ) -> tuple[float, float]:
    """Integrate the log kernel, splitting at potential singular points.

    Returns (value, error estimate).
    """
    if lo == hi:
        return 0.0, 0.0
    sign = 1.0
    if lo > hi:
        lo, hi = hi, lo
        sign = -1.0
    f = _log_kernel(terms)
    pts = _split_points(lo, hi)
    seg_tol = tol / len(pts)
    total = 0.0
    err = 0.0
    for a, b in zip(pts, pts[1:]):
        res = integrate(IntegrationProblem(f, a, b, seg_tol, max_evals))
        total += res.value
        err += res.err_estimate
    return sign * total, err


def delta_s(alpha: float, theta: float, tol: float = DEFAULT_ABS_TOL) -> float:
    """The defining integral of the spherical volume kernel:

        integral from theta to pi/2 of log(1 - cos 2 alpha cos 2 tau) dtau / cos 2 tau
    """
    c = math.cos(2.0 * alpha)
    value, _ = integrate_log_kernel([(1.0, c)], theta, _HALF_PI, tol)
    return value


_CLOSED_THETAS = (0.0, 0.25 * _PI, 0.5 * _PI, 0.75 * _PI, _PI)


def delta_alpha0(alpha: float) -> float:
    """Closed form of delta_s(alpha, 0) extended to all real alpha
    (even, pi-periodic)."""
    a = abs(math.remainder(alpha, _PI))  # in [0, pi/2]
    return _PI * (a - 0.25 * _PI)


def delta_s_closed(alpha: float, theta: float) -> float:
    """Closed values of delta_s at theta in {0, pi/4, pi/2, 3pi/4, pi},
    for alpha in [0, pi]."""
    if not (0.0 <= alpha <= _PI):
        raise DomainError("delta_s_closed requires alpha in [0, pi]")
    matches = [t for t in _CLOSED_THETAS if abs(theta - t) <= 1e-12]
    if not matches:
        raise DomainError(
            "delta_s_closed: theta must be one of 0, pi/4, pi/2, 3pi/4, pi")
    t = matches[0]
    w = _HALF_PI - abs(_HALF_PI - alpha)
    if t == 0.0:
        return _PI * (0.25 * _PI - abs(_HALF_PI - alpha))
    if t == 0.25 * _PI:
        return w * w - _PI * _PI / 16.0
    if t == 0.5 * _PI:
        return 0.0
    if t == 0.75 * _PI:
        return _PI * _PI / 16.0 - w * w
    return _PI * (abs(alpha - _HALF_PI) - 0.25 * _PI)


def arccot(x: float) -> float:
    """Inverse cotangent on the branch (0, pi)."""
    return _HALF_PI - math.atan(x)


def delta_s_arccot(alpha: float, theta: float,
                   tol: float = DEFAULT_ABS_TOL) -> float:
    """Alternate integral form of delta_s, valid for pi/2 < alpha, theta < pi:

        2 * integral from 3pi/4 to alpha of arccot(cot nu / cot theta) dnu
    """
    if not (_HALF_PI < alpha < _PI and _HALF_PI < theta < _PI):
        raise DomainError("delta_s_arccot requires pi/2 < alpha, theta < pi")
    ct = 1.0 / math.tan(theta)

    def f(nu: float) -> float:
        return arccot(math.cos(nu) / (math.sin(nu) * ct))

    res = integrate(IntegrationProblem(f, 0.75 * _PI, alpha, tol))
    return 2.0 * res.value


def delta_s_dalpha(alpha: float, theta: float) -> float:
    """Partial derivative of delta_s in alpha: 2 arccot(cot alpha tan theta)."""
    if abs(math.remainder(alpha - _HALF_PI, _PI)) < 1e-12:
        raise DomainError("derivative undefined at alpha = pi/2 + k pi")
    ta = math.tan(alpha)
    tt = math.tan(theta)
    if math.isinf(tt):
        # theta at an odd multiple of pi/2: the argument runs to +/- infinity
        return 0.0 if (tt > 0) == (ta > 0) else 2.0 * _PI
    return 2.0 * arccot(tt / ta)


def delta_s_reduced(alpha: float, theta: float,
                    tol: float = DEFAULT_ABS_TOL) -> float:
    """The bounded combination delta_s + (2 theta/pi - 1) * delta_s(alpha, 0);
    odd and pi-periodic in theta, even and pi-periodic in alpha, with
    |value| <= pi^2/4."""
    return delta_s(alpha, theta, tol) + (2.0 * theta / _PI - 1.0) * delta_alpha0(alpha)


def delta_s_extended(alpha: float, theta: float,
                     tol: float = DEFAULT_ABS_TOL) -> float:
    """delta_s for arbitrary real arguments, evaluated by reducing to a
    fundamental domain first: alpha mod pi (even), theta split as
    theta0 + k pi with the linear-periodicity correction -2k delta(alpha, 0)."""
    a = abs(math.remainder(alpha, _PI))  # in [0, pi/2], evenness + period
    k = math.floor(theta / _PI)
    theta0 = theta - k * _PI  # in [0, pi)
    return delta_s(a, theta0, tol) - 2.0 * k * delta_alpha0(a)


# --- two-parameter dilogarithm ----------------------------------------------

def dilog2(r: float, t: float, tol: float = DEFAULT_ABS_TOL) -> float:
    """Two-parameter dilogarithm:

        -(1/2) * integral from 0 to r of log(1 - 2 x cos t + x^2) dx / x

    The origin is removable.  The integrand is singular only where
    1 - 2 x cos t + x^2 = 0, i.e. x = cos t with sin t = 0; such a point
    inside the range is rejected.
    """
    ct = math.cos(t)
    if abs(math.sin(t)) < 1e-12:
        root = math.copysign(1.0, ct)
        if min(0.0, r) - 1e-15 <= root <= max(0.0, r) + 1e-15:
            raise DomainError(
                "dilog2: integrand singularity at x = +/-1 lies in the range")

    def f(x: float) -> float:
        if x == 0.0:
            return -2.0 * ct
        arg = x * (x - 2.0 * ct)
        if arg <= -1.0:
            return math.log(math.ulp(0.0)) / x
        return math.log1p(arg) / x

    if r == 0.0:
        return 0.0
    # split at |x| = 1 where the near-singular behaviour concentrates
    pts = [0.0]
    if abs(r) > 1.0:
        pts.append(math.copysign(1.0, r))
    pts.append(r)
    total = 0.0
    for a, b in zip(pts, pts[1:]):
        total += integrate(IntegrationProblem(f, a, b, tol / len(pts))).value
    return -0.5 * total


# --- Schlaefli series --------------------------------------------------------

@dataclass(frozen=True)
class SchlaefliArgs:
    """Angles of a double-rectangular tetrahedron together with the derived
    quantities D and X of the series."""
    alpha: float
    beta: float
    gamma: float
    D: float = field(init=False)
    X: float = field(init=False)

    def __post_init__(self) -> None:
        if not (0.0 <= self.alpha <= _HALF_PI):
            raise DomainError("alpha must lie in [0, pi/2]")
        if not (0.0 <= self.beta <= _PI):
            raise DomainError("beta must lie in [0, pi]")
        if not (0.0 <= self.gamma <= _HALF_PI):
            raise DomainError("gamma must lie in [0, pi/2]")
        d2 = (math.cos(self.alpha) * math.cos(self.gamma)) ** 2 \
            - math.cos(self.beta) ** 2
        if d2 < 0.0:
            raise DomainError("D is imaginary: cos^2 a cos^2 c < cos^2 b")
        d = math.sqrt(d2)
        sg = math.sin(self.alpha) * math.sin(self.gamma)
        object.__setattr__(self, "D", d)
        object.__setattr__(self, "X", (sg - d) / (sg + d))


_SERIES_MAX_TERMS = 5_000_000


def schlaefli_series(args: SchlaefliArgs, tol: float = 1e-12) -> float:
    """Series for the Schlaefli function:

        sum_n (-X)^n / n^2 (cos 2n a - cos 2n b + cos 2n c - 1)
            - a^2 + b^2 - c^2

    truncated when the term bound 4 |X|^n / n^2 drops below tol.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    x = args.X
    if abs(x) > 1.0 - 1e-12:
        raise DomainError("Schlaefli series requires |X| < 1")
    a2, b2, g2 = 2.0 * args.alpha, 2.0 * args.beta, 2.0 * args.gamma
    acc = 0.0
    comp = 0.0  # Kahan compensation
    p = 1.0
    for n in range(1, _SERIES_MAX_TERMS + 1):
        p *= -x
        bound = 4.0 * abs(p) / (n * n)
        term = p / (n * n) * (math.cos(n * a2) - math.cos(n * b2)
                              + math.cos(n * g2) - 1.0)
        y = term - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
        if bound < tol:
            break
    else:
        raise NonConvergence("Schlaefli series did not reach tolerance")
    return acc - args.alpha ** 2 + args.beta ** 2 - args.gamma ** 2
