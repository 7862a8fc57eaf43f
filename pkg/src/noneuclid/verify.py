"""Machine-runnable identity checks.

Every cross-formula relation of the library is packaged as a named check
returning a CheckReport with the worst residual observed, so the whole
theory can be re-validated with one call.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from . import lambert, orthoscheme, specfun
from .quadrature import IntegrationProblem, integrate

_PI = math.pi
_HALF_PI = 0.5 * math.pi

# random draws stay this far away from every domain boundary
_MARGIN = 0.05


@dataclass
class CheckReport:
    name: str
    max_residual: float
    tolerance: float
    sample_count: int
    passed: bool
    details: list[tuple[tuple, float]] = field(default_factory=list)

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] {self.name}: max residual {self.max_residual:.3e} "
                f"(tol {self.tolerance:.1e}, {self.sample_count} samples)")


def _report(name: str, tol: float, residuals: list[tuple[tuple, float]]
            ) -> CheckReport:
    worst = max((r for _, r in residuals), default=0.0)
    failures = [(inp, r) for inp, r in residuals if r > tol]
    return CheckReport(name, worst, tol, len(residuals), worst <= tol, failures)


def _spherical_triples(samples: int, seed: int) -> list[tuple[float, float, float]]:
    rng = random.Random(seed)
    lo, hi = _HALF_PI + _MARGIN, _PI - _MARGIN
    return [(rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi))
            for _ in range(samples)]


def _spherical_orthoschemes(samples: int, seed: int
                            ) -> list[orthoscheme.OrthoschemeAngles]:
    rng = random.Random(seed)
    out = []
    while len(out) < samples:
        a = rng.uniform(_MARGIN, _HALF_PI - _MARGIN)
        g = rng.uniform(_MARGIN, _HALF_PI - _MARGIN)
        # spherical curvature needs cos^2 b < cos^2 a cos^2 g; keep b below
        # pi/2 so all derived lengths stay in (0, pi/2)
        b_lo = math.acos(math.cos(a) * math.cos(g))
        if b_lo + 0.02 >= _HALF_PI - _MARGIN:
            continue
        b = rng.uniform(b_lo + 0.02, _HALF_PI - _MARGIN)
        out.append(orthoscheme.OrthoschemeAngles(a, b, g))
    return out


def check_tangent_rule(samples: int = 50, seed: int = 42) -> CheckReport:
    """tan(angle)/tan(edge length) equals the principal parameter T for all
    three essential edges."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    residuals = []
    for trip in _spherical_triples(samples, seed):
        pd = lambert.principal_spherical(lambert.classify(*trip))
        el = lambert.edge_lengths_spherical(pd)
        ratios = (math.tan(trip[0]) / math.tan(el.l_alpha),
                  math.tan(trip[1]) / math.tan(el.l_beta),
                  math.tan(trip[2]) / math.tan(el.l_gamma))
        dev = max(abs(r - pd.T) for r in ratios) / abs(pd.T)
        residuals.append((trip, dev))
    return _report("tangent rule", 1e-10, residuals)


def check_sine_cosine(samples: int = 50, seed: int = 42) -> CheckReport:
    """(sin a/sin l_a)(sin b/sin l_b)(cos c/cos l_c) = -1 and its two cyclic
    relabelings."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    residuals = []
    for trip in _spherical_triples(samples, seed):
        pd = lambert.principal_spherical(lambert.classify(*trip))
        el = lambert.edge_lengths_spherical(pd)
        pairs = list(zip(trip, (el.l_alpha, el.l_beta, el.l_gamma)))
        worst = 0.0
        for shift in range(3):
            p = pairs[shift:] + pairs[:shift]
            prod = (math.sin(p[0][0]) / math.sin(p[0][1])
                    * math.sin(p[1][0]) / math.sin(p[1][1])
                    * math.cos(p[2][0]) / math.cos(p[2][1]))
            worst = max(worst, abs(prod + 1.0))
        residuals.append((trip, worst))
    return _report("sine-cosine rule", 1e-10, residuals)


def check_schlaefli_derivative(samples: int = 10, step: float = 1e-4,
                               seed: int = 42) -> CheckReport:
    """Central differences of the volume match half the edge lengths:
    +l/2 per angle for the cube, (-a/2, +b/2, -c/2) for the orthoscheme."""
    if step <= 0.0:
        raise ValueError("step must be positive")
    qtol = 1e-12  # keeps finite-difference noise well below the tolerance
    residuals = []
    for trip in _spherical_triples(samples, seed):
        pd = lambert.principal_spherical(lambert.classify(*trip))
        el = lambert.edge_lengths_spherical(pd)
        lengths = (el.l_alpha, el.l_beta, el.l_gamma)
        worst = 0.0
        for i in range(3):
            hi = list(trip)
            lo = list(trip)
            hi[i] += step
            lo[i] -= step
            dv = (lambert.volume_spherical(lambert.classify(*hi), qtol)
                  - lambert.volume_spherical(lambert.classify(*lo), qtol)
                  ) / (2.0 * step)
            worst = max(worst, abs(dv - 0.5 * lengths[i]))
        residuals.append((trip, worst))
    for ang in _spherical_orthoschemes(samples, seed + 1):
        data = orthoscheme.classify_orthoscheme(ang)
        edges = orthoscheme.orthoscheme_edges(data, ang)
        signs = (-0.5, 0.5, -0.5)
        worst = 0.0
        for i, name in enumerate(("alpha", "beta", "gamma")):
            hi = {k: getattr(ang, k) for k in ("alpha", "beta", "gamma")}
            lo = dict(hi)
            hi[name] += step
            lo[name] -= step
            dv = (orthoscheme.volume_via_delta(orthoscheme.OrthoschemeAngles(**hi), qtol)
                  - orthoscheme.volume_via_delta(orthoscheme.OrthoschemeAngles(**lo), qtol)
                  ) / (2.0 * step)
            worst = max(worst, abs(dv - signs[i] * edges[i]))
        residuals.append(((ang.alpha, ang.beta, ang.gamma), worst))
    return _report("volume derivative vs edge lengths", 1e-6, residuals)


def check_delta_properties(grid: int = 50) -> CheckReport:
    """The symmetry/periodicity suite of delta_s on a grid over
    [0, pi] x [-pi, pi], plus the pi^2/4 bound on the reduced form."""
    tol = 1e-9
    qtol = 1e-10
    residuals = []
    bound = _PI * _PI / 4.0
    for i in range(grid):
        a = _PI * i / (grid - 1)
        for j in range(grid):
            t = -_PI + 2.0 * _PI * j / (grid - 1)
            base = specfun.delta_s(a, t, qtol)
            d0 = specfun.delta_alpha0(a)
            worst = max(
                abs(specfun.delta_s(-a, t, qtol) - base),
                abs(specfun.delta_s(_PI - a, t, qtol) - base),
                abs(specfun.delta_s(a, _PI - t, qtol) + base),
                abs(specfun.delta_s(a + _PI, t, qtol) - base),
                abs(specfun.delta_s(a, t + _PI, qtol) - (base - 2.0 * d0)),
                max(0.0, abs(base + (2.0 * t / _PI - 1.0) * d0) - bound),
            )
            residuals.append(((a, t), worst))
    return _report("delta symmetry suite", tol, residuals)


def check_td1_closed_forms(samples: int = 20, seed: int = 42) -> CheckReport:
    """delta_s agrees with its closed forms at theta in
    {0, pi/4, pi/2, 3pi/4, pi}."""
    rng = random.Random(seed)
    residuals = []
    for _ in range(samples):
        a = rng.uniform(0.0, _PI)
        for t in (0.0, 0.25 * _PI, 0.5 * _PI, 0.75 * _PI, _PI):
            r = abs(specfun.delta_s(a, t, 1e-11) - specfun.delta_s_closed(a, t))
            residuals.append(((a, t), r))
    return _report("closed forms at special theta", 1e-9, residuals)


def check_p2_arccot(samples: int = 20, seed: int = 42) -> CheckReport:
    """delta_s agrees with its arccot integral representation on
    (pi/2, pi) x (pi/2, pi)."""
    rng = random.Random(seed)
    residuals = []
    for _ in range(samples):
        a = rng.uniform(_HALF_PI + _MARGIN, _PI - _MARGIN)
        t = rng.uniform(_HALF_PI + _MARGIN, _PI - _MARGIN)
        r = abs(specfun.delta_s_arccot(a, t, 1e-11) - specfun.delta_s(a, t, 1e-11))
        residuals.append(((a, t), r))
    return _report("arccot representation", 1e-9, residuals)


def check_dilog_relation(samples: int = 20, seed: int = 42) -> CheckReport:
    """delta_s(a, t) - delta_s(a, pi/4) equals the dilogarithm difference
    Li2(tan(pi/4 - t), pi/2) - Li2(tan(pi/4 - t), 2a)."""
    rng = random.Random(seed)
    residuals = []
    for _ in range(samples):
        a = rng.uniform(_MARGIN, _PI - _MARGIN)
        t = rng.uniform(-0.25 * _PI + 1e-3, 0.75 * _PI - 1e-3)
        lhs = specfun.delta_s(a, t, 1e-11) - specfun.delta_s_closed(a, 0.25 * _PI)
        r = math.tan(0.25 * _PI - t)
        rhs = specfun.dilog2(r, _HALF_PI, 1e-11) - specfun.dilog2(r, 2.0 * a, 1e-11)
        residuals.append(((a, t), abs(lhs - rhs)))
    return _report("dilogarithm relation", 1e-9, residuals)


def check_lobachevsky_relation(samples: int = 20, seed: int = 42) -> CheckReport:
    """Integrated real form of the hyperbolic-argument identity:

        delta_s(a, arctan(tanh t)) - delta_s(a, 0)
            = -integral from 0 to t of log(1 - cos 2a / cosh 2s) ds
    """
    rng = random.Random(seed)
    residuals = []
    for _ in range(samples):
        a = rng.uniform(_MARGIN, _PI - _MARGIN)
        t = rng.uniform(1e-3, 2.0)
        tt = math.atan(math.tanh(t))
        lhs = specfun.delta_s(a, tt, 1e-11) - specfun.delta_s(a, 0.0, 1e-11)
        c = math.cos(2.0 * a)
        rhs = -integrate(IntegrationProblem(
            lambda s: math.log1p(-c / math.cosh(2.0 * s)), 0.0, t, 1e-11)).value
        residuals.append(((a, t), abs(lhs - rhs)))
    return _report("hyperbolic-argument relation", 1e-9, residuals)


def check_volume_routes(samples: int = 20, seed: int = 42) -> CheckReport:
    """Route agreement: cube delta-combination vs direct integral, and the
    three orthoscheme routes against one another."""
    residuals = []
    for trip in _spherical_triples(samples, seed):
        ca = lambert.classify(*trip)
        v1 = lambert.volume_spherical(ca, 1e-11)
        v2 = lambert.volume_spherical_integral(ca, 1e-11)
        residuals.append((trip, abs(v1 - v2)))
    for ang in _spherical_orthoschemes(samples, seed + 1):
        vs = orthoscheme.volume_orthoscheme_schlaefli(ang, 1e-12)
        vd = orthoscheme.volume_via_delta(ang, 1e-11)
        vi = orthoscheme.volume_orthoscheme_integral(ang, 1e-11)
        r = max(abs(vs - vd), abs(vd - vi), abs(vs - vi))
        residuals.append(((ang.alpha, ang.beta, ang.gamma), r))
    return _report("volume route agreement", 1e-8, residuals)


ALL_CHECKS = (
    check_tangent_rule,
    check_sine_cosine,
    check_schlaefli_derivative,
    check_delta_properties,
    check_td1_closed_forms,
    check_p2_arccot,
    check_dilog_relation,
    check_lobachevsky_relation,
    check_volume_routes,
)


def run_all_checks(seed: int = 42, tolerance: float | None = None
                   ) -> list[CheckReport]:
    """Run every check with default sample counts; `tolerance`, when given,
    replaces each check's own tolerance."""
    reports = []
    for fn in ALL_CHECKS:
        if fn is check_delta_properties:
            rep = fn()
        else:
            rep = fn(seed=seed)
        if tolerance is not None:
            rep = CheckReport(rep.name, rep.max_residual, tolerance,
                              rep.sample_count, rep.max_residual <= tolerance,
                              rep.details)
        reports.append(rep)
    return reports
