import math

import pytest

from noneuclid import orthoscheme
from noneuclid.errors import DomainError
from noneuclid.orthoscheme import Curvature, OrthoschemeAngles

PI = math.pi


def test_angle_bounds():
    with pytest.raises(DomainError):
        OrthoschemeAngles(-0.1, 1.0, 0.5)
    with pytest.raises(DomainError):
        OrthoschemeAngles(0.5, 1.0, 2.0)
    OrthoschemeAngles(0.5, 2.5, 0.5)  # beta may exceed pi/2


def test_classification():
    sph = orthoscheme.classify_orthoscheme(OrthoschemeAngles(0.5, 1.2, 0.7))
    assert sph.curvature is Curvature.SPHERICAL
    assert sph.D > 0.0 and sph.T > 0.0 and 0.0 < sph.theta < PI / 2.0
    assert sph.T == pytest.approx(math.sin(0.5) * math.sin(0.7) / sph.D)

    euc = orthoscheme.classify_orthoscheme(
        OrthoschemeAngles(PI / 4.0, PI / 3.0, PI / 4.0))
    assert euc.curvature is Curvature.EUCLIDEAN

    hyp = orthoscheme.classify_orthoscheme(OrthoschemeAngles(0.5, 0.2, 0.7))
    assert hyp.curvature is Curvature.HYPERBOLIC
    with pytest.raises(DomainError):
        orthoscheme.volume_via_delta(OrthoschemeAngles(0.5, 0.2, 0.7))


def test_three_routes_agree():
    ang = OrthoschemeAngles(0.6, 1.3, 0.9)
    vs = orthoscheme.volume_orthoscheme_schlaefli(ang, 1e-13)
    vd = orthoscheme.volume_via_delta(ang, 1e-12)
    vi = orthoscheme.volume_orthoscheme_integral(ang, 1e-12)
    assert vd == pytest.approx(vs, abs=1e-11)
    assert vi == pytest.approx(vs, abs=1e-10)
    assert vs > 0.0


def test_right_beta_integral():
    # tan(beta) blows up at pi/2; the integral route must still work
    ang = OrthoschemeAngles(0.8, PI / 2.0, 0.8)
    vi = orthoscheme.volume_orthoscheme_integral(ang, 1e-12)
    vd = orthoscheme.volume_via_delta(ang, 1e-12)
    assert vi == pytest.approx(vd, abs=1e-10)


def test_euclidean_volume_zero():
    ang = OrthoschemeAngles(PI / 4.0, PI / 3.0, PI / 4.0)
    assert orthoscheme.volume_orthoscheme_schlaefli(ang) == 0.0
    assert orthoscheme.volume_via_delta(ang) == 0.0
    assert orthoscheme.volume_orthoscheme_integral(ang) == 0.0


def test_euclidean_continuity():
    # volume -> 0 as the curvature parameter approaches the boundary
    b0 = math.acos(math.cos(PI / 4.0) ** 2)
    ang = OrthoschemeAngles(PI / 4.0, b0 + 1e-4, PI / 4.0)
    assert abs(orthoscheme.volume_via_delta(ang, 1e-12)) < 1e-2


def test_edges_tangent_rule():
    ang = OrthoschemeAngles(0.6, 1.3, 0.9)
    data = orthoscheme.classify_orthoscheme(ang)
    a, b, c = orthoscheme.orthoscheme_edges(data, ang)
    for angle, length in ((ang.alpha, a), (ang.beta, b), (ang.gamma, c)):
        assert math.tan(angle) / math.tan(length) == pytest.approx(
            data.T, rel=1e-12)
    assert 0.0 < a < PI / 2.0 and 0.0 < c < PI / 2.0 and 0.0 < b < PI


def test_edges_obtuse_beta_lands_above_half_pi():
    ang = OrthoschemeAngles(0.6, 2.0, 0.9)
    data = orthoscheme.classify_orthoscheme(ang)
    _, b, _ = orthoscheme.orthoscheme_edges(data, ang)
    assert PI / 2.0 < b < PI


def test_cosine_rule():
    ang = OrthoschemeAngles(0.6, 1.3, 0.9)
    data = orthoscheme.classify_orthoscheme(ang)
    a, b, c = orthoscheme.orthoscheme_edges(data, ang)
    lhs = math.cos(ang.beta) / math.cos(b)
    rhs = (math.cos(ang.alpha) / math.cos(a)
           * math.cos(ang.gamma) / math.cos(c))
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_edges_require_spherical():
    ang = OrthoschemeAngles(0.5, 0.2, 0.7)
    data = orthoscheme.classify_orthoscheme(ang)
    with pytest.raises(DomainError):
        orthoscheme.orthoscheme_edges(data, ang)
