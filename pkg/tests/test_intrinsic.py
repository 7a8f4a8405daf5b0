import math

import pytest

from oloid import intrinsic, support
from oloid.specfun import ellipk

import oracles
from oloid.surface import mesh_area, mesh_volume

SQRT3_2 = math.sqrt(3.0) / 2.0
V_REF = 3.05241846842437485669720053193
I_REF = 1.87738105428247449505835371657
EDGE_REF = 7.29488238450413994801832163353
M_REF = 13.7644293270030696543343466299
B_REF = 2.19067696623158876633263049436


def test_surface_area_routes():
    closed = intrinsic.surface_area("closed")
    assert closed == pytest.approx(12.566370614359172, rel=1e-15)
    quad = intrinsic.surface_area("quadrature", tol=1e-10)
    assert quad == pytest.approx(closed, rel=1e-10)
    mesh = oracles.cached_mesh(256)
    assert mesh_area(mesh) == pytest.approx(closed, rel=1e-4)


def test_volume_routes():
    closed = intrinsic.volume("closed")
    assert closed == pytest.approx(V_REF, rel=1e-15)
    quad = intrinsic.volume("quadrature", tol=1e-10)
    assert quad == pytest.approx(V_REF, rel=1e-10)
    mesh = oracles.cached_mesh(256)
    assert mesh_volume(mesh) == pytest.approx(V_REF, rel=1e-4)


def test_curvature_integral_routes():
    closed = intrinsic.curvature_integral("closed")
    assert closed == pytest.approx(3.0 * ellipk(SQRT3_2), rel=1e-15)
    assert closed == pytest.approx(6.469546942498930, rel=1e-14)
    quad = intrinsic.curvature_integral("quadrature", tol=1e-10)
    assert abs(quad - closed) < 1e-10


def test_coxeter_like_integral():
    val = intrinsic.coxeter_like_integral()
    assert val == pytest.approx(I_REF, rel=1e-13)
    # integrand endpoints
    assert math.acos(math.cos(0.0) / 2.0) == pytest.approx(math.pi / 3.0)
    assert math.acos(0.0) == pytest.approx(math.pi / 2.0)


def test_edge_integral_routes():
    reduced = intrinsic.edge_integral("reduced")
    assert reduced == pytest.approx(EDGE_REF, rel=1e-13)
    direct = intrinsic.edge_integral("direct", tol=1e-10)
    assert abs(direct - reduced) <= 1e-10
    # crude positivity / upper bound from alpha in [0, pi]
    assert 0.0 < direct < 2.0 * math.pi * 2.0 * math.pi / 3.0


def test_unknown_route_rejected():
    for fn in (
        intrinsic.surface_area,
        intrinsic.volume,
        intrinsic.curvature_integral,
        intrinsic.edge_integral,
    ):
        with pytest.raises(ValueError):
            fn("nonsense")


def test_mean_curvature_total():
    m1 = intrinsic.mean_curvature_total(1.0)
    assert m1 == pytest.approx(M_REF, rel=1e-12)
    assert intrinsic.mean_curvature_total(2.0) == pytest.approx(2.0 * m1, rel=1e-15)
    assembled = intrinsic.curvature_integral(
        "quadrature", tol=1e-11
    ) + intrinsic.edge_integral("direct", tol=1e-11)
    assert abs(m1 - assembled) <= 1e-10
    with pytest.raises(ValueError):
        intrinsic.mean_curvature_total(0.0)


def test_mean_width():
    b1 = intrinsic.mean_width(1.0)
    assert b1 == pytest.approx(B_REF, rel=1e-12)
    assert intrinsic.mean_width(3.0) == pytest.approx(3.0 * b1, rel=1e-15)
    assert b1 == pytest.approx(intrinsic.mean_curvature_total(1.0) / (2 * math.pi))


def test_mean_width_agrees_with_direct_route():
    assert abs(support.mean_width_direct(1e-9) - intrinsic.mean_width(1.0)) <= 1e-8


def test_intrinsic_volume_vector():
    iv = intrinsic.oloid_intrinsic_volumes(1.0)
    assert iv.v0 == 1.0
    assert iv.v1 == pytest.approx(4.381353932463178, rel=1e-13)
    assert iv.v1 == pytest.approx(2.0 * B_REF, rel=1e-13)
    assert iv.v2 == pytest.approx(2.0 * math.pi, rel=1e-15)
    assert iv.v3 == pytest.approx(V_REF, rel=1e-14)
    assert iv.mean_width == pytest.approx(B_REF, rel=1e-12)
    assert iv.surface == pytest.approx(4.0 * math.pi, rel=1e-15)
    assert iv.mean_curvature_integral == pytest.approx(M_REF, rel=1e-12)


def test_homogeneity_sweep():
    base = intrinsic.oloid_intrinsic_volumes(1.0)
    for r in (0.5, 1.0, 2.0, 10.0):
        iv = intrinsic.oloid_intrinsic_volumes(r)
        assert iv.v0 == base.v0
        assert iv.v1 == pytest.approx(base.v1 * r, rel=1e-13)
        assert iv.v2 == pytest.approx(base.v2 * r * r, rel=1e-13)
        assert iv.v3 == pytest.approx(base.v3 * r**3, rel=1e-13)
        scaled = base.scaled(r)
        assert (scaled.v1, scaled.v2, scaled.v3) == pytest.approx(
            (iv.v1, iv.v2, iv.v3), rel=1e-13
        )


def test_shares_unit_ball_surface_but_smaller_volume():
    # same surface area as the unit ball, strictly smaller volume
    assert intrinsic.surface_area() == pytest.approx(4.0 * math.pi, rel=1e-15)
    assert intrinsic.volume() < 4.0 * math.pi / 3.0


def test_mean_width_betweenness():
    for r in (0.5, 1.0, 2.0):
        assert 2.0 * r < intrinsic.mean_width(r) < 3.0 * r
    # the extreme directional widths realize the bounds
    assert support.width(math.pi / 2.0, math.pi / 2.0) == pytest.approx(3.0)
    assert support.width(0.0, math.pi / 2.0) == pytest.approx(2.0)


def test_route_agreement_invariant():
    pairs = [
        (intrinsic.surface_area("closed"), intrinsic.surface_area("quadrature", tol=1e-11)),
        (intrinsic.volume("closed"), intrinsic.volume("quadrature", tol=1e-11)),
        (
            intrinsic.curvature_integral("closed"),
            intrinsic.curvature_integral("quadrature", tol=1e-11),
        ),
        (intrinsic.edge_integral("reduced"), intrinsic.edge_integral("direct", tol=1e-11)),
    ]
    for closed, quad in pairs:
        assert abs(closed - quad) <= 1e-10 * max(1.0, abs(closed))


def test_appendix_identity():
    chk = intrinsic.appendix_identity_check(1e-9)
    assert chk.delta < 1e-9
    assert chk.j == pytest.approx(2.156515647499643, rel=1e-12)
    assert chk.k == pytest.approx(ellipk(SQRT3_2), rel=1e-15)
    # value of the transformed integrand 1/sqrt(1 - (3/4) sin^2 phi) at 0
    assert 1.0 / math.sqrt(1.0 - 0.75 * math.sin(0.0) ** 2) == 1.0
    with pytest.raises(ValueError):
        intrinsic.appendix_identity_check(0.0)
