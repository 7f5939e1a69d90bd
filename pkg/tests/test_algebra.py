import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srdist.algebra import (
    AlgebraVector,
    InvalidElementError,
    SO3Element,
    SU2Element,
    klein_omega,
    lift_so3,
    random_so3,
    random_su2,
    su2_exp,
    su2_inv,
    su2_mul,
)

unit_quaternions = st.tuples(
    *(st.floats(-1.0, 1.0) for _ in range(4))
).filter(lambda v: sum(x * x for x in v) > 1e-2).map(
    lambda v: SU2Element(*(np.array(v) / np.linalg.norm(v)))
)


def test_construction_rejects_non_unit():
    with pytest.raises(InvalidElementError):
        SU2Element(2.0, 0.0, 0.0, 0.0)


def test_construction_renormalizes_within_tolerance():
    g = SU2Element(1.0 + 5e-10, 0.0, 0.0, 0.0)
    assert math.hypot(g.a_re, g.a_im) == pytest.approx(1.0, abs=1e-15)


def test_so3_rejects_non_rotation():
    with pytest.raises(InvalidElementError):
        SO3Element(np.diag([1.0, 1.0, 2.0]))
    with pytest.raises(InvalidElementError):
        SO3Element(np.diag([1.0, 1.0, -1.0]))  # det = -1


def test_mul_identity():
    g = SU2Element(0.6, 0.0, 0.8, 0.0)
    e = SU2Element.identity()
    assert su2_mul(e, g) == g


def test_mul_matches_matrix_product():
    # (0,1)*(0,1) = (-1,0), checked against the explicit 2x2 product
    g = SU2Element(0.0, 0.0, 1.0, 0.0)
    prod = su2_mul(g, g)
    expected = g.as_matrix() @ g.as_matrix()
    assert prod.a == pytest.approx(expected[0, 0])
    assert prod.b == pytest.approx(expected[0, 1])
    assert prod.a == pytest.approx(-1.0)


@given(unit_quaternions)
@settings(max_examples=200, deadline=None)
def test_inverse_law(g):
    e = su2_mul(g, su2_inv(g))
    assert abs(e.a - 1.0) < 1e-12
    assert abs(e.b) < 1e-12


def test_inverse_examples():
    assert su2_inv(SU2Element.identity()) == SU2Element.identity()
    assert su2_inv(SU2Element(0.0, 1.0, 0.0, 0.0)).a == pytest.approx(-1j)
    g = su2_inv(SU2Element(0.6, 0.0, 0.8, 0.0))
    assert (g.a, g.b) == pytest.approx((0.6, -0.8))


def test_exp_zero_vector():
    assert su2_exp(AlgebraVector(0.0, 0.0, 0.0), 5.0) == SU2Element.identity()


def test_exp_against_series_summation():
    # independent oracle: sum the matrix exponential series directly
    for v, t in [
        (AlgebraVector(1.0, 0.0, 0.0), math.pi),
        (AlgebraVector(0.0, 0.0, 1.0), math.pi),
        (AlgebraVector(0.3, -1.2, 0.7), 2.5),
    ]:
        gen = t * (
            v.x * 0.5 * np.array([[0, 1], [-1, 0]], dtype=complex)
            + v.y * 0.5 * np.array([[0, 1j], [1j, 0]], dtype=complex)
            + v.z * 0.5 * np.array([[1j, 0], [0, -1j]], dtype=complex)
        )
        series = np.eye(2, dtype=complex)
        term = np.eye(2, dtype=complex)
        for k in range(1, 40):
            term = term @ gen / k
            series = series + term
        g = su2_exp(v, t)
        assert np.allclose(g.as_matrix(), series, atol=1e-12)


def test_exp_known_values():
    g = su2_exp(AlgebraVector(1.0, 0.0, 0.0), math.pi)
    assert (g.a, g.b) == pytest.approx((0.0, 1.0), abs=1e-15)
    g = su2_exp(AlgebraVector(0.0, 0.0, 1.0), math.pi)
    assert (g.a, g.b) == pytest.approx((1j, 0.0), abs=1e-15)


@given(
    st.floats(-5.0, 5.0),
    st.floats(-5.0, 5.0),
    st.floats(-5.0, 5.0),
    st.floats(-10.0, 10.0),
)
@settings(max_examples=300, deadline=None)
def test_exp_stays_unit(x, y, z, t):
    g = su2_exp(AlgebraVector(x, y, z), t)
    norm = g.a_re**2 + g.a_im**2 + g.b_re**2 + g.b_im**2
    assert abs(norm - 1.0) < 1e-12


def test_klein_identity_and_half_turns():
    assert np.allclose(klein_omega(SU2Element.identity()).m, np.eye(3))
    assert np.allclose(
        klein_omega(SU2Element(0.0, 0.0, 1.0, 0.0)).m, np.diag([-1.0, 1.0, -1.0])
    )


def test_klein_axis1_rotation():
    theta = 0.7
    g = SU2Element(math.cos(theta / 2), math.sin(theta / 2), 0.0, 0.0)
    expected = np.array(
        [
            [1.0, 0.0, 0.0],
            [0.0, math.cos(theta), -math.sin(theta)],
            [0.0, math.sin(theta), math.cos(theta)],
        ]
    )
    assert np.allclose(klein_omega(g).m, expected, atol=1e-14)


def test_klein_homomorphism_and_double_cover():
    rng = np.random.default_rng(42)
    for _ in range(1000):
        g, h = random_su2(rng), random_su2(rng)
        lhs = klein_omega(su2_mul(g, h)).m
        rhs = klein_omega(g).m @ klein_omega(h).m
        assert np.max(np.abs(lhs - rhs)) < 1e-9
        assert np.max(np.abs(klein_omega(g).m - klein_omega(g.negate()).m)) < 1e-14


def test_lift_identity():
    lift, neg = lift_so3(SO3Element.identity())
    assert (lift.a, lift.b) == pytest.approx((1.0, 0.0))
    assert (neg.a, neg.b) == pytest.approx((-1.0, 0.0))


def test_lift_half_turn_axis1():
    lift, _ = lift_so3(SO3Element(np.diag([1.0, -1.0, -1.0])))
    assert lift.a == pytest.approx(1j)
    assert lift.b == pytest.approx(0.0)


def test_lift_a_zero_branch():
    lift, _ = lift_so3(SO3Element(np.diag([-1.0, 1.0, -1.0])))
    assert abs(lift.a) < 1e-15
    assert abs(lift.b) == pytest.approx(1.0)


def test_lift_then_project_roundtrip():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        c = random_so3(rng)
        lift, neg = lift_so3(c)
        assert lift.a_re >= 0.0
        assert np.max(np.abs(klein_omega(lift).m - c.m)) < 1e-9
        assert np.max(np.abs(klein_omega(neg).m - c.m)) < 1e-9


def test_lift_rejects_non_rotation():
    with pytest.raises(InvalidElementError):
        lift_so3(SO3Element(np.ones((3, 3))))
