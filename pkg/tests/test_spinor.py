"""Spin spherical harmonics: coupling coefficients and spinor functions."""

import math

import numpy as np
import pytest

from quatspin import (
    SpinorFunction, clebsch_coefficients, spinor_as_vector,
    spinor_as_biquaternion, measure_probability,
    ket_to_vector, norm_sq, spherical_harmonic, quadrature_sphere,
)
from quatspin.verify import clebsch_oracle


def test_clebsch_worked_example():
    # l=2 coupled to j=5/2 at m_j=3/2
    c1, c2 = clebsch_coefficients(2, 2.5, 1.5)
    assert c1 == pytest.approx(2/math.sqrt(5))
    assert c2 == pytest.approx(1/math.sqrt(5))


def test_clebsch_small_table():
    # l=1 by hand: j=3/2 and j=1/2 at m_j=1/2
    c1, c2 = clebsch_coefficients(1, 1.5, 0.5)
    assert c1 == pytest.approx(math.sqrt(2/3))
    assert c2 == pytest.approx(math.sqrt(1/3))
    c1, c2 = clebsch_coefficients(1, 0.5, 0.5)
    assert c1 == pytest.approx(-math.sqrt(1/3))
    assert c2 == pytest.approx(math.sqrt(2/3))
    # stretched state has a single component
    c1, c2 = clebsch_coefficients(2, 2.5, 2.5)
    assert (c1, c2) == (1.0, 0.0)


def test_clebsch_against_eigenvector_oracle():
    for l in range(5):
        js = (0.5,) if l == 0 else (l - 0.5, l + 0.5)
        for j in js:
            mj = -j
            while mj <= j:
                got = clebsch_coefficients(l, j, mj)
                want = clebsch_oracle(l, j, mj)
                np.testing.assert_allclose(got, want, atol=1e-12)
                assert got[0]**2 + got[1]**2 == pytest.approx(1.0)
                mj += 1.0


def test_clebsch_branches_are_orthogonal():
    for l in (1, 2, 3):
        for mj in (0.5, -0.5):
            hi = np.array(clebsch_coefficients(l, l + 0.5, mj))
            lo = np.array(clebsch_coefficients(l, l - 0.5, mj))
            assert abs(hi @ lo) < 1e-14


def test_clebsch_rejects_bad_labels():
    with pytest.raises(ValueError):
        clebsch_coefficients(2, 1.0, 0.5)   # j not half-odd
    with pytest.raises(ValueError):
        clebsch_coefficients(2, 4.5, 0.5)   # j not l +- 1/2
    with pytest.raises(ValueError):
        clebsch_coefficients(2, 2.5, 3.5)   # |m_j| > j
    with pytest.raises(ValueError):
        clebsch_coefficients(2, 2.5, 1.0)   # m_j not half-odd


def test_worked_example_down_probability():
    # the (l=2, j=5/2, m_j=3/2) state: P_down = |Y_2^2|^2 / 5
    s = SpinorFunction(2, 2.5, 1.5)
    rng = np.random.default_rng(55)
    for _ in range(100):
        th = math.acos(rng.uniform(-1, 1))
        ph = rng.uniform(0, 2*math.pi)
        want = abs(spherical_harmonic(2, 2, th, ph))**2/5
        got = measure_probability("down", s, th, ph)
        np.testing.assert_allclose(got, want, atol=1e-12)

    def p_down(th, ph):
        y = sph_like(th, ph)
        return np.abs(y)**2/5

    def sph_like(th, ph):
        return spherical_harmonic(2, 2, th, ph)

    integral = quadrature_sphere(p_down)
    np.testing.assert_allclose(integral, 0.2, atol=1e-8)


def test_spinor_vector_and_biquaternion_agree():
    rng = np.random.default_rng(66)
    labels = [(1, 1.5, 0.5), (2, 2.5, 1.5), (2, 1.5, -0.5), (3, 3.5, -2.5)]
    for l, j, mj in labels:
        s = SpinorFunction(l, j, mj)
        for _ in range(50):
            th = math.acos(rng.uniform(-1, 1))
            ph = rng.uniform(0, 2*math.pi)
            vec = spinor_as_vector(s, th, ph)
            q = spinor_as_biquaternion(s, th, ph)
            np.testing.assert_allclose(ket_to_vector(q), vec, atol=1e-13)
            total = abs(vec[0])**2 + abs(vec[1])**2
            np.testing.assert_allclose(norm_sq(q), total, rtol=1e-12)
            p_up = measure_probability("up", s, th, ph)
            p_dn = measure_probability("down", s, th, ph)
            np.testing.assert_allclose(p_up + p_dn, total, atol=1e-13)


def test_spinor_sphere_normalization():
    for l, j, mj in ((0, 0.5, 0.5), (1, 0.5, -0.5), (2, 2.5, 0.5),
                     (3, 2.5, 1.5)):
        s = SpinorFunction(l, j, mj)

        def dens(th, ph):
            v = spinor_as_vector(s, th, ph)
            return np.abs(v[0])**2 + np.abs(v[1])**2

        np.testing.assert_allclose(quadrature_sphere(dens), 1.0, atol=1e-8)


def test_stretched_state_has_one_component():
    # m_j = l + 1/2 leaves no valid down orbital: that component is zero
    s = SpinorFunction(1, 1.5, 1.5)
    vec = spinor_as_vector(s, 0.7, 0.2)
    assert vec[1] == 0
    assert abs(vec[0]) > 0
    assert measure_probability("down", s, 0.7, 0.2) == 0


def test_measure_probability_rejects_bad_label():
    s = SpinorFunction(1, 1.5, 0.5)
    with pytest.raises(ValueError):
        measure_probability("sideways", s, 0.5, 0.5)
