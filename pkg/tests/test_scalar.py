import cmath
import math

import numpy as np
import pytest

from tensorspectra.scalar import PolarComplex, conj_p, conj_p_array, from_polar, principal_angle, to_polar

# reference values computed with mpmath at 40 digits
MPMATH_VALUES = [
    ((1 + 2j), 3, 1, 0.7291662471624408 - 0.450649524195595j),
    ((1 + 2j), 3, 2, 4.961878039239361 - 3.0666092762816093j),
    ((-3 + 0.5j), 5, 2, -0.3927556997170204 - 0.3540377115622599j),
    ((-1 + 0j), 3, 1, -0.06582872101129665j),
    ((0.25 - 4j), 4, 1, 18.11284215704817 + 0j),
    (2j, 6, 5, 5.511975635604312 + 5.511975635604312j),
]


@pytest.mark.parametrize("z, p, j, expected", MPMATH_VALUES)
def test_conj_matches_high_precision(z, p, j, expected):
    got = conj_p(z, p, j)
    assert abs(got - expected) <= 1e-14 * max(1.0, abs(expected))
    arr = conj_p_array(np.array([z]), p, j)[0]
    assert abs(arr - expected) <= 1e-14 * max(1.0, abs(expected))


def test_conj_trivial_cases():
    z = 3 - 4j
    assert conj_p(z, 5, 0) == z
    assert conj_p(z, 5, 5) == z
    assert conj_p(z, 2, 1) == z.conjugate()
    assert conj_p(z, 4, 2) == z.conjugate()
    assert conj_p(0, 3, 1) == 0
    assert conj_p(2.5, 3, 1) == 2.5


def test_conj_rejects_small_order():
    with pytest.raises(ValueError):
        conj_p(1j, 1, 0)


def test_negative_zero_imaginary_uses_pi():
    # atan2(-0.0, -1) is -pi; the principal range is (-pi, pi]
    assert principal_angle(complex(-1.0, -0.0)) == math.pi
    a = conj_p(complex(-1.0, -0.0), 3, 1)
    b = conj_p(complex(-1.0, 0.0), 3, 1)
    assert a == b
    arr = conj_p_array(np.array([complex(-1.0, -0.0)]), 3, 1)
    assert arr[0] == b


def test_product_of_all_conjugates(rng):
    for _ in range(200):
        z = complex(*rng.uniform(-10, 10, size=2))
        for p in range(2, 7):
            prod = 1 + 0j
            for j in range(p):
                prod *= conj_p(z, p, j)
            assert abs(prod - abs(z) ** p) <= 1e-12 * max(1.0, abs(z) ** p)


def test_array_matches_scalar(rng):
    z = rng.normal(size=50) + 1j * rng.normal(size=50)
    z[0] = 0
    z[1] = -2.0
    for p in (3, 4, 7):
        for j in range(p):
            arr = conj_p_array(z, p, j)
            ref = np.array([conj_p(x, p, j) for x in z])
            assert np.max(np.abs(arr - ref)) <= 1e-13 * max(1.0, np.max(np.abs(ref)))


def test_conj_array_zero_dim():
    out = conj_p_array(np.complex128(1 + 1j), 3, 1)
    assert out.shape == ()
    assert abs(complex(out) - conj_p(1 + 1j, 3, 1)) < 1e-15


def test_polar_round_trip():
    for z in (1 + 1j, -2 + 0j, -3j, 0j):
        p = to_polar(z)
        assert abs(p.to_complex() - z) < 1e-15
        assert -math.pi < p.angle <= math.pi
    assert from_polar(2.0, math.pi / 2) == cmath.rect(2.0, math.pi / 2)


def test_polar_validation():
    with pytest.raises(ValueError):
        PolarComplex(-1.0, 0.0)
    with pytest.raises(ValueError):
        PolarComplex(1.0, -math.pi)
    with pytest.raises(ValueError):
        PolarComplex(0.0, 1.0)


def _mp_conj(z, p, j):
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 40
    zc = mp.mpc(z.real, z.imag)
    theta = mp.arg(zc)
    if theta == -mp.pi:
        theta = mp.pi
    w = mp.exp(2j * mp.pi * j / p)
    return complex(abs(zc) * mp.exp(1j * theta * w))


@pytest.mark.parametrize("z, p, j, expected", MPMATH_VALUES)
def test_frozen_values_reproduce(z, p, j, expected):
    assert abs(_mp_conj(z, p, j) - expected) <= 1e-15 * max(1.0, abs(expected))


def test_random_against_mpmath(rng):
    for _ in range(100):
        z = complex(*rng.uniform(-10, 10, size=2))
        p = int(rng.integers(2, 8))
        j = int(rng.integers(0, p))
        ref = _mp_conj(z, p, j)
        assert abs(conj_p(z, p, j) - ref) <= 1e-13 * max(1.0, abs(ref))
