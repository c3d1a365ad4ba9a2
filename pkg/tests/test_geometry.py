import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from u1kepler.geometry import (
    TangentSample,
    decompose,
    fs_quadratic,
    metric_decomposition_residual,
    quotient_metric_eval,
    random_samples,
)

RNG_SEED = 314159


def test_fs_on_complex_line():
    Z = np.array([1 + 2j, -0.5j, 3.0])
    for W in (Z, 1j * Z, (2 - 3j) * Z):
        assert fs_quadratic(TangentSample(Z, W)) == pytest.approx(0, abs=1e-14)


def test_fs_unit_example():
    assert fs_quadratic(TangentSample([1, 0], [0, 1])) == pytest.approx(1.0, abs=1e-15)


def test_zero_base_point_rejected():
    with pytest.raises(ValueError):
        TangentSample([0, 0], [1, 0])


def test_vertical_and_radial_directions():
    Z = np.array([0.3 - 1j, 2j, 1.5])
    vertical = TangentSample(Z, 1j * Z)
    assert metric_decomposition_residual(vertical) < 1e-15
    # the vertical term alone carries |W|^2
    assert (vertical.hermitian.imag / vertical.rho**2) ** 2 * vertical.rho**2 == pytest.approx(vertical.rho**2)
    radial = TangentSample(Z, Z)
    assert metric_decomposition_residual(radial) < 1e-15
    assert (radial.hermitian.real / radial.rho) ** 2 == pytest.approx(radial.rho**2)


def test_zero_tangent_vector():
    assert metric_decomposition_residual(TangentSample([1, 1j], [0, 0])) == 0.0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_random_decomposition(n):
    samples = random_samples(n, 1000)
    assert max(metric_decomposition_residual(s) for s in samples) < 1e-12


def test_random_samples_reproducible():
    a = random_samples(3, 5, seed=11)
    b = random_samples(3, 5, seed=11)
    assert all(np.array_equal(x.Z, y.Z) and np.array_equal(x.W, y.W) for x, y in zip(a, b))


def test_quotient_metric_examples():
    Z = np.array([2.0, 0.0])
    assert quotient_metric_eval(TangentSample(Z, 1j * Z)) == pytest.approx(0, abs=1e-14)
    assert quotient_metric_eval(TangentSample(Z, Z)) == pytest.approx(4.0, rel=1e-15)


def test_quotient_vanishes_only_on_vertical():
    rng = np.random.default_rng(RNG_SEED)
    for n in (2, 3, 4, 5):
        for _ in range(50):
            Z = rng.normal(size=n) + 1j * rng.normal(size=n)
            t = rng.uniform(-5, 5)
            W = t * 1j * Z
            s = TangentSample(Z, W)
            assert quotient_metric_eval(s) <= 1e-14 * np.vdot(W, W).real
            other = TangentSample(Z, W + 1e-3 * (rng.normal(size=n) + 1j * rng.normal(size=n)))
            assert quotient_metric_eval(other) > 0


def test_three_part_additivity():
    for s in random_samples(4, 200, seed=RNG_SEED):
        radial, vertical, horizontal = decompose(s)
        np.testing.assert_allclose(radial + vertical + horizontal, s.W, atol=1e-12 * np.linalg.norm(s.W))
        w2 = np.vdot(s.W, s.W).real
        parts = [quotient_metric_eval(TangentSample(s.Z, radial)),
                 s.rho**2 * fs_quadratic(TangentSample(s.Z, horizontal)),
                 np.vdot(vertical, vertical).real]
        assert abs(sum(parts) - w2) / w2 < 1e-12
        # the quotient metric drops exactly the vertical part
        assert quotient_metric_eval(s) == pytest.approx(w2 - parts[2], rel=1e-10, abs=1e-12 * w2)


complex_vectors = st.integers(2, 5).flatmap(
    lambda n: st.tuples(
        st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=n, max_size=n),
        st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=n, max_size=n),
    )
)


@settings(max_examples=200, deadline=None)
@given(complex_vectors, st.floats(0, 2 * np.pi))
def test_fs_phase_invariance(pair, theta):
    Z, W = (np.array(v, dtype=complex) for v in pair)
    if np.linalg.norm(Z) < 1e-3:
        return
    alpha = np.exp(1j * theta)
    a = fs_quadratic(TangentSample(Z, W))
    b = fs_quadratic(TangentSample(alpha * Z, alpha * W))
    scale = np.vdot(W, W).real / np.vdot(Z, Z).real
    assert abs(a - b) <= 1e-12 * max(scale, 1.0)
