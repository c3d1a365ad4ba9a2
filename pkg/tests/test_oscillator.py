import itertools
import math

import numpy as np
import pytest
from scipy import integrate

from u1kepler.oscillator import (
    harmonic_degree_check,
    oscillator_operator,
    oscillator_residual,
    shell_eigenvalue_check,
    twist,
    twisted_inner,
)
from u1kepler.radial import radial_eigenfunction
from u1kepler.repcore import ProblemParams, angular_laplacian_eigenvalue, sector_from_l


def test_ground_state_is_gaussian():
    p = twist(radial_eigenfunction(1, 0, ProblemParams(2, 0)))
    assert p.eigenvalue == 2 and p.Lambda == 0
    r = np.linspace(0, 4, 41)
    values = p(r)
    np.testing.assert_allclose(values / values[0], np.exp(-r**2 / 2), rtol=1e-12)
    # unit norm in r^3 dr: int e^{-r^2} r^3 dr = 1/2
    assert values[0] == pytest.approx(math.sqrt(2), rel=1e-12)


def test_k1_l1_profile():
    p = twist(radial_eigenfunction(1, 1, ProblemParams(2, 0)))
    assert p.eigenvalue == 4 and p.Lambda == 2
    r = np.linspace(0.1, 4, 21)
    shape = r**2 * np.exp(-r**2 / 2)  # L_0^3 = 1
    np.testing.assert_allclose(p(r) / shape, (p(r) / shape)[0], rtol=1e-12)


@pytest.mark.parametrize("n, sigma_bar, k, l", [(2, 0, 1, 0), (3, 2, 2, 1), (4, -3, 3, 2)])
def test_twist_norm_quadrature(n, sigma_bar, k, l):
    p = twist(radial_eigenfunction(k, l, ProblemParams(n, sigma_bar)))
    value, _ = integrate.quad(lambda r: p(r) ** 2 * r ** (2 * n - 1), 0, np.inf, epsabs=1e-13, limit=200)
    assert value == pytest.approx(1, abs=1e-8)
    assert twisted_inner(p, p) == pytest.approx(1, abs=1e-8)


def test_smooth_at_origin():
    for n, sigma_bar, k, l in [(2, 0, 1, 0), (3, 0, 3, 0), (2, 1, 1, 0), (3, 2, 2, 1)]:
        p = twist(radial_eigenfunction(k, l, ProblemParams(n, sigma_bar)))
        assert p(0.0) == pytest.approx(p(1e-7), abs=1e-6)


@pytest.mark.parametrize(
    "n, k, l, sigma_bar, eigenvalue",
    # I = k - 1 + l, eigenvalue 2I + |sigma_bar| + n
    [(2, 1, 0, 0, 2), (3, 2, 1, 2, 9), (3, 3, 1, 2, 11)],
)
def test_residual_examples(n, k, l, sigma_bar, eigenvalue):
    p = twist(radial_eigenfunction(k, l, ProblemParams(n, sigma_bar)))
    assert p.eigenvalue == eigenvalue
    assert oscillator_residual(p) < 1e-7


def test_residual_scales():
    p = twist(radial_eigenfunction(2, 1, ProblemParams(3, 1)))
    grid = np.linspace(0.2, 4.5, 271)
    values = p(grid)
    doubled = oscillator_operator(lambda r: 2 * p(r), grid, p.n, p.Lambda) - p.eigenvalue * 2 * values
    assert np.max(np.abs(doubled)) / np.max(np.abs(2 * values)) == pytest.approx(oscillator_residual(p), rel=1e-6)


def test_residual_detects_wrong_degree():
    p = twist(radial_eigenfunction(1, 1, ProblemParams(2, 1)))
    grid = np.linspace(0.2, 4.5, 271)
    wrong = oscillator_operator(p, grid, p.n, p.Lambda + 1) - p.eigenvalue * p(grid)
    assert np.max(np.abs(wrong)) > 1e-2


def test_same_degree_orthogonal():
    for n, sigma_bar, l in itertools.product(range(2, 5), range(-3, 4), range(3)):
        profiles = [twist(radial_eigenfunction(k, l, ProblemParams(n, sigma_bar))) for k in range(1, 5)]
        for a, b in itertools.combinations(profiles, 2):
            assert abs(twisted_inner(a, b)) < 1e-8


def test_inner_requires_equal_degree():
    a = twist(radial_eigenfunction(1, 0, ProblemParams(2, 0)))
    b = twist(radial_eigenfunction(1, 1, ProblemParams(2, 0)))
    with pytest.raises(ValueError):
        twisted_inner(a, b)


@pytest.mark.parametrize(
    "l, n, sigma_bar, Lambda, lhs, eig",
    [(0, 2, 0, 0, 0, 0), (0, 2, 1, 1, 3, 2), (1, 3, 1, 3, 21, 20)],
)
def test_harmonic_degree_examples(l, n, sigma_bar, Lambda, lhs, eig):
    sector = sector_from_l(l, ProblemParams(n, sigma_bar))
    assert sector.harmonic_degree == Lambda
    assert Lambda * (Lambda + 2 * n - 2) == lhs
    assert angular_laplacian_eigenvalue(sector) == eig
    assert harmonic_degree_check(sector)


def test_harmonic_degree_grid():
    for n, p, q in itertools.product(range(2, 7), range(13), range(13)):
        sigma_bar = p - q
        sector = sector_from_l(min(p, q), ProblemParams(n, sigma_bar))
        assert (sector.p, sector.q) == (p, q)
        assert harmonic_degree_check(sector)


@pytest.mark.parametrize("n, k, eigenvalue", [(2, 0, 2), (2, 2, 4), (4, 5, 9)])
def test_shell_eigenvalue_examples(n, k, eigenvalue):
    report = shell_eigenvalue_check(n, k)
    assert report.passed
    rows = [r for r in report.rows if r.get("k") == k and "eigenvalue" in r]
    assert rows and all(r["eigenvalue"] == eigenvalue for r in rows)


def test_shell_n2_k2_has_three_charge_sectors():
    rows = [r for r in shell_eigenvalue_check(2, 2).rows if r.get("k") == 2 and "eigenvalue" in r]
    assert sorted({r["sigma_bar"] for r in rows}) == [-2, 0, 2]
