"""The three-dimensional case (n = 2) as a MICZ-Kepler problem.

Under ``r = rho^2`` the U(1)-Kepler radial operator of sector ``l``,
conjugated by ``rho^(3/2)``, becomes the radial MICZ Hamiltonian with
monopole charge ``mu = sigma_bar/2`` and angular label ``j = l + |mu|``:

    -1/2 (f'' + 2 f'/r - (j(j+1) - mu^2) f / r^2) + mu^2 f / (2 r^2) - f / r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from ._report import Report
from .radial import DEFAULT_STEP, check_grid, derivatives, radial_operator
from .repcore import HALF, ProblemParams, angular_laplacian_eigenvalue, sector_from_l
from .spectra import energy, level_degeneracy

__all__ = [
    "MiczParams",
    "TEST_FUNCTIONS",
    "conjugated_kepler_operator",
    "conjugation_residual",
    "micz_radial_operator",
    "sector_correspondence",
    "spectrum_correspondence",
]


@dataclass(frozen=True)
class MiczParams:
    mu: Fraction
    j: Fraction

    def __post_init__(self) -> None:
        mu, j = Fraction(self.mu), Fraction(self.j)
        if (2 * mu).denominator != 1:
            raise ValueError(f"mu must be a half-integer, got {mu}")
        if (j - abs(mu)).denominator != 1 or j < abs(mu):
            raise ValueError(f"j - |mu| must be a nonnegative integer, got j={j}, mu={mu}")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "j", j)

    @property
    def angular_eigenvalue(self) -> Fraction:
        """``j(j+1) - mu^2``."""
        return self.j * (self.j + 1) - self.mu**2


def sector_correspondence(l: int, sigma_bar: int) -> tuple[MiczParams, bool]:
    """Match angular sector ``l`` of the n = 2 problem with its monopole-harmonic sector.

    Returns ``(MiczParams(mu=sigma_bar/2, j=l+|mu|), ok)`` where ``ok`` is the
    exact identity ``angular eigenvalue == 4 (j(j+1) - mu^2)``.
    """
    mu = Fraction(sigma_bar, 2)
    micz = MiczParams(mu=mu, j=l + abs(mu))
    sector = sector_from_l(l, ProblemParams(2, sigma_bar))
    return micz, angular_laplacian_eigenvalue(sector) == 4 * micz.angular_eigenvalue


def spectrum_correspondence(sigma_bar: int, I_max: int) -> Report:
    """Energies ``-1/(2N^2)`` and degeneracies ``N^2 - mu^2`` with ``N = I + 1 + |mu|``."""
    params = ProblemParams(2, sigma_bar)
    mu = Fraction(sigma_bar, 2)
    report = Report("micz-spectrum")
    for I in range(I_max + 1):
        big_n = I + 1 + abs(mu)
        e = energy(I, params)
        d = level_degeneracy(I, params)
        product = (I + 1) * (I + 1 + abs(sigma_bar))
        expected_e = -HALF / big_n**2
        expected_d = big_n**2 - mu**2
        report.add(
            e == expected_e and d == expected_d == product,
            sigma_bar=sigma_bar,
            I=I,
            N=big_n,
            energy=e,
            micz_energy=expected_e,
            degeneracy=d,
            micz_degeneracy=expected_d,
        )
    return report


def micz_radial_operator(func: Callable, r: np.ndarray, micz: MiczParams, h: float = DEFAULT_STEP) -> np.ndarray:
    """Radial sector of ``-1/2 Delta_A + mu^2/(2 r^2) - 1/r``."""
    r = np.asarray(r, dtype=float)
    f, df, d2f = derivatives(func, r, h)
    ang = float(micz.angular_eigenvalue)
    mu2 = float(micz.mu**2)
    return -0.5 * (d2f + 2 * df / r - ang * f / r**2) + mu2 * f / (2 * r**2) - f / r


def conjugated_kepler_operator(test_fn: Callable, rho: np.ndarray, l: int, sigma_bar: int,
                               h: float = DEFAULT_STEP) -> np.ndarray:
    """``rho^(-3/2) H rho^(3/2)`` applied to ``g(rho) = test_fn(rho^2)``, n = 2, sector ``l``."""
    rho = np.asarray(rho, dtype=float)

    def lifted(x):
        return x**1.5 * test_fn(x * x)

    return rho**-1.5 * radial_operator(lifted, rho, l, ProblemParams(2, sigma_bar), h)


def _screen_test_function(test_fn: Callable, r: np.ndarray, h: float) -> None:
    values = np.asarray(test_fn(r), dtype=float)
    if not np.all(np.isfinite(values)):
        raise ValueError("test function is not finite on the grid")
    peak = np.max(np.abs(values))
    if peak == 0:
        raise ValueError("test function vanishes on the grid")
    far = np.asarray(test_fn(np.array([4 * r[-1] + 50.0])), dtype=float)
    if not np.all(np.isfinite(far)) or abs(far[0]) > 1e-6 * peak:
        raise ValueError("test function does not decay")
    # second derivatives from steps h and 2h must agree for a smooth function;
    # probe densely so a kink between grid points is still caught
    dense = np.linspace(r[0], r[-1], max(20001, r.size))
    _, _, d2_h = derivatives(test_fn, dense, h)
    _, _, d2_2h = derivatives(test_fn, dense, 2 * h)
    mismatch = np.max(np.abs(d2_h - d2_2h)) / max(np.max(np.abs(d2_h)), peak)
    if mismatch > 1e-4:
        raise ValueError(f"test function is not smooth on the grid (stencil mismatch {mismatch:.2e})")


def conjugation_residual(test_fn: Callable, l: int, sigma_bar: int, grid=None, h: float = DEFAULT_STEP) -> float:
    """Max normalized difference between the conjugated Kepler and the MICZ radial operators.

    ``grid`` holds ``rho`` values; the MICZ side is evaluated at ``r = rho^2``.
    The difference is scaled by ``max |test_fn(r)|`` over the grid.
    """
    rho = check_grid(np.linspace(0.5, 2.5, 201) if grid is None else grid, h)
    r = rho**2
    _screen_test_function(test_fn, r, h)
    micz, _ = sector_correspondence(l, sigma_bar)
    lhs = conjugated_kepler_operator(test_fn, rho, l, sigma_bar, h)
    rhs = micz_radial_operator(test_fn, r, micz, h)
    scale = np.max(np.abs(test_fn(r)))
    return float(np.max(np.abs(lhs - rhs)) / scale)


def _exp(r):
    return np.exp(-r)


def _r_gauss(r):
    return r * np.exp(-r * r)


def _r2_exp(r):
    return r * r * np.exp(-r)


def _shifted_gauss(r):
    return (1 + r) * np.exp(-r * r / 2)


def _r3_exp_half(r):
    return r**3 * np.exp(-r / 2)


# fixed, versioned suite (v1)
TEST_FUNCTIONS: dict[str, Callable] = {
    "exp(-r)": _exp,
    "r*exp(-r^2)": _r_gauss,
    "r^2*exp(-r)": _r2_exp,
    "(1+r)*exp(-r^2/2)": _shifted_gauss,
    "r^3*exp(-r/2)": _r3_exp_half,
}
