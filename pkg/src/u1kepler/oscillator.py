r"""Twist of Kepler bound states into 2n-dimensional oscillator eigenfunctions.

The twist of a level-``I`` radial profile is
``T(r) = c_I r^(-3/2) R(sqrt(n_I/2) r)``, which reduces to
``r^Lambda L_{k-1}^{Lambda+n-1}(r^2) e^{-r^2/2}`` with harmonic degree
``Lambda = 2l + |sigma_bar|``.  It is an eigenfunction of
``-1/2 Delta + 1/2 r^2`` on :math:`\mathbb{C}^n` with eigenvalue
``2I + |sigma_bar| + n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_genlaguerre

from ._report import Report
from .radial import (
    DEFAULT_STEP,
    RadialEigenfunction,
    check_grid,
    derivatives,
)
from .repcore import AngularSector, ProblemParams, angular_laplacian_eigenvalue, sector_from_l
from .spectra import oscillator_shell_check

__all__ = [
    "OscillatorProfile",
    "harmonic_degree_check",
    "oscillator_operator",
    "oscillator_residual",
    "shell_eigenvalue_check",
    "twist",
    "twisted_inner",
]


@dataclass(frozen=True)
class OscillatorProfile:
    source: RadialEigenfunction
    Lambda: int
    eigenvalue: int
    c_I: float

    @property
    def n(self) -> int:
        return self.source.params.n

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        scale = math.sqrt(float(self.source.n_I) / 2)
        positive = np.where(r > 0, r, 1.0)
        value = self.c_I * positive**-1.5 * np.asarray(self.source(scale * positive))
        if np.any(r == 0):
            value = np.where(r > 0, value, self._value_at_origin())
        return value if value.ndim else float(value)

    def _value_at_origin(self) -> float:
        # r^{-3/2} is cancelled by rho^{Lambda+3/2}; only Lambda = 0 survives
        if self.Lambda:
            return 0.0
        f = self.source
        scale = math.sqrt(float(f.n_I) / 2)
        lag0 = math.comb(f.k - 1 + f.alpha, f.k - 1)
        return self.c_I * f.norm_const * scale**1.5 * lag0


def twist(f: RadialEigenfunction) -> OscillatorProfile:
    r"""Twist ``f`` into an oscillator profile of unit norm in ``r^(2n-1) dr``.

    The twisted profile equals ``A r^Lambda L_{k-1}^alpha(r^2) e^{-r^2/2}`` with
    ``alpha = Lambda + n - 1``; its squared norm is
    ``A^2/2 * Gamma(k + alpha)/(k - 1)!``, which fixes ``c_I``.
    """
    n = f.params.n
    Lambda = 2 * f.l + f.params.abs_sigma
    scale = math.sqrt(float(f.n_I) / 2)
    # A = c_I * norm_const * scale^{Lambda + 3/2}
    log_target = 0.5 * (math.log(2) + math.lgamma(f.k - 1 + 1) - math.lgamma(f.k + f.alpha))
    log_c = log_target - math.log(f.norm_const) - (Lambda + 1.5) * math.log(scale)
    return OscillatorProfile(
        source=f,
        Lambda=Lambda,
        eigenvalue=2 * f.I + f.params.abs_sigma + n,
        c_I=math.exp(log_c),
    )


def oscillator_operator(func, r: np.ndarray, n: int, Lambda: int, h: float = DEFAULT_STEP) -> np.ndarray:
    """Radially reduced ``-1/2 Delta + 1/2 r^2`` on :math:`\\mathbb{R}^{2n}` in harmonic degree ``Lambda``."""
    r = np.asarray(r, dtype=float)
    t, dt, d2t = derivatives(func, r, h)
    laplacian = d2t + (2 * n - 1) / r * dt - Lambda * (Lambda + 2 * n - 2) * t / r**2
    return -0.5 * laplacian + 0.5 * r**2 * t


def default_grid(points: int = 271) -> np.ndarray:
    return np.linspace(0.2, 4.5, points)


def oscillator_residual(profile: OscillatorProfile, grid=None, h: float = DEFAULT_STEP) -> float:
    """``max |(Op T) - eigenvalue T| / max |T|`` on the grid."""
    grid = check_grid(default_grid() if grid is None else grid, h)
    values = np.asarray(profile(grid), dtype=float)
    scale = np.max(np.abs(values))
    if scale == 0:
        raise ValueError("profile vanishes on the whole grid")
    applied = oscillator_operator(profile, grid, profile.n, profile.Lambda, h)
    return float(np.max(np.abs(applied - profile.eigenvalue * values)) / scale)


def twisted_inner(a: OscillatorProfile, b: OscillatorProfile) -> float:
    """``int a b r^(2n-1) dr`` by Gauss-Laguerre in ``s = r^2`` (requires equal ``Lambda``)."""
    if a.Lambda != b.Lambda or a.n != b.n:
        raise ValueError("twisted_inner needs profiles with equal harmonic degree and n")
    alpha = a.Lambda + a.n - 1
    s, w = roots_genlaguerre(a.source.k + b.source.k + 8, alpha)
    r = np.sqrt(s)
    # int a b r^{2n-1} dr = 1/2 int a b s^{n-1} ds
    integrand = 0.5 * a(r) * b(r) * s ** (a.n - 1)
    return float(np.sum(w * integrand / (s**alpha * np.exp(-s))))


def harmonic_degree_check(sector: AngularSector) -> bool:
    """Exact check of ``Lambda (Lambda + 2n - 2) == angular eigenvalue + sigma_bar^2``, ``Lambda = 2l + |sigma_bar|``."""
    Lambda = 2 * sector.l + abs(sector.sigma_bar)
    lhs = Lambda * (Lambda + 2 * sector.n - 2)
    return lhs == angular_laplacian_eigenvalue(sector) + sector.sigma_bar**2


def shell_eigenvalue_check(n: int, k_max: int) -> Report:
    """Every twisted state with ``2I + |sigma_bar| = k`` has oscillator energy ``k + n``.

    Also folds in :func:`u1kepler.spectra.oscillator_shell_check` for each shell.
    """
    report = Report("shell-eigenvalue")
    for k in range(k_max + 1):
        for sigma_bar in range(-k, k + 1):
            if (k - abs(sigma_bar)) % 2:
                continue
            I = (k - abs(sigma_bar)) // 2
            params = ProblemParams(n, sigma_bar)
            for l in range(I + 1):
                sector = sector_from_l(l, params)
                eigenvalue = 2 * I + abs(sigma_bar) + n
                ok = eigenvalue == k + n and harmonic_degree_check(sector)
                report.add(ok, n=n, k=k, sigma_bar=sigma_bar, I=I, l=l, eigenvalue=eigenvalue)
        report.extend(oscillator_shell_check(n, k))
    return report

