r"""Closed-form radial eigenfunctions and their numerical certification.

After separating the angular sector ``l`` the radial profile is

.. math::

    \tilde R_{kl}(\rho) = c\,\rho^{2l+|\bar\sigma|+3/2}
        L^{(2l+|\bar\sigma|+n-1)}_{k-1}\!\left(\frac{2\rho^2}{n_I}\right)
        e^{-\rho^2/n_I},
    \qquad n_I = I + \frac{n+|\bar\sigma|}{2},\quad I = k - 1 + l,

normalized in :math:`L^2(\mathbb{R}_+, \rho^{2n-2}\,d\rho)`.  The separated
operator it must satisfy is

.. math::

    -\frac{1}{8\rho^{2n-1}}\partial_\rho\,\rho^{2n-2}\partial_\rho\frac{1}{\rho}
    + \frac{C_l}{2\rho^4} - \frac{1}{\rho^2},

with ``C_l`` from :func:`u1kepler.repcore.radial_coefficient`.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy import integrate, special

from .repcore import ProblemParams, radial_coefficient
from .spectra import energy, principal_number

__all__ = [
    "QuadratureError",
    "RadialEigenfunction",
    "default_grid",
    "derivatives",
    "laguerre",
    "normalization_constant",
    "normalization_constant_quadrature",
    "orthonormality_gram",
    "radial_eigenfunction",
    "radial_operator",
    "radial_operator_residual",
    "sign_changes",
]

DEFAULT_STEP = 1e-3


class QuadratureError(RuntimeError):
    """Raised when a quadrature does not reach the requested accuracy."""


def laguerre(alpha: float, m: int, t):
    """Generalized Laguerre polynomial ``L_m^alpha(t)`` by three-term recurrence.

    ``t`` may be a scalar or an array.
    """
    if m < 0:
        raise ValueError(f"degree must be nonnegative, got {m}")
    t = np.asarray(t, dtype=float)
    prev = np.ones_like(t)
    if m == 0:
        return prev if prev.ndim else float(prev)
    cur = 1.0 + alpha - t
    for j in range(1, m):
        prev, cur = cur, ((2 * j + 1 + alpha - t) * cur - (j + alpha) * prev) / (j + 1)
    return cur if cur.ndim else float(cur)


def _log_laguerre_norm(alpha: int, m: int) -> float:
    """``log( int_0^inf s^(alpha+1) e^-s [L_m^alpha(s)]^2 ds ) = log((2m+alpha+1) Gamma(m+alpha+1)/m!)``."""
    return math.log(2 * m + alpha + 1) + math.lgamma(m + alpha + 1) - math.lgamma(m + 1)


def normalization_constant(k: int, l: int, params: ProblemParams) -> float:
    """Positive constant giving the radial profile unit norm in ``rho^(2n-2) d rho``.

    With ``t = rho^2`` and ``s = 2t/n_I`` the squared norm becomes
    ``c^2/2 (n_I/2)^(alpha+2) int s^(alpha+1) e^-s [L_{k-1}^alpha(s)]^2 ds``.
    """
    _check_quantum_numbers(k, l)
    alpha = 2 * l + params.abs_sigma + params.n - 1
    n_i = float(principal_number(k - 1 + l, params))
    log_sq = math.log(0.5) + (alpha + 2) * math.log(n_i / 2) + _log_laguerre_norm(alpha, k - 1)
    return math.exp(-0.5 * log_sq)


def _check_quantum_numbers(k: int, l: int) -> None:
    if k < 1:
        raise ValueError(f"radial quantum number k starts at 1, got k={k}")
    if l < 0:
        raise ValueError(f"l must be nonnegative, got l={l}")


@dataclass(frozen=True)
class RadialEigenfunction:
    k: int
    l: int
    params: ProblemParams
    norm_const: float

    @property
    def I(self) -> int:
        return self.k - 1 + self.l

    @property
    def n_I(self) -> Fraction:
        return principal_number(self.I, self.params)

    @property
    def energy(self) -> Fraction:
        return energy(self.I, self.params)

    @property
    def alpha(self) -> int:
        """Laguerre parameter ``2l + |sigma_bar| + n - 1``."""
        return 2 * self.l + self.params.abs_sigma + self.params.n - 1

    @property
    def power(self) -> float:
        return 2 * self.l + self.params.abs_sigma + 1.5

    def __call__(self, rho):
        rho = np.asarray(rho, dtype=float)
        n_i = float(self.n_I)
        with np.errstate(divide="ignore"):
            log_env = math.log(self.norm_const) + self.power * np.log(rho) - rho**2 / n_i
        value = np.exp(log_env) * laguerre(self.alpha, self.k - 1, 2 * rho**2 / n_i)
        return value if value.ndim else float(value)

    def t_profile(self, t):
        """The profile in ``t = rho^2``: ``R(t) = c t^L L_{k-1}^alpha(2t/n_I) e^(-t/n_I)``."""
        t = np.asarray(t, dtype=float)
        big_l = self.l + self.params.abs_sigma / 2
        n_i = float(self.n_I)
        value = self.norm_const * t**big_l * laguerre(self.alpha, self.k - 1, 2 * t / n_i) * np.exp(-t / n_i)
        return value if value.ndim else float(value)

    def scaled(self, factor: float) -> Callable:
        return lambda rho: factor * self(rho)


def radial_eigenfunction(k: int, l: int, params: ProblemParams) -> RadialEigenfunction:
    _check_quantum_numbers(k, l)
    return RadialEigenfunction(k=k, l=l, params=params, norm_const=normalization_constant(k, l, params))


def normalization_constant_quadrature(k: int, l: int, params: ProblemParams, nodes: int | None = None) -> float:
    """Same constant as :func:`normalization_constant`, from Gauss-Laguerre quadrature.

    Integrates the squared profile of the unit-constant evaluator after the
    substitution ``s = 2 rho^2 / n_I``, dividing the weight ``s^alpha e^-s`` out
    of the sampled integrand.
    """
    _check_quantum_numbers(k, l)
    bare = RadialEigenfunction(k=k, l=l, params=params, norm_const=1.0)
    return 1.0 / math.sqrt(_gauss_inner(bare, bare, nodes))


def _gauss_inner(f: RadialEigenfunction, g: RadialEigenfunction, nodes: int | None = None) -> float:
    """``int f g rho^(2n-2) d rho`` for two profiles of the same sector, by Gauss-Laguerre."""
    assert f.params == g.params and f.l == g.l
    alpha = f.alpha
    n_i_f, n_i_g = float(f.n_I), float(g.n_I)
    # common exponential decay rate in s = 2 rho^2 / n_f: f g ~ exp(-rho^2 (1/n_f + 1/n_g))
    scale = 0.5 * n_i_f * (1 / n_i_f + 1 / n_i_g)
    if nodes is None:
        nodes = f.k + g.k + 8
    s, w = special.roots_genlaguerre(nodes, alpha)
    # map nodes of weight s^alpha e^-s to the rescaled variable u = s / scale
    u = s / scale
    rho = np.sqrt(n_i_f * u / 2)
    drho_du = np.sqrt(n_i_f / 2) / (2 * np.sqrt(u))
    integrand = f(rho) * g(rho) * rho ** (2 * f.params.n - 2) * drho_du
    # int h(u) du = int h(s/scale) ds / scale, weight s^alpha e^-s divided out
    weight = s**alpha * np.exp(-s)
    return float(np.sum(w * integrand / weight) / scale)


def orthonormality_gram(
    l: int,
    params: ProblemParams,
    k_max: int,
    method: str = "gauss",
    tol: float = 1e-11,
) -> np.ndarray:
    """Gram matrix ``G[i, j] = int f_i f_j rho^(2n-2) d rho`` for ``k = 1..k_max``.

    ``method`` is ``"gauss"`` (Gauss-Laguerre, exact for these integrands) or
    ``"adaptive"`` (:func:`scipy.integrate.quad` on ``(0, inf)``).  A quadrature
    whose error estimate exceeds ``tol`` raises :class:`QuadratureError`.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be at least 1, got {k_max}")
    funcs = [radial_eigenfunction(k, l, params) for k in range(1, k_max + 1)]
    gram = np.empty((k_max, k_max))
    for i, f in enumerate(funcs):
        for j, g in enumerate(funcs[: i + 1]):
            if method == "gauss":
                value = _gauss_inner(f, g)
                check = _gauss_inner(f, g, nodes=f.k + g.k + 16)
                if abs(value - check) > tol:
                    raise QuadratureError(f"Gauss-Laguerre unstable for k=({f.k},{g.k}): {value} vs {check}")
            elif method == "adaptive":
                value = _adaptive_inner(f, g, tol)
            else:
                raise ValueError(f"unknown quadrature method {method!r}")
            gram[i, j] = gram[j, i] = value
    return gram


def _adaptive_inner(f: RadialEigenfunction, g: RadialEigenfunction, tol: float) -> float:
    weight_power = 2 * f.params.n - 2
    # split at a point past the outermost node so quad resolves the oscillations
    split = 3.0 * math.sqrt(float(max(f.n_I, g.n_I))) * math.sqrt(f.k + g.k)
    total, err_total = 0.0, 0.0
    for a, b in ((0.0, split), (split, np.inf)):
        with warnings.catch_warnings():
            warnings.simplefilter("error", integrate.IntegrationWarning)
            try:
                value, err = integrate.quad(
                    lambda r: f(r) * g(r) * r**weight_power, a, b, epsabs=tol / 10, epsrel=tol / 10, limit=400
                )
            except integrate.IntegrationWarning as exc:
                raise QuadratureError(f"adaptive quadrature failed for k=({f.k},{g.k}): {exc}") from exc
        total += value
        err_total += err
    if err_total > tol:
        raise QuadratureError(f"adaptive quadrature error {err_total:.3e} exceeds {tol:.1e} for k=({f.k},{g.k})")
    return total


# --- finite-difference residuals ---------------------------------------------


def derivatives(func: Callable, x: np.ndarray, h: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Value, first and second derivative of ``func`` by 4th-order central differences."""
    x = np.asarray(x, dtype=float)
    fm2, fm1, f0, fp1, fp2 = (np.asarray(func(x + j * h), dtype=float) for j in (-2, -1, 0, 1, 2))
    d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
    d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)
    return f0, d1, d2


def check_grid(grid, h: float) -> np.ndarray:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("grid must be a nonempty 1-d sequence")
    if h <= 0:
        raise ValueError(f"step must be positive, got h={h}")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("grid must be strictly increasing")
    if grid[0] < 5 * h:
        raise ValueError(f"grid must stay at least 5h={5 * h:g} away from 0, starts at {grid[0]:g}")
    if grid.size > 1 and h > np.min(np.diff(grid)):
        raise ValueError(f"step h={h:g} exceeds the grid spacing {np.min(np.diff(grid)):g}")
    return grid


def default_grid(f: RadialEigenfunction, points: int = 271) -> np.ndarray:
    """``[0.3, 3.0] * sqrt(n_I)``, uniformly sampled."""
    scale = math.sqrt(float(f.n_I))
    return np.linspace(0.3 * scale, 3.0 * scale, points)


def radial_operator(func: Callable, rho: np.ndarray, l: int, params: ProblemParams, h: float = DEFAULT_STEP) -> np.ndarray:
    """Apply the separated radial operator of sector ``l`` to ``func`` at ``rho``."""
    n = params.n
    coeff = float(radial_coefficient(l, params))
    rho = np.asarray(rho, dtype=float)

    def over_rho(x):
        return func(x) / x

    u, du, d2u = derivatives(over_rho, rho, h)
    f = u * rho
    # rho^{-(2n-1)} d/drho (rho^{2n-2} u') = (u'' + (2n-2) u'/rho) / rho
    kinetic = -(d2u + (2 * n - 2) * du / rho) / (8 * rho)
    return kinetic + coeff * f / (2 * rho**4) - f / rho**2


def radial_operator_residual(f: RadialEigenfunction | Callable, grid=None, h: float = DEFAULT_STEP, *,
                             l: int | None = None, params: ProblemParams | None = None,
                             eigenvalue: float | None = None) -> float:
    """``max |(Op f) - E f| / max |f|`` over the grid.

    ``f`` is normally a :class:`RadialEigenfunction`; any callable may be
    passed together with ``l``, ``params`` and ``eigenvalue``.
    """
    if isinstance(f, RadialEigenfunction):
        l = f.l if l is None else l
        params = f.params if params is None else params
        eigenvalue = float(f.energy) if eigenvalue is None else eigenvalue
        if grid is None:
            grid = default_grid(f)
    if l is None or params is None or eigenvalue is None or grid is None:
        raise ValueError("l, params, eigenvalue and grid are required for a bare callable")
    grid = check_grid(grid, h)
    values = np.asarray(f(grid), dtype=float)
    scale = np.max(np.abs(values))
    if scale == 0:
        raise ValueError("function vanishes on the whole grid")
    applied = radial_operator(f, grid, l, params, h)
    return float(np.max(np.abs(applied - eigenvalue * values)) / scale)


def sign_changes(values: np.ndarray, floor: float = 1e-12) -> int:
    """Number of sign changes, ignoring samples below ``floor * max|values|``."""
    values = np.asarray(values, dtype=float)
    significant = values[np.abs(values) > floor * np.max(np.abs(values))]
    return int(np.count_nonzero(np.diff(np.sign(significant))))
