r"""Pointwise checks of the metric decomposition on :math:`\mathbb{C}^n \setminus \{0\}`.

For a base point ``Z`` and tangent vector ``W``,

.. math::

    |W|^2 = d\rho(W)^2 + \rho^2\left(ds^2_{FS}(W)
        + \left(\frac{{\rm Im}(\bar Z\cdot W)}{|Z|^2}\right)^2\right),
    \qquad d\rho(W) = \frac{{\rm Re}(\bar Z\cdot W)}{|Z|}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DEFAULT_SEED",
    "TangentSample",
    "decompose",
    "fs_quadratic",
    "metric_decomposition_residual",
    "quotient_metric_eval",
    "random_samples",
]

DEFAULT_SEED = 20080601


@dataclass(frozen=True)
class TangentSample:
    Z: np.ndarray
    W: np.ndarray

    def __post_init__(self) -> None:
        Z = np.asarray(self.Z, dtype=complex)
        W = np.asarray(self.W, dtype=complex)
        if Z.ndim != 1 or Z.shape != W.shape:
            raise ValueError("Z and W must be complex vectors of equal length")
        if not np.any(Z):
            raise ValueError("base point Z must be nonzero")
        object.__setattr__(self, "Z", Z)
        object.__setattr__(self, "W", W)

    @property
    def rho(self) -> float:
        return float(np.linalg.norm(self.Z))

    @property
    def hermitian(self) -> complex:
        """``conj(Z) . W``."""
        return complex(np.vdot(self.Z, self.W))


def fs_quadratic(s: TangentSample) -> float:
    """Fubini-Study form ``|W|^2/|Z|^2 - |Z . conj(W)|^2/|Z|^4``, clipped at 0."""
    z2 = s.rho**2
    w2 = float(np.vdot(s.W, s.W).real)
    value = w2 / z2 - abs(s.hermitian) ** 2 / z2**2
    return max(value, 0.0)


def _d_rho(s: TangentSample) -> float:
    return s.hermitian.real / s.rho


def metric_decomposition_residual(s: TangentSample) -> float:
    w2 = float(np.vdot(s.W, s.W).real)
    if w2 == 0:
        return 0.0
    rho2 = s.rho**2
    vertical = s.hermitian.imag / rho2
    rhs = _d_rho(s) ** 2 + rho2 * (fs_quadratic(s) + vertical**2)
    return abs(w2 - rhs) / w2


def quotient_metric_eval(s: TangentSample) -> float:
    """``d rho(W)^2 + |Z|^2 ds^2_FS(W)``: the length of ``W`` after dropping its vertical part."""
    return _d_rho(s) ** 2 + s.rho**2 * fs_quadratic(s)


def decompose(s: TangentSample) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split ``W`` into radial (real multiple of Z), vertical (real multiple of iZ) and horizontal parts."""
    Z, W = s.Z, s.W
    z2 = s.rho**2
    c = s.hermitian / z2
    radial = c.real * Z
    vertical = 1j * c.imag * Z
    return radial, vertical, W - radial - vertical


def random_samples(n: int, count: int, seed: int = DEFAULT_SEED) -> list[TangentSample]:
    rng = np.random.default_rng([seed, n])
    samples = []
    for _ in range(count):
        Z = rng.normal(size=n) + 1j * rng.normal(size=n)
        W = rng.normal(size=n) + 1j * rng.normal(size=n)
        # vary the scales so the check is not tied to |Z| ~ 1
        Z *= 10 ** rng.uniform(-2, 2)
        W *= 10 ** rng.uniform(-2, 2)
        samples.append(TangentSample(Z, W))
    return samples
