"""Spectra, degeneracies and eigenfunctions of the U(1)-Kepler problems.

Exact (integer/rational) representation-theoretic bookkeeping lives in
:mod:`u1kepler.repcore` and :mod:`u1kepler.spectra`; numerical certification
of the closed-form eigenfunctions lives in :mod:`u1kepler.radial`,
:mod:`u1kepler.oscillator`, :mod:`u1kepler.micz` and :mod:`u1kepler.geometry`.
"""

__version__ = "0.1.0"

from .repcore import (  # noqa: E402
    AngularSector,
    HighestWeight,
    ProblemParams,
    angular_laplacian_eigenvalue,
    casimir_u_n,
    dim_highest_weight,
    dim_sector,
    sector_from_l,
)
from .spectra import SpectrumLevel, SpectrumTable, energy, hw_label, ktype_pair, level_degeneracy  # noqa: E402

__all__ = [
    "AngularSector",
    "HighestWeight",
    "ProblemParams",
    "SpectrumLevel",
    "SpectrumTable",
    "angular_laplacian_eigenvalue",
    "casimir_u_n",
    "dim_highest_weight",
    "dim_sector",
    "energy",
    "hw_label",
    "ktype_pair",
    "level_degeneracy",
    "sector_from_l",
]
