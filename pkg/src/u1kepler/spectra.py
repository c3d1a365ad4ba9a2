"""Bound-state spectrum, degeneracies and K-type bookkeeping.

Energies are exact rationals in natural units (hbar = mass = coupling = 1).
The Hilbert space of bound states is represented by its highest-weight label
and its K-type ledger only; no group action is constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ._report import Report
from .repcore import (
    HALF,
    HighestWeight,
    ProblemParams,
    dim_highest_weight,
    dim_sector,
    sector_labels,
)

__all__ = [
    "SpectrumLevel",
    "SpectrumTable",
    "energy",
    "hw_label",
    "kappa_from_shell_energy",
    "ktype_pair",
    "level_degeneracy",
    "oscillator_shell_check",
    "principal_number",
    "spectrum_table",
    "verify_ktype_dimensions",
]


@dataclass(frozen=True)
class SpectrumLevel:
    I: int
    energy: Fraction
    degeneracy: int
    left_ktype: HighestWeight
    right_ktype: HighestWeight


@dataclass(frozen=True)
class SpectrumTable:
    params: ProblemParams
    levels: tuple[SpectrumLevel, ...]
    hw_label: tuple[Fraction, ...]


def _check_level(I: int) -> None:
    if I < 0:
        raise ValueError(f"level index I must be nonnegative, got {I}")


def principal_number(I: int, params: ProblemParams) -> Fraction:
    """``n_I = I + (n + |sigma_bar|)/2``."""
    _check_level(I)
    return I + Fraction(params.n + params.abs_sigma, 2)


def energy(I: int, params: ProblemParams) -> Fraction:
    """``E_I = -(1/2) / n_I^2`` as an exact rational."""
    return -HALF / principal_number(I, params) ** 2


def level_degeneracy(I: int, params: ProblemParams) -> int:
    """Dimension of the ``E_I`` eigenspace: sum of sector dimensions for ``l = 0..I``."""
    _check_level(I)
    return sum(dim_sector(*sector_labels(l, params.sigma_bar), params.n) for l in range(I + 1))


def _ktype_weights(a: int, b: int, n: int) -> tuple[HighestWeight, HighestWeight]:
    left = HighestWeight([-HALF] * (n - 1) + [-(HALF + a)])
    right = HighestWeight([HALF + b] + [HALF] * (n - 1))
    return left, right


def ktype_pair(I: int, params: ProblemParams) -> tuple[HighestWeight, HighestWeight]:
    """Highest weights of the U(n) x U(n) K-type carried by level ``I``.

    The left factor is the conjugate module with weight
    ``(-1/2, ..., -1/2, -(1/2 + a))``, the right one has ``(1/2 + b, 1/2, ..., 1/2)``,
    where ``(a, b) = (I, I + |sigma_bar|)`` for ``sigma_bar >= 0`` and the two are
    exchanged for negative charge.
    """
    _check_level(I)
    if params.sigma_bar < 0:
        left, right = ktype_pair(I, params.mirrored())
        a = -left.entries[-1] - HALF
        b = right.entries[0] - HALF
        return _ktype_weights(int(b), int(a), params.n)
    return _ktype_weights(I, I + params.sigma_bar, params.n)


def hw_label(params: ProblemParams) -> tuple[Fraction, ...]:
    """Highest weight of the bound-state module of the double cover of U(n, n).

    For ``sigma_bar >= 0`` this is ``(-1/2 x n, 1/2 + sigma_bar, 1/2 x (n-1))``.
    Negative charge is the reversed, negated tuple of the mirrored charge.
    """
    n = params.n
    if params.sigma_bar < 0:
        return tuple(-x for x in reversed(hw_label(params.mirrored())))
    return tuple([-HALF] * n + [HALF + params.sigma_bar] + [HALF] * (n - 1))


def spectrum_table(params: ProblemParams, I_max: int) -> SpectrumTable:
    levels = []
    for I in range(I_max + 1):
        left, right = ktype_pair(I, params)
        levels.append(
            SpectrumLevel(
                I=I,
                energy=energy(I, params),
                degeneracy=level_degeneracy(I, params),
                left_ktype=left,
                right_ktype=right,
            )
        )
    return SpectrumTable(params=params, levels=tuple(levels), hw_label=hw_label(params))


def kappa_from_shell_energy(I: int, params: ProblemParams) -> Fraction:
    """Solve ``2I + |sigma_bar| + n = 2I + |sigma_bar| + 2 n kappa`` for ``kappa``.

    The left side is the oscillator energy of the twisted level; the right
    side is the energy carried by the K-type built from weights shifted by ``kappa``.
    """
    shell_energy = 2 * I + params.abs_sigma + params.n
    return Fraction(shell_energy - 2 * I - params.abs_sigma, 2 * params.n)


def verify_ktype_dimensions(params: ProblemParams, I_max: int) -> Report:
    """Check the K-type factorization of each level's degeneracy and the value of kappa.

    For every ``I <= I_max``:

    * ``dim(left) * dim(right) == level_degeneracy(I)``, both sides exact;
    * the product closed form ``C(a+n-1, n-1) * C(b+n-1, n-1)`` agrees;
    * ``kappa == 1/2`` and the oscillator number ``sum(right) - sum(left)``
      of the K-type equals ``2I + |sigma_bar| + n``.
    """
    n = params.n
    report = Report("ktype-dimensions")
    for I in range(I_max + 1):
        left, right = ktype_pair(I, params)
        a = int(-left.entries[-1] - HALF)
        b = int(right.entries[0] - HALF)
        product = dim_highest_weight(left) * dim_highest_weight(right)
        closed = comb(a + n - 1, n - 1) * comb(b + n - 1, n - 1)
        degeneracy = level_degeneracy(I, params)
        kappa = kappa_from_shell_energy(I, params)
        number = sum(right.entries) - sum(left.entries)
        ok = product == closed == degeneracy and kappa == HALF and number == 2 * I + params.abs_sigma + n
        report.add(
            ok,
            n=n,
            sigma_bar=params.sigma_bar,
            I=I,
            product=product,
            closed_form=closed,
            degeneracy=degeneracy,
            kappa=kappa,
            ktype_number=number,
        )
    return report


def oscillator_shell_check(n: int, k: int) -> Report:
    """Dimension bookkeeping of shell ``k`` of the 2n-dimensional oscillator.

    Sums ``level_degeneracy((k - |sigma_bar|)/2)`` over every charge with
    ``|sigma_bar| <= k`` of the right parity (each ``sigma*`` is one-dimensional)
    and compares with ``C(2n+k-1, 2n-1)``.
    """
    if n < 2:
        raise ValueError(f"n must satisfy n >= 2, got n={n}")
    if k < 0:
        raise ValueError(f"shell index must be nonnegative, got {k}")
    report = Report("oscillator-shell")
    lhs = 0
    terms = []
    for sigma_bar in range(-k, k + 1):
        if (k - abs(sigma_bar)) % 2:
            continue
        d = level_degeneracy((k - abs(sigma_bar)) // 2, ProblemParams(n, sigma_bar))
        terms.append((sigma_bar, d))
        lhs += d
    rhs = comb(2 * n + k - 1, 2 * n - 1)
    report.add(lhs == rhs, n=n, k=k, lhs=lhs, rhs=rhs, terms=terms)
    return report
