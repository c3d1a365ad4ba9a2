"""Verification suites, one per acceptance criterion.

Each suite returns a :class:`~u1kepler._report.Report`.  Exact suites compare
integers and rationals; numerical suites compare a residual against a
tolerance that can be overridden by the caller (or by the environment
variables listed in :data:`TOLERANCE_ENV`).
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from typing import Callable

import numpy as np

from ._report import Report
from .geometry import DEFAULT_SEED, metric_decomposition_residual, random_samples
from .micz import TEST_FUNCTIONS, conjugation_residual, sector_correspondence, spectrum_correspondence
from .oscillator import harmonic_degree_check, oscillator_residual, shell_eigenvalue_check, twist, twisted_inner
from .radial import orthonormality_gram, radial_eigenfunction, radial_operator_residual
from .repcore import (
    ProblemParams,
    angular_laplacian_eigenvalue,
    radial_coefficient,
    sector_from_l,
    verify_dimension_equality,
    verify_generating_function,
)
from .spectra import energy, level_degeneracy, oscillator_shell_check, verify_ktype_dimensions

__all__ = ["SUITES", "TOLERANCES", "TOLERANCE_ENV", "run_suite", "tolerances"]

TOLERANCES: dict[str, float] = {
    "radial": 1e-7,
    "gram": 1e-8,
    "oscillator": 1e-7,
    "micz": 1e-6,
    "geometry": 1e-12,
}

TOLERANCE_ENV = {key: f"U1KEPLER_TOL_{key.upper()}" for key in TOLERANCES}


def tolerances(overrides: dict[str, float] | None = None) -> dict[str, float]:
    """Default tolerances, then environment overrides, then explicit ``overrides``."""
    tol = dict(TOLERANCES)
    for key, var in TOLERANCE_ENV.items():
        if var in os.environ:
            value = float(os.environ[var])
            if value <= 0:
                raise ValueError(f"{var} must be positive")
            tol[key] = value
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if value <= 0:
            raise ValueError(f"tolerance {key} must be positive")
        tol[key] = value
    return tol


def spectrum_spot_values(tol: dict[str, float]) -> Report:
    report = Report("spectrum")
    spots = [((0, 2, 0), Fraction(-1, 2)), ((2, 3, 1), Fraction(-1, 32)), ((0, 4, -3), Fraction(-2, 49))]
    for (I, n, sigma_bar), expected in spots:
        value = energy(I, ProblemParams(n, sigma_bar))
        report.add(value == expected, I=I, n=n, sigma_bar=sigma_bar, energy=value, expected=expected)
    return report


def dimension_equality(tol: dict[str, float]) -> Report:
    report = Report("dimension-equality")
    for n in range(2, 7):
        report.extend(verify_dimension_equality(n, 30))
    return report


def generating_function(tol: dict[str, float]) -> Report:
    report = Report("generating-function")
    for n in range(2, 6):
        report.extend(verify_generating_function(n, 30))
    return report


def ktype_dimensions(tol: dict[str, float]) -> Report:
    report = Report("ktype-dimensions")
    for n, sigma_bar in itertools.product(range(2, 6), range(-6, 7)):
        report.extend(verify_ktype_dimensions(ProblemParams(n, sigma_bar), 10))
    return report


def casimir_consistency(tol: dict[str, float]) -> Report:
    """Both routes to the angular eigenvalue, and the separated radial coefficient."""
    report = Report("casimir")
    for n, sigma_bar, l in itertools.product(range(2, 7), range(-6, 7), range(11)):
        params = ProblemParams(n, sigma_bar)
        sector = sector_from_l(l, params)
        eig = angular_laplacian_eigenvalue(sector)
        closed = 4 * sector.p * sector.q + 2 * (n - 1) * (sector.p + sector.q)
        big_l = l + Fraction(abs(sigma_bar), 2)
        l_form = 4 * big_l**2 + 4 * (n - 1) * big_l - sigma_bar**2
        coefficient_ok = eig + sigma_bar**2 + (n - Fraction(5, 4)) == 4 * radial_coefficient(l, params)
        ok = eig == closed == l_form == sector.angular_eigenvalue and eig >= 0 and coefficient_ok
        report.add(ok, n=n, sigma_bar=sigma_bar, l=l, eigenvalue=eig, closed_form=closed)
    return report


def radial_residuals(tol: dict[str, float]) -> Report:
    report = Report("radial")
    for n, sigma_bar, k, l in itertools.product(range(2, 5), range(-4, 5), range(1, 5), range(4)):
        res = radial_operator_residual(radial_eigenfunction(k, l, ProblemParams(n, sigma_bar)))
        report.add(res < tol["radial"], n=n, sigma_bar=sigma_bar, k=k, l=l, residual=res)
    return report


def orthonormality(tol: dict[str, float]) -> Report:
    report = Report("orthonormality")
    for n, sigma_bar, l in itertools.product(range(2, 5), range(-4, 5), range(4)):
        gram = orthonormality_gram(l, ProblemParams(n, sigma_bar), 6)
        dev = float(np.max(np.abs(gram - np.eye(6))))
        report.add(dev < tol["gram"], n=n, sigma_bar=sigma_bar, l=l, k_max=6, deviation=dev)
    return report


def oscillator_correspondence(tol: dict[str, float]) -> Report:
    report = Report("oscillator")
    for n, sigma_bar, k, l in itertools.product(range(2, 5), range(-4, 5), range(1, 5), range(4)):
        profile = twist(radial_eigenfunction(k, l, ProblemParams(n, sigma_bar)))
        res = oscillator_residual(profile)
        norm_dev = abs(twisted_inner(profile, profile) - 1)
        expected = 2 * (k - 1 + l) + abs(sigma_bar) + n
        ok = res < tol["oscillator"] and norm_dev < tol["gram"] and profile.eigenvalue == expected
        report.add(ok, n=n, sigma_bar=sigma_bar, k=k, l=l, eigenvalue=profile.eigenvalue, residual=res,
                   norm_deviation=norm_dev)
    for n, sigma_bar, l in itertools.product(range(2, 7), range(-12, 13), range(13)):
        sector = sector_from_l(l, ProblemParams(n, sigma_bar))
        if sector.p <= 12 and sector.q <= 12 and not harmonic_degree_check(sector):
            report.add(False, n=n, sigma_bar=sigma_bar, l=l, check="harmonic-degree")
    for n in range(2, 6):
        shells = shell_eigenvalue_check(n, 30)
        report.add(shells.passed, n=n, k_max=30, check="shell-eigenvalue", failures=len(shells.failures))
    return report


def micz_equivalence(tol: dict[str, float]) -> Report:
    report = Report("micz")
    for l, sigma_bar in itertools.product(range(13), range(-8, 9)):
        micz, ok = sector_correspondence(l, sigma_bar)
        if not ok:
            report.add(False, l=l, sigma_bar=sigma_bar, check="sector", j=micz.j, mu=micz.mu)
    for sigma_bar in range(-8, 9):
        report.extend(spectrum_correspondence(sigma_bar, 10))
    for (name, fn), l, sigma_bar in itertools.product(TEST_FUNCTIONS.items(), range(3), range(-4, 5)):
        res = conjugation_residual(fn, l, sigma_bar)
        report.add(res < tol["micz"], check="conjugation", test_fn=name, l=l, sigma_bar=sigma_bar, residual=res)
    return report


def geometry_decomposition(tol: dict[str, float], seed: int = DEFAULT_SEED, count: int = 1000) -> Report:
    report = Report("geometry")
    for n in range(2, 6):
        worst = max(metric_decomposition_residual(s) for s in random_samples(n, count, seed))
        report.add(worst < tol["geometry"], n=n, samples=count, seed=seed, max_residual=worst)
    return report


def hydrogen_regression(tol: dict[str, float]) -> Report:
    report = Report("hydrogen")
    params = ProblemParams(2, 0)
    for big_n in range(1, 12):
        e = energy(big_n - 1, params)
        d = level_degeneracy(big_n - 1, params)
        report.add(e == Fraction(-1, 2 * big_n**2) and d == big_n**2, N=big_n, energy=e, degeneracy=d)
    return report


def shell_counts(tol: dict[str, float]) -> Report:
    report = Report("oscillator-shell")
    for n, k in itertools.product(range(2, 6), range(31)):
        report.extend(oscillator_shell_check(n, k))
    return report


# ordered as the acceptance criteria
SUITES: dict[str, Callable[[dict[str, float]], Report]] = {
    "spectrum": spectrum_spot_values,
    "dimension-equality": dimension_equality,
    "generating-function": generating_function,
    "ktype-dimensions": ktype_dimensions,
    "casimir": casimir_consistency,
    "radial": radial_residuals,
    "orthonormality": orthonormality,
    "oscillator": oscillator_correspondence,
    "micz": micz_equivalence,
    "geometry": geometry_decomposition,
    "hydrogen": hydrogen_regression,
    "oscillator-shell": shell_counts,
}


def run_suite(name: str, tol: dict[str, float] | None = None, seed: int = DEFAULT_SEED) -> Report:
    tol = tolerances() if tol is None else tol
    if name == "geometry":
        return geometry_decomposition(tol, seed=seed)
    return SUITES[name](tol)
