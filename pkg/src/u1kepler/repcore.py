r"""Exact representation-theoretic kernel.

Highest weights of :math:`\tilde{\rm U}(n)`, Weyl dimensions, quadratic
Casimir values and the angular eigenvalues of the twisted Laplacian on
:math:`\mathbb{C}P^{n-1}`.  Everything here is computed with Python integers
and :class:`fractions.Fraction`; no floating point is used, so every identity
check is bit-exact.

Casimir normalization
---------------------
The quadratic Casimir of U(n) is taken as :math:`\langle\lambda,\lambda+2\rho\rangle`
in the trace form,

.. math::

    c_2(\lambda) = \sum_i \lambda_i^2 + \sum_i (n + 1 - 2i)\,\lambda_i ,

which gives :math:`c_2[{\rm U}(1)]|_\sigma = \bar\sigma^2`.  The angular
Laplacian on the sector with highest weight :math:`(p, 0, \dots, 0, -q)` is
then :math:`2(c_2 - \bar\sigma^2) = 4pq + 2(n-1)(p+q)`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Union

from ._report import Report

__all__ = [
    "AngularSector",
    "HighestWeight",
    "ProblemParams",
    "angular_laplacian_eigenvalue",
    "casimir_u_n",
    "dim_highest_weight",
    "dim_sector",
    "iter_shell_sectors",
    "radial_coefficient",
    "sector_from_l",
    "sector_labels",
    "sector_weight",
    "shell_sum",
    "verify_dimension_equality",
    "verify_generating_function",
]

Number = Union[int, Fraction]
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ProblemParams:
    """Dimension parameter ``n`` (at least 2) and infinitesimal character ``sigma_bar``."""

    n: int
    sigma_bar: int = 0

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise TypeError(f"n must be an integer, got {self.n!r}")
        if isinstance(self.sigma_bar, bool) or not isinstance(self.sigma_bar, int):
            raise TypeError(f"sigma_bar must be an integer, got {self.sigma_bar!r}")
        if self.n < 2:
            raise ValueError(f"n must satisfy n >= 2, got n={self.n}")

    @property
    def abs_sigma(self) -> int:
        return abs(self.sigma_bar)

    def mirrored(self) -> ProblemParams:
        return ProblemParams(self.n, -self.sigma_bar)


@dataclass(frozen=True)
class HighestWeight:
    """Weakly decreasing tuple of half-integers labelling an irreducible module.

    Entries are stored as :class:`~fractions.Fraction`.  All entries must be
    integers, or all must be half-odd-integers.
    """

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable[Number]) -> None:
        values = tuple(Fraction(x) for x in entries)
        if not values:
            raise ValueError("a highest weight needs at least one entry")
        for x in values:
            if (2 * x).denominator != 1:
                raise ValueError(f"entry {x} is not a half-integer")
        parities = {x.denominator for x in values}
        if len(parities) > 1:
            raise ValueError(f"mixed integer/half-odd entries in {values}")
        if any(a < b for a, b in zip(values, values[1:])):
            raise ValueError(f"entries must be weakly decreasing, got {values}")
        object.__setattr__(self, "entries", values)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def shifted(self, c: Number) -> HighestWeight:
        return HighestWeight(x + Fraction(c) for x in self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "[" + " ".join(str(x) for x in self.entries) + "]"


@dataclass(frozen=True)
class AngularSector:
    r"""The U(n)-module :math:`\mathscr{R}_{p,q}^\sigma` with its derived data."""

    p: int
    q: int
    n: int
    l: int
    dim: int
    casimir: Fraction
    angular_eigenvalue: Fraction

    @property
    def sigma_bar(self) -> int:
        return self.p - self.q

    @property
    def harmonic_degree(self) -> int:
        """Degree of the spherical harmonics on :math:`S^{2n-1}` carrying this sector, ``p + q``."""
        return 2 * self.l + abs(self.sigma_bar)


def sector_weight(p: int, q: int, n: int) -> HighestWeight:
    """The weight ``(p, 0, ..., 0, -q)`` of rank ``n``."""
    if n < 2:
        raise ValueError(f"n must satisfy n >= 2, got n={n}")
    return HighestWeight([p] + [0] * (n - 2) + [-q])


def dim_sector(p: int, q: int, n: int) -> int:
    """Dimension of the U(n)-module with highest weight ``(p, 0, ..., 0, -q)``.

    Evaluates ``(p+q+n-1)/(n-1) * C(p+n-2, n-2) * C(q+n-2, n-2)`` exactly.
    """
    if n < 2:
        raise ValueError(f"n must satisfy n >= 2, got n={n}")
    if p < 0 or q < 0:
        raise ValueError(f"p and q must be nonnegative, got p={p}, q={q}")
    num = (p + q + n - 1) * comb(p + n - 2, n - 2) * comb(q + n - 2, n - 2)
    dim, rem = divmod(num, n - 1)
    # the prefactor is always absorbed; a remainder means a broken formula
    assert rem == 0, (p, q, n)
    return dim


def dim_highest_weight(weight: HighestWeight | Iterable[Number]) -> int:
    """Weyl dimension ``prod_{i<j} (lam_i - lam_j + j - i) / (j - i)``."""
    lam = weight.entries if isinstance(weight, HighestWeight) else HighestWeight(weight).entries
    rank = len(lam)
    value = Fraction(1)
    for i in range(rank):
        for j in range(i + 1, rank):
            value *= (lam[i] - lam[j] + (j - i)) / (j - i)
    assert value.denominator == 1
    return int(value)


def casimir_u_n(weight: HighestWeight | Iterable[Number]) -> Fraction:
    """``sum lam_i^2 + sum (n + 1 - 2i) lam_i`` with ``i`` counted from 1."""
    lam = weight.entries if isinstance(weight, HighestWeight) else HighestWeight(weight).entries
    n = len(lam)
    return sum((x * x + (n + 1 - 2 * i) * x for i, x in enumerate(lam, start=1)), Fraction(0))


def sector_labels(l: int, sigma_bar: int) -> tuple[int, int]:
    """``(p, q)`` of angular sector ``l``.

    For ``sigma_bar >= 0`` the index is ``q`` and ``p = q + sigma_bar``.
    Negative charges are obtained from the mirror ``(p, q, sigma_bar) -> (q, p, -sigma_bar)``.
    """
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    if sigma_bar < 0:
        q, p = sector_labels(l, -sigma_bar)
        return p, q
    return l + sigma_bar, l


def sector_from_l(l: int, params: ProblemParams) -> AngularSector:
    """Angular sector with index ``l`` for the given charge, all derived fields filled in."""
    p, q = sector_labels(l, params.sigma_bar)
    return _build_sector(p, q, params.n, l)


def _build_sector(p: int, q: int, n: int, l: int) -> AngularSector:
    cas = casimir_u_n(sector_weight(p, q, n))
    sigma_bar = p - q
    return AngularSector(
        p=p,
        q=q,
        n=n,
        l=l,
        dim=dim_sector(p, q, n),
        casimir=cas,
        angular_eigenvalue=2 * (cas - sigma_bar**2),
    )


def angular_laplacian_eigenvalue(sector: AngularSector) -> Fraction:
    r"""Eigenvalue of the twisted Laplacian :math:`\Delta_{\mathcal A}` on :math:`\mathbb{C}P^{n-1}`.

    Recomputed from the sector's weight as ``2 (c_2[U(n)] - sigma_bar^2)``.
    """
    cas = casimir_u_n(sector_weight(sector.p, sector.q, sector.n))
    return 2 * (cas - Fraction(sector.sigma_bar) ** 2)


def radial_coefficient(l: int, params: ProblemParams) -> Fraction:
    """Coefficient ``L^2 + (n-1) L + (n - 5/4)/4`` of the separated radial equation, ``L = l + |sigma_bar|/2``."""
    big_l = l + Fraction(params.abs_sigma, 2)
    n = params.n
    return big_l**2 + (n - 1) * big_l + Fraction(1, 4) * (n - Fraction(5, 4))


# --- shell bookkeeping -------------------------------------------------------


def iter_shell_sectors(n: int, k: int) -> Iterator[tuple[int, int, AngularSector]]:
    """Yield ``(sigma_bar, I, sector)`` for all sectors with ``2I + |sigma_bar| = k``.

    Ordered by ascending ``sigma_bar`` and then ascending ``l``.
    """
    for sigma_bar in range(-k, k + 1):
        if (k - abs(sigma_bar)) % 2:
            continue
        level = (k - abs(sigma_bar)) // 2
        params = ProblemParams(n, sigma_bar)
        for l in range(level + 1):
            yield sigma_bar, level, sector_from_l(l, params)


def shell_sum(n: int, k: int) -> int:
    """Left-hand side of the shell dimension equality at shell ``k``."""
    return sum(sector.dim for _, _, sector in iter_shell_sectors(n, k))


def verify_dimension_equality(n: int, k_max: int) -> Report:
    """Check ``sum of sector dims over shell k == C(2n+k-1, 2n-1)`` for ``k = 0..k_max``."""
    if n < 2:
        raise ValueError(f"n must satisfy n >= 2, got n={n}")
    report = Report("dimension-equality")
    for k in range(k_max + 1):
        lhs = shell_sum(n, k)
        rhs = comb(2 * n + k - 1, 2 * n - 1)
        report.add(lhs == rhs, n=n, k=k, lhs=lhs, rhs=rhs)
    return report


def _series_mul(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai:
            for j, bj in enumerate(b[: order + 1 - i]):
                out[i + j] += ai * bj
    return out


def inverse_power_series(m: int, order: int) -> list[int]:
    """Coefficients of ``(1 - t)^(-m)`` up to ``t^order`` by repeated exact convolution."""
    geometric = [1] * (order + 1)
    series = [1] + [0] * order
    for _ in range(m):
        series = _series_mul(series, geometric, order)
    return series


def verify_generating_function(n: int, k_max: int) -> Report:
    """Compare the coefficients of ``(1 - t)^(-2n)`` with the shell sums.

    Each row also carries the coefficient of the intermediate double series
    ``sum_{p,q} t^(p+q) / (1 - t^2) * dim R_{p,q}``, expanded independently.
    """
    if n < 2:
        raise ValueError(f"n must satisfy n >= 2, got n={n}")
    target = inverse_power_series(2 * n, k_max)
    # sum_{p,q} dim_{p,q} t^{p+q}, then multiply by 1/(1 - t^2)
    by_degree = [0] * (k_max + 1)
    for p in range(k_max + 1):
        for q in range(k_max + 1 - p):
            by_degree[p + q] += dim_sector(p, q, n)
    even_geometric = [1 if i % 2 == 0 else 0 for i in range(k_max + 1)]
    double_series = _series_mul(by_degree, even_geometric, k_max)

    report = Report("generating-function")
    for k in range(k_max + 1):
        lhs = shell_sum(n, k)
        ok = target[k] == lhs == double_series[k]
        report.add(ok, n=n, k=k, coefficient=target[k], shell_sum=lhs, double_series=double_series[k])
    return report
