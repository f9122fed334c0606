"""Generators with all orders up to k: estimating x in sum_i x^i h_i^(N).

The QFI generator is K_x = sum_{i=1}^k i x^(i-1) h_i^(N), diagonal in the
computational basis with sector eigenvalues built from the exact per-order
sector values.  Floats passed as ``x`` are converted to their exact binary
fraction, so ties between sectors are decided in exact arithmetic and the
1e-9 tolerance only matters for callers comparing against rounded data.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .combinat import sector_orders

__all__ = [
    "Case2Report",
    "DichotomyCell",
    "TIE_ATOL",
    "case2_optimal",
    "case2_sector_eigenvalue",
    "dichotomy_map",
]

TIE_ATOL = 1e-9


def _exact_x(x) -> Rational:
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    return x if isinstance(x, Rational) else Fraction(float(x))


def _check(N: int, k: int) -> None:
    if k < 1 or k > N:
        raise ValueError(f"need 1 <= k <= N, got N={N}, k={k}")


def _sector_value(N: int, k: int, x: Rational, m: int):
    orders = sector_orders(N, k, m)
    return sum(i * x ** (i - 1) * orders[i] for i in range(1, k + 1))


def case2_sector_eigenvalue(N: int, k: int, x, m: int):
    """Eigenvalue of K_x in sector ``m`` (exact int or Fraction)."""
    _check(N, k)
    if not 0 <= m <= N:
        raise ValueError(f"need 0 <= m <= N, got m={m}")
    return _sector_value(N, k, _exact_x(x), m)


@dataclass(frozen=True)
class Case2Report:
    N: int
    k: int
    x: float
    lambda_max: Rational
    lambda_min: Rational
    argmax_sectors: tuple[int, ...]
    argmin_sectors: tuple[int, ...]
    qfi: Rational

    @property
    def qfi_float(self) -> float:
        return float(self.qfi)


def case2_optimal(N: int, k: int, x) -> Case2Report:
    _check(N, k)
    xe = _exact_x(x)
    values = [_sector_value(N, k, xe, m) for m in range(N + 1)]
    top, bottom = max(values), min(values)
    argmax = tuple(m for m, v in enumerate(values) if abs(v - top) <= TIE_ATOL)
    argmin = tuple(m for m, v in enumerate(values) if abs(v - bottom) <= TIE_ATOL)
    return Case2Report(N, k, float(x), top, bottom, argmax, argmin, (top - bottom) ** 2)


@dataclass(frozen=True)
class DichotomyCell:
    k: int
    N: int
    x: float
    argmin_sectors: tuple[int, ...]
    argmax_sectors: tuple[int, ...]

    @property
    def zero_in_argmin(self) -> bool:
        return 0 in self.argmin_sectors


def dichotomy_map(k_max: int, N_max: int, x, k_min: int = 1) -> list[DichotomyCell]:
    """Argmin sectors of K_x on the grid k_min <= k <= k_max, k <= N <= N_max."""
    if k_max > N_max:
        raise ValueError(f"need k_max <= N_max, got {k_max} > {N_max}")
    if not 0 < x <= 1:
        raise ValueError(f"dichotomy map needs 0 < x <= 1, got {x}")
    cells = []
    for k in range(k_min, k_max + 1):
        for N in range(k, N_max + 1):
            rep = case2_optimal(N, k, x)
            cells.append(DichotomyCell(k, N, float(x), rep.argmin_sectors, rep.argmax_sectors))
    return cells
