"""Least-squares scaling fits ln F = alpha ln N + beta with Student-t intervals.

All points get unit weight.  With Omega points and Omega' = 2 parameters:

    R       = sqrt( sum_i r_i^2 / (Omega - Omega') )
    S(.)    = R * sqrt(diag((W^T W)^-1)),  W = [ln N_i, 1]
    delta   = S(.) * t(Omega - Omega', 1 - nu/2),  nu = 1 - confidence
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np
from scipy.optimize import bisect
from scipy.special import betainc

from .qfi_optimal import optimal_qfi
from .qfi_product import sp_qfi_max

__all__ = [
    "FitConfig",
    "FitResult",
    "loglog_fit",
    "scaling_fit",
    "scaling_points",
    "student_t_cdf",
    "student_t_quantile",
]

N_PARAMS = 2
T_XTOL = 1e-10


def student_t_cdf(t: float, dof: float) -> float:
    """CDF of Student's t via the regularised incomplete beta function."""
    if dof <= 0:
        raise ValueError(f"dof must be positive, got {dof}")
    tail = 0.5 * betainc(dof / 2.0, 0.5, dof / (dof + t * t))
    return 1.0 - tail if t >= 0 else tail


def student_t_quantile(dof: float, p: float) -> float:
    """Inverse CDF of Student's t, by bisection on :func:`student_t_cdf`."""
    if dof < 1:
        raise ValueError(f"dof must be >= 1, got {dof}")
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    if p == 0.5:
        return 0.0
    if p < 0.5:
        return -student_t_quantile(dof, 1.0 - p)
    hi = 1.0
    while student_t_cdf(hi, dof) < p:
        hi *= 2.0
    return bisect(lambda t: student_t_cdf(t, dof) - p, 0.0, hi, xtol=T_XTOL, rtol=4 * np.finfo(float).eps, maxiter=500)


@dataclass(frozen=True)
class FitResult:
    alpha_hat: float
    beta_hat: float
    S_alpha: float
    S_beta: float
    R: float
    chi2: float
    ci_alpha: float
    ci_beta: float
    n_points: int
    confidence: float
    n_params: int = N_PARAMS

    @property
    def prefactor(self) -> float:
        """exp(beta_hat): the fitted F ~ prefactor * N^alpha."""
        return math.exp(self.beta_hat)


def loglog_fit(points: Iterable[tuple[float, float]], confidence: float = 0.95) -> FitResult:
    """Fit ln F against ln N for ``points`` = [(N, F), ...].

    F may be an arbitrarily large int; logs are taken before any float
    conversion.
    """
    pts = list(points)
    if len(pts) < 3:
        raise ValueError(f"need at least 3 points for a 2-parameter fit, got {len(pts)}")
    if not 0 < confidence < 1:
        raise ValueError(f"confidence must lie in (0, 1), got {confidence}")
    ns = [n for n, _ in pts]
    if len(set(ns)) != len(ns):
        raise ValueError("abscissae must be distinct")
    if any(n <= 0 for n in ns):
        raise ValueError("abscissae must be positive")
    if any(not f > 0 for _, f in pts):
        raise ValueError("all F must be positive")

    x = np.array([math.log(n) for n in ns])
    y = np.array([math.log(f) for _, f in pts])
    W = np.column_stack([x, np.ones_like(x)])
    # lstsq (SVD) for the estimates; the explicit inverse only feeds S(.)
    (alpha, beta), *_ = np.linalg.lstsq(W, y, rcond=None)
    cov = np.linalg.inv(W.T @ W)
    resid = y - (alpha * x + beta)
    chi2 = float(resid @ resid)
    dof = len(pts) - N_PARAMS
    R = math.sqrt(chi2 / dof)
    s_alpha = R * math.sqrt(cov[0, 0])
    s_beta = R * math.sqrt(cov[1, 1])
    nu = 1.0 - confidence
    t = student_t_quantile(dof, 1.0 - nu / 2.0)
    return FitResult(
        alpha_hat=float(alpha),
        beta_hat=float(beta),
        S_alpha=s_alpha,
        S_beta=s_beta,
        R=R,
        chi2=chi2,
        ci_alpha=s_alpha * t,
        ci_beta=s_beta * t,
        n_points=len(pts),
        confidence=confidence,
    )


Mode = Literal["optimal", "product"]


@dataclass(frozen=True)
class FitConfig:
    n_min: int = 200
    n_max: int = 2000
    step: int = 100
    confidence: float = 0.95

    def grid(self) -> list[int]:
        if self.step < 1 or self.n_min > self.n_max:
            raise ValueError(f"bad grid {self}")
        return list(range(self.n_min, self.n_max + 1, self.step))


def scaling_points(k: int, mode: Mode, config: FitConfig = FitConfig()) -> list[tuple[int, float]]:
    """(N, maximal QFI) over ``config.grid()``; N < k is skipped."""
    if mode == "optimal":
        return [(N, optimal_qfi(N, k).qfi) for N in config.grid() if N >= k]
    if mode == "product":
        return [(N, sp_qfi_max(N, k).qfi) for N in config.grid() if N >= k]
    raise ValueError(f"unknown mode {mode!r}")


def scaling_fit(k: int, mode: Mode, config: FitConfig = FitConfig()) -> FitResult:
    return loglog_fit(scaling_points(k, mode, config), config.confidence)
