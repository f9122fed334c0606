"""QFI of h_k^(N) for symmetric product probes |phi>^N.

With |phi> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, <sigma_z> = cos(theta)
and the phase phi drops out.  Writing z = cos^2(theta),

    F_SP(z) = 4 [ sum_i c_i z^i - C(N,k)^2 z^k ],
    c_i = C(N,i) C(N-i,i) C(N-2i,k-i),

where c_i counts ordered pairs of k-subsets with symmetric difference 2i.
The -C(N,k)^2 subtraction is folded into the z^k coefficient before anything
is converted to floating point, which removes the O(N) cancellation between
the two leading terms.
"""
from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np
from scipy.optimize import bisect

from .combinat import binom

__all__ = [
    "ProductProbePolynomial",
    "SpMax",
    "hyp2f1_terminating",
    "k3_stationary_points",
    "product_polynomial",
    "sp_qfi_at",
    "sp_qfi_hypergeom",
    "sp_qfi_max",
    "sp_qfi_max_closed_k2",
    "sp_qfi_max_closed_k3",
]

N_BRACKETS = 1024
ROOT_XTOL = 1e-12


@dataclass(frozen=True)
class ProductProbePolynomial:
    N: int
    k: int
    coeffs: tuple[int, ...]
    subtractor: int

    @property
    def effective_coeffs(self) -> tuple[int, ...]:
        """c_0, ..., c_{k-1}, c_k - C(N,k)^2."""
        return self.coeffs[:-1] + (self.coeffs[-1] - self.subtractor,)

    def exact(self, z) -> Fraction:
        """4 * polynomial at ``z`` in exact rational arithmetic."""
        z = Fraction(z)
        acc = Fraction(0)
        for c in reversed(self.effective_coeffs):
            acc = acc * z + c
        return 4 * acc

    def derivative(self) -> np.ndarray:
        """Float coefficients of dF/dz / 4, lowest order first."""
        eff = self.effective_coeffs
        return np.array([float(i * eff[i]) for i in range(1, len(eff))])


def _check(N: int, k: int) -> None:
    if k < 1 or k > N:
        raise ValueError(f"need 1 <= k <= N, got N={N}, k={k}")


def _check_z(z) -> None:
    if not 0 <= z <= 1:
        raise ValueError(f"z = cos^2(theta) must lie in [0, 1], got {z}")


def product_polynomial(N: int, k: int) -> ProductProbePolynomial:
    _check(N, k)
    # no pair of k-subsets differs in 2i > N places
    coeffs = tuple(
        binom(N, i) * binom(N - i, i) * binom(N - 2 * i, k - i) if 2 * i <= N else 0 for i in range(k + 1)
    )
    return ProductProbePolynomial(N, k, coeffs, binom(N, k) ** 2)


def sp_qfi_at(N: int, k: int, z) -> float:
    """F_SP at ``z``; rational ``z`` is evaluated exactly before rounding."""
    _check_z(z)
    return float(product_polynomial(N, k).exact(z))


def hyp2f1_terminating(a: int, b, c, z):
    """2F1(a, b; c; z) for a non-positive integer ``a`` (|a| + 1 terms).

    The Pochhammer ratios are accumulated as exact fractions; ``z`` may be a
    float or a rational.
    """
    if a > 0 or int(a) != a:
        raise ValueError(f"series terminates only for integer a <= 0, got {a}")
    coef = Fraction(1)
    b, c = Fraction(b), Fraction(c)
    exact = isinstance(z, Rational)
    total = Fraction(0) if exact else 0.0
    zp = Fraction(1) if exact else 1.0
    for i in range(-int(a) + 1):
        total += (coef if exact else float(coef)) * zp
        if c + i == 0:
            raise ZeroDivisionError("c is a non-positive integer inside the series")
        coef = coef * (a + i) * (b + i) / ((c + i) * (i + 1))
        zp = zp * z
    return total


def sp_qfi_hypergeom(N: int, k: int, z) -> float:
    """4 C(N,k) [2F1(-k, k-N; 1; z) - z^k C(N,k)]."""
    _check(N, k)
    _check_z(z)
    cnk = binom(N, k)
    series = hyp2f1_terminating(-k, k - N, 1, z)
    return float(4 * cnk * (series - z**k * cnk))


@dataclass(frozen=True)
class SpMax:
    qfi: float
    z_star: float


def sp_qfi_max(N: int, k: int) -> SpMax:
    """Global maximum of F_SP over z in [0, 1].

    The derivative is sampled on 1024 equal sub-intervals; every sign change
    is refined by bisection to 1e-12 and the endpoints are always candidates.
    Candidates are compared in exact arithmetic.
    """
    poly = product_polynomial(N, k)
    dcoef = poly.derivative()
    candidates = [0.0, 1.0]
    if dcoef.size:

        def deriv(t: float) -> float:
            return float(np.polynomial.polynomial.polyval(t, dcoef))

        grid = np.linspace(0.0, 1.0, N_BRACKETS + 1)
        vals = np.polynomial.polynomial.polyval(grid, dcoef)
        for i in range(N_BRACKETS):
            if vals[i] == 0.0:
                candidates.append(float(grid[i]))
            elif vals[i] * vals[i + 1] < 0:
                candidates.append(bisect(deriv, grid[i], grid[i + 1], xtol=ROOT_XTOL))
    scored = [(poly.exact(z), z) for z in candidates]
    best, z_star = max(scored, key=lambda t: (t[0], -t[1]))
    return SpMax(float(best), float(z_star))


def sp_qfi_max_closed_k2(N: int) -> float:
    """2N(N-1)^3 / (2N-3), valid for N > 2."""
    if N <= 2:
        raise ValueError(f"closed k=2 maximum needs N > 2, got {N}")
    return float(Fraction(2 * N * (N - 1) ** 3, 2 * N - 3))


def k3_stationary_points(N: int) -> list[Fraction]:
    """Roots in [0, 1] of 3 g3 z^2 + 2 g2 z + g1 = 0 for k = 3.

    g3 here is the effective cubic coefficient gamma_3 - C(N,3)^2; the raw
    gamma_3 does not give the right stationary points.  Roots are computed
    with 60-digit decimals and returned as fractions.
    """
    if N <= 3:
        raise ValueError(f"k=3 stationary points need N > 3, got {N}")
    g0, g1, g2, g3 = product_polynomial(N, 3).effective_coeffs
    disc = g2 * g2 - 3 * g1 * g3
    if disc < 0:
        return []
    with decimal.localcontext() as ctx:
        ctx.prec = 60
        root = decimal.Decimal(disc).sqrt()
        zs = [(-g2 + sgn * root) / (3 * g3) for sgn in (1, -1)]
        out = [Fraction(z) for z in zs]
    return sorted({z for z in out if 0 <= z <= 1})


def sp_qfi_max_closed_k3(N: int) -> float:
    """Maximum of F_SP for k = 3 from the quadratic stationarity condition."""
    poly = product_polynomial(N, 3)
    pts = k3_stationary_points(N)
    if not pts:
        raise ArithmeticError(f"no stationary point in [0, 1] for N={N}")
    return float(max(poly.exact(z) for z in pts))
