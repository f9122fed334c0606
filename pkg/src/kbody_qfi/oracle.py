"""Brute-force ground truth for the diagonal multibody generators.

Every one of the 2^N basis strings is enumerated and every k-subset term is
evaluated literally.  Nothing here uses the sector formulas from
:mod:`kbody_qfi.combinat`; the two are compared in the test-suite.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

__all__ = [
    "MAX_ORACLE_N",
    "SpectrumMultiset",
    "basis_eigenvalue",
    "brute_case2_spectrum",
    "brute_case2_values",
    "brute_max_qfi",
    "brute_order_values",
    "brute_spectrum",
]

MAX_ORACLE_N = 12


@dataclass(frozen=True)
class SpectrumMultiset:
    """Eigenvalue -> multiplicity, summing to 2^N."""

    entries: dict
    N: int
    description: str

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    @property
    def lambda_max(self):
        return max(self.entries)

    @property
    def lambda_min(self):
        return min(self.entries)


def _check(N: int, k: int) -> None:
    if k < 1 or k > N:
        raise ValueError(f"need 1 <= k <= N, got N={N}, k={k}")
    if N > MAX_ORACLE_N:
        raise ValueError(f"oracle enumeration capped at N <= {MAX_ORACLE_N}, got N={N}")


def _spins(N: int) -> np.ndarray:
    # row r is the string with bits of r, most significant first; 0 -> +1, 1 -> -1
    bits = (np.arange(2**N)[:, None] >> np.arange(N - 1, -1, -1)) & 1
    return 1 - 2 * bits


def brute_order_values(N: int, k: int) -> np.ndarray:
    """Per-string eigenvalue of h_k^(N), shape ``(2**N,)``, string order = binary."""
    _check(N, k)
    s = _spins(N)
    out = np.zeros(2**N, dtype=np.int64)
    for subset in itertools.combinations(range(N), k):
        out += np.prod(s[:, subset], axis=1)
    return out


def _multiset(values, N: int, description: str) -> SpectrumMultiset:
    entries: dict = {}
    for v in values:
        entries[v] = entries.get(v, 0) + 1
    return SpectrumMultiset(dict(sorted(entries.items())), N, description)


def brute_spectrum(N: int, k: int) -> SpectrumMultiset:
    vals = brute_order_values(N, k)
    return _multiset((int(v) for v in vals), N, f"h_{k}^({N})")


def brute_max_qfi(N: int, k: int) -> int:
    """(lambda_max - lambda_min)^2, i.e. four times the largest variance of h_k^(N)."""
    spec = brute_spectrum(N, k)
    return (spec.lambda_max - spec.lambda_min) ** 2


def _coerce_x(x):
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    return x if isinstance(x, Rational) else float(x)


def brute_case2_values(N: int, k: int, x) -> list:
    """Per-string eigenvalue of K_x = sum_i i x^(i-1) h_i^(N), binary string order.

    Rational ``x`` (int or Fraction) gives exact values; anything else floats.
    """
    _check(N, k)
    x = _coerce_x(x)
    orders = [brute_order_values(N, i) for i in range(1, k + 1)]
    out = []
    for r in range(2**N):
        out.append(sum(i * x ** (i - 1) * int(orders[i - 1][r]) for i in range(1, k + 1)))
    return out


def brute_case2_spectrum(N: int, k: int, x) -> SpectrumMultiset:
    vals = brute_case2_values(N, k, x)
    return _multiset(vals, N, f"K_x k={k} N={N} x={x}")


def basis_eigenvalue(string: str, k: int, x=None):
    """Eigenvalue of a single basis string, e.g. ``"0011"``, summed term by term.

    With ``x`` given, returns the K_x eigenvalue (orders 1..k); otherwise the
    h_k eigenvalue.
    """
    N = len(string)
    if set(string) - {"0", "1"}:
        raise ValueError(f"not a binary string: {string!r}")
    signs = [1 if c == "0" else -1 for c in string]

    def order(i: int) -> int:
        total = 0
        for subset in itertools.combinations(range(N), i):
            p = 1
            for q in subset:
                p *= signs[q]
            total += p
        return total

    if x is None:
        return order(k)
    if isinstance(x, float):
        x = Fraction(x)
    return sum(i * x ** (i - 1) * order(i) for i in range(1, k + 1))
