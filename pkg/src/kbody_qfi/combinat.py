"""Exact combinatorics for the diagonal k-body Pauli-z generators.

A computational basis string with ``m`` zeros ("up" spins, sigma_z = +1) and
``N - m`` ones is an eigenvector of

    h_k^(N) = sum over all k-subsets S of prod_{i in S} sigma_z^i

and its eigenvalue depends only on ``m``.  Everything here is exact integer
arithmetic; floating point only enters in the optimisation and fitting layers.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass

__all__ = [
    "BinomialCache",
    "SectorSpectrum",
    "binom",
    "n0",
    "sector_eigenvalue",
    "sector_orders",
    "sector_spectrum",
]


class BinomialCache:
    """Memoised binomial coefficients keyed by ``(n, r)``.

    Out-of-range ``r`` gives 0.  Lookups are safe from several threads: the
    table only ever grows and every entry is immutable once written.
    """

    def __init__(self) -> None:
        self.table: dict[tuple[int, int], int] = {}
        self._lock = threading.Lock()

    def __call__(self, n: int, r: int) -> int:
        if n < 0:
            raise ValueError(f"binom: n must be non-negative, got {n}")
        if r < 0 or r > n:
            return 0
        key = (n, r)
        try:
            return self.table[key]
        except KeyError:
            value = math.comb(n, r)
            with self._lock:
                self.table.setdefault(key, value)
            return value

    def __len__(self) -> int:
        return len(self.table)

    def clear(self) -> None:
        with self._lock:
            self.table.clear()


_DEFAULT_CACHE = BinomialCache()


def binom(n: int, r: int) -> int:
    """C(n, r) with the convention C(n, r) = 0 outside 0 <= r <= n."""
    return _DEFAULT_CACHE(n, r)


def _check_nkm(N: int, k: int, m: int | None = None) -> None:
    if k < 1 or k > N:
        raise ValueError(f"need 1 <= k <= N, got N={N}, k={k}")
    if m is not None and not 0 <= m <= N:
        raise ValueError(f"need 0 <= m <= N, got N={N}, m={m}")


def sector_eigenvalue(N: int, k: int, m: int) -> int:
    """Eigenvalue of h_k^(N) on any string with ``m`` zeros.

    A term picking ``j`` up spins and ``k - j`` down spins contributes
    ``(-1)**(k - j)``, so the value is
    ``sum_j (-1)**(k-j) C(m, j) C(N-m, k-j)``.  This sign convention is right
    for both parities of ``k``.
    """
    _check_nkm(N, k, m)
    return sum(
        (-1) ** (k - j) * binom(m, j) * binom(N - m, k - j) for j in range(k + 1)
    )


def n0(N: int, k: int, m: int) -> int:
    """Number of k-subsets whose term evaluates to +1 in sector ``m`` (even k)."""
    if k % 2:
        raise ValueError(f"n0 is defined for even k only, got k={k}")
    _check_nkm(N, k, m)
    return sum(binom(m, 2 * i) * binom(N - m, k - 2 * i) for i in range(k // 2 + 1))


def sector_orders(N: int, k: int, m: int) -> list[int]:
    """Sector-``m`` eigenvalues of h_0, h_1, ..., h_k in one pass.

    The values are the coefficients of (1+x)^m (1-x)^(N-m), which obey
    (j+1) a_{j+1} = (2m - N) a_j - (N - j + 1) a_{j-1}.
    Entry 0 is the identity (always 1).
    """
    _check_nkm(N, k, m)
    d = 2 * m - N
    out = [1, d]
    for j in range(1, k):
        nxt = d * out[j] - (N - j + 1) * out[j - 1]
        q, rem = divmod(nxt, j + 1)
        assert rem == 0
        out.append(q)
    return out[: k + 1]


@dataclass(frozen=True)
class SectorSpectrum:
    """Eigenvalues of h_k^(N) indexed by sector ``m = 0..N``."""

    N: int
    k: int
    values: tuple[int, ...]

    @property
    def lambda_max(self) -> int:
        return max(self.values)

    @property
    def lambda_min(self) -> int:
        return min(self.values)

    def argmax(self) -> tuple[int, ...]:
        top = self.lambda_max
        return tuple(m for m, v in enumerate(self.values) if v == top)

    def argmin(self) -> tuple[int, ...]:
        bottom = self.lambda_min
        return tuple(m for m, v in enumerate(self.values) if v == bottom)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        """C(N, m) for m = 0..N; built on demand since the middle terms are huge."""
        row = [1]
        for m in range(self.N):
            row.append(row[-1] * (self.N - m) // (m + 1))
        return tuple(row)

    def as_multiset(self) -> dict[int, int]:
        """Eigenvalue -> multiplicity over the full 2^N basis."""
        out: dict[int, int] = {}
        for v, mult in zip(self.values, self.multiplicities):
            out[v] = out.get(v, 0) + mult
        return out


def sector_spectrum(N: int, k: int) -> SectorSpectrum:
    """All sector eigenvalues of h_k^(N) via an additive recurrence in ``m``.

    With G_m = (1+x)^m (1-x)^(N-m) one has G_{m+1} (1-x) = G_m (1+x), hence
    a_j(m+1) = a_j(m) + a_{j-1}(m) + a_{j-1}(m+1).  Cost is O(N k) additions.
    """
    _check_nkm(N, k)
    # m = 0: coefficients of (1-x)^N
    row = [(-1) ** j * binom(N, j) for j in range(k + 1)]
    values = [row[k]]
    for _ in range(N):
        new = [1] + [0] * k
        for j in range(1, k + 1):
            new[j] = row[j] + row[j - 1] + new[j - 1]
        row = new
        values.append(row[k])
    return SectorSpectrum(N, k, tuple(values))
