"""Maximum QFI of h_k^(N) over all pure probes.

The QFI of a pure probe under exp(-i J h) is 4 Var(h), maximised at
(lambda_max - lambda_min)^2.  Sector eigenvalues are exact integers and the
minimum is found by scanning every integer m; the continuum m = N/2 argument
only enters :func:`asymptotic_qfi`.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .combinat import binom, sector_spectrum
from .probes import ProbeState, TieRule, branch_string, choose_branches

__all__ = [
    "QfiReport",
    "asymptotic_qfi",
    "optimal_qfi",
    "optimal_qfi_closed_k2",
    "scaling_ratio",
]


@dataclass(frozen=True)
class QfiReport:
    N: int
    k: int
    qfi: int
    lambda_max: int
    lambda_min: int
    argmax_sectors: tuple[int, ...]
    argmin_sectors: tuple[int, ...]
    probe: ProbeState


def optimal_qfi(N: int, k: int, tie_rule: TieRule | str = TieRule.PREFER_PRODUCT) -> QfiReport:
    if N < 1 or k < 1 or k > N:
        raise ValueError(f"need 1 <= k <= N, got N={N}, k={k}")
    spec = sector_spectrum(N, k)
    argmax, argmin = spec.argmax(), spec.argmin()
    # top branch pinned at all-up; m = N always attains lambda_max = C(N, k)
    assert N in argmax
    m_top, m_bottom = choose_branches((N,), argmin, tie_rule)
    probe = ProbeState(branch_string(m_top, N), branch_string(m_bottom, N))
    return QfiReport(
        N=N,
        k=k,
        qfi=(spec.lambda_max - spec.lambda_min) ** 2,
        lambda_max=spec.lambda_max,
        lambda_min=spec.lambda_min,
        argmax_sectors=argmax,
        argmin_sectors=argmin,
        probe=probe,
    )


def optimal_qfi_closed_k2(N: int) -> int:
    """(2N^2 - 1 + (-1)^N)^2 / 16, exact."""
    if N < 2:
        raise ValueError(f"closed k=2 form needs N >= 2, got {N}")
    num = (2 * N * N - 1 + (-1) ** N) ** 2
    q, r = divmod(num, 16)
    assert r == 0
    return q


def asymptotic_qfi(N: int, k: int) -> int:
    """Large-N closed form: [C(N,k) - (-1)^(k/2) C(N/2,k/2)]^2 for even k,
    4 C(N,k)^2 for odd k.

    For even k this assumes the minimum sits at m = N/2, which is not true at
    small N (e.g. N=8, k=4), so it can undershoot :func:`optimal_qfi`.
    """
    if k < 1 or k > N:
        raise ValueError(f"need 1 <= k <= N, got N={N}, k={k}")
    if k % 2:
        return 4 * binom(N, k) ** 2
    if N % 2:
        raise ValueError(f"even-k asymptotic form needs even N, got N={N}")
    sign = -1 if (k // 2) % 2 else 1
    return (binom(N, k) - sign * binom(N // 2, k // 2)) ** 2


def scaling_ratio(N: int, k: int) -> float:
    """Exact optimum divided by N^(2k)/(k!)^2 (even k) or 4 N^(2k)/(k!)^2 (odd k)."""
    qfi = optimal_qfi(N, k).qfi
    leading = N ** (2 * k) * (1 if k % 2 == 0 else 4)
    # int / int is correctly rounded even when both sides overflow a double
    return qfi * factorial(k) ** 2 / leading
