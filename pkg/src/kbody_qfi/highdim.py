"""k-body generators whose local operator has arbitrary dimension.

Only the extremal local eigenvalues delta_M > delta_m matter: the generator
sum_{|S|=k} prod_{i in S} H_i is multilinear in the local eigenvalues, so its
spectral extremes sit at assignments of delta_M or delta_m to each party.
Such an assignment is described by ``m``, the number of parties carrying
delta_M, and its eigenvalue is the k-th elementary symmetric polynomial of
the assigned values.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .combinat import binom
from .probes import ProbeState, TieRule, branch_string, choose_branches

__all__ = [
    "EQUAL_ATOL",
    "HighDimReport",
    "LocalExtremes",
    "Scenario",
    "assignment_values",
    "classify_scenario",
    "extremal_assignment",
    "optimal_probe_highdim",
]

EQUAL_ATOL = 1e-12


class Scenario(str, enum.Enum):
    A1 = "A1"  # both positive
    A2 = "A2"  # both negative
    A3 = "A3"  # opposite signs, |delta_M| > |delta_m|
    A4 = "A4"  # opposite signs, |delta_M| < |delta_m|
    A5 = "A5"  # opposite signs, equal magnitude


@dataclass(frozen=True)
class LocalExtremes:
    delta_M: float
    delta_m: float

    def __post_init__(self):
        if not self.delta_M > self.delta_m:
            raise ValueError(
                f"need delta_M > delta_m, got delta_M={self.delta_M}, delta_m={self.delta_m}"
            )


def classify_scenario(e: LocalExtremes) -> Scenario:
    if abs(e.delta_M) <= EQUAL_ATOL or abs(e.delta_m) <= EQUAL_ATOL:
        raise ValueError("a zero local extreme has no scenario (signs must be strict)")
    if e.delta_m > 0:
        return Scenario.A1
    if e.delta_M < 0:
        return Scenario.A2
    diff = abs(e.delta_M) - abs(e.delta_m)
    if abs(diff) <= EQUAL_ATOL:
        return Scenario.A5
    return Scenario.A3 if diff > 0 else Scenario.A4


def assignment_values(P: int, k: int, e: LocalExtremes) -> list:
    """Eigenvalue for m = 0..P parties carrying delta_M (the rest delta_m)."""
    if k < 1 or k > P:
        raise ValueError(f"need 1 <= k <= P, got P={P}, k={k}")
    dM, dm = e.delta_M, e.delta_m
    return [
        sum(binom(m, j) * binom(P - m, k - j) * dM**j * dm ** (k - j) for j in range(k + 1))
        for m in range(P + 1)
    ]


def _branch_condition(P: int, k: int, e: LocalExtremes, scenario: Scenario) -> str | None:
    if (P, k) != (4, 3):
        return None
    aM, am = abs(e.delta_M), abs(e.delta_m)
    if scenario is Scenario.A3:
        ref, label = 2 * am, "2|delta_m|"
    elif scenario is Scenario.A4:
        ref, label = am / 2, "|delta_m|/2"
    else:
        return None
    rel = "=" if abs(aM - ref) <= EQUAL_ATOL else (">" if aM > ref else "<")
    return f"|delta_M| {rel} {label}"


@dataclass(frozen=True)
class HighDimReport:
    P: int
    k: int
    extremes: LocalExtremes
    scenario: Scenario
    values: tuple
    lambda_max: float
    lambda_min: float
    argmax_m: tuple[int, ...]
    argmin_m: tuple[int, ...]
    probe: ProbeState
    branch_condition: str | None = None

    @property
    def qfi(self):
        return (self.lambda_max - self.lambda_min) ** 2


def _extremal_set(values, target) -> tuple[int, ...]:
    scale = max(1.0, max(abs(v) for v in values))
    return tuple(m for m, v in enumerate(values) if abs(v - target) <= EQUAL_ATOL * scale)


def optimal_probe_highdim(
    P: int, k: int, e: LocalExtremes, tie_rule: TieRule | str = TieRule.PREFER_PRODUCT
) -> HighDimReport:
    """Extremal assignments and the two-branch optimal probe over {M, m}.

    Branch strings list the delta_M parties first.  A zero local extreme is
    rejected, as in :func:`classify_scenario`.
    """
    scenario = classify_scenario(e)
    values = assignment_values(P, k, e)
    top, bottom = max(values), min(values)
    argmax, argmin = _extremal_set(values, top), _extremal_set(values, bottom)
    if set(argmax) & set(argmin):
        raise ValueError(f"spectrum is flat to within tolerance (max {top}, min {bottom}); no probe has variance")
    m_top, m_bottom = choose_branches(argmax, argmin, tie_rule)
    probe = ProbeState(
        branch_string(m_top, P, up="M", down="m"),
        branch_string(m_bottom, P, up="M", down="m"),
    )
    cond = _branch_condition(P, k, e, scenario)
    return HighDimReport(P, k, e, scenario, tuple(values), top, bottom, argmax, argmin, probe, cond)


def extremal_assignment(P: int, k: int, e: LocalExtremes) -> HighDimReport:
    return optimal_probe_highdim(P, k, e)
