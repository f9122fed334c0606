"""Two-branch optimal probes and their entanglement / symmetry class.

The variance-maximising probe is (|a_max> + |a_min>)/sqrt(2) with both
branches product basis strings.  Sites where the strings agree factor out as
pure local kets; the disagreeing sites form a GHZ block.  So:

* Hamming distance N  -> genuinely multipartite entangled (every cut is mixed)
* Hamming distance 1  -> fully product (for N > 1)
* anything in between -> entangled but not GME

A state from this family is symmetric (all l-party marginals equal) exactly
when it is permutation invariant, i.e. when the pair of strings is closed
under permuting sites.  That means both strings are constant, or the lone
two-site case {01, 10}.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import sqrt

__all__ = [
    "Classification",
    "ProbeState",
    "ProductWindow",
    "TieRule",
    "branch_string",
    "choose_branches",
    "classify_probe",
    "optimal_probe",
    "product_window",
]


class Classification(str, enum.Enum):
    GME = "GME"
    ENTANGLED_NON_GME = "entangled_non_GME"
    PRODUCT = "product"


class TieRule(str, enum.Enum):
    PREFER_PRODUCT = "prefer_product"
    SMALLEST_M = "smallest_m"
    LARGEST_M = "largest_m"

    @classmethod
    def parse(cls, value: "TieRule | str") -> "TieRule":
        if isinstance(value, cls):
            return value
        return cls(str(value).replace("-", "_"))


def hamming(a: str, b: str) -> int:
    if len(a) != len(b):
        raise ValueError("branch strings must have equal length")
    return sum(x != y for x, y in zip(a, b))


def classify_probe(s_top: str, s_bottom: str) -> tuple[Classification, bool]:
    """Return ``(classification, symmetric)`` for the two-branch state."""
    d = hamming(s_top, s_bottom)
    if d == 0:
        raise ValueError("branches are identical; the state has zero variance")
    n = len(s_top)
    # N = 1 has no bipartitions at all, so it is (vacuously) GME
    if d == n:
        cls = Classification.GME
    elif d == 1:
        cls = Classification.PRODUCT
    else:
        cls = Classification.ENTANGLED_NON_GME
    return cls, _permutation_closed(s_top, s_bottom)


def _permutation_closed(a: str, b: str) -> bool:
    if len(set(a)) == 1 and len(set(b)) == 1:
        return True
    # a non-constant string has at least N >= 2 rearrangements, so the pair
    # can only hold its whole orbit when N = 2 and b is a with its sites swapped
    return len(a) == 2 and a[0] != a[1] and b == a[::-1]


@dataclass(frozen=True)
class ProbeState:
    """(|s_top> + |s_bottom>)/sqrt(2) over a two-letter local alphabet."""

    s_top: str
    s_bottom: str
    classification: Classification = field(init=False)
    symmetric: bool = field(init=False)

    amplitude = 1 / sqrt(2)

    def __post_init__(self):
        cls, sym = classify_probe(self.s_top, self.s_bottom)
        object.__setattr__(self, "classification", cls)
        object.__setattr__(self, "symmetric", sym)

    @property
    def n_parties(self) -> int:
        return len(self.s_top)

    @property
    def is_gme(self) -> bool:
        return self.classification is Classification.GME


def branch_string(count: int, parties: int, up: str = "0", down: str = "1") -> str:
    """``count`` copies of ``up`` followed by ``parties - count`` copies of ``down``."""
    if not 0 <= count <= parties:
        raise ValueError(f"count {count} outside [0, {parties}]")
    return up * count + down * (parties - count)


def choose_branches(argmax, argmin, tie_rule: TieRule | str = TieRule.PREFER_PRODUCT) -> tuple[int, int]:
    """Pick ``(m_top, m_bottom)`` from the extremal sector sets.

    Branches are left-aligned strings, so their Hamming distance is
    ``|m_top - m_bottom|``.  ``prefer_product`` takes the pair of smallest
    distance (distance 1 is a product state), breaking ties lexicographically;
    the other two rules take the smallest / largest index in each set.
    """
    rule = TieRule.parse(tie_rule)
    argmax, argmin = sorted(argmax), sorted(argmin)
    if not argmax or not argmin:
        raise ValueError("empty extremal sector set")
    if rule is TieRule.SMALLEST_M:
        return argmax[0], argmin[0]
    if rule is TieRule.LARGEST_M:
        return argmax[-1], argmin[-1]
    return min(((a, b) for a in argmax for b in argmin), key=lambda p: (abs(p[0] - p[1]), p))


def optimal_probe(N: int, k: int, tie_rule: TieRule | str = TieRule.PREFER_PRODUCT) -> ProbeState:
    """Optimal probe for h_k^(N); the top branch is always 0^N."""
    # qfi_optimal imports this module
    from .qfi_optimal import optimal_qfi

    return optimal_qfi(N, k, tie_rule=tie_rule).probe


@dataclass(frozen=True)
class ProductWindow:
    k: int
    window: tuple[int, int]
    verified_N: list[int]
    n_max: int


def product_window(k: int) -> ProductWindow:
    """Check by exhaustive search that a product optimum exists for every
    k <= N <= 2k-1 and for no N = 2k.

    ``n_max`` is the largest N of the contiguous run starting at N = k.
    Raises ``RuntimeError`` if the search contradicts the window.
    """
    from .qfi_optimal import optimal_qfi

    if k < 2 or k % 2:
        raise ValueError(f"product window is defined for even k >= 2, got k={k}")
    verified = []
    for N in range(k, 2 * k):
        rep = optimal_qfi(N, k)
        if N - 1 not in rep.argmin_sectors:
            raise RuntimeError(f"no product optimum at k={k}, N={N}")
        verified.append(N)
    if 2 * k - 1 in optimal_qfi(2 * k, k).argmin_sectors:
        raise RuntimeError(f"unexpected product optimum at k={k}, N={2 * k}")
    return ProductWindow(k, (k, 2 * k - 1), verified, verified[-1])
