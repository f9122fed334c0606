"""Optimal probes for 2-body/3-party and 3-body/4-party generators of any
local dimension, one row per scenario and sub-branch."""
from kbody_qfi.highdim import LocalExtremes, optimal_probe_highdim

ROWS = [
    (3, 2, 2, 1),
    (3, 2, -1, -2),
    (3, 2, 3, -1),
    (3, 2, 1, -3),
    (3, 2, 1, -1),
    (4, 3, 2, 1),
    (4, 3, -1, -2),
    (4, 3, 1.5, -1),
    (4, 3, 3, -1),
    (4, 3, 1, -1.5),
    (4, 3, 1, -3),
    (4, 3, 1, -1),
]


def main():
    print(f"{'P':>2} {'k':>2} {'dM':>5} {'dm':>5}  scen  {'top':<5} {'bottom':<6} {'class':<18} {'qfi':>9}  condition")
    for P, k, dM, dm in ROWS:
        r = optimal_probe_highdim(P, k, LocalExtremes(dM, dm))
        print(
            f"{P:>2} {k:>2} {dM:>5} {dm:>5}  {r.scenario.value:<4}  {r.probe.s_top:<5} {r.probe.s_bottom:<6} "
            f"{r.probe.classification.value:<18} {r.qfi:>9.4g}  {r.branch_condition or ''}"
        )


if __name__ == "__main__":
    main()
