"""Fit F ~ beta N^alpha for optimal and symmetric-product probes.

    python3 scripts/scaling_tables.py
    python3 scripts/scaling_tables.py --mode product --k 4 5 6 --n-max 3000
"""
import argparse

from kbody_qfi.fit import FitConfig, scaling_fit


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--mode", choices=["optimal", "product", "both"], default="both")
    ap.add_argument("--k", type=int, nargs="+", default=None)
    ap.add_argument("--n-min", type=int, default=200)
    ap.add_argument("--n-max", type=int, default=None, help="default 2000 (optimal) / 3000 (product)")
    ap.add_argument("--step", type=int, default=100)
    ap.add_argument("--confidence", type=float, default=0.95)
    args = ap.parse_args()

    modes = ["optimal", "product"] if args.mode == "both" else [args.mode]
    for mode in modes:
        ks = args.k or (list(range(2, 9)) if mode == "optimal" else list(range(2, 7)))
        n_max = args.n_max or (2000 if mode == "optimal" else 3000)
        cfg = FitConfig(args.n_min, n_max, args.step, args.confidence)
        print(f"# {mode} probes, N in [{cfg.n_min}, {cfg.n_max}] step {cfg.step}, {cfg.confidence:.0%} intervals")
        print(f"{'k':>3} {'alpha':>10} {'+-':>10} {'beta':>13} {'ln beta +-':>11} {'R':>10}")
        for k in ks:
            r = scaling_fit(k, mode, cfg)
            print(f"{k:>3} {r.alpha_hat:>10.5f} {r.ci_alpha:>10.2e} {r.prefactor:>13.6g} {r.ci_beta:>11.2e} {r.R:>10.2e}")
        print()


if __name__ == "__main__":
    main()
