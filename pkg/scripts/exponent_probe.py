"""Double-log exponent fits for a_n = (n+1)^d as the truncation N grows.

    python scripts/exponent_probe.py --N 100 200 400
"""

import argparse

from ncgrowth.pbw import exponent_fit


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, nargs="+", default=[100, 200, 300])
    ap.add_argument("--d", type=int, nargs="+", default=[0, 1, 2])
    args = ap.parse_args()
    print("d,N,target,alpha_cumulative,alpha_graded,rms")
    for d in args.d:
        for N in args.N:
            f = exponent_fit(d, N)
            print(f"{d},{N},{f.target:.4f},{f.alpha:.4f},{f.graded_alpha:.4f},{f.rms:.2e}")


if __name__ == "__main__":
    main()
