"""Generators, relation rank and quadraticity for Veronese subalgebras of the
built-in presentations.

    python scripts/veronese_report.py --M 3
"""

import argparse
import time

from ncgrowth.growth import normal_word_counts
from ncgrowth.presentation import load_presentation
from ncgrowth.rewrite import complete
from ncgrowth.veronese import eliminate_linear, relation_rank, veronese_presentation, verify_quadraticity


def report(key, d, M):
    t0 = time.perf_counter()
    pres = load_presentation(f"builtin:{key}")
    h = normal_word_counts(complete(pres.rewrite_system(), d * M), d * M)
    raw = veronese_presentation(pres, d)
    qp = eliminate_linear(raw)
    rank = relation_rank(qp, h[2 * d])
    quad = verify_quadraticity(qp, h, d, M)
    print(f"{key}, d={d}: {len(raw.letters)} letters, {len(raw.linear_relations)} linear and "
          f"{len(raw.quadratic_relations)} raw quadratic relations")
    print(f"  after elimination g={qp.g}, removed {sorted(qp.eliminated)}")
    print(f"  relation rank {rank.rank}, g^2 - h_{2 * d} = {rank.expected}")
    print(f"  quadratic presentation counts {quad.observed} vs {quad.expected}"
          f" ({'match' if quad.ok else 'MISMATCH'}, {quad.rules} rules)")
    print(f"  {time.perf_counter() - t0:.1f}s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--M", type=int, default=3)
    args = ap.parse_args()
    report("U", 4, args.M)
    report("A", 3, args.M)


if __name__ == "__main__":
    main()
