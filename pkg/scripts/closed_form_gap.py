"""Compare sum_j (2j+1) p(n-j) with the normal-word counts of builtin:A.

    python scripts/closed_form_gap.py --max-degree 30
"""

import argparse

from ncgrowth.growth import kobayashi_closed_form, normal_word_counts, partition_p
from ncgrowth.presentation import load_presentation
from ncgrowth.rewrite import complete


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=20)
    args = ap.parse_args()
    N = args.max_degree
    system = complete(load_presentation("builtin:A").rewrite_system(), N)
    h = normal_word_counts(system, N)
    print(f"# {len(system.rules)} rules after completion to degree {N}")
    print("n,closed_form,normal_words,delta,h_over_p")
    for n in range(N + 1):
        c = kobayashi_closed_form(n)
        print(f"{n},{c},{h[n]},{c - h[n]},{h[n] / partition_p(n):.3f}")


if __name__ == "__main__":
    main()
