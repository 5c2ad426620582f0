"""Print the distance achieved by the Gray-code witness and its monotone embedding.

    python scripts/witness_table.py --max-n 6
"""

import argparse
import time

from monobn.asyncdyn import distance
from monobn.constructions import exp_diameter_monotone, gray_code_network
from monobn.netcore import is_monotone


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()

    print(f"{'n':>3} {'m=2n':>5} {'d_f':>6} {'d_host':>7} {'2^(m/2)':>8} {'monotone':>9} {'secs':>6}")
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        g = gray_code_network(n)
        w = exp_diameter_monotone(n)
        d = distance(g.network, g.start, g.end)
        dh = distance(w.network, w.start, w.end)
        mono = is_monotone(w.network)
        print(f"{n:>3} {w.network.n:>5} {d:>6} {dh:>7} {w.bound:>8} {str(mono):>9} {time.perf_counter() - t0:>6.2f}")


if __name__ == "__main__":
    main()
