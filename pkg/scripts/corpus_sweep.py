"""Run every verification suite over generated corpora and tabulate the outcome.

    python scripts/corpus_sweep.py --count 200 --min-n 2 --max-n 5
"""

import argparse
import json
import time

from monobn.theorems import SUITES, run_corpus, summarize

# embedding hosts have 2n components; keep them small
MAX_N = {"robert": 8, "monotone-reach": 8, "embedding": 4, "fixed-point-counts": 6}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="print one JSON line per row")
    args = ap.parse_args()

    failed = 0
    for suite in SUITES:
        for n in range(args.min_n, min(args.max_n, MAX_N[suite]) + 1):
            t0 = time.perf_counter()
            summary = summarize(run_corpus(suite, args.count, n, args.seed))
            summary.update(suite=suite, n=n, secs=round(time.perf_counter() - t0, 2))
            failed += summary["failed"]
            if args.json:
                print(json.dumps(summary))
            else:
                print(f"{suite:>20} n={n}  passed={summary['passed']:>4}  skipped={summary['skipped']:>4}"
                      f"  failed={summary['failed']:>3}  {summary['secs']}s")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
