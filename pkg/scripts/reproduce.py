"""Run the four identity checks at desk scale and print timings.

    python scripts/reproduce.py [--counts 60] [--bijection 40] [--order 100] [--workers 1]
"""

import argparse
import time

from ggbij.bijection import verify_bijection
from ggbij.families import count_A, count_B, count_C
from ggbij.qseries import verify_identity


def timed(label, fn):
    t = time.perf_counter()
    ok, detail = fn()
    print(f"{'ok  ' if ok else 'FAIL'} {label:<42} {time.perf_counter() - t:7.3f}s  {detail}")
    return ok


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--counts", type=int, default=60)
    ap.add_argument("--bijection", type=int, default=40)
    ap.add_argument("--order", type=int, default=100)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    def a_vs_b():
        bad = [n for n in range(args.counts + 1) if count_A(n) != count_B(n)]
        return not bad, f"first mismatch n={bad[0]}" if bad else f"B({args.counts})={count_B(args.counts)}"

    def c_vs_b():
        bad = [n for n in range(args.counts + 1) if count_C(n) != count_B(n)]
        return not bad, f"first mismatch n={bad[0]}" if bad else ""

    def bij():
        r = verify_bijection(args.bijection, workers=args.workers)
        return r.ok, f"{r.checked} checks, {r.cells} cells, {len(r.failures)} failures"

    def ident():
        r = verify_identity(args.order)
        return r.ok, "" if r.ok else f"first mismatch q^{r.first_mismatch}: {r.values}"

    results = [
        timed(f"A(n) = B(n), n <= {args.counts}", a_vs_b),
        timed(f"C(n) = B(n), n <= {args.counts}", c_vs_b),
        timed(f"g: G(n,j) <-> S(n,j), n <= {args.bijection}", bij),
        timed(f"series identity through q^{args.order}", ident),
    ]
    raise SystemExit(0 if all(results) else 1)


if __name__ == "__main__":
    main()
