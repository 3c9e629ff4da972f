"""Print |G(n, j)| = |S(n, j)| by length, with the totals A(n), B(n), C(n).

    python scripts/cell_table.py [N]
"""

import sys

from ggbij.families import count_A, count_B, count_C, count_G, count_S, feasible_lengths

N = int(sys.argv[1]) if len(sys.argv) > 1 else 40
J = max(feasible_lengths(N)) + 1

print(f"{'n':>4} " + " ".join(f"j={j:<5}" for j in range(J)) + f" {'A':>8} {'B':>8} {'C':>8}")
for n in range(N + 1):
    cells = []
    for j in range(J):
        g, s = count_G(n, j), count_S(n, j)
        cells.append(f"{g:<7}" if g == s else f"{g}!={s}")
    print(f"{n:>4} " + " ".join(cells) + f" {count_A(n):>8} {count_B(n):>8} {count_C(n):>8}")
