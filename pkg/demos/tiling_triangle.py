#!/usr/bin/env python3
"""Three independent routes to the same triangle of tiling counts.

The number a(r, n) of ways to tile a unit strip with r indistinguishable
red squares and white tiles totalling n cells can be computed by

  1. the three-term recurrence (with memoization),
  2. brute-force enumeration of every tiling,
  3. expanding the generating function ((1-x)/(1-2x))^(r+1).

This script builds the r <= 5, n <= 7 corner all three ways and prints
the triangle once the routes are confirmed to agree cell for cell.
"""

from tilingkit import oracle, sequences, series

R_MAX, N_MAX = 5, 7

print(__doc__)

for r in range(R_MAX + 1):
    via_series = series.expand(series.gf_geometric_two_tone(r), N_MAX)
    for n in range(N_MAX + 1):
        recurrence = sequences.a(r, n)
        enumerated = oracle.count_tilings(r, n)
        coefficient = via_series[n]
        assert recurrence == enumerated == coefficient, (r, n)

print(f"all three routes agree on the grid r <= {R_MAX}, n <= {N_MAX}\n")

header = "r\\n " + "".join(f"{n:>6}" for n in range(N_MAX + 1))
print(header)
for r in range(R_MAX + 1):
    row = "".join(f"{sequences.a(r, n):>6}" for n in range(N_MAX + 1))
    print(f"{r:>3} {row}")

print("\nThe five tilings behind the cell a(1, 2):")
for tiling in oracle.enumerate_tilings(1, 2):
    print("   ", tiling)
