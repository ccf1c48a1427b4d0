#!/usr/bin/env python3
"""A tour of the composition statistics, each checked against enumeration.

Compositions of 6 serve as the running example: occurrences of a part,
runs, largest parts, frozen parts, and the consecutive-part refinement,
with the tiling-identity formulas on one side and exhaustive counting on
the other.
"""

from tilingkit import compstats as cs
from tilingkit import oracle

N = 6
print(__doc__)
print(f"the {oracle.count_compositions(N)} compositions of {N}"
      " carry these statistics:\n")

print("occurrences of each part value k (S(n,k) = a(1, n-k)):")
for k in range(1, N + 1):
    formula = cs.S(N, k)
    brute = oracle.part_occurrences(N, k)
    assert formula == brute
    print(f"    k={k}: {formula}")

print("\nruns of each value over all compositions (R(n,k)):")
census = oracle.run_census(N)
for k in range(1, N + 1):
    formula = cs.R_runs(N, k)
    brute = sum(v for (val, _length), v in census.items() if val == k)
    assert formula == brute
    print(f"    k={k}: {formula}")
print(f"total runs R({N}) = {cs.R_total(N)},"
      f" total parts E({N}) = {cs.E_total(N)}"
      f" = R({N}) + R({N - 1})")

print("\nlargest part exactly k (G(n,k) = F(n+1,k) - F(n+1,k-1)):")
for k in range(1, N + 1):
    print(f"    k={k}: {cs.G(N, k)}")
assert sum(cs.G(N, k) for k in range(1, N + 1)) == 2 ** (N - 1)

print("\ncompositions avoiding k, and with frozen copies of k:")
for k in range(1, 4):
    avoid = cs.C_hat(N, k)
    frozen = cs.CF(N, k)
    assert avoid == oracle.count_compositions(N, forbidden_part=k)
    assert frozen == oracle.count_compositions(
        N, allowed_parts=set(range(1, k + 1)) | {2 * k}
    )
    print(f"    k={k}: avoid={avoid}, frozen={frozen}")

print("\nall parts 2 consecutive (C_b and its refinement by count):")
print(f"    C_b({N},2) = {cs.C_b(N, 2)}")
for p in range(1, N // 2 + 1):
    print(f"    exactly {p} twos: {cs.C_b_exact(N, 2, p)}")
