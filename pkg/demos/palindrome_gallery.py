#!/usr/bin/env python3
"""Palindromic tilings and palindromic compositions, side by side.

A palindromic tiling reads the same in both directions, tile for tile.
With an even number of reds the reds pair up around the center; an odd
red count forces a lone red center, which is only possible when the white
total is even.  The count m(r, n) follows a clean case split on these
parities, checked here against full enumeration.
"""

from tilingkit import compstats, oracle

print(__doc__)

print("palindromic tilings with two reds over white total 6"
      " (centerless ones marked *):")
for tiling in oracle.enumerate_palindromic_tilings(2, 6):
    mark = " *" if len(tiling.tiles) % 2 == 0 else ""
    print(f"    {tiling}{mark}")
count = oracle.count_palindromic_tilings(2, 6)
print(f"total: {count} = m(2, 6) = {compstats.m_pal(2, 6)}\n")

print("the m(r, n) grid for r <= 6, n <= 9 (case split vs enumeration):")
for r in range(7):
    row = []
    for n in range(10):
        formula = compstats.m_pal(r, n)
        assert formula == oracle.count_palindromic_tilings(r, n)
        row.append(f"{formula:>4}")
    print(f"  r={r}: {''.join(row)}")

print("\npalindromic compositions of 7, and those avoiding the part 1:")
for comp in oracle.enumerate_palindromic_compositions(7):
    avoided = "" if 1 in comp else "   <- no part 1"
    print(f"    {comp}{avoided}")
print(f"pal(7) = {compstats.pal(7)},"
      f" pal_hat(7, 1) = {compstats.pal_hat(7, 1)}")
