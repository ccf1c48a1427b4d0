#!/usr/bin/env python3
"""Sweep the identity registry and summarize what holds and what does not.

Every catalogued identity is evaluated over its parameter grid.  Most
verify outright.  A handful fail exactly as stated; each of those records
carries a corrected form, and the registry re-checks that the correction
does verify.  Conjectures are only ever scanned up to a bound.

The erratum probes go one step further: for a flagged statement they pit
every candidate form against brute-force enumeration and report which
candidate survives.
"""

from tilingkit import identities

print(__doc__)

report = identities.run_registry("small")

by_status: dict[str, list] = {}
for result in report.results:
    by_status.setdefault(result.status, []).append(result)

for status in ("verified", "fails-as-printed", "conjecture"):
    group = by_status.get(status, [])
    print(f"{status}: {len(group)} records")
    if status != "verified":
        for result in group:
            print(f"    {result.id}  ({result.points} points)")
            if result.counterexample and status == "fails-as-printed":
                cx = result.counterexample
                print(f"        first counterexample at {cx['point']}:"
                      f" {cx['lhs']} != {cx['rhs']}")
print()

print("probe: the headline formula for part occurrences")
resolution = identities.erratum_probe("part-occurrences-headline", "small")
print(f"oracle = {resolution['oracle']}")
for cand in resolution["candidates"]:
    verdict = "matches" if cand["matches"] else "fails"
    print(f"    {cand['label']}: {verdict}")
