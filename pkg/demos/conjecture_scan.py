"""
Scanning twisted torus knots
============================

Enumerate T(p, q; r, 1) for small p and sort each one into torus-knot
matches, matches with the known cable family, and the rest.
"""

from collections import Counter

from twistknot.verify import scan_conjecture

report = scan_conjecture(9)
print(Counter(row.status for row in report.rows))

# %%
# The instances that are not torus knots.
for row in report.flagged():
    print(f"T({row.p},{row.q};{row.r},1)  {row.status:<12} {row.detail}")

# %%
# With q = 2 and p <= 7 nothing matches the cable family. The unmatched rows
# are not torus knots either.
small = scan_conjecture(7, q_max=2)
print(Counter(row.status for row in small.rows))
print([f"T({r.p},{r.q};{r.r},1)" for r in small.flagged()])
