"""
Brute-force extremal numbers on tiny cells
==========================================

Enumerate BP_k-free 3-graphs on up to 6 vertices, with and without the
connectivity requirement, and compare the maxima with the closed forms.
"""

import tempfile
from pathlib import Path

from bergekit.oracle import brute_force_ex, compare_with_formula, sweep

# %%
# One cell in detail: the non-connected maximum on 6 vertices for k = 4.
rep = brute_force_ex(6, 4, 3)
print(rep.to_text())
chk = compare_with_formula(rep)
print("bound:", chk.bound.value, "attained:", chk.equal, "discrepancy:", chk.discrepancy)

# %%
# A whole grid, written as a catalog (summary.tsv plus witness files).
grid = [(n, k, 3, c) for n in range(4, 7) for k in range(3, 6) for c in (False, True)]
out = Path(tempfile.mkdtemp(prefix="bergekit-catalog-"))
summary, bad = sweep(grid, out)
print(summary.read_text())
print("catalog written to", out, "| discrepancies:", bad)
