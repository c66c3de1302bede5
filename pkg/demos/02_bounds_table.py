"""
Bound evaluators side by side
=============================

Every closed form is evaluated in exact integers. Rational bounds are
floored and the raw fraction is kept alongside.
"""

from bergekit.formulas import all_bounds, threshold_N

# %%
# The two headline substitutions.
for n, k in [(30, 19), (30, 20)]:
    print(f"--- n={n} k={k} r=3")
    for b in all_bounds(n, k, 3):
        print(b.row(verbose=True))

# %%
# The threshold N_{k,r} grows quickly in k and r.
for r in (3, 4, 5):
    print(r, [threshold_N(k, r) for k in (2 * r + 13, 2 * r + 15, 2 * r + 17)])
