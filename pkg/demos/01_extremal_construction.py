"""
The extremal construction H_{n,k}
=================================

Build the connected BP_k-free 3-graph for a few (n, k), compare its edge
count with the closed form, and let the exact searcher confirm that the
longest Berge-path has length k-1.
"""

from bergekit import (
    build_extremal,
    extremal_count,
    has_berge_path_of_length,
    is_connected,
    longest_berge_path,
    peel,
)
from bergekit.formulas import binom
from bergekit.io import format_hypergraph

# %%
# A small odd case: the core A has floor((k-1)/2) = 3 vertices and every
# edge has at most one vertex outside A.
H, part = build_extremal(8, 7, 3)
print(format_hypergraph(H, [part.header()]))

# %%
# Edge counts agree with the formula, and the construction is connected.
for n, k in [(7, 7), (8, 8), (10, 9), (12, 10)]:
    G, _ = build_extremal(n, k, 3)
    print(f"n={n:2d} k={k:2d}  edges={G.m:3d}  formula={extremal_count(n, k, 3).value:3d}"
          f"  connected={is_connected(G)}")

# %%
# Every vertex already meets the degree threshold C(a, r-1), so peeling is
# the identity.
a = (7 - 1) // 2
peeled, _ = peel(H, binom(a, 2))
print("peel is identity:", peeled == H)

# %%
# No Berge-path of length k, and a witness of length k-1.
print("BP_7:", has_berge_path_of_length(H, 7).status)
out, length = longest_berge_path(H)
print("longest:", length, "proved optimal:", out.optimal)
print("certificate vertices:", out.certificate.vertices)
