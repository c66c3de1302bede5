"""
Rotations, endpoint neighborhoods and cycles
============================================

Rotating a longest Berge-path at a terminal keeps its defining vertices and
hyperedges; the terminal neighborhoods outside the path are what drive the
closing of long cycles.
"""

from bergekit import (
    build_extremal,
    build_tree_like,
    endpoint_neighborhood,
    has_berge_cycle_of_length_at_least,
    longest_berge_path,
    rotations,
    shift_back,
    verify_path,
)

# %%
H, part = build_extremal(9, 7, 3)
out, length = longest_berge_path(H)
p = out.certificate
print("longest path", p.vertices, "edges", p.edge_indexes)

for q in rotations(H, p) + [x.reversed() for x in rotations(H, p.reversed())]:
    print("  rotation", q.vertices, "verifies:", verify_path(H, q) is None)

# %%
S = endpoint_neighborhood(H, p, "first")
print("N(u_1) outside the path:", sorted(S))
print("S^-  =", sorted(shift_back(S & set(p.vertices), p, 1)))
print("S^-- =", sorted(shift_back(S & set(p.vertices), p, 2)))

# %%
# The tree-like union of complete blocks has no Berge-cycle of length >= k.
T = build_tree_like(9, 6, 3)
for t in (5, 6):
    res = has_berge_cycle_of_length_at_least(T, t)
    print(f"cycle of length >= {t}:", res.status)
