"""Generators for the named r-graph families.

Labeling conventions are part of the public contract: in the extremal
construction the core ``A`` occupies ``0..|A|-1`` and, for even ``k``, the
special pair ``b1, b2`` are the two smallest labels outside ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .formulas import core_size
from .hypergraph import Hypergraph


class ConstructionInfeasible(ValueError):
    """Parameters for which a family member does not exist."""


@dataclass(frozen=True)
class ExtremalParams:
    n: int
    k: int
    r: int

    def __post_init__(self):
        if self.n < 1 or self.k < 2 or self.r < 2:
            raise ConstructionInfeasible(
                f"need n >= 1, k >= 2, r >= 2 (got n={self.n}, k={self.k}, r={self.r})"
            )

    @property
    def a(self) -> int:
        return core_size(self.k)


@dataclass(frozen=True)
class PartitionedConstruction:
    core: frozenset[int]
    periphery: frozenset[int]
    special_pair: tuple[int, int] | None = None

    def header(self) -> str:
        """One-line description used as a comment header in hypergraph files."""
        b1, b2 = self.special_pair if self.special_pair else ("-", "-")
        fmt = lambda s: ",".join(map(str, sorted(s))) or "-"  # noqa: E731
        return f"A={fmt(self.core)} B={fmt(self.periphery)} b1={b1} b2={b2}"


def build_extremal(n: int, k: int, r: int) -> tuple[Hypergraph, PartitionedConstruction]:
    """The connected BP_k-free r-graph H_{n,k}.

    Edges are the r-sets with at least r-1 vertices in A, plus for even k the
    r-sets containing both b1 and b2 whose other r-2 vertices lie in A.
    """
    params = ExtremalParams(n, k, r)
    a = params.a
    if a < r - 1:
        raise ConstructionInfeasible(f"floor((k-1)/2) >= r-1 violated: {a} < {r - 1}")
    if k % 2 == 1 and n < a + 1:
        raise ConstructionInfeasible(f"n >= floor((k-1)/2)+1 violated: {n} < {a + 1}")
    if k % 2 == 0 and n < a + 2:
        raise ConstructionInfeasible(f"n >= (k-2)/2+2 violated: {n} < {a + 2}")

    core = range(a)
    edges = [e for e in combinations(core, r)]
    for b in range(a, n):
        edges.extend(s + (b,) for s in combinations(core, r - 1))
    pair = None
    if k % 2 == 0:
        pair = (a, a + 1)
        edges.extend(s + pair for s in combinations(core, r - 2))
    part = PartitionedConstruction(frozenset(core), frozenset(range(a, n)), pair)
    return Hypergraph(n, r, edges), part


def build_complete(n: int, r: int) -> Hypergraph:
    if n < r:
        raise ConstructionInfeasible(f"complete r-graph needs n >= r ({n} < {r})")
    return Hypergraph(n, r, combinations(range(n), r))


def build_gkl1(n: int, k: int, r: int) -> Hypergraph:
    """n/(r+1) disjoint (r+1)-blocks, each holding its k-1 lexicographically smallest r-subsets."""
    if n % (r + 1):
        raise ConstructionInfeasible(f"(r+1) | n violated: {r + 1} does not divide {n}")
    if not 1 <= k - 1 <= r + 1:
        raise ConstructionInfeasible(f"1 <= k-1 <= r+1 violated for k={k}, r={r}")
    edges = []
    for start in range(0, n, r + 1):
        block = range(start, start + r + 1)
        edges.extend(list(combinations(block, r))[: k - 1])
    return Hypergraph(n, r, edges)


def build_tree_like(n: int, k: int, r: int) -> Hypergraph:
    """Complete (k-1)-vertex r-graphs glued in a star at vertex 0."""
    if k - 1 < r:
        raise ConstructionInfeasible(f"k-1 >= r violated: {k - 1} < {r}")
    if k < 3 or (n - 1) % (k - 2):
        raise ConstructionInfeasible(f"(k-2) | (n-1) violated for n={n}, k={k}")
    edges = []
    for i in range((n - 1) // (k - 2)):
        block = (0,) + tuple(range(1 + i * (k - 2), 1 + (i + 1) * (k - 2)))
        edges.extend(combinations(block, r))
    return Hypergraph(n, r, edges)


def disjoint_union(*parts: Hypergraph) -> Hypergraph:
    if not parts:
        raise ConstructionInfeasible("disjoint union of nothing")
    r = parts[0].r
    if any(H.r != r for H in parts):
        raise ConstructionInfeasible("all parts must have the same uniformity")
    offset = 0
    edges = []
    for H in parts:
        edges.extend(tuple(v + offset for v in e) for e in H.edges)
        offset += H.n
    return Hypergraph(offset, r, edges)


def empty(n: int, r: int) -> Hypergraph:
    return Hypergraph(n, r, ())
