"""Immutable r-uniform hypergraphs on dense integer vertex labels.

Vertices are ``0..n-1``. Edges are strictly increasing r-tuples kept in
ascending lexicographic order, which is also the order used by the text
file format and by certificate edge indexes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    """Raised for malformed hypergraphs or out-of-range vertex queries."""


Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    n: int
    r: int
    edges: tuple[Edge, ...] = field(default=())

    def __init__(self, n: int, r: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise HypergraphError(f"vertex count must be nonnegative, got {n}")
        if r < 2:
            raise HypergraphError(f"uniformity must be at least 2, got {r}")
        normalized = []
        for raw in edges:
            e = tuple(sorted(int(v) for v in raw))
            if len(e) != r or len(set(e)) != r:
                raise HypergraphError(f"edge {tuple(raw)} does not have {r} distinct vertices")
            if e[0] < 0 or e[-1] >= n:
                raise HypergraphError(f"edge {tuple(raw)} has a vertex outside [0, {n})")
            normalized.append(e)
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise HypergraphError(f"duplicate edge {a}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "edges", tuple(normalized))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Vertex bitmask of each edge."""
        out = []
        for e in self.edges:
            mask = 0
            for v in e:
                mask |= 1 << v
            out.append(mask)
        return tuple(out)

    @cached_property
    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the ascending indexes of edges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Bitmask of N_H(v) for each vertex (v excluded)."""
        out = [0] * self.n
        for e, mask in zip(self.edges, self.edge_masks):
            for v in e:
                out[v] |= mask
        return tuple(mask & ~(1 << v) for v, mask in enumerate(out))

    @cached_property
    def pair_edges(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Map (u, v) with u < v to the ascending indexes of edges containing both."""
        table: dict[tuple[int, int], list[int]] = {}
        for i, e in enumerate(self.edges):
            for pair in combinations(e, 2):
                table.setdefault(pair, []).append(i)
        return {k: tuple(v) for k, v in table.items()}

    def edges_containing(self, u: int, v: int) -> tuple[int, ...]:
        if u > v:
            u, v = v, u
        return self.pair_edges.get((u, v), ())

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise HypergraphError(f"vertex {v} out of range [0, {self.n})")

    def without_edges(self, indexes: Iterable[int]) -> Hypergraph:
        drop = set(indexes)
        return Hypergraph(self.n, self.r, (e for i, e in enumerate(self.edges) if i not in drop))

    def relabel(self, perm: Sequence[int]) -> Hypergraph:
        """Apply the vertex map ``v -> perm[v]`` (a permutation of 0..n-1)."""
        if sorted(perm) != list(range(self.n)):
            raise HypergraphError("relabeling is not a permutation of the vertex set")
        return Hypergraph(self.n, self.r, (tuple(perm[v] for v in e) for e in self.edges))


def degree(H: Hypergraph, v: int) -> int:
    H.check_vertex(v)
    return len(H.incidence[v])


def min_degree(H: Hypergraph) -> int:
    return min((len(x) for x in H.incidence), default=0)


def neighborhood(H: Hypergraph, v: int) -> frozenset[int]:
    """Vertices sharing at least one edge with ``v``; ``v`` itself excluded."""
    H.check_vertex(v)
    return mask_to_set(H.adjacency_masks[v])


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def is_connected(H: Hypergraph) -> bool:
    if H.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        v = 0
        f = frontier
        while f:
            if f & 1:
                nxt |= H.adjacency_masks[v]
            f >>= 1
            v += 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << H.n) - 1


def peel(H: Hypergraph, d: int) -> tuple[Hypergraph, dict[int, int]]:
    """Repeatedly delete vertices of degree below ``d`` with their edges.

    Returns the surviving sub-hypergraph relabeled to ``0..n'-1`` (order
    preserving) and the map from old to new labels of the survivors.
    """
    if d < 0:
        raise HypergraphError(f"degree threshold must be nonnegative, got {d}")
    alive_edge = [True] * H.m
    deg = [len(x) for x in H.incidence]
    removed = [False] * H.n
    queue = deque(v for v in range(H.n) if deg[v] < d)
    for v in queue:
        removed[v] = True
    while queue:
        v = queue.popleft()
        for i in H.incidence[v]:
            if not alive_edge[i]:
                continue
            alive_edge[i] = False
            for w in H.edges[i]:
                deg[w] -= 1
                if not removed[w] and deg[w] < d:
                    removed[w] = True
                    queue.append(w)
    mapping = {}
    for v in range(H.n):
        if not removed[v]:
            mapping[v] = len(mapping)
    edges = [tuple(mapping[v] for v in e) for i, e in enumerate(H.edges) if alive_edge[i]]
    return Hypergraph(len(mapping), H.r, edges), mapping


# --- canonical labeling -------------------------------------------------------

def _refine(H: Hypergraph, colors: list[int]) -> list[int]:
    """Equitable refinement of a vertex coloring; new colors keep the old order."""
    while True:
        sigs = []
        for v in range(H.n):
            around = sorted(
                tuple(sorted(colors[w] for w in H.edges[i] if w != v)) for i in H.incidence[v]
            )
            sigs.append((colors[v], tuple(around)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == len(set(colors)):
            return new
        colors = new


def _swap_is_automorphism(H: Hypergraph, u: int, v: int) -> bool:
    edge_set = H.edge_set
    swap = {u: v, v: u}
    for i in set(H.incidence[u]) | set(H.incidence[v]):
        if frozenset(swap.get(w, w) for w in H.edges[i]) not in edge_set:
            return False
    return True


def _encode(H: Hypergraph, position: Sequence[int]) -> bytes:
    edges = sorted(tuple(sorted(position[v] for v in e)) for e in H.edges)
    body = ";".join(",".join(map(str, e)) for e in edges)
    return f"{H.r} {H.n} {H.m}|{body}".encode()


def canonical_form(H: Hypergraph) -> bytes:
    """Byte string equal for two hypergraphs iff they are isomorphic.

    Individualization-refinement over vertex colorings seeded by degree;
    every leaf (discrete coloring) is a candidate labeling and the
    lexicographically smallest encoding wins. Exponential in the worst case,
    meant for n up to about 10.
    """
    if H.n == 0:
        return _encode(H, [])
    start = _refine(H, [len(x) for x in H.incidence])
    best: bytes | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = next((c for c in sorted(counts) if counts[c] > 1), None)
        if target is None:
            code = _encode(H, colors)
            if best is None or code < best:
                best = code
            return
        tried: list[int] = []
        for v in range(H.n):
            if colors[v] != target:
                continue
            # swapping v with an already tried vertex of the same cell would
            # reproduce that subtree's leaves
            if any(_swap_is_automorphism(H, u, v) for u in tried):
                continue
            tried.append(v)
            split = [2 * c + (1 if c == target and w != v else 0) for w, c in enumerate(colors)]
            search(_refine(H, split))

    search(start)
    assert best is not None
    return best


def from_canonical_form(code: bytes) -> Hypergraph:
    """Rebuild the canonically labeled representative of a canonical form."""
    head, _, body = code.decode().partition("|")
    r, n, _m = (int(x) for x in head.split())
    edges = [tuple(int(x) for x in e.split(",")) for e in body.split(";")] if body else []
    return Hypergraph(n, r, edges)
