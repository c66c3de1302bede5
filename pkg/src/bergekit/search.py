"""Berge-path and Berge-cycle certificates, exact search and path moves.

The exact searches grow a vertex sequence depth first. Each consecutive
pair of vertices is a *slot* that must receive its own hyperedge containing
both vertices; distinctness of the hyperedges is a bipartite matching
between slots and edges, kept incrementally: pushing a vertex adds one slot
and runs a single augmenting-path attempt, popping it just frees that
slot's edge.
"""

from __future__ import annotations

import os
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .hypergraph import Hypergraph, mask_to_set

FOUND = "found"
EXHAUSTED = "exhausted-not-found"
BUDGET = "budget-exceeded"

_CHECK_EVERY = 1 << 12


@dataclass(frozen=True)
class BergePath:
    vertices: tuple[int, ...]
    edge_indexes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edge_indexes", tuple(self.edge_indexes))

    @property
    def length(self) -> int:
        return len(self.edge_indexes)

    def reversed(self) -> BergePath:
        return BergePath(self.vertices[::-1], self.edge_indexes[::-1])

    def prefix(self, length: int) -> BergePath:
        return BergePath(self.vertices[: length + 1], self.edge_indexes[:length])


@dataclass(frozen=True)
class BergeCycle:
    vertices: tuple[int, ...]
    edge_indexes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edge_indexes", tuple(self.edge_indexes))

    @property
    def length(self) -> int:
        return len(self.edge_indexes)

    def to_path(self, drop: int = -1) -> BergePath:
        """Open the cycle by deleting defining edge ``drop`` (default: the closing edge)."""
        t = self.length
        drop %= t
        order = [(drop + 1 + i) % t for i in range(t)]
        return BergePath(
            [self.vertices[i] for i in order],
            [self.edge_indexes[i] for i in order[:-1]],
        )


@dataclass(frozen=True)
class Violation:
    index: int
    reason: str

    def __str__(self) -> str:
        return f"position {self.index}: {self.reason}"


@dataclass(frozen=True)
class SearchLimits:
    """Search budgets; ``None`` means unlimited."""

    max_nodes: int | None = None
    time_limit: float | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


UNLIMITED = SearchLimits()


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    certificate: BergePath | BergeCycle | None = None
    nodes: int = 0
    optimal: bool = field(default=False, compare=False)

    def __post_init__(self):
        if (self.status == FOUND) != (self.certificate is not None):
            raise ValueError("status 'found' iff a certificate is attached")

    @property
    def found(self) -> bool:
        return self.status == FOUND


# --- verification -------------------------------------------------------------

def _verify(H: Hypergraph, vertices: Sequence[int], edges: Sequence[int], cyclic: bool) -> Violation | None:
    t = len(edges)
    if cyclic:
        if t < 2:
            return Violation(0, "cycle length must be at least 2")
        if len(vertices) != t:
            return Violation(0, f"cycle of length {t} needs {t} vertices, got {len(vertices)}")
    else:
        if t < 1:
            return Violation(0, "path length must be at least 1")
        if len(vertices) != t + 1:
            return Violation(0, f"path of length {t} needs {t + 1} vertices, got {len(vertices)}")
    seen: set[int] = set()
    for i, v in enumerate(vertices):
        if not 0 <= v < H.n:
            return Violation(i, f"vertex {v} out of range")
        if v in seen:
            return Violation(i, f"duplicate vertex {v}")
        seen.add(v)
    seen.clear()
    for i, e in enumerate(edges):
        if not 0 <= e < H.m:
            return Violation(i, f"edge index {e} out of range")
        if e in seen:
            return Violation(i, f"duplicate edge index {e}")
        seen.add(e)
    for i, e in enumerate(edges):
        u, w = vertices[i], vertices[(i + 1) % len(vertices)]
        mask = H.edge_masks[e]
        if not (mask >> u) & 1 or not (mask >> w) & 1:
            return Violation(i, f"edge {e} does not contain both {u} and {w}")
    return None


def verify_path(H: Hypergraph, p: BergePath) -> Violation | None:
    """``None`` if ``p`` is a Berge-path of ``H``, else the first violation."""
    return _verify(H, p.vertices, p.edge_indexes, cyclic=False)


def verify_cycle(H: Hypergraph, c: BergeCycle) -> Violation | None:
    return _verify(H, c.vertices, c.edge_indexes, cyclic=True)


# --- exact search -------------------------------------------------------------

class _OutOfBudget(Exception):
    pass


class _Searcher:
    """One depth-first search rooted at a fixed first vertex."""

    def __init__(self, H: Hypergraph, max_nodes: int | None, deadline: float | None):
        self.H = H
        self.adj = H.adjacency_masks
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.nodes = 0
        self.owner = [-1] * H.m
        self.slot_pairs: list[tuple[int, int]] = []
        self.slot_edge: list[int] = []

    def _tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            self.nodes = self.max_nodes
            raise _OutOfBudget
        if self.deadline is not None and self.nodes % _CHECK_EVERY == 0 and time.time() > self.deadline:
            raise _OutOfBudget

    def _augment(self, slot: int, visited: set[int]) -> bool:
        u, w = self.slot_pairs[slot]
        for e in self.H.edges_containing(u, w):
            if e in visited:
                continue
            visited.add(e)
            holder = self.owner[e]
            if holder == -1 or self._augment(holder, visited):
                self.owner[e] = slot
                self.slot_edge[slot] = e
                return True
        return False

    def _push_slot(self, u: int, w: int) -> bool:
        slot = len(self.slot_pairs)
        self.slot_pairs.append((u, w))
        self.slot_edge.append(-1)
        for e in self.H.edges_containing(u, w):
            if self.owner[e] == -1:
                self.owner[e] = slot
                self.slot_edge[slot] = e
                return True
        if self._augment(slot, set()):
            return True
        self.slot_pairs.pop()
        self.slot_edge.pop()
        return False

    def _pop_slot(self) -> None:
        self.owner[self.slot_edge.pop()] = -1
        self.slot_pairs.pop()

    def _reach(self, v: int, allowed: int) -> int:
        """Vertices of ``allowed`` reachable from ``v`` through ``allowed``."""
        adj = self.adj
        seen = 0
        frontier = adj[v] & allowed
        while frontier:
            seen |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & allowed & ~seen
        return seen

    def path(self, start: int, t: int) -> BergePath | None:
        """A Berge-path of length ``t`` starting at ``start`` and ending above it."""
        verts = [start]
        above = ~((1 << (start + 1)) - 1)
        full = (1 << self.H.n) - 1

        def grow(used: int) -> bool:
            have = len(verts)
            if have == t + 1:
                return True
            end = verts[-1]
            free = full & ~used
            need = t + 1 - have
            if need > 1 and self._reach(end, free).bit_count() < need:
                return False
            cand = self.adj[end] & free
            if need == 1:
                cand &= above
            while cand:
                low = cand & -cand
                cand ^= low
                w = low.bit_length() - 1
                self._tick()
                if not self._push_slot(end, w):
                    continue
                verts.append(w)
                if grow(used | low):
                    return True
                verts.pop()
                self._pop_slot()
            return False

        if grow(1 << start):
            return BergePath(verts, self.slot_edge)
        return None

    def cycle(self, start: int, t: int) -> BergeCycle | None:
        """A Berge-cycle of length >= ``t`` whose smallest vertex is ``start``."""
        verts = [start]
        allowed = ((1 << self.H.n) - 1) & ~((1 << (start + 1)) - 1)
        back = self.adj[start]

        def close() -> bool:
            have = len(verts)
            end = verts[-1]
            if have < t or not (back >> end) & 1:
                return False
            if have > 2 and verts[1] > end:
                return False
            self._tick()
            if self._push_slot(end, start):
                return True
            return False

        def grow(used: int) -> bool:
            if len(verts) >= 2 and close():
                return True
            end = verts[-1]
            free = allowed & ~used
            reach = self._reach(end, free)
            if len(verts) + reach.bit_count() < t:
                return False
            if not (reach | (1 << end)) & back:
                return False
            cand = self.adj[end] & free
            while cand:
                low = cand & -cand
                cand ^= low
                w = low.bit_length() - 1
                self._tick()
                if not self._push_slot(end, w):
                    continue
                verts.append(w)
                if grow(used | low):
                    return True
                verts.pop()
                self._pop_slot()
            return False

        if grow(1 << start):
            return BergeCycle(verts, self.slot_edge)
        return None


def _run_rooted(H: Hypergraph, kind: str, start: int, t: int,
                max_nodes: int | None, deadline: float | None) -> tuple[str, object, int]:
    s = _Searcher(H, max_nodes, deadline)
    try:
        cert = s.path(start, t) if kind == "path" else s.cycle(start, t)
    except _OutOfBudget:
        return BUDGET, None, s.nodes
    return (FOUND if cert is not None else EXHAUSTED), cert, s.nodes


def _rooted_search(H: Hypergraph, kind: str, t: int, starts: Iterable[int],
                   limits: SearchLimits) -> SearchOutcome:
    """Run one rooted search per start vertex and merge in start order.

    The merge is the same for any worker count: starts are consumed in
    ascending order, the node budget is charged cumulatively, and the first
    start that yields a certificate wins.
    """
    starts = list(starts)
    deadline = time.time() + limits.time_limit if limits.time_limit else None
    cap = limits.max_nodes
    total = 0
    if limits.jobs <= 1 or len(starts) <= 1:
        for s in starts:
            remaining = None if cap is None else cap - total
            status, cert, nodes = _run_rooted(H, kind, s, t, remaining, deadline)
            total += nodes
            if status != EXHAUSTED:
                return SearchOutcome(status, cert, total)
        return SearchOutcome(EXHAUSTED, None, total)

    pool = ProcessPoolExecutor(max_workers=limits.jobs)
    try:
        futures = [pool.submit(_run_rooted, H, kind, s, t, cap, deadline) for s in starts]
        for fut in futures:
            status, cert, nodes = fut.result()
            if cap is not None and (status == BUDGET or total + nodes > cap):
                return SearchOutcome(BUDGET, None, cap)
            total += nodes
            if status != EXHAUSTED:
                return SearchOutcome(status, cert, total)
        return SearchOutcome(EXHAUSTED, None, total)
    finally:
        pool.shutdown(wait=False, cancel_futures=True)


def has_berge_path_of_length(H: Hypergraph, t: int, limits: SearchLimits = UNLIMITED) -> SearchOutcome:
    """Decide whether ``H`` contains a Berge-path of length exactly ``t``.

    ``exhausted-not-found`` is a proof of absence; ``budget-exceeded`` is not.
    """
    if t < 1:
        raise ValueError(f"path length must be at least 1, got {t}")
    if t > H.n - 1 or H.m < t:
        return SearchOutcome(EXHAUSTED)
    return _rooted_search(H, "path", t, range(H.n), limits)


def has_berge_cycle_of_length_at_least(H: Hypergraph, t: int, limits: SearchLimits = UNLIMITED) -> SearchOutcome:
    t = max(t, 2)
    if t > H.n or H.m < t:
        return SearchOutcome(EXHAUSTED)
    return _rooted_search(H, "cycle", t, range(H.n - 1), limits)


def longest_berge_path(H: Hypergraph, limits: SearchLimits = UNLIMITED) -> tuple[SearchOutcome, int]:
    """Longest Berge-path, warm-started by :func:`extend_or_rotate`.

    The outcome carries the best certificate; ``outcome.optimal`` is set once
    the next length has been exhausted.
    """
    if H.m == 0:
        return SearchOutcome(EXHAUSTED), 0
    best = extend_or_rotate(H)
    nodes = 0
    deadline = time.time() + limits.time_limit if limits.time_limit else None
    while True:
        t = best.length + 1
        sub = limits
        if limits.max_nodes is not None or deadline is not None:
            left = None if limits.max_nodes is None else limits.max_nodes - nodes
            tl = None if deadline is None else deadline - time.time()
            if (left is not None and left <= 0) or (tl is not None and tl <= 0):
                return SearchOutcome(FOUND, best, nodes, optimal=False), best.length
            sub = SearchLimits(left, tl, limits.jobs)
        out = has_berge_path_of_length(H, t, sub)
        nodes += out.nodes
        if out.status == FOUND:
            best = out.certificate
        elif out.status == EXHAUSTED:
            return SearchOutcome(FOUND, best, nodes, optimal=True), best.length
        else:
            return SearchOutcome(FOUND, best, nodes, optimal=False), best.length


# --- path moves ---------------------------------------------------------------

def rotations(H: Hypergraph, p: BergePath) -> list[BergePath]:
    """All rotations of ``p`` that move its first terminal.

    For each i >= 2 with u_1 in f_i the path
    u_i, f_{i-1}, ..., u_2, f_1, u_1, f_i, u_{i+1}, ..., u_{l+1}
    has the same defining vertices and hyperedges.
    """
    u, f = p.vertices, p.edge_indexes
    first = u[0]
    out = []
    for i in range(1, len(f)):
        if (H.edge_masks[f[i]] >> first) & 1:
            verts = u[i::-1] + u[i + 1:]
            edges = f[i - 1::-1] + f[i:]
            out.append(BergePath(verts, edges))
    return out


def _rotations_both_ends(H: Hypergraph, p: BergePath) -> list[BergePath]:
    return rotations(H, p) + [q.reversed() for q in rotations(H, p.reversed())]


def _extend(H: Hypergraph, p: BergePath) -> BergePath | None:
    """Lengthen ``p`` by one step at a terminal or by inserting a fresh vertex."""
    used_v = set(p.vertices)
    used_e = set(p.edge_indexes)
    for q in (p, p.reversed()):
        end = q.vertices[-1]
        for e in H.incidence[end]:
            if e in used_e:
                continue
            for w in H.edges[e]:
                if w not in used_v:
                    return BergePath(q.vertices + (w,), q.edge_indexes + (e,))
    # insertion: replace f_i between u_i, u_{i+1} by two edges through a new vertex
    adj = H.adjacency_masks
    for i, fi in enumerate(p.edge_indexes):
        a, b = p.vertices[i], p.vertices[i + 1]
        spare = used_e - {fi}
        common = adj[a] & adj[b]
        for w in sorted(mask_to_set(common) - used_v):
            for g in H.edges_containing(a, w):
                if g in spare:
                    continue
                for h in H.edges_containing(w, b):
                    if h in spare or h == g:
                        continue
                    return BergePath(
                        p.vertices[: i + 1] + (w,) + p.vertices[i + 1:],
                        p.edge_indexes[:i] + (g, h) + p.edge_indexes[i + 1:],
                    )
    return None


def extend_or_rotate(H: Hypergraph, p: BergePath | None = None, max_states: int = 2000) -> BergePath:
    """Greedy longest-path heuristic: extend, insert, and rotate until stuck.

    Rotations explore the closure of the current path under terminal
    rotations (at most ``max_states`` distinct terminal/edge-set states)
    looking for a variant that can be lengthened. The result always
    verifies but carries no optimality claim.
    """
    if p is None:
        if H.m == 0:
            raise ValueError("hypergraph has no edges")
        e = H.edges[0]
        p = BergePath((e[0], e[1]), (0,))
    best = p
    while True:
        nxt = _extend(H, best)
        if nxt is not None:
            best = nxt
            continue
        edge_key = hash(frozenset(best.edge_indexes))
        seen = {(best.vertices[0], best.vertices[-1], edge_key)}
        queue = deque([best])
        while queue and nxt is None and len(seen) < max_states:
            cur = queue.popleft()
            for q in _rotations_both_ends(H, cur):
                key = (q.vertices[0], q.vertices[-1], edge_key)
                if key in seen:
                    continue
                seen.add(key)
                nxt = _extend(H, q)
                if nxt is not None:
                    break
                queue.append(q)
        if nxt is None:
            return best
        best = nxt


def _terminal(p: BergePath, which: str) -> int:
    if which in ("first", "start", 0):
        return p.vertices[0]
    if which in ("last", "end", -1):
        return p.vertices[-1]
    raise ValueError(f"which must be 'first' or 'last', got {which!r}")


def endpoint_neighborhood(H: Hypergraph, p: BergePath, which: str = "first") -> frozenset[int]:
    """Neighborhood of a terminal of ``p`` in ``H`` minus the defining edges of ``p``."""
    bad = verify_path(H, p)
    if bad is not None:
        raise ValueError(f"invalid path: {bad}")
    v = _terminal(p, which)
    used = set(p.edge_indexes)
    mask = 0
    for e in H.incidence[v]:
        if e not in used:
            mask |= H.edge_masks[e]
    return mask_to_set(mask & ~(1 << v))


def terminal_edge_count(H: Hypergraph, p: BergePath, which: str = "first") -> int:
    """Number of defining edges of ``p`` incident to the chosen terminal."""
    v = _terminal(p, which)
    return sum((H.edge_masks[e] >> v) & 1 for e in p.edge_indexes)


def shift_back(S: Iterable[int], p: BergePath, steps: int = 1) -> frozenset[int]:
    """Predecessors along ``p``: {u_i : u_{i+1} in S}, applied ``steps`` times."""
    if steps not in (1, 2):
        raise ValueError("steps must be 1 or 2")
    pos = {v: i for i, v in enumerate(p.vertices)}
    cur = frozenset(S)
    stray = cur - pos.keys()
    if stray:
        raise ValueError(f"vertices {sorted(stray)} are not defining vertices of the path")
    for _ in range(steps):
        cur = frozenset(p.vertices[pos[v] - 1] for v in cur if pos[v] > 0)
    return cur


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("BERGEKIT_JOBS", "1")))
    except ValueError:
        return 1
