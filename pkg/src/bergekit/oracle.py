"""Brute-force ground truth for tiny parameter cells.

``naive_path_check`` re-derives Berge-path containment straight from the
definition and shares nothing with :mod:`bergekit.search`; the extremal
scan uses the fast searcher and is cross-checked against it in the tests.
"""

from __future__ import annotations

import hashlib
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from . import formulas
from .hypergraph import Hypergraph, canonical_form, from_canonical_form, is_connected
from .io import format_hypergraph
from .search import EXHAUSTED, FOUND, SearchLimits, UNLIMITED, has_berge_path_of_length

log = logging.getLogger(__name__)

SHARD_EDGES = 4


def naive_path_check(H: Hypergraph, t: int) -> bool:
    """True iff some alternating sequence of t+1 distinct vertices and t
    distinct edges satisfies the containment condition."""
    edges = [set(e) for e in H.edges]
    if t < 1:
        return True
    if len(edges) < t or H.n < t + 1:
        return False

    def assign(seq: list[int], i: int, taken: list[int]) -> bool:
        if i == len(seq) - 1:
            return True
        for j, e in enumerate(edges):
            if j not in taken and seq[i] in e and seq[i + 1] in e:
                taken.append(j)
                if assign(seq, i + 1, taken):
                    return True
                taken.pop()
        return False

    def grow(seq: list[int]) -> bool:
        if len(seq) == t + 1:
            return assign(seq, 0, [])
        for v in range(H.n):
            if v in seq:
                continue
            if seq and not any(seq[-1] in e and v in e for e in edges):
                continue
            seq.append(v)
            if grow(seq):
                return True
            seq.pop()
        return False

    return grow([])


@dataclass
class BruteForceReport:
    n: int
    k: int
    r: int
    connected_only: bool
    max_edges: int | None
    witnesses: tuple[bytes, ...]
    scanned: int
    labeled_witnesses: int
    authoritative: bool
    elapsed: float = field(default=0.0, compare=False)

    @property
    def num_classes(self) -> int:
        return len(self.witnesses)

    def witness_graphs(self) -> list[Hypergraph]:
        return [from_canonical_form(w) for w in self.witnesses]

    def to_text(self) -> str:
        """Deterministic rendering (elapsed time deliberately omitted)."""
        lines = [
            f"n\t{self.n}",
            f"k\t{self.k}",
            f"r\t{self.r}",
            f"connected\t{int(self.connected_only)}",
            f"max_edges\t{'-' if self.max_edges is None else self.max_edges}",
            f"witness_classes\t{self.num_classes}",
            f"labeled_witnesses\t{self.labeled_witnesses}",
            f"scanned\t{self.scanned}",
            f"authoritative\t{'yes' if self.authoritative else 'no'}",
        ]
        lines.extend(f"witness\t{witness_name(w)}\t{w.decode()}" for w in self.witnesses)
        return "\n".join(lines) + "\n"


def witness_name(code: bytes) -> str:
    return hashlib.sha256(code).hexdigest()[:16]


def _shard(args) -> tuple[int, set[bytes], int, int, bool]:
    n, k, r, connected_only, pattern, max_nodes, deadline = args
    cands = list(combinations(range(n), r))
    total = len(cands)
    head = len(pattern)
    chosen = [cands[i] for i, bit in enumerate(pattern) if bit]
    best = -1
    forms: set[bytes] = set()
    labeled = 0
    scanned = 0
    memo: dict[frozenset, bytes] = {}

    class Stop(Exception):
        pass

    def bp_free(edges) -> bool:
        out = has_berge_path_of_length(Hypergraph(n, r, edges), k)
        return out.status == EXHAUSTED

    def visit(edges: list[tuple[int, ...]]) -> None:
        nonlocal best, labeled, scanned
        scanned += 1
        if max_nodes is not None and scanned > max_nodes:
            raise Stop
        if deadline is not None and scanned % 256 == 0 and time.time() > deadline:
            raise Stop
        m = len(edges)
        if m < best:
            return
        H = Hypergraph(n, r, edges)
        if connected_only and not is_connected(H):
            return
        if m > best:
            best = m
            forms.clear()
            labeled = 0
        key = frozenset(edges)
        if key not in memo:
            memo[key] = canonical_form(H)
        forms.add(memo[key])
        labeled += 1

    def dfs(start: int, edges: list[tuple[int, ...]]) -> None:
        visit(edges)
        for j in range(start, total):
            if len(edges) + total - j < best:
                break
            edges.append(cands[j])
            if bp_free(edges):
                dfs(j + 1, edges)
            edges.pop()

    ok = True
    if chosen and not bp_free(chosen):
        return -1, set(), 0, 0, True
    try:
        dfs(head, chosen)
    except Stop:
        ok = False
    return best, forms, labeled, scanned, ok


def brute_force_ex(n: int, k: int, r: int, connected_only: bool = False,
                   limits: SearchLimits = UNLIMITED) -> BruteForceReport:
    """Exact (connected) extremal number for BP_k-free r-graphs on n vertices.

    Edge subsets are explored in lexicographic DFS order; a subset that
    already contains a Berge-path of length k is never extended, since
    adding edges cannot destroy a path. The search is sharded on the
    membership pattern of the first few candidate edges; shards are fixed
    independently of the worker count so the report is too.
    """
    t0 = time.time()
    total = len(list(combinations(range(n), r)))
    head = min(SHARD_EDGES, total)
    deadline = t0 + limits.time_limit if limits.time_limit else None
    jobs_args = [
        (n, k, r, connected_only, tuple((mask >> (head - 1 - i)) & 1 for i in range(head)),
         limits.max_nodes, deadline)
        for mask in range(1 << head)
    ]
    if limits.jobs > 1:
        with ProcessPoolExecutor(max_workers=limits.jobs) as pool:
            results = list(pool.map(_shard, jobs_args))
    else:
        results = [_shard(a) for a in jobs_args]

    best = max(res[0] for res in results)
    forms: set[bytes] = set()
    labeled = scanned = 0
    ok = True
    for b, f, lab, sc, good in results:
        scanned += sc
        ok = ok and good
        if b == best and best >= 0:
            forms |= f
            labeled += lab
    report = BruteForceReport(
        n, k, r, connected_only,
        None if best < 0 else best,
        tuple(sorted(forms)),
        scanned,
        labeled,
        ok,
        time.time() - t0,
    )
    validate_report(report)
    log.info("brute force n=%d k=%d r=%d connected=%s: max=%s in %.2fs",
             n, k, r, connected_only, report.max_edges, report.elapsed)
    return report


def validate_report(report: BruteForceReport) -> None:
    """Re-check every witness with an exhaustive search; raises on failure."""
    for H in report.witness_graphs():
        if H.m != report.max_edges:
            raise AssertionError(f"witness has {H.m} edges, expected {report.max_edges}")
        out = has_berge_path_of_length(H, report.k)
        if out.status != EXHAUSTED:
            raise AssertionError(f"witness contains BP_{report.k}: {out.status}")
        if report.connected_only and not is_connected(H):
            raise AssertionError("witness is not connected")


@dataclass(frozen=True)
class FormulaCheck:
    bound: formulas.BoundValue
    equal: bool
    discrepancy: bool


def compare_with_formula(report: BruteForceReport) -> FormulaCheck:
    """Compare a measured maximum with the matching closed form.

    Connected cells are compared with the extremal construction count,
    others with the Győri-Katona-Lemons bound. A discrepancy is raised only
    when the theorem's hypotheses hold and the measurement contradicts it,
    including its equality characterisation.
    """
    n, k, r = report.n, report.k, report.r
    measured = report.max_edges
    if report.connected_only:
        bound = formulas.extremal_count(n, k, r)
        exact = True
        raw = Fraction(bound.value)
    else:
        bound = formulas.gkl_bound(n, k, r)
        exact = formulas.gkl_equality_expected(n, k, r)
        raw = bound.raw
    equal = measured is not None and measured == bound.value
    bad = False
    if bound.hypothesis_ok and measured is not None and report.authoritative:
        if exact:
            bad = measured != raw
        else:
            bad = measured >= raw
    return FormulaCheck(bound, equal, bad)


SUMMARY_COLUMNS = ("n", "k", "r", "connected", "max_edges", "num_witness_classes",
                   "formula_name", "formula_value", "hypothesis_ok", "equal")


def sweep(grid: Iterable[Sequence], out_dir: str | Path, limits: SearchLimits = UNLIMITED) -> tuple[Path, bool]:
    """Run :func:`brute_force_ex` over ``(n, k, r, connected)`` cells.

    Writes ``summary.tsv`` and one witness file per class under
    ``witnesses/``. Returns the summary path and whether any cell was a
    discrepancy.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = ["\t".join(SUMMARY_COLUMNS)]
    any_bad = False
    for n, k, r, connected in grid:
        rep = brute_force_ex(n, k, r, bool(connected), limits)
        chk = compare_with_formula(rep)
        any_bad |= chk.discrepancy
        cell = out / "witnesses" / f"n{n}_k{k}_r{r}_{'conn' if connected else 'all'}"
        cell.mkdir(parents=True, exist_ok=True)
        for code in rep.witnesses:
            (cell / f"{witness_name(code)}.txt").write_text(
                format_hypergraph(from_canonical_form(code)), newline="\n")
        rows.append("\t".join(map(str, (
            n, k, r, int(bool(connected)),
            "-" if rep.max_edges is None else rep.max_edges,
            rep.num_classes,
            chk.bound.name, chk.bound.value,
            "true" if chk.bound.hypothesis_ok else "false",
            "DISCREPANCY" if chk.discrepancy else ("yes" if chk.equal else "no"),
        ))))
    summary = out / "summary.tsv"
    summary.write_text("\n".join(rows) + "\n", newline="\n")
    return summary, any_bad
