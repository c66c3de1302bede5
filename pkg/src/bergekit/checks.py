"""Seeded property suites shared by the ``selftest`` command and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .hypergraph import Hypergraph
from .oracle import naive_path_check
from .search import (
    EXHAUSTED,
    FOUND,
    has_berge_path_of_length,
    longest_berge_path,
    rotations,
    verify_path,
)


def random_hypergraph(rng: random.Random, n: int, r: int, m: int) -> Hypergraph:
    pool = list(combinations(range(n), r))
    return Hypergraph(n, r, rng.sample(pool, min(m, len(pool))))


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return f"{verdict}\t{self.name}\tcases={self.cases}\tfailures={len(self.failures)}"


def oracle_agreement(count: int = 200, seed: int = 2024, max_t: int = 6) -> SuiteResult:
    """Matching-based search vs. the naive definition check, t = 1..max_t."""
    rng = random.Random(seed)
    res = SuiteResult("oracle-agreement")
    for g in range(count):
        n = rng.randint(3, 7)
        H = random_hypergraph(rng, n, 3, rng.randint(0, 8))
        for t in range(1, max_t + 1):
            out = has_berge_path_of_length(H, t)
            if out.status == FOUND and verify_path(H, out.certificate) is not None:
                res.failures.append(f"graph {g} t={t}: invalid certificate")
            fast = out.status == FOUND
            if out.status not in (FOUND, EXHAUSTED) or fast != naive_path_check(H, t):
                res.failures.append(f"graph {g} t={t}: search={out.status}")
            res.cases += 1
    return res


def rotation_suite(count: int = 100, seed: int = 7) -> SuiteResult:
    """Every rotation of a longest path verifies and keeps length, vertices and edges."""
    rng = random.Random(seed)
    res = SuiteResult("rotations")
    made = 0
    while made < count:
        n = rng.randint(4, 8)
        H = random_hypergraph(rng, n, 3, rng.randint(2, 12))
        out, length = longest_berge_path(H)
        if out.certificate is None:
            continue
        made += 1
        p = out.certificate
        for q in rotations(H, p) + [x.reversed() for x in rotations(H, p.reversed())]:
            res.cases += 1
            problems = []
            if verify_path(H, q) is not None:
                problems.append("does not verify")
            if q.length != length:
                problems.append("length changed")
            if set(q.vertices) != set(p.vertices):
                problems.append("vertex set changed")
            if set(q.edge_indexes) != set(p.edge_indexes):
                problems.append("edge set changed")
            if problems:
                res.failures.append(f"path {p}: {', '.join(problems)}")
    return res
