import random
from itertools import combinations

import pytest

from bergekit.checks import oracle_agreement, random_hypergraph, rotation_suite
from bergekit.hypergraph import Hypergraph, canonical_form, is_connected
from bergekit.oracle import (
    SUMMARY_COLUMNS,
    BruteForceReport,
    brute_force_ex,
    compare_with_formula,
    naive_path_check,
    sweep,
)
from bergekit.search import SearchLimits, has_berge_path_of_length

K4 = Hypergraph(4, 3, combinations(range(4), 3))


def naive_extremal(n, k, r, connected_only):
    """Plain enumeration over all edge subsets with the naive path check."""
    pool = list(combinations(range(n), r))
    best, classes = None, set()
    for m in range(len(pool), -1, -1):
        for edges in combinations(pool, m):
            H = Hypergraph(n, r, edges)
            if connected_only and not is_connected(H):
                continue
            if not naive_path_check(H, k):
                best = m
                classes.add(canonical_form(H))
        if best is not None:
            return best, classes
    return None, set()


def test_naive_examples():
    assert naive_path_check(K4, 3)
    assert not naive_path_check(Hypergraph(6, 3, [(0, 1, 2), (3, 4, 5)]), 2)
    assert naive_path_check(Hypergraph(3, 3, [(0, 1, 2)]), 1)
    assert not naive_path_check(Hypergraph(3, 3), 1)


def test_brute_force_gkl1_cell():
    rep = brute_force_ex(4, 3, 3)
    assert rep.max_edges == 2 and rep.authoritative
    chk = compare_with_formula(rep)
    assert chk.bound.value == 2 and chk.equal and not chk.discrepancy


def test_brute_force_matching_cell():
    assert brute_force_ex(5, 2, 3).max_edges == 1


def test_brute_force_6_4_3():
    rep = brute_force_ex(6, 4, 3)
    # frozen from the scan, confirmed by naive checks of all 4- and 5-edge sets
    assert rep.max_edges == 4
    assert rep.num_classes == 2 and rep.labeled_witnesses == 30
    chk = compare_with_formula(rep)
    assert chk.bound.value == 6 and rep.max_edges < 6 and not chk.discrepancy


@pytest.mark.parametrize("n,k,r,conn", [
    (4, 3, 3, False), (5, 3, 3, False), (5, 3, 3, True), (5, 4, 3, True),
    (5, 2, 3, False), (5, 4, 2, True), (5, 3, 2, False),
])
def test_brute_force_matches_naive_enumeration(n, k, r, conn):
    rep = brute_force_ex(n, k, r, conn)
    best, classes = naive_extremal(n, k, r, conn)
    assert rep.max_edges == best
    assert set(rep.witnesses) == classes


def test_connected_cell_without_witness():
    rep = brute_force_ex(6, 2, 3, True)
    assert rep.max_edges is None and rep.num_classes == 0
    assert "max_edges\t-" in rep.to_text()


def test_report_is_independent_of_jobs():
    a = brute_force_ex(6, 4, 3, True)
    b = brute_force_ex(6, 4, 3, True, SearchLimits(jobs=4))
    assert a.to_text() == b.to_text()


def test_budget_marks_report_non_authoritative():
    rep = brute_force_ex(6, 4, 3, False, SearchLimits(max_nodes=5))
    assert not rep.authoritative
    assert "authoritative\tno" in rep.to_text()


def test_superset_keeps_paths():
    rng = random.Random(3)
    pool = list(combinations(range(7), 3))
    for _ in range(100):
        small = rng.sample(pool, rng.randint(1, 6))
        big = small + rng.sample([e for e in pool if e not in small], rng.randint(1, 5))
        for t in range(1, 6):
            if has_berge_path_of_length(Hypergraph(7, 3, small), t).found:
                assert has_berge_path_of_length(Hypergraph(7, 3, big), t).found


def test_discrepancy_tripwire():
    fake = BruteForceReport(8, 4, 3, False, 8, (), 0, 0, True)
    assert not compare_with_formula(fake).discrepancy
    fake = BruteForceReport(8, 4, 3, False, 7, (), 0, 0, True)
    assert compare_with_formula(fake).discrepancy
    fake = BruteForceReport(6, 4, 3, False, 6, (), 0, 0, True)
    assert compare_with_formula(fake).discrepancy
    # outside every hypothesis: never flagged
    fake = BruteForceReport(5, 2, 3, False, 3, (), 0, 0, True)
    assert not compare_with_formula(fake).discrepancy


def test_sweep(tmp_path):
    grid = [(n, k, 3, c) for n in (4, 5) for k in (3, 4) for c in (False, True)]
    summary, bad = sweep(grid, tmp_path)
    rows = summary.read_text().splitlines()
    assert rows[0].split("\t") == list(SUMMARY_COLUMNS)
    assert len(rows) == 1 + len(grid)
    first = dict(zip(SUMMARY_COLUMNS, rows[1].split("\t")))
    assert first["formula_name"] == "gkl_bound" and first["formula_value"] == "2"
    assert first["equal"] == "yes" and first["hypothesis_ok"] == "true"
    assert not bad
    conn_rows = [dict(zip(SUMMARY_COLUMNS, r.split("\t"))) for r in rows[1:] if r.split("\t")[3] == "1"]
    assert all(r["hypothesis_ok"] == "false" for r in conn_rows)
    files = sorted((tmp_path / "witnesses" / "n4_k3_r3_all").glob("*.txt"))
    assert len(files) == int(first["num_witness_classes"])
    assert files[0].read_text().startswith("3 4 2\n")


def test_selftest_suites_small():
    assert oracle_agreement(count=20, seed=1).ok
    assert rotation_suite(count=10, seed=1).ok


def test_random_hypergraph_caps_edges():
    H = random_hypergraph(random.Random(0), 4, 3, 99)
    assert H.m == 4


def test_dense_random_agreement():
    rng = random.Random(77)
    found = 0
    for _ in range(60):
        n = rng.randint(5, 7)
        H = random_hypergraph(rng, n, 3, rng.randint(8, 16))
        for t in range(1, n):
            fast = has_berge_path_of_length(H, t).found
            assert fast == naive_path_check(H, t)
            found += fast
    assert found > 100


def test_r2_agrees_with_ordinary_paths():
    rng = random.Random(8)
    for _ in range(40):
        H = random_hypergraph(rng, 6, 2, rng.randint(0, 10))
        for t in range(1, 6):
            assert has_berge_path_of_length(H, t).found == naive_path_check(H, t)


def test_sweep_small_grid_has_no_discrepancy(tmp_path):
    grid = [(n, k, 3, c) for n in range(4, 7) for k in range(3, 6) for c in (False, True)]
    summary, bad = sweep(grid, tmp_path)
    rows = [dict(zip(SUMMARY_COLUMNS, r.split("\t"))) for r in summary.read_text().splitlines()[1:]]
    assert len(rows) == 18 and not bad
    cell = {(r["n"], r["k"], r["connected"]): r for r in rows}
    assert cell["4", "3", "0"]["equal"] == "yes"
    assert cell["6", "4", "0"]["max_edges"] == "4"
    assert all(r["hypothesis_ok"] == "false" for r in rows if r["connected"] == "1")
