from itertools import combinations

import networkx as nx
import pytest

from radgraph import (
    build_graph,
    exact_radius_formula_g4,
    graph6_bytes,
    metric_summary,
)
from radgraph.search import enumerate_extremal, stream_verify, verify_theorem_main_small
from conftest import cycle
from oracles import naive_girth, naive_radius_diameter


def brute_force_reference(n, delta, g):
    """Independent scan over all 2^C(n,2) labelled graphs."""
    pairs = list(combinations(range(n), 2))
    best = None
    count = 0
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        degs = [0] * n
        for u, v in edges:
            degs[u] += 1
            degs[v] += 1
        if min(degs, default=0) < delta and n > 1:
            continue
        radius, _ = naive_radius_diameter(n, edges)
        if radius is None:
            continue
        if naive_girth(n, edges) < g:
            continue
        count += 1
        if best is None or radius > best:
            best = radius
    return best, count


class TestEnumerateExtremal:
    @pytest.mark.parametrize("n,delta,g", [(4, 2, 4), (5, 2, 4), (5, 2, 5), (6, 2, 4), (6, 3, 4), (5, 3, 4), (6, 2, 6)])
    def test_matches_brute_force(self, n, delta, g):
        expected_radius, expected_count = brute_force_reference(n, delta, g)
        res = enumerate_extremal(n, delta, g)
        assert res.max_radius == expected_radius
        assert res.graphs_considered == expected_count

    def test_nonexistent(self):
        res = enumerate_extremal(5, 3, 4)
        assert res.max_radius is None and res.extremal_witness is None
        assert res.graphs_considered == 0

    def test_witness_revalidates(self):
        for n, delta in [(6, 2), (7, 2), (8, 3)]:
            res = enumerate_extremal(n, delta, 4)
            W = res.extremal_witness
            ms = metric_summary(W)
            assert W.n == n
            assert ms.radius == res.max_radius
            assert ms.min_degree >= delta
            assert ms.girth >= 4
            assert naive_girth(W.n, list(W.edges())) >= 4
            assert naive_radius_diameter(W.n, list(W.edges()))[0] == res.max_radius

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_labelled_count_matches_atlas(self, n):
        """Exhaustiveness cross-check: the labelled count must equal the sum
        of n!/|Aut| over the isomorphism classes in the published atlas."""
        import math

        res = enumerate_extremal(n, 2, 4)
        total = 0
        for A in nx.graph_atlas_g():
            if A.number_of_nodes() != n or A.number_of_edges() == 0:
                continue
            if not nx.is_connected(A):
                continue
            if min(d for _, d in A.degree()) < 2:
                continue
            if any(nx.triangles(A).values()):
                continue
            aut = sum(1 for _ in nx.vf2pp_all_isomorphisms(A, A))
            total += math.factorial(n) // aut
        assert res.graphs_considered == total

    def test_girth_six_filter(self):
        res = enumerate_extremal(7, 2, 6)
        assert res.max_radius == 3  # C_7 is the only option up to isomorphism
        ms = metric_summary(res.extremal_witness)
        assert ms.girth >= 6

    def test_jobs_deterministic(self):
        seq = enumerate_extremal(7, 2, 4, jobs=1)
        par = enumerate_extremal(7, 2, 4, jobs=3)
        assert seq.max_radius == par.max_radius
        assert seq.graphs_considered == par.graphs_considered
        assert graph6_bytes(seq.extremal_witness) == graph6_bytes(par.extremal_witness)

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            enumerate_extremal(9, 2, 4)
        with pytest.raises(ValueError):
            enumerate_extremal(10, 2, 4, allow_long=True)

    def test_single_vertex(self):
        res = enumerate_extremal(1, 0, 4)
        assert res.max_radius == 0 and res.graphs_considered == 1


class TestVerifyTheorem:
    def test_small_range_all_equal(self):
        table = verify_theorem_main_small(7, [2, 3])
        assert table["all_equal"]
        rows = {(row["n"], row["delta"]): row for row in table["rows"]}
        assert rows[(3, 2)]["formula"] is None
        assert rows[(3, 2)]["enumerated"] is None
        assert rows[(4, 2)]["enumerated"] == 2
        assert rows[(6, 2)]["enumerated"] == 3
        assert rows[(6, 3)]["enumerated"] == 2

    def test_rows_match_formula_object(self):
        table = verify_theorem_main_small(6, [2])
        for row in table["rows"]:
            assert row["formula"] == exact_radius_formula_g4(row["n"], row["delta"])
            assert row["verdict"] == "EQUAL"


class TestStreamVerify:
    def test_mixed_stream(self, petersen):
        k33 = build_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
        lines = [
            graph6_bytes(cycle(8)).decode(),
            graph6_bytes(k33).decode(),
            graph6_bytes(petersen).decode(),
        ]
        report = stream_verify(lines, 2, 4)
        assert report["accepted"] == 3  # Petersen has girth 5 >= 4
        assert report["max_radius"] == 4
        assert report["witness"] == lines[0]
        assert report["bound_violations"] == []
        assert report["by_n"]["8"]["max_radius"] == 4
        assert report["by_n"]["10"]["max_radius"] == 2

    def test_empty_stream(self):
        report = stream_verify([], 2, 4)
        assert report["total"] == 0 and report["max_radius"] is None

    def test_girth_filter_excludes_k4(self):
        k4 = build_graph(4, list(combinations(range(4), 2)))
        report = stream_verify([graph6_bytes(k4).decode()], 2, 4)
        assert report["accepted"] == 0 and report["filtered_out"] == 1

    def test_malformed_lines_counted(self):
        lines = ["not graph6 at all \x01", graph6_bytes(cycle(5)).decode()]
        report = stream_verify(lines, 2, 4)
        assert report["malformed"] == 1 and report["accepted"] == 1

    def test_blank_lines_ignored(self):
        report = stream_verify(["", "  ", graph6_bytes(cycle(6)).decode()], 2, 4)
        assert report["total"] == 1 and report["accepted"] == 1
