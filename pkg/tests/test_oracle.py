"""Subset-enumeration oracle: cross-checks against a direct reference scan.

The reference enumerator below is deliberately naive (itertools over all
combinations, set-based cut counting) so the two implementations share
nothing but the graph. Witnesses must match too: both sides resolve ties
by the lexicographically least sorted vertex tuple.
"""

import itertools

import pytest

from isocut.closedform import (
    ConditionKind,
    extra_connectivity_scan,
    min_edge_boundary,
)
from isocut.errors import (
    BudgetError,
    DomainError,
    InfeasibleError,
    SubsetBudgetError,
    UnsupportedError,
)
from isocut.graphs import HammingParams, bc_network, components, hamming_graph, parse_edge_list
from isocut.oracle import (
    OracleBudget,
    bipartite_property_check,
    brute_boundary_profile,
    brute_conditional,
    brute_extra_connectivity,
    brute_min_boundary,
    brute_min_boundary_bilateral,
    brute_min_boundary_connected,
)


def graph_from_edges(n, edges, label):
    lines = [f"# vertices={n} edges={len(edges)} label={label}"]
    lines += [f"{u} {v}" for u, v in sorted(edges)]
    return parse_edge_list("\n".join(lines) + "\n")


def reference_profile(graph, max_m, mode):
    """First-minimum-in-lex-order scan over raw combinations."""
    n = graph.vertex_count
    out = []
    for m in range(1, max_m + 1):
        best = None
        for combo in itertools.combinations(range(n), m):
            inside = set(combo)
            if mode in ("connected", "bilateral"):
                if len(components(graph, combo)) != 1:
                    continue
            if mode == "bilateral":
                rest = [v for v in range(n) if v not in inside]
                if len(components(graph, rest)) != 1:
                    continue
            cut = sum(
                1 for v in combo for w in graph.neighbors(v) if w not in inside
            )
            if best is None or cut < best[0]:
                best = (cut, combo)
        out.append(best)
    return out


def pocket_graph():
    """K6 core with three pendant triangles; separates the three modes.

    At m = 6 the best unrestricted set is two whole triangles (cut 2,
    disconnected), the best connected set is the core (cut 3), and the core's
    complement falls apart, pushing the bilateral optimum higher still.
    """
    edges = list(itertools.combinations(range(6), 2))
    for base in (6, 9, 12):
        edges += [(base, base + 1), (base, base + 2), (base + 1, base + 2)]
    edges += [(0, 6), (1, 9), (2, 12)]
    return graph_from_edges(15, edges, "pocket")


CROSS_CHECK_GRAPHS = [
    ("q3", lambda: hamming_graph(HammingParams(2, 3)), 4),
    ("k32", lambda: hamming_graph(HammingParams(3, 2)), 4),
    ("bc3-seed7", lambda: bc_network(3, "seeded_random", seed=7), 4),
    ("pocket", pocket_graph, 6),
]


class TestAgainstReference:
    @pytest.mark.parametrize("mode", ["any", "connected", "bilateral"])
    @pytest.mark.parametrize(
        "name,make,max_m", CROSS_CHECK_GRAPHS, ids=[g[0] for g in CROSS_CHECK_GRAPHS]
    )
    def test_profiles_and_witnesses(self, name, make, max_m, mode):
        graph = make()
        got = brute_boundary_profile(graph, max_m, mode=mode)
        assert got == reference_profile(graph, max_m, mode)

    def test_random_graphs(self):
        import random

        for seed in (1, 2, 3):
            rng = random.Random(seed)
            n = 9
            edges = [
                (u, v)
                for u, v in itertools.combinations(range(n), 2)
                if rng.random() < 0.4
            ]
            graph = graph_from_edges(n, edges, f"gnp-{seed}")
            for mode in ("any", "connected", "bilateral"):
                got = brute_boundary_profile(graph, 4, mode=mode)
                assert got == reference_profile(graph, 4, mode), (seed, mode)

    def test_pocket_mode_separation(self):
        graph = pocket_graph()
        any6 = brute_boundary_profile(graph, 6, mode="any")[5]
        conn6 = brute_boundary_profile(graph, 6, mode="connected")[5]
        bi6 = brute_boundary_profile(graph, 6, mode="bilateral")[5]
        assert any6[0] == 2 and any6[1] == (6, 7, 8, 9, 10, 11)
        assert conn6[0] == 3 and conn6[1] == (0, 1, 2, 3, 4, 5)
        assert any6[0] < conn6[0] < bi6[0]


class TestFrozenProfiles:
    def test_q3_all_modes_match_formula(self):
        p = HammingParams(2, 3)
        graph = hamming_graph(p)
        expect = [3, 4, 5, 4]
        for mode in ("any", "connected", "bilateral"):
            prof = brute_boundary_profile(graph, 4, mode=mode)
            assert [e[0] for e in prof] == expect
        assert [min_edge_boundary(m, p) for m in range(1, 5)] == expect

    def test_q3_witnesses_are_prefixes(self):
        graph = hamming_graph(HammingParams(2, 3))
        prof = brute_boundary_profile(graph, 4, mode="bilateral")
        assert [e[1] for e in prof] == [(0,), (0, 1), (0, 1, 2), (0, 1, 2, 3)]

    def test_q4_bilateral_matches_formula(self):
        p = HammingParams(2, 4)
        graph = hamming_graph(p)
        prof = brute_boundary_profile(graph, 8, mode="bilateral")
        assert [e[0] for e in prof] == [4, 6, 8, 8, 10, 10, 10, 8]
        assert [e[0] for e in prof] == [
            min_edge_boundary(m, p) for m in range(1, 9)
        ]


class TestWrapperFunctions:
    def test_min_boundary_report(self):
        graph = hamming_graph(HammingParams(2, 3))
        r = brute_min_boundary(graph, 3)
        assert r.optimum == 5
        assert r.witness == (0, 1, 2)
        assert r.atom_size == 3
        assert r.report.cut_size == 5
        assert r.report.internal_edges == 2
        assert r.subsets_visited > 0

    def test_connected_and_bilateral_wrappers(self):
        graph = pocket_graph()
        assert brute_min_boundary(graph, 6).optimum == 2
        assert brute_min_boundary_connected(graph, 6).optimum == 3
        assert brute_min_boundary_bilateral(graph, 6).optimum > 3

    def test_to_dict(self):
        graph = hamming_graph(HammingParams(2, 2))
        d = brute_min_boundary(graph, 2).to_dict()
        for key in ("optimum", "witness", "atom_size", "cut_size", "subsets_visited"):
            assert key in d

    def test_m_domain(self):
        graph = hamming_graph(HammingParams(2, 3))
        with pytest.raises(DomainError):
            brute_min_boundary(graph, 0)
        with pytest.raises(DomainError):
            brute_min_boundary(graph, 5)  # above half


class TestDeterminism:
    def test_serial_equals_parallel(self):
        graph = hamming_graph(HammingParams(2, 4))
        serial = brute_boundary_profile(
            graph, 8, mode="bilateral", budget=OracleBudget(parallel_chunks=1)
        )
        parallel = brute_boundary_profile(
            graph, 8, mode="bilateral", budget=OracleBudget(parallel_chunks=4)
        )
        assert serial == parallel

    def test_serial_equals_parallel_any_mode(self):
        graph = hamming_graph(HammingParams(3, 2))
        serial = brute_boundary_profile(
            graph, 4, mode="any", budget=OracleBudget(parallel_chunks=1)
        )
        parallel = brute_boundary_profile(
            graph, 4, mode="any", budget=OracleBudget(parallel_chunks=3)
        )
        assert serial == parallel


class TestBudgets:
    def test_vertex_cap(self):
        graph = hamming_graph(HammingParams(2, 6))
        with pytest.raises(BudgetError):
            brute_min_boundary(graph, 2, budget=OracleBudget(max_vertices=32))

    def test_subset_precheck(self):
        graph = hamming_graph(HammingParams(2, 3))
        with pytest.raises(SubsetBudgetError):
            brute_min_boundary(graph, 4, budget=OracleBudget(max_subsets=5))

    def test_connected_scan_cap(self):
        graph = hamming_graph(HammingParams(2, 4))
        with pytest.raises(SubsetBudgetError):
            brute_min_boundary_connected(graph, 8, budget=OracleBudget(max_subsets=40))


class TestConditionalOracle:
    def test_extra_small(self):
        graph = hamming_graph(HammingParams(2, 3))
        r = brute_conditional(graph, ConditionKind.extra(1))
        assert (r.optimum, r.witness) == (3, (0,))
        r = brute_conditional(graph, ConditionKind.extra(2))
        assert (r.optimum, r.witness, r.atom_size) == (4, (0, 1), 2)

    def test_extra_matches_scan(self):
        p = HammingParams(2, 4)
        graph = hamming_graph(p)
        for h in (1, 2, 3, 5):
            got = brute_extra_connectivity(graph, h, budget=OracleBudget()).optimum
            assert got == extra_connectivity_scan(h, p)

    def test_cyclic_q4(self):
        graph = hamming_graph(HammingParams(2, 4))
        r = brute_conditional(graph, ConditionKind.cyclic())
        assert r.optimum == 8
        assert r.witness == (0, 1, 2, 3)  # least 2-dimensional subcube

    def test_super_and_average_k32(self):
        graph = hamming_graph(HammingParams(3, 2))
        p = HammingParams(3, 2)
        for cond in (ConditionKind.super_degree(2), ConditionKind.average_degree(2)):
            r = brute_conditional(graph, cond, params=p)
            assert r.optimum == 6
            assert r.witness == (0, 1, 2)  # one full row

    def test_embedded_needs_params(self):
        graph = hamming_graph(HammingParams(2, 3))
        p = HammingParams(2, 3)
        r = brute_conditional(graph, ConditionKind.embedded(1), params=p)
        # a single axis edge already carries a 1-dimensional sub-layer
        assert (r.optimum, r.witness) == (4, (0, 1))
        with pytest.raises(UnsupportedError):
            brute_conditional(graph, ConditionKind.embedded(1))

    def test_embedded_rejects_foreign_graph(self):
        graph = bc_network(3, "seeded_random", seed=7)
        with pytest.raises(UnsupportedError):
            brute_conditional(
                graph, ConditionKind.embedded(1), params=HammingParams(2, 3)
            )

    def test_isoperimetric_q4(self):
        graph = hamming_graph(HammingParams(2, 4))
        r = brute_conditional(graph, ConditionKind.isoperimetric(5))
        assert r.optimum == 8
        assert r.atom_size == 8
        assert r.witness == tuple(range(8))

    def test_infeasible(self):
        q3 = hamming_graph(HammingParams(2, 3))
        with pytest.raises(InfeasibleError):
            brute_conditional(q3, ConditionKind.extra(5))
        q2 = hamming_graph(HammingParams(2, 2))
        with pytest.raises(InfeasibleError):
            brute_conditional(q2, ConditionKind.cyclic())

    def test_extra_domain(self):
        q3 = hamming_graph(HammingParams(2, 3))
        with pytest.raises(DomainError):
            brute_extra_connectivity(q3, 0)


class TestBipartiteProperty:
    def test_holds_on_small_cases(self):
        q3 = hamming_graph(HammingParams(2, 3))
        assert bipartite_property_check(q3, ConditionKind.extra(1))
        assert bipartite_property_check(q3, ConditionKind.isoperimetric(2))
        k32 = hamming_graph(HammingParams(3, 2))
        assert bipartite_property_check(k32, ConditionKind.extra(2))
