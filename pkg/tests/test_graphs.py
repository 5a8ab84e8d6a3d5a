"""Graph construction, vertex codecs, and edge-list serialization."""

import itertools

import pytest
from hypothesis import given, strategies as st

from isocut.errors import CapError, DomainError
from isocut.graphs import (
    Graph,
    HammingParams,
    bc_network,
    components,
    decode,
    encode,
    format_digits,
    format_edge_list,
    hamming_graph,
    lex_compare,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)


class TestHammingParams:
    def test_counts(self):
        p = HammingParams(3, 4)
        assert p.vertex_count == 81
        assert p.degree == 8
        assert p.edge_count == 81 * 8 // 2
        assert p.half_size == 40

    def test_half_size_rounds_down(self):
        assert HammingParams(3, 2).half_size == 4

    @pytest.mark.parametrize("arity,dim", [(1, 2), (0, 3), (2, 0), (2, -1)])
    def test_rejects_degenerate(self, arity, dim):
        with pytest.raises(DomainError):
            HammingParams(arity, dim)

    def test_str(self):
        assert str(HammingParams(4, 3)) == "K_4^3"


class TestCodec:
    @given(
        st.integers(min_value=2, max_value=12),
        st.integers(min_value=1, max_value=6),
        st.data(),
    )
    def test_roundtrip(self, arity, dim, data):
        p = HammingParams(arity, dim)
        v = data.draw(st.integers(min_value=0, max_value=p.vertex_count - 1))
        digits = encode(v, p)
        assert len(digits) == dim
        assert all(0 <= d < arity for d in digits)
        assert decode(digits, p) == v

    def test_encode_is_big_endian(self):
        p = HammingParams(10, 3)
        assert encode(247, p) == (2, 4, 7)

    def test_lex_compare_matches_tuples(self):
        p = HammingParams(3, 3)
        for a, b in itertools.product(range(8), repeat=2):
            da, db = encode(a, p), encode(b, p)
            assert lex_compare(da, db) == (da > db) - (da < db)

    def test_format_digits(self):
        assert format_digits((0, 2, 1), 3) == "021"
        assert format_digits((11, 0, 3), 12) == "11.0.3"


class TestHammingGraph:
    def test_q3_structure(self):
        g = hamming_graph(HammingParams(2, 3))
        assert g.vertex_count == 8
        assert g.edge_count == 12
        assert all(g.degree(v) == 3 for v in range(8))
        assert g.neighbors(0) == (1, 2, 4)
        assert g.label == "hamming(2,3)"

    @pytest.mark.parametrize("arity,dim", [(2, 4), (3, 3), (5, 2)])
    def test_edges_differ_in_one_digit(self, arity, dim):
        p = HammingParams(arity, dim)
        g = hamming_graph(p)
        edges = set(g.edges())
        for u, v in itertools.combinations(range(p.vertex_count), 2):
            du, dv = encode(u, p), encode(v, p)
            differs = sum(a != b for a, b in zip(du, dv))
            assert ((u, v) in edges) == (differs == 1)

    def test_adjacency_sorted(self):
        g = hamming_graph(HammingParams(4, 3))
        for nbrs in g.adjacency:
            assert list(nbrs) == sorted(nbrs)

    def test_vertex_cap(self):
        with pytest.raises(CapError):
            hamming_graph(HammingParams(10, 4), max_vertices=1000)


class TestBCNetwork:
    def test_identity_matching_is_hypercube(self):
        for dim in (1, 2, 3, 4, 5):
            b = bc_network(dim, "identity")
            h = hamming_graph(HammingParams(2, dim))
            assert b.adjacency == h.adjacency

    @pytest.mark.parametrize("policy", ["identity", "reversal", "seeded_random"])
    def test_regular_and_connected(self, policy):
        for dim in (2, 3, 4):
            g = bc_network(dim, policy, seed=5)
            assert g.vertex_count == 2**dim
            assert all(g.degree(v) == dim for v in range(g.vertex_count))
            assert g.is_connected()

    def test_seed_determinism(self):
        a = bc_network(4, "seeded_random", seed=11)
        b = bc_network(4, "seeded_random", seed=11)
        c = bc_network(4, "seeded_random", seed=12)
        assert a.adjacency == b.adjacency
        assert a.adjacency != c.adjacency

    def test_rejects_unknown_policy(self):
        with pytest.raises(DomainError):
            bc_network(3, "butterfly")

    def test_halves_joined_by_perfect_matching(self):
        g = bc_network(4, "seeded_random", seed=3)
        half = g.vertex_count // 2
        cross = [(u, v) for u, v in g.edges() if (u < half) != (v < half)]
        assert len(cross) == half
        assert len({u for u, _ in cross}) == half
        assert len({v for _, v in cross}) == half


class TestComponents:
    def test_whole_graph(self):
        g = hamming_graph(HammingParams(2, 3))
        assert components(g) == [list(range(8))]

    def test_induced_subset(self):
        g = hamming_graph(HammingParams(2, 3))
        # 0=000 and 3=011 are at distance two, so they sit in separate parts
        assert components(g, within=[0, 3]) == [[0], [3]]
        assert components(g, within=[0, 1, 3]) == [[0, 1, 3]]

    def test_empty_graph_not_connected(self):
        g = Graph(vertex_count=0, adjacency=())
        assert not g.is_connected()


class TestEdgeListIO:
    def test_roundtrip_text(self):
        g = bc_network(3, "seeded_random", seed=9)
        back = parse_edge_list(format_edge_list(g))
        assert back.adjacency == g.adjacency
        assert back.vertex_count == g.vertex_count
        assert back.label == g.label

    def test_roundtrip_file(self, tmp_path):
        g = hamming_graph(HammingParams(3, 2))
        path = tmp_path / "k32.txt"
        write_edge_list(g, path)
        back = read_edge_list(path)
        assert back.adjacency == g.adjacency

    def test_parse_rejects_garbage(self):
        with pytest.raises(DomainError):
            parse_edge_list("# vertices=4 edges=1 label=x\n0 0\n")
        with pytest.raises(DomainError):
            parse_edge_list("# vertices=2 edges=1 label=x\n0 5\n")
