import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import AND_OR, CHAIN, NEG_SWAP, NOT1, SWAP, all_networks, configurations, lit, networks
from oracles import interaction_arcs, monotone_all_pairs
from monobn.constructions import gray_code_network
from monobn.embedmono import embed
from monobn.netcore import (
    BooleanNetwork,
    Configuration,
    DimensionError,
    SignedDigraph,
    SizeError,
    cycle_sign_summary,
    evaluate,
    has_negative_loop,
    interaction_graph,
    is_acyclic,
    is_monotone,
    monotonicity_violation,
    signed_cycles,
)


class TestConfiguration:
    def test_literal_encoding(self):
        x = lit("01")
        assert x.bits == 2
        assert x[1] == 0 and x[2] == 1
        assert x.literal == "01"

    @given(configurations())
    def test_involutions(self, x):
        assert x.complement().complement() == x
        for i in range(1, x.n + 1):
            assert x.flip(i).flip(i) == x
            assert x.hamming(x.flip(i)) == 1

    @given(st.data())
    def test_hamming_is_weight_of_xor(self, data):
        x = data.draw(configurations())
        y = data.draw(configurations(n=x.n))
        assert x.hamming(y) == sum(a != b for a, b in zip(x.as_tuple(), y.as_tuple()))
        assert 0 <= x.weight <= x.n

    @given(st.data())
    def test_concat_split_roundtrip(self, data):
        x = data.draw(configurations(max_n=6))
        y = data.draw(configurations(n=x.n))
        assert x.concat(y).split() == (x, y)

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            Configuration(2, 4)
        with pytest.raises(ValueError):
            Configuration.from_literal("012")
        with pytest.raises(SizeError):
            Configuration(25, 0)
        with pytest.raises(DimensionError):
            lit("01").hamming(lit("011"))


class TestEvaluate:
    def test_identity(self):
        assert evaluate(BooleanNetwork.identity(2), lit("01")) == lit("01")

    def test_gray_first_step(self):
        assert evaluate(gray_code_network(2).network, lit("00")) == lit("01")

    def test_constant_zero(self):
        f = BooleanNetwork.constant(3)
        assert all(evaluate(f, Configuration(3, b)) == lit("000") for b in range(8))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            evaluate(BooleanNetwork.identity(2), lit("010"))

    def test_table_shape_checked(self):
        with pytest.raises(DimensionError):
            BooleanNetwork(2, [[0, 1, 0, 1]])

    def test_immutable(self):
        f = BooleanNetwork.identity(2)
        with pytest.raises(AttributeError):
            f.n = 3
        with pytest.raises(ValueError):
            f.tables[0, 0] = 1


class TestInteractionGraph:
    def test_swap(self):
        assert interaction_graph(SWAP).arcs == {(2, 1, 1), (1, 2, 1)}

    def test_negation_loop(self):
        assert interaction_graph(NOT1).arcs == {(1, 1, -1)}

    def test_constant(self):
        assert interaction_graph(BooleanNetwork.constant(3, 5)).arcs == frozenset()

    def test_xor_has_both_signs(self):
        f = BooleanNetwork.from_function(2, lambda x: (x[0] ^ x[1], 0))
        assert interaction_graph(f).signs(2, 1) == {1, -1}

    @given(networks())
    def test_matches_definition(self, f):
        assert interaction_graph(f).arcs == interaction_arcs(f)
        assert interaction_graph(f) == interaction_graph(f)

    @given(networks())
    def test_negative_loop_matches_graph(self, f):
        loops = interaction_graph(f).loops()
        assert has_negative_loop(f) == any(s < 0 for _, _, s in loops)


class TestMonotone:
    def test_and_or(self):
        assert is_monotone(AND_OR)

    def test_negation(self):
        assert not is_monotone(NOT1)
        assert monotonicity_violation(NOT1) == (lit("0"), 1)

    def test_embedded_gray(self):
        assert is_monotone(embed(gray_code_network(3).network))

    def test_negative_loop_examples(self):
        assert not has_negative_loop(gray_code_network(4).network)
        assert has_negative_loop(NOT1)
        assert not has_negative_loop(BooleanNetwork.identity(3))

    @given(networks(max_n=3))
    def test_single_flip_agrees_with_all_pairs(self, f):
        assert is_monotone(f) == monotone_all_pairs(f)

    def test_single_flip_agrees_exhaustively_n2(self):
        for f in all_networks(2):
            assert is_monotone(f) == monotone_all_pairs(f)

    @given(networks())
    def test_monotone_means_no_negative_arcs(self, f):
        if is_monotone(f):
            assert all(s > 0 for _, _, s in interaction_graph(f).arcs)


def _nx_cycles(G, max_len):
    D = nx.DiGraph()
    D.add_nodes_from(range(1, G.n + 1))
    D.add_edges_from((j, i) for j, i, _ in G.arcs)
    out = []
    for c in nx.simple_cycles(D, length_bound=max_len):
        k = c.index(min(c))
        out.append(tuple(c[k:] + c[:k]))
    return sorted(out)


class TestCycles:
    def test_positive_two_cycle(self):
        assert signed_cycles(interaction_graph(SWAP)) == [((1, 2), 1)]

    def test_negative_two_cycle(self):
        assert signed_cycles(interaction_graph(NEG_SWAP)) == [((1, 2), -1)]

    def test_acyclic_graph(self):
        assert signed_cycles(interaction_graph(CHAIN)) == []

    def test_sign_choices_expanded(self):
        G = SignedDigraph(2, frozenset({(1, 2, 1), (1, 2, -1), (2, 1, 1)}))
        assert signed_cycles(G) == [((1, 2), -1), ((1, 2), 1)]

    def test_max_len(self):
        G = SignedDigraph(3, frozenset({(1, 1, 1), (1, 2, 1), (2, 3, 1), (3, 1, -1)}))
        assert signed_cycles(G, 1) == [((1,), 1)]
        assert signed_cycles(G, 3) == [((1,), 1), ((1, 2, 3), -1)]
        with pytest.raises(ValueError):
            signed_cycles(G, 4)

    @given(networks(max_n=4), st.integers(1, 4))
    def test_cycles_match_networkx(self, f, max_len):
        max_len = min(max_len, f.n)
        G = interaction_graph(f)
        ours = sorted({c for c, _ in signed_cycles(G, max_len)})
        assert ours == _nx_cycles(G, max_len)

    @given(networks(max_n=4))
    def test_sign_summary_matches_expansion(self, f):
        G = interaction_graph(f)
        signs = {s for _, s in signed_cycles(G)}
        assert cycle_sign_summary(G) == (1 in signs, -1 in signs)

    def test_is_acyclic_examples(self):
        assert is_acyclic(interaction_graph(CHAIN))
        assert not is_acyclic(interaction_graph(BooleanNetwork.identity(2)))
        assert not is_acyclic(interaction_graph(gray_code_network(2).network))

    @given(networks())
    def test_is_acyclic_matches_networkx(self, f):
        G = interaction_graph(f)
        D = nx.DiGraph()
        D.add_nodes_from(range(1, f.n + 1))
        D.add_edges_from((j, i) for j, i, _ in G.arcs)
        assert is_acyclic(G) == nx.is_directed_acyclic_graph(D)


def test_from_image_and_tables_agree():
    rng = np.random.default_rng(3)
    img = rng.integers(0, 8, size=8)
    f = BooleanNetwork.from_image(3, img)
    for b in range(8):
        assert evaluate(f, Configuration(3, b)).bits == img[b]
