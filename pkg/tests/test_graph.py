import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from imsep.errors import (
    DisconnectedGraphError,
    GraphFormatError,
    InvalidArgumentError,
    InvalidVertexError,
)
from imsep.graph import (
    Graph,
    canonical,
    components,
    format_edge_list,
    induced_subgraph,
    is_ab_separator,
    is_inclusion_wise_minimal_separator,
    is_iwm_mask,
    is_minimal_ab_separator,
    is_separator,
    is_separator_bruteforce_minimal,
    parse_edge_list,
)

from conftest import complete_graph, path_graph, random_connected_graph
from oracles import nx_separates, nx_separates_pair, to_nx


@st.composite
def connected_graphs(draw, max_n=8):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_connected_graph(random.Random(seed), 2, max_n)


def test_construction_is_symmetric_and_simple():
    g = Graph(4, [(0, 1), (1, 0), (2, 3), (1, 2)])
    assert g.m == 3
    for v in range(g.n):
        for u in g.adjacency[v]:
            assert v in g.adjacency[u]
        assert v not in g.adjacency[v]


def test_bad_edges_rejected():
    with pytest.raises(InvalidArgumentError):
        Graph(3, [(1, 1)])
    with pytest.raises(InvalidVertexError):
        Graph(3, [(0, 3)])


def test_components_on_paper_path(path5):
    assert components(path5, {1}) == [frozenset({0}), frozenset({2, 3, 4})]


def test_components_identity_and_empty(path5):
    assert components(path5, set()) == [frozenset(range(5))]
    assert components(path5, range(5)) == []


def test_components_banner(banner_graph):
    g, L = banner_graph
    got = {frozenset(c) for c in components(g, {L["d"]})}
    assert got == {frozenset({L["a"], L["b"], L["c"]}), frozenset({L["e"]})}


def test_components_invalid_vertex(path5):
    with pytest.raises(InvalidVertexError):
        components(path5, {5})


def test_footnote_triple(path5):
    # paper labels 1..5 map to ids 0..4
    s, s1, s2 = {1}, {0, 1}, {0, 1, 3}
    assert is_separator(path5, s)
    assert not is_separator(path5, s1)
    assert is_separator(path5, s2)


def test_separator_needs_two_survivors():
    g = path_graph(3)
    assert not is_separator(g, {0, 1})
    assert not is_separator(g, {0, 1, 2})


def test_disconnected_graph_rejected():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        is_separator(g, set())
    with pytest.raises(DisconnectedGraphError):
        is_inclusion_wise_minimal_separator(g, {0})


def test_ab_separator_banner(banner_graph):
    g, L = banner_graph
    a, b, c, d = L["a"], L["b"], L["c"], L["d"]
    assert is_ab_separator(g, {b, d}, a, c)
    assert not is_ab_separator(g, {d}, a, c)
    assert not is_ab_separator(g, set(), a, c)


def test_ab_endpoints_validated(banner_graph):
    g, L = banner_graph
    with pytest.raises(InvalidArgumentError):
        is_ab_separator(g, {L["a"]}, L["a"], L["c"])
    with pytest.raises(InvalidArgumentError):
        is_ab_separator(g, set(), L["a"], L["a"])


def test_minimal_ab_banner(banner_graph):
    g, L = banner_graph
    assert is_minimal_ab_separator(g, {L["b"], L["d"]}, L["a"], L["c"])
    assert is_minimal_ab_separator(g, {L["d"]}, L["e"], L["a"])
    assert not is_minimal_ab_separator(g, {L["a"], L["b"], L["d"]}, L["e"], L["c"])


def test_iwm_banner(banner_graph):
    g, L = banner_graph
    assert not is_inclusion_wise_minimal_separator(g, {L["b"], L["d"]})
    assert is_inclusion_wise_minimal_separator(g, {L["d"]})


def test_iwm_path_superset(path5):
    assert not is_inclusion_wise_minimal_separator(path5, {0, 1, 3})
    assert is_inclusion_wise_minimal_separator(path5, {1})


def test_complete_graph_has_no_separator():
    g = complete_graph(4)
    assert not any(is_separator(g, s) for r in range(5) for s in combinations(range(4), r))


@settings(max_examples=150, deadline=None)
@given(connected_graphs())
def test_is_separator_matches_networkx(g):
    h = to_nx(g)
    rng = random.Random(g.n * 7919 + g.m)
    for _ in range(10):
        s = {v for v in range(g.n) if rng.random() < 0.4}
        assert is_separator(g, s) == nx_separates(h, s)


@settings(max_examples=100, deadline=None)
@given(connected_graphs(), st.data())
def test_ab_upward_monotone(g, data):
    a, b = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    rest = [v for v in range(g.n) if v not in (a, b)]
    s = set(data.draw(st.lists(st.sampled_from(rest), unique=True))) if rest else set()
    extra = set(data.draw(st.lists(st.sampled_from(rest), unique=True))) if rest else set()
    assert is_ab_separator(g, s, a, b) == nx_separates_pair(to_nx(g), s, a, b)
    if is_ab_separator(g, s, a, b):
        assert is_ab_separator(g, s | extra, a, b)


def test_plain_separators_not_monotone(path5):
    chain = [{1}, {0, 1}, {0, 1, 3}]
    assert chain[0] < chain[1] < chain[2]
    assert [is_separator(path5, s) for s in chain] == [True, False, True]


def test_cosingleton_equals_subset_definition(rng):
    # exhaustive over all subsets for graphs up to 10 vertices
    for _ in range(25):
        g = random_connected_graph(rng, 2, 10)
        for r in range(g.n + 1):
            for s in combinations(range(g.n), r):
                fast = is_inclusion_wise_minimal_separator(g, s)
                assert fast == is_separator_bruteforce_minimal(g, s)
                mask = sum(1 << v for v in s)
                assert fast == is_iwm_mask(g, mask)


def test_iwm_is_minimal_for_some_pair(rng):
    for _ in range(30):
        g = random_connected_graph(rng, 2, 8)
        for r in range(g.n + 1):
            for s in combinations(range(g.n), r):
                if not is_inclusion_wise_minimal_separator(g, s):
                    continue
                rest = [v for v in range(g.n) if v not in s]
                assert any(is_minimal_ab_separator(g, s, a, b) for a, b in combinations(rest, 2))


def test_edge_list_round_trip(rng):
    for _ in range(20):
        g = random_connected_graph(rng, 1, 12)
        text = format_edge_list(g)
        assert parse_edge_list(text) == g
        assert format_edge_list(parse_edge_list(text)) == text


def test_edge_list_comments_and_blanks():
    text = "# banner\n5 5\n\n0 1\n1 2 # inner\n2 3\n0 3\n3 4\n"
    g = parse_edge_list(text)
    assert g.n == 5 and g.m == 5


@pytest.mark.parametrize(
    "text",
    ["", "3 1\n0 0\n", "3 1\n1 0\n", "3 2\n0 1\n", "3 1\n0 5\n", "3 2\n0 1\n0 1\n", "3 1\n0 x\n", "3\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_canonical_and_induced():
    assert canonical([3, 1, 3, 2]) == (1, 2, 3)
    g = path_graph(5)
    h, old = induced_subgraph(g, [4, 2, 3])
    assert old == [2, 3, 4] and h.edges() == [(0, 1), (1, 2)]
