import json
import random

import pytest

from imsep.errors import BudgetExceededError, DisconnectedGraphError, InvalidArgumentError
from imsep.gadgets import banner, melon, melon_cross_product, melon_with_pendants
from imsep.graph import Graph, is_inclusion_wise_minimal_separator, is_minimal_ab_separator
from imsep.separators import (
    SeparatorFamily,
    enumerate_iwm_bruteforce,
    enumerate_iwm_filter,
    enumerate_iwm_search,
    enumerate_minimal_separators,
    enumerate_minimal_separators_bruteforce,
    extract_inclusion_minimal,
    is_antichain,
)

from conftest import complete_graph, path_graph, random_connected_graph
from oracles import canon, iwm_by_definition, minimal_by_definition, to_nx

# frozen from tests/oracles.py (networkx, all subsets)
BANNER_MINIMAL = {(3,), (0, 2), (1, 3)}
BANNER_IWM = {(3,), (0, 2)}
MELON_IWM_COUNTS = {1: 3, 2: 20, 3: 43}
MELON_PENDANT_MINIMAL_COUNTS = {1: 5, 2: 28}


def test_banner_minimal():
    g, _ = banner()
    for fam in (enumerate_minimal_separators(g), enumerate_minimal_separators_bruteforce(g)):
        assert fam.as_set() == BANNER_MINIMAL


def test_banner_iwm():
    g, _ = banner()
    for fam in (enumerate_iwm_filter(g), enumerate_iwm_bruteforce(g), enumerate_iwm_search(g)):
        assert fam.as_set() == BANNER_IWM


def test_melon1_is_path():
    g, names = melon(1)
    inner = {(names["u.1"],), (names["v.1"],), (names["w.1"],)}
    assert enumerate_minimal_separators(g).as_set() == inner
    assert enumerate_minimal_separators_bruteforce(g).as_set() == inner


def test_path5_bruteforce():
    assert enumerate_iwm_bruteforce(path_graph(5)).as_set() == {(1,), (2,), (3,)}


def test_complete_graph_empty():
    g = complete_graph(4)
    for fam in (
        enumerate_minimal_separators(g),
        enumerate_minimal_separators_bruteforce(g),
        enumerate_iwm_filter(g),
        enumerate_iwm_bruteforce(g),
        enumerate_iwm_search(g),
    ):
        assert len(fam) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_melon_counts(n):
    g, names = melon(n)
    fam = enumerate_iwm_filter(g)
    assert len(fam) == MELON_IWM_COUNTS[n]
    assert fam == enumerate_iwm_search(g)
    for s in melon_cross_product(n, names):
        assert s in fam


def test_melon2_matches_definition():
    g, _ = melon(2)
    assert enumerate_iwm_filter(g).as_set() == canon(iwm_by_definition(to_nx(g)))


@pytest.mark.parametrize("n", [1, 2])
def test_pendant_melon(n):
    g, _ = melon_with_pendants(n)
    assert enumerate_iwm_filter(g).as_set() == {(v,) for v in range(3 * n + 2)}
    assert len(enumerate_minimal_separators(g)) == MELON_PENDANT_MINIMAL_COUNTS[n]
    assert len(enumerate_minimal_separators(g)) >= 3**n


def test_oracles_agree_with_definition(rng):
    for _ in range(40):
        g = random_connected_graph(rng, 2, 7)
        h = to_nx(g)
        assert enumerate_minimal_separators_bruteforce(g).as_set() == canon(minimal_by_definition(h))
        assert enumerate_iwm_bruteforce(g).as_set() == canon(iwm_by_definition(h))


def test_routes_agree_on_random_graphs(rng):
    for _ in range(120):
        g = random_connected_graph(rng, 2, 10)
        minimal = enumerate_minimal_separators(g)
        assert minimal == enumerate_minimal_separators_bruteforce(g)
        iwm = enumerate_iwm_filter(g)
        assert iwm == enumerate_iwm_bruteforce(g)
        assert iwm == enumerate_iwm_search(g)
        assert iwm == extract_inclusion_minimal(minimal)
        assert is_antichain(iwm)


def test_families_satisfy_their_predicates(rng):
    for _ in range(30):
        g = random_connected_graph(rng, 3, 9)
        for s in enumerate_iwm_filter(g):
            assert is_inclusion_wise_minimal_separator(g, s)
        for s in enumerate_minimal_separators(g):
            rest = [v for v in range(g.n) if v not in s]
            assert any(
                is_minimal_ab_separator(g, s, a, b) for i, a in enumerate(rest) for b in rest[i + 1:]
            )


def test_extract_inclusion_minimal():
    fam = SeparatorFamily.from_sets([(3,), (1, 3), (0, 2)], "berry")
    assert extract_inclusion_minimal(fam).as_set() == {(3,), (0, 2)}
    empty = SeparatorFamily.from_sets([], "berry")
    assert len(extract_inclusion_minimal(empty)) == 0
    single = SeparatorFamily.from_sets([(1, 2)], "berry")
    assert extract_inclusion_minimal(single).as_set() == {(1, 2)}


def test_family_canonical_order_and_dedup():
    fam = SeparatorFamily.from_sets([(2, 0), (3,), (0, 2), (1, 3)], "filter")
    assert fam.sets == ((3,), (0, 2), (1, 3))
    assert fam.to_text() == "3\n0 2\n1 3\n"


def test_family_serialisation_round_trip():
    fam = SeparatorFamily.from_sets([(3,), (0, 2)], "bruteforce")
    doc = json.loads(fam.to_json())
    assert doc == {"count": 2, "method": "bruteforce", "sets": [[3], [0, 2]]}
    assert SeparatorFamily.from_dict(doc) == fam
    assert SeparatorFamily.from_text(fam.to_text()) == fam


def test_family_rejects_unknown_method():
    with pytest.raises(InvalidArgumentError):
        SeparatorFamily.from_sets([], "magic")


def test_overflow_guard():
    g, _ = melon(4)
    with pytest.raises(BudgetExceededError):
        enumerate_minimal_separators(g, max_separators=10)


def test_bruteforce_cap():
    g = path_graph(21)
    with pytest.raises(BudgetExceededError):
        enumerate_iwm_bruteforce(g)
    with pytest.raises(BudgetExceededError):
        enumerate_minimal_separators_bruteforce(path_graph(6), cap=5)


def test_input_validation():
    with pytest.raises(DisconnectedGraphError):
        enumerate_minimal_separators(Graph(3, [(0, 1)]))
    with pytest.raises(InvalidArgumentError):
        enumerate_iwm_search(Graph(1))


def test_enumeration_order_insensitive():
    # relabelling the graph permutes but does not change the family
    g, _ = melon(2)
    perm = list(range(g.n))
    random.Random(5).shuffle(perm)
    h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    back = {tuple(sorted(perm.index(v) for v in s)) for s in enumerate_minimal_separators(h)}
    assert back == enumerate_minimal_separators(g).as_set()
