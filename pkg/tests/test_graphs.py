from __future__ import annotations

import random

import pytest

from cyclebound.enumeration import all_graphs, canonical_key, connected_graphs
from cyclebound.graphs import (
    Graph6Error,
    GraphError,
    complete,
    complete_bipartite,
    components,
    cycle_graph,
    encode_graph6,
    from_edges,
    girth,
    is_connected,
    is_petersen,
    min_degree,
    parse_graph6,
    petersen,
    random_gnp,
    relabel,
)
from oracles import component_count

# hand-decoded words, checked against the format definition bit by bit
KNOWN_WORDS = [
    ("@", complete(1)),
    ("A?", from_edges(2, [])),
    ("A_", complete(2)),
    ("Bw", complete(3)),
    ("Dhc", cycle_graph(5)),
    ("DhC", from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])),
    ("D]o", complete_bipartite(2, 3)),
    ("IheA@GUAo", petersen()),
]


@pytest.mark.parametrize("word,graph", KNOWN_WORDS, ids=[w for w, _ in KNOWN_WORDS])
def test_known_words_decode(word: str, graph) -> None:
    assert parse_graph6(word).rows == graph.rows
    assert encode_graph6(graph) == word


def test_parse_strips_line_ending() -> None:
    assert parse_graph6("Bw\n").rows == complete(3).rows
    assert parse_graph6("Bw\r\n").rows == complete(3).rows


def test_long_form_header_round_trip() -> None:
    for n in (63, 64):
        g = cycle_graph(n)
        word = encode_graph6(g)
        assert word.startswith("~")
        back = parse_graph6(word)
        assert back.n == n and back.rows == g.rows


@pytest.mark.parametrize(
    "text,offset",
    [
        ("", 0),  # empty
        ("\x1e", 0),  # byte below the graph6 range
        ("Dh", 2),  # truncated edge data
        ("Dhcc", 3),  # trailing garbage
        ("Dhd", 2),  # nonzero padding bits
        ("~??B", 0),  # long header for a size that fits the short form
        ("~~", 1),  # five-byte headers unsupported
    ],
)
def test_malformed_words_rejected(text: str, offset: int) -> None:
    with pytest.raises(Graph6Error) as err:
        parse_graph6(text)
    assert err.value.offset == offset


def test_from_edges_rejects_bad_input() -> None:
    with pytest.raises(GraphError):
        from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        from_edges(-1, [])
    # duplicates collapse silently
    assert from_edges(2, [(0, 1), (1, 0)]).m == 1


def test_structure_queries() -> None:
    p = petersen()
    assert p.n == 10 and p.m == 15
    assert min_degree(p) == 3
    assert girth(p) == 5
    assert is_connected(p)
    assert girth(from_edges(4, [(0, 1), (2, 3)])) is None

    count, labels = components(from_edges(5, [(0, 1), (2, 3)]))
    assert count == 3
    assert labels[0] == labels[1] and labels[2] == labels[3]
    assert labels[4] == 2

    count, labels = components(cycle_graph(5), removed=(0, 2))
    assert count == 2 and 0 not in labels


def test_components_matches_union_find() -> None:
    for seed in range(40):
        g = random_gnp(9, 0.25, seed=seed)
        assert components(g)[0] == component_count(g)


def test_is_petersen_invariant_under_relabeling() -> None:
    rng = random.Random(7)
    p = petersen()
    for _ in range(25):
        perm = list(range(10))
        rng.shuffle(perm)
        assert is_petersen(relabel(p, perm))
    # same degree sequence and size, wrong girth
    assert not is_petersen(complete_bipartite(3, 3))
    k5_doubled = from_edges(10, [(i, j) for i in range(5) for j in range(i + 1, 5)]
                            + [(5 + i, 5 + j) for i in range(5) for j in range(i + 1, 5)])
    assert not is_petersen(k5_doubled)


def test_random_gnp_is_reproducible() -> None:
    a = random_gnp(12, 0.4, seed=99)
    b = random_gnp(12, 0.4, seed=99)
    c = random_gnp(12, 0.4, seed=100)
    assert a.rows == b.rows
    assert a.rows != c.rows
    with pytest.raises(GraphError):
        random_gnp(5, 1.5, seed=0)


# counts from the standard tables of small-graph numbers
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_counts(n: int) -> None:
    assert len(all_graphs(n)) == ALL_COUNTS[n]
    assert len(connected_graphs(n)) == CONNECTED_COUNTS[n]


def test_enumeration_count_n8(corpus) -> None:
    assert len(corpus[8]) == CONNECTED_COUNTS[8]


def test_enumeration_is_isomorphism_free() -> None:
    for n in range(1, 7):
        keys = {canonical_key(g) for g in all_graphs(n)}
        assert len(keys) == ALL_COUNTS[n]


def test_canonical_key_separates_and_identifies() -> None:
    rng = random.Random(3)
    for g in all_graphs(6)[::7]:
        perm = list(range(6))
        rng.shuffle(perm)
        assert canonical_key(relabel(g, perm)) == canonical_key(g)
    assert canonical_key(cycle_graph(6)) != canonical_key(complete_bipartite(3, 3))


def test_enumeration_rejects_out_of_range() -> None:
    with pytest.raises(GraphError):
        all_graphs(0)
    with pytest.raises(GraphError):
        all_graphs(9)
