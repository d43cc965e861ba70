import random

import networkx as nx
import pytest

from csc.configs import graph_config_rho
from csc.errors import (
    ApexNotUniversalForOddCycles,
    InvalidInput,
    NotBipartite,
    PreconditionViolated,
    SizeLimit,
)
from csc.graphs import (
    Graph,
    OddCyclePair,
    canonical_cycle,
    connected_graphs,
    disjoint_odd_cycles_bridged,
    find_disjoint_odd_cycles,
    find_odd_cycle_apex,
    graph_from_family,
    is_bipartite,
    is_chordal_bipartite,
    is_connected,
    odd_chordless_cycles,
    satisfies_star_condition,
    split_apex,
    star_condition_violation,
)
from csc.toric import kernel_lattice


TRIANGLE = Graph.from_edges([(1, 2), (1, 3), (2, 3)])


def test_graph_validation():
    with pytest.raises(InvalidInput):
        Graph(3, ((1, 1),))
    with pytest.raises(InvalidInput):
        Graph(3, ((1, 4),))
    with pytest.raises(InvalidInput):
        Graph(3, ((1, 2), (1, 2)))
    g = Graph.from_edges([(3, 1), (2, 1)])
    assert g.edges == ((1, 3), (1, 2))
    assert g.vertex_count == 3


def test_bipartition(graph):
    assert is_bipartite(graph("cycle6")) == ((1, 3, 5), (2, 4, 6))
    assert is_bipartite(TRIANGLE) is None
    assert is_bipartite(graph("k22")) == ((1, 2), (3, 4))


def test_canonical_cycle():
    assert canonical_cycle([3, 1, 2]) == (1, 2, 3)
    assert canonical_cycle([2, 5, 1, 4, 3]) == (1, 4, 3, 2, 5)


def test_odd_cycles_two_triangles(graph):
    g = graph("two_triangles")
    assert odd_chordless_cycles(g) == [(1, 2, 3), (4, 5, 6)]
    assert find_disjoint_odd_cycles(g) == OddCyclePair((1, 2, 3), (4, 5, 6), True)
    assert disjoint_odd_cycles_bridged(g)
    assert not disjoint_odd_cycles_bridged(graph("two_triangles_unbridged"))


def test_wheels_have_no_disjoint_odd_cycles():
    for d in (4, 5, 6, 7):
        assert find_disjoint_odd_cycles(graph_from_family(f"wheel:{d}")) is None


def test_bridged_requires_connected():
    g = Graph.from_edges([(1, 2), (3, 4)])
    assert not is_connected(g)
    with pytest.raises(PreconditionViolated):
        disjoint_odd_cycles_bridged(g)


def test_exhaustive_limit():
    with pytest.raises(SizeLimit):
        odd_chordless_cycles(graph_from_family("cycle:9"), vertex_limit=8)


def test_chordal_bipartite(graph, chordal_star_fixtures):
    assert not is_chordal_bipartite(graph("cycle6"))
    for name in chordal_star_fixtures:
        assert is_chordal_bipartite(graph(name)), name
    with pytest.raises(NotBipartite):
        is_chordal_bipartite(TRIANGLE)


def _has_long_chordless_cycle(g):
    G = g.to_networkx()
    for c in nx.simple_cycles(G):
        if len(c) < 6:
            continue
        n = len(c)
        chords = [
            (c[a], c[b]) for a in range(n) for b in range(a + 2, n)
            if not (a == 0 and b == n - 1) and G.has_edge(c[a], c[b])
        ]
        if not chords:
            return True
    return False


def test_chordal_bipartite_matches_cycle_enumeration():
    rng = random.Random(23)
    seen = set()
    for _ in range(80):
        p, q = rng.randint(2, 5), rng.randint(2, 5)
        density = rng.uniform(0.4, 0.8)
        edges = [(i, p + k) for i in range(1, p + 1) for k in range(1, q + 1) if rng.random() < density]
        if not edges:
            continue
        g = Graph.from_edges(edges, vertex_count=p + q)
        expected = not _has_long_chordless_cycle(g)
        assert is_chordal_bipartite(g) == expected, g.edges
        seen.add(expected)
    assert seen == {True, False}


def test_star_condition(graph, parts, chordal_star_fixtures):
    for name in chordal_star_fixtures:
        assert satisfies_star_condition(graph(name), parts(name)), name
    bad = graph("path4_bad_labels")
    assert star_condition_violation(bad, parts("path4_bad_labels")) == (1, 2, 1, 2)


def test_star_condition_rejects_bad_parts(graph):
    with pytest.raises(NotBipartite):
        star_condition_violation(graph("k22"), ((1, 3), (2, 4)))
    with pytest.raises(NotBipartite):
        star_condition_violation(graph("k22"), ((1,), (3, 4)))


def test_odd_cycle_apex(graph):
    assert find_odd_cycle_apex(graph("tie")) == 5
    assert find_odd_cycle_apex(graph("cycle6")) is None
    assert find_odd_cycle_apex(graph("two_triangles")) is None
    for d in (4, 5, 6, 7, 8, 9):
        apex = find_odd_cycle_apex(graph_from_family(f"wheel:{d}"))
        assert (apex is not None) == (d % 2 == 1), d
        if apex is not None:
            assert apex == 1


def test_split_apex_triangle():
    split = split_apex(TRIANGLE, 3)
    assert split.vertex_count == 4
    assert set(split.edges) == {(1, 2), (1, 3), (2, 4)}


def test_split_apex_tie_keeps_toric_ideal(graph):
    g = graph("tie")
    split = split_apex(g, 5)
    assert split.edges == ((1, 5), (3, 6), (1, 3), (2, 5), (4, 6), (2, 4))
    assert is_bipartite(split) is not None
    assert kernel_lattice(graph_config_rho(g)) == kernel_lattice(graph_config_rho(split))


def test_split_apex_keeps_toric_ideal_on_small_graphs():
    for k in (4, 5):
        for g in connected_graphs(k):
            apex = find_odd_cycle_apex(g)
            if apex is None:
                continue
            split = split_apex(g, apex)
            assert is_bipartite(split) is not None
            assert kernel_lattice(graph_config_rho(g)) == kernel_lattice(graph_config_rho(split))


def test_split_apex_row_operation_recovers_incidence_matrix(graph):
    cases = [(TRIANGLE, 3), (graph("tie"), 5)]
    for k in (4, 5):
        for g in connected_graphs(k):
            apex = find_odd_cycle_apex(g)
            if apex is not None:
                cases.append((g, apex))
    for g, apex in cases:
        rows = graph_config_rho(split_apex(g, apex)).to_lists()
        extra = rows.pop()
        rows[apex - 1] = [x + y for x, y in zip(rows[apex - 1], extra)]
        assert rows == graph_config_rho(g).to_lists(), g.edges


def test_split_apex_preconditions(graph):
    with pytest.raises(PreconditionViolated):
        split_apex(graph("k22"), 1)
    with pytest.raises(ApexNotUniversalForOddCycles):
        split_apex(graph("two_triangles"), 3)
    with pytest.raises(InvalidInput):
        split_apex(TRIANGLE, 7)


def test_families():
    w5 = graph_from_family("wheel:5")
    assert (w5.vertex_count, w5.edge_count) == (5, 8)
    assert graph_from_family("wheel:4").edge_count == 6
    assert graph_from_family("bipartite:2,3").edge_count == 6
    assert graph_from_family("multipartite:2,2,2").edge_count == 12
    assert graph_from_family("cycle:5").edge_count == 5
    for bad in ("foo:1", "wheel:", "bipartite:2", "wheel:x", "wheel:3"):
        with pytest.raises(InvalidInput):
            graph_from_family(bad)


def test_connected_graphs_counts():
    assert [len(connected_graphs(k)) for k in (1, 2, 3, 4, 5)] == [1, 1, 2, 6, 21]
    with pytest.raises(InvalidInput):
        connected_graphs(8)
