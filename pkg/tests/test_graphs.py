import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import as_sets, brute_chordless_cycles, brute_independent_sets, facets_of, graphs

from seqsr.complex import labels, link
from seqsr.errors import InputError, ParseError
from seqsr.graphs import (
    Graph,
    add_whiskers,
    bipartite_battery,
    canonical_cycle,
    chordless_cycles,
    closed_neighborhood,
    complete_bipartite,
    complete_graph,
    condition_iv,
    cycle_graph,
    delete_vertices,
    independence_complex,
    is_bipartite,
    parse_graph,
    path_graph,
    petersen_graph,
    random_bipartite,
    random_graph,
    remove_closed_neighborhood,
    simplicial_vertices,
    thm_conditions,
    to_text,
    whiskered_even_cycles,
)
from seqsr.serre import is_seq_Sr_skeleton


def fs(*sets):
    return {frozenset(s) for s in sets}


def seq_s(g, r=2):
    return bool(is_seq_Sr_skeleton(independence_complex(g), r))


def relabel(cx_sets, mapping):
    return {frozenset(mapping[v] for v in f) for f in cx_sets}


class TestGenerators:
    def test_counts(self):
        assert cycle_graph(3) == complete_graph(3)
        assert len(cycle_graph(5).edges) == 5
        assert len(path_graph(4).edges) == 3
        assert len(petersen_graph().edges) == 15
        assert all(petersen_graph().degree(v) == 3 for v in range(1, 11))

    def test_random_is_seeded(self):
        assert random_bipartite(4, 5, 0.5, 7) == random_bipartite(4, 5, 0.5, 7)
        assert is_bipartite(random_bipartite(4, 5, 0.6, 3))
        assert random_graph(8, 0.4, 1) == random_graph(8, 0.4, 1)

    def test_bad_edges(self):
        with pytest.raises(InputError):
            Graph(3, frozenset({(1, 1)}))
        with pytest.raises(InputError):
            Graph(3, frozenset({(1, 4)}))


class TestIndependenceComplex:
    def test_triangle(self):
        assert as_sets(independence_complex(complete_graph(3))) == fs({1}, {2}, {3})

    def test_c5(self):
        assert as_sets(independence_complex(cycle_graph(5))) == fs({1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5})

    def test_edgeless(self):
        assert independence_complex(Graph(4)).is_full_simplex

    @given(graphs(max_n=9))
    def test_matches_brute_force(self, g):
        assert as_sets(independence_complex(g)) == facets_of(brute_independent_sets(g))


class TestNeighbourhoods:
    def test_closed_neighbourhood(self):
        assert labels(closed_neighborhood(cycle_graph(5), [1])) == (1, 2, 5)
        assert closed_neighborhood(cycle_graph(5), []) == 0
        assert labels(closed_neighborhood(cycle_graph(6), [1, 4])) == (1, 2, 3, 4, 5, 6)

    def test_c7_minus_n1_is_p4(self):
        h, mapping = remove_closed_neighborhood(cycle_graph(7), [1])
        assert h == path_graph(4)
        assert mapping == {1: 3, 2: 4, 3: 5, 4: 6}

    def test_c5_minus_n1_is_an_edge(self):
        assert remove_closed_neighborhood(cycle_graph(5), [1])[0] == path_graph(2)

    def test_empty_set(self):
        g = petersen_graph()
        assert remove_closed_neighborhood(g, [])[0] == g

    def test_dependent_set_rejected(self):
        with pytest.raises(InputError):
            remove_closed_neighborhood(cycle_graph(5), [1, 2])

    @given(graphs(max_n=8, min_n=1), st.data())
    def test_vertex_link_is_neighbourhood_deletion(self, g, data):
        x = data.draw(st.integers(1, g.n))
        h, mapping = remove_closed_neighborhood(g, [x])
        lk = link(independence_complex(g), [x])
        assert as_sets(lk) == relabel(as_sets(independence_complex(h)), mapping)


class TestWhiskers:
    def test_single(self):
        g = add_whiskers(cycle_graph(4), [1])
        assert g.n == 5 and len(g.edges) == 5

    def test_empty(self):
        assert add_whiskers(cycle_graph(4), []) == cycle_graph(4)

    def test_all_vertices(self):
        g = add_whiskers(cycle_graph(4), [1, 2, 3, 4])
        assert all(g.degree(v) == 3 for v in range(1, 5))


class TestChordlessCycles:
    def test_c6(self):
        assert chordless_cycles(cycle_graph(6)) == [(1, 2, 3, 4, 5, 6)]

    def test_c4_with_chord(self):
        assert chordless_cycles(Graph(4, frozenset({(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)}))) == []

    def test_petersen(self):
        g = petersen_graph()
        lengths = [len(c) for c in chordless_cycles(g)]
        assert lengths.count(5) == 12
        assert lengths.count(6) == 10
        assert set(lengths) == {5, 6}
        assert len(chordless_cycles(g, "even")) == 10

    def test_canonical_form(self):
        assert canonical_cycle([4, 2, 6, 1]) == (1, 4, 2, 6)
        assert canonical_cycle([3, 1, 2]) == (1, 2, 3)

    @given(graphs(max_n=9))
    def test_matches_brute_force(self, g):
        got = chordless_cycles(g)
        assert {frozenset(c) for c in got} == {s for s in brute_chordless_cycles(g) if len(s) >= 4}
        assert len(got) == len(set(got))
        assert all(c == canonical_cycle(c) for c in got)
        assert got == sorted(got, key=lambda c: (len(c), c))

    def test_brute_force_on_ten_vertices(self):
        rng = random.Random(10)
        for seed in range(6):
            g = random_graph(10, rng.uniform(0.2, 0.5), seed)
            got = {frozenset(c) for c in chordless_cycles(g)}
            assert got == {s for s in brute_chordless_cycles(g) if len(s) >= 4}


class TestSimplicialVertices:
    def test_path(self):
        assert labels(simplicial_vertices(path_graph(3))) == (1, 3)

    def test_c5(self):
        assert simplicial_vertices(cycle_graph(5)) == 0

    def test_triangle_with_pendant(self):
        g = Graph(4, frozenset({(1, 2), (2, 3), (1, 3), (1, 4)}))
        assert labels(simplicial_vertices(g)) == (2, 3, 4)

    def test_low_degree_always_simplicial(self):
        g = Graph(3, frozenset({(1, 2)}))
        assert labels(simplicial_vertices(g)) == (1, 2, 3)


class TestSufficientConditions:
    def test_condition_iv(self):
        assert condition_iv(path_graph(4))
        rep = condition_iv(cycle_graph(4))
        assert not rep and rep.witness == {"F": []}
        assert not condition_iv(cycle_graph(6))

    @pytest.mark.parametrize("n", [3, 5, 7, 9])
    def test_odd_cycles(self, n):
        assert thm_conditions(cycle_graph(n))

    def test_c4(self):
        assert not thm_conditions(cycle_graph(4))

    @pytest.mark.parametrize("seed", range(8))
    def test_forests(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 8)
        edges = {(rng.randint(1, v - 1), v) for v in range(2, n + 1) if rng.random() < 0.8}
        assert thm_conditions(Graph(n, frozenset(edges)))

    def test_whiskered(self):
        assert whiskered_even_cycles(add_whiskers(cycle_graph(4), [1]))
        rep = whiskered_even_cycles(cycle_graph(4))
        assert not rep and rep.witness == {"cycle": [1, 2, 3, 4]}
        assert whiskered_even_cycles(cycle_graph(5))

    @given(graphs(max_n=8))
    def test_soundness(self, g):
        if thm_conditions(g) or whiskered_even_cycles(g):
            assert seq_s(g)


class TestHeredity:
    @given(graphs(max_n=8), st.integers(2, 3), st.data())
    def test_neighbourhood_deletion(self, g, r, data):
        if seq_s(g, r):
            x = data.draw(st.integers(1, g.n))
            assert seq_s(remove_closed_neighborhood(g, [x])[0], r)

    @given(graphs(max_n=7), st.integers(2, 3), st.data())
    def test_whisker_deletion(self, g, r, data):
        s = data.draw(st.sets(st.integers(1, g.n), max_size=g.n))
        if seq_s(add_whiskers(g, sorted(s)), r) and len(s) < g.n:
            assert seq_s(delete_vertices(g, sorted(s))[0], r)

    @given(graphs(max_n=8))
    def test_degree_one_lemma(self, g):
        if is_bipartite(g) and g.edges and min(g.degree(v) for v in range(1, g.n + 1)) >= 2:
            assert not seq_s(g)


class TestBattery:
    def test_p5(self):
        rep = bipartite_battery(path_graph(5))
        assert rep.agree and all(rep.as_dict().values())

    def test_c6(self):
        rep = bipartite_battery(cycle_graph(6))
        assert rep.agree and not any(rep.as_dict().values())

    def test_k23(self):
        assert bipartite_battery(complete_bipartite(2, 3)).agree

    def test_rejects_odd_cycle(self):
        with pytest.raises(InputError):
            bipartite_battery(cycle_graph(5))


class TestTextFormat:
    @given(graphs(max_n=9))
    def test_round_trip(self, g):
        assert parse_graph(to_text(g)) == g

    @pytest.mark.parametrize("text, line", [("n 3\n1 2 3\n", 2), ("n 3\n1 1\n", 2), ("n 3\n\n2 7\n", 3), ("m 3\n", 1)])
    def test_errors(self, text, line):
        with pytest.raises(ParseError) as err:
            parse_graph(text)
        assert err.value.lineno == line



def test_bipartite_enumeration_counts():
    # labeled connected bipartite graphs, OEIS A001832
    from oracles import connected_bipartite_graphs

    assert [sum(1 for _ in connected_bipartite_graphs(n)) for n in range(1, 7)] == [1, 1, 3, 19, 195, 3031]
