"""Tests for the exact dimension, colouring and tiny boolean-dimension solvers."""
from __future__ import annotations

from itertools import combinations_with_replacement, permutations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings

from src.config import Settings
from src.generators import (
    BadParameter,
    antichain,
    chain,
    incidence_poset,
    naturally_labeled_posets,
    poset_from_orders,
    random_acyclic_digraph,
    standard_example,
)
from src.poset import Digraph, MalformedOrder, Poset, arc_digraph
from src.realizers import verify_boolean_realizer, verify_local_realizer, verify_realizer
from src.solvers import (
    Deadline,
    ScaleExceeded,
    SolverTimeout,
    color_count,
    decide_boolean_dimension_small,
    decide_dimension,
    decide_local_dimension_low,
    dimension,
    exact_chromatic_number,
    find_k_coloring,
    greedy_coloring,
    is_proper,
    is_reversible,
)
from src.transforms import boolean_to_realizer
from tests.strategies import posets

TRIANGLE = Digraph(3, frozenset({(0, 1), (1, 2), (0, 2)}))


def brute_force_dim_at_most_two(p: Poset) -> bool:
    extensions = [seq for seq in permutations(range(p.n)) if p.is_linear_extension(seq)]
    return any(poset_from_orders([a, b], p.n) == p for a, b in combinations_with_replacement(extensions, 2))


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_standard_example_dimension(k: int, settings: Settings) -> None:
    p = standard_example(k).poset
    assert not decide_dimension(p, k - 1, settings=settings)
    result = decide_dimension(p, k, settings=settings)
    assert result
    assert result.witness.size <= k
    assert verify_realizer(p, result.witness)


def test_chain_has_dimension_one(settings: Settings) -> None:
    assert decide_dimension(chain(6), 1, settings=settings)
    assert dimension(chain(5), settings=settings).witness.size == 1


def test_antichain_has_dimension_two(settings: Settings) -> None:
    assert not decide_dimension(antichain(2), 1, settings=settings)
    assert dimension(antichain(2), settings=settings).witness.size == 2


def test_trivial_posets(settings: Settings) -> None:
    # the empty family already realizes a one-element poset
    result = decide_dimension(chain(1), 0, settings=settings)
    assert result and result.witness.size == 0
    assert verify_realizer(chain(1), result.witness)
    assert not decide_dimension(chain(2), 0, settings=settings)
    assert decide_dimension(antichain(0), 3, settings=settings)


def test_negative_bound_is_rejected(settings: Settings) -> None:
    with pytest.raises(BadParameter):
        decide_dimension(chain(2), -1, settings=settings)


def test_incidence_posets_of_k4_and_k5(settings: Settings) -> None:
    p4 = incidence_poset(4).poset
    result = decide_dimension(p4, 3, settings=settings)
    assert result and verify_realizer(p4, result.witness)
    assert not decide_dimension(incidence_poset(5).poset, 3, settings=settings)


def test_deadline_raises_when_spent() -> None:
    with pytest.raises(SolverTimeout):
        Deadline(-1.0).check("spent budget")


def test_reversibility_of_critical_pairs() -> None:
    s3 = standard_example(3).poset
    assert is_reversible(s3, [(0, 3)])
    assert not is_reversible(s3, [(0, 3), (1, 4)])


def test_greedy_coloring_examples() -> None:
    assert color_count(greedy_coloring(TRIANGLE, [2, 0, 1])) == 3
    assert color_count(greedy_coloring(Digraph(5), range(5))) == 1
    path = Digraph(4, frozenset({(0, 1), (1, 2), (2, 3)}))
    coloring = greedy_coloring(path, [0, 1, 2, 3])
    assert color_count(coloring) == 2
    assert is_proper(path, coloring)


def test_greedy_coloring_needs_a_permutation() -> None:
    with pytest.raises(MalformedOrder):
        greedy_coloring(TRIANGLE, [0, 1])


def test_exact_chromatic_numbers(settings: Settings) -> None:
    assert exact_chromatic_number(TRIANGLE, settings=settings) == 3
    assert exact_chromatic_number(Digraph(7), settings=settings) == 1
    assert exact_chromatic_number(Digraph(0), settings=settings) == 0
    c5 = Digraph(5, frozenset((i, (i + 1) % 5) for i in range(5)))
    assert exact_chromatic_number(c5, settings=settings) == 3


def test_find_k_coloring() -> None:
    assert find_k_coloring(TRIANGLE, 2) is None
    coloring = find_k_coloring(TRIANGLE, 3)
    assert coloring is not None and is_proper(TRIANGLE, coloring)


def from_graph(graph: nx.Graph) -> Digraph:
    return Digraph(graph.number_of_nodes(), frozenset((int(u), int(v)) for u, v in graph.edges()))


def test_triangle_free_graph_needing_four_colours(settings: Settings) -> None:
    groetzsch = from_graph(nx.mycielski_graph(4))
    assert find_k_coloring(groetzsch, 3) is None
    coloring = find_k_coloring(groetzsch, 4)
    assert coloring is not None and is_proper(groetzsch, coloring)
    assert exact_chromatic_number(groetzsch, settings=settings) == 4


def test_colours_are_opened_in_order(settings: Settings) -> None:
    petersen = from_graph(nx.petersen_graph())
    assert find_k_coloring(petersen, 2) is None
    coloring = find_k_coloring(petersen, 3)
    assert coloring is not None and is_proper(petersen, coloring)
    assert coloring[0] == 0
    assert set(coloring.values()) == {0, 1, 2}
    assert exact_chromatic_number(petersen, settings=settings) == 3


def test_even_cycles_and_bipartite_graphs_take_two_colours() -> None:
    for graph in (nx.cycle_graph(8), nx.complete_bipartite_graph(3, 4), nx.hypercube_graph(3)):
        g = from_graph(nx.convert_node_labels_to_integers(graph))
        assert find_k_coloring(g, 1) is None
        coloring = find_k_coloring(g, 2)
        assert coloring is not None and is_proper(g, coloring)


def test_arc_digraph_chromatic_inequality(settings: Settings) -> None:
    rng = np.random.default_rng(2024)
    for _ in range(50):
        g = random_acyclic_digraph(int(rng.integers(1, 9)), rng, density=float(rng.uniform(0.2, 0.9)))
        chi = exact_chromatic_number(g, settings=settings)
        chi_line = exact_chromatic_number(arc_digraph(g), settings=settings)
        assert 2 ** chi_line >= chi


def test_boolean_dimension_examples(settings: Settings) -> None:
    assert not decide_boolean_dimension_small(antichain(2), 1, settings=settings)
    assert decide_boolean_dimension_small(chain(4), 1, settings=settings)
    result = decide_boolean_dimension_small(standard_example(2).poset, 2, settings=settings)
    assert result
    assert verify_boolean_realizer(standard_example(2).poset, result.witness)
    assert decide_boolean_dimension_small(chain(1), 0, settings=settings)
    assert not decide_boolean_dimension_small(chain(2), 0, settings=settings)


def test_boolean_search_scale_limits(settings: Settings) -> None:
    with pytest.raises(ScaleExceeded):
        decide_boolean_dimension_small(chain(7), 1, settings=settings)
    with pytest.raises(ScaleExceeded):
        decide_boolean_dimension_small(chain(3), 3, settings=settings)


def test_low_local_dimension_examples(settings: Settings) -> None:
    assert not decide_local_dimension_low(standard_example(3).poset, 2, settings=settings)
    assert decide_local_dimension_low(chain(3), 1, settings=settings)
    result = decide_local_dimension_low(antichain(2), 2, settings=settings)
    assert result and verify_local_realizer(antichain(2), result.witness)
    with pytest.raises(BadParameter):
        decide_local_dimension_low(chain(3), 3, settings=settings)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_parameter_inequalities_on_all_small_posets(n: int, settings: Settings) -> None:
    for p in naturally_labeled_posets(n):
        dim = dimension(p, settings=settings).witness.size
        assert 1 <= dim <= 2
        for d in (1, 2):
            found = decide_boolean_dimension_small(p, d, settings=settings)
            assert bool(found) == (d >= dim)
            if found:
                converted = boolean_to_realizer(p, found.witness)
                assert converted.size <= d
                assert verify_realizer(p, converted)
            assert bool(decide_local_dimension_low(p, d, settings=settings)) == bool(
                decide_dimension(p, d, settings=settings)
            )


@hypothesis_settings(max_examples=40, deadline=None)
@given(posets(max_n=5))
def test_dimension_two_matches_brute_force(p: Poset) -> None:
    fast = decide_dimension(p, 2, settings=Settings(timeout_s=60.0))
    assert bool(fast) == brute_force_dim_at_most_two(p)


@hypothesis_settings(max_examples=40, deadline=None)
@given(posets(max_n=7))
def test_dimension_is_bounded_by_width(p: Poset) -> None:
    result = dimension(p, settings=Settings(timeout_s=60.0))
    assert result
    assert verify_realizer(p, result.witness)
    assert result.witness.size <= max(1, p.width())
    if p.n >= 4:
        assert result.witness.size <= p.n // 2
