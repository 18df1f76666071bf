"""Tests for posets, digraphs and the derived graphs built from them."""
from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings

from src.generators import antichain, chain, standard_example
from src.poset import (
    CycleDetected,
    Digraph,
    MalformedGraph,
    MalformedOrder,
    NotAPartialOrder,
    PartialLinearExtension,
    Poset,
    arc_digraph,
    critical_pairs,
    incomparability_graph,
    order_positions,
    transitive_closure,
)
from tests.strategies import posets


def test_closure_infers_transitive_pair() -> None:
    p = transitive_closure(Digraph(3, frozenset({(0, 1), (1, 2)})))
    assert p.lt(0, 2)
    assert p.strict_pair_count() == 3
    assert p.leq(1, 1)
    assert not p.leq(2, 0)


def test_closure_of_s2_covers() -> None:
    p = transitive_closure(Digraph(4, frozenset({(0, 3), (1, 2)})))
    assert p.strict_pair_count() == 2


def test_closure_rejects_cycle() -> None:
    with pytest.raises(CycleDetected):
        transitive_closure(Digraph(2, frozenset({(0, 1), (1, 0)})))


def test_poset_rejects_non_transitive_matrix() -> None:
    rel = np.eye(3, dtype=bool)
    rel[0, 1] = rel[1, 2] = True
    with pytest.raises(NotAPartialOrder):
        Poset(rel)


def test_poset_rejects_non_square_matrix() -> None:
    with pytest.raises(NotAPartialOrder):
        Poset(np.ones((2, 3), dtype=bool))


def test_relation_is_read_only() -> None:
    p = chain(3)
    with pytest.raises(ValueError):
        p.rel[2, 0] = True


def test_digraph_rejects_self_loop_and_range() -> None:
    with pytest.raises(MalformedGraph):
        Digraph(2, frozenset({(1, 1)}))
    with pytest.raises(MalformedGraph):
        Digraph(2, frozenset({(0, 2)}))


def test_digraph_edge_selectors() -> None:
    g = Digraph(4, frozenset({(0, 1), (1, 2), (3, 1), (1, 3)}))
    assert g.arcs_into(1) == [(0, 1), (3, 1)]
    assert g.arcs_into(1, sources=[3]) == [(3, 1)]
    assert g.arcs_out_of(1) == [(1, 2), (1, 3)]
    assert g.arcs_between([0, 3], [1]) == [(0, 1), (3, 1)]
    assert not g.is_acyclic()


def test_repeated_element_is_malformed_order() -> None:
    with pytest.raises(MalformedOrder):
        PartialLinearExtension((0, 1, 0))


def test_order_positions() -> None:
    assert order_positions((2, 0, 1), 3).tolist() == [1, 2, 0]
    with pytest.raises(MalformedOrder):
        order_positions((0, 1), 3)
    with pytest.raises(MalformedOrder):
        order_positions((0, 0, 1), 3)


def test_partial_extension_checks_support_only() -> None:
    p = chain(4)
    assert PartialLinearExtension((1, 3)).extends(p)
    assert not PartialLinearExtension((3, 1)).extends(p)
    with pytest.raises(MalformedOrder):
        PartialLinearExtension((0, 7)).extends(p)


def test_incomparability_graph_examples() -> None:
    assert incomparability_graph(chain(3)).arcs == frozenset()
    assert incomparability_graph(antichain(3)).undirected_edges() == {(0, 1), (0, 2), (1, 2)}
    s2 = standard_example(2).poset
    assert incomparability_graph(s2).undirected_edges() == {(0, 1), (2, 3), (0, 2), (1, 3)}


def test_incomparability_graph_is_symmetric(s3) -> None:
    arcs = incomparability_graph(s3.poset).arcs
    assert all((v, u) in arcs for u, v in arcs)


@pytest.mark.parametrize("k", [2, 3, 4, 6])
def test_critical_pairs_of_standard_example(k: int) -> None:
    assert critical_pairs(standard_example(k).poset) == [(i, k + i) for i in range(k)]


def test_critical_pairs_small_cases() -> None:
    assert critical_pairs(chain(5)) == []
    assert critical_pairs(antichain(2)) == [(0, 1), (1, 0)]


def test_arc_digraph_of_path() -> None:
    line = arc_digraph(Digraph(3, frozenset({(0, 1), (1, 2)})))
    assert line.nv == 2
    assert line.walks == ((0, 1), (1, 2))
    assert line.arcs == {(0, 1)}


def test_arc_digraph_of_single_arc() -> None:
    line = arc_digraph(Digraph(2, frozenset({(0, 1)})))
    assert (line.nv, len(line.arcs)) == (1, 0)


def test_arc_digraph_of_transitive_tournament() -> None:
    # consecutive arc pairs meet only at the two middle vertices
    tournament = Digraph(4, frozenset((i, j) for i in range(4) for j in range(i + 1, 4)))
    line = arc_digraph(tournament)
    assert line.nv == 6
    assert len(line.arcs) == 4


def test_iterated_arc_digraph_names_paths() -> None:
    g = Digraph(4, frozenset({(0, 1), (1, 2), (2, 3)}))
    twice = arc_digraph(arc_digraph(g))
    assert twice.walks == ((0, 1, 2), (1, 2, 3))
    assert twice.arcs == {(0, 1)}


def test_width_height_and_covers(s3) -> None:
    p = s3.poset
    assert p.width() == 3
    assert p.height() == 2
    assert p.covers().arcs == {(i, 3 + j) for i in range(3) for j in range(3) if i != j}
    assert chain(4).width() == 1 and chain(4).height() == 4
    assert antichain(3).width() == 3 and antichain(3).height() == 1
    assert chain(0).width() == 0


def test_restrict_and_dual(s3) -> None:
    p = s3.poset
    sub = p.restrict([0, 4])
    assert sub.lt(0, 1)
    assert sub.labels == {0: "a1", 1: "b2"}
    assert p.dual().lt(4, 0)


def test_equality_ignores_labels() -> None:
    plain = chain(3)
    labelled = Poset(plain.rel, labels={0: "x"})
    assert plain == labelled
    assert hash(plain) == hash(labelled)
    assert plain != antichain(3)


@settings(max_examples=60, deadline=None)
@given(posets())
def test_closure_is_idempotent_and_covers_round_trip(p: Poset) -> None:
    assert transitive_closure(p.covers()) == p


@settings(max_examples=60, deadline=None)
@given(posets())
def test_linear_extension_extends(p: Poset) -> None:
    ext = p.linear_extension()
    assert ext.is_full(p.n)
    assert p.is_linear_extension(ext.seq)


@settings(max_examples=60, deadline=None)
@given(posets())
def test_incomparable_pair_count(p: Poset) -> None:
    inc = incomparability_graph(p)
    assert len(inc.arcs) == p.n * (p.n - 1) - 2 * p.strict_pair_count()


@settings(max_examples=60, deadline=None)
@given(posets())
def test_critical_pairs_are_incomparable(p: Poset) -> None:
    assert all(not p.comparable(x, y) for x, y in critical_pairs(p))
