"""Tests for conversions between realizers, boolean realizers and local realizers."""
from __future__ import annotations

import numpy as np
import pytest

from src.generators import (
    antichain,
    chain,
    naturally_labeled_posets,
    random_dimensional_poset,
    random_local_realizer,
    random_partial_local_realizer,
    standard_example,
)
from src.poset import Digraph, NotAPartialOrder, Poset, transitive_closure
from src.realizers import (
    BooleanRealizer,
    ClauseFormula,
    LocalRealizer,
    NotARealizer,
    Realizer,
    TruthTable,
    induced_relation,
    verify_boolean_realizer,
    verify_realizer,
)
from src.solvers import dimension
from src.transforms import (
    ArityTooLarge,
    NotALocalRealizer,
    NotTransitiveOrientation,
    OccurrenceIndex,
    WidthTooLarge,
    boolean_to_realizer,
    build_partition_scheme,
    local2_to_realizer,
    local3_to_boolean,
    orientation_to_two_realizer,
)


def size_law(c: int) -> int:
    return 1 + 2 * (3 + 3 * c * (c - 1))


def chain_plus_point():
    """Chain 0 < 1 < 2 with 3 incomparable to everything."""

    return transitive_closure(Digraph(4, frozenset({(0, 1), (1, 2)})))


# -- orientations --------------------------------------------------------------


def test_orientation_of_two_antichain() -> None:
    assert orientation_to_two_realizer(antichain(2), [(0, 1)]).orders == ((0, 1), (1, 0))


def test_orientation_of_s2() -> None:
    s2 = standard_example(2).poset
    realizer = orientation_to_two_realizer(s2, [(1, 0), (2, 3), (2, 0), (1, 3)])
    assert realizer.size == 2
    assert verify_realizer(s2, realizer)


def test_empty_orientation_of_chain() -> None:
    realizer = orientation_to_two_realizer(chain(3), [])
    assert realizer.orders == ((0, 1, 2), (0, 1, 2))


def test_orientation_must_be_transitive() -> None:
    with pytest.raises(NotTransitiveOrientation):
        orientation_to_two_realizer(antichain(3), [(0, 1), (1, 2), (2, 0)])


def test_orientation_must_cover_every_incomparable_pair() -> None:
    with pytest.raises(NotTransitiveOrientation):
        orientation_to_two_realizer(antichain(3), [(0, 1), (1, 2)])


# -- boolean realizers of arity at most three -----------------------------------


def test_conjunction_of_s2_orders() -> None:
    s2 = standard_example(2)
    br = BooleanRealizer(s2.realizer.orders, TruthTable.conjunction(2))
    assert boolean_to_realizer(s2.poset, br) == s2.realizer


def test_chain_with_single_coordinate() -> None:
    br = BooleanRealizer(((0, 1, 2),), TruthTable(1, (False, True)))
    assert boolean_to_realizer(chain(3), br).orders == ((0, 1, 2),)


def test_clause_formulas_are_tabulated() -> None:
    br = BooleanRealizer(((0, 1, 2),), ClauseFormula(1, ((0,),)))
    assert boolean_to_realizer(chain(3), br).size == 1


def test_single_unused_complementary_pair() -> None:
    p = chain_plus_point()
    orders = ((0, 1, 2, 3), (3, 1, 0, 2), (3, 0, 2, 1))
    br = BooleanRealizer(orders, TruthTable.from_ones(3, [(1, 1, 1), (1, 1, 0), (1, 0, 1)]))
    assert verify_boolean_realizer(p, br)
    assert boolean_to_realizer(p, br).orders == ((3, 0, 1, 2), (0, 1, 2, 3))


def test_ones_at_001_and_111() -> None:
    p = transitive_closure(Digraph(4, frozenset({(0, 1), (1, 3)})))
    orders = ((2, 1, 0, 3), (1, 0, 3, 2), (0, 1, 3, 2))
    br = BooleanRealizer(orders, TruthTable.from_ones(3, [(0, 0, 1), (1, 1, 1)]))
    assert verify_boolean_realizer(p, br)
    realizer = boolean_to_realizer(p, br)
    assert realizer.size == 2
    assert verify_realizer(p, realizer)
    assert realizer.orders == ((0, 1, 3, 2), (2, 0, 1, 3))


def test_arity_four_is_refused(s4) -> None:
    with pytest.raises(ArityTooLarge):
        boolean_to_realizer(s4.poset, s4.boolean)


def test_unverified_input_is_refused() -> None:
    br = BooleanRealizer(((0, 1),), TruthTable(1, (False, True)))
    with pytest.raises(NotARealizer):
        boolean_to_realizer(antichain(2), br)


def test_seeded_three_order_fixtures(rng) -> None:
    tables = [
        TruthTable.conjunction(3),
        TruthTable.from_function(3, lambda t: t[0] and (t[1] or t[2])),
        TruthTable.from_ones(3, [(0, 0, 1), (1, 1, 1)]),
    ]
    converted = 0
    for _ in range(60):
        n = int(rng.integers(2, 7))
        orders = tuple(tuple(int(x) for x in rng.permutation(n)) for _ in range(3))
        for table in tables:
            br = BooleanRealizer(orders, table)
            try:
                p = Poset(induced_relation(br, n))
            except NotAPartialOrder:
                continue
            realizer = boolean_to_realizer(p, br)
            assert realizer.size <= 3
            assert verify_realizer(p, realizer)
            converted += 1
    assert converted >= 60


# -- width-two local realizers -------------------------------------------------


def test_chain_with_its_order() -> None:
    lr = LocalRealizer.from_sequences([(0, 1, 2)])
    assert local2_to_realizer(chain(3), lr).orders == ((0, 1, 2),)


def test_two_antichain_with_both_orders() -> None:
    lr = LocalRealizer.from_sequences([(0, 1), (1, 0)])
    realizer = local2_to_realizer(antichain(2), lr)
    assert realizer.size == 2 and verify_realizer(antichain(2), realizer)


def test_stacked_antichains() -> None:
    p = transitive_closure(Digraph(4, frozenset({(0, 2), (0, 3), (1, 2), (1, 3)})))
    lr = LocalRealizer.from_sequences([(0, 1, 2, 3), (1, 0), (3, 2)])
    realizer = local2_to_realizer(p, lr)
    assert realizer.orders == ((0, 1, 2, 3), (1, 0, 3, 2))


def test_width_three_is_refused(s3) -> None:
    with pytest.raises(WidthTooLarge):
        local2_to_realizer(s3.poset, s3.local)


def test_invalid_family_is_refused() -> None:
    with pytest.raises(NotALocalRealizer):
        local2_to_realizer(antichain(2), LocalRealizer.from_sequences([(0, 1)]))
    with pytest.raises(NotALocalRealizer):
        local2_to_realizer(chain(2), LocalRealizer.from_sequences([(1, 0)]))


def test_seeded_two_dimensional_posets() -> None:
    rng = np.random.default_rng(11)
    for _ in range(100):
        p, realizer = random_dimensional_poset(int(rng.integers(2, 16)), 2, rng)
        out = local2_to_realizer(p, LocalRealizer.from_realizer(realizer))
        assert out.size <= 2
        assert verify_realizer(p, out)


# -- width-three local realizers -----------------------------------------------


def test_padding_gives_three_occurrences() -> None:
    occ = OccurrenceIndex.build(3, LocalRealizer.from_sequences([(0, 1, 2)]))
    assert len(occ.gadgets) == 7
    assert all(len(slots) == 3 for slots in occ.slots)
    assert occ.level(0, 0) == 0


def test_standard_examples_convert_to_seven_orders() -> None:
    for k in range(3, 11):
        ex = standard_example(k)
        scheme = build_partition_scheme(ex.poset, ex.local)
        assert scheme.color_count == 1
        br = local3_to_boolean(ex.poset, ex.local)
        assert br.size == size_law(1) == 7
        assert br.size <= 8443
        assert verify_boolean_realizer(ex.poset, br)


def test_chain_converts_with_three_partitions() -> None:
    br = local3_to_boolean(chain(4), LocalRealizer.from_sequences([(0, 1, 2, 3)]))
    assert br.size == 7
    assert verify_boolean_realizer(chain(4), br)


def test_two_antichain_converts() -> None:
    br = local3_to_boolean(antichain(2), LocalRealizer.from_sequences([(0, 1), (1, 0)]))
    assert verify_boolean_realizer(antichain(2), br)


def test_width_four_is_refused(gadget2) -> None:
    with pytest.raises(WidthTooLarge):
        local3_to_boolean(gadget2.p, gadget2.local_realizer())


def test_seeded_local_realizers_convert() -> None:
    rng = np.random.default_rng(5)
    for _ in range(100):
        p, lr = random_local_realizer(int(rng.integers(2, 13)), rng)
        scheme = build_partition_scheme(p, lr)
        br = local3_to_boolean(p, lr)
        assert br.size == size_law(scheme.color_count)
        assert verify_boolean_realizer(p, br)


def test_three_dimensional_realizers_convert() -> None:
    rng = np.random.default_rng(11)
    for _ in range(60):
        p, realizer = random_dimensional_poset(int(rng.integers(2, 13)), 3, rng)
        lr = LocalRealizer.from_realizer(realizer)
        scheme = build_partition_scheme(p, lr)
        br = local3_to_boolean(p, lr)
        assert br.size == size_law(scheme.color_count)
        assert verify_boolean_realizer(p, br)


def test_partial_only_local_realizers_convert() -> None:
    rng = np.random.default_rng(13)
    for _ in range(60):
        p, lr = random_partial_local_realizer(int(rng.integers(3, 13)), rng)
        assert all(len(ple) < p.n for ple in lr.ples)
        scheme = build_partition_scheme(p, lr)
        br = local3_to_boolean(p, lr)
        assert br.size == size_law(scheme.color_count)
        assert verify_boolean_realizer(p, br)


def test_blocks_decide_strict_comparisons(s4) -> None:
    scheme = build_partition_scheme(s4.poset, s4.local)
    base = {x: i for i, x in enumerate(scheme.base_order)}
    for x in range(s4.poset.n):
        for y in range(s4.poset.n):
            if x == y:
                continue
            below = base[x] < base[y] and all(
                block.index(x) < block.index(y)
                for partition in scheme.partitions
                for block in partition
                if x in block and y in block
            )
            assert below == s4.poset.lt(x, y)


def test_every_small_poset_converts_from_its_realizer() -> None:
    for n in range(1, 5):
        for p in naturally_labeled_posets(n):
            realizer = dimension(p).witness
            br = local3_to_boolean(p, LocalRealizer.from_realizer(realizer))
            assert verify_boolean_realizer(p, br)
