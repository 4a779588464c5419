"""Graph layer: encodings, canonical forms, counting, compositions."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagcert.graphs import (
    SmallGraph,
    automorphism_count,
    blowup_graph,
    complete,
    count_induced,
    empty,
    emit_paircode,
    enumerate_graphs,
    from_graph6,
    induced_density,
    join,
    parse_graph,
    parse_paircode,
    to_graph6,
    turan,
    union,
)

K221 = turan(3, 5)


def small_graphs(max_n: int = 6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(0, (1 << (n * (n - 1) // 2)) - 1).map(
            lambda m: SmallGraph(n, m)
        )
    )


# ---------------------------------------------------------------------------
# construction and encodings


def test_order_bounds():
    with pytest.raises(ValueError):
        SmallGraph(0, 0)
    with pytest.raises(ValueError):
        SmallGraph(10, 0)
    with pytest.raises(ValueError):
        SmallGraph(3, 1 << 3)  # only 3 pair bits at order 3


def test_paircode_round_trip():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            assert parse_paircode(emit_paircode(g)) == g


def test_paircode_rejects_garbage():
    with pytest.raises(ValueError):
        parse_paircode("2 0 2")
    with pytest.raises(ValueError):
        parse_paircode("2 2")  # 2 pairs is not a triangular count


def test_k221_pair_codes_decode_to_one_class():
    a = parse_paircode("2 2 2 1 1 2 2 2 2 2")
    b = parse_paircode("1 2 2 2 2 2 2 1 2 2")
    assert a.canonical_form() == b.canonical_form() == K221.canonical_form()
    assert a.edge_count == 8
    assert a.degree_sequence() == (3, 3, 3, 3, 4)


def test_graph6_k5():
    assert to_graph6(complete(5)) == "D~{"
    assert from_graph6("D~{") == complete(5)


def test_graph6_round_trip():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            assert from_graph6(to_graph6(g)) == g


def test_parse_graph_accepts_both():
    assert parse_graph("D~{") == complete(5)
    assert parse_graph("2 2 2") == complete(3)


# ---------------------------------------------------------------------------
# enumeration


def test_enumeration_counts():
    assert [len(enumerate_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_enumeration_is_canonical_and_sorted():
    for n in (3, 4, 5):
        graphs = enumerate_graphs(n)
        assert all(g == g.canonical_form() for g in graphs)
        bits = [g.canonical_code().bits for g in graphs]
        assert bits == sorted(bits)


def test_enumeration_order_cap():
    with pytest.raises(ValueError):
        enumerate_graphs(8)
    with pytest.raises(ValueError):
        enumerate_graphs(0)


# ---------------------------------------------------------------------------
# canonical forms


def test_canonical_form_is_permutation_invariant():
    rng = random.Random(20260815)
    for g in enumerate_graphs(5):
        canon = g.canonical_form()
        for _ in range(50):
            perm = tuple(rng.sample(range(5), 5))
            assert g.relabelled(perm).canonical_form() == canon


@given(small_graphs(5))
def test_canonical_form_idempotent(g):
    assert g.canonical_form().canonical_form() == g.canonical_form()


@given(small_graphs(5))
def test_complement_involution(g):
    assert g.complement().complement() == g


# ---------------------------------------------------------------------------
# induced counting


def test_counting_anchors():
    t36 = turan(3, 6)
    assert count_induced(K221, t36) == 6
    assert induced_density(complete(2), t36) == Fraction(4, 5)
    assert induced_density(K221, t36) == 1
    assert count_induced(K221, complete(5)) == 0
    assert count_induced(K221, union(complete(4), empty(3))) == 0
    assert induced_density(complete(2), empty(6)) == 0


def test_density_requires_small_pattern():
    with pytest.raises(ValueError):
        induced_density(complete(4), complete(3))
    assert count_induced(complete(4), complete(3)) == 0


def test_same_order_density_is_isomorphism_indicator():
    for n in (4, 5):
        basis = enumerate_graphs(n)
        for f in basis:
            for g in basis:
                assert count_induced(f, g) == (1 if f == g else 0)


def test_chain_rule():
    rng = random.Random(7)
    hosts = rng.sample(enumerate_graphs(6), 12)
    mids = enumerate_graphs(4)
    for h in (complete(2), parse_paircode("2 2 1")):
        for g in hosts:
            direct = induced_density(h, g)
            via = sum(
                (induced_density(h, f) * induced_density(f, g) for f in mids),
                Fraction(0),
            )
            assert direct == via


@given(small_graphs(3), small_graphs(6))
def test_complement_duality(h, g):
    assert count_induced(h, g) == count_induced(h.complement(), g.complement())


# ---------------------------------------------------------------------------
# compositions and automorphisms


def test_turan_part_sizes():
    g = turan(3, 7)
    # parts (3,2,2): non-edges are the within-part pairs, 3 + 1 + 1
    assert g.edge_count == 7 * 6 // 2 - (3 + 1 + 1)
    assert turan(3, 5).canonical_form() == K221.canonical_form()


def test_join_and_union():
    g = join(empty(2), empty(3))  # K_{2,3}
    assert g.edge_count == 6
    assert union(complete(3), complete(2)).edge_count == 4
    assert join(complete(2), complete(3)) == complete(5)


def test_blowup_graph():
    assert blowup_graph(complete(2), (2, 3)).canonical_form() == join(
        empty(2), empty(3)
    ).canonical_form()
    assert blowup_graph(complete(3), (2, 2, 2)).canonical_form() == turan(3, 6).canonical_form()


def test_automorphism_counts():
    assert automorphism_count(complete(5)) == 120
    assert automorphism_count(parse_paircode("2 1 1 2 1 2")) == 2  # 4-vertex path
    assert automorphism_count(turan(3, 6)) == 48
    assert automorphism_count(K221) == 8


def test_degree_and_edges():
    g = parse_paircode("2 1 2 1 2 2")
    assert sorted(g.degree(v) for v in range(4)) == sorted(g.degree_sequence())
    assert len(g.edges()) == g.edge_count
