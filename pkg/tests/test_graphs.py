import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plane_chroma.errors import InputTooLarge, InvalidInput
from plane_chroma.graphs import (
    BicoloredGraph, EdgeLabel, RangeKind, SimpleGraph, canonical_form, contains_k4, contains_k23,
    enumerate_small_graphs, graph_from_json, inverse, is_udg_small, max_edges_small,
    offcolor_cycle_constraints, simple_cycles, triangle_chain_rigid,
)

U, D = EdgeLabel.UNIT, EdgeLabel.D


def complete(n):
    return SimpleGraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def test_edges_normalised():
    g = SimpleGraph(3, ((1, 0), (2, 1), (0, 1)))
    assert g.edges == ((0, 1), (1, 2))


def test_bad_edges():
    with pytest.raises(InvalidInput):
        SimpleGraph(2, ((0, 0),))
    with pytest.raises(InvalidInput):
        SimpleGraph(2, ((0, 2),))


def test_json_round_trip():
    g = SimpleGraph(4, ((0, 1), (1, 2), (2, 3)))
    assert graph_from_json(json.dumps(g.to_json())) == g
    bg = BicoloredGraph(g, {(0, 1): U, (1, 2): D, (2, 3): U})
    back = graph_from_json(bg.to_json())
    assert back.labels == bg.labels


def test_forbidden_subgraphs():
    assert contains_k4(complete(4)) is not None
    k23 = SimpleGraph(5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)))
    assert contains_k23(k23) is not None
    assert is_udg_small(k23) is False
    assert is_udg_small(complete(3)) is True


def test_class_counts_and_max_edges():
    assert [len(enumerate_small_graphs(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]
    assert [max_edges_small(n) for n in range(1, 6)] == [0, 1, 3, 5, 7]


def test_canonical_limit():
    with pytest.raises(InputTooLarge):
        canonical_form(SimpleGraph(9))


perms = st.permutations(list(range(6)))


@given(perms)
@settings(max_examples=50)
def test_rigidity_invariant_under_relabelling(perm):
    # triangle strip on 6 vertices, and a hexagon which is not rigid
    strip = SimpleGraph(6, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)))
    ring = SimpleGraph(6, tuple((i, (i + 1) % 6) for i in range(6)))
    assert triangle_chain_rigid(strip.relabel(perm)) is True
    assert triangle_chain_rigid(ring.relabel(perm)) is False


@given(perms)
@settings(max_examples=30)
def test_canonical_form_invariant(perm):
    g = SimpleGraph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (0, 5)))
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


def test_cycles():
    assert len(simple_cycles(complete(4))) == 7


def test_offcolor_constraints_and_inverse_duality():
    # square with one D edge: d <= 3; its inverse has one UNIT edge: d >= 1/3
    sq = SimpleGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    bg = BicoloredGraph(sq, {(0, 1): U, (1, 2): U, (2, 3): U, (0, 3): D})
    cons = offcolor_cycle_constraints(bg)
    assert [(c.kind, c.bound) for c in cons] == [(RangeKind.MAX_D, Fraction(3))]
    inv = offcolor_cycle_constraints(inverse(bg))
    assert [(c.kind, c.bound) for c in inv] == [(RangeKind.MIN_D, Fraction(1, 3))]


labels = st.lists(st.sampled_from([U, D]), min_size=6, max_size=6)


@given(labels)
def test_inverse_duality_property(labs):
    # every constraint on a labelled graph maps to the reciprocal one on its inverse
    g = SimpleGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)))
    bg = BicoloredGraph(g, dict(zip(g.edges, labs)))
    a = {(c.witness_cycle, c.kind, c.bound) for c in offcolor_cycle_constraints(bg)}
    flip = {RangeKind.MIN_D: RangeKind.MAX_D, RangeKind.MAX_D: RangeKind.MIN_D}
    b = {(c.witness_cycle, flip[c.kind], 1 / c.bound) for c in offcolor_cycle_constraints(inverse(bg))}
    assert a == b
    assert inverse(inverse(bg)).labels == bg.labels
