"""
Mycielski lift: plan arithmetic, the K_m grid, non-unit local dimension and
the degenerate inputs.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from haemers.constants.graphs import GraphKind, VertexClass
from haemers.core.config import Settings
from haemers.core.exceptions import BadParameter, CapExceeded, GraphMismatch, InvalidInput
from haemers.models.field import FieldSpec
from haemers.models.graph import Graph, VertexLabel
from haemers.models.representation import DualRepresentation
from haemers.services.bounds import clique_lower_bound
from haemers.services.graphs import generalized_mycielski, is_cycle, is_star_plus_isolated, named_graph, same_graph
from haemers.services.lift import (
    assert_lift_dimensions,
    class_dims,
    lift,
    lift_bound,
    lift_plan,
    vertex_class,
)
from haemers.services.linalg import coordinate_subspace, full_subspace
from haemers.services.oracle import exists_representation, min_ambient
from haemers.services.representation import pad_ambient, scale_d, standard_complete_rep, verify


@pytest.mark.parametrize(
    "n,d,r,a,M,N,D",
    [
        (2, 1, 2, [1, 2], 3, 5, 2),
        (3, 1, 2, [1, 3], 4, 10, 3),
        (5, 2, 2, [4, 10], 18, 58, 20),
        (3, 1, 3, [1, 3, 7], 8, 22, 7),
        (4, 1, 5, [1, 4, 13, 40, 121], 122, 485, 121),
    ],
)
def test_lift_plan(n, d, r, a, M, N, D):
    """Test: plan sequences and sizes for known cases"""
    plan = lift_plan(n, d, r)
    assert plan.a == [0] + a
    assert (plan.M, plan.N, plan.D) == (M, N, D)
    assert plan.a_at(-1) == 0 and plan.a_at(r - 1) == a[-1]
    assert (plan.tail_start, plan.tail_end) == (a[-1] + 1, M)
    assert plan.ratio == lift_bound(Fraction(n, d), r)


def test_lift_plan_summary():
    """Test: the summary block lists the plan"""
    summary = lift_plan(2, 1, 2).summary()
    assert summary.splitlines()[0] == "r=2 n=2 d=1 M=3 N=5 D=2"
    assert summary.splitlines()[1] == "a_0..a_1: 1 2"


def test_lift_plan_rejects_bad_parameters():
    """Test: r >= 2 and n > d >= 1 are required"""
    with pytest.raises(BadParameter):
        lift_plan(2, 1, 1)
    with pytest.raises(BadParameter):
        lift_plan(2, 2, 2)
    with pytest.raises(BadParameter):
        lift_plan(2, 0, 2)


def test_lift_k2_gives_c5(k2_rep):
    """Test: lifting K2 with r = 2 gives a (5, 2)-representation of C5"""
    lifted = lift(k2_rep, 2)
    assert is_cycle(lifted.graph, 5)
    assert (lifted.ambient, lifted.local_dim) == (5, 2)
    assert verify(lifted).valid


def test_lift_k2_gives_c7(gf2):
    """Test: r = 3 gives value 7/3 on C7"""
    lifted = lift(standard_complete_rep(2, gf2), 3)
    assert is_cycle(lifted.graph, 7)
    assert lifted.value == Fraction(7, 3)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_lift_complete_graphs(p, m, r):
    """Test: lifting K_m reaches m + 1/Σ(m-1)^k with every subspace of dimension D"""
    field = FieldSpec.prime(p)
    plan = lift_plan(m, 1, r)
    bound = clique_lower_bound(m, r)
    assert plan.ratio == bound
    lifted = lift(standard_complete_rep(m, field), r)
    assert same_graph(lifted.graph, generalized_mycielski(named_graph(GraphKind.COMPLETE, m), r))
    assert verify(lifted).valid
    assert lifted.local_dim == plan.D
    assert all(space.dim == plan.D for space in lifted.spaces.values())
    assert lifted.ambient <= plan.N
    assert lifted.value <= bound
    assert lifted.value == bound


def test_lift_over_rationals(rationals):
    """Test: the construction is field independent"""
    lifted = lift(standard_complete_rep(3, rationals), 2)
    assert verify(lifted).valid
    assert lifted.value == Fraction(10, 3)


def test_lift_non_unit_local_dimension(c5_rep):
    """Test: lifting the (5, 2)-representation of C5 gives the Grötzsch graph at 29/10"""
    plan = lift_plan(5, 2, 2)
    assert (plan.N, plan.D) == (58, 20)
    lifted = lift(c5_rep, 2)
    assert lifted.graph.order == 11 and lifted.graph.edge_count == 20
    assert verify(lifted).valid
    assert lifted.local_dim == 20
    assert lifted.value == Fraction(29, 10)


@pytest.mark.parametrize("p", [2, 3])
def test_lift_k4_five_levels_at_default_cell_cap(p, restore_settings):
    """Test: M_5(K4) is built and verified under the default max_cells"""
    restore_settings.max_cells = Settings.model_fields["max_cells"].default
    lifted = lift(standard_complete_rep(4, FieldSpec.prime(p)), 5)
    assert (lifted.ambient, lifted.local_dim) == (485, 121)
    assert verify(lifted).valid


@pytest.mark.parametrize("r", [2, 3])
def test_lift_c5_five_two_deeper(c5_rep, r, restore_settings):
    """Test: the (5, 2)-representation of C5 lifts validly beyond r = 2"""
    restore_settings.max_cells = Settings.model_fields["max_cells"].default
    plan = lift_plan(5, 2, r)
    lifted = lift(c5_rep, r)
    assert verify(lifted).valid
    assert (lifted.ambient, lifted.local_dim) == (plan.N, plan.D)
    assert lifted.value == lift_bound(Fraction(5, 2), r)


def test_lift_c5_five_two_four_levels_hits_cell_cap(c5_rep, restore_settings):
    """Test: r = 4 needs 1040 x 3240 bases and is refused, not attempted"""
    restore_settings.max_cells = Settings.model_fields["max_cells"].default
    with pytest.raises(CapExceeded):
        lift(c5_rep, 4)


def test_lift_oracle_witness_of_c5(c5):
    """Test: the least GF(2) witness for C5 lifts validly for r = 2..5"""
    witness = exists_representation(c5, 2, 3, 1).witness
    for r in range(2, 6):
        lifted = lift(witness, r)
        assert verify(lifted).valid
        assert lifted.value == lift_bound(Fraction(3), r)


@st.composite
def three_colourable_graphs(draw, max_order=7):
    """Random subgraphs of a complete 3-partite graph, so a GF(2)^3 witness exists."""
    order = draw(st.integers(2, max_order))
    vertices = [VertexLabel.base(i) for i in range(1, order + 1)]
    pairs = [
        (vertices[i], vertices[j])
        for i in range(order)
        for j in range(i + 1, order)
        if i % 3 != j % 3
    ]
    return Graph.from_edges(vertices, [pair for pair in pairs if draw(st.booleans())])


@hypothesis_settings(max_examples=25, deadline=None)
@given(three_colourable_graphs())
def test_lift_oracle_witness_of_random_graph(g):
    """Test: an oracle witness of a random small graph lifts validly for r = 2..5"""
    n = min_ambient(g, 2, 1, 3)
    assert n is not None
    witness = exists_representation(g, 2, n, 1).witness
    assert verify(witness).valid
    for r in range(2, 6):
        lifted = lift(witness, r)
        assert verify(lifted).valid
        assert lifted.graph.order == g.order * r + 1


def test_lift_scaled_input(k2_rep):
    """Test: a (4, 2)-representation of K2 lifts to value 5/2"""
    lifted = lift(scale_d(k2_rep, 2), 2)
    assert lifted.local_dim == 16
    assert lifted.value == Fraction(5, 2)


def test_lift_compresses_input(k2_rep):
    """Test: unused ambient coordinates do not change the lift"""
    assert lift(pad_ambient(k2_rep, 2), 2).value == Fraction(5, 2)


def test_lift_single_level(k2_rep):
    """Test: r = 1 is the join with K1"""
    lifted = lift(k2_rep, 1)
    assert same_graph(lifted.graph, generalized_mycielski(k2_rep.graph, 1))
    assert lifted.value == 3
    assert verify(lifted).valid


def test_lift_edgeless_graph(gf2):
    """Test: an edgeless graph lifts to a star with value 2"""
    g = named_graph(GraphKind.EMPTY, 3)
    rep = DualRepresentation(g, gf2, 1, 1, {v: full_subspace(gf2, 1) for v in g.vertices})
    lifted = lift(rep, 2)
    assert is_star_plus_isolated(lifted.graph, 3, 3)
    assert lifted.value == 2
    assert verify(lifted).valid


def test_lift_rejects_invalid_input(gf2, k2):
    """Test: the input must verify"""
    line = coordinate_subspace(gf2, 2, [0])
    bad = DualRepresentation(k2, gf2, 2, 1, {v: line for v in k2.vertices})
    with pytest.raises(InvalidInput):
        lift(bad, 2)
    with pytest.raises(BadParameter):
        lift(standard_complete_rep(2, gf2), 0)


def test_lift_without_full_check(k2_rep):
    """Test: skipping verification still returns the same representation"""
    assert lift(k2_rep, 3, check=False) == lift(k2_rep, 3)


def test_dimension_report(gf3):
    """Test: every vertex class has dimension D"""
    plan = lift_plan(3, 1, 3)
    lifted = lift(standard_complete_rep(3, gf3), 3)
    report = assert_lift_dimensions(lifted, plan)
    assert report.valid
    assert report.total_span_dim == plan.N
    assert set(report.classes) == {VertexClass.LEVEL0, VertexClass.LEVEL1, VertexClass.EVEN, VertexClass.APEX}
    assert all(dims == [plan.D] for _, dims in class_dims(report))


def test_vertex_class():
    """Test: labels are grouped by level parity"""
    v = VertexLabel.base(1)
    assert vertex_class(VertexLabel.at_level(v, 0)) == VertexClass.LEVEL0
    assert vertex_class(VertexLabel.at_level(v, 1)) == VertexClass.LEVEL1
    assert vertex_class(VertexLabel.at_level(v, 4)) == VertexClass.EVEN
    assert vertex_class(VertexLabel.at_level(v, 3)) == VertexClass.ODD
    assert vertex_class(VertexLabel.apex()) == VertexClass.APEX
    with pytest.raises(GraphMismatch):
        vertex_class(v)
