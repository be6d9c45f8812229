"""
Exact linear algebra over GF(p) and Q: worked examples, error paths and
cross-checks against independent eliminations.
"""
from fractions import Fraction

import pytest
import sympy

from haemers.core.exceptions import (
    AmbientMismatch,
    BadParameter,
    CapExceeded,
    FieldMismatch,
    IndexOutOfRange,
    ParseError,
)
from haemers.models.field import FieldSpec
from haemers.models.matrix import Matrix
from haemers.services.linalg import (
    contains,
    coordinate_subspace,
    embed,
    full_subspace,
    gamma_interval,
    intersect_all,
    intersection_dimension,
    rank,
    restrict_columns,
    rref,
    span_rows,
    span_vectors,
    subspace_equal,
    subspace_intersect,
    subspace_span,
    subspace_sum,
    subspace_sum_all,
    subspace_tensor,
    zero_subspace,
)


def naive_rank_mod_p(rows, p):
    """Row reduction with plain lists, written independently of the library."""
    rows = [[x % p for x in row] for row in rows]
    rank_found = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((i for i in range(rank_found, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank_found], rows[pivot] = rows[pivot], rows[rank_found]
        inv = pow(rows[rank_found][col], -1, p)
        rows[rank_found] = [x * inv % p for x in rows[rank_found]]
        for i in range(len(rows)):
            if i != rank_found and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank_found])]
        rank_found += 1
    return rank_found


def test_field_parsing():
    """Test: field tokens parse to GF(p) or Q and reject non-primes"""
    assert FieldSpec.parse("Q").is_rational
    assert FieldSpec.parse("q").is_rational
    assert FieldSpec.parse("7") == FieldSpec.prime(7)
    assert str(FieldSpec.prime(5)) == "GF(5)"
    with pytest.raises(BadParameter):
        FieldSpec.parse("4")
    with pytest.raises(BadParameter):
        FieldSpec.prime(2**31 + 11)
    with pytest.raises(ParseError):
        FieldSpec.parse("gf")


def test_field_scalars(gf3, rationals):
    """Test: scalars are canonical residues or Fractions"""
    assert gf3.scalar(-1) == 2
    assert gf3.scalar("1/2") == 2
    assert gf3.scalar(Fraction(4, 2)) == 2
    assert rationals.scalar("3/6") == Fraction(1, 2)
    assert gf3.inverse(2) == 2
    with pytest.raises(ZeroDivisionError):
        rationals.inverse(0)


def test_rref_gf2(gf2):
    """Test: duplicate rows collapse over GF(2)"""
    m = Matrix.from_rows(gf2, [[1, 1, 0], [1, 1, 0], [0, 1, 1]])
    reduced, r = rref(m)
    assert r == 2
    assert reduced.to_rows() == [[1, 0, 1], [0, 1, 1]]


def test_rref_rationals(rationals):
    """Test: rational elimination keeps exact fractions"""
    m = Matrix.from_rows(rationals, [[2, 4, 1], [1, 3, 0]])
    reduced, r = rref(m)
    assert r == 2
    assert reduced.to_rows() == [[1, 0, Fraction(3, 2)], [0, 1, Fraction(-1, 2)]]


def test_rank_depends_on_field(gf2, gf3):
    """Test: [[1,1],[1,-1]] is singular over GF(2) only"""
    rows = [[1, 1], [1, -1]]
    assert rank(Matrix.from_rows(gf2, rows)) == 1
    assert rank(Matrix.from_rows(gf3, rows)) == 2


def test_rank_matches_independent_eliminations(gf3, rationals):
    """Test: rank agrees with a list-based GF(3) reduction and with sympy over Q"""
    rows = [
        [1, 2, 0, 1, 1],
        [2, 1, 0, 2, 2],
        [0, 0, 1, 1, 0],
        [1, 2, 1, 2, 1],
    ]
    assert rank(Matrix.from_rows(gf3, rows)) == naive_rank_mod_p(rows, 3)
    assert rank(Matrix.from_rows(rationals, rows)) == sympy.Matrix(rows).rank()


def test_subspace_span_is_canonical(gf2):
    """Test: different spanning sets of one subspace give equal values"""
    a = span_rows(gf2, 3, [[1, 1, 0], [0, 1, 1]])
    b = span_rows(gf2, 3, [[1, 0, 1], [1, 1, 0], [0, 1, 1]])
    assert a == b
    assert subspace_equal(a, b)
    assert a.pivot_columns == (0, 1)


def test_sum_and_intersection(gf2):
    """Test: Zassenhaus intersection of two coordinate planes"""
    a = coordinate_subspace(gf2, 3, [0, 1])
    b = coordinate_subspace(gf2, 3, [1, 2])
    meet = subspace_intersect(a, b)
    assert meet == coordinate_subspace(gf2, 3, [1])
    assert subspace_sum(a, b) == full_subspace(gf2, 3)
    assert intersection_dimension(a, b) == 1
    assert intersect_all([a, b, coordinate_subspace(gf2, 3, [2])]).dim == 0


def test_intersection_over_rationals(rationals):
    """Test: intersection of two planes in Q^3 is the expected line"""
    a = span_rows(rationals, 3, [[1, 0, 1], [0, 1, 1]])
    b = span_rows(rationals, 3, [[1, 1, 0], [0, 0, 1]])
    meet = subspace_intersect(a, b)
    assert meet.dim == 1
    assert contains(meet, [1, 1, 2])


def test_zero_subspace_edges(gf2):
    """Test: operations with the zero subspace"""
    zero = zero_subspace(gf2, 4)
    full = full_subspace(gf2, 4)
    assert subspace_intersect(zero, full).dim == 0
    assert subspace_sum(zero, full) == full
    assert subspace_tensor(zero, full).dim == 0
    assert list(span_vectors(zero)) == [(0, 0, 0, 0)]


def test_tensor_coordinates(gf2):
    """Test: e_0 (x) e_1 lands on coordinate j*n + i = 2"""
    v = coordinate_subspace(gf2, 2, [0])
    w = coordinate_subspace(gf2, 2, [1])
    assert subspace_tensor(v, w) == coordinate_subspace(gf2, 4, [2])
    assert subspace_tensor(full_subspace(gf2, 2), full_subspace(gf2, 3)).dim == 6


def test_gamma_interval(gf2):
    """Test: Γ[a, b] is 1-based and inclusive"""
    g = gamma_interval(gf2, 5, 2, 4)
    assert g == coordinate_subspace(gf2, 5, [1, 2, 3])
    assert gamma_interval(gf2, 5, 3, 3).dim == 1
    with pytest.raises(IndexOutOfRange):
        gamma_interval(gf2, 5, 0, 2)
    with pytest.raises(IndexOutOfRange):
        gamma_interval(gf2, 5, 4, 3)
    with pytest.raises(IndexOutOfRange):
        gamma_interval(gf2, 5, 2, 6)


def test_mismatches(gf2, gf3):
    """Test: mixing fields or ambients raises"""
    with pytest.raises(FieldMismatch):
        subspace_sum(full_subspace(gf2, 2), full_subspace(gf3, 2))
    with pytest.raises(AmbientMismatch):
        subspace_intersect(full_subspace(gf2, 2), full_subspace(gf2, 3))
    with pytest.raises(AmbientMismatch):
        contains(full_subspace(gf2, 2), [1, 0, 0])


def test_embed_and_restrict(gf3):
    """Test: embedding into a block and projecting back"""
    line = span_rows(gf3, 2, [[1, 2]])
    placed = embed(line, 5, 2)
    assert contains(placed, [0, 0, 1, 2, 0])
    assert restrict_columns(placed, [2, 3]) == line
    with pytest.raises(IndexOutOfRange):
        embed(line, 3, 2)


def test_span_vectors_gf2(gf2):
    """Test: a 2-dimensional subspace of GF(2)^3 has four vectors"""
    plane = span_rows(gf2, 3, [[1, 1, 0], [0, 1, 1]])
    vectors = set(span_vectors(plane))
    assert vectors == {(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)}


def test_span_vectors_needs_finite_field(rationals):
    """Test: enumeration refuses Q"""
    with pytest.raises(FieldMismatch):
        list(span_vectors(full_subspace(rationals, 2)))


def test_cell_cap(gf2, restore_settings):
    """Test: matrices above max_cells are refused"""
    restore_settings.max_cells = 10
    with pytest.raises(CapExceeded):
        Matrix.zeros(gf2, 4, 4)
    with pytest.raises(CapExceeded):
        subspace_tensor(full_subspace(gf2, 3), full_subspace(gf2, 2))


def test_sum_of_many_summands_stays_under_cell_cap(gf3, restore_settings):
    """Test: the sum folds its summands, so only the ambient width counts against max_cells"""
    lines = [coordinate_subspace(gf3, 6, [i % 6]) for i in range(30)]
    restore_settings.max_cells = 72
    total = subspace_sum_all(gf3, 6, lines)
    assert total.dim == 6
    assert subspace_sum_all(gf3, 6, lines[:4]).pivot_columns == (0, 1, 2, 3)


def test_matrix_validation(gf2):
    """Test: ragged rows and missing column counts are rejected"""
    with pytest.raises(BadParameter):
        Matrix.from_rows(gf2, [[1, 0], [1]])
    with pytest.raises(BadParameter):
        Matrix.from_rows(gf2, [])
    assert subspace_span(Matrix.from_rows(gf2, [], cols=3)).dim == 0
