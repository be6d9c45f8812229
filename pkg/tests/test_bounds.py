"""
Recursion table, closing inequality, closed-form bounds and the audit of
lifted representations against the table.
"""
import math
from fractions import Fraction

import pytest
import sympy

from haemers.core.exceptions import BadParameter, DomainError, GraphMismatch
from haemers.models.field import FieldSpec
from haemers.services.bounds import (
    LinearForm,
    audit_against_table,
    clique_lower_bound,
    final_inequality,
    lemma2_residual,
    lemma3_form,
    lemma3_identity_check,
    lift_upper_bound,
    lpu_chi,
    recursion_table,
    table_lines,
    tardif_chi,
    theta_mycielski2,
    theta_mycielski2_float,
    theta_mycielski2_precise,
)
from haemers.services.lift import lift
from haemers.services.representation import standard_complete_rep


def test_linear_form_arithmetic():
    """Test: forms add, scale and evaluate exactly"""
    f = LinearForm(3, -1)
    g = LinearForm(Fraction(1, 2), 2)
    assert f + g == LinearForm(Fraction(7, 2), 1)
    assert 2 * f - g == LinearForm(Fraction(11, 2), -4)
    assert (-f).evaluate(1, 1) == -2
    assert (f - f).is_zero
    assert str(LinearForm(7, -2)) == "7*d + -2*n"


def test_recursion_base_rows():
    """Test: base rows of the table for m = 3"""
    table = recursion_table(3, 4)
    assert table.c[0] == table.a[1] == table.b[0] == LinearForm(1, 0)
    assert table.c[1] == LinearForm(4, -1)
    assert table.b[1] == LinearForm(7, -2)
    assert table.c[2] == LinearForm(10, -3)
    assert table.a[2] == LinearForm(13, -4)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_closed_rows(m):
    """Test: b_1 = (m²-m+1)d - (m-1)n and c_2 = (m²+1)d - mn"""
    table = recursion_table(m, 4)
    assert table.c[1] == LinearForm(m + 1, -1)
    assert table.b[1] == LinearForm(m * m - m + 1, -(m - 1))
    assert table.c[2] == LinearForm(m * m + 1, -m)


def test_table_size():
    """Test: c runs to max(1, r-2) and earlier a/b entries exist"""
    assert sorted(recursion_table(3, 2).c) == [0, 1]
    assert sorted(recursion_table(3, 7).c) == [0, 1, 2, 3, 4, 5]
    assert sorted(recursion_table(3, 7).a) == [1, 2, 3]
    assert sorted(recursion_table(3, 7).b) == [0, 1, 2, 3]
    lines = table_lines(recursion_table(2, 3))
    assert lines[0] == "c_0 = 1*d + 0*n"


def test_recursion_table_rejects_small_parameters():
    """Test: m >= 2 and r >= 2"""
    with pytest.raises(BadParameter):
        recursion_table(1, 3)
    with pytest.raises(BadParameter):
        recursion_table(3, 1)
    with pytest.raises(BadParameter):
        lemma3_identity_check(3, 3)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("r", [4, 5, 6, 7, 8, 9, 10])
def test_recursion_identities(m, r):
    """Test: the three-term recursion residual vanishes and the closing identity holds"""
    table = recursion_table(m, r)
    assert all(residual.is_zero for residual in lemma2_residual(table))
    assert lemma3_identity_check(m, r)
    total = sum((m - 1) ** t for t in range(r))
    assert lemma3_form(table) == LinearForm(m * total + 1, -total)


@pytest.mark.parametrize("m,r,expected", [(2, 2, Fraction(5, 2)), (3, 2, Fraction(10, 3)), (3, 3, Fraction(22, 7))])
def test_final_inequality(m, r, expected):
    """Test: the closing form rearranges to the clique bound"""
    form = final_inequality(recursion_table(m, r))
    assert -form.coef_d / form.coef_n == expected
    assert clique_lower_bound(m, r) == expected


def test_clique_lower_bound_edges():
    """Test: r = 1 is the join with K1 and bad input is refused"""
    assert clique_lower_bound(4, 1) == 5
    with pytest.raises(BadParameter):
        clique_lower_bound(0, 2)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("r", [2, 3, 4, 5, 6, 7, 8])
def test_bounds_agree(m, r):
    """Test: clique bound, lift bound and fractional chromatic formula coincide on K_m"""
    expected = m + Fraction(1, sum((m - 1) ** k for k in range(r)))
    assert clique_lower_bound(m, r) == lift_upper_bound(m, r) == tardif_chi(m, r) == expected


def test_closed_forms():
    """Test: known values of the closed forms"""
    assert lift_upper_bound(7, 2) == Fraction(50, 7)
    assert lift_upper_bound(Fraction(5, 2), 2) == Fraction(29, 10)
    assert lpu_chi(Fraction(5, 2)) == Fraction(29, 10)
    assert lift_upper_bound(1, 4) == 2
    for r in range(1, 8):
        assert tardif_chi(2, r) == Fraction(2 * r + 1, r)
    with pytest.raises(BadParameter):
        lift_upper_bound(Fraction(1, 2), 2)
    with pytest.raises(BadParameter):
        tardif_chi(3, 0)


def test_theta_values():
    """Test: θ(M_2(K_1)) = 2, θ(C5) = √5 and a large argument"""
    assert theta_mycielski2(1) == pytest.approx(2, abs=1e-12)
    assert theta_mycielski2(2) == pytest.approx(math.sqrt(5), abs=1e-9)
    assert theta_mycielski2(10) == pytest.approx(10.003094877939278, abs=1e-9)
    assert theta_mycielski2(Fraction(5, 2)) == pytest.approx(theta_mycielski2_float(2.5), abs=1e-9)
    assert theta_mycielski2(2.0) == pytest.approx(theta_mycielski2_float(2.0), abs=1e-9)


def test_theta_domain():
    """Test: θ below 1 is rejected"""
    with pytest.raises(DomainError):
        theta_mycielski2(Fraction(1, 2))


def test_theta_extended_precision(restore_settings):
    """Test: the sympy path carries the configured number of digits"""
    restore_settings.theta_precision_digits = 50
    root5 = sympy.sqrt(5).evalf(60)
    pentagon = theta_mycielski2_precise(2)
    assert isinstance(pentagon, sympy.Float)
    assert abs(pentagon - root5) < sympy.Float("1e-40")
    assert abs(theta_mycielski2_precise(2, digits=20) - root5) < sympy.Float("1e-15")
    assert float(theta_mycielski2_precise(10)) == theta_mycielski2(10)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_audit_of_lifted_complete_graphs(p, m, r):
    """Test: measured intersections of lifted K_m never fall below the table"""
    rep = lift(standard_complete_rep(m, FieldSpec.prime(p)), r)
    report = audit_against_table(rep, recursion_table(m, r))
    assert report.entries
    assert report.valid, [e for e in report.violations]
    quantities = {entry.quantity for entry in report.entries}
    assert {"c_0", "c_1", "a_1", "b_0"} <= quantities


def test_audit_rejects_other_graphs(c5_rep):
    """Test: the audit only accepts M_r(K_m)"""
    with pytest.raises(GraphMismatch):
        audit_against_table(c5_rep, recursion_table(3, 2))
