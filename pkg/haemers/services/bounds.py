"""
Lower-bound recursion for representations of M_r(K_m) and closed-form bounds.

The recursion tracks linear forms α·d + β·n in the parameters of an arbitrary
dual (n, d)-representation of M_r(K_m). With X_(i,t) the subspace of the copy
of vertex i on level t:

    c_k <= dim ⋂_{t<=k} X_(i,t)
    a_l <= dim ⋂_{t<l} X_(i,2t+1)
    b_l <= dim ⋂_{t<=l} X_(i,2t)

Forms are kept symbolic so the identities below are checked exactly.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from haemers.constants.graphs import GraphKind
from haemers.core.config import settings
from haemers.core.exceptions import BadParameter, DivisionByZero, DomainError, GraphMismatch
from haemers.models.graph import VertexLabel
from haemers.models.representation import DualRepresentation
from haemers.schemas.bounds import AuditEntry, AuditReport
from haemers.services.graphs import generalized_mycielski, named_graph, same_graph
from haemers.services.representation import intersection_dim

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearForm:
    """coef_d * d + coef_n * n with exact rational coefficients."""

    coef_d: Fraction = Fraction(0)
    coef_n: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coef_d", Fraction(self.coef_d))
        object.__setattr__(self, "coef_n", Fraction(self.coef_n))

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(self.coef_d + other.coef_d, self.coef_n + other.coef_n)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(self.coef_d - other.coef_d, self.coef_n - other.coef_n)

    def __mul__(self, scalar) -> "LinearForm":
        return LinearForm(self.coef_d * scalar, self.coef_n * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "LinearForm":
        return self * -1

    def evaluate(self, d, n) -> Fraction:
        return self.coef_d * d + self.coef_n * n

    @property
    def is_zero(self) -> bool:
        return self.coef_d == 0 and self.coef_n == 0

    def __str__(self) -> str:
        return f"{self.coef_d}*d + {self.coef_n}*n"


D_FORM = LinearForm(1, 0)
N_FORM = LinearForm(0, 1)


@dataclass
class RecursionTable:
    """Forms a_l (l >= 1), b_l (l >= 0) and c_k (0 <= k <= max(1, r-2)) for given m, r."""

    m: int
    r: int
    a: Dict[int, LinearForm] = field(default_factory=dict)
    b: Dict[int, LinearForm] = field(default_factory=dict)
    c: Dict[int, LinearForm] = field(default_factory=dict)

    def rows(self) -> List[Tuple[str, LinearForm]]:
        out = [(f"c_{k}", form) for k, form in sorted(self.c.items())]
        out += [(f"a_{l}", form) for l, form in sorted(self.a.items())]
        out += [(f"b_{l}", form) for l, form in sorted(self.b.items())]
        return out


def recursion_table(m: int, r: int) -> RecursionTable:
    """
    Build the recursion table through c_{r-2} (and at least c_1).

    Bases are a_1 = b_0 = c_0 = d and c_1 = (m+1)d - n. For k >= 2 with
    l = k // 2:

        c_2l   = (m-1)d + a_l + b_l - n,     a_{l+1} = (m-2)c_2l + a_l + 2d - n
        c_2l+1 = (m-1)d + a_{l+1} + b_l - n, b_{l+1} = (m-2)c_2l+1 + b_l + 2d - n

    b_1 comes from c_1 the same way. Every a/b form used by a c form is built
    before it.
    """
    if m < 2 or r < 2:
        raise BadParameter(f"recursion table needs m >= 2 and r >= 2, got m={m}, r={r}")
    d, n = D_FORM, N_FORM
    table = RecursionTable(m=m, r=r)
    table.c[0] = d
    table.a[1] = d
    table.b[0] = d
    table.c[1] = (m + 1) * d - n
    table.b[1] = (m - 2) * table.c[1] + table.b[0] + 2 * d - n
    for k in range(2, max(1, r - 2) + 1):
        l = k // 2
        if k % 2 == 0:
            table.c[k] = (m - 1) * d + table.a[l] + table.b[l] - n
            table.a[l + 1] = (m - 2) * table.c[k] + table.a[l] + 2 * d - n
        else:
            table.c[k] = (m - 1) * d + table.a[l + 1] + table.b[l] - n
            table.b[l + 1] = (m - 2) * table.c[k] + table.b[l] + 2 * d - n
    return table


def lemma2_residual(table: RecursionTable) -> List[LinearForm]:
    """c_k - (m-2)c_{k-1} - (m-1)c_{k-2} - 4d + 2n for every k >= 2 in the table."""
    m = table.m
    d, n = D_FORM, N_FORM
    return [
        table.c[k] - (m - 2) * table.c[k - 1] - (m - 1) * table.c[k - 2] - 4 * d + 2 * n
        for k in sorted(table.c)
        if k >= 2
    ]


def _geometric(m: int, r: int) -> int:
    return sum((m - 1) ** t for t in range(r))


def lemma3_form(table: RecursionTable) -> LinearForm:
    m, r = table.m, table.r
    d, n = D_FORM, N_FORM
    return m * (m - 2) * table.c[r - 2] + (m - 1) ** 2 * table.c[r - 4] + 4 * m * d - 2 * m * n


def lemma3_identity_check(m: int, r: int) -> bool:
    """
    m(m-2)c_{r-2} + (m-1)^2 c_{r-4} + 4dm - 2nm
        == [m S + 1] d - S n,  S = Σ_{t<r} (m-1)^t.
    """
    if r < 4 or m < 2:
        raise BadParameter(f"identity needs m >= 2 and r >= 4, got m={m}, r={r}")
    total = _geometric(m, r)
    closed = LinearForm(m * total + 1, -total)
    return lemma3_form(recursion_table(m, r)) == closed


def final_inequality(table: RecursionTable) -> LinearForm:
    """
    The closing form F with F(d, n) <= 0 for every representation of M_r(K_m).

    r = 2: (m-1)c_1 + 2d - n; r = 3: m b_1 + d - n; r >= 4: the closing identity form.
    """
    m, r = table.m, table.r
    d, n = D_FORM, N_FORM
    if r == 2:
        return (m - 1) * table.c[1] + 2 * d - n
    if r == 3:
        return m * table.b[1] + d - n
    return lemma3_form(table)


def clique_lower_bound(m: int, r: int) -> Fraction:
    """
    m + 1/Σ_{k<r} (m-1)^k, the least n/d over representations of M_r(K_m).

    For m, r >= 2 the value is cross-checked against ``final_inequality``.
    """
    if m < 1 or r < 1:
        raise BadParameter(f"clique bound needs m >= 1 and r >= 1, got m={m}, r={r}")
    bound = m + Fraction(1, _geometric(m, r))
    if m >= 2 and r >= 2:
        form = final_inequality(recursion_table(m, r))
        derived = -form.coef_d / form.coef_n
        if derived != bound:
            raise DomainError(f"closing inequality gives {derived}, closed form {bound}")
    return bound


def _mycielski_increment(h: Fraction, r: int) -> Fraction:
    total = sum((h - 1) ** k for k in range(r))
    if total == 0:
        raise DivisionByZero(f"Σ (h-1)^k vanishes for h={h}, r={r}")
    return h + 1 / total


def lift_upper_bound(h, r: int) -> Fraction:
    """h + 1/Σ_{k<r} (h-1)^k: the value reached by lifting a representation of value h."""
    h = Fraction(h)
    if h < 1 or r < 1:
        raise BadParameter(f"lift bound needs h >= 1 and r >= 1, got h={h}, r={r}")
    return _mycielski_increment(h, r)


def tardif_chi(chi, r: int) -> Fraction:
    """Fractional chromatic number of M_r(G) from χ_f(G)."""
    chi = Fraction(chi)
    if chi < 1 or r < 1:
        raise BadParameter(f"needs chi >= 1 and r >= 1, got chi={chi}, r={r}")
    return _mycielski_increment(chi, r)


def lpu_chi(chi) -> Fraction:
    return tardif_chi(chi, 2)


def _theta_argument(theta):
    return 1 - sympy.Rational(27, 4) / theta + sympy.Rational(27, 4) / theta**2


def theta_mycielski2_precise(theta, digits: Optional[int] = None) -> sympy.Float:
    """
    Lovász theta of M_2(G) from θ = θ(G):

        (4/3) θ cos(arccos(1 - 27/(4θ) + 27/(4θ²)) / 3) - θ/3 + 1

    Evaluated with sympy to ``digits`` significant digits, by default
    ``settings.theta_precision_digits``.

    Raises:
        DomainError: θ < 1 or the arccos argument leaves [-1, 1].
    """
    theta = sympy.nsimplify(theta) if isinstance(theta, float) else sympy.sympify(theta)
    if theta < 1:
        raise DomainError(f"theta must be at least 1, got {theta}")
    argument = _theta_argument(theta)
    if argument < -1 or argument > 1:
        raise DomainError(f"arccos argument {argument} outside [-1, 1] for theta={theta}")
    expression = (
        sympy.Rational(4, 3) * theta * sympy.cos(sympy.acos(argument) / 3) - theta / 3 + 1
    )
    return sympy.Float(expression.evalf(digits or settings.theta_precision_digits))


def theta_mycielski2(theta) -> float:
    """theta_mycielski2_precise rounded to a float."""
    return float(theta_mycielski2_precise(theta))


def theta_mycielski2_float(theta: float) -> float:
    """Double precision evaluation with ``math``; used to cross-check the sympy path."""
    argument = 1 - 27 / (4 * theta) + 27 / (4 * theta**2)
    if not -1 <= argument <= 1:
        raise DomainError(f"arccos argument {argument} outside [-1, 1] for theta={theta}")
    return 4 / 3 * theta * math.cos(math.acos(argument) / 3) - theta / 3 + 1


def _complete_labels(m: int, r: int) -> Tuple[List[VertexLabel], Dict[Tuple[int, int], VertexLabel]]:
    base = named_graph(GraphKind.COMPLETE, m)
    cells = {
        (i, t): VertexLabel.at_level(v, t) for i, v in enumerate(base.vertices) for t in range(r)
    }
    return list(base.vertices), cells


def _measured_chains(table: RecursionTable) -> List[Tuple[str, LinearForm, List[int]]]:
    """(entry name, form, levels intersected) for every entry measurable in M_r."""
    r = table.r
    chains = []
    for k, form in sorted(table.c.items()):
        if k <= r - 1:
            chains.append((f"c_{k}", form, list(range(k + 1))))
    for l, form in sorted(table.a.items()):
        if 2 * l - 1 <= r - 1:
            chains.append((f"a_{l}", form, [2 * t + 1 for t in range(l)]))
    for l, form in sorted(table.b.items()):
        if 2 * l <= r - 1:
            chains.append((f"b_{l}", form, [2 * t for t in range(l + 1)]))
    return chains


def audit_against_table(rep: DualRepresentation, table: RecursionTable) -> AuditReport:
    """
    Compare measured intersection dimensions of a representation of
    M_r(K_m) with the recursion lower bounds evaluated at (d, n).

    Raises:
        GraphMismatch: ``rep.graph`` is not M_r(K_m) with Mycielski labels.
    """
    m, r = table.m, table.r
    expected = generalized_mycielski(named_graph(GraphKind.COMPLETE, m), r)
    if not same_graph(rep.graph, expected):
        raise GraphMismatch(f"representation graph is not M_{r}(K_{m})")
    base, cells = _complete_labels(m, r)
    d, n = rep.local_dim, rep.ambient
    report = AuditReport(m=m, r=r, n=n, d=d)
    for name, form, levels in _measured_chains(table):
        bound = form.evaluate(d, n)
        for i, vertex in enumerate(base):
            measured = intersection_dim(rep, [[cells[(i, t)]] for t in levels])
            report.entries.append(
                AuditEntry(
                    index=str(vertex),
                    quantity=name,
                    form=str(form),
                    bound=str(bound),
                    measured=measured,
                    ok=measured >= bound,
                )
            )
    if report.violations:
        logger.warning(f"Audit found {len(report.violations)} violated inequalities")
    return report


def table_lines(table: RecursionTable) -> Sequence[str]:
    return [f"{name} = {form}" for name, form in table.rows()]
