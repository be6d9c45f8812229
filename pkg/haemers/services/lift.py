"""
Lifting a dual (n, d)-representation of G to one of M_r(G).

Everything is built inside F^(n*M) = F^n ⊗ F^M. Coordinate block j (1-based,
width n) is F^n ⊗ e^(j); Γ[a, b] selects the blocks a..b. The tail term is
span(e_1) ⊗ Γ[a_{r-1}+1, M]: the first coordinate of every tail block.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from haemers.constants.graphs import VertexClass
from haemers.core.exceptions import BadParameter, GraphMismatch, InvalidInput, InvariantViolation
from haemers.models.graph import VertexLabel
from haemers.models.matrix import Subspace
from haemers.models.representation import DualRepresentation
from haemers.schemas.lift import ClassDimensions, LiftDimensionReport, LiftPlan
from haemers.services.graphs import generalized_mycielski, join_relabeling
from haemers.services.linalg import (
    coordinate_subspace,
    gamma_interval,
    subspace_sum_all,
    subspace_tensor,
)
from haemers.services.representation import (
    compress,
    join_reps,
    relabel,
    standard_complete_rep,
    verify,
)
from haemers.utils.parallel import map_ordered

logger = logging.getLogger(__name__)

TAIL_EMBEDDING = "span(e_1) (x) Gamma[a_{r-1}+1, M]"

Interval = Tuple[int, int]


def lift_plan(n: int, d: int, r: int) -> LiftPlan:
    """
    Index data for lifting an (n, d)-representation to M_r.

    a_i = Σ_{j<=i} d^(2r-2-j) (n-d)^j, M = a_{r-1} + d^(2r-1),
    N = n a_{r-1} + d^(2r-1), D = Σ_{i<r} d^(2r-1-i) (n-d)^i.

    Raises:
        BadParameter: r < 2 or not n > d >= 1.
        InvariantViolation: N/D differs from n/d + 1/Σ_{i<r} (n/d - 1)^i.
    """
    if r < 2:
        raise BadParameter(f"lift plan needs r >= 2, got {r}")
    if not n > d >= 1:
        raise BadParameter(f"lift plan needs n > d >= 1, got n={n}, d={d}")
    a = [0]
    for i in range(r):
        a.append(sum(d ** (2 * r - 2 - j) * (n - d) ** j for j in range(i + 1)))
    top = a[-1]
    tail = d ** (2 * r - 1)
    D = sum(d ** (2 * r - 1 - i) * (n - d) ** i for i in range(r))
    plan = LiftPlan(
        r=r,
        n=n,
        d=d,
        a=a,
        M=top + tail,
        N=n * top + tail,
        D=D,
        tail_start=top + 1,
        tail_end=top + tail,
        tail_embedding=TAIL_EMBEDDING,
    )
    if any(x >= y for x, y in zip(a, a[1:])):
        raise InvariantViolation(f"a-sequence {a[1:]} is not strictly increasing")
    h = Fraction(n, d)
    expected = h + 1 / sum((h - 1) ** i for i in range(r))
    if plan.ratio != expected:
        raise InvariantViolation(f"N/D = {plan.ratio} but the lift bound is {expected}")
    return plan


def lift_bound(value: Fraction, r: int) -> Fraction:
    return value + 1 / sum((value - 1) ** i for i in range(r))


class _LiftBuilder:
    """Assembles the lifted subspaces for one plan, caching the shared blocks."""

    def __init__(self, rep: DualRepresentation, plan: LiftPlan):
        self.rep = rep
        self.plan = plan
        self.field = rep.field
        self.spread = subspace_sum_all(rep.field, rep.ambient, rep.spaces.values())
        self.tail = self._tail()
        self.by_name = {str(v): v for v in rep.graph.vertices}
        self._blocks: Dict[Tuple[Interval, ...], Subspace] = {}

    def gamma(self, lo: int, hi: int) -> Subspace:
        return gamma_interval(self.field, self.plan.M, lo, hi)

    def _tail(self) -> Subspace:
        n = self.plan.n
        columns = [(j - 1) * n for j in range(self.plan.tail_start, self.plan.tail_end + 1)]
        return coordinate_subspace(self.field, n * self.plan.M, columns)

    def spread_over(self, intervals: Tuple[Interval, ...]) -> Subspace:
        """(Σ_w X_w) ⊗ Σ Γ[interval]; the empty sum is zero."""
        if intervals not in self._blocks:
            ambient = self.plan.n * self.plan.M
            parts = [subspace_tensor(self.spread, self.gamma(lo, hi)) for lo, hi in intervals]
            self._blocks[intervals] = subspace_sum_all(self.field, ambient, parts)
        return self._blocks[intervals]

    def even_intervals(self, count: int) -> Tuple[Interval, ...]:
        a = self.plan.a_at
        return tuple((a(2 * i - 1) + 1, a(2 * i)) for i in range(count))

    def odd_intervals(self, count: int) -> Tuple[Interval, ...]:
        a = self.plan.a_at
        return tuple((a(2 * i) + 1, a(2 * i + 1)) for i in range(count))

    def vertex_space(self, label: VertexLabel) -> Subspace:
        plan, a = self.plan, self.plan.a_at
        ambient = plan.n * plan.M
        r = plan.r
        if label.is_apex:
            if r % 2 == 0:
                return self.spread_over(self.even_intervals(r // 2))
            return subspace_sum_all(
                self.field, ambient, [self.spread_over(self.odd_intervals(r // 2)), self.tail]
            )
        k = label.level
        base = self.by_name[label.name]
        own = subspace_tensor(self.rep.spaces[base], self.gamma(a(k - 1) + 1, a(r - 1)))
        if k % 2 == 0:
            return subspace_sum_all(
                self.field, ambient, [self.spread_over(self.even_intervals(k // 2)), own]
            )
        return subspace_sum_all(
            self.field, ambient, [self.spread_over(self.odd_intervals(k // 2)), own, self.tail]
        )


def _edgeless_lift(rep: DualRepresentation, r: int) -> DualRepresentation:
    """M_r of an edgeless graph: a star at z plus isolated vertices, value 2."""
    target = generalized_mycielski(rep.graph, r)
    centre = coordinate_subspace(rep.field, 2, [0])
    leaf = coordinate_subspace(rep.field, 2, [1])
    spaces = {v: centre if v.is_apex else leaf for v in target.vertices}
    return DualRepresentation(target, rep.field, 2, 1, spaces)


def _single_level_lift(rep: DualRepresentation) -> DualRepresentation:
    """M_1(G) = G + K_1 through join_reps, relabelled to Mycielski labels."""
    apex_rep = standard_complete_rep(1, rep.field)
    joined = join_reps(rep, apex_rep)
    rename = join_relabeling(rep.graph, apex_rep.graph)
    mapping = {v: VertexLabel.at_level(v, 0) for v in rep.graph.vertices}
    mapping[rename[apex_rep.graph.vertices[0]]] = VertexLabel.apex()
    return relabel(joined, mapping)


def lift(rep: DualRepresentation, r: int, check: bool = True) -> DualRepresentation:
    """
    Dual representation of M_r(G) from a valid representation of G.

    The input is compressed first so that Σ_v X_v = F^n. The result is
    verified (unless ``check`` is false), every subspace is checked to have
    dimension D, and the compressed representation is returned.

    Raises:
        InvalidInput: ``rep`` fails verification.
        BadParameter: r < 1.
        InvariantViolation: the constructed representation fails a check.
    """
    if r < 1:
        raise BadParameter(f"lift needs r >= 1, got {r}")
    report = verify(rep)
    if not report.valid:
        raise InvalidInput(f"input representation is invalid at {len(report.failures)} vertices")
    if r == 1:
        logger.warning("r = 1: lifting by a join with K_1")
        return _single_level_lift(rep)
    if rep.graph.edge_count == 0:
        logger.warning("Edgeless input graph: using the star construction")
        return _edgeless_lift(rep, r)

    base = compress(rep)
    plan = lift_plan(base.ambient, base.local_dim, r)
    logger.info(f"Lift plan: n={plan.n} d={plan.d} r={r} M={plan.M} N={plan.N} D={plan.D}")
    target = generalized_mycielski(base.graph, r)
    builder = _LiftBuilder(base, plan)
    assembled = map_ordered(builder.vertex_space, target.vertices)
    lifted = DualRepresentation(
        target, base.field, plan.n * plan.M, plan.D, dict(zip(target.vertices, assembled))
    )
    if check:
        lifted_report = verify(lifted)
        if not lifted_report.valid:
            raise InvariantViolation(
                f"lifted representation is invalid at {', '.join(c.vertex for c in lifted_report.failures)}"
            )
    dims = assert_lift_dimensions(lifted, plan)
    if not dims.valid:
        raise InvariantViolation(f"lifted dimensions do not match D={plan.D}: {dims.classes}")
    result = compress(lifted)
    logger.info(f"Lifted to M_{r}: ({result.ambient}, {result.local_dim}), value {result.value}")
    return result


def vertex_class(label: VertexLabel) -> str:
    if label.is_apex:
        return VertexClass.APEX
    if not label.is_level:
        raise GraphMismatch(f"{label} is not a Mycielski label")
    if label.level == 0:
        return VertexClass.LEVEL0
    if label.level == 1:
        return VertexClass.LEVEL1
    return VertexClass.EVEN if label.level % 2 == 0 else VertexClass.ODD


def assert_lift_dimensions(lifted: DualRepresentation, plan: LiftPlan) -> LiftDimensionReport:
    """
    Per-class dimension check of a lifted representation.

    Every subspace must have dimension D and the total span at most N.
    """
    classes: Dict[str, ClassDimensions] = {}
    for label in lifted.graph.vertices:
        name = vertex_class(label)
        classes.setdefault(name, ClassDimensions(vertex_class=name)).dims.append(
            lifted.spaces[label].dim
        )
    total = subspace_sum_all(lifted.field, lifted.ambient, lifted.spaces.values()).dim
    valid = total <= plan.N and all(
        dim == plan.D for group in classes.values() for dim in group.dims
    )
    return LiftDimensionReport(
        valid=valid,
        expected_dim=plan.D,
        bound_N=plan.N,
        total_span_dim=total,
        classes=classes,
    )


def class_dims(report: LiftDimensionReport) -> List[Tuple[str, List[int]]]:
    return [(name, group.distinct) for name, group in sorted(report.classes.items())]
