"""
Exact fractional chromatic number.

χ_f(G) = min Σ_S w_S over maximal independent sets S with Σ_{S ∋ v} w_S >= 1.
The solver works on the dual packing problem

    max Σ_v y_v   s.t.   Σ_{v in S} y_v <= 1 for every S,   y >= 0,

which is feasible at y = 0, so no first phase is needed. Both programs have
the same optimum; the covering weights are read off the final tableau.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

import networkx as nx

from haemers.core.config import settings
from haemers.core.exceptions import InvariantViolation, TooLarge
from haemers.models.graph import Graph, VertexLabel
from haemers.services.graphs import complement, to_networkx

logger = logging.getLogger(__name__)

VertexSet = Tuple[VertexLabel, ...]


@dataclass
class LPInstance:
    """Covering LP: one column per maximal independent set, one row per vertex."""

    vertices: List[VertexLabel]
    columns: List[VertexSet]


@dataclass
class LPSolution:
    value: Fraction
    weights: Dict[VertexSet, Fraction] = field(default_factory=dict)
    packing: Dict[VertexLabel, Fraction] = field(default_factory=dict)
    pivots: int = 0


def _check_cap(g: Graph) -> None:
    if g.order > settings.chif_max_vertices:
        raise TooLarge(
            f"fractional chromatic number is capped at {settings.chif_max_vertices} vertices, "
            f"graph has {g.order}"
        )


def maximal_independent_sets(g: Graph) -> List[VertexSet]:
    """
    All maximal independent sets, as maximal cliques of the complement.

    Each set lists its vertices in graph order and the list is sorted by
    vertex positions.
    """
    _check_cap(g)
    if g.order == 0:
        return []
    by_name = {str(v): v for v in g.vertices}
    position = g.index
    found = []
    for clique in nx.find_cliques(to_networkx(complement(g))):
        labels = sorted((by_name[name] for name in clique), key=position.__getitem__)
        found.append(tuple(labels))
    found.sort(key=lambda labels: [position[v] for v in labels])
    return found


def build_lp(g: Graph) -> LPInstance:
    return LPInstance(vertices=list(g.vertices), columns=maximal_independent_sets(g))


class SimplexTableau:
    """
    Dictionary-form simplex with Bland's rule over Fractions.

    Row i reads x_{basic[i]} = b[i] - Σ_j A[i][j] x_{nonbasic[j]} and the
    objective is value + Σ_j c[j] x_{nonbasic[j]}.
    """

    def __init__(self, A: List[List[Fraction]], b: List[Fraction], c: List[Fraction]):
        self.m = len(A)
        self.n = len(c)
        self.A = [list(row) for row in A]
        self.b = list(b)
        self.c = list(c)
        self.value = Fraction(0)
        self.nonbasic = list(range(self.n))
        self.basic = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        delta = self.c[j] / piv
        self.value += delta * self.b[i]
        for l in range(self.n):
            self.c[l] -= delta * self.A[i][l]
        self.c[j] = -delta
        for l in range(self.n):
            self.A[i][l] = 1 / piv if l == j else self.A[i][l] / piv
        self.b[i] /= piv
        for k in range(self.m):
            if k == i or self.A[k][j] == 0:
                continue
            f = self.A[k][j]
            for l in range(self.n):
                self.A[k][l] = -f / piv if l == j else self.A[k][l] - f * self.A[i][l]
            self.b[k] -= f * self.b[i]
        self.nonbasic[j], self.basic[i] = self.basic[i], self.nonbasic[j]
        self.pivots += 1

    def step(self) -> bool:
        """One Bland step; False once optimal."""
        entering = [(self.nonbasic[j], j) for j in range(self.n) if self.c[j] > 0]
        if not entering:
            return False
        _, j = min(entering)
        leaving = [
            (self.b[i] / self.A[i][j], self.basic[i], i) for i in range(self.m) if self.A[i][j] > 0
        ]
        if not leaving:
            raise InvariantViolation("packing LP reported unbounded")
        _, _, i = min(leaving)
        self.pivot(i, j)
        return True

    def solve(self) -> Fraction:
        while self.step():
            pass
        return self.value

    def primal_values(self) -> List[Fraction]:
        """Values of the original variables 0..n-1."""
        values = [Fraction(0)] * (self.n + self.m)
        for i, var in enumerate(self.basic):
            values[var] = self.b[i]
        return values[: self.n]

    def dual_values(self) -> List[Fraction]:
        """Prices of the m constraints, from the reduced costs of the slacks."""
        prices = [Fraction(0)] * self.m
        for j, var in enumerate(self.nonbasic):
            if var >= self.n:
                prices[var - self.n] = -self.c[j]
        return prices


def solve_lp(instance: LPInstance) -> LPSolution:
    if not instance.columns:
        return LPSolution(value=Fraction(0))
    position = {v: i for i, v in enumerate(instance.vertices)}
    A = []
    for column in instance.columns:
        row = [Fraction(0)] * len(instance.vertices)
        for v in column:
            row[position[v]] = Fraction(1)
        A.append(row)
    tableau = SimplexTableau(
        A, [Fraction(1)] * len(instance.columns), [Fraction(1)] * len(instance.vertices)
    )
    value = tableau.solve()
    weights = dict(zip(instance.columns, tableau.dual_values()))
    packing = dict(zip(instance.vertices, tableau.primal_values()))
    if sum(weights.values()) != value:
        raise InvariantViolation(f"covering weights sum to {sum(weights.values())}, optimum {value}")
    logger.debug(f"LP with {len(instance.columns)} columns solved in {tableau.pivots} pivots")
    return LPSolution(value=value, weights=weights, packing=packing, pivots=tableau.pivots)


def fractional_coloring(g: Graph) -> LPSolution:
    """Optimal fractional colouring: χ_f(g) with a weighting of maximal independent sets."""
    return solve_lp(build_lp(g))


def fractional_chromatic(g: Graph) -> Fraction:
    """
    Raises:
        TooLarge: more vertices than ``settings.chif_max_vertices``.
    """
    return fractional_coloring(g).value
