"""
Exhaustive search for dual (n, d)-representations over small prime fields.

The search is the ground truth for the constructive modules: a "not found"
verdict is only returned after the whole tree has been explored.
"""
import itertools
import logging
from typing import Dict, FrozenSet, List, Optional

import numpy as np

from haemers.core.config import settings
from haemers.core.exceptions import BadParameter, BudgetExhausted, InvariantViolation, TooLarge
from haemers.models.field import FieldSpec
from haemers.models.graph import Graph, VertexLabel, iter_bits
from haemers.models.matrix import Matrix, Subspace
from haemers.models.representation import DualRepresentation
from haemers.schemas.search import SearchConfig, SearchResult
from haemers.services.linalg import dim_of_sum, zero_subspace
from haemers.services.representation import verify

logger = logging.getLogger(__name__)

RANK_MEMO_LIMIT = 500_000


def gaussian_binomial(n: int, d: int, p: int) -> int:
    """Number of d-dimensional subspaces of GF(p)^n."""
    if d < 0 or d > n:
        return 0
    numerator, denominator = 1, 1
    for i in range(d):
        numerator *= p ** (n - i) - 1
        denominator *= p ** (d - i) - 1
    return numerator // denominator


def enumerate_subspaces(p: int, n: int, d: int, cap: Optional[int] = None) -> List[Subspace]:
    """
    Every d-dimensional subspace of GF(p)^n, each built directly in RREF.

    For each choice of pivot columns the free entries (right of the pivot,
    outside pivot columns) range over GF(p). The list is sorted by basis
    entries, which fixes the lexicographic order the search relies on.

    Raises:
        TooLarge: more candidates than ``cap`` (default ``settings.search_max_subspaces``).
    """
    field = FieldSpec.prime(p)
    if not 0 <= d <= n:
        raise BadParameter(f"no {d}-dimensional subspaces in dimension {n}")
    cap = settings.search_max_subspaces if cap is None else cap
    count = gaussian_binomial(n, d, p)
    if count > cap:
        raise TooLarge(f"GF({p})^{n} has {count} subspaces of dimension {d}, cap is {cap}")
    if d == 0:
        return [zero_subspace(field, n)]
    found = []
    for pivots in itertools.combinations(range(n), d):
        free = [
            (row, col)
            for row, pivot in enumerate(pivots)
            for col in range(pivot + 1, n)
            if col not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free)):
            basis = np.zeros((d, n), dtype=np.int64)
            basis[np.arange(d), list(pivots)] = 1
            for (row, col), x in zip(free, values):
                basis[row, col] = x
            found.append(Subspace(field, n, Matrix.from_array(field, basis)))
    found.sort(key=lambda s: s.basis.entries)
    logger.debug(f"Enumerated {len(found)} subspaces of dimension {d} in GF({p})^{n}")
    return found


def search_order(g: Graph) -> List[VertexLabel]:
    """
    Vertex order of the search: highest degree first, ties broken by the
    number of neighbours already placed, then by original position.
    """
    remaining = set(range(g.order))
    placed = 0
    order = []
    degrees = g.degrees()
    while remaining:
        nxt = min(
            remaining,
            key=lambda v: (-degrees[v], -bin(g.adjacency[v] & placed).count("1"), v),
        )
        order.append(nxt)
        remaining.discard(nxt)
        placed |= 1 << nxt
    return [g.vertices[i] for i in order]


class _Search:
    """Depth-first assignment of candidate subspaces in a fixed vertex order."""

    def __init__(self, g: Graph, config: SearchConfig, candidates: List[Subspace]):
        self.g = g
        self.config = config
        self.field = FieldSpec.prime(config.p)
        self.candidates = candidates
        self.order = [g.position(v) for v in search_order(g)]
        self.assigned: Dict[int, int] = {}
        self.nodes = 0
        self._ranks: Dict[FrozenSet[int], int] = {}

    def _rank(self, chosen: FrozenSet[int]) -> int:
        """dim of the sum of the candidates with the given indices, memoised."""
        if chosen not in self._ranks:
            if len(self._ranks) > RANK_MEMO_LIMIT:
                self._ranks.clear()
            spaces = (self.candidates[i] for i in chosen)
            self._ranks[chosen] = dim_of_sum(self.field, self.config.n, spaces)
        return self._ranks[chosen]

    def _independent(self, space: int, others: List[int]) -> bool:
        """Whether X_space ∩ Σ X_others = {0}."""
        if not others:
            return True
        rest = frozenset(others)
        return self._rank(rest | {space}) == self.config.d + self._rank(rest)

    def _consistent(self, vertex: int) -> bool:
        """Check the new vertex and every assigned neighbour against assigned neighbours."""
        adjacency = self.g.adjacency
        touched = [vertex] + [w for w in iter_bits(adjacency[vertex]) if w in self.assigned]
        for v in touched:
            others = [self.assigned[w] for w in iter_bits(adjacency[v]) if w in self.assigned]
            if not self._independent(self.assigned[v], others):
                return False
        return True

    def run(self, step: int = 0) -> bool:
        if step == len(self.order):
            return True
        vertex = self.order[step]
        count = 1 if step == 0 and self.config.symmetric else len(self.candidates)
        for space in range(count):
            self.nodes += 1
            if self.nodes > self.config.node_budget:
                raise BudgetExhausted(
                    f"search budget of {self.config.node_budget} nodes exhausted", nodes=self.nodes
                )
            self.assigned[vertex] = space
            if self._consistent(vertex) and self.run(step + 1):
                return True
            del self.assigned[vertex]
        return False


def exists_representation(
    g: Graph,
    p: int,
    n: int,
    d: int,
    node_budget: Optional[int] = None,
    symmetric: bool = False,
) -> SearchResult:
    """
    Decide whether ``g`` has a dual (n, d)-representation over GF(p).

    Candidates are tried in lexicographic order, so the witness is the
    lexicographically first one in the search order. With ``symmetric`` the
    first vertex is fixed to the least candidate; GL(n, p) acts transitively
    on d-subspaces, so this loses no solutions.

    Raises:
        BudgetExhausted: the node budget ran out before the search finished.
        TooLarge: the candidate pool exceeds the configured cap.
    """
    if d < 1 or n < 0:
        raise BadParameter(f"search needs n >= 0 and d >= 1, got n={n}, d={d}")
    overrides = {} if node_budget is None else {"node_budget": node_budget}
    config = SearchConfig(p=p, n=n, d=d, symmetric=symmetric, **overrides)
    field = FieldSpec.prime(p)
    if d > n:
        return SearchResult(found=False, nodes=0)
    if g.order == 0:
        witness = DualRepresentation(g, field, n, d, {})
        return SearchResult(found=True, witness=witness, nodes=0)
    candidates = enumerate_subspaces(p, n, d, cap=config.max_subspaces)
    search = _Search(g, config, candidates)
    found = search.run()
    logger.info(
        f"exists({g.order} vertices, GF({p}), n={n}, d={d}): {found} after {search.nodes} nodes"
    )
    if not found:
        return SearchResult(found=False, nodes=search.nodes)
    spaces = {g.vertices[v]: candidates[i] for v, i in search.assigned.items()}
    witness = DualRepresentation(g, field, n, d, spaces)
    if not verify(witness).valid:
        raise InvariantViolation("search produced a witness that fails verification")
    return SearchResult(found=True, witness=witness, nodes=search.nodes)


def min_ambient(
    g: Graph,
    p: int,
    d: int,
    n_max: int,
    node_budget: Optional[int] = None,
    symmetric: bool = False,
) -> Optional[int]:
    """
    Least n <= n_max admitting a dual (n, d)-representation over GF(p), or None.

    Raises:
        BudgetExhausted: some size could not be decided within the budget.
    """
    for n in range(d, n_max + 1):
        result = exists_representation(g, p, n, d, node_budget=node_budget, symmetric=symmetric)
        if result.found:
            return n
    return None


def haemers_number(g: Graph, p: int, n_max: Optional[int] = None) -> Optional[int]:
    """Non-fractional bound: least n with a dual (n, 1)-representation over GF(p)."""
    return min_ambient(g, p, 1, g.order if n_max is None else n_max)
