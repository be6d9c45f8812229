"""
Exact linear algebra over GF(p) and Q.

All operations are pure. Elimination runs on numpy arrays: ``int64`` residues
for prime fields (products stay below 2^62 for p < 2^31) and ``object``
arrays of ``Fraction`` for the rationals, so every field shares one code path.
"""
import itertools
import logging
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from haemers.core.exceptions import AmbientMismatch, FieldMismatch, IndexOutOfRange
from haemers.models.field import FieldSpec
from haemers.models.matrix import Matrix, Subspace, guard_cells

logger = logging.getLogger(__name__)


def _rref_array(field: FieldSpec, array: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Gauss-Jordan elimination; returns the nonzero RREF rows and pivot columns."""
    guard_cells(*array.shape)
    work = np.array(array, dtype=field.dtype, copy=True)
    n_rows, n_cols = work.shape
    pivots: List[int] = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        candidates = np.flatnonzero(work[row:, col] != 0)
        if candidates.size == 0:
            continue
        pick = row + int(candidates[0])
        if pick != row:
            work[[row, pick]] = work[[pick, row]]
        work[row] = field.reduce(work[row] * field.inverse(work[row, col]))
        hits = np.flatnonzero(work[:, col] != 0)
        hits = hits[hits != row]
        if hits.size:
            work[hits] = field.reduce(work[hits] - np.outer(work[hits, col], work[row]))
        pivots.append(col)
        row += 1
    return work[:row], pivots


def _check_pair(a: Subspace, b: Subspace) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"subspaces over {a.field} and {b.field}")
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"ambient dimensions {a.ambient} and {b.ambient} differ")


def _from_rref(field: FieldSpec, ambient: int, reduced: np.ndarray) -> Subspace:
    return Subspace(field, ambient, Matrix.from_array(field, reduced))


def rref(m: Matrix) -> Tuple[Matrix, int]:
    """
    Reduced row echelon form of ``m``.

    Returns:
        The RREF with zero rows dropped, and the rank.
    """
    reduced, pivots = _rref_array(m.field, m.array)
    return Matrix.from_array(m.field, reduced), len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def subspace_span(m: Matrix) -> Subspace:
    """Canonical row space of ``m``."""
    reduced, _ = _rref_array(m.field, m.array)
    return _from_rref(m.field, m.cols, reduced)


def span_rows(field: FieldSpec, ambient: int, rows: Iterable[Sequence]) -> Subspace:
    return subspace_span(Matrix.from_rows(field, rows, cols=ambient))


def zero_subspace(field: FieldSpec, ambient: int) -> Subspace:
    return Subspace(field, ambient, Matrix(field, 0, ambient, ()))


def full_subspace(field: FieldSpec, ambient: int) -> Subspace:
    return Subspace(field, ambient, Matrix.identity(field, ambient))


def subspace_sum_all(field: FieldSpec, ambient: int, spaces: Iterable[Subspace]) -> Subspace:
    """
    Sum of any number of subspaces.

    Bases are stacked until the pending rows exceed ``ambient`` and then
    folded into the running RREF, so the matrix handed to elimination never
    has more than ``2 * ambient`` rows however many summands there are.
    """
    pending: List[np.ndarray] = []
    rows = 0
    for space in spaces:
        if space.field != field:
            raise FieldMismatch(f"summand over {space.field}, expected {field}")
        if space.ambient != ambient:
            raise AmbientMismatch(f"summand in ambient {space.ambient}, expected {ambient}")
        if not space.dim:
            continue
        pending.append(space.basis.array)
        rows += space.dim
        if rows > ambient and len(pending) > 1:
            reduced, _ = _rref_array(field, np.vstack(pending))
            pending, rows = [reduced], reduced.shape[0]
    if not pending:
        return zero_subspace(field, ambient)
    if len(pending) == 1:
        return _from_rref(field, ambient, pending[0])
    reduced, _ = _rref_array(field, np.vstack(pending))
    return _from_rref(field, ambient, reduced)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_pair(a, b)
    return subspace_sum_all(a.field, a.ambient, (a, b))


def dim_of_sum(field: FieldSpec, ambient: int, spaces: Iterable[Subspace]) -> int:
    return subspace_sum_all(field, ambient, spaces).dim


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """
    Intersection by the Zassenhaus method.

    Stacking ``[A | A]`` over ``[B | 0]`` and eliminating, the rows whose left
    half vanishes carry a basis of A ∩ B in their right half.
    """
    _check_pair(a, b)
    field, n = a.field, a.ambient
    if a.dim == 0 or b.dim == 0:
        return zero_subspace(field, n)
    top = np.hstack([a.basis.array, a.basis.array])
    bottom = np.hstack([b.basis.array, field.zeros(b.basis.array.shape)])
    reduced, pivots = _rref_array(field, np.vstack([top, bottom]))
    meet = [i for i, col in enumerate(pivots) if col >= n]
    if not meet:
        return zero_subspace(field, n)
    reduced_meet, _ = _rref_array(field, reduced[meet, n:])
    return _from_rref(field, n, reduced_meet)


def intersect_all(spaces: Sequence[Subspace]) -> Subspace:
    if not spaces:
        raise IndexOutOfRange("intersection of an empty family")
    result = spaces[0]
    for space in spaces[1:]:
        if result.dim == 0:
            _check_pair(result, space)
            continue
        result = subspace_intersect(result, space)
    return result


def intersection_dimension(a: Subspace, b: Subspace) -> int:
    """dim(A ∩ B) from the Grassmann identity, without building the intersection."""
    _check_pair(a, b)
    if a.dim == 0 or b.dim == 0:
        return 0
    return a.dim + b.dim - dim_of_sum(a.field, a.ambient, (a, b))


def subspace_tensor(a: Subspace, b: Subspace) -> Subspace:
    """
    A ⊗ B inside F^(n·m) for A ⊆ F^n, B ⊆ F^m.

    Coordinates follow v ⊗ w = (w_1 v, ..., w_m v): entry ``j*n + i`` is
    ``w_j * v_i``.
    """
    if a.field != b.field:
        raise FieldMismatch(f"tensor of subspaces over {a.field} and {b.field}")
    field = a.field
    ambient = a.ambient * b.ambient
    rows = a.dim * b.dim
    guard_cells(rows, ambient)
    if rows == 0:
        return zero_subspace(field, ambient)
    left, right = a.basis.array, b.basis.array
    products = right[:, None, :, None] * left[None, :, None, :]
    products = field.reduce(products.reshape(rows, ambient))
    reduced, _ = _rref_array(field, products)
    return _from_rref(field, ambient, reduced)


def gamma_interval(field: FieldSpec, M: int, a: int, b: int) -> Subspace:
    """Γ[a, b] = span{e^(a), ..., e^(b)} in F^M, 1-based and inclusive."""
    if not 1 <= a <= b <= M:
        raise IndexOutOfRange(f"interval [{a}, {b}] is not inside [1, {M}]")
    basis = field.zeros((b - a + 1, M))
    basis[np.arange(b - a + 1), np.arange(a - 1, b)] = field.scalar(1)
    return _from_rref(field, M, basis)


def coordinate_subspace(field: FieldSpec, ambient: int, columns: Iterable[int]) -> Subspace:
    """Span of the 0-based standard basis vectors listed in ``columns``."""
    columns = sorted(set(columns))
    if columns and not 0 <= columns[0] <= columns[-1] < ambient:
        raise IndexOutOfRange(f"coordinates {columns} outside ambient {ambient}")
    basis = field.zeros((len(columns), ambient))
    basis[np.arange(len(columns)), columns] = field.scalar(1)
    return _from_rref(field, ambient, basis)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    _check_pair(a, b)
    return a.basis == b.basis


def contains(space: Subspace, vector: Sequence) -> bool:
    field = space.field
    row = [field.scalar(x) for x in vector]
    if len(row) != space.ambient:
        raise AmbientMismatch(f"vector of length {len(row)} in ambient {space.ambient}")
    extended = subspace_sum(space, span_rows(field, space.ambient, [row]))
    return extended.dim == space.dim


def embed(space: Subspace, ambient: int, offset: int) -> Subspace:
    """Copy ``space`` onto coordinates ``offset .. offset+space.ambient-1`` of F^ambient."""
    if offset < 0 or offset + space.ambient > ambient:
        raise IndexOutOfRange(
            f"block of width {space.ambient} at offset {offset} does not fit ambient {ambient}"
        )
    basis = space.field.zeros((space.dim, ambient))
    basis[:, offset:offset + space.ambient] = space.basis.array
    return _from_rref(space.field, ambient, basis)


def restrict_columns(space: Subspace, columns: Sequence[int]) -> Subspace:
    """Image of ``space`` under the coordinate projection onto ``columns``."""
    columns = list(columns)
    if space.dim == 0:
        return zero_subspace(space.field, len(columns))
    projected = space.basis.array[:, columns]
    reduced, _ = _rref_array(space.field, projected)
    return _from_rref(space.field, len(columns), reduced)


def span_vectors(space: Subspace) -> Iterator[Tuple[int, ...]]:
    """Every vector of a subspace over a prime field."""
    if space.field.is_rational:
        raise FieldMismatch("vector enumeration needs a finite field")
    p = space.field.p
    basis = space.basis.array
    for coefficients in itertools.product(range(p), repeat=space.dim):
        if space.dim == 0:
            yield (0,) * space.ambient
            continue
        vector = np.asarray(coefficients, dtype=np.int64) @ basis % p
        yield tuple(int(x) for x in vector)
