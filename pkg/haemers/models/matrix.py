"""Exact matrices and canonical subspaces."""
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from haemers.core.config import settings
from haemers.core.exceptions import CapExceeded, BadParameter
from haemers.models.field import FieldSpec


def guard_cells(rows: int, cols: int) -> None:
    """Reject matrices above the configured entry cap."""
    if rows * cols > settings.max_cells:
        raise CapExceeded(
            f"matrix of {rows}x{cols} = {rows * cols} entries exceeds "
            f"max_cells={settings.max_cells} (set HAEMERS_MAX_CELLS to raise it)"
        )


@dataclass(frozen=True)
class Matrix:
    """Row-major matrix whose entries are canonical scalars of ``field``."""

    field: FieldSpec
    rows: int
    cols: int
    entries: Tuple = dataclass_field(repr=False)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise BadParameter(f"negative matrix shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise BadParameter(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        guard_cells(self.rows, self.cols)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence], cols: int = None) -> "Matrix":
        data = [[field.scalar(x) for x in row] for row in rows]
        if cols is None:
            if not data:
                raise BadParameter("column count is required for a matrix without rows")
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise BadParameter(f"ragged row of length {len(row)}, expected {cols}")
        return cls(field, len(data), cols, tuple(x for row in data for x in row))

    @classmethod
    def from_array(cls, field: FieldSpec, array: np.ndarray) -> "Matrix":
        """Wrap an array whose entries are already canonical."""
        rows, cols = array.shape
        guard_cells(rows, cols)
        matrix = cls(field, rows, cols, tuple(array.ravel().tolist()))
        array = array.copy()
        array.flags.writeable = False
        matrix.__dict__["array"] = array
        return matrix

    @classmethod
    def identity(cls, field: FieldSpec, size: int) -> "Matrix":
        return cls.from_rows(field, [[int(i == j) for j in range(size)] for i in range(size)], cols=size)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls.from_rows(field, [[0] * cols for _ in range(rows)], cols=cols)

    @cached_property
    def array(self) -> np.ndarray:
        return self.field.array(list(self.entries)).reshape(self.rows, self.cols)

    def row(self, index: int) -> Tuple:
        return self.entries[index * self.cols:(index + 1) * self.cols]

    def to_rows(self) -> List[List]:
        return [list(self.row(i)) for i in range(self.rows)]


@dataclass(frozen=True)
class Subspace:
    """
    Subspace of F^ambient held by its strict RREF basis.

    Construct through ``haemers.services.linalg.subspace_span``; equality of
    two values is equality of the underlying sets.
    """

    field: FieldSpec
    ambient: int
    basis: Matrix

    def __post_init__(self):
        if self.basis.cols != self.ambient or self.basis.field != self.field:
            raise BadParameter("basis does not match the subspace field/ambient")

    @property
    def dim(self) -> int:
        return self.basis.rows

    @cached_property
    def pivot_columns(self) -> Tuple[int, ...]:
        pivots = []
        for i in range(self.basis.rows):
            row = self.basis.row(i)
            pivots.append(next(j for j, x in enumerate(row) if x != 0))
        return tuple(pivots)

    def __str__(self) -> str:
        return f"<{self.dim}-dim subspace of {self.field}^{self.ambient}>"
