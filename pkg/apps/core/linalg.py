# apps/core/linalg.py
"""
Exact rational linear algebra.

Matrices and vectors are numpy object arrays of ``fractions.Fraction``;
products with ``@`` stay exact. Echelon forms, inverses and null spaces
go through ``sympy.Matrix``.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import sympy

logger = logging.getLogger(__name__)


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def qvector(values: Iterable) -> np.ndarray:
    values = [to_fraction(v) for v in values]
    vector = np.empty(len(values), dtype=object)
    vector[:] = values
    return vector


def qmatrix(rows: Iterable[Iterable], shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
    rows = [[to_fraction(v) for v in row] for row in rows]
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    matrix = np.empty(shape, dtype=object)
    for i, row in enumerate(rows):
        if len(row) != shape[1]:
            raise ValueError(f"row {i} has {len(row)} entries, expected {shape[1]}")
        matrix[i, :] = row
    return matrix


def zeros(rows: int, cols: int) -> np.ndarray:
    return qmatrix([[0] * cols for _ in range(rows)], shape=(rows, cols))


def identity(n: int) -> np.ndarray:
    return qmatrix([[int(i == j) for j in range(n)] for i in range(n)], shape=(n, n))


def unit_vector(n: int, index: int) -> np.ndarray:
    return qvector(int(i == index) for i in range(n))


def indicator(n: int, indices: Iterable[int]) -> np.ndarray:
    chosen = set(indices)
    return qvector(int(i in chosen) for i in range(n))


def key(array: np.ndarray) -> tuple:
    """Hashable form of an exact array (ints and equal Fractions hash alike)."""
    return (array.shape,) + tuple(array.flat)


def is_zero(array: np.ndarray) -> bool:
    return all(v == 0 for v in array.flat)


def to_sympy(array: np.ndarray) -> sympy.Matrix:
    if array.ndim == 1:
        array = array.reshape(1, -1)
    rows, cols = array.shape
    if rows == 0 or cols == 0:
        return sympy.zeros(rows, cols)
    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) if isinstance(v, Fraction)
                          else sympy.Rational(v) for v in row] for row in array.tolist()])


def from_sympy(matrix: sympy.Matrix) -> np.ndarray:
    return qmatrix(matrix.tolist(), shape=matrix.shape)


def rank(array: np.ndarray) -> int:
    if array.size == 0:
        return 0
    return int(to_sympy(array).rank())


def left_nullspace(array: np.ndarray) -> List[np.ndarray]:
    """Basis of {v : v @ array == 0} as row vectors."""
    rows = array.shape[0]
    if rows == 0:
        return []
    if array.shape[1] == 0:
        return [unit_vector(rows, i) for i in range(rows)]
    basis = to_sympy(array).T.nullspace()
    return [qvector(column) for column in basis]


def right_nullspace(array: np.ndarray) -> List[np.ndarray]:
    """Basis of {v : array @ v == 0} as vectors."""
    cols = array.shape[1]
    if cols == 0:
        return []
    if array.shape[0] == 0:
        return [unit_vector(cols, i) for i in range(cols)]
    return [qvector(column) for column in to_sympy(array).nullspace()]


class RowBasis:
    """
    Linearly independent row vectors with exact coordinate lookup.

    ``coordinates(v)`` returns x with ``x @ rows == v``, or None when v is
    outside the span.
    """

    def __init__(self, rows: Sequence[np.ndarray], dim: int):
        self.dim = dim
        self.rows = qmatrix([list(r) for r in rows], shape=(len(rows), dim))
        self._prepare()

    def _prepare(self):
        if len(self.rows) == 0:
            self.pivots, self.inverse = [], None
            return
        _, pivots = to_sympy(self.rows).rref()
        if len(pivots) != len(self.rows):
            raise ValueError('rows are not linearly independent')
        self.pivots = list(pivots)
        self.inverse = from_sympy(to_sympy(self.rows[:, self.pivots]).inv())

    def __len__(self):
        return len(self.rows)

    def coordinates(self, vector: Sequence) -> Optional[np.ndarray]:
        vector = qvector(vector)
        if len(self.rows) == 0:
            return qvector([]) if is_zero(vector) else None
        candidate = vector[self.pivots] @ self.inverse
        if any(a != b for a, b in zip(candidate @ self.rows, vector)):
            return None
        return qvector(candidate)

    def contains(self, vector: Sequence) -> bool:
        return self.coordinates(vector) is not None


class SpanBuilder(RowBasis):
    """Grows a basis greedily: ``add`` keeps a vector only if it enlarges the span."""

    def __init__(self, dim: int):
        super().__init__([], dim)

    def add(self, vector: Sequence) -> bool:
        vector = qvector(vector)
        if self.contains(vector):
            return False
        self.rows = np.vstack([self.rows, vector.reshape(1, -1)]) if len(self.rows) else vector.reshape(1, -1)
        self._prepare()
        logger.debug("span grew to dimension %d", len(self.rows))
        return True


def span_basis(vectors: Iterable[Sequence], dim: int) -> List[np.ndarray]:
    """Greedy basis: the first maximal independent subfamily, in order."""
    vectors = [qvector(v) for v in vectors]
    if not vectors:
        return []
    stacked = qmatrix([list(v) for v in vectors], shape=(len(vectors), dim))
    _, pivots = to_sympy(stacked).T.rref()
    return [vectors[i] for i in pivots]


def intersection(first: Sequence[np.ndarray], second: Sequence[np.ndarray], dim: int) -> List[np.ndarray]:
    """Basis of span(first) ∩ span(second)."""
    if not first or not second:
        return []
    a = qmatrix([list(v) for v in first], shape=(len(first), dim))
    b = qmatrix([list(v) for v in second], shape=(len(second), dim))
    # x @ a == y @ b  <=>  [x, -y] @ [[a], [b]] == 0
    relations = left_nullspace(np.vstack([a, b]))
    combos = [r[:len(first)] @ a for r in relations]
    return span_basis(combos, dim)


def solve_left(basis_rows: np.ndarray, target_rows: np.ndarray) -> Optional[np.ndarray]:
    """Matrix M with ``M @ basis_rows == target_rows`` (rows independent), or None."""
    basis = RowBasis(list(basis_rows), basis_rows.shape[1])
    result = []
    for row in target_rows:
        coordinates = basis.coordinates(row)
        if coordinates is None:
            return None
        result.append(list(coordinates))
    return qmatrix(result, shape=(target_rows.shape[0], len(basis)))


def solve_vector(matrix: np.ndarray, target: Sequence) -> Optional[np.ndarray]:
    """Some x with ``x @ matrix == target`` (not necessarily unique), or None."""
    target = qvector(target)
    if matrix.shape[0] == 0:
        return qvector([]) if is_zero(target) else None
    system = to_sympy(matrix).T
    try:
        solution, params = system.gauss_jordan_solve(to_sympy(target).T)
    except ValueError:
        return None
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return qvector(solution)


def format_fraction(value) -> str:
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
