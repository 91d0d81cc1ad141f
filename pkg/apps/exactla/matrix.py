"""
Dense exact matrices and the elimination routines everything else is built on.

Over Q rows are lists of ``Fraction`` and elimination skips zero entries.
Over F_p the work is done on numpy int64 arrays; p < 2^31 keeps every
product below 2^62, and each step is reduced mod p.
"""
from dataclasses import dataclass
import logging

import numpy as np

from .exceptions import DimensionMismatchError, SingularMatrixError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExactMatrix:
    """
    Rectangular matrix of raw elements of one field.
    """
    field: object
    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [tuple(field.element(x) for x in row) for row in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatchError('column count is required for an empty matrix')
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatchError(f'row of length {len(row)} in a matrix with {cols} columns')
        return cls(field, len(rows), cols, tuple(rows))

    @classmethod
    def _trusted(cls, field, rows, cols):
        # rows already hold canonical raw elements
        return cls(field, len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls._trusted(field, [[field.zero] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, field, n):
        rows = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
        return cls._trusted(field, rows, n)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def transpose(self):
        return ExactMatrix._trusted(self.field, [self.column(j) for j in range(self.cols)], self.rows)

    def is_zero(self):
        return all(x == 0 for row in self.entries for x in row)

    def apply(self, vector):
        """Return M·v."""
        if len(vector) != self.cols:
            raise DimensionMismatchError(f'vector of length {len(vector)} for {self.cols} columns')
        f = self.field
        out = []
        for row in self.entries:
            acc = f.zero
            for a, b in zip(row, vector):
                if a != 0 and b != 0:
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return tuple(out)

    def matmul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatchError(f'cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}')
        other_t = other.transpose()
        rows = [[_dot(self.field, row, col) for col in other_t.entries] for row in self.entries]
        return ExactMatrix._trusted(self.field, rows, other.cols)


@dataclass(frozen=True)
class RrefResult:
    matrix: ExactMatrix
    rank: int
    pivot_columns: tuple


def _dot(field, u, v):
    acc = field.zero
    for a, b in zip(u, v):
        if a != 0 and b != 0:
            acc = field.add(acc, field.mul(a, b))
    return acc


# -- elimination kernels ---------------------------------------------------

def _rref_rational(rows, cols):
    A = [list(r) for r in rows]
    m = len(A)
    pivots = []
    r = 0
    for c in range(cols):
        if r == m:
            break
        i = next((k for k in range(r, m) if A[k][c] != 0), None)
        if i is None:
            continue
        A[r], A[i] = A[i], A[r]
        pivot_row = A[r]
        lead = pivot_row[c]
        if lead != 1:
            pivot_row = [x / lead for x in pivot_row]
            A[r] = pivot_row
        support = [j for j in range(c, cols) if pivot_row[j] != 0]
        for k in range(m):
            factor = A[k][c]
            if k == r or factor == 0:
                continue
            row = A[k]
            for j in support:
                row[j] -= factor * pivot_row[j]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _rref_modular(rows, cols, p):
    if not rows or cols == 0:
        return [], []
    A = np.array(rows, dtype=np.int64) % p
    m = A.shape[0]
    pivots = []
    r = 0
    for c in range(cols):
        if r == m:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if nonzero.size == 0:
            continue
        i = r + int(nonzero[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        column = A[:, c].copy()
        column[r] = 0
        targets = np.nonzero(column)[0]
        if targets.size:
            A[targets] = (A[targets] - np.outer(column[targets], A[r]) % p) % p
        pivots.append(c)
        r += 1
    return A[:r].tolist(), pivots


def _rank_modular(rows, cols, p):
    # Forward elimination on a shrinking block: after a column is handled it
    # is dropped, and so is the pivot row.
    if not rows or cols == 0:
        return 0
    A = np.array(rows, dtype=np.int64) % p
    rank = 0
    while A.shape[0] and A.shape[1]:
        nonzero = np.nonzero(A[:, 0])[0]
        if nonzero.size == 0:
            A = A[:, 1:]
            continue
        i = int(nonzero[0])
        pivot_row = A[i] * pow(int(A[i, 0]), -1, p) % p
        A = np.delete(A, i, axis=0)
        targets = np.nonzero(A[:, 0])[0]
        if targets.size:
            A[targets] = (A[targets] - np.outer(A[targets, 0], pivot_row) % p) % p
        A = A[:, 1:]
        rank += 1
    return rank


def _rref_raw(field, rows, cols):
    if field.is_rational:
        return _rref_rational(rows, cols)
    return _rref_modular(rows, cols, field.characteristic)


# -- public operations -----------------------------------------------------

def rref(M):
    """
    Reduced row echelon form of M, its rank and pivot columns. Zero rows are
    kept at the bottom so R has the shape of M.
    """
    reduced, pivots = _rref_raw(M.field, M.entries, M.cols)
    rows = [list(r) for r in reduced]
    rows.extend([M.field.zero] * M.cols for _ in range(M.rows - len(rows)))
    matrix = ExactMatrix._trusted(M.field, rows, M.cols)
    return RrefResult(matrix=matrix, rank=len(pivots), pivot_columns=tuple(pivots))


def row_basis(field, rows, cols):
    """
    Nonzero rows of the RREF of ``rows`` as an ExactMatrix, plus pivots.
    """
    reduced, pivots = _rref_raw(field, rows, cols)
    return ExactMatrix._trusted(field, reduced, cols), tuple(pivots)


def matrix_rank(M):
    if M.field.is_rational:
        return len(_rref_rational(M.entries, M.cols)[1])
    return _rank_modular(M.entries, M.cols, M.field.characteristic)


def rank_of_rows(field, rows, cols):
    if field.is_rational:
        return len(_rref_rational(rows, cols)[1])
    return _rank_modular(rows, cols, field.characteristic)


def kernel_basis(M):
    """
    Basis of {v : M·v = 0}, one vector per non-pivot column, with a 1 in
    that column.
    """
    field = M.field
    reduced, pivots = _rref_raw(field, M.entries, M.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = [field.zero] * M.cols
        v[free] = field.one
        for row, pc in zip(reduced, pivots):
            if row[free] != 0:
                v[pc] = field.neg(row[free])
        basis.append(tuple(v))
    return basis


def reduce_vector(field, vector, basis_rows, pivots):
    """
    Reduce ``vector`` against RREF rows; the result is zero exactly when the
    vector lies in their span.
    """
    v = list(vector)
    for row, pc in zip(basis_rows, pivots):
        factor = v[pc]
        if factor == 0:
            continue
        for j, x in enumerate(row):
            if x != 0:
                v[j] = field.sub(v[j], field.mul(factor, x))
    return v


def _leading_columns(B):
    pivots = []
    for row in B.entries:
        pivots.append(next((j for j, x in enumerate(row) if x != 0), None))
    return pivots


def in_span(v, B):
    """
    Coordinates c with c·B = v when v lies in the row span of the RREF
    matrix B, otherwise None.
    """
    if len(v) != B.cols:
        raise DimensionMismatchError(f'vector of length {len(v)} against rows of length {B.cols}')
    field = B.field
    v = [field.element(x) for x in v]
    leads = _leading_columns(B)
    coords = [field.zero if pc is None else v[pc] for pc in leads]
    rows = [row for row, pc in zip(B.entries, leads) if pc is not None]
    used = [pc for pc in leads if pc is not None]
    residual = reduce_vector(field, v, rows, used)
    if any(x != 0 for x in residual):
        return None
    return tuple(coords)


def solve(A, b):
    """
    One solution x of A·x = b, or None. Free variables are set to zero, so
    the answer is the one supported on the earliest pivot columns.
    """
    if len(b) != A.rows:
        raise DimensionMismatchError(f'right-hand side of length {len(b)} for {A.rows} rows')
    field = A.field
    augmented = [list(row) + [field.element(x)] for row, x in zip(A.entries, b)]
    reduced, pivots = _rref_raw(field, augmented, A.cols + 1)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [field.zero] * A.cols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[-1]
    return tuple(x)


def inverse(M):
    if M.rows != M.cols:
        raise DimensionMismatchError(f'cannot invert a {M.rows}x{M.cols} matrix')
    n = M.rows
    field = M.field
    augmented = [
        list(row) + [field.one if i == j else field.zero for j in range(n)]
        for i, row in enumerate(M.entries)
    ]
    reduced, pivots = _rref_raw(field, augmented, 2 * n)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise SingularMatrixError('matrix is not invertible')
    return ExactMatrix._trusted(field, [row[n:] for row in reduced], n)
