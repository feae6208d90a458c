"""
Dense exact linear algebra over a FiniteField.

Matrices are numpy int64 arrays of scalar encodings. Elimination, null
spaces, ranks and matrix powers are done on galois field arrays (see
FiniteField.lift); the results are handed back as encodings.
"""
import numpy as np

from superpoint.custom_exception import DimensionMismatch


def zeros(rows, cols):
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n):
    return np.eye(n, dtype=np.int64)


def as_matrix(A):
    A = np.asarray(A, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(-1, 1) if A.size else A.reshape(0, 0)
    return A


def _pivots(R):
    """Column of the leading entry of every nonzero row of an echelon form."""
    pivots = []
    for row in R:
        hit = np.nonzero(row)[0]
        if hit.size == 0:
            break
        pivots.append(int(hit[0]))
    return pivots


def row_reduce(field, A):
    """
    Reduced row echelon form.
    Returns:
        (echelon matrix, list of pivot columns)
    """
    A = as_matrix(A)
    if A.size == 0:
        return A.copy(), []
    R = field.lower(field.lift(A).row_reduce())
    return R, _pivots(R)


def rank(field, A):
    A = as_matrix(A)
    if A.size == 0:
        return 0
    return int(np.linalg.matrix_rank(field.lift(A)))


def pivot_columns(field, A):
    """Greedy basis of the column space: indices of columns independent of the earlier ones."""
    A = as_matrix(A)
    if A.size == 0:
        return []
    return row_reduce(field, A)[1]


def kernel_basis(field, A):
    """
    Returns:
        matrix whose columns form a basis of {v : A v = 0}, the rows of the
        reduced echelon basis of the null space
    """
    A = as_matrix(A)
    rows, cols = A.shape
    if rows == 0 or cols == 0:
        return identity(cols)
    N = field.lower(field.lift(A).null_space())
    return N.reshape(-1, cols).T.copy()


def solve_many(field, A, B):
    """
    One particular solution X of A X = B.
    Returns:
        X, or None when some column of B is outside the column space of A
    """
    A = as_matrix(A)
    B = np.asarray(B, dtype=np.int64)
    if B.ndim == 1:
        B = B.reshape(-1, 1)
    if A.shape[0] != B.shape[0]:
        raise DimensionMismatch('Cannot solve a system with %d rows against %d right hand rows.'
                                % (A.shape[0], B.shape[0]))
    rows, cols = A.shape
    if rows == 0 or B.shape[1] == 0:
        return zeros(cols, B.shape[1])
    R, pivots = row_reduce(field, np.hstack([A, B]))
    if pivots and pivots[-1] >= cols:
        return None
    X = zeros(cols, B.shape[1])
    for i, pc in enumerate(pivots):
        X[pc] = R[i, cols:]
    return X


def solve(field, A, b):
    """Any v with A v = b, or None."""
    b = np.asarray(b, dtype=np.int64)
    if b.ndim != 1:
        raise DimensionMismatch('The right hand side must be a vector.')
    X = solve_many(field, A, b)
    return None if X is None else X[:, 0]


def matrix_power(field, A, k):
    A = as_matrix(A)
    if A.size == 0:
        return A.copy()
    return field.lower(np.linalg.matrix_power(field.lift(A), int(k)))


def kron(field, A, B):
    """Kronecker product, entry (i*rB + k, j*cB + l) = A[i, j] B[k, l]."""
    A = as_matrix(A)
    B = as_matrix(B)
    product = field.mul(A[:, None, :, None], B[None, :, None, :])
    return product.reshape(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])


def linear_combination(field, coefficients, matrices, shape):
    """sum_i c_i M_i"""
    total = zeros(*shape)
    for c, M in zip(coefficients, matrices):
        if int(c):
            total = field.add(total, field.scale(c, M))
    return total


def is_zero(A):
    return not np.any(A)


def sign_vector(field, parity):
    """Encodings of (-1)^parity."""
    parity = np.asarray(parity, dtype=np.int64)
    return np.where(parity % 2 == 1, field.p - 1, 1).astype(np.int64)
