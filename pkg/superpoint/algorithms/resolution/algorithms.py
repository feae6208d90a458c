"""
Building blocks for resolutions: free kE-modules handled blockwise,
homogeneous kernels and minimal generators of submodules.

A free module F = kE e_1 + ... + kE e_r is stored on the basis
b e_l (b a basis monomial), at index l*dim kE + index(b). Basis monomials
act on kE by a partial permutation, so their action on F is a row gather.
"""
import numpy as np

from superpoint import linalg
from superpoint.graded_module import GradedModule


def monomial_shift(alg, mon):
    """
    Left multiplication by mon as index arrays: basis element src[j] is sent
    to dst[j], all other basis elements to zero.
    """
    src, dst = [], []
    for j, other in enumerate(alg.basis):
        product = alg.multiply_monomials(mon, other)
        if product is not None:
            src.append(j)
            dst.append(alg.index[product])
    return np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64)


class FreeModuleShape(object):
    """Rank and generator parities of a free module, with the blockwise action."""

    def __init__(self, alg, field, generator_parities):
        self.alg = alg
        self.field = field
        self.generator_parities = np.array(generator_parities, dtype=np.int64)
        self._shifts = {}

    @property
    def rank(self):
        return len(self.generator_parities)

    @property
    def dim(self):
        return self.rank * self.alg.dim

    @property
    def parity(self):
        return ((self.generator_parities[:, None] + self.alg.parities[None, :]) % 2).reshape(-1)

    def shift(self, mon):
        if mon not in self._shifts:
            self._shifts[mon] = monomial_shift(self.alg, mon)
        return self._shifts[mon]

    def apply_monomial(self, mon, vectors):
        """mon applied to the columns of vectors (shape dim x c)."""
        src, dst = self.shift(mon)
        blocks = vectors.reshape(self.rank, self.alg.dim, vectors.shape[1])
        out = np.zeros_like(blocks)
        out[:, dst, :] = blocks[:, src, :]
        return out.reshape(self.dim, vectors.shape[1])

    def apply_generator(self, name, vectors):
        return self.apply_monomial(self.alg.generator_monomial(name), vectors)

    def to_module(self):
        """F as a GradedModule (block diagonal action matrices)."""
        actions = {}
        for name in self.alg.generator_names:
            actions[name] = self.apply_generator(name, linalg.identity(self.dim))
        return GradedModule(self.field, self.alg, self.parity, actions)


def cover_matrix(alg, dim, apply_monomial, generators):
    """
    Matrix of the map kE^r -> V sending e_l to the l-th column of generators,
    on the free basis b e_l (column l*dim kE + index(b)).
    Args:
        alg: AlgebraPresentation
        dim: dimension of V
        apply_monomial: function (monomial, vectors) -> monomial applied to vectors in V
        generators: dim x r matrix
    """
    r = generators.shape[1]
    out = linalg.zeros(dim, r * alg.dim)
    if r == 0:
        return out
    columns = np.arange(r) * alg.dim
    for b, mon in enumerate(alg.basis):
        out[:, columns + b] = apply_monomial(mon, generators)
    return out


def homogeneous_kernel(field, matrix, source_parity):
    """
    Basis of the kernel of an even map made of homogeneous vectors: the even
    and the odd part of the source are treated separately.
    Returns:
        (basis columns, parity of each column)
    """
    dim = matrix.shape[1]
    pieces, parities = [], []
    for parity in (0, 1):
        cols = np.nonzero(source_parity == parity)[0]
        if cols.size == 0:
            continue
        K = linalg.kernel_basis(field, matrix[:, cols])
        if K.shape[1] == 0:
            continue
        full = linalg.zeros(dim, K.shape[1])
        full[cols, :] = K
        pieces.append(full)
        parities.extend([parity] * K.shape[1])
    if not pieces:
        return linalg.zeros(dim, 0), np.zeros(0, dtype=np.int64)
    return np.hstack(pieces), np.array(parities, dtype=np.int64)


def minimal_generators_of_span(field, alg, apply_monomial, basis):
    """
    Columns of basis whose classes form a basis of K / rad K, where K is the
    submodule spanned by basis (rad K = sum of the generator images of K).
    """
    if basis.shape[1] == 0:
        return []
    images = [apply_monomial(alg.generator_monomial(name), basis) for name in alg.generator_names]
    radical = np.hstack(images) if images else linalg.zeros(basis.shape[0], 0)
    if radical.shape[1]:
        radical = radical[:, linalg.pivot_columns(field, radical)]
    offset = radical.shape[1]
    pivots = linalg.pivot_columns(field, np.hstack([radical, basis]))
    return [c - offset for c in pivots if c >= offset]


def realise_submodule(field, alg, apply_monomial, basis, parity):
    """
    The submodule with vector space basis the (homogeneous, independent)
    columns of basis, with generator matrices Y solving basis Y = X basis.
    """
    actions = {}
    for name in alg.generator_names:
        if basis.shape[1] == 0:
            actions[name] = linalg.zeros(0, 0)
            continue
        Y = linalg.solve_many(field, basis, apply_monomial(alg.generator_monomial(name), basis))
        actions[name] = Y
    return GradedModule(field, alg, parity, actions)
