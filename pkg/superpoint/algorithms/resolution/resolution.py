"""
This module is a wrapper around algorithms.py. It builds minimal free
resolutions of graded kE-modules and derives Betti numbers, syzygy modules
and Carlson modules L_xi from them.
"""
import itertools
from collections import namedtuple

import numpy as np
from scipy.special import comb

import superpoint.algorithms.resolution.algorithms as algo
from superpoint import constants as const
from superpoint import linalg
from superpoint.custom_exception import BadParameters, DimensionMismatch, OddInternalDegree, ZeroClass
from superpoint.gmodule import column_parities, minimal_generators, trivial_module
from superpoint.graded_module import ModuleMap
from superpoint.superalgebra import AlgebraElement

CarlsonSequence = namedtuple('CarlsonSequence', ['syzygy', 'kernel', 'projection', 'inclusion'])


class Resolution(object):
    """
    A minimal free resolution ... -> F_1 -> F_0 -> M -> 0, truncated at F_length.

    Attributes:
        module: the resolved GradedModule
        free: FreeModuleShape of F_0, ..., F_length
        generators: generators[j] holds the images of the free generators of
                    F_j, as columns in F_{j-1} (in M for j = 0)
        differentials: d_0 (the cover F_0 -> M), d_1, ..., d_length as matrices
        kernels: basis of ker d_j inside F_j, homogeneous columns
        kernel_parities: parity of each of those columns
    """

    def __init__(self, module):
        self.module = module
        self.free = []
        self.generators = []
        self.differentials = []
        self.kernels = []
        self.kernel_parities = []

    @property
    def field(self):
        return self.module.field

    @property
    def alg(self):
        return self.module.alg

    @property
    def length(self):
        return len(self.free) - 1

    @property
    def ranks(self):
        return [F.rank for F in self.free]

    @property
    def generator_parities(self):
        return [F.generator_parities for F in self.free]

    def differential_entries(self, j):
        """
        d_j (j >= 1) as a matrix with AlgebraElement entries: entry (l, k) is
        the coefficient of e_l in d_j(e_k).
        """
        if j < 1 or j > self.length:
            raise BadParameters('The resolution has differentials d_1 ... d_%d only.' % self.length)
        dim = self.alg.dim
        images = self.generators[j]
        return [[AlgebraElement.from_vector(self.alg, self.field, images[l * dim:(l + 1) * dim, k])
                 for k in range(images.shape[1])]
                for l in range(self.free[j - 1].rank)]

    def syzygy(self, j):
        """Omega^j(M) = ker d_{j-1}, realised inside F_{j-1}, for 1 <= j <= length + 1."""
        if j < 1 or j > self.length + 1:
            raise BadParameters('Syzygies Omega^1 ... Omega^%d are available.' % (self.length + 1))
        F = self.free[j - 1]
        return algo.realise_submodule(self.field, self.alg, F.apply_monomial,
                                      self.kernels[j - 1], self.kernel_parities[j - 1])

    def check(self):
        """
        Verify d d = 0, minimality and exactness exactly.
        Returns:
            list of violation messages, empty when the resolution is correct
        """
        field = self.field
        violations = []
        if linalg.rank(field, self.differentials[0]) != self.module.dim:
            violations.append('d_0 is not onto M')
        for j in range(1, self.length + 1):
            if not linalg.is_zero(field.matmul(self.differentials[j - 1], self.differentials[j])):
                violations.append('d_%d d_%d != 0' % (j - 1, j))
            unit_rows = np.arange(self.free[j - 1].rank) * self.alg.dim + self.alg.index[self.alg.unit]
            if np.any(self.generators[j][unit_rows, :]):
                violations.append('d_%d has an entry outside the radical' % j)
            if linalg.rank(field, self.differentials[j]) != self.kernels[j - 1].shape[1]:
                violations.append('not exact at F_%d' % (j - 1))
        return violations


def _module_apply(M):
    def apply_monomial(mon, vectors):
        return M.field.matmul(M.monomial_action(mon), vectors)
    return apply_monomial


def minimal_resolution(M, length):
    """
    Minimal free resolution of M with differentials d_1 ... d_length.
    F_0 covers M on mu(M) generators; each F_{j+1} covers ker d_j on a
    minimal set of homogeneous generators.
    """
    if length < 0:
        raise BadParameters('The resolution length must be >= 0.')
    field, alg = M.field, M.alg
    res = Resolution(M)
    generators = minimal_generators(M)
    F = algo.FreeModuleShape(alg, field, column_parities(M.parity, generators))
    differential = algo.cover_matrix(alg, M.dim, _module_apply(M), generators)
    while True:
        kernel, parities = algo.homogeneous_kernel(field, differential, F.parity)
        res.free.append(F)
        res.generators.append(generators)
        res.differentials.append(differential)
        res.kernels.append(kernel)
        res.kernel_parities.append(parities)
        if res.length == length:
            return res
        chosen = algo.minimal_generators_of_span(field, alg, F.apply_monomial, kernel)
        generators = kernel[:, chosen]
        previous = F
        F = algo.FreeModuleShape(alg, field, parities[chosen])
        differential = algo.cover_matrix(alg, previous.dim, previous.apply_monomial, generators)


def betti(M, i):
    """dim Ext^i(M, k): the rank of F_i in the minimal resolution."""
    return minimal_resolution(M, i).ranks[i]


def betti_closed_form(alg, i):
    """
    Betti numbers of k from the Hilbert series of the cohomology ring:
    1/(1-t)^(n+1) when sigma is present, 1/(1-t)^n otherwise.
    """
    if alg.has_sigma:
        return int(comb(i + alg.n, alg.n, exact=True))
    return int(comb(i + alg.n - 1, alg.n - 1, exact=True))


def syzygy(M, j):
    if j < 1:
        raise BadParameters('Syzygies start at Omega^1.')
    return minimal_resolution(M, j - 1).syzygy(j)


class CohomologyClassRep(object):
    """
    A class xi in H^{2d}(E, k), given by its values on the free generators of
    F_{2d} in a minimal resolution of k. It must vanish on odd generators
    (internal degree 0).
    """

    def __init__(self, resolution, degree, coeffs):
        if degree < 2 or degree % 2:
            raise BadParameters('A Carlson module needs an even degree 2d >= 2, got %s.' % degree)
        if degree > resolution.length:
            raise BadParameters('The resolution must reach F_%d.' % degree)
        field = resolution.field
        coeffs = np.array([field.check_code(c) for c in coeffs], dtype=np.int64)
        if len(coeffs) != resolution.ranks[degree]:
            raise DimensionMismatch('F_%d has %d generators, %d values given.'
                                    % (degree, resolution.ranks[degree], len(coeffs)))
        if not np.any(coeffs):
            raise ZeroClass()
        if np.any(coeffs[resolution.generator_parities[degree] == const.ODD]):
            raise OddInternalDegree()
        self.resolution = resolution
        self.degree = degree
        self.coeffs = coeffs

    def __repr__(self):
        return 'CohomologyClassRep(degree %d, %s)' % (self.degree, self.coeffs.tolist())


def carlson_sequence(xi):
    """
    The exact sequence 0 -> L_xi -> Omega^{2d}(k) -> k -> 0 where the
    projection sends d_{2d}(y) to xi(y), xi read off the unit coefficients
    of y.
    """
    res = xi.resolution
    field, alg = res.field, res.alg
    degree = xi.degree
    F = res.free[degree - 1]
    basis = res.kernels[degree - 1]
    syz = algo.realise_submodule(field, alg, F.apply_monomial, basis, res.kernel_parities[degree - 1])
    lifts = linalg.solve_many(field, res.differentials[degree], basis)
    unit_rows = np.arange(res.ranks[degree]) * alg.dim + alg.index[alg.unit]
    functional = field.matmul(xi.coeffs[None, :], lifts[unit_rows, :])
    inside = linalg.kernel_basis(field, functional)
    kernel_basis = field.matmul(basis, inside)
    kernel = algo.realise_submodule(field, alg, F.apply_monomial, kernel_basis,
                                    column_parities(F.parity, kernel_basis))
    projection = ModuleMap(syz, trivial_module(alg, field), functional)
    inclusion = ModuleMap(kernel, syz, inside)
    return CarlsonSequence(syz, kernel, projection, inclusion)


def carlson_module(xi):
    """L_xi, the kernel of Omega^{2d}(k) -> k."""
    return carlson_sequence(xi).kernel


def carlson_sequence_check(sequence):
    """
    Returns:
        list of violation messages, empty when the sequence is exact
    """
    field = sequence.syzygy.field
    violations = []
    if not sequence.projection.check():
        violations.append('the projection is not a module map')
    if not sequence.inclusion.check():
        violations.append('the inclusion is not a module map')
    if linalg.is_zero(sequence.projection.matrix):
        violations.append('the projection is not onto k')
    if not linalg.is_zero(field.matmul(sequence.projection.matrix, sequence.inclusion.matrix)):
        violations.append('the composite L -> k is not zero')
    if linalg.rank(field, sequence.inclusion.matrix) != sequence.kernel.dim:
        violations.append('the inclusion is not injective')
    if sequence.kernel.dim != sequence.syzygy.dim - 1:
        violations.append('dim L != dim Omega - 1')
    return violations


def even_classes(res, degree, projective=False):
    """
    Every nonzero functional on the even generators of F_degree, as classes.
    With projective=True only the ones whose first nonzero value is 1.
    """
    parities = res.generator_parities[degree]
    even = np.nonzero(parities == const.EVEN)[0]
    classes = []
    for values in itertools.product(range(res.field.q), repeat=len(even)):
        if not any(values):
            continue
        if projective and [v for v in values if v][0] != 1:
            continue
        coeffs = np.zeros(len(parities), dtype=np.int64)
        coeffs[even] = values
        classes.append(CohomologyClassRep(res, degree, coeffs))
    return classes
