"""
Operations on graded kE-modules: validation, parity shift, sums, tensor
products, internal Hom, change of field, sub- and quotient modules and the
freeness oracle.
"""
import numpy as np

from superpoint import constants as const
from superpoint import linalg
from superpoint.custom_exception import BadParameters
from superpoint.graded_module import GradedModule, ModuleMap
from superpoint.superalgebra import regular_module
from superpoint.validation_report_class import ValidationReport


def _nilpotency_bound(alg, name):
    if name == alg.generator_names[alg.n - 1] and alg.family == const.WITT:
        return alg.p ** alg.m
    return alg.p


def validation_report(M):
    """
    Check every relation of kE on M and record each failure.
    Returns:
        ValidationReport
    """
    report = ValidationReport()
    field, alg = M.field, M.alg
    names = alg.generator_names
    for i, first in enumerate(names):
        for second in names[i + 1:]:
            X, Y = M.actions[first], M.actions[second]
            if not np.array_equal(field.matmul(X, Y), field.matmul(Y, X)):
                report.append_violation('%s,%s' % (first, second), '%s*%s = %s*%s' % (first, second, second, first),
                                        const.COMMUTATION_STATE)
    for name in names:
        if name == const.SIGMA:
            continue
        bound = _nilpotency_bound(alg, name)
        if not linalg.is_zero(M.generator_power(name, bound)):
            report.append_violation(name, '%s^%d = 0' % (name, bound), const.NILPOTENCY_STATE)
    if alg.has_sigma:
        square = field.matmul(M.sigma, M.sigma)
        if alg.family == const.WITT:
            last = names[alg.n - 1]
            target = M.generator_power(last, alg.p)
            invariant = 'sigma^2 = %s^%d' % (last, alg.p)
        else:
            target = linalg.zeros(M.dim, M.dim)
            invariant = 'sigma^2 = 0'
        if not np.array_equal(square, target):
            report.append_violation(const.SIGMA, invariant, const.SIGMA_RELATION_STATE)
    same = M.parity[:, None] == M.parity[None, :]
    for name in names:
        matrix = M.actions[name]
        if name == const.SIGMA:
            if np.any(matrix[same]):
                report.append_violation(name, 'sigma reverses parity', const.ODD_PARITY_STATE)
        elif np.any(matrix[~same]):
            report.append_violation(name, '%s preserves parity' % name, const.EVEN_PARITY_STATE)
    return report


def validate(M):
    """
    Returns:
        list of violated invariants as messages, empty when M is a module
    """
    return validation_report(M).generate_violation_list_of_strings()


def is_valid(M):
    return not validation_report(M).check_action_is_stop_tool()


def trivial_module(alg, field, parity=0):
    """k, placed in the given parity."""
    return GradedModule(field, alg, [parity], dict((name, linalg.zeros(1, 1)) for name in alg.generator_names))


def parity_shift(M):
    """
    Pi M: parities flipped, sigma negated (a . Pi m = (-1)^|a| Pi(a m)).
    """
    actions = dict(M.actions)
    if M.alg.has_sigma:
        actions[const.SIGMA] = M.field.neg(M.sigma)
    return GradedModule(M.field, M.alg, 1 - M.parity, actions)


def direct_sum(M, N):
    M.check_compatible(N)
    dim = M.dim + N.dim
    actions = {}
    for name in M.alg.generator_names:
        block = linalg.zeros(dim, dim)
        block[:M.dim, :M.dim] = M.actions[name]
        block[M.dim:, M.dim:] = N.actions[name]
        actions[name] = block
    return GradedModule(M.field, M.alg, np.concatenate([M.parity, N.parity]), actions)


def tensor(M, N):
    """
    M (x) N on the basis m_i (x) n_j, index i*dim N + j.
    s acts as S (x) 1 + 1 (x) S and sigma with the Koszul sign
    sigma(m (x) n) = sigma m (x) n + (-1)^|m| m (x) sigma n.
    """
    M.check_compatible(N)
    field = M.field
    I_M, I_N = linalg.identity(M.dim), linalg.identity(N.dim)
    actions = {}
    for name in M.alg.generator_names:
        left = linalg.kron(field, M.actions[name], I_N)
        right = linalg.kron(field, I_M, N.actions[name])
        if name == const.SIGMA:
            signs = np.repeat(linalg.sign_vector(field, M.parity), N.dim)
            right = field.mul(right, signs[:, None])
        actions[name] = field.add(left, right)
    parity = (M.parity[:, None] + N.parity[None, :]).reshape(-1) % 2
    return GradedModule(field, M.alg, parity, actions)


def internal_hom(M, N):
    """
    Hom_k(M, N); f is stored row-major, f[j, i] at index j*dim M + i.
    (s.f) = s_N f - f s_M and (sigma.f)(m) = sigma_N f(m) - (-1)^|f| f(sigma_M m).
    """
    M.check_compatible(N)
    field = M.field
    I_M, I_N = linalg.identity(M.dim), linalg.identity(N.dim)
    parity = (N.parity[:, None] + M.parity[None, :]).reshape(-1) % 2
    actions = {}
    for name in M.alg.generator_names:
        post = linalg.kron(field, N.actions[name], I_M)
        pre = linalg.kron(field, I_N, M.actions[name].T)
        if name == const.SIGMA:
            pre = field.mul(pre, linalg.sign_vector(field, parity)[None, :])
        actions[name] = field.sub(post, pre)
    return GradedModule(field, M.alg, parity, actions)


def dual(M):
    return internal_hom(M, trivial_module(M.alg, M.field))


def tensor_swap(M, N):
    """
    The canonical isomorphism M (x) N -> N (x) M,
    m (x) n -> (-1)^(|m||n|) n (x) m.
    """
    field = M.field
    source, target = tensor(M, N), tensor(N, M)
    matrix = linalg.zeros(target.dim, source.dim)
    for i in range(M.dim):
        for j in range(N.dim):
            sign = field.p - 1 if M.parity[i] and N.parity[j] else 1
            matrix[j * M.dim + i, i * N.dim + j] = sign
    return ModuleMap(source, target, matrix)


def change_field(M, target):
    """The module with every entry embedded into the field target."""
    image = M.field.embedding_into(target)
    actions = dict((name, image[matrix]) for name, matrix in M.actions.items())
    return GradedModule(target, M.alg, M.parity, actions)


def base_change(M, degree):
    """K (x)_k M for K = F_{p^(e*degree)}."""
    if degree == 1:
        return M
    return change_field(M, M.field.extension(degree))


def column_parities(parity, B):
    """
    Parity of every column of B, which must be homogeneous.
    Raises:
        BadParameters: a column mixes parities
    """
    result = []
    for c in range(B.shape[1]):
        support = set(parity[np.nonzero(B[:, c])[0]].tolist())
        if len(support) > 1:
            raise BadParameters('Column %d of the basis is not homogeneous.' % c)
        result.append(support.pop() if support else 0)
    return np.array(result, dtype=np.int64)


def submodule(M, basis):
    """
    The submodule spanned by the homogeneous, linearly independent columns of
    basis, realised on that basis.
    Raises:
        BadParameters: the span is not stable under the generators
    """
    field = M.field
    basis = linalg.as_matrix(basis) if np.asarray(basis).size else linalg.zeros(M.dim, 0)
    parity = column_parities(M.parity, basis)
    actions = {}
    for name, X in M.actions.items():
        if basis.shape[1] == 0:
            actions[name] = linalg.zeros(0, 0)
            continue
        Y = linalg.solve_many(field, basis, field.matmul(X, basis))
        if Y is None:
            raise BadParameters('The span is not stable under %s.' % name)
        actions[name] = Y
    return GradedModule(field, M.alg, parity, actions)


def complement_columns(field, W, dim):
    """Standard basis vectors extending the columns of W to a basis."""
    W = W if W.size else linalg.zeros(dim, 0)
    pivots = linalg.pivot_columns(field, np.hstack([W, linalg.identity(dim)]))
    return [c - W.shape[1] for c in pivots if c >= W.shape[1]]


def quotient(M, basis):
    """
    M / span(basis) for a homogeneous submodule basis, realised on a
    complement spanned by standard basis vectors of M.
    """
    field = M.field
    W = linalg.as_matrix(basis) if np.asarray(basis).size else linalg.zeros(M.dim, 0)
    kept = complement_columns(field, W, M.dim)
    C = linalg.identity(M.dim)[:, kept]
    joined = np.hstack([W, C])
    actions = {}
    for name, X in M.actions.items():
        Y = linalg.solve_many(field, joined, field.matmul(X, C))
        actions[name] = Y[W.shape[1]:, :]
    return GradedModule(field, M.alg, M.parity[kept], actions)


def ideal_basis(alg, field, generators):
    """Basis (columns in the monomial basis of kE) of the ideal generated by generators."""
    generators = list(generators)
    for x in generators:
        if not x.is_homogeneous():
            raise BadParameters('Ideal generator %r is not homogeneous.' % x)
    if not generators:
        return linalg.zeros(alg.dim, 0)
    spans = np.hstack([x.left_multiplication() for x in generators])
    return spans[:, linalg.pivot_columns(field, spans)]


def quotient_module(alg, field, generators):
    """kE / (x_1, ..., x_r) for homogeneous elements x_i."""
    return quotient(regular_module(alg, field), ideal_basis(alg, field, generators))


def ideal_module(alg, field, generators):
    """The ideal (x_1, ..., x_r) of kE as a module."""
    return submodule(regular_module(alg, field), ideal_basis(alg, field, generators))


def radical_basis(M):
    """Columns spanning rad M, the sum of the images of the generators."""
    field = M.field
    if M.dim == 0:
        return linalg.zeros(0, 0)
    images = np.hstack(M.generator_matrices()) if M.generator_matrices() else linalg.zeros(M.dim, 0)
    if images.shape[1] == 0:
        return linalg.zeros(M.dim, 0)
    return images[:, linalg.pivot_columns(field, images)]


def minimal_generators(M):
    """
    Homogeneous vectors whose classes form a basis of M / rad M; they
    generate M minimally.
    """
    kept = complement_columns(M.field, radical_basis(M), M.dim)
    return linalg.identity(M.dim)[:, kept]


def is_free(M):
    """
    Projectivity oracle: projective kE-modules are free, and M is free iff
    dim M = mu * dim kE with mu = dim M / rad M and the cover kE^mu -> M onto.
    """
    generators = minimal_generators(M)
    mu = generators.shape[1]
    if M.dim != mu * M.alg.dim:
        return False
    if mu == 0:
        return True
    images = np.hstack([M.field.matmul(M.monomial_action(mon), generators) for mon in M.alg.basis])
    return linalg.rank(M.field, images) == M.dim
