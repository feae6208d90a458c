"""
This module is a wrapper around algorithms.py. It evaluates the rank
criterion at standard pi-points, enumerates rank varieties and support sets
over finite fields, detects projectivity and checks the homogeneity and the
tensor and Hom support formulas on concrete modules.
"""
import itertools
import warnings
from collections import namedtuple
from multiprocessing import Pool

import superpoint.algorithms.variety.algorithms as algo
from superpoint import config
from superpoint import constants as const
from superpoint.algorithms.pipoint.pipoint import (RestrictionOperators, frobenius_image_coords, k_action,
                                                   sign_flip)
from superpoint.custom_exception import BudgetExceeded, FieldMismatch
from superpoint.fields import FiniteField
from superpoint.gmodule import change_field, internal_hom, is_free, tensor

CheckResult = namedtuple('CheckResult', ['ok', 'counterexample'])
Verdict = namedtuple('Verdict', ['verdict', 'witness', 'degree'])


def exterior_matrix_mode(exterior_matrix):
    """The given mode, or config.EXTERIOR_MATRIX as it is set now."""
    return config.EXTERIOR_MATRIX if exterior_matrix is None else exterior_matrix


def max_image_defect(r, exterior_matrix=None):
    """
    dim M - rank of the rank criterion matrix of a restriction, 0 exactly
    when the image is maximal.
    Raises:
        RelationViolation: the block matrix is not square zero
    """
    M = r.module
    return algo.point_defect(M.field, r.T, r.Tau, algo.is_paper_mode(M.alg, exterior_matrix_mode(exterior_matrix)))


def max_image_test(r, exterior_matrix=None):
    """True when the restriction has finite flat dimension."""
    return max_image_defect(r, exterior_matrix) == 0


def jordan_type(r):
    return algo.jordan_type(r.module.field, r.T)


def a_module_check(r, i):
    """Whether [[Tau, T^i], [-T^(p-i), -Tau]] has maximal image on M + M."""
    field = r.module.field
    matrix = algo.resolution_matrix(field, r.T, r.Tau, i)
    algo.check_square_zero(field, matrix)
    return algo.defect(field, matrix, r.module.dim) == 0


def commuting_operator_check(beta, gamma, delta, eps, field):
    """
    Maximal image outcomes of [[eps, delta], [-delta^(p-1), -eps]] and of
    the same matrix with delta + beta gamma in place of delta.
    """
    dim = delta.shape[0]
    outcomes = []
    for matrix in algo.commuting_blocks(field, beta, gamma, delta, eps):
        algo.check_square_zero(field, matrix)
        outcomes.append(algo.defect(field, matrix, dim) == 0)
    return tuple(outcomes)


def enumeration_field(M, e):
    """
    F_{p^e}, the field of M itself when e is its degree.
    Raises:
        FieldMismatch: the field of M does not embed into F_{p^e}
    """
    e = config.DEFAULT_EXT_DEGREE if e is None else e
    if e == M.field.e:
        return M.field
    if e < 1 or e % M.field.e:
        raise FieldMismatch('%r does not embed into F_%d^%d.' % (M.field, M.field.p, e))
    return FiniteField(M.field.p, e)


def enumeration_module(M, e):
    field = enumeration_field(M, e)
    return M if field == M.field else change_field(M, field)


def check_budget(field, length, budget=None):
    budget = config.POINT_BUDGET if budget is None else budget
    count = field.q ** length
    if count > budget:
        raise BudgetExceeded(count, budget)
    return count


class PointEvaluator(object):
    """Membership in the rank variety of one module, point by point."""

    def __init__(self, M, exterior_matrix=None):
        self.module = M
        self.operators = RestrictionOperators(M)
        self.paper_mode = algo.is_paper_mode(M.alg, exterior_matrix_mode(exterior_matrix))

    def in_variety(self, coords):
        T, Tau = self.operators.matrices(coords)
        if self.paper_mode:
            matrix = algo.rank_matrix(self.module.field, T, Tau, exterior_paper=True)
        else:
            matrix = algo.rank_matrix(self.module.field, T, Tau)
            algo.check_square_zero(self.module.field, matrix)
        return algo.defect(self.module.field, matrix, self.module.dim) > 0


_worker_evaluator = None


def _init_worker(M, exterior_matrix):
    global _worker_evaluator
    _worker_evaluator = PointEvaluator(M, exterior_matrix)


def _evaluate_chunk(points):
    return [point for point in points if _worker_evaluator.in_variety(point)]


def _chunks(iterable, size):
    iterator = iter(iterable)
    while True:
        chunk = list(itertools.islice(iterator, size))
        if not chunk:
            return
        yield chunk


class RankVariety(object):
    """
    The F_{p^e}-rational points a of the rank variety V^r(M): the points
    where the rank criterion fails, 0 included.

    Attributes:
        module: the module the points were computed for
        field: enumeration field F_{p^e}
        points: sorted list of coordinate tuples (scalar encodings)
    """

    def __init__(self, module, field, points):
        self.module = module
        self.field = field
        self.points = sorted(tuple(int(c) for c in point) for point in points)
        self._members = set(self.points)

    def contains(self, a):
        return tuple(int(c) for c in a) in self._members

    def __contains__(self, a):
        return self.contains(a)

    def __len__(self):
        return len(self.points)

    def nonzero_points(self):
        return [point for point in self.points if any(point)]

    def __eq__(self, other):
        return isinstance(other, RankVariety) and self.field == other.field and self.points == other.points

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'RankVariety(%d points over %r)' % (len(self.points), self.field)


class SupportSet(object):
    """Projective points [b_1 : ... ], first nonzero coordinate 1, sorted."""

    def __init__(self, alg, field, points):
        self.alg = alg
        self.field = field
        self.points = sorted(set(tuple(int(c) for c in point) for point in points))

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        return isinstance(other, SupportSet) and self.field == other.field and self.points == other.points

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'SupportSet(%d points over %r)' % (len(self.points), self.field)


def all_points(field, length):
    return itertools.product(range(field.q), repeat=length)


def rank_variety(M, e=None, budget=None, parallel=False,
                 exterior_matrix=None):
    """
    Enumerate F_{p^e}^(n+1) (F_{p^e}^n without sigma) and keep every point
    where the rank criterion fails.
    Args:
        M: GradedModule
        e: absolute degree of the enumeration field
        budget: largest number of points allowed
        parallel: evaluate the points in a process pool
        exterior_matrix: 'thm' or 'paper'
    Raises:
        BudgetExceeded, FieldMismatch
    """
    module = enumeration_module(M, e)
    field = module.field
    length = module.alg.point_length
    check_budget(field, length, budget)
    exterior_matrix = exterior_matrix_mode(exterior_matrix)
    if algo.is_paper_mode(module.alg, exterior_matrix):
        warnings.warn('Evaluating the exterior matrix [[Tau, T], [-T, -Tau]], which need not be square zero.')
    if parallel:
        with Pool(initializer=_init_worker, initargs=(module, exterior_matrix)) as pool:
            found = pool.map(_evaluate_chunk, list(_chunks(all_points(field, length), config.PARALLEL_CHUNK)))
        points = [point for chunk in found for point in chunk]
    else:
        evaluator = PointEvaluator(module, exterior_matrix)
        points = [point for point in all_points(field, length) if not any(point) or evaluator.in_variety(point)]
    if (0,) * length not in points:
        points.append((0,) * length)
    return RankVariety(module, field, points)


def support_from_variety(variety):
    alg = variety.module.alg
    images = [frobenius_image_coords(alg, variety.field, point) for point in variety.nonzero_points()]
    return SupportSet(alg, variety.field, images)


def support_set(M, e=None, budget=None, parallel=False,
                exterior_matrix=None):
    """Frobenius images of the nonzero points of V^r(M) over F_{p^e}."""
    return support_from_variety(rank_variety(M, e, budget, parallel, exterior_matrix))


def colex_points(field, length):
    """Points with the first coordinate varying fastest."""
    for point in all_points(field, length):
        yield tuple(reversed(point))


def find_witness(M, e, budget=None, exterior_matrix=None):
    """The first nonzero point of V^r(M) over F_{p^e} in colexicographic order, or None."""
    module = enumeration_module(M, e)
    length = module.alg.point_length
    check_budget(module.field, length, budget)
    evaluator = PointEvaluator(module, exterior_matrix)
    for point in colex_points(module.field, length):
        if any(point) and evaluator.in_variety(point):
            return point
    return None


def is_projective(M, max_ext=None, budget=None,
                  exterior_matrix=None):
    """
    Freeness decides projectivity. For a module that is not free a witness
    point is searched in V^r(M) over F_{p^e}, e = 1 .. max_ext (degrees the
    field of M embeds into only).
    Returns:
        Verdict(verdict, witness, degree)
    """
    max_ext = config.DEFAULT_MAX_EXT if max_ext is None else max_ext
    if is_free(M):
        return Verdict(const.PROJECTIVE, None, None)
    searched = 0
    for e in range(1, max_ext + 1):
        if e % M.field.e:
            continue
        try:
            witness = find_witness(M, e, budget, exterior_matrix)
        except BudgetExceeded as error:
            warnings.warn('Witness search stopped at degree %d: %s' % (e, error.message))
            break
        searched = e
        if witness is not None:
            return Verdict(const.NOT_PROJECTIVE, witness, e)
    warnings.warn('%r is not free but V^r has no nonzero rational point up to degree %d.' % (M, searched))
    return Verdict(const.NO_WITNESS, None, searched)


def homogeneity_check(M, e=None, budget=None):
    """
    Closure of V^r(M) over F_{p^e} under a -> lambda . a for every nonzero
    lambda, and under a_{n+1} -> -a_{n+1}.
    Returns:
        CheckResult, the counterexample being (point, image)
    """
    variety = rank_variety(M, e, budget)
    field, alg = variety.field, M.alg
    for point in variety.points:
        images = [k_action(alg, field, point, lam) for lam in range(1, field.q)]
        images.append(sign_flip(alg, field, point))
        for image in images:
            if not variety.contains(image):
                return CheckResult(False, (point, image))
    return CheckResult(True, None)


def _compare_nonzero(combined, first, second):
    expected = set(first.nonzero_points()) & set(second.nonzero_points())
    actual = set(combined.nonzero_points())
    difference = sorted(expected ^ actual)
    if difference:
        return CheckResult(False, difference[0])
    return CheckResult(True, None)


def tensor_support_check(M, N, e=None, budget=None):
    """V^r(M (x) N) minus 0 against the intersection of V^r(M) and V^r(N) minus 0."""
    combined = rank_variety(tensor(M, N), e, budget)
    return _compare_nonzero(combined, rank_variety(M, e, budget), rank_variety(N, e, budget))


def hom_support_check(M, N, e=None, budget=None):
    """V^r(Hom(M, N)) minus 0 against the intersection of V^r(M) and V^r(N) minus 0."""
    combined = rank_variety(internal_hom(M, N), e, budget)
    return _compare_nonzero(combined, rank_variety(M, e, budget), rank_variety(N, e, budget))

