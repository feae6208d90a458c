"""
The square zero block matrices behind the rank criterion.

A pair (T, Tau) with Tau^2 = T^p is a module over K[t, tau]/(t^p - tau^2).
It has finite flat dimension precisely when

    [[ Tau,        T   ],
     [ -T^(p-1),  -Tau ]]

has maximal image on M + M, i.e. rank = dim M.
"""
import warnings

import numpy as np

from superpoint import constants as const
from superpoint import linalg
from superpoint.custom_exception import BadParameters, RelationViolation


def block_matrix(field, tau, upper, lower):
    """[[tau, upper], [-lower, -tau]]"""
    return np.block([[tau, upper], [field.neg(lower), field.neg(tau)]])


def check_square_zero(field, matrix):
    """
    Raises:
        RelationViolation: the matrix does not square to zero
    """
    if not linalg.is_zero(field.matmul(matrix, matrix)):
        raise RelationViolation()


def rank_matrix(field, T, Tau, exterior_paper=False):
    """
    The block matrix of the rank criterion. exterior_paper selects the
    variant [[Tau, T], [-T, -Tau]], which is evaluated without the square
    zero check.
    """
    lower = T if exterior_paper else linalg.matrix_power(field, T, field.p - 1)
    return block_matrix(field, Tau, T, lower)


def defect(field, matrix, dim):
    """dim - rank, 0 exactly when the image is maximal"""
    return dim - linalg.rank(field, matrix)


def is_paper_mode(alg, exterior_matrix):
    if exterior_matrix not in (const.EXTERIOR_MATRIX_THM, const.EXTERIOR_MATRIX_PAPER):
        raise BadParameters('Unknown exterior matrix %r, expected %r or %r.'
                            % (exterior_matrix, const.EXTERIOR_MATRIX_THM, const.EXTERIOR_MATRIX_PAPER))
    return alg.family == const.EXTERIOR and exterior_matrix == const.EXTERIOR_MATRIX_PAPER


def point_defect(field, T, Tau, paper_mode):
    matrix = rank_matrix(field, T, Tau, paper_mode)
    if paper_mode:
        if not linalg.is_zero(field.matmul(matrix, matrix)):
            warnings.warn('The exterior matrix [[Tau, T], [-T, -Tau]] is not square zero at this point, '
                          'its rank is reported as is.')
    else:
        check_square_zero(field, matrix)
    return defect(field, matrix, T.shape[0])


def jordan_type(field, T):
    """
    Jordan block sizes of the nilpotent operator T, largest first, read
    off the ranks of its powers.
    """
    dim = T.shape[0]
    ranks = [dim]
    power = linalg.identity(dim)
    while ranks[-1]:
        power = field.matmul(power, T)
        r = linalg.rank(field, power)
        if r == ranks[-1]:
            raise BadParameters('The operator is not nilpotent.')
        ranks.append(r)
    ranks.append(0)
    sizes = []
    for k in range(len(ranks) - 2, 0, -1):
        at_least_k = ranks[k - 1] - ranks[k]
        at_least_next = ranks[k] - ranks[k + 1]
        sizes.extend([k] * (at_least_k - at_least_next))
    return sizes


def resolution_matrix(field, T, Tau, i):
    """[[Tau, T^i], [-T^(p-i), -Tau]], the periodic resolution matrix of the i-th A-module."""
    p = field.p
    if i < 1 or i >= p:
        raise BadParameters('i must satisfy 1 <= i <= p - 1, got %s.' % i)
    return block_matrix(field, Tau, linalg.matrix_power(field, T, i), linalg.matrix_power(field, T, p - i))


def commuting_blocks(field, beta, gamma, delta, eps):
    """
    The two block matrices [[eps, delta], [-delta^(p-1), -eps]] and the same
    with delta replaced by delta + beta gamma.
    """
    p = field.p
    shifted = field.add(delta, field.matmul(beta, gamma))
    first = block_matrix(field, eps, delta, linalg.matrix_power(field, delta, p - 1))
    second = block_matrix(field, eps, shifted, linalg.matrix_power(field, shifted, p - 1))
    return first, second
