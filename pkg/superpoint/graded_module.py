"""Data types for finite-dimensional Z/2-graded kE-modules and maps between them."""
from collections import OrderedDict

import numpy as np

from superpoint import constants as const
from superpoint import linalg
from superpoint.custom_exception import (AlgebraMismatch, BadParameters, CharacteristicMismatch, DimensionMismatch,
                                         FieldMismatch)


class GradedModule(object):
    """
    A kE-module given by the matrices of the generators acting on column
    vectors of the underlying space.

    Attributes:
        field: FiniteField of the entries
        alg: AlgebraPresentation acting
        parity: int array, parity of each basis vector
        actions: OrderedDict generator name -> dim x dim matrix, in the
                 order of alg.generator_names
    """

    def __init__(self, field, alg, parity, actions):
        if field.p != alg.p:
            raise CharacteristicMismatch('%r cannot act over %r.' % (alg, field))
        self.field = field
        self.alg = alg
        self.parity = np.array(parity, dtype=np.int64).reshape(-1) % 2
        self.parity.setflags(write=False)
        dim = len(self.parity)
        missing = [name for name in alg.generator_names if name not in actions]
        extra = [name for name in actions if name not in alg.generator_names]
        if missing or extra:
            raise BadParameters('Module actions must be given for exactly %s (missing %s, unknown %s).'
                                % (alg.generator_names, missing, extra))
        self.actions = OrderedDict()
        for name in alg.generator_names:
            matrix = np.array(actions[name], dtype=np.int64).reshape(-1, dim) if dim else linalg.zeros(0, 0)
            if matrix.shape != (dim, dim):
                raise DimensionMismatch('The %s matrix has shape %s, expected %s.' % (name, matrix.shape, (dim, dim)))
            if np.any(matrix < 0) or np.any(matrix >= field.q):
                raise BadParameters('The %s matrix has entries outside %r.' % (name, field))
            matrix.setflags(write=False)
            self.actions[name] = matrix
        self._powers = {}

    @property
    def dim(self):
        return len(self.parity)

    @property
    def even_actions(self):
        return [self.actions[name] for name in self.alg.generator_names if name != const.SIGMA]

    @property
    def sigma(self):
        return self.actions.get(const.SIGMA)

    def generator_matrices(self):
        return list(self.actions.values())

    def generator_power(self, name, k):
        key = (name, k)
        if key not in self._powers:
            self._powers[key] = linalg.matrix_power(self.field, self.actions[name], k)
        return self._powers[key]

    def monomial_action(self, mon):
        """Matrix of s^exps sigma^eps."""
        result = linalg.identity(self.dim)
        for name, a in zip(self.alg.generator_names, mon.exps):
            if a:
                result = self.field.matmul(result, self.generator_power(name, a))
        if mon.eps:
            result = self.field.matmul(result, self.sigma)
        return result

    def element_action(self, x):
        """Matrix of an AlgebraElement acting on the module."""
        if x.alg != self.alg:
            raise AlgebraMismatch()
        if x.field != self.field:
            raise FieldMismatch()
        total = linalg.zeros(self.dim, self.dim)
        for mon, coeff in x.terms.items():
            total = self.field.add(total, self.field.scale(coeff, self.monomial_action(mon)))
        return total

    def check_compatible(self, other):
        if self.alg != other.alg:
            raise AlgebraMismatch('Modules over %r and %r cannot be combined.' % (self.alg, other.alg))
        if self.field != other.field:
            raise FieldMismatch('Modules over %r and %r cannot be combined.' % (self.field, other.field))

    def __eq__(self, other):
        return (isinstance(other, GradedModule) and self.alg == other.alg and self.field == other.field and
                np.array_equal(self.parity, other.parity) and
                all(np.array_equal(self.actions[name], other.actions[name]) for name in self.actions))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'GradedModule(%r over %r, dim %d)' % (self.alg, self.field, self.dim)


class ModuleMap(object):
    """
    A linear map between two modules over the same algebra and field, of
    parity 0 or 1.
    """

    def __init__(self, source, target, matrix, parity=0):
        source.check_compatible(target)
        matrix = np.array(matrix, dtype=np.int64).reshape(target.dim, source.dim)
        self.source = source
        self.target = target
        self.matrix = matrix
        self.parity = int(parity) % 2

    def check(self):
        """
        Whether the map is a module map: it shifts parities by self.parity,
        commutes with the even generators, and satisfies
        sigma f = (-1)^parity f sigma.
        """
        field = self.source.field
        rows, cols = np.nonzero(self.matrix)
        if np.any((self.target.parity[rows] - self.source.parity[cols]) % 2 != self.parity):
            return False
        for name in self.source.alg.generator_names:
            left = field.matmul(self.target.actions[name], self.matrix)
            right = field.matmul(self.matrix, self.source.actions[name])
            if name == const.SIGMA and self.parity:
                right = field.neg(right)
            if not np.array_equal(left, right):
                return False
        return True

    def compose(self, other):
        """self after other"""
        return ModuleMap(other.source, self.target, self.source.field.matmul(self.matrix, other.matrix),
                         self.parity + other.parity)
