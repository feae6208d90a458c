"""
Presentations of the elementary group algebras kE.

Three families are supported, all quotients of k[s_1, ..., s_n, sigma] with
the s_i even and sigma odd:

    witt          s_1^p, ..., s_{n-1}^p, s_n^(p^m), s_n^p - sigma^2   (n >= 1, m >= 2)
    exterior      s_1^p, ..., s_n^p, sigma^2                          (n >= 0)
    elem_abelian  s_1^p, ..., s_n^p (no sigma)                        (n >= 1)

The monomials s^exps sigma^eps below the exponent bounds form a basis,
ordered lexicographically on (exps, eps). The product of two basis monomials
is again a basis monomial or zero, so multiplication is pure rewriting.
"""
import itertools
from collections import namedtuple

import numpy as np

from superpoint import constants as const
from superpoint.custom_exception import AlgebraMismatch, BadParameters, CharacteristicMismatch, FieldMismatch
from superpoint.fields import check_characteristic
from superpoint.graded_module import GradedModule

Monomial = namedtuple('Monomial', ['exps', 'eps'])


class AlgebraPresentation(object):
    """
    One algebra kE of the three families.

    Attributes:
        p: characteristic
        family: one of constants.FAMILIES
        n: number of even generators
        m: Witt height (None outside the Witt family)
        bounds: exclusive exponent bound of each s_i
        basis: list of Monomial in canonical order
        index: Monomial -> position in basis
        generator_names: 's1', ..., 'sn' and 'sigma' when present
    """

    def __init__(self, p, family, n, m=None):
        p = check_characteristic(p)
        if family not in const.FAMILIES:
            raise BadParameters('Unknown family %r, expected one of %s.' % (family, ', '.join(const.FAMILIES)))
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise BadParameters('n must be an integer, got %r.' % (n,))
        n = int(n)
        if family == const.WITT:
            if n < 1 or isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 2:
                raise BadParameters('The Witt family needs n >= 1 and m >= 2, got n = %s, m = %s.' % (n, m))
            m = int(m)
        else:
            if m is not None:
                raise BadParameters('Only the Witt family takes the parameter m.')
            if family == const.EXTERIOR and n < 0:
                raise BadParameters('The exterior family needs n >= 0, got n = %d.' % n)
            if family == const.ELEM_ABELIAN and n < 1:
                raise BadParameters('The elementary abelian family needs n >= 1, got n = %d.' % n)
        self.p = p
        self.family = family
        self.n = n
        self.m = m
        self.bounds = tuple(p for _ in range(n))
        if family == const.WITT:
            self.bounds = self.bounds[:-1] + (p ** m,)
        self.has_sigma = family != const.ELEM_ABELIAN
        eps_range = (0, 1) if self.has_sigma else (0,)
        self.basis = [Monomial(tuple(exps), eps)
                      for exps in itertools.product(*[range(b) for b in self.bounds])
                      for eps in eps_range]
        self.index = dict((mon, i) for i, mon in enumerate(self.basis))
        self.parities = np.array([mon.eps for mon in self.basis], dtype=np.int64)
        self.generator_names = ['%s%d' % (const.EVEN_PREFIX, i + 1) for i in range(n)]
        if self.has_sigma:
            self.generator_names.append(const.SIGMA)
        self._regular = None

    @property
    def dim(self):
        return len(self.basis)

    def expected_dim(self):
        if self.family == const.WITT:
            return 2 * self.p ** (self.n - 1 + self.m)
        if self.family == const.EXTERIOR:
            return 2 * self.p ** self.n
        return self.p ** self.n

    @property
    def point_length(self):
        """Number of coordinates of a standard pi-point."""
        return self.n + 1 if self.has_sigma else self.n

    def key(self):
        return (self.p, self.family, self.n, self.m)

    def __eq__(self, other):
        return isinstance(other, AlgebraPresentation) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.family == const.WITT:
            return 'Witt(%d, %d, %d)' % (self.p, self.n, self.m)
        if self.family == const.EXTERIOR:
            return 'ExteriorLike(%d, %d)' % (self.p, self.n)
        return 'ElemAbelian(%d, %d)' % (self.p, self.n)

    def to_json(self):
        spec = {'p': self.p, 'family': self.family, 'n': self.n}
        if self.family == const.WITT:
            spec['m'] = self.m
        return spec

    @property
    def unit(self):
        return Monomial((0,) * self.n, 0)

    def generator_monomial(self, name):
        if name == const.SIGMA and self.has_sigma:
            return Monomial((0,) * self.n, 1)
        if name in self.generator_names:
            i = self.generator_names.index(name)
            return Monomial(tuple(int(j == i) for j in range(self.n)), 0)
        raise BadParameters('%r has no generator %r.' % (self, name))

    def is_monomial(self, mon):
        return mon in self.index

    def multiply_monomials(self, u, v):
        """
        Normal form of u*v: a basis Monomial, or None when the product is 0.
        """
        exps = [a + b for a, b in zip(u.exps, v.exps)]
        eps = u.eps + v.eps
        if eps == 2:
            if self.family != const.WITT:
                return None
            exps[-1] += self.p
            eps = 0
        if any(a >= b for a, b in zip(exps, self.bounds)):
            return None
        return Monomial(tuple(exps), eps)

    def regular_matrices(self):
        """
        Left multiplication by every basis monomial, as an array of shape
        (dim, dim, dim) indexed by (monomial, row, column).
        """
        if self._regular is None:
            regular = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
            for b, mon in enumerate(self.basis):
                for j, other in enumerate(self.basis):
                    product = self.multiply_monomials(mon, other)
                    if product is not None:
                        regular[b, self.index[product], j] = 1
            regular.setflags(write=False)
            self._regular = regular
        return self._regular

    def format_monomial(self, mon):
        factors = []
        for i, a in enumerate(mon.exps):
            if a == 1:
                factors.append('s%d' % (i + 1))
            elif a > 1:
                factors.append('s%d^%d' % (i + 1, a))
        if mon.eps:
            factors.append(const.SIGMA)
        return '*'.join(factors) if factors else '1'


def alg_create(p, family, n, m=None):
    return AlgebraPresentation(p, family, n, m)


def algebra_from_json(spec):
    try:
        return AlgebraPresentation(spec['p'], spec['family'], spec['n'], spec.get('m'))
    except KeyError as e:
        raise BadParameters('Algebra spec is missing the key %s.' % e)


class AlgebraElement(object):
    """
    A finite linear combination of basis monomials, canonical (no zero
    coefficients). Coefficients are scalar encodings of field.
    """

    def __init__(self, alg, field, terms=None):
        if field.p != alg.p:
            raise CharacteristicMismatch()
        self.alg = alg
        self.field = field
        clean = {}
        for mon, coeff in (terms or {}).items():
            mon = Monomial(tuple(int(a) for a in mon[0]), int(mon[1]))
            if not alg.is_monomial(mon):
                raise BadParameters('%r is not a basis monomial of %r.' % (mon, alg))
            coeff = field.check_code(coeff)
            if coeff:
                clean[mon] = coeff
        self.terms = clean

    @classmethod
    def monomial(cls, alg, field, mon, coeff=1):
        return cls(alg, field, {mon: coeff})

    @classmethod
    def generator(cls, alg, field, name):
        return cls(alg, field, {alg.generator_monomial(name): 1})

    @classmethod
    def from_vector(cls, alg, field, vector):
        return cls(alg, field, dict((alg.basis[i], int(c)) for i, c in enumerate(vector) if c))

    def to_vector(self):
        v = np.zeros(self.alg.dim, dtype=np.int64)
        for mon, coeff in self.terms.items():
            v[self.alg.index[mon]] = coeff
        return v

    def _check(self, other):
        if self.alg != other.alg:
            raise AlgebraMismatch('Cannot combine elements of %r and %r.' % (self.alg, other.alg))
        if self.field != other.field:
            raise FieldMismatch()

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for mon, coeff in other.terms.items():
            terms[mon] = int(self.field.add(terms.get(mon, 0), coeff))
        return AlgebraElement(self.alg, self.field, terms)

    def __neg__(self):
        return self.scale(self.field.p - 1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return alg_multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement) and self.alg == other.alg and
                self.field == other.field and self.terms == other.terms)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.alg, self.field, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return '0'
        parts = []
        for mon in sorted(self.terms):
            coeff = self.terms[mon]
            name = self.alg.format_monomial(mon)
            if coeff == 1:
                parts.append(name)
            elif name == '1':
                parts.append(self.field.format_scalar(coeff))
            else:
                parts.append('%s*%s' % (self.field.format_scalar(coeff), name))
        return ' + '.join(parts)

    def scale(self, c):
        return AlgebraElement(self.alg, self.field,
                              dict((mon, int(self.field.mul(coeff, int(c)))) for mon, coeff in self.terms.items()))

    def power(self, k):
        result = AlgebraElement.monomial(self.alg, self.field, self.alg.unit)
        for _ in range(k):
            result = result * self
        return result

    def is_zero(self):
        return not self.terms

    def coefficient(self, mon):
        return self.terms.get(Monomial(tuple(mon[0]), mon[1]), 0)

    def constant_term(self):
        return self.terms.get(self.alg.unit, 0)

    def parities(self):
        return set(mon.eps for mon in self.terms)

    def is_homogeneous(self):
        return len(self.parities()) <= 1

    def is_even(self):
        return self.parities() <= {const.EVEN}

    def left_multiplication(self):
        """Matrix of x -> self * x on the canonical basis."""
        regular = self.alg.regular_matrices()
        matrix = np.zeros((self.alg.dim, self.alg.dim), dtype=np.int64)
        for mon, coeff in self.terms.items():
            matrix = self.field.add(matrix, self.field.scale(coeff, regular[self.alg.index[mon]]))
        return matrix

    def to_json(self):
        """{"monomial-exponents": coefficient}, keys like "2,0;1" (exponents;eps)."""
        return dict((monomial_key(mon), self.field.scalar_to_json(coeff))
                    for mon, coeff in sorted(self.terms.items()))


def monomial_key(mon):
    return '%s;%d' % (','.join(str(a) for a in mon.exps), mon.eps)


def parse_monomial_key(key):
    try:
        exps, eps = key.split(';')
        exps = tuple(int(a) for a in exps.split(',')) if exps else ()
        return Monomial(exps, int(eps))
    except ValueError:
        raise BadParameters('Monomial key %r is not of the form "e1,...,en;eps".' % (key,))


def element_from_json(alg, field, data):
    return AlgebraElement(alg, field, dict((parse_monomial_key(key), field.scalar_from_json(value))
                                           for key, value in data.items()))


def alg_multiply(x, y):
    """
    Product in kE. No Koszul signs: kE is commutative as a ring.
    Raises:
        AlgebraMismatch: x and y over different presentations
    """
    x._check(y)
    alg, field = x.alg, x.field
    terms = {}
    for u, cu in x.terms.items():
        for v, cv in y.terms.items():
            product = alg.multiply_monomials(u, v)
            if product is None:
                continue
            terms[product] = int(field.add(terms.get(product, 0), field.mul(cu, cv)))
    return AlgebraElement(alg, field, terms)


def regular_module(alg, field):
    """
    The free module kE of rank one, acting on itself by left multiplication.
    Raises:
        CharacteristicMismatch: field and algebra characteristics differ
    """
    if field.p != alg.p:
        raise CharacteristicMismatch('%r cannot act over %r.' % (alg, field))
    regular = alg.regular_matrices()
    actions = dict((name, regular[alg.index[alg.generator_monomial(name)]])
                   for name in alg.generator_names)
    return GradedModule(field, alg, alg.parities, actions)
