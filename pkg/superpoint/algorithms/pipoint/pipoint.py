"""
This module is a wrapper around algorithms.py for pi-points of kE.

A standard pi-point is given by a nonzero point a = (a_1, ..., a_{n+1})
(n coordinates for the elementary abelian family) and restricts a module M
to the pair of operators (T, Tau) with Tau^2 = T^p. An arbitrary algebra
map t -> f(s), tau -> g(s) sigma is brought to a standard one through its
hypersurface coefficients b, and two points are equivalent when their
Frobenius images agree as projective points.
"""
import warnings
from collections import namedtuple

import numpy as np

import superpoint.algorithms.pipoint.algorithms as algo
from superpoint import constants as const
from superpoint import linalg
from superpoint.custom_exception import (AlgebraMismatch, BadParameters, CharacteristicMismatch, FieldMismatch,
                                         IncompatiblePair, NotAPiPoint, RelationViolation, ZeroPoint)
from superpoint.fields import common_field
from superpoint.superalgebra import AlgebraElement, Monomial

RestrictedAction = namedtuple('RestrictedAction', ['module', 'T', 'Tau'])


class PiPointRep(object):
    """
    A standard pi-point over field.

    Attributes:
        alg: AlgebraPresentation
        field: FiniteField K the point is defined over
        coords: tuple of scalar encodings, never all zero
    """

    def __init__(self, alg, field, coords):
        if field.p != alg.p:
            raise CharacteristicMismatch()
        coords = tuple(field.check_code(c) for c in coords)
        if len(coords) != alg.point_length:
            raise BadParameters('%r takes points with %d coordinates, got %d.' % (alg, alg.point_length, len(coords)))
        if not any(coords):
            raise ZeroPoint()
        self.alg = alg
        self.field = field
        self.coords = coords

    def __eq__(self, other):
        return (isinstance(other, PiPointRep) and self.alg == other.alg and self.field == other.field and
                self.coords == other.coords)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.alg, self.field, self.coords))

    def __repr__(self):
        return 'PiPointRep(%s over %r)' % ([self.field.format_scalar(c) for c in self.coords], self.field)

    def embed(self, target):
        image = self.field.embedding_into(target)
        return PiPointRep(self.alg, target, [int(image[c]) for c in self.coords])


class AlgebraMapSpec(object):
    """
    The algebra map A_K -> KE with t -> f(s) and tau -> g(s) sigma, f and g
    polynomials in the even generators.
    """

    def __init__(self, alg, field, f, g=None):
        if g is None:
            g = AlgebraElement(alg, field)
        for name, x in (('f', f), ('g', g)):
            if x.alg != alg:
                raise AlgebraMismatch('%s lives over %r, expected %r.' % (name, x.alg, alg))
            if x.field != field:
                raise FieldMismatch()
            if not x.is_even() or any(mon.eps for mon in x.terms):
                raise BadParameters('%s must be a polynomial in the even generators.' % name)
        if not alg.has_sigma and not g.is_zero():
            raise IncompatiblePair('Without sigma, tau must map to 0.')
        self.alg = alg
        self.field = field
        self.f = f
        self.g = g

    def __repr__(self):
        return 'AlgebraMapSpec(f = %r, g = %r)' % (self.f, self.g)


def _monomial(alg, i, power):
    return Monomial(tuple(power if j == i else 0 for j in range(alg.n)), 0)


def standard_spec(a):
    """The pair (f, g) of the standard pi-point a."""
    alg, field, coords = a.alg, a.field, a.coords
    n, p = alg.n, alg.p
    f = AlgebraElement(alg, field)
    g = AlgebraElement(alg, field)
    if alg.family == const.WITT:
        for i in range(n - 1):
            f = f + AlgebraElement.monomial(alg, field, _monomial(alg, i, 1), coords[i])
        f = f + AlgebraElement.monomial(alg, field, _monomial(alg, n - 1, p ** (alg.m - 1)), coords[n - 1])
        f = f + AlgebraElement.monomial(alg, field, _monomial(alg, n - 1, 1), int(field.power(coords[n], 2)))
        g = AlgebraElement.monomial(alg, field, alg.unit, int(field.power(coords[n], p)))
    else:
        for i in range(n):
            f = f + AlgebraElement.monomial(alg, field, _monomial(alg, i, 1), coords[i])
        if alg.has_sigma:
            g = AlgebraElement.monomial(alg, field, alg.unit, coords[n])
    return AlgebraMapSpec(alg, field, f, g)


def k_action(alg, field, coords, lam):
    """
    lambda . a: (lambda^2 a_i, lambda a_{n+1}) for Witt,
    (lambda^2 a_i, lambda^p a_{n+1}) for the exterior family and
    (lambda a_i) for the elementary abelian family.
    """
    coords = np.asarray(coords, dtype=np.int64)
    if alg.family == const.ELEM_ABELIAN:
        return tuple(int(c) for c in field.mul(coords, lam))
    even = field.mul(coords[:alg.n], field.power(lam, 2))
    last_power = 1 if alg.family == const.WITT else alg.p
    last = field.mul(coords[alg.n], field.power(lam, last_power))
    return tuple(int(c) for c in even) + (int(last),)


def sign_flip(alg, field, coords):
    """a_{n+1} -> -a_{n+1}"""
    if not alg.has_sigma:
        return tuple(coords)
    return tuple(coords[:-1]) + (int(field.neg(coords[-1])),)


class RestrictionOperators(object):
    """
    Precomputed operators of M entering every standard restriction, so that
    many points can be evaluated against one module.
    """

    def __init__(self, M):
        alg, field = M.alg, M.field
        self.module = M
        self.zero = linalg.zeros(M.dim, M.dim)
        evens = M.even_actions
        if alg.family == const.WITT:
            self.even = evens[:-1] + [M.generator_power(alg.generator_names[alg.n - 1], alg.p ** (alg.m - 1))]
            self.last = evens[-1]
        else:
            self.even = evens
            self.last = None
        self.sigma = M.sigma

    def matrices(self, coords):
        """(T, Tau) at a point, which may be zero."""
        M = self.module
        alg, field = M.alg, M.field
        n, p = alg.n, alg.p
        T = linalg.linear_combination(field, coords[:n], self.even, (M.dim, M.dim))
        if alg.family == const.WITT:
            last = int(coords[n])
            if last:
                T = field.add(T, field.scale(field.power(last, 2), self.last))
            Tau = field.scale(field.power(last, p), self.sigma)
        elif alg.family == const.EXTERIOR:
            Tau = field.scale(coords[n], self.sigma)
        else:
            Tau = self.zero
        return T, Tau


def check_relation(field, T, Tau):
    """
    Raises:
        RelationViolation: Tau^2 != T^p
    """
    if not np.array_equal(field.matmul(Tau, Tau), linalg.matrix_power(field, T, field.p)):
        raise RelationViolation('The restricted operators violate Tau^2 = T^p.')


def standard_restriction(M, a):
    """
    alpha_a^*(M): T = a_1 S_1 + ... + a_{n-1} S_{n-1} + a_n S_n^(p^(m-1)) + a_{n+1}^2 S_n
    and Tau = a_{n+1}^p Sigma (Witt); T = sum a_i S_i, Tau = a_{n+1} Sigma
    (exterior); T = sum a_i S_i, Tau = 0 (elementary abelian).
    Raises:
        FieldMismatch: M and a over different fields
        RelationViolation: Tau^2 != T^p, M is not a module
    """
    if a.alg != M.alg:
        raise AlgebraMismatch()
    if a.field != M.field:
        raise FieldMismatch('The point lives over %r and the module over %r.' % (a.field, M.field))
    T, Tau = RestrictionOperators(M).matrices(a.coords)
    check_relation(M.field, T, Tau)
    return RestrictedAction(M, T, Tau)


def general_restriction(M, spec):
    """T = f(S), Tau = g(S) Sigma for an arbitrary algebra map (f, g)."""
    if spec.alg != M.alg:
        raise AlgebraMismatch()
    if spec.field != M.field:
        raise FieldMismatch()
    field = M.field
    T = M.element_action(spec.f)
    if M.alg.has_sigma:
        Tau = field.matmul(M.element_action(spec.g), M.sigma)
    else:
        Tau = linalg.zeros(M.dim, M.dim)
    check_relation(field, T, Tau)
    return RestrictedAction(M, T, Tau)


def coefficient_tuple(spec):
    """
    Hypersurface coefficients b of f^p - g^2 sigma^2 modulo m I.
    Raises:
        IncompatiblePair: (f, g) does not define an algebra map
    """
    alg, field = spec.alg, spec.field
    n, p = alg.n, alg.p
    f = algo.from_element(spec.f)
    g = algo.from_element(spec.g)
    if algo.constant_term(f, n):
        raise IncompatiblePair('f has a nonzero constant term, so f^p is not in the defining ideal.')
    if alg.family == const.WITT:
        h = algo.witt_relation_excess(alg, field, f, g)
        outside = [exps for exps in h if not algo.in_hypersurface_ideal(alg, exps)]
        if outside:
            raise IncompatiblePair('f^p - g^2 s%d^%d has the term s^%s outside the defining ideal.'
                                   % (n, p, list(outside[0])))
        return tuple(algo.witt_coefficients(alg, field, h, g))
    b = [int(field.frobenius(algo.linear_coefficient(f, n, i))) for i in range(n)]
    if alg.family == const.EXTERIOR:
        g0 = algo.constant_term(g, n)
        b.append(int(field.neg(field.mul(g0, g0))))
    return tuple(b)


def is_pi_point(spec):
    return any(coefficient_tuple(spec))


def _root_with_extension(field, value):
    """A square root of value, moving to the quadratic extension when needed."""
    root = field.square_root(value)
    if root is not None:
        return field, None, root
    bigger = field.extension(2)
    warnings.warn('%s is not a square in %r, the point is defined over %r.'
                  % (field.format_scalar(value), field, bigger))
    image = field.embedding_into(bigger)
    return bigger, image, bigger.square_root(int(image[value]))


def normalize_coefficients(alg, field, b):
    """
    The standard point with Frobenius image b: a_i = b_i^(1/p) and
    a_{n+1} = b_{n+1}^(1/2p) (Witt) or (-b_{n+1})^(1/2) (exterior).
    Raises:
        NotAPiPoint: b = 0
    """
    b = [field.check_code(c) for c in b]
    if len(b) != alg.point_length:
        raise BadParameters('Expected %d coefficients, got %d.' % (alg.point_length, len(b)))
    if not any(b):
        raise NotAPiPoint()
    n = alg.n
    if not alg.has_sigma:
        return PiPointRep(alg, field, [int(field.pth_root(c)) for c in b])
    target = b[n] if alg.family == const.WITT else int(field.neg(b[n]))
    K, image, root = _root_with_extension(field, target)
    if image is not None:
        b = [int(image[c]) for c in b]
    coords = [int(K.pth_root(c)) for c in b[:n]]
    last = K.pth_root(root) if alg.family == const.WITT else root
    return PiPointRep(alg, K, coords + [int(last)])


def normalize(spec):
    return normalize_coefficients(spec.alg, spec.field, coefficient_tuple(spec))


def frobenius_image_coords(alg, field, coords):
    """
    F(a) normalised so the first nonzero coordinate is 1, or None for a = 0.
    Witt: [a_i^p, a_{n+1}^(2p)]; exterior: [a_i^p, -a_{n+1}^2]; elementary
    abelian: [a_i^p].
    """
    coords = np.asarray(coords, dtype=np.int64)
    n, p = alg.n, alg.p
    image = [int(c) for c in field.frobenius(coords[:n])]
    if alg.family == const.WITT:
        image.append(int(field.power(coords[n], 2 * p)))
    elif alg.family == const.EXTERIOR:
        image.append(int(field.neg(field.power(coords[n], 2))))
    return projective_normalize(field, image)


def projective_normalize(field, coords):
    nonzero = [c for c in coords if c]
    if not nonzero:
        return None
    scale = field.inv(nonzero[0])
    return tuple(int(c) for c in field.mul(np.asarray(coords, dtype=np.int64), scale))


def frobenius_image(a):
    return frobenius_image_coords(a.alg, a.field, a.coords)


def equivalent(a, b):
    """Whether the two points have the same Frobenius image, over a common field."""
    if a.alg != b.alg:
        raise AlgebraMismatch()
    field = common_field(a.field, b.field)
    return frobenius_image(a.embed(field)) == frobenius_image(b.embed(field))


def _term(field, coeff, variable):
    if coeff == 1:
        return variable
    return '%s*%s' % (field.format_scalar(coeff), variable)


def _binomial(field, first, coeff, second):
    """first - coeff*second"""
    if coeff == 0:
        return first
    return '%s - %s' % (first, _term(field, coeff, second))


def _cross_terms(field, b):
    """b_i x_j - b_j x_i for i < j, divided by their leading coefficient, without repeats."""
    terms = []
    for i in range(len(b)):
        for j in range(i + 1, len(b)):
            if b[i]:
                ratio = int(field.mul(b[j], field.inv(b[i])))
                term = _binomial(field, 'x_%d' % (j + 1), ratio, 'x_%d' % (i + 1))
            elif b[j]:
                term = 'x_%d' % (i + 1)
            else:
                continue
            if term not in terms:
                terms.append(term)
    return terms


def support_prime_generators(alg, field, b):
    """
    Generators of the prime ideal of the cohomology ring belonging to the
    support point b, in the variables u_i, x_i, zeta.
    """
    b = projective_normalize(field, [field.check_code(c) for c in b])
    if b is None:
        raise ZeroPoint()
    n = alg.n
    odd = ['u_%d' % (i + 1) for i in range(n)]
    if not alg.has_sigma:
        return _cross_terms(field, b) + odd
    last = b[n]
    if last:
        scale = field.inv(last)
        return [_binomial(field, 'x_%d' % (i + 1), int(field.mul(b[i], scale)), '%s^2' % const.ZETA)
                for i in range(n)] + odd
    return [const.ZETA] + _cross_terms(field, b[:n]) + odd


def prime_ideal_generators(a):
    return support_prime_generators(a.alg, a.field, frobenius_image(a))


def hypersurface_equation(alg, field, b):
    """The hypersurface h_b of a support point b, as a display string."""
    b = [field.check_code(c) for c in b]
    n, p = alg.n, alg.p
    terms = []
    for i in range(n):
        power = p ** alg.m if (alg.family == const.WITT and i == n - 1) else p
        terms.append((b[i], 's%d^%d' % (i + 1, power)))
    if alg.family == const.WITT:
        terms.append((b[n], '(s%d^%d - %s^2)' % (n, p, const.SIGMA)))
    elif alg.family == const.EXTERIOR:
        terms.append((b[n], '%s^2' % const.SIGMA))
    shown = [_term(field, c, name) for c, name in terms if c]
    return ' + '.join(shown) if shown else '0'
