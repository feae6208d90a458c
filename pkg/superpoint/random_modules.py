"""
Seeded generators for test corpora: random modules assembled from cyclic
pieces, random valid algebra maps for the Witt family and random tuples of
commuting operators.

All randomness comes from numpy's default_rng(seed), so the same seed gives
the same output.
"""
from collections import namedtuple
from functools import reduce

import numpy as np

from superpoint import config
from superpoint import constants as const
from superpoint.algorithms.pipoint.pipoint import AlgebraMapSpec, PiPointRep, standard_spec
from superpoint.custom_exception import BadParameters
from superpoint.gmodule import direct_sum, ideal_module, parity_shift, quotient_module, trivial_module
from superpoint.superalgebra import AlgebraElement, regular_module

RandomModuleSpec = namedtuple('RandomModuleSpec', ['alg', 'field', 'dim', 'seed', 'odd_fraction'])
RandomModuleSpec.__new__.__defaults__ = (0.5,)

CommutingTuple = namedtuple('CommutingTuple', ['module', 'beta', 'gamma', 'delta', 'eps'])


def random_scalar(rng, field, nonzero=False):
    low = 1 if nonzero else 0
    return int(rng.integers(low, field.q))


def random_element(rng, alg, field, monomials):
    """Random linear combination of the given monomials."""
    return AlgebraElement(alg, field, dict((mon, random_scalar(rng, field)) for mon in monomials))


def random_radical_element(rng, alg, field):
    """Random homogeneous element without constant term, never zero."""
    parity = int(rng.integers(0, 2)) if alg.has_sigma else const.EVEN
    monomials = [mon for mon in alg.basis if mon.eps == parity and mon != alg.unit]
    x = random_element(rng, alg, field, monomials)
    if x.is_zero():
        x = AlgebraElement.monomial(alg, field, monomials[int(rng.integers(0, len(monomials)))])
    return x


def random_generators(rng, alg, field):
    count = int(rng.integers(1, config.RANDOM_MAX_GENERATORS + 1))
    return [random_radical_element(rng, alg, field) for _ in range(count)]


def random_quotient(rng, alg, field, remaining):
    """kE / (x_1, ..., x_r) of dimension at most remaining."""
    generators = random_generators(rng, alg, field)
    piece = quotient_module(alg, field, generators)
    names = list(alg.generator_names)
    while piece.dim > remaining:
        if len(generators) > config.RANDOM_MAX_GENERATORS and names:
            generators.append(AlgebraElement.generator(alg, field, names.pop(0)))
        else:
            generators.append(random_radical_element(rng, alg, field))
        piece = quotient_module(alg, field, generators)
    return piece


def random_piece(rng, alg, field, remaining):
    kind = int(rng.integers(0, 4))
    if kind == 0 and alg.dim <= remaining:
        return regular_module(alg, field)
    if kind == 1:
        piece = ideal_module(alg, field, random_generators(rng, alg, field))
        if 0 < piece.dim <= remaining:
            return piece
    if kind == 2:
        return trivial_module(alg, field)
    return random_quotient(rng, alg, field, remaining)


def module_random(spec):
    """
    A valid module of dimension spec.dim: a direct sum of free modules,
    ideals, cyclic quotients and trivial modules, each parity shifted with
    probability spec.odd_fraction.
    Raises:
        BadParameters: dim < 1
    """
    if spec.dim < 1:
        raise BadParameters('A random module needs dim >= 1.')
    rng = np.random.default_rng(spec.seed)
    pieces = []
    total = 0
    while total < spec.dim:
        piece = random_piece(rng, spec.alg, spec.field, spec.dim - total)
        if rng.random() < spec.odd_fraction:
            piece = parity_shift(piece)
        pieces.append(piece)
        total += piece.dim
    return reduce(direct_sum, pieces)


def random_module(alg, field, dim, seed):
    return module_random(RandomModuleSpec(alg, field, dim, seed))


def random_point(rng, alg, field):
    while True:
        coords = [random_scalar(rng, field) for _ in range(alg.point_length)]
        if any(coords):
            return PiPointRep(alg, field, coords)


def _exps_allowed_in_f(alg, exps):
    """Monomials u with u^p in the defining ideal, so f + u stays compatible."""
    if not any(exps):
        return False
    return any(a >= 1 for a in exps[:-1]) or exps[-1] >= alg.p ** (alg.m - 1)


def spec_random(alg, field, seed):
    """
    A random valid algebra map for the Witt family: the standard map of a
    random point, plus terms in f whose p-th powers vanish and terms in g
    that vanish after multiplication by s_n^p.
    Returns:
        (AlgebraMapSpec, the PiPointRep it was built from)
    """
    if alg.family != const.WITT:
        raise BadParameters('Random algebra maps are drawn for the Witt family.')
    rng = np.random.default_rng(seed)
    a = random_point(rng, alg, field)
    standard = standard_spec(a)
    even = [mon for mon in alg.basis if mon.eps == 0]
    f_extra = [mon for mon in even if _exps_allowed_in_f(alg, mon.exps)]
    g_extra = [mon for mon in even if mon.exps[-1] >= alg.p ** alg.m - alg.p]
    f = standard.f + random_element(rng, alg, field, f_extra)
    g = standard.g + random_element(rng, alg, field, g_extra)
    return AlgebraMapSpec(alg, field, f, g), a


def commuting_tuple_random(alg, field, dim, seed):
    """
    Commuting operators beta, gamma, delta, eps on a random module with
    gamma^p = 0 = delta^(p^m) and delta^p = eps^2. All four are actions of
    elements of kE, which is commutative.
    """
    M = random_module(alg, field, dim, seed)
    rng = np.random.default_rng(seed + 1)
    spec, _ = spec_random(alg, field, seed + 2)
    beta = M.element_action(random_element(rng, alg, field, alg.basis))
    nilpotent = [mon for mon in alg.basis
                 if mon.eps == 0 and any(alg.p * a >= b for a, b in zip(mon.exps, alg.bounds))]
    gamma = M.element_action(random_element(rng, alg, field, nilpotent))
    delta = M.element_action(spec.f)
    eps = field.matmul(M.element_action(spec.g), M.sigma)
    return CommutingTuple(M, beta, gamma, delta, eps)
