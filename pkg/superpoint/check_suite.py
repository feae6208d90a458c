"""
The property battery behind the check-suite command. Every check draws its
inputs from the seeded generators of random_modules and records failures in
a ValidationReport, one row per failed instance.
"""
import warnings

import numpy as np

from superpoint import constants as const
from superpoint.algorithms.pipoint.pipoint import (coefficient_tuple, equivalent, frobenius_image,
                                                   general_restriction, k_action, normalize, standard_restriction,
                                                   standard_spec, PiPointRep)
from superpoint.algorithms.resolution.resolution import (betti_closed_form, carlson_module, carlson_sequence,
                                                         carlson_sequence_check, even_classes, minimal_resolution)
from superpoint.algorithms.variety.variety import (commuting_operator_check, find_witness, hom_support_check,
                                                   homogeneity_check, max_image_test, rank_variety,
                                                   tensor_support_check)
from superpoint.fields import FiniteField
from superpoint.gmodule import (change_field, internal_hom, is_free, parity_shift, quotient_module, tensor,
                                trivial_module, validate)
from superpoint.random_modules import commuting_tuple_random, random_module, spec_random
from superpoint.superalgebra import AlgebraElement, alg_create, regular_module
from superpoint.validation_report_class import ValidationReport

FAILED_STATE = 'fails'


def suite_algebras(p):
    """The families of the relation battery."""
    return [alg_create(p, const.WITT, 1, 2), alg_create(p, const.WITT, 2, 2), alg_create(p, const.EXTERIOR, 1),
            alg_create(p, const.ELEM_ABELIAN, 2)]


def corpus_algebras(p):
    """The families whose random corpus goes through the variety checks."""
    return [alg_create(p, const.WITT, 1, 2), alg_create(p, const.EXTERIOR, 1), alg_create(p, const.ELEM_ABELIAN, 2)]


def betti_algebras(p):
    """(algebra, resolution length) pairs compared with the closed form."""
    return [(alg_create(p, const.WITT, 1, 2), 6), (alg_create(p, const.WITT, 2, 2), 4),
            (alg_create(p, const.EXTERIOR, 1), 4), (alg_create(p, const.ELEM_ABELIAN, 1), 6),
            (alg_create(p, const.ELEM_ABELIAN, 2), 4)]


def corpus_dim(i, dim):
    """Dimension of the i-th module of a corpus of modules of dimension at most dim."""
    return 1 + i % dim


def check_relations(report, alg, field, count, seed, dim):
    for i in range(count):
        M = random_module(alg, field, dim, seed + i)
        N = random_module(alg, field, dim, seed + count + i)
        for name, module in (('module', M), ('tensor', tensor(M, N)), ('hom', internal_hom(M, N)),
                             ('parity shift', parity_shift(M))):
            for message in validate(module):
                report.append_violation('relations', '%r seed %d %s: %s' % (alg, seed + i, name, message),
                                        FAILED_STATE)


def check_ground_truth(report, p):
    alg = alg_create(p, const.WITT, 1, 2)
    field = FiniteField(p)
    sigma = AlgebraElement.generator(alg, field, const.SIGMA)
    expected = {
        'regular': [(0, 0)],
        'trivial': [(a, b) for a in range(p) for b in range(p)],
        'quotient by sigma': [(a, 0) for a in range(p)],
    }
    modules = {
        'regular': regular_module(alg, field),
        'trivial': trivial_module(alg, field),
        'quotient by sigma': quotient_module(alg, field, [sigma]),
    }
    for name, M in modules.items():
        if rank_variety(M).points != expected[name]:
            report.append_violation('ground truth', 'V^r of the %s module over F_%d' % (name, p), FAILED_STATE)


def check_projectivity(report, alg, field, count, seed, dim, max_ext):
    for i in range(count):
        M = random_module(alg, field, corpus_dim(i, dim), seed + i)
        if is_free(M):
            for e in (1, 2):
                if rank_variety(M, e).nonzero_points():
                    report.append_violation('projectivity', '%r seed %d: free with a nonzero rank point at e = %d'
                                            % (alg, seed + i, e), FAILED_STATE)
        elif not any(find_witness(M, e) is not None for e in range(1, max_ext + 1)):
            report.append_violation('projectivity', '%r seed %d: not free, no witness up to e = %d'
                                    % (alg, seed + i, max_ext), FAILED_STATE)


def check_homogeneity(report, alg, field, count, seed, dim, e):
    for i in range(count):
        result = homogeneity_check(random_module(alg, field, corpus_dim(i, dim), seed + i), e)
        if not result.ok:
            report.append_violation('homogeneity', '%r seed %d: %s' % (alg, seed + i, result.counterexample),
                                    FAILED_STATE)


def check_support_formulas(report, alg, field, count, seed, dim, e):
    for i in range(count):
        M = random_module(alg, field, corpus_dim(i, dim), seed + i)
        N = random_module(alg, field, corpus_dim(count + i, dim), seed + count + i)
        for name, check in (('tensor', tensor_support_check), ('hom', hom_support_check)):
            result = check(M, N, e)
            if not result.ok:
                report.append_violation('support formulas', '%r seed %d %s at e = %d: %s'
                                        % (alg, seed + i, name, e, result.counterexample), FAILED_STATE)


def check_betti(report, alg, field, length):
    res = minimal_resolution(trivial_module(alg, field), length)
    for i, rank in enumerate(res.ranks):
        if rank != betti_closed_form(alg, i):
            report.append_violation('betti', '%r: rank F_%d = %d' % (alg, i, rank), FAILED_STATE)
    for message in res.check():
        report.append_violation('betti', '%r: %s' % (alg, message), FAILED_STATE)


def raw_frobenius_image(a):
    """(a_i^p, a_{n+1}^(2p)) without projective normalisation."""
    field, n = a.field, a.alg.n
    image = [int(c) for c in field.frobenius(np.array(a.coords[:n], dtype=np.int64))]
    return tuple(image + [int(field.power(a.coords[n], 2 * field.p))])


def check_normalization(report, alg, field, count, seed, dim, modules):
    for i in range(count):
        spec, a = spec_random(alg, field, seed + i)
        if coefficient_tuple(standard_spec(a)) != raw_frobenius_image(a):
            report.append_violation('normalization', 'seed %d: standard coefficients differ from F(a)' % (seed + i),
                                    FAILED_STATE)
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            b = normalize(spec)
        for j in range(modules):
            M = random_module(alg, field, dim, seed + 1000 * (i + 1) + j)
            general = max_image_test(general_restriction(M, spec))
            M_b = M if b.field == M.field else change_field(M, b.field)
            if general != max_image_test(standard_restriction(M_b, b)):
                report.append_violation('normalization', 'seed %d module %d: outcomes differ' % (seed + i, j),
                                        FAILED_STATE)


def nonzero_points(alg, field):
    for coords in np.ndindex(*([field.q] * alg.point_length)):
        if any(coords):
            yield PiPointRep(alg, field, coords)


def check_equivalence(report, alg, field):
    for a in nonzero_points(alg, field):
        for lam in range(1, field.q):
            if not equivalent(a, PiPointRep(alg, field, k_action(alg, field, a.coords, lam))):
                report.append_violation('equivalence', '%s and its multiple by %d' % (a, lam), FAILED_STATE)


def sample_panel(alg, field):
    """
    k, kE/(sigma), kE/(s_n) and the Carlson modules of every projective class
    in degree 2, all over field.
    Returns:
        list of (name, GradedModule)
    """
    last = AlgebraElement.generator(alg, field, alg.generator_names[alg.n - 1])
    panel = [('k', trivial_module(alg, field))]
    if alg.has_sigma:
        panel.append(('kE/(sigma)', quotient_module(alg, field, [AlgebraElement.generator(alg, field, const.SIGMA)])))
    panel.append(('kE/(%s)' % alg.generator_names[alg.n - 1], quotient_module(alg, field, [last])))
    res = minimal_resolution(trivial_module(alg, field), 2)
    for xi in even_classes(res, 2, projective=True):
        panel.append(('L%s' % xi.coeffs.tolist(), carlson_module(xi)))
    return panel


def panel_signature(panel, a):
    """max_image_test of the restriction along a, for every panel module."""
    return tuple(max_image_test(standard_restriction(M, a)) for _, M in panel)


def check_equivalence_panel(report, alg, field, panel=None):
    """
    Equivalent points must get the same max_image_test outcome on every panel
    module, and some panel module must tell inequivalent points apart.
    """
    panel = sample_panel(alg, field) if panel is None else panel
    classes = {}
    for a in nonzero_points(alg, field):
        classes.setdefault(frobenius_image(a), []).append((a, panel_signature(panel, a)))
    owners = {}
    for image in sorted(classes):
        first, signature = classes[image][0]
        for b, other in classes[image][1:]:
            if other != signature:
                report.append_violation('equivalence panel', '%s and %s are equivalent but tested differently'
                                        % (first, b), FAILED_STATE)
        if signature in owners:
            report.append_violation('equivalence panel', 'no panel module separates %s from %s'
                                    % (owners[signature], first), FAILED_STATE)
        else:
            owners[signature] = first


def check_carlson(report, alg, field):
    res = minimal_resolution(trivial_module(alg, field), 2)
    for xi in even_classes(res, 2, projective=True):
        for message in carlson_sequence_check(carlson_sequence(xi)):
            report.append_violation('carlson', '%r: %s' % (xi, message), FAILED_STATE)


def check_commuting_operators(report, alg, field, count, seed, dim):
    for i in range(count):
        t = commuting_tuple_random(alg, field, dim, seed + i)
        first, second = commuting_operator_check(t.beta, t.gamma, t.delta, t.eps, field)
        if first != second:
            report.append_violation('commuting operators', 'seed %d: %s != %s' % (seed + i, first, second),
                                    FAILED_STATE)


def run_check_suite(p=3, seed=0, count=5, dim=6, max_ext=4):
    """
    Run the whole battery. Corpus modules have dimension at most dim.
    Returns:
        ValidationReport, empty when every property holds
    """
    report = ValidationReport()
    field = FiniteField(p)
    extension = FiniteField(p, 2)
    witt = alg_create(p, const.WITT, 1, 2)
    for alg in suite_algebras(p):
        check_relations(report, alg, field, count, seed, dim)
    for alg in corpus_algebras(p):
        check_projectivity(report, alg, field, count, seed, dim, max_ext)
        check_homogeneity(report, alg, field, count, seed, dim, 2)
    for alg, length in betti_algebras(p):
        check_betti(report, alg, field, length)
    for alg in corpus_algebras(p)[:2]:
        for e in (1, 2):
            check_support_formulas(report, alg, field, count, seed, min(dim, 4), e)
    check_ground_truth(report, p)
    check_normalization(report, witt, field, count, seed, dim, 3)
    check_equivalence(report, witt, extension)
    check_equivalence_panel(report, witt, field)
    check_equivalence_panel(report, witt, extension)
    check_carlson(report, witt, field)
    check_commuting_operators(report, witt, field, count, seed, dim)
    return report
