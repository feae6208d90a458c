"""
Command line front end. Every verb prints one JSON document with sorted keys
on standard output; warnings and errors go to standard error. Exit codes:
0 success, 1 domain error or failed check, 2 usage or file error.
"""
import argparse
import sys

from superpoint import config
from superpoint import constants as const
from superpoint import output
from superpoint.algorithms.pipoint.pipoint import (PiPointRep, coefficient_tuple, equivalent, frobenius_image,
                                                   hypersurface_equation, normalize, prime_ideal_generators,
                                                   standard_restriction)
from superpoint.algorithms.resolution.resolution import (CohomologyClassRep, carlson_sequence,
                                                         carlson_sequence_check, minimal_resolution)
from superpoint.algorithms.variety.variety import (enumeration_module, is_projective, jordan_type,
                                                   max_image_defect, rank_variety, support_from_variety)
from superpoint.check_suite import run_check_suite
from superpoint.custom_exception import SuperpointError, UsageError, handleError
from superpoint.fields import FiniteField
from superpoint.gmodule import internal_hom, tensor, trivial_module, validate
from superpoint.inputs.module_parser import read_module
from superpoint.inputs.spec_parser import parse_point, read_spec
from superpoint.random_modules import RandomModuleSpec, module_random
from superpoint.superalgebra import alg_create


def algebra_arguments():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--p', type=int, required=True, help='characteristic, a prime >= 3')
    parser.add_argument('--family', choices=const.FAMILIES, required=True)
    parser.add_argument('--n', type=int, required=True, help='number of even generators')
    parser.add_argument('--m', type=int, default=None, help='Witt height (witt family only)')
    parser.add_argument('--field-degree', type=int, default=1, help='work over F_{p^e}')
    return parser


def variety_arguments():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--budget', type=int, default=config.POINT_BUDGET, help='largest number of points enumerated')
    parser.add_argument('--exterior-matrix', choices=[const.EXTERIOR_MATRIX_THM, const.EXTERIOR_MATRIX_PAPER],
                        default=config.EXTERIOR_MATRIX)
    return parser


def create_parser():
    parser = argparse.ArgumentParser(prog='superpoint', description='pi-point support theory for elementary '
                                                                   'supergroup schemes')
    verbs = parser.add_subparsers(dest='verb')
    verbs.required = True
    algebra = algebra_arguments()
    variety = variety_arguments()

    verbs.add_parser('algebra-info', parents=[algebra], help='basis and dimension of kE')

    sub = verbs.add_parser('module-validate', help='check the relations of kE on a module file')
    sub.add_argument('--module', required=True)

    sub = verbs.add_parser('module-random', parents=[algebra], help='seeded random valid module')
    sub.add_argument('--dim', type=int, required=True)
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--odd-fraction', type=float, default=0.5)

    for verb, text in (('tensor', 'M (x) N'), ('hom', 'Hom_k(M, N)')):
        sub = verbs.add_parser(verb, help=text)
        sub.add_argument('--module', required=True)
        sub.add_argument('--other', required=True)
        sub.add_argument('--ext-degree', type=int, default=None, help='base change both modules to F_{p^e}')

    sub = verbs.add_parser('restrict', parents=[variety], help='restriction to a standard pi-point')
    sub.add_argument('--module', required=True)
    sub.add_argument('--point', required=True, help='JSON array of scalars, e.g. "[1,0]"')

    sub = verbs.add_parser('rank-variety', parents=[variety], help='rational points of V^r(M)')
    sub.add_argument('--module', required=True)
    sub.add_argument('--ext-degree', type=int, default=config.DEFAULT_EXT_DEGREE)
    sub.add_argument('--parallel', action='store_true')
    sub.add_argument('--csv', default=None, help='also write the points as a table')

    sub = verbs.add_parser('support', parents=[variety], help='Frobenius image of V^r(M)')
    sub.add_argument('--module', required=True)
    sub.add_argument('--ext-degree', type=int, default=config.DEFAULT_EXT_DEGREE)
    sub.add_argument('--parallel', action='store_true')

    sub = verbs.add_parser('is-projective', parents=[variety], help='freeness with a rank variety witness')
    sub.add_argument('--module', required=True)
    sub.add_argument('--max-ext', type=int, default=config.DEFAULT_MAX_EXT)

    sub = verbs.add_parser('resolve', help='minimal free resolution')
    sub.add_argument('--module', required=True)
    sub.add_argument('--length', type=int, default=config.DEFAULT_RESOLUTION_LENGTH)

    sub = verbs.add_parser('carlson', parents=[algebra], help='Carlson module of a class on F_2d')
    sub.add_argument('--degree', type=int, default=2)
    sub.add_argument('--class', dest='values', required=True, help='values on the generators of F_2d')

    sub = verbs.add_parser('pi-normalize', help='standard representative of an algebra map')
    sub.add_argument('--spec', required=True)

    sub = verbs.add_parser('pi-equiv', parents=[algebra], help='equivalence of two standard pi-points')
    sub.add_argument('--a', required=True)
    sub.add_argument('--b', required=True)

    sub = verbs.add_parser('check-suite', help='run the property battery')
    sub.add_argument('--p', type=int, default=3)
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--count', type=int, default=5)
    sub.add_argument('--dim', type=int, default=6, help='largest dimension of a corpus module')
    sub.add_argument('--max-ext', type=int, default=config.DEFAULT_MAX_EXT)
    return parser


def algebra_and_field(args):
    alg = alg_create(args.p, args.family, args.n, args.m)
    return alg, FiniteField(args.p, args.field_degree)


def run_algebra_info(args):
    alg, field = algebra_and_field(args)
    return {'algebra': alg.to_json(), 'field': field.to_json(), 'dim': alg.dim, 'expected_dim': alg.expected_dim(),
            'generators': alg.generator_names, 'basis': [alg.format_monomial(mon) for mon in alg.basis],
            'point_length': alg.point_length}, const.EXIT_OK


def run_module_validate(args):
    violations = validate(read_module(args.module))
    return ({'valid': not violations, 'violations': violations},
            const.EXIT_DOMAIN if violations else const.EXIT_OK)


def run_module_random(args):
    alg, field = algebra_and_field(args)
    M = module_random(RandomModuleSpec(alg, field, args.dim, args.seed, args.odd_fraction))
    return output.module_to_json(M), const.EXIT_OK


def _module_pair(args):
    M, N = read_module(args.module), read_module(args.other)
    if args.ext_degree is not None:
        M, N = enumeration_module(M, args.ext_degree), enumeration_module(N, args.ext_degree)
    return M, N


def run_tensor(args):
    return output.module_to_json(tensor(*_module_pair(args))), const.EXIT_OK


def run_hom(args):
    return output.module_to_json(internal_hom(*_module_pair(args))), const.EXIT_OK


def run_restrict(args):
    M = read_module(args.module)
    a = PiPointRep(M.alg, M.field, parse_point(M.field, args.point))
    r = standard_restriction(M, a)
    defect = max_image_defect(r, args.exterior_matrix)
    result = output.restriction_to_json(r, defect == 0, defect, jordan_type(r))
    result['point'] = output.point_to_json(M.field, a.coords)
    return result, const.EXIT_OK


def run_rank_variety(args):
    M = read_module(args.module)
    variety = rank_variety(M, args.ext_degree, args.budget, args.parallel, args.exterior_matrix)
    if args.csv:
        output.save_to_csv(output.variety_to_df(variety), args.csv)
    return output.variety_to_json(variety), const.EXIT_OK


def run_support(args):
    M = read_module(args.module)
    variety = rank_variety(M, args.ext_degree, args.budget, args.parallel, args.exterior_matrix)
    return output.support_to_json(support_from_variety(variety)), const.EXIT_OK


def run_is_projective(args):
    M = read_module(args.module)
    verdict = is_projective(M, args.max_ext, args.budget, args.exterior_matrix)
    return output.verdict_to_json(verdict, M), const.EXIT_OK


def run_resolve(args):
    res = minimal_resolution(read_module(args.module), args.length)
    return output.resolution_to_json(res), const.EXIT_OK


def run_carlson(args):
    alg, field = algebra_and_field(args)
    res = minimal_resolution(trivial_module(alg, field), args.degree)
    xi = CohomologyClassRep(res, args.degree, parse_point(field, args.values))
    sequence = carlson_sequence(xi)
    violations = carlson_sequence_check(sequence)
    return ({'module': output.module_to_json(sequence.kernel), 'dim': sequence.kernel.dim,
             'syzygy_dim': sequence.syzygy.dim, 'violations': violations},
            const.EXIT_DOMAIN if violations else const.EXIT_OK)


def run_pi_normalize(args):
    spec = read_spec(args.spec)
    b = coefficient_tuple(spec)
    a = normalize(spec)
    return {'coefficients': output.point_to_json(spec.field, b),
            'field': a.field.to_json(),
            'point': output.point_to_json(a.field, a.coords),
            'frobenius_image': output.point_to_json(a.field, frobenius_image(a)),
            'prime_ideal': prime_ideal_generators(a),
            'hypersurface': hypersurface_equation(spec.alg, spec.field, b)}, const.EXIT_OK


def run_pi_equiv(args):
    alg, field = algebra_and_field(args)
    a = PiPointRep(alg, field, parse_point(field, args.a))
    b = PiPointRep(alg, field, parse_point(field, args.b))
    return {'equivalent': equivalent(a, b),
            'frobenius_images': [output.point_to_json(field, frobenius_image(a)),
                                 output.point_to_json(field, frobenius_image(b))]}, const.EXIT_OK


def run_check_suite_verb(args):
    report = run_check_suite(args.p, args.seed, args.count, args.dim, args.max_ext)
    failures = report.generate_violation_list_of_strings()
    return ({'passed': not failures, 'failures': failures},
            const.EXIT_DOMAIN if failures else const.EXIT_OK)


VERBS = {
    'algebra-info': run_algebra_info,
    'module-validate': run_module_validate,
    'module-random': run_module_random,
    'tensor': run_tensor,
    'hom': run_hom,
    'restrict': run_restrict,
    'rank-variety': run_rank_variety,
    'support': run_support,
    'is-projective': run_is_projective,
    'resolve': run_resolve,
    'carlson': run_carlson,
    'pi-normalize': run_pi_normalize,
    'pi-equiv': run_pi_equiv,
    'check-suite': run_check_suite_verb,
}


@handleError
def run(args):
    """
    Returns:
        (JSON result, exit code)
    """
    return VERBS[args.verb](args)


def main(argv=None):
    args = create_parser().parse_args(argv)
    try:
        result, code = run(args)
    except SuperpointError:
        return const.EXIT_DOMAIN
    except UsageError:
        return const.EXIT_USAGE
    sys.stdout.write(output.dumps(result))
    sys.stdout.write('\n')
    return code


if __name__ == '__main__':
    sys.exit(main())
