from . fields import FiniteField, field_create, common_field

from . superalgebra import AlgebraPresentation, AlgebraElement, alg_create, alg_multiply, regular_module

from . graded_module import GradedModule, ModuleMap

from . gmodule import (validate, is_valid, trivial_module, parity_shift, direct_sum, tensor, internal_hom, dual,
                       base_change, quotient_module, ideal_module, is_free)

from . algorithms.resolution.resolution import (minimal_resolution, betti, syzygy, CohomologyClassRep,
                                                carlson_module, carlson_sequence, even_classes)

from . algorithms.pipoint.pipoint import (PiPointRep, AlgebraMapSpec, standard_spec, standard_restriction,
                                          general_restriction, coefficient_tuple, normalize, is_pi_point,
                                          frobenius_image, equivalent, prime_ideal_generators)

from . algorithms.variety.variety import (max_image_test, rank_variety, support_set, is_projective,
                                          homogeneity_check, tensor_support_check, hom_support_check)

from . inputs.module_parser import read_module

from . inputs.spec_parser import read_spec

from . output import save_to_json, save_to_csv, variety_to_df
