import os

DIR_PATH = os.path.dirname(os.path.abspath(__file__))

DATA_DIR = os.path.join(DIR_PATH, "test_data")

WITT_QUOTIENT_SIGMA = os.path.join(DATA_DIR, "witt_quotient_sigma.json")

WITT_QUOTIENT_S = os.path.join(DATA_DIR, "witt_quotient_s.json")

WITT_BAD_PARITY = os.path.join(DATA_DIR, "witt_bad_parity.json")

WITT_TRIVIAL_F9 = os.path.join(DATA_DIR, "witt_trivial_f9.json")

MODULE_MISSING_KEY = os.path.join(DATA_DIR, "module_missing_key.json")

MODULE_BAD_ALGEBRA = os.path.join(DATA_DIR, "module_bad_algebra.json")

NOT_JSON = os.path.join(DATA_DIR, "not_json.json")

MISSING_FILE = os.path.join(DATA_DIR, "no_such_module.json")

SPEC_WITT_STANDARD = os.path.join(DATA_DIR, "spec_witt_standard.json")

SPEC_WITT_TERMS = os.path.join(DATA_DIR, "spec_witt_terms.json")

SPEC_WITT_INCOMPATIBLE = os.path.join(DATA_DIR, "spec_witt_incompatible.json")

SPEC_BAD_POLYNOMIAL = os.path.join(DATA_DIR, "spec_bad_polynomial.json")

SPEC_ELEM_ABELIAN = os.path.join(DATA_DIR, "spec_elem_abelian.json")

# kE/(sigma) over Witt(3, 1, 2): s1 acts as a Jordan block of size 3
QUOTIENT_SIGMA_S1 = [[0, 0, 0], [1, 0, 0], [0, 1, 0]]

# kE/(s1) over Witt(3, 1, 2): only sigma acts, from the even to the odd line
QUOTIENT_S_SIGMA = [[0, 0], [1, 0]]

AXIS_F3 = [(0, 0), (1, 0), (2, 0)]

AXIS_F9 = [(x, 0) for x in range(9)]

WITT_312_DIM = 18

WITT_322_DIM = 54
