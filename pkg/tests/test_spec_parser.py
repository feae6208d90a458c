import pytest

from superpoint.algorithms.pipoint.pipoint import coefficient_tuple, is_pi_point, normalize
from superpoint.custom_exception import IncompatiblePair, InvalidSpecFile
from superpoint.inputs.spec_parser import read_spec, spec_from_json
from tests import constants
from tests.fixtures import F3, witt_312


def test_read_standard_spec():
    spec = read_spec(constants.SPEC_WITT_STANDARD)
    assert spec.alg == witt_312()
    assert spec.field == F3
    assert coefficient_tuple(spec) == (1, 1)
    assert normalize(spec).coords == (1, 1)


def test_term_map():
    spec = read_spec(constants.SPEC_WITT_TERMS)
    assert spec.g.is_zero()
    assert coefficient_tuple(spec) == (1, 0)


def test_incompatible_spec():
    spec = read_spec(constants.SPEC_WITT_INCOMPATIBLE)
    with pytest.raises(IncompatiblePair):
        coefficient_tuple(spec)


def test_elem_abelian():
    assert is_pi_point(read_spec(constants.SPEC_ELEM_ABELIAN))


@pytest.mark.parametrize('path', [constants.SPEC_BAD_POLYNOMIAL, constants.NOT_JSON, constants.MISSING_FILE])
def test_invalid(path):
    with pytest.raises(InvalidSpecFile):
        read_spec(path)


def test_missing_f():
    with pytest.raises(InvalidSpecFile):
        spec_from_json({'algebra': {'p': 3, 'family': 'witt', 'n': 1, 'm': 2}})
