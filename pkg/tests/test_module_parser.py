import pytest

from superpoint import constants as const
from superpoint.custom_exception import InvalidModuleFile, InvalidSpecFile
from superpoint.fields import FiniteField
from superpoint.gmodule import validate
from superpoint.inputs.module_parser import module_from_json, read_module
from superpoint.inputs.spec_parser import parse_point
from superpoint.output import module_to_json
from tests import constants
from tests.fixtures import F3, quotient_by_s, quotient_by_sigma, witt_312

F9 = FiniteField(3, 2)


def test_read_quotient_by_sigma():
    M = read_module(constants.WITT_QUOTIENT_SIGMA)
    assert M == quotient_by_sigma()


def test_read_quotient_by_s():
    M = read_module(constants.WITT_QUOTIENT_S)
    assert M == quotient_by_s()
    assert M.alg == witt_312()


def test_read_extension_field():
    M = read_module(constants.WITT_TRIVIAL_F9)
    assert M.field == F9
    assert M.dim == 1


def test_bad_parity_is_readable():
    # the file parses; the violated relation is reported by validate
    M = read_module(constants.WITT_BAD_PARITY)
    assert len(validate(M)) == 1


@pytest.mark.parametrize('path', [constants.MODULE_MISSING_KEY, constants.MODULE_BAD_ALGEBRA, constants.NOT_JSON,
                                  constants.MISSING_FILE])
def test_invalid_files(path):
    with pytest.raises(InvalidModuleFile):
        read_module(path)


def test_module_json_round_trip():
    M = quotient_by_sigma()
    assert module_from_json(module_to_json(M)) == M


def test_parity_length():
    data = module_to_json(quotient_by_s())
    data['parity'] = [0]
    with pytest.raises(InvalidModuleFile):
        module_from_json(data)


def test_ragged_matrix():
    data = module_to_json(quotient_by_s())
    data['actions']['s1'] = [[0, 0], [0]]
    with pytest.raises(InvalidModuleFile):
        module_from_json(data)


def test_unknown_key():
    data = module_to_json(quotient_by_s())
    data['name'] = 'kE/(s)'
    with pytest.raises(InvalidModuleFile):
        module_from_json(data)


def test_parse_point():
    assert parse_point(F3, '[1,0]') == [1, 0]
    assert parse_point(F9, '[[1,1],0]') == [4, 0]
    assert parse_point(F9, '[3,0]') == [3, 0]


@pytest.mark.parametrize('text', ['[1,', '1', '[3]', '[true]'])
def test_parse_point_invalid(text):
    with pytest.raises(InvalidSpecFile):
        parse_point(F3, text)


def test_sigma_action_key():
    data = module_to_json(quotient_by_s())
    assert sorted(data['actions']) == ['s1', const.SIGMA]
