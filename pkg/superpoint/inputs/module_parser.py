"""
Reading of module files. A module file is a JSON object

    {"algebra": {"p": 3, "family": "witt", "n": 1, "m": 2},
     "field": {"degree": 1},
     "dim": 2,
     "parity": [0, 1],
     "actions": {"s1": [[0, 0], [0, 0]], "sigma": [[0, 0], [1, 0]]}}

with the generator matrices acting on column vectors. Scalars are integers
for a prime field and coefficient lists of length e otherwise.
"""
import json

import jsonschema
import numpy as np

from superpoint import constants as const
from superpoint.custom_exception import InvalidModuleFile, SuperpointError
from superpoint.fields import FiniteField
from superpoint.graded_module import GradedModule
from superpoint.inputs.key_conventions import module as key
from superpoint.superalgebra import algebra_from_json

SCALAR_SCHEMA = {'oneOf': [{'type': 'integer', 'minimum': 0},
                           {'type': 'array', 'items': {'type': 'integer', 'minimum': 0}, 'minItems': 1}]}

MATRIX_SCHEMA = {'type': 'array', 'items': {'type': 'array', 'items': SCALAR_SCHEMA}}

ALGEBRA_SCHEMA = {
    'type': 'object',
    'properties': {
        key.P: {'type': 'integer'},
        key.FAMILY: {'enum': list(const.FAMILIES)},
        key.N: {'type': 'integer', 'minimum': 0},
        key.M: {'type': 'integer'},
    },
    'required': [key.P, key.FAMILY, key.N],
    'additionalProperties': False,
}

FIELD_SCHEMA = {
    'type': 'object',
    'properties': {
        key.DEGREE: {'type': 'integer', 'minimum': 1},
        key.MODULUS: {'type': 'array', 'items': {'type': 'integer', 'minimum': 0}},
    },
    'required': [key.DEGREE],
    'additionalProperties': False,
}

MODULE_SCHEMA = {
    'type': 'object',
    'properties': {
        key.ALGEBRA: ALGEBRA_SCHEMA,
        key.FIELD: FIELD_SCHEMA,
        key.DIM: {'type': 'integer', 'minimum': 0},
        key.PARITY: {'type': 'array', 'items': {'enum': [0, 1]}},
        key.ACTIONS: {'type': 'object', 'additionalProperties': MATRIX_SCHEMA},
    },
    'required': [key.ALGEBRA, key.FIELD, key.DIM, key.PARITY, key.ACTIONS],
    'additionalProperties': False,
}


def check_schema(data, schema, error_class=InvalidModuleFile):
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as e:
        path = '/'.join(str(part) for part in e.absolute_path)
        raise error_class('%s%s' % ('at %s: ' % path if path else '', e.message))


def read_json(path, error_class=InvalidModuleFile):
    try:
        with open(path) as fin:
            return json.load(fin)
    except (IOError, OSError) as e:
        raise error_class('Cannot read %s: %s' % (path, e))
    except ValueError as e:
        raise error_class('%s is not valid JSON: %s' % (path, e))


def field_from_json(p, spec):
    """FiniteField from {"degree": e, "modulus": [...]}"""
    return FiniteField(p, spec[key.DEGREE], spec.get(key.MODULUS))


def matrix_from_json(field, rows, dim):
    if dim == 0:
        return np.zeros((0, 0), dtype=np.int64)
    try:
        return np.array([[field.scalar_from_json(value) for value in row] for row in rows], dtype=np.int64)
    except ValueError:
        raise InvalidModuleFile('Matrix rows of unequal length.')


def module_from_json(data):
    """
    Args:
        data : decoded module file
    Returns:
        GradedModule
    Raises:
        InvalidModuleFile : data does not follow the module schema
        SuperpointError : the parameters or the matrices are not admissible
    """
    check_schema(data, MODULE_SCHEMA)
    alg = algebra_from_json(data[key.ALGEBRA])
    field = field_from_json(alg.p, data[key.FIELD])
    dim = data[key.DIM]
    if len(data[key.PARITY]) != dim:
        raise InvalidModuleFile('The parity list has %d entries for dim %d.' % (len(data[key.PARITY]), dim))
    actions = dict((name, matrix_from_json(field, rows, dim)) for name, rows in data[key.ACTIONS].items())
    return GradedModule(field, alg, data[key.PARITY], actions)


def read_module(path):
    """Load and check a module file."""
    data = read_json(path)
    try:
        return module_from_json(data)
    except SuperpointError as e:
        raise InvalidModuleFile('%s: %s' % (path, e.message))
