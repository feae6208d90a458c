"""
Reading of algebra map specifications and points.

A specification file is a JSON object

    {"algebra": {"p": 3, "family": "witt", "n": 1, "m": 2},
     "field": {"degree": 1},
     "f": "s1^3 + s1^4",
     "g": "0"}

where f and g are polynomial strings in the even generators or term maps
{"e1,...,en;0": coefficient}. A missing field entry means the prime field.
"""
import json

from superpoint.algorithms.pipoint.pipoint import AlgebraMapSpec
from superpoint.custom_exception import InvalidSpecFile, SuperpointError
from superpoint.inputs.key_conventions import spec as key
from superpoint.inputs.module_parser import ALGEBRA_SCHEMA, FIELD_SCHEMA, check_schema, field_from_json, read_json
from superpoint.polyschema import parse_polynomial
from superpoint.superalgebra import AlgebraElement, algebra_from_json, element_from_json

POLYNOMIAL_SCHEMA = {'oneOf': [{'type': 'string'}, {'type': 'object'}]}

SPEC_SCHEMA = {
    'type': 'object',
    'properties': {
        key.ALGEBRA: ALGEBRA_SCHEMA,
        key.FIELD: FIELD_SCHEMA,
        key.F: POLYNOMIAL_SCHEMA,
        key.G: POLYNOMIAL_SCHEMA,
    },
    'required': [key.ALGEBRA, key.F],
    'additionalProperties': False,
}


def polynomial_from_json(alg, field, value):
    if value is None:
        return AlgebraElement(alg, field)
    if isinstance(value, dict):
        return element_from_json(alg, field, value)
    return parse_polynomial(alg, field, value)


def spec_from_json(data):
    """
    Returns:
        AlgebraMapSpec
    Raises:
        InvalidSpecFile : data does not follow the specification schema
    """
    check_schema(data, SPEC_SCHEMA, InvalidSpecFile)
    alg = algebra_from_json(data[key.ALGEBRA])
    field = field_from_json(alg.p, data.get(key.FIELD, {'degree': 1}))
    f = polynomial_from_json(alg, field, data[key.F])
    g = polynomial_from_json(alg, field, data.get(key.G))
    return AlgebraMapSpec(alg, field, f, g)


def read_spec(path):
    return spec_from_json(read_json(path, InvalidSpecFile))


def parse_point(field, text):
    """
    Args:
        field : FiniteField of the coordinates
        text : JSON array of scalars, example "[0,1]" or "[[1,1],0]"
    Returns:
        list of scalar encodings
    """
    try:
        values = json.loads(text)
    except ValueError:
        raise InvalidSpecFile('%r is not a JSON array.' % (text,))
    if not isinstance(values, list):
        raise InvalidSpecFile('%r is not a JSON array.' % (text,))
    try:
        return [field.scalar_from_json(value) for value in values]
    except SuperpointError as e:
        raise InvalidSpecFile(e.message)
