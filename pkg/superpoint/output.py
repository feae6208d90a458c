"""
Serialisation of modules, varieties, resolutions and points. Every JSON
document is written with sorted keys and scalar encodings, so equal results
give byte-identical files.
"""
import json

import pandas as pd

from superpoint import constants as const
from superpoint.algorithms.pipoint.pipoint import frobenius_image_coords
from superpoint.algorithms.variety.variety import enumeration_field
from superpoint.inputs.key_conventions import module as key


def dumps(data):
    return json.dumps(data, sort_keys=True)


def save_to_json(data, path):
    """
    This function saves a JSON document to the specified path

    Args:
        data : JSON compatible value
        path : path of the file
    """
    with open(path, 'w') as fout:
        fout.write(dumps(data))
        fout.write('\n')


def save_to_csv(df, path):
    """
    This function saves the dataframe to specified path

    Args:
        df : dataframe to be saved in directory
        path : path to directory
    """
    df.to_csv(path, index=False)


def matrix_to_json(field, matrix):
    return [[field.scalar_to_json(value) for value in row] for row in matrix]


def point_to_json(field, coords):
    return [field.scalar_to_json(c) for c in coords]


def module_to_json(M):
    return {
        key.ALGEBRA: M.alg.to_json(),
        key.FIELD: M.field.to_json(),
        key.DIM: M.dim,
        key.PARITY: [int(x) for x in M.parity],
        key.ACTIONS: dict((name, matrix_to_json(M.field, matrix)) for name, matrix in M.actions.items()),
    }


def variety_to_json(variety):
    return {
        'algebra': variety.module.alg.to_json(),
        'field': variety.field.to_json(),
        'points': [point_to_json(variety.field, point) for point in variety.points],
    }


def support_to_json(support):
    return {
        'algebra': support.alg.to_json(),
        'field': support.field.to_json(),
        'projective_points': [point_to_json(support.field, point) for point in support.points],
    }


def verdict_to_json(verdict, M):
    witness = None
    if verdict.witness is not None:
        witness = point_to_json(enumeration_field(M, verdict.degree), verdict.witness)
    return {'verdict': verdict.verdict, 'witness': witness, 'degree': verdict.degree}


def resolution_to_json(res):
    differentials = []
    for j in range(1, res.length + 1):
        differentials.append([[entry.to_json() for entry in row] for row in res.differential_entries(j)])
    return {
        'algebra': res.alg.to_json(),
        'field': res.field.to_json(),
        'ranks': res.ranks,
        'parities': [[int(x) for x in parities] for parities in res.generator_parities],
        'differentials': differentials,
    }


def restriction_to_json(r, outcome, defect, jordan):
    field = r.module.field
    return {
        'T': matrix_to_json(field, r.T),
        'Tau': matrix_to_json(field, r.Tau),
        'max_image': outcome,
        'defect': defect,
        'jordan_type': jordan,
    }


def variety_to_df(variety):
    """
    One row per point of a rank variety with its coordinates a1, a2, ...
    and, for nonzero points, the normalised Frobenius image b1, b2, ...
    """
    field, alg = variety.field, variety.module.alg
    rows = []
    for number, point in enumerate(variety.points):
        row = {const.POINT_COL: number}
        image = frobenius_image_coords(alg, field, point)
        for i, c in enumerate(point):
            row['%s%d' % (const.COORD_COL_PREFIX, i + 1)] = field.format_scalar(c)
            row['%s%d' % (const.SUPPORT_COL_PREFIX, i + 1)] = None if image is None else field.format_scalar(image[i])
        rows.append(row)
    length = alg.point_length
    columns = ([const.POINT_COL] + ['%s%d' % (const.COORD_COL_PREFIX, i + 1) for i in range(length)] +
               ['%s%d' % (const.SUPPORT_COL_PREFIX, i + 1) for i in range(length)])
    return pd.DataFrame(rows, columns=columns)
