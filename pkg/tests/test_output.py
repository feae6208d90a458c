import json
import os

import pandas as pd

from superpoint import constants as const
from superpoint.algorithms.pipoint.pipoint import PiPointRep, standard_restriction
from superpoint.algorithms.resolution.resolution import minimal_resolution
from superpoint.algorithms.variety.variety import (Verdict, is_projective, jordan_type, max_image_defect,
                                                   rank_variety, support_from_variety)
from superpoint.fields import FiniteField
from superpoint.gmodule import base_change, trivial_module
from superpoint.output import (dumps, module_to_json, point_to_json, resolution_to_json, restriction_to_json,
                               save_to_csv, save_to_json, support_to_json, variety_to_df, variety_to_json,
                               verdict_to_json)
from tests.fixtures import F3, quotient_by_s, quotient_by_sigma, witt_312

F9 = FiniteField(3, 2)


def test_dumps_is_sorted():
    assert dumps({'b': 1, 'a': [2]}) == '{"a": [2], "b": 1}'


def test_point_to_json():
    assert point_to_json(F3, (1, 2)) == [1, 2]
    assert point_to_json(F9, (4, 0)) == [[1, 1], [0, 0]]


def test_module_to_json():
    data = module_to_json(quotient_by_s())
    assert data['dim'] == 2
    assert data['parity'] == [0, 1]
    assert data['field'] == {'degree': 1}
    assert data['actions']['sigma'] == [[0, 0], [1, 0]]


def test_variety_to_json():
    data = variety_to_json(rank_variety(quotient_by_sigma()))
    assert data['points'] == [[0, 0], [1, 0], [2, 0]]
    assert data['algebra'] == witt_312().to_json()


def test_support_to_json():
    data = support_to_json(support_from_variety(rank_variety(quotient_by_sigma())))
    assert data['projective_points'] == [[1, 0]]


def test_verdict_to_json():
    M = quotient_by_sigma()
    assert verdict_to_json(is_projective(M), M) == {'verdict': const.NOT_PROJECTIVE, 'witness': [1, 0], 'degree': 1}
    big = base_change(M, 2)
    data = verdict_to_json(Verdict(const.NOT_PROJECTIVE, (1, 0), 2), big)
    assert data['witness'] == [[1, 0], [0, 0]]
    assert verdict_to_json(Verdict(const.PROJECTIVE, None, None), M)['witness'] is None


def test_restriction_to_json():
    r = standard_restriction(quotient_by_sigma(), PiPointRep(witt_312(), F3, [0, 1]))
    data = restriction_to_json(r, max_image_defect(r) == 0, max_image_defect(r), jordan_type(r))
    assert data['max_image'] is True
    assert data['jordan_type'] == [3]
    assert data['T'] == [[0, 0, 0], [1, 0, 0], [0, 1, 0]]


def test_resolution_to_json():
    data = resolution_to_json(minimal_resolution(trivial_module(witt_312(), F3), 2))
    assert data['ranks'] == [1, 2, 3]
    assert len(data['differentials']) == 2
    assert len(data['differentials'][1]) == 2
    assert len(data['differentials'][1][0]) == 3


def test_variety_to_df():
    df = variety_to_df(rank_variety(quotient_by_sigma()))
    assert list(df.columns) == [const.POINT_COL, 'a1', 'a2', 'b1', 'b2']
    assert df['a1'].tolist() == ['0', '1', '2']
    assert df['b1'].tolist() == [None, '1', '1']


def test_save(tmpdir):
    path = os.path.join(str(tmpdir), 'module.json')
    save_to_json(module_to_json(quotient_by_s()), path)
    with open(path) as fin:
        assert json.load(fin)['dim'] == 2
    csv_path = os.path.join(str(tmpdir), 'points.csv')
    save_to_csv(variety_to_df(rank_variety(quotient_by_s())), csv_path)
    assert len(pd.read_csv(csv_path)) == 3
