import pytest

from superpoint import config
from superpoint import constants as const
from superpoint.algorithms.pipoint.pipoint import PiPointRep, standard_restriction
from superpoint.algorithms.variety.variety import (a_module_check, commuting_operator_check, enumeration_field,
                                                   find_witness, hom_support_check, homogeneity_check, is_projective,
                                                   jordan_type, max_image_defect, max_image_test, rank_variety,
                                                   support_from_variety, support_set, tensor_support_check)
from superpoint.custom_exception import BadParameters, BudgetExceeded, FieldMismatch
from superpoint.fields import FiniteField
from superpoint.gmodule import base_change, direct_sum, parity_shift, trivial_module
from superpoint.random_modules import commuting_tuple_random, random_module
from superpoint.superalgebra import alg_create, regular_module
from tests import constants
from tests.fixtures import F3, elem_abelian_31, exterior_31, quotient_by_s, quotient_by_sigma, witt_312

F9 = FiniteField(3, 2)
WITT = witt_312()


class TestMaxImage():
    @classmethod
    def setup_class(cls):
        cls.M = quotient_by_sigma()
        cls.k = trivial_module(WITT, F3)

    @classmethod
    def teardown_class(cls):
        del cls.M
        del cls.k

    def test_jordan_block_has_max_image(self):
        r = standard_restriction(self.M, PiPointRep(WITT, F3, [0, 1]))
        assert max_image_test(r)
        assert jordan_type(r) == [3]

    def test_axis_point(self):
        r = standard_restriction(self.M, PiPointRep(WITT, F3, [1, 0]))
        assert not max_image_test(r)
        assert max_image_defect(r) == 3

    def test_trivial(self):
        r = standard_restriction(self.k, PiPointRep(WITT, F3, [1, 1]))
        assert max_image_defect(r) == 1
        assert jordan_type(r) == [1]

    def test_a_module_check(self):
        for coords in [(0, 1), (1, 0), (1, 1)]:
            r = standard_restriction(self.M, PiPointRep(WITT, F3, coords))
            assert a_module_check(r, 1) == max_image_test(r)
        with pytest.raises(BadParameters):
            a_module_check(r, 3)

    def test_unknown_exterior_matrix(self):
        r = standard_restriction(self.M, PiPointRep(WITT, F3, [0, 1]))
        with pytest.raises(BadParameters):
            max_image_test(r, 'other')


class TestRankVariety():
    @classmethod
    def setup_class(cls):
        cls.M = quotient_by_sigma()
        cls.N = quotient_by_s()
        cls.k = trivial_module(WITT, F3)
        cls.regular = regular_module(WITT, F3)

    @classmethod
    def teardown_class(cls):
        del cls.M
        del cls.N
        del cls.k
        del cls.regular

    def test_quotients(self):
        assert rank_variety(self.M).points == constants.AXIS_F3
        assert rank_variety(self.N).points == constants.AXIS_F3
        assert rank_variety(self.M, 2).points == constants.AXIS_F9

    def test_trivial_is_everything(self):
        assert len(rank_variety(self.k)) == 9
        assert len(rank_variety(self.k, 2)) == 81

    def test_free_is_origin(self):
        assert rank_variety(self.regular).points == [(0, 0)]
        assert rank_variety(regular_module(elem_abelian_31(), F3)).points == [(0,)]

    def test_contains(self):
        variety = rank_variety(self.M)
        assert (1, 0) in variety
        assert (0, 1) not in variety
        assert variety.nonzero_points() == [(1, 0), (2, 0)]

    def test_direct_sum_is_union(self):
        combined = rank_variety(direct_sum(self.M, self.regular))
        assert combined.points == rank_variety(self.M).points

    def test_parity_shift(self):
        assert rank_variety(parity_shift(self.N)).points == rank_variety(self.N).points

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            rank_variety(self.k, 1, budget=5)

    def test_budget_read_from_config(self, monkeypatch):
        monkeypatch.setattr(config, 'POINT_BUDGET', 5)
        with pytest.raises(BudgetExceeded):
            rank_variety(self.k)
        with pytest.warns(UserWarning):
            assert is_projective(self.k).verdict == const.NO_WITNESS

    def test_degree_read_from_config(self, monkeypatch):
        monkeypatch.setattr(config, 'DEFAULT_EXT_DEGREE', 2)
        assert rank_variety(self.M).points == constants.AXIS_F9

    def test_field_mismatch(self):
        big = base_change(self.M, 2)
        with pytest.raises(FieldMismatch):
            rank_variety(big, 1)
        with pytest.raises(FieldMismatch):
            rank_variety(big, 3)
        assert enumeration_field(big, 4).e == 4

    @pytest.mark.parametrize('seed', range(3))
    def test_base_change_keeps_rational_points(self, seed):
        M = random_module(WITT, F3, 4, seed)
        small = rank_variety(M)
        big = rank_variety(base_change(M, 2), 2)
        rational = [point for point in big.points if all(c < 3 for c in point)]
        assert set(small.points) <= set(big.points)
        assert rational == small.points

    def test_parallel_matches_sequential(self):
        assert rank_variety(self.M, 2, parallel=True) == rank_variety(self.M, 2)

    def test_exterior_paper_matrix(self):
        k = trivial_module(exterior_31(), F3)
        with pytest.warns(UserWarning):
            variety = rank_variety(k, exterior_matrix=const.EXTERIOR_MATRIX_PAPER)
        assert len(variety) == 9


class TestSupport():
    def test_quotient_by_sigma(self):
        assert support_set(quotient_by_sigma()).points == [(1, 0)]
        assert support_set(quotient_by_sigma(), 2).points == [(1, 0)]

    def test_trivial_is_projective_line(self):
        assert support_set(trivial_module(WITT, F3)).points == [(0, 1), (1, 0), (1, 1), (1, 2)]

    def test_free_is_empty(self):
        assert len(support_from_variety(rank_variety(regular_module(WITT, F3)))) == 0


class TestProjectivity():
    def test_free(self):
        verdict = is_projective(regular_module(WITT, F3))
        assert verdict.verdict == const.PROJECTIVE
        assert verdict.witness is None

    @pytest.mark.parametrize('module', [trivial_module(WITT, F3), quotient_by_sigma(), quotient_by_s()],
                             ids=['trivial', 'quotient by sigma', 'quotient by s'])
    def test_witness(self, module):
        verdict = is_projective(module)
        assert verdict.verdict == const.NOT_PROJECTIVE
        assert verdict.witness == (1, 0)
        assert verdict.degree == 1

    def test_witness_order(self):
        # the first coordinate varies fastest
        assert find_witness(trivial_module(WITT, F3), 1) == (1, 0)

    def test_no_witness_within_budget(self):
        with pytest.warns(UserWarning):
            verdict = is_projective(trivial_module(WITT, F3), budget=5)
        assert verdict.verdict == const.NO_WITNESS

    def test_extension_field_module(self):
        verdict = is_projective(base_change(quotient_by_sigma(), 2), max_ext=2)
        assert verdict.verdict == const.NOT_PROJECTIVE
        assert verdict.degree == 2


class TestHomogeneity():
    @pytest.mark.parametrize('module', [quotient_by_sigma(), quotient_by_s(), trivial_module(WITT, F3)],
                             ids=['quotient by sigma', 'quotient by s', 'trivial'])
    def test_witt(self, module):
        assert homogeneity_check(module, 2).ok

    def test_exterior(self):
        assert homogeneity_check(trivial_module(exterior_31(), F3), 2).ok


class TestSupportFormulas():
    @classmethod
    def setup_class(cls):
        cls.M = quotient_by_sigma()
        cls.N = quotient_by_s()

    @classmethod
    def teardown_class(cls):
        del cls.M
        del cls.N

    def test_tensor(self):
        assert tensor_support_check(self.M, self.N).ok
        assert tensor_support_check(self.M, regular_module(WITT, F3)).ok

    def test_hom(self):
        assert hom_support_check(self.N, self.M).ok


@pytest.mark.parametrize('seed', range(4))
def test_commuting_operators(seed):
    t = commuting_tuple_random(WITT, F3, 6, seed)
    first, second = commuting_operator_check(t.beta, t.gamma, t.delta, t.eps, F3)
    assert first == second


@pytest.mark.slow
def test_two_generator_witt_variety():
    alg = alg_create(3, const.WITT, 2, 2)
    k = trivial_module(alg, F3)
    assert len(rank_variety(k)) == 27
    assert rank_variety(regular_module(alg, F3)).points == [(0, 0, 0)]
