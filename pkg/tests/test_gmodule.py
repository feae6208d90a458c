import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superpoint import constants as const
from superpoint import linalg
from superpoint.custom_exception import AlgebraMismatch, BadParameters, DimensionMismatch, FieldMismatch
from superpoint.fields import FiniteField
from superpoint.gmodule import (base_change, direct_sum, dual, ideal_module, internal_hom, is_free, is_valid,
                                parity_shift, quotient_module, submodule, tensor, tensor_swap, trivial_module,
                                validate)
from superpoint.graded_module import GradedModule, ModuleMap
from superpoint.random_modules import random_module
from superpoint.superalgebra import AlgebraElement, alg_create, regular_module
from tests import constants
from tests.fixtures import (F3, exterior_31, quotient_by_s, quotient_by_sigma, witt_312, witt_quotient_s,
                            witt_quotient_sigma, witt_regular, witt_trivial)


def test_quotient_by_sigma(witt_quotient_sigma):
    M = witt_quotient_sigma
    assert M.dim == 3
    assert M.actions['s1'].tolist() == constants.QUOTIENT_SIGMA_S1
    assert linalg.is_zero(M.sigma)
    assert M.parity.tolist() == [0, 0, 0]


def test_quotient_by_s(witt_quotient_s):
    M = witt_quotient_s
    assert M.dim == 2
    assert linalg.is_zero(M.actions['s1'])
    assert M.sigma.tolist() == constants.QUOTIENT_S_SIGMA
    assert M.parity.tolist() == [0, 1]


def test_valid_modules(witt_trivial, witt_regular, witt_quotient_sigma, witt_quotient_s):
    for M in (witt_trivial, witt_regular, witt_quotient_sigma, witt_quotient_s):
        assert validate(M) == []
        assert is_valid(M)


class TestValidation():
    @classmethod
    def setup_class(cls):
        cls.alg = witt_312()

    @classmethod
    def teardown_class(cls):
        del cls.alg

    def test_parity_violation(self):
        M = GradedModule(F3, self.alg, [0, 0], {'s1': linalg.zeros(2, 2), const.SIGMA: [[0, 0], [1, 0]]})
        violations = validate(M)
        assert len(violations) == 1
        assert const.ODD_PARITY_STATE in violations[0]
        assert not is_valid(M)

    def test_every_violation_is_reported(self):
        # s1 not nilpotent, sigma^2 != s1^3 and sigma keeps the parity
        M = GradedModule(F3, self.alg, [0], {'s1': [[2]], const.SIGMA: [[1]]})
        states = ' '.join(validate(M))
        assert const.NILPOTENCY_STATE in states
        assert const.SIGMA_RELATION_STATE in states
        assert const.ODD_PARITY_STATE in states

    def test_commutation_violation(self):
        alg = exterior_31()
        S = [[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]]
        Sigma = [[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]]
        M = GradedModule(F3, alg, [0, 0, 1, 1], {'s1': S, const.SIGMA: Sigma})
        assert any(const.COMMUTATION_STATE in message for message in validate(M))

    def test_shape(self):
        with pytest.raises(DimensionMismatch):
            GradedModule(F3, self.alg, [0, 1], {'s1': linalg.zeros(3, 2), const.SIGMA: linalg.zeros(2, 2)})

    def test_missing_action(self):
        with pytest.raises(BadParameters):
            GradedModule(F3, self.alg, [0], {'s1': [[0]]})

    def test_entry_outside_field(self):
        with pytest.raises(BadParameters):
            GradedModule(F3, self.alg, [0], {'s1': [[3]], const.SIGMA: [[0]]})


class TestConstructions():
    @classmethod
    def setup_class(cls):
        cls.M = quotient_by_sigma()
        cls.N = quotient_by_s()
        cls.k = trivial_module(witt_312(), F3)

    @classmethod
    def teardown_class(cls):
        del cls.M
        del cls.N
        del cls.k

    def test_tensor_with_trivial(self):
        assert tensor(self.k, self.N) == self.N

    def test_tensor_is_valid(self):
        T = tensor(self.M, self.N)
        assert T.dim == self.M.dim * self.N.dim
        assert validate(T) == []
        assert validate(tensor(self.N, parity_shift(self.N))) == []

    def test_internal_hom_is_valid(self):
        H = internal_hom(self.N, self.M)
        assert H.dim == 6
        assert validate(H) == []
        assert validate(internal_hom(parity_shift(self.N), self.N)) == []

    def test_dual_of_trivial(self):
        assert dual(self.k) == self.k

    def test_parity_shift_twice(self):
        assert parity_shift(parity_shift(self.N)) == self.N
        assert parity_shift(self.N).parity.tolist() == [1, 0]

    def test_direct_sum(self):
        S = direct_sum(self.M, self.N)
        assert S.dim == 5
        assert S.parity.tolist() == [0, 0, 0, 0, 1]
        assert validate(S) == []

    def test_swap_is_module_map(self):
        assert tensor_swap(self.N, parity_shift(self.N)).check()

    def test_identity_is_module_map(self):
        assert ModuleMap(self.N, self.N, linalg.identity(2)).check()
        assert not ModuleMap(self.N, self.N, [[0, 0], [1, 0]]).check()

    def test_base_change(self):
        big = base_change(self.N, 2)
        assert big.field == FiniteField(3, 2)
        assert validate(big) == []
        assert big.sigma.tolist() == constants.QUOTIENT_S_SIGMA

    def test_mismatches(self):
        with pytest.raises(AlgebraMismatch):
            tensor(self.k, trivial_module(exterior_31(), F3))
        with pytest.raises(FieldMismatch):
            tensor(self.k, base_change(self.k, 2))


class TestFreeness():
    @classmethod
    def setup_class(cls):
        cls.alg = witt_312()
        cls.regular = regular_module(cls.alg, F3)

    @classmethod
    def teardown_class(cls):
        del cls.alg
        del cls.regular

    def test_free(self):
        assert is_free(self.regular)
        assert is_free(parity_shift(self.regular))
        assert is_free(direct_sum(self.regular, parity_shift(self.regular)))

    def test_not_free(self):
        assert not is_free(trivial_module(self.alg, F3))
        assert not is_free(quotient_by_sigma())
        assert not is_free(direct_sum(self.regular, trivial_module(self.alg, F3)))

    def test_ideal_module(self):
        sigma = AlgebraElement.generator(self.alg, F3, const.SIGMA)
        ideal = ideal_module(self.alg, F3, [sigma])
        quotient = quotient_module(self.alg, F3, [sigma])
        assert ideal.dim + quotient.dim == self.alg.dim
        assert validate(ideal) == []

    def test_unstable_span(self):
        unit = np.zeros((self.alg.dim, 1), dtype=np.int64)
        unit[self.alg.index[self.alg.unit], 0] = 1
        with pytest.raises(BadParameters):
            submodule(self.regular, unit)


def test_exterior_regular_tensor_square():
    alg = alg_create(3, const.EXTERIOR, 0)
    E = regular_module(alg, F3)
    T = tensor(E, E)
    assert T.dim == 2 * alg.dim
    assert is_free(T)
    assert validate(T) == []


ALGEBRAS = [witt_312(), exterior_31(), alg_create(3, const.ELEM_ABELIAN, 2)]


@st.composite
def modules(draw, alg, max_dim=4, free=True):
    """A random module of dimension at most max_dim, or kE when free is allowed."""
    if free and draw(st.booleans()):
        M = regular_module(alg, F3)
        return parity_shift(M) if draw(st.booleans()) else M
    return random_module(alg, F3, draw(st.integers(1, max_dim)), draw(st.integers(0, 10**4)))


def module_pairs():
    return st.sampled_from(ALGEBRAS).flatmap(lambda alg: st.tuples(modules(alg), modules(alg)))


def module_triples():
    return st.sampled_from(ALGEBRAS).flatmap(
        lambda alg: st.tuples(*[modules(alg, max_dim=3, free=False) for _ in range(3)]))


class TestModuleLaws():
    @settings(max_examples=25, deadline=None)
    @given(module_pairs())
    def test_tensor_commutes(self, pair):
        M, N = pair
        swap = tensor_swap(M, N)
        assert swap.check()
        assert linalg.rank(F3, swap.matrix) == M.dim * N.dim
        assert is_free(tensor(M, N)) == is_free(tensor(N, M))

    @settings(max_examples=20, deadline=None)
    @given(module_triples())
    def test_tensor_associates(self, triple):
        M, N, P = triple
        assert tensor(tensor(M, N), P) == tensor(M, tensor(N, P))

    @settings(max_examples=25, deadline=None)
    @given(module_pairs())
    def test_direct_sum_freeness(self, pair):
        M, N = pair
        assert is_free(direct_sum(M, N)) == (is_free(M) and is_free(N))
