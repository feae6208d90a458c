import pytest

from superpoint import constants as const
from superpoint.fields import FiniteField
from superpoint.gmodule import quotient_module, trivial_module
from superpoint.superalgebra import AlgebraElement, alg_create, regular_module

F3 = FiniteField(3)


def witt_312():
    return alg_create(3, const.WITT, 1, 2)


def exterior_31():
    return alg_create(3, const.EXTERIOR, 1)


def elem_abelian_31():
    return alg_create(3, const.ELEM_ABELIAN, 1)


def quotient_by_sigma(field=F3):
    alg = witt_312()
    return quotient_module(alg, field, [AlgebraElement.generator(alg, field, const.SIGMA)])


def quotient_by_s(field=F3):
    alg = witt_312()
    return quotient_module(alg, field, [AlgebraElement.generator(alg, field, 's1')])


@pytest.fixture()
def witt_trivial():
    return trivial_module(witt_312(), F3)


@pytest.fixture()
def witt_regular():
    return regular_module(witt_312(), F3)


@pytest.fixture()
def witt_quotient_sigma():
    return quotient_by_sigma()


@pytest.fixture()
def witt_quotient_s():
    return quotient_by_s()
