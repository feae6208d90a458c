"""Unit testing module for finite field arithmetic"""
import galois
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superpoint.custom_exception import BadParameters, CompositeP, ReducibleModulus
from superpoint.fields import FiniteField, Scalar, common_field, default_modulus

F3 = FiniteField(3)
F9 = FiniteField(3, 2)
F27 = FiniteField(3, 3)
F25 = FiniteField(5, 2)
# a degree 7 extension
F2187 = FiniteField(3, 7)

FIELDS = [F3, F9, F27, F25, F2187]


def elements(field):
    return st.integers(min_value=0, max_value=field.q - 1)


def test_default_modulus():
    assert default_modulus(3, 2) == (1, 0, 1)
    assert F9.modulus == (1, 0, 1)


def test_composite_characteristic():
    for p in (2, 4, 9, 1, 0):
        with pytest.raises(CompositeP):
            FiniteField(p)


def test_reducible_modulus():
    # x^2 - 1 = (x - 1)(x + 1)
    with pytest.raises(ReducibleModulus):
        FiniteField(3, 2, modulus=(2, 0, 1))


def test_bad_degree():
    with pytest.raises(BadParameters):
        FiniteField(3, 0)


def test_encode_decode():
    assert F9.encode([1, 1]) == 4
    assert F9.decode(4) == [1, 1]
    with pytest.raises(BadParameters):
        F9.encode([3, 0])


def test_format_scalar():
    assert F9.format_scalar(4) == '(w+1)'
    assert F9.format_scalar(0) == '0'
    assert F3.format_scalar(2) == '2'


def test_scalar_generator_square():
    w = Scalar(F9, 3)
    assert w * w == 2
    assert (w * w + 1) == 0


def test_scalar_from_json():
    assert F3.scalar_from_json(2) == 2
    assert F3.scalar_from_json([2]) == 2
    assert F9.scalar_from_json([1, 2]) == 7
    with pytest.raises(BadParameters):
        F3.scalar_from_json(True)
    with pytest.raises(BadParameters):
        F3.scalar_from_json(3)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        F9.inv(0)


@pytest.mark.parametrize('field', FIELDS, ids=repr)
def test_every_inverse(field):
    nonzero = np.arange(1, field.q, dtype=np.int64)
    assert np.all(field.mul(nonzero, field.inv(nonzero)) == 1)


@pytest.mark.parametrize('field', FIELDS, ids=repr)
def test_frobenius_is_bijective(field):
    x = field.elements()
    assert np.array_equal(field.pth_root(field.frobenius(x)), x)
    assert len(set(field.frobenius(x).tolist())) == field.q


@pytest.mark.parametrize('field', [F3, F9, F27, F25], ids=repr)
def test_square_roots(field):
    squares = 0
    for x in range(field.q):
        root = field.square_root(x)
        if root is not None:
            squares += 1
            assert int(field.mul(root, root)) == x
    assert squares == (field.q - 1) // 2 + 1


class TestFieldAxioms():
    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(FIELDS).flatmap(lambda f: st.tuples(st.just(f), elements(f), elements(f), elements(f))))
    def test_ring_axioms(self, args):
        field, a, b, c = args
        assert field.add(a, b) == field.add(b, a)
        assert field.mul(a, b) == field.mul(b, a)
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.add(a, field.neg(a)) == 0
        assert field.sub(a, b) == field.add(a, field.neg(b))

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(FIELDS).flatmap(lambda f: st.tuples(st.just(f), elements(f), elements(f))))
    def test_frobenius_is_additive(self, args):
        field, a, b = args
        assert field.frobenius(field.add(a, b)) == field.add(field.frobenius(a), field.frobenius(b))

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(FIELDS).flatmap(lambda f: st.tuples(st.just(f), elements(f))))
    def test_fermat(self, args):
        field, a = args
        assert field.power(a, field.q) == a


class TestEmbedding():
    @classmethod
    def setup_class(cls):
        cls.F81 = FiniteField(3, 4)
        cls.image = F9.embedding_into(cls.F81)

    @classmethod
    def teardown_class(cls):
        del cls.F81
        del cls.image

    def test_prime_field_is_fixed(self):
        assert self.image[:3].tolist() == [0, 1, 2]

    def test_injective(self):
        assert len(set(self.image.tolist())) == F9.q

    def test_homomorphism(self):
        for a in range(F9.q):
            for b in range(F9.q):
                assert self.image[int(F9.add(a, b))] == self.F81.add(self.image[a], self.image[b])
                assert self.image[int(F9.mul(a, b))] == self.F81.mul(self.image[a], self.image[b])

    def test_no_embedding(self):
        with pytest.raises(BadParameters):
            F9.embedding_into(F27)


def test_common_field():
    field = common_field(F9, F27)
    assert (field.p, field.e) == (3, 6)
    assert common_field(F3, F9) == F9
    with pytest.raises(BadParameters):
        common_field(F3, F25)


def test_matmul_matches_scalar_products():
    A = np.array([[3, 4], [1, 8]], dtype=np.int64)
    B = np.array([[5, 0], [2, 7]], dtype=np.int64)
    product = F9.matmul(A, B)
    for i in range(2):
        for j in range(2):
            expected = F9.add(F9.mul(A[i, 0], B[0, j]), F9.mul(A[i, 1], B[1, j]))
            assert product[i, j] == expected


class TestGaloisBackend():
    def test_modulus_is_the_irreducible_poly(self):
        assert F9.GF.irreducible_poly == galois.Poly([1, 0, 1], field=galois.GF(3))
        assert F9.GF.order == 9

    def test_integer_representation(self):
        # (w + 1)^2 = w^2 + 2w + 1 = 2w in F_3[w]/(w^2 + 1)
        assert int(F9.mul(4, 4)) == 6
        assert F9.lower(F9.lift([3, 4]) ** 2).tolist() == [2, 6]

    def test_prime_field_reduces(self):
        assert F3.lift([4, -1]).tolist() == [1, 2]

    def test_lower_gives_int64(self):
        assert F9.lower(F9.lift([1, 8])).dtype == np.int64
