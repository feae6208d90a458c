"""
Exact arithmetic in finite fields F_{p^e} with p >= 3.

Elements are stored as base-p integers: the polynomial c_0 + c_1 w + ... +
c_{e-1} w^{e-1} in the field generator w is encoded as c_0 + c_1 p + ... +
c_{e-1} p^{e-1}. This is the integer representation galois uses for its
field arrays, so the encodings convert to and from galois.FieldArray without
any relabelling. The encoding fixes the canonical order of elements used by
every enumeration and serialization in the package. All arithmetic methods of
FiniteField act elementwise on numpy integer arrays of encodings.
"""
import galois
import numpy as np

from superpoint.custom_exception import BadParameters, CompositeP, ReducibleModulus


def check_characteristic(p):
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)) or p < 3 or not galois.is_prime(int(p)):
        raise CompositeP('p = %s is not a prime >= 3.' % (p,))
    return int(p)


def modulus_poly(p, modulus, field=None):
    """galois.Poly of the ascending coefficient vector modulus."""
    return galois.Poly(list(reversed([int(c) for c in modulus])), field=field or galois.GF(p))


def is_irreducible(p, modulus):
    """
    Whether the polynomial with ascending coefficient vector modulus is
    irreducible over F_p.
    """
    return modulus_poly(p, modulus).is_irreducible()


def default_modulus(p, e):
    """
    Smallest monic irreducible polynomial of degree e over F_p, where the
    candidates are ordered by the base-p encoding of their non-leading
    coefficients. For (3, 2) this is x^2 + 1.
    Returns:
        tuple of e + 1 ascending coefficients, the last one being 1
    """
    for code in range(1, p ** e):
        low = [(code // p ** i) % p for i in range(e)]
        if low[0] == 0:
            continue
        candidate = tuple(low) + (1,)
        if is_irreducible(p, candidate):
            return candidate
    raise ReducibleModulus('No irreducible polynomial of degree %d over F_%d.' % (e, p))


class FiniteField(object):
    """
    The field F_{p^e}, presented as F_p[w]/(modulus).

    Arithmetic is delegated to the galois field class GF; the methods below
    take and return plain int64 arrays of encodings.
    """

    def __init__(self, p, e=1, modulus=None):
        p = check_characteristic(p)
        if isinstance(e, bool) or not isinstance(e, (int, np.integer)) or e < 1:
            raise BadParameters('The extension degree must be a positive integer, got %s.' % (e,))
        e = int(e)
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = self._check_modulus(modulus)
        if e == 1:
            self.GF = galois.GF(p)
        else:
            self.GF = galois.GF(self.q, irreducible_poly=modulus_poly(p, self.modulus))
        self._powers = p ** np.arange(e, dtype=np.int64)
        self._digits = (np.arange(self.q, dtype=np.int64)[:, None] // self._powers) % p

    def _check_modulus(self, modulus):
        p, e = self.p, self.e
        if e == 1:
            if modulus is not None and (len(modulus) != 2 or int(modulus[1]) != 1):
                raise ReducibleModulus('A degree 1 modulus must be monic of length 2.')
            return None
        if modulus is None:
            return default_modulus(p, e)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1 or any(c < 0 or c >= p for c in modulus):
            raise ReducibleModulus('The modulus must be monic of degree %d with coefficients in [0, %d).' % (e, p))
        if not is_irreducible(p, modulus):
            raise ReducibleModulus('The modulus %s is reducible over F_%d.' % (list(modulus), p))
        return modulus

    def lift(self, A):
        """Encodings as a galois.FieldArray. Prime field entries are taken mod p."""
        A = np.asarray(A, dtype=np.int64)
        if self.e == 1:
            A = A % self.p
        return self.GF(A)

    @staticmethod
    def lower(X):
        """galois.FieldArray back to int64 encodings."""
        return np.asarray(X.view(np.ndarray), dtype=np.int64)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return 'F_%d' % self.p
        return 'F_%d^%d%s' % (self.p, self.e, list(self.modulus))

    def __getstate__(self):
        return {'p': self.p, 'e': self.e, 'modulus': self.modulus}

    def __setstate__(self, state):
        self.__init__(state['p'], state['e'], state['modulus'])

    # element level helpers

    def elements(self):
        return np.arange(self.q, dtype=np.int64)

    def element(self, value):
        return Scalar(self, value)

    def encode(self, coords):
        """Encoding of the coefficient vector (c_0, ..., c_{e-1})."""
        coords = [int(c) for c in coords]
        if len(coords) != self.e or any(c < 0 or c >= self.p for c in coords):
            raise BadParameters('Scalar %s does not lie in %r.' % (coords, self))
        return int(np.dot(coords, self._powers))

    def decode(self, x):
        return [int(c) for c in self._digits[int(x)]]

    def check_code(self, x):
        x = int(x)
        if x < 0 or x >= self.q:
            raise BadParameters('Scalar encoding %d does not lie in %r.' % (x, self))
        return x

    def format_scalar(self, x):
        """Human readable form, a polynomial in the generator w for e > 1."""
        x = int(x)
        if self.e == 1:
            return str(x)
        terms = []
        for i, c in reversed(list(enumerate(self.decode(x)))):
            if c == 0:
                continue
            monomial = '' if i == 0 else ('w' if i == 1 else 'w^%d' % i)
            if not monomial:
                terms.append(str(c))
            else:
                terms.append(monomial if c == 1 else '%d%s' % (c, monomial))
        if not terms:
            return '0'
        return '(%s)' % '+'.join(terms)

    # vectorised arithmetic

    def add(self, a, b):
        return self.lower(self.lift(a) + self.lift(b))

    def sub(self, a, b):
        return self.lower(self.lift(a) - self.lift(b))

    def neg(self, a):
        return self.lower(-self.lift(a))

    def mul(self, a, b):
        return self.lower(self.lift(a) * self.lift(b))

    def inv(self, a):
        x = self.lift(a)
        if np.any(x == 0):
            raise ZeroDivisionError('Zero has no inverse in %r.' % self)
        return self.lower(np.reciprocal(x))

    def power(self, a, k):
        k = int(k)
        if k < 0:
            return self.power(self.inv(a), -k)
        return self.lower(self.lift(a) ** k)

    def frobenius(self, a):
        return self.power(a, self.p)

    def pth_root(self, a):
        """The unique y with y^p = a; Frobenius is bijective on a finite field."""
        return self.power(a, self.p ** (self.e - 1))

    def is_square(self, x):
        return bool(self.lift(int(x)).is_square())

    def square_root(self, x):
        """
        Some y with y^2 = x, the one with the smaller encoding, or None when
        x is not a square.
        """
        x = int(x)
        if x == 0:
            return 0
        if not self.is_square(x):
            return None
        root = int(np.sqrt(self.lift(x)))
        return min(root, int(self.neg(root)))

    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.shape[-1] != B.shape[0]:
            raise ValueError('Cannot multiply %s by %s matrices.' % (A.shape, B.shape))
        if A.size == 0 or B.size == 0:
            return np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
        return self.lower(self.lift(A) @ self.lift(B))

    def scale(self, c, A):
        return self.mul(np.asarray(A, dtype=np.int64), int(c))

    # change of field

    def extension(self, degree):
        """F_{p^(e*degree)} with its default modulus."""
        if degree == 1:
            return self
        return FiniteField(self.p, self.e * degree)

    def embedding_into(self, other):
        """
        Table sending each encoding of this field to its image in other,
        mapping the generator w to the smallest root of the modulus in other.
        """
        if other.p != self.p or other.e % self.e != 0:
            raise BadParameters('%r does not embed into %r.' % (self, other))
        if self == other or self.e == 1:
            return self.elements()
        roots = modulus_poly(self.p, self.modulus, other.GF).roots()
        root = other.GF(min(int(r) for r in roots))
        root_powers = root ** np.arange(self.e)
        image = (other.GF(self._digits) * root_powers).sum(axis=-1)
        return self.lower(image)

    def to_json(self):
        if self.e == 1:
            return {'degree': 1}
        return {'degree': self.e, 'modulus': list(self.modulus)}

    def scalar_to_json(self, x):
        if self.e == 1:
            return int(x)
        return self.decode(x)

    def scalar_from_json(self, value):
        if self.e == 1:
            if isinstance(value, list):
                if len(value) != 1:
                    raise BadParameters('Scalar %s does not lie in %r.' % (value, self))
                value = value[0]
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise BadParameters('Scalar %r is not an integer.' % (value,))
            return self.check_code(value)
        if isinstance(value, list):
            return self.encode(value)
        return self.check_code(value)


def common_field(first, second):
    """Smallest field with default modulus containing both fields (or one of them)."""
    if first.p != second.p:
        raise BadParameters('Fields %r and %r have different characteristics.' % (first, second))
    if first.e % second.e == 0:
        return first
    if second.e % first.e == 0:
        return second
    e = first.e * second.e // np.gcd(first.e, second.e)
    return FiniteField(first.p, int(e))


def field_create(p, e=1, modulus=None):
    return FiniteField(p, e, modulus)


class Scalar(object):
    """An element of a FiniteField, for interactive use."""

    __slots__ = ('field', 'value')

    def __init__(self, field, value):
        self.field = field
        self.value = field.check_code(value)

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise BadParameters('Scalars live in different fields.')
            return other.value
        return int(other) % self.field.p

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._coerce(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * Scalar(self.field, self.field.inv(self._coerce(other)))

    def __pow__(self, k):
        return Scalar(self.field, self.field.power(self.value, k))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash((self.field, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return self.field.format_scalar(self.value)

    def frobenius(self):
        return Scalar(self.field, self.field.frobenius(self.value))

    def pth_root(self):
        return Scalar(self.field, self.field.pth_root(self.value))

    def square_root(self):
        root = self.field.square_root(self.value)
        return None if root is None else Scalar(self.field, root)
