"""
Sparse polynomials over a FiniteField in the even variables s_1, ..., s_n,
without truncation, as dicts exponent tuple -> scalar encoding. They carry
the computation of f^p - g^2 s_n^p in the power series ring, before
reduction modulo the defining ideal.
"""


def from_element(x):
    """Lift an AlgebraElement free of sigma to a polynomial."""
    return dict((mon.exps, coeff) for mon, coeff in x.terms.items())


def clean(poly):
    return dict((exps, int(c)) for exps, c in poly.items() if int(c))


def add(field, u, v):
    total = dict(u)
    for exps, c in v.items():
        total[exps] = int(field.add(total.get(exps, 0), c))
    return clean(total)


def sub(field, u, v):
    return add(field, u, dict((exps, int(field.neg(c))) for exps, c in v.items()))


def mul(field, u, v):
    product = {}
    for a, ca in u.items():
        for b, cb in v.items():
            exps = tuple(i + j for i, j in zip(a, b))
            product[exps] = int(field.add(product.get(exps, 0), field.mul(ca, cb)))
    return clean(product)


def frobenius(field, u):
    """u^p, coefficientwise in characteristic p."""
    p = field.p
    return clean(dict((tuple(p * a for a in exps), int(field.frobenius(c))) for exps, c in u.items()))


def shift(u, index, amount):
    """u * s_{index+1}^amount"""
    return dict((exps[:index] + (exps[index] + amount,) + exps[index + 1:], c) for exps, c in u.items())


def constant_term(u, n):
    return u.get((0,) * n, 0)


def linear_coefficient(u, n, i):
    return u.get(tuple(int(j == i) for j in range(n)), 0)


def in_hypersurface_ideal(alg, exps):
    """
    Whether the monomial s^exps lies in J = (s_i^p for i < n, s_n^(p^m))
    (Witt), or (s_i^p) for the other families.
    """
    for i, a in enumerate(exps):
        if a >= alg.bounds[i]:
            return True
    return False


def witt_relation_excess(alg, field, f, g):
    """h = f^p - g^2 s_n^p for the Witt family."""
    g_square = mul(field, g, g)
    return sub(field, frobenius(field, f), shift(g_square, alg.n - 1, alg.p))


def unit_vector(n, i, power):
    return tuple(power if j == i else 0 for j in range(n))


def witt_coefficients(alg, field, h, g):
    """
    Hypersurface coefficients of h + g(0)^2 (s_n^p - sigma^2) modulo m I:
    b_i from s_i^p (i < n), b_n from s_n^(p^m), b_{n+1} = g(0)^2.
    """
    n = alg.n
    b = [h.get(unit_vector(n, i, alg.p), 0) for i in range(n - 1)]
    b.append(h.get(unit_vector(n, n - 1, alg.p ** alg.m), 0))
    g0 = constant_term(g, n)
    b.append(int(field.mul(g0, g0)))
    return b
