"""Independent reference computations used only by the tests.

Nothing here calls into the library's algorithms: determinants come from
cofactor expansion, minimum polynomials and roots from sympy's
factorization, Sylvester solutions from exhaustive numpy search.
"""

from fractions import Fraction
from itertools import product

import numpy as np
import sympy

Z = sympy.Symbol("z")


def cofactor_det(rows, reduce=lambda v: v):
    n = len(rows)
    if n == 1:
        return reduce(rows[0][0])
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor, reduce)
    return reduce(total)


def to_sympy(a, p=None):
    rows = [[int(x) if p else sympy.Rational(x.numerator, x.denominator) for x in r] for r in a.rows]
    return sympy.Matrix(rows)


def _poly_at_matrix(poly, M, p=None):
    n = M.shape[0]
    acc = sympy.zeros(n, n)
    for c in sympy.Poly(poly, Z).all_coeffs():
        acc = acc * M + c * sympy.eye(n)
        if p:
            acc = acc.applyfunc(lambda v: v % p)
    return acc


def minpoly_coeffs(a, p=None):
    """Monic minimum polynomial (low-to-high ints/Fractions) via factoring the char poly."""
    M = to_sympy(a, p)
    chi = sympy.Poly(M.charpoly(Z).as_expr(), Z, modulus=p) if p else sympy.Poly(M.charpoly(Z).as_expr(), Z)
    _, factors = chi.factor_list()
    result = sympy.Poly(1, Z, modulus=p) if p else sympy.Poly(1, Z)
    for f, mult in factors:
        others = result
        for g, m in factors:
            if g != f:
                others = others * g ** m
        for k in range(1, mult + 1):
            cand = others * f ** k
            if _poly_at_matrix(cand.as_expr(), M, p).is_zero_matrix:
                break
        result = result * f ** k
    coeffs = result.monic().all_coeffs()[::-1]
    if p:
        return [int(c) % p for c in coeffs]
    return [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in coeffs]


def rational_roots(coeffs):
    """Rational roots of a polynomial given low-to-high Fractions."""
    expr = sum(sympy.Rational(c.numerator, c.denominator) * Z ** k for k, c in enumerate(coeffs))
    roots = sympy.Poly(expr, Z).ground_roots()
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)


def sylvester_bruteforce(a, b, c, p):
    """All x in M(m x n, GF(p)) with a x - x b = c, by exhaustive search."""
    A = np.array([[int(v) for v in r] for r in a.rows])
    B = np.array([[int(v) for v in r] for r in b.rows])
    C = np.array([[int(v) for v in r] for r in c.rows])
    m, n = C.shape
    X = np.array(list(product(range(p), repeat=m * n))).reshape(-1, m, n)
    lhs = (np.einsum("ij,kjl->kil", A, X) - np.einsum("kij,jl->kil", X, B)) % p
    hits = np.all(lhs == C % p, axis=(1, 2))
    return [x.tolist() for x in X[hits]]


def all_matrices(p, n):
    for t in product(range(p), repeat=n * n):
        yield [list(t[i * n:(i + 1) * n]) for i in range(n)]


def hamilton(q, r):
    """Hamilton product written out componentwise."""
    a1, b1, c1, d1 = q
    a2, b2, c2, d2 = r
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )
