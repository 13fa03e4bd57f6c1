"""Roots of univariate polynomials lying in the base field.

``find_roots`` returns ``(roots, complete, residual)``:

* ``roots`` -- the distinct roots in the field, sorted;
* ``complete`` -- whether the polynomial splits into linear factors over
  the field, counting multiplicity;
* ``residual`` -- the monic factor left after dividing out every linear
  factor (constant 1 when ``complete``).
"""

from fractions import Fraction
from math import gcd, isqrt

from .errors import Unsupported, ZeroPolynomial
from .fields import PrimeField, Rationals
from .poly import Poly, squarefree_part


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _strip_linear_factors(p, roots):
    residual = p.monic()
    for r in roots:
        lin = Poly(p.field, (-r, 1), p.var)
        while True:
            q, rem = divmod(residual, lin)
            if rem:
                break
            residual = q
    return residual


def rational_roots(p):
    """Rational roots via the rational-root test on the squarefree part.

    >>> from algspec.fields import QQ
    >>> z = Poly.gen(QQ)
    >>> rational_roots(z**3 - z**2)
    ([Fraction(0, 1), Fraction(1, 1)], True, Poly(Q, 1))
    """
    if not p:
        raise ZeroPolynomial("roots of the zero polynomial")
    sq = squarefree_part(p) if p.degree > 0 else p.monic()
    coeffs = list(sq.coeffs)
    roots = []
    if coeffs and coeffs[0] == 0:
        roots.append(Fraction(0))
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
    if len(coeffs) > 1:
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        ints = [c // g for c in ints]
        reduced = Poly(p.field, ints, p.var)
        for num in _divisors(ints[0]):
            for d in _divisors(ints[-1]):
                if gcd(num, d) != 1:
                    continue
                for cand in (Fraction(num, d), Fraction(-num, d)):
                    if not reduced(cand):
                        roots.append(cand)
    roots = sorted(set(roots))
    residual = _strip_linear_factors(p, roots)
    return roots, residual.degree == 0, residual


def prime_field_roots(p):
    """Roots in GF(q) by evaluation at every field element."""
    if not p:
        raise ZeroPolynomial("roots of the zero polynomial")
    roots = [x for x in p.field.elements() if not p(x)]
    residual = _strip_linear_factors(p, roots)
    return roots, residual.degree == 0, residual


def find_roots(p):
    if isinstance(p.field, Rationals):
        return rational_roots(p)
    if isinstance(p.field, PrimeField):
        return prime_field_roots(p)
    raise Unsupported(f"root finding over {p.field} is not implemented")
