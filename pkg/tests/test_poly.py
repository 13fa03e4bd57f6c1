from fractions import Fraction

import pytest

from algspec.errors import DivisionByZero, FieldMismatch, Unsupported, ZeroPolynomial
from algspec.fields import QQ, PrimeField
from algspec.poly import (BiPoly, Poly, difference_quotient, invert_mod, poly_divmod, poly_eval, poly_gcd,
                          poly_xgcd, squarefree_factorization, squarefree_part)

z = Poly.gen(QQ)


def rand_poly(field, rng, deg, bound=5):
    if field is QQ:
        return Poly(QQ, [Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(deg + 1)])
    return Poly(field, [rng.randrange(field.p) for _ in range(deg + 1)])


def test_divmod_examples():
    assert poly_divmod(z ** 2 - 1, z - 1) == (z + 1, Poly(QQ, ()))
    assert poly_divmod(z, z ** 2) == (Poly(QQ, ()), z)
    F = PrimeField(2)
    w = Poly.gen(F)
    assert poly_divmod(w ** 3 + w + 1, w ** 2 + 1) == (w, Poly(F, (1,)))
    with pytest.raises(DivisionByZero):
        poly_divmod(z, Poly(QQ, ()))


def test_divmod_round_trip(rng):
    for field in (QQ, PrimeField(7)):
        for _ in range(30):
            a = rand_poly(field, rng, rng.randint(0, 6))
            b = rand_poly(field, rng, rng.randint(0, 4))
            if not b:
                continue
            q, r = divmod(a, b)
            assert q * b + r == a and r.degree < b.degree


def test_xgcd_examples():
    g, h, k = poly_xgcd(z - 1, z - 2)
    assert g == 1 and (z - 1) * h + (z - 2) * k == 1
    assert poly_xgcd(z ** 2, z)[0] == z
    p = 3 * z ** 2 + 1
    g, h, k = poly_xgcd(p, Poly(QQ, ()))
    assert g == p.monic() and h == Fraction(1, 3) and k == 0
    with pytest.raises(ZeroPolynomial):
        poly_xgcd(Poly(QQ, ()), Poly(QQ, ()))


def test_xgcd_certificate(rng):
    for field in (QQ, PrimeField(5)):
        for _ in range(30):
            p, q = rand_poly(field, rng, rng.randint(0, 5)), rand_poly(field, rng, rng.randint(0, 5))
            if not p and not q:
                continue
            g, h, k = poly_xgcd(p, q)
            assert g.is_monic() and p * h + q * k == g
            assert not p % g and not q % g


def test_difference_quotient_examples():
    x = BiPoly(QQ, {(1, 0): 1})
    y = BiPoly(QQ, {(0, 1): 1})
    assert difference_quotient(z ** 2) == x + y
    assert difference_quotient(z ** 3) == x * x + x * y + y * y
    assert difference_quotient(Poly(QQ, (4,))).is_zero()


def test_difference_quotient_certificate(rng):
    for _ in range(20):
        f = rand_poly(QQ, rng, rng.randint(0, 8))
        g = difference_quotient(f)
        lhs = BiPoly.from_univariate(f, "x") - BiPoly.from_univariate(f, "y")
        assert (lhs - BiPoly(QQ, {(1, 0): 1, (0, 1): -1}) * g).is_zero()


def test_invert_mod():
    assert invert_mod(z, z ** 2 + 1) == -z
    assert invert_mod(z, z ** 2) is None
    f = z ** 3 - 2
    assert invert_mod(Poly(QQ, (1,)), f) == 1


def test_invert_mod_certificate(rng):
    F = PrimeField(7)
    for _ in range(30):
        f = rand_poly(F, rng, rng.randint(1, 5))
        if f.degree < 1:
            continue
        g = rand_poly(F, rng, rng.randint(0, 6))
        u = invert_mod(g, f)
        if u is None:
            assert poly_gcd(g % f if g % f else f, f).degree > 0 or not g % f
        else:
            assert (g * u) % f == 1


def test_poly_eval():
    assert poly_eval(z ** 2 - 2, 3) == 7
    p = 5 * z ** 3 + 9
    assert poly_eval(p, 0) == 9
    w = Poly.gen(PrimeField(3))
    assert poly_eval(w ** 2 + w, 2) == 0
    with pytest.raises(FieldMismatch):
        w + z


def test_formatting():
    assert str(z ** 3 - 2 * z + Fraction(1, 2)) == "z^3 - 2*z + 1/2"
    assert str(-z) == "-z" and str(Poly(QQ, ())) == "0"
    assert str(Fraction(-1, 12) * z ** 3) == "-1/12*z^3"


def test_squarefree():
    p = (z - 1) ** 3 * (z + 2) ** 2 * (z ** 2 + 1)
    assert squarefree_part(p) == ((z - 1) * (z + 2) * (z ** 2 + 1)).monic()
    lead, factors = squarefree_factorization(7 * p)
    assert lead == 7
    assert dict((m, f) for f, m in factors) == {1: z ** 2 + 1, 2: z + 2, 3: z - 1}


def test_squarefree_refuses_vanishing_derivative():
    w = Poly.gen(PrimeField(3))
    with pytest.raises(Unsupported):
        squarefree_part(w ** 3 + 1)
