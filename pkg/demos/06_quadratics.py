"""Quadratic polynomials in a matrix variable: identity, factorization, uniqueness."""

from algspec.errors import NoFactorization
from algspec.factorization import quad_eval, quad_factor_search, quad_identity_equiv, quad_uniqueness_check, \
    ring_left_factorization
from algspec.fields import QQ, PrimeField
from algspec.matrix import Mat

u = Mat(QQ, [[1, 2], [3, 4]])
v = Mat(QQ, [[0, 1], [1, 0]])
w = Mat(QQ, [[5, 0], [1, 1]])
c = Mat.identity(QQ, 2) * 2
print("shift by a central c:", quad_identity_equiv(u, v, w, u + c, v - c, w))
N = Mat(QQ, [[0, 1], [0, 0]])
print("shift by a nilpotent:", quad_identity_equiv(u, v, w, u + N, v - N, w))

# x^2 - E11 x - x E22 - 2e vanishes at 2e, yet has no factorization (x - 2e)(x - b)
e = Mat.identity(QQ, 2)
u, v, w = -Mat(QQ, [[1, 0], [0, 0]]), -Mat(QQ, [[0, 0], [0, 1]]), e * -2
print("p(2e) =", quad_eval(u, v, w, e * 2))
try:
    ring_left_factorization(u, v, w, e * 2)
except NoFactorization as exc:
    print("rejected:", exc, "; x = 0 forces b =", exc.forced)

# scalar x^2 - 1 over GF(3): exactly the swapped pair
F = PrimeField(3)
one = lambda k: Mat(F, [[k]])  # noqa: E731
found = quad_factor_search(one(0), one(0), one(-1))
print("factorizations:", [(str(a), str(b)) for a, b in found])
verdict, c = quad_uniqueness_check(found[0], found[1], one(0), one(0), one(-1))
print(verdict, "with central difference", c)
