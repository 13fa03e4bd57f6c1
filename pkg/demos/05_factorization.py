"""Linearization, Euclid division and factorization of monic pencils."""

from algspec.errors import CannotFactor
from algspec.factorization import companion_linearize, euclid_divide, factor_pencil, linearization_identity_check
from algspec.fields import QQ
from algspec.matrix import Mat
from algspec.pencil import MatPoly
from algspec.textio import format_value

e = Mat.identity(QQ, 2)
S = Mat(QQ, [[1, 1], [0, 1]])
C1 = S * Mat.diag(QQ, [1, 2]) * S ** -1
C2 = Mat.diag(QQ, [3, 4])
P = MatPoly.linear(C1) * MatPoly.linear(C2)
print("P =", format_value(P), " det P =", P.det())

X = companion_linearize(P).X
print("companion matrix:", X)
print("G/H identity at 0, 1, -1:", linearization_identity_check(P, [0, 1, -1]).holds)

Q, rem = euclid_divide(P, C2)
print("P = Q (x e - C2) + rem with rem =", rem)

f = factor_pencil(P)
print("factors:", format_value(f.factors), " multiply back:", f.product() == P)

# x^2 e - J: det = x^4, and no factorization exists
J = Mat(QQ, [[0, 1], [0, 0]])
try:
    factor_pencil(MatPoly([-J, Mat.zeros(QQ, 2), e]))
except CannotFactor as exc:
    print("x^2 e - J:", exc.reason, "residual", exc.residual)
