"""Moebius transforms of matrix pencils and their spectra in F u {oo}."""

from algspec.fields import QQ
from algspec.matrix import Mat
from algspec.pencil import MatPoly, Moebius, ext_sort_key, moebius_transform_pencil, pencil_spectrum, regularize, \
    spectrum_equivariance_check
from algspec.textio import format_value

e = Mat.identity(QQ, 2)
P = MatPoly([e, Mat(QQ, [[1, 0], [0, 0]])])      # e + x E11
sp = pencil_spectrum(P)
print("spec P:", format_value(sp.finite_part.roots), "plus oo" if sp.contains_infinity else "")

rev = Moebius.reversal(QQ)
Q = moebius_transform_pencil(rev, P)
print("reversal:", format_value(Q))
rep = spectrum_equivariance_check(rev, P)
print("g . spec P =", format_value(tuple(sorted(rep.image, key=ext_sort_key))), " spec T_g P =", format_value(tuple(sorted(rep.transformed, key=ext_sort_key))))

# a pencil with singular constant term: move two regular points to 0 and oo
J = Mat(QQ, [[0, 1], [0, 0]])
P2 = MatPoly([-J, Mat.zeros(QQ, 2), e])             # x^2 e - J
reg = regularize(P2)
print("regularizing g:", reg.g, "after", reg.tried, "candidates")
print("new end coefficients:", reg.pencil.coeff(0), reg.pencil.coeff(2))
