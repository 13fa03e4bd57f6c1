"""Resolvent families: extend from one value, recover the element, and J-spectra."""

from fractions import Fraction

from algspec.fields import QQ
from algspec.matrix import Mat, mat_inverse
from algspec.poly import PolyRing
from algspec.resolvent import (ResolventFamily, associated_element, evaluation_quotient_spectrum, extend_maximal,
                               polyring_spectrum, verify_family)
from algspec.textio import format_value

a = Mat.diag(QQ, [1, 2])
fam = ResolventFamily.of_matrix(a, [0, 3, 5])
print("resolvent identity on samples:", bool(verify_family(fam)))

# from r_0 alone the whole family and its spectrum are determined
ext = extend_maximal(0, -mat_inverse(a))
print("excluded polynomial:", ext.excluded_poly, " spectrum:", format_value(ext.excluded_roots.roots))
print("r(1/2) =", ext(Fraction(1, 2)))
print("associated element:", associated_element(0, -mat_inverse(a)))

# a nilpotent value gives a family defined everywhere, with no associated element
print("nilpotent r_0:", extend_maximal(0, Mat(QQ, [[0, 1], [0, 0]])).excluded_poly)

# matrices over Q[x]: invertible iff the determinant is a nonzero constant
R = PolyRing(QQ, "x")
x = R.gen()
s = polyring_spectrum(Mat(R, [[1, 1], [x, 1 + x]]))
print("spectrum of [[1,1],[x,1+x]] is everything except", format_value(s.points))

# modulo the ideal of matrices vanishing on S, spectra are pointwise unions
q = evaluation_quotient_spectrum(Mat(R, [[x ** 2, 1], [0, x ** 2]]), [1, 2])
print("J_S-spectrum for S = {1, 2}:", format_value(tuple(sorted(q.union))))
