"""Spectra as zeros of the minimum polynomial, over Q and over GF(p)."""

from algspec.fields import QQ, PrimeField
from algspec.matrix import Mat, min_poly
from algspec.poly import Poly
from algspec.spectrum import inverse_via_minpoly, spectral_map, spectrum_of
from algspec.textio import format_value

# a rotation-like matrix: no rational eigenvalues at all
a = Mat(QQ, [[1, 1], [-1, 1]])
print("a =", a)
print("min poly:", min_poly(a).poly)
rep = spectrum_of(a)
print("rational spectrum:", format_value(rep.roots), "complete:", rep.complete, "residual:", rep.residual)

# but its fourth power is a scalar
print("a^4 =", a ** 4, "spectrum:", format_value(spectrum_of(a ** 4).roots))

# so p(spec a) can be a proper subset of spec p(a) over a non-closed field
z = Poly.gen(QQ)
m = spectral_map(z ** 4, a)
print("p(spec a) =", format_value(tuple(m.mapped)), " spec p(a) =", format_value(m.spec_pa.roots), " ->", m.equality.value)

# the inverse is a polynomial in a, read off the minimum polynomial
print("a^-1 =", inverse_via_minpoly(a))

# over GF(5) the same matrix does split: z^2 - 2z + 2 has roots 1 +- 2
F = PrimeField(5)
b = Mat(F, [[1, 1], [-1, 1]])
print("over GF(5):", sorted(int(r) for r in spectrum_of(b).roots))
