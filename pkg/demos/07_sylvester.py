"""The equation a x - x b = c for spectrally disjoint a and b."""

from algspec.fields import QQ
from algspec.matrix import Mat
from algspec.poly import Poly, difference_quotient
from algspec.sylvester import (commutant_dimension, commuting_difference_inverse, solve_sylvester,
                               spectral_disjointness, trace_obstruction)

a = Mat.diag(QQ, [1, 2])
b = Mat(QQ, [[3]])
cert = spectral_disjointness(a, b)
print("f =", cert.f, " f(a) = e and f(b) = 0")
print("difference quotient of f:", difference_quotient(cert.f))
print("x =", solve_sylvester(a, b, Mat(QQ, [[1], [1]])))

print("(a - b)^-1 for commuting a, b:", commuting_difference_inverse(a, Mat.diag(QQ, [3, 3])))
print("difference quotient of z^3:", difference_quotient(Poly.gen(QQ) ** 3))

# for b = a the equation is constrained: tr(a^m c) = 0 is necessary
J = Mat(QQ, [[0, 1], [0, 0]])
rep = trace_obstruction(J, Mat(QQ, [[0, 0], [1, 0]]))
print("traces:", [str(t) for _, t in rep.traces], " first obstruction at m =", rep.first_obstruction)

for name, m in (("I", Mat.identity(QQ, 3)), ("J_3", Mat(QQ, [[0, 1, 0], [0, 0, 1], [0, 0, 0]]))):
    d, dim = commutant_dimension(m)
    print(f"{name}: commutant dim {dim}, range of x -> ax - xa has dim {d}")
