"""Sylvester equations in the quaternions over Q."""

from algspec.errors import NotSolvable
from algspec.sylvester import Quaternion, left_regular, quaternion_criterion, quaternion_minpoly, quaternion_sylvester

i = Quaternion(0, 1)
j = Quaternion(0, 0, 1)
print("i j =", i * j, " j i =", j * i)
print("min poly of i:", quaternion_minpoly(i))
print("min poly of 1+i+j+k:", quaternion_minpoly(Quaternion(1, 1, 1, 1)))
print("left regular representation of i:", left_regular(i))

a, b, c = i, Quaternion(0, 2), Quaternion(1, 0, 1, 0)
print("criterion for (i, 2i):", quaternion_criterion(a, b))
x = quaternion_sylvester(a, b, c)
print("x =", x, " check:", a * x - x * b)

try:
    quaternion_sylvester(i, i, Quaternion(1))
except NotSolvable as exc:
    print("a = b = i:", exc, "(consistent:", exc.consistent, ")")
