"""ab and ba share their nonzero spectrum; lambda = 0 is special."""

import random

from algspec.fields import QQ, PrimeField
from algspec.matrix import Mat
from algspec.spectrum import ab_ba_witness, jordan_ideal_dim, spectrum_of

rng = random.Random(1)
F = PrimeField(5)
for _ in range(3):
    a = Mat(F, [[rng.randrange(5) for _ in range(3)] for _ in range(3)])
    b = Mat(F, [[rng.randrange(5) for _ in range(3)] for _ in range(3)])
    sab = sorted(int(r) for r in spectrum_of(a * b).roots)
    sba = sorted(int(r) for r in spectrum_of(b * a).roots)
    print("spec(ab) =", sab, " spec(ba) =", sba)

# explicit inverse of lam e - ba from the inverse of lam e - ab
a = Mat(QQ, [[0, 1], [0, 0]])
b = Mat(QQ, [[1, 0], [0, 0]])
print("witness at lam = 1:", ab_ba_witness(a, b, 1))

# generalized eigenspaces as left ideals: equal dimension for lam != 0, not for lam = 0
print("ab =", a * b, " ba =", b * a)
print("d(ab, 0, 1) =", jordan_ideal_dim(a * b, 0, 1), " d(ba, 0, 1) =", jordan_ideal_dim(b * a, 0, 1))
