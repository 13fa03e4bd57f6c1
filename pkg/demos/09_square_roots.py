"""Square roots in Q(t): every zero and pole must have even order."""

from algspec.fields import QQ
from algspec.ratfunc import RationalFunctions, rf_sqrt

K = RationalFunctions(QQ)
t = K.gen()
for f in ((t ** 2 + 2 * t + 1) / t ** 2, t, 4 * (t - 1) ** 2 / (t + 3) ** 4, 2 * t ** 2):
    r = rf_sqrt(f)
    print(f"sqrt({f}) =", r if r is not None else "none")
