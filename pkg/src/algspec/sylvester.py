"""The equation ``a x - x b = c``.

If the minimum polynomials ``p`` of ``a`` and ``q`` of ``b`` are coprime,
a Bezout identity ``p h + q k = 1`` gives ``f = q k`` with ``f(a) = e`` and
``f(b) = 0``.  Writing ``f(x) - f(y) = (x - y) g(x, y)`` and letting ``A``,
``B`` be left multiplication by ``a`` and right multiplication by ``b``,
``I = f(A) - f(B) = (A - B) g(A, B)``, so the solution is
``x = g(A, B) c = sum g_ij a^i c b^j``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .certify import certify
from .errors import (EmptySampleSet, NotCommuting, NotSolvable, NotSpectrallyDisjoint, NotSquare,
                     ShapeMismatch, TheoremViolated, Unsupported, ZeroQuaternion)
from .fields import QQ
from .matrix import (Mat, kernel_basis, left_mult_operator, matrix_poly_eval, min_poly,
                     right_mult_operator, solve, unvec, vec)
from .poly import Poly, PolyRing, difference_quotient, poly_xgcd
from .ratfunc import RationalFunctions


def _square(*mats):
    for a in mats:
        if not a.is_square:
            raise NotSquare(f"expected a square matrix, got {a.nrows}x{a.ncols}")


@dataclass(frozen=True)
class DisjointnessCertificate:
    """``p h + q k = 1`` with ``f = q k``, so ``f(a) = e`` and ``f(b) = 0``."""

    p: Poly
    q: Poly
    h: Poly
    k: Poly
    f: Poly


def spectral_disjointness(a, b):
    """Bezout certificate for coprime minimum polynomials.

    Raises :class:`NotSpectrallyDisjoint` carrying the common factor otherwise.
    """
    _square(a, b)
    p = min_poly(a).poly
    q = min_poly(b, name="b").poly
    g, h, k = poly_xgcd(p, q)
    if g.degree > 0:
        raise NotSpectrallyDisjoint(g)
    f = q * k
    certify("Bezout: p h + q k = 1", p * h + q * k == 1)
    certify("f(a) = e", matrix_poly_eval(f, a) == Mat.identity(a.ring, a.nrows))
    certify("f(b) = 0", matrix_poly_eval(f, b).is_zero())
    return DisjointnessCertificate(p, q, h, k, f)


def _powers(a, top):
    out = [Mat.identity(a.ring, a.nrows)]
    for _ in range(top):
        out.append(out[-1] * a)
    return out


def _apply_bivariate(g, a, c, b):
    """``sum g_ij a^i c b^j``."""
    terms = g.items()
    top_i = max((i for (i, _), _ in terms), default=0)
    top_j = max((j for (_, j), _ in terms), default=0)
    pa, pb = _powers(a, top_i), _powers(b, top_j)
    x = Mat.zeros(c.ring, c.nrows, c.ncols)
    for (i, j), coef in terms:
        x = x + pa[i] * c * pb[j] * coef
    return x


def sylvester_operator(a, b):
    """The ``(mn) x (mn)`` matrix of ``x -> a x - x b`` (row-major vec)."""
    return left_mult_operator(a, b.nrows) - right_mult_operator(b, a.nrows)


def solve_sylvester(a, b, c, certificate=None):
    """Unique solution of ``a x - x b = c`` for spectrally disjoint ``a``, ``b``.

    ``a`` is ``m x m``, ``b`` is ``n x n`` and ``c`` is ``m x n``.  A
    certificate from :func:`spectral_disjointness` may be passed in.

    >>> from algspec.fields import QQ
    >>> a = Mat.diag(QQ, [1, 2]); b = Mat(QQ, [[3]]); c = Mat(QQ, [[1], [1]])
    >>> print(solve_sylvester(a, b, c))
    [[-1/2], [-1]]
    """
    _square(a, b)
    if c.shape != (a.nrows, b.nrows):
        raise ShapeMismatch(f"c must be {a.nrows}x{b.nrows}, got {c.nrows}x{c.ncols}")
    cert = certificate or spectral_disjointness(a, b)
    x = _apply_bivariate(difference_quotient(cert.f), a, c, b)
    certify("ax - xb = c", a * x - x * b == c)
    kernel = kernel_basis(sylvester_operator(a, b))
    certify("uniqueness: ax - xb = 0 only for x = 0", not kernel)
    return x


def sylvester_dense(a, b, c):
    """Solve ``a x - x b = c`` as one ``(mn) x (mn)`` linear system.

    Kept as an independent check on :func:`solve_sylvester`; returns ``None``
    when there is no solution and the first solution found otherwise.
    """
    sol = solve(sylvester_operator(a, b), vec(c))
    if sol is None:
        return None
    return unvec(c.ring, sol.entries(), c.nrows, c.ncols)


@dataclass(frozen=True)
class IdealMembershipReport:
    solution: Mat
    points: tuple
    x_vanishes: bool
    c_vanishes: bool
    polynomial_solution: bool

    @property
    def holds(self):
        return self.x_vanishes == self.c_vanishes

    def __bool__(self):
        return self.holds


def _vanishes_on(m, points):
    for e in m.entries():
        for s in points:
            v = e(s)
            if v is None or v:
                return False
    return True


def sylvester_ideal_membership(a, b, c, points):
    """Check that ``x`` lies in the evaluation ideal of ``points`` iff ``c`` does.

    ``a``, ``b``, ``c`` have entries in ``F[t]``; the equation is solved over
    ``F(t)``.  An entry of ``x`` with a pole at a sample point counts as not
    vanishing there.
    """
    points = tuple(points)
    if not points:
        raise EmptySampleSet("the evaluation set must be nonempty")
    ring = a.ring
    if not isinstance(ring, PolyRing):
        raise Unsupported("ideal membership expects matrices over a polynomial ring F[t]")
    K = RationalFunctions(ring.field, ring.var)
    lift = lambda m: m.map(K, K)
    points = tuple(ring.field(s) for s in points)
    x = solve_sylvester(lift(a), lift(b), lift(c))
    polynomial = all(e.den.degree == 0 for e in x.entries())
    report = IdealMembershipReport(x, points, _vanishes_on(x, points), _vanishes_on(lift(c), points), polynomial)
    if polynomial and not report.holds:
        raise TheoremViolated("x and c disagree on membership in the evaluation ideal")
    return report


def commuting_difference_inverse(a, b):
    """Inverse of ``a - b`` as ``g(a, b)`` for commuting, spectrally disjoint ``a``, ``b``.

    With ``f(x) - f(y) = (x - y) g(x, y)``, ``e = f(a) - f(b) = (a - b) g(a, b)``.
    """
    _square(a, b)
    if a.shape != b.shape:
        raise ShapeMismatch("a and b must have the same size")
    if not a.commutes_with(b):
        raise NotCommuting("a and b do not commute")
    cert = spectral_disjointness(a, b)
    g = difference_quotient(cert.f)
    inv = _apply_bivariate(g, a, Mat.identity(a.ring, a.nrows), b)
    eye = Mat.identity(a.ring, a.nrows)
    certify("(a - b) g(a, b) = e", (a - b) * inv == eye and inv * (a - b) == eye)
    return inv


@dataclass(frozen=True)
class TraceReport:
    """``tr(a^m c)`` for ``0 <= m < n``.

    All zero is necessary for ``a x - x a = c`` to be solvable, not
    sufficient.
    """

    traces: tuple
    note = "necessary, not sufficient"

    @property
    def obstructed(self):
        return any(t for _, t in self.traces)

    @property
    def first_obstruction(self):
        for m, t in self.traces:
            if t:
                return m
        return None


def trace_obstruction(a, c):
    _square(a, c)
    if a.shape != c.shape:
        raise ShapeMismatch("a and c must have the same size")
    traces = []
    power = Mat.identity(a.ring, a.nrows)
    for m in range(a.nrows):
        traces.append((m, (power * c).trace()))
        power = power * a
    return TraceReport(tuple(traces))


def commutant_dimension(a):
    """``(d, dim commutant)`` where ``d = n^2 - dim ker(x -> a x - x a)``."""
    _square(a)
    n = a.nrows
    dim = len(kernel_basis(sylvester_operator(a, a)))
    certify("commutant has dimension at least n", dim >= n)
    return n * n - dim, dim


@dataclass(frozen=True)
class MinPolyTransfer:
    element: Poly
    operator: Poly

    @property
    def equal(self):
        return self.element == self.operator

    def __bool__(self):
        return self.equal


def minpoly_transfer_check(a):
    """Minimum polynomial of ``a`` against that of left multiplication by ``a``."""
    _square(a)
    result = MinPolyTransfer(min_poly(a).poly, min_poly(left_mult_operator(a), name="L_a").poly)
    certify("min poly of a equals min poly of x -> a x", result.equal, TheoremViolated)
    return result


# ----------------------------------------------------------------------
# quaternions over Q

_MULT = {
    # (basis index, basis index) -> (sign, basis index) for 1, i, j, k
    (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
    (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
    (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
}


def _basis_product(r, s):
    if r == 0:
        return 1, s
    if s == 0:
        return 1, r
    return _MULT[r, s]


@dataclass(frozen=True)
class Quaternion:
    a0: Fraction
    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "a3"):
            object.__setattr__(self, name, QQ(getattr(self, name)))

    @property
    def components(self):
        return (self.a0, self.a1, self.a2, self.a3)

    @property
    def vector_norm(self):
        return self.a1 ** 2 + self.a2 ** 2 + self.a3 ** 2

    @property
    def norm(self):
        return self.a0 ** 2 + self.vector_norm

    def __add__(self, other):
        return Quaternion(*(x + y for x, y in zip(self.components, _q(other).components)))

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(*(-x for x in self.components))

    def __sub__(self, other):
        return self + (-_q(other))

    def __rsub__(self, other):
        return _q(other) - self

    def __mul__(self, other):
        out = [Fraction(0)] * 4
        for r, x in enumerate(self.components):
            for s, y in enumerate(_q(other).components):
                sign, t = _basis_product(r, s)
                out[t] += sign * x * y
        return Quaternion(*out)

    def __rmul__(self, other):
        return _q(other) * self

    def __bool__(self):
        return any(self.components)

    def __str__(self):
        return "(" + ", ".join(QQ.format(x) for x in self.components) + ")"


def _q(x):
    return x if isinstance(x, Quaternion) else Quaternion(x)


_BASIS = [Quaternion(*(1 if i == r else 0 for i in range(4))) for r in range(4)]


def left_regular(q):
    """4x4 matrix of ``x -> q x`` in the basis ``1, i, j, k``."""
    cols = [list((q * e).components) for e in _BASIS]
    return Mat.from_columns(QQ, cols)


def right_regular(q):
    """4x4 matrix of ``x -> x q`` in the basis ``1, i, j, k``."""
    cols = [list((e * q).components) for e in _BASIS]
    return Mat.from_columns(QQ, cols)


def quaternion_minpoly(q, var="z"):
    """``z^2 - 2 a0 z + |q|^2``, or ``z - a0`` for a real quaternion.

    >>> print(quaternion_minpoly(Quaternion(1, 1, 1, 1)))
    z^2 - 2*z + 4
    """
    if not q:
        raise ZeroQuaternion("the zero quaternion is excluded")
    if not q.vector_norm:
        p = Poly(QQ, (-q.a0, 1), var)
    else:
        p = Poly(QQ, (q.norm, -2 * q.a0, 1), var)
    certify("quaternion min poly annihilates the regular representation",
            matrix_poly_eval(p, left_regular(q)).is_zero())
    return p


def quaternion_criterion(a, b):
    """Unique solvability of ``a x - x b = c``: ``a0 != b0`` or the vector norms differ."""
    return a.a0 != b.a0 or a.vector_norm != b.vector_norm


def quaternion_sylvester(a, b, c):
    """Solve ``a x - x b = c`` in the quaternions over Q."""
    op = left_regular(a) - right_regular(b)
    ok = quaternion_criterion(a, b)
    singular = bool(kernel_basis(op))
    if ok == singular:
        raise TheoremViolated("quaternion criterion disagrees with the 4x4 system")
    sol = solve(op, Mat.from_columns(QQ, [list(c.components)]))
    if not ok:
        raise NotSolvable("a and b share a minimum polynomial; no unique solution", consistent=sol is not None)
    x = Quaternion(*sol.entries())
    certify("quaternion ax - xb = c", a * x - x * b == c)
    return x
