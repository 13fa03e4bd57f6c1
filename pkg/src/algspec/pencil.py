"""Matrix pencils ``P(x) = sum_r x^r A_r`` and the SL(2, F) action on them.

For ``g = [[a, b], [c, d]]`` with ``ad - bc = 1`` and a pencil of weight
``n`` (degree at most ``n``) the transformed pencil is

    (T_g P)(x) = (a - c x)^n P(g^-1 . x),    g^-1 = [[d, -b], [-c, a]],

i.e. ``sum_r A_r (d x - b)^r (a - c x)^(n - r)``.  The prefactor is the
denominator of ``g^-1 . x``, which is what makes the result a polynomial
and ``T_g T_h = T_gh`` hold.  For the reversal ``g = [[0, 1], [-1, 0]]``
this gives ``x^n P(-1/x)``.

Spectra live in ``F u {oo}``; ``oo`` belongs to the spectrum when the
coefficient of ``x^n`` is singular.
"""

from dataclasses import dataclass
from itertools import islice

from .certify import certify
from .errors import DegreeExceedsWeight, FieldMismatch, InvariantViolation, NonRegular, NotFound, ShapeMismatch
from .matrix import Mat, bareiss_det, mat_det, mat_inverse
from .poly import Poly, PolyRing
from .spectrum import SpectrumReport


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "oo"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def ext_sort_key(p):
    return (1, 0) if p is INFINITY else (0, p)


class MatPoly:
    """Matrix polynomial with coefficient matrices ``A_0, ..., A_m`` (low to high)."""

    __slots__ = ("field", "size", "coeffs")

    def __init__(self, coeffs, field=None, size=None):
        coeffs = list(coeffs)
        if coeffs:
            field = coeffs[0].ring if field is None else field
            size = coeffs[0].nrows if size is None else size
        if field is None or size is None:
            raise ShapeMismatch("an empty pencil needs an explicit field and size")
        for c in coeffs:
            if c.ring != field:
                raise FieldMismatch("pencil coefficients over different fields")
            if c.shape != (size, size):
                raise ShapeMismatch("pencil coefficients must be square of one size")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.size = size
        self.coeffs = tuple(coeffs)

    @classmethod
    def linear(cls, c):
        """``x I - c``."""
        return cls([-c, Mat.identity(c.ring, c.nrows)])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, r):
        if 0 <= r < len(self.coeffs):
            return self.coeffs[r]
        return Mat.zeros(self.field, self.size)

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == Mat.identity(self.field, self.size)

    def __call__(self, x):
        x = self.field(x)
        acc = Mat.zeros(self.field, self.size)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        k = max(len(self.coeffs), len(other.coeffs))
        return MatPoly([self.coeff(r) + other.coeff(r) for r in range(k)], self.field, self.size)

    def __neg__(self):
        return MatPoly([-c for c in self.coeffs], self.field, self.size)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MatPoly):
            return MatPoly([c * other for c in self.coeffs], self.field, self.size)
        if self.is_zero() or other.is_zero():
            return MatPoly([], self.field, self.size)
        out = [Mat.zeros(self.field, self.size) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return MatPoly(out, self.field, self.size)

    def __eq__(self, other):
        return isinstance(other, MatPoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def as_poly_matrix(self, var="x"):
        """The same pencil as a single matrix over F[var]."""
        ring = PolyRing(self.field, var)
        n = self.size
        return Mat._raw(ring, [[Poly(self.field, [c[i, j] for c in self.coeffs], var) for j in range(n)]
                               for i in range(n)])

    def det(self, var="x"):
        """``det P(x)`` as a scalar polynomial (Bareiss over F[x])."""
        if self.is_zero():
            return Poly(self.field, (), var)
        return bareiss_det(self.as_poly_matrix(var))

    def __repr__(self):
        return "MatPoly([" + ", ".join(str(c) for c in self.coeffs) + "])"


def multiply_linear_factors(factors):
    """``(x I - C_1)(x I - C_2) ... (x I - C_m)``."""
    result = MatPoly([Mat.identity(factors[0].ring, factors[0].nrows)])
    for c in factors:
        result = result * MatPoly.linear(c)
    return result


# ----------------------------------------------------------------------
class Moebius:
    """An element ``[[a, b], [c, d]]`` of SL(2, F)."""

    __slots__ = ("field", "a", "b", "c", "d")

    def __init__(self, field, a, b, c, d):
        a, b, c, d = (field(v) for v in (a, b, c, d))
        if a * d - b * c != 1:
            raise InvariantViolation(f"determinant {a * d - b * c} != 1")
        self.field = field
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls, field):
        return cls(field, 1, 0, 0, 1)

    @classmethod
    def reversal(cls, field):
        return cls(field, 0, 1, -1, 0)

    def inverse(self):
        return Moebius(self.field, self.d, -self.b, -self.c, self.a)

    def __mul__(self, other):
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return Moebius(self.field, a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __eq__(self, other):
        return isinstance(other, Moebius) and (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __call__(self, x):
        return moebius_act_point(self, x)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return f"Moebius([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def moebius_act_point(g, x):
    """``g . x = (a x + b) / (c x + d)`` on ``F u {oo}``."""
    if x is INFINITY:
        return INFINITY if not g.c else g.a / g.c
    x = g.field(x)
    den = g.c * x + g.d
    if not den:
        return INFINITY
    return (g.a * x + g.b) / den


def moebius_transform_pencil(g, P, weight=None):
    """``T_g P`` at the given weight (default: the degree of ``P``)."""
    n = P.degree if weight is None else weight
    if P.degree > n:
        raise DegreeExceedsWeight(f"degree {P.degree} exceeds weight {n}")
    if P.is_zero():
        return P
    F = P.field
    num = Poly(F, (-g.b, g.d), "x")   # d x - b
    den = Poly(F, (g.a, -g.c), "x")   # a - c x
    out = [Mat.zeros(F, P.size) for _ in range(n + 1)]
    for r, A in enumerate(P.coeffs):
        scal = num ** r * den ** (n - r)
        for k, s in enumerate(scal.coeffs):
            if s:
                out[k] = out[k] + A * s
    return MatPoly(out, F, P.size)


def homogenize(P, weight=None):
    """Evaluator of ``p(x, y) = sum_r x^r y^(n-r) A_r``."""
    n = P.degree if weight is None else weight
    F = P.field

    def evaluate(x, y):
        x, y = F(x), F(y)
        acc = Mat.zeros(F, P.size)
        for r in range(n + 1):
            acc = acc + P.coeff(r) * (x ** r * y ** (n - r))
        return acc

    return evaluate


# ----------------------------------------------------------------------
@dataclass(frozen=True)
class PencilSpectrum:
    finite_part: SpectrumReport
    contains_infinity: bool
    weight: int

    def points(self):
        pts = set(self.finite_part.roots)
        if self.contains_infinity:
            pts.add(INFINITY)
        return frozenset(pts)


def pencil_spectrum(P, weight=None):
    """Finite spectrum from ``det P(x)``, plus ``oo`` when the weight-n coefficient is singular."""
    n = P.degree if weight is None else weight
    if P.degree > n:
        raise DegreeExceedsWeight(f"degree {P.degree} exceeds weight {n}")
    det = P.det()
    if not det:
        raise NonRegular("det P(x) vanishes identically; the spectrum is all of F")
    finite = SpectrumReport.of_poly(det)
    top = mat_det(P.coeff(n))
    return PencilSpectrum(finite, not top, n)


@dataclass(frozen=True)
class EquivarianceReport:
    holds: bool
    method: str  # "points" or "polynomial"
    image: frozenset
    transformed: frozenset


def spectrum_equivariance_check(g, P, weight=None):
    """Check ``spec(T_g P) = g . spec(P)``.

    When both finite spectra are fully known the point sets are compared.
    Otherwise the determinants are compared through the induced substitution
    ``det (T_g P)(x) = D(d x - b, a - c x)``, with ``D`` the homogenized
    ``det P`` of degree ``n * size``.
    """
    n = P.degree if weight is None else weight
    Q = moebius_transform_pencil(g, P, n)
    sp = pencil_spectrum(P, n)
    sq = pencil_spectrum(Q, n)
    image = frozenset(moebius_act_point(g, x) for x in sp.points())
    if sp.finite_part.complete and sq.finite_part.complete:
        holds = image == sq.points()
        certify("equivariance: spec(T_g P) = g . spec(P)", holds)
        return EquivarianceReport(holds, "points", image, sq.points())
    F = P.field
    total = n * P.size
    detp = P.det()
    num = Poly(F, (-g.b, g.d), "x")
    den = Poly(F, (g.a, -g.c), "x")
    expected = Poly(F, (), "x")
    for i, c in enumerate(detp.coeffs):
        expected = expected + num ** i * den ** (total - i) * c
    # g has entries in F, so it permutes the F-rational points as well
    holds = expected == Q.det() and image == sq.points()
    certify("equivariance: det(T_g P) = substituted det P", holds)
    return EquivarianceReport(holds, "polynomial", image, sq.points())


@dataclass(frozen=True)
class Regularization:
    g: Moebius
    pencil: MatPoly
    points: tuple  # (x, y) with g.x = 0 and g.y = oo, or () for the identity
    tried: int


def regularize(P, search_points=None):
    """Find ``g`` so that ``T_g P`` has invertible constant and leading coefficients.

    Candidate points default to 0, 1, -1, 2, -2, ... over Q (at most
    ``deg(P) * size + 2`` of them are ever needed, since ``det P`` has at
    most that many zeros) and to every element of a finite field.
    """
    F = P.field
    n = P.degree
    det = P.det()
    if not det:
        raise NonRegular("det P(x) vanishes identically")
    if mat_inverse(P.coeff(0), "A_0") is not None and mat_inverse(P.coeff(n), f"A_{n}") is not None:
        return Regularization(Moebius.identity(F), P, (), 0)
    if search_points is None:
        bound = n * P.size + 2
        search_points = F.elements() if F.is_finite else islice(F.sample_points(), bound)
    good, tried = [], 0
    for x in search_points:
        tried += 1
        if det(F(x)):
            good.append(F(x))
            if len(good) == 2:
                break
    if len(good) < 2:
        raise NotFound(f"fewer than two regular points among {tried} candidates")
    x, y = good
    k = F.one / (x - y)
    g = Moebius(F, 1, -x, k, -y * k)
    certify("regularizing g sends x to 0 and y to oo", moebius_act_point(g, x) == 0
            and moebius_act_point(g, y) is INFINITY)
    Q = moebius_transform_pencil(g, P, n)
    certify("regularized pencil has invertible constant coefficient", mat_inverse(Q.coeff(0), "B_0") is not None)
    certify("regularized pencil has invertible leading coefficient", mat_inverse(Q.coeff(n), f"B_{n}") is not None)
    return Regularization(g, Q, (x, y), tried)
