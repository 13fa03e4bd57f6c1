"""Spectra of matrices viewed as algebraic elements.

The spectrum of an algebraic element is the zero set of its minimum
polynomial.  Over a field that is not algebraically closed only the zeros
lying in the field can be listed, so every report carries a ``complete``
flag and the unfactored ``residual``.
"""

import enum
from dataclasses import dataclass, field
from math import comb

from .certify import certify
from .errors import InconsistentSidedness, NotSquare, ShapeMismatch, TheoremViolated, ZeroLambda
from .matrix import Mat, kernel_basis, mat_inverse, matrix_poly_eval, min_poly, solve
from .poly import Poly
from .roots import find_roots


@dataclass(frozen=True)
class SpectrumReport:
    defining_poly: Poly
    roots: tuple
    complete: bool
    residual: Poly = field(compare=False, default=None)

    @classmethod
    def of_poly(cls, p):
        p = p.monic()
        roots, complete, residual = find_roots(p)
        for r in roots:
            certify(f"spectrum: {r} is a zero of {p}", not p(r))
        return cls(p, tuple(roots), complete, residual)

    @property
    def root_set(self):
        return frozenset(self.roots)


def _square(a):
    if not a.is_square:
        raise NotSquare(f"expected a square matrix, got {a.nrows}x{a.ncols}")


def spectrum_of(a, name="a"):
    """Spectrum of ``a`` as the zeros of its minimum polynomial.

    >>> from algspec.fields import QQ
    >>> a = Mat(QQ, [[1, 1], [-1, 1]])
    >>> r = spectrum_of(a)
    >>> print(r.defining_poly, r.roots, r.complete)
    z^2 - 2*z + 2 () False
    >>> spectrum_of(a ** 4).roots
    (Fraction(-4, 1),)
    """
    _square(a)
    return SpectrumReport.of_poly(min_poly(a, name=name).poly)


def inverse_via_minpoly(a):
    """Inverse as a polynomial in ``a`` read off the minimum polynomial.

    If ``m(z) = z^n + c_{n-1} z^{n-1} + ... + c_0`` with ``c_0 != 0`` then
    ``a^-1 = -(a^{n-1} + c_{n-1} a^{n-2} + ... + c_1 e) / c_0``.  Returns
    ``None`` when ``c_0 = 0``, i.e. when ``a`` is singular.
    """
    _square(a)
    m = min_poly(a).poly
    c0 = m[0]
    if not c0:
        return None
    tail = Poly(m.field, m.coeffs[1:], m.var)
    inv = matrix_poly_eval(tail, a) * (-(a.ring.one / c0))
    eye = Mat.identity(a.ring, a.nrows)
    certify("inverse from minimum polynomial: a * a^-1 = e", a * inv == eye and inv * a == eye)
    return inv


class Equality(enum.Enum):
    PROVEN = "Proven"
    FORWARD_ONLY = "ForwardOnly"


@dataclass(frozen=True)
class SpectralMapReport:
    mapped: frozenset
    spec_pa: SpectrumReport
    spec_a: SpectrumReport
    equality: Equality


def spectral_map(p, a):
    """Compare ``{p(z) : z in spec(a)}`` with ``spec(p(a))``.

    The inclusion of the mapped set is always certified.  Equality is only
    claimed when both spectra are known completely; over a field that is not
    algebraically closed ``spec(p(a))`` can be strictly larger.
    """
    _square(a)
    spec_a = spectrum_of(a)
    mapped = frozenset(p(z) for z in spec_a.roots)
    spec_pa = spectrum_of(matrix_poly_eval(p, a), name="p(a)")
    certify("spectral mapping: p(spec a) is contained in spec p(a)", mapped <= spec_pa.root_set)
    if spec_a.complete and spec_pa.complete:
        if mapped != spec_pa.root_set:
            raise TheoremViolated("split spectra but spectral mapping equality fails")
        return SpectralMapReport(mapped, spec_pa, spec_a, Equality.PROVEN)
    return SpectralMapReport(mapped, spec_pa, spec_a, Equality.FORWARD_ONLY)


def ab_ba_witness(a, b, lam):
    """Inverse of ``lam e - ba`` built from the inverse of ``lam e - ab``.

    ``c = lam^-1 (e + b (lam e - ab)^-1 a)``; ``None`` when ``lam e - ab`` is
    singular.
    """
    _square(a)
    _square(b)
    if a.shape != b.shape:
        raise ShapeMismatch("a and b must have the same size")
    lam = a.ring(lam)
    if not lam:
        raise ZeroLambda("the ab/ba relation excludes lambda = 0")
    eye = Mat.identity(a.ring, a.nrows)
    inv = mat_inverse(eye * lam - a * b)
    if inv is None:
        return None
    c = (eye + b * inv * a) * (a.ring.one / lam)
    target = eye * lam - b * a
    certify("ab/ba witness: c (lam e - ba) = (lam e - ba) c = e", c * target == eye and target * c == eye)
    return c


def jordan_ideal_dim(a, lam, k):
    """Dimension of ``{x : (a - lam e)^k x = 0}`` inside M(n, F), i.e. ``n * dim ker``."""
    _square(a)
    if k < 1:
        raise ValueError("k must be a positive integer")
    shifted = (a - Mat.identity(a.ring, a.nrows) * a.ring(lam)) ** k
    return a.nrows * len(kernel_basis(shifted))


def jordan_transfer_operator(a, b, lam, k):
    """The element ``c = sum_{r=1}^k C(k,r) a (ba)^{r-1} (-lam)^{k-r}``.

    Left multiplication by ``c`` maps ``J(ba, lam, k)`` into ``J(ab, lam, k)``
    and satisfies ``(ba - lam e)^k = b c + (-lam)^k e``.
    """
    ring = a.ring
    lam = ring(lam)
    ba = b * a
    c = Mat.zeros(ring, a.nrows)
    for r in range(1, k + 1):
        c = c + a * ba ** (r - 1) * (ring(comb(k, r)) * (-lam) ** (k - r))
    eye = Mat.identity(ring, a.nrows)
    certify("(ba - lam e)^k = b c + (-lam)^k e", (ba - eye * lam) ** k == b * c + eye * (-lam) ** k)
    return c


class Sidedness(enum.Enum):
    TWO_SIDED = "TwoSided"
    NEITHER = "Neither"


def one_sided_invertibility(a):
    """Solve ``ax = e`` and ``xa = e`` separately and compare.

    For an algebraic element the two are solvable together or not at all;
    a disagreement raises :class:`InconsistentSidedness`.
    """
    _square(a)
    eye = Mat.identity(a.ring, a.nrows)
    right = solve(a, eye)
    left_t = solve(a.T, eye)
    if (right is None) != (left_t is None):
        raise InconsistentSidedness("left and right invertibility disagree")
    if right is None:
        return Sidedness.NEITHER
    certify("sidedness: a x = e and y a = e both solved", a * right == eye and left_t.T * a == eye)
    return Sidedness.TWO_SIDED
