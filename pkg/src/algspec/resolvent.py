"""Pseudo-resolvent families and spectra relative to evaluation ideals.

A family is a finite sample ``{lam: r_lam}`` of square matrices satisfying
``r_lam - r_mu = (mu - lam) r_lam r_mu``.  Because the field may be infinite
the maximal extension is never materialized; it is described by the
polynomial ``det(e + (lam - alpha) r_alpha)`` whose zeros form the spectrum
of the family, together with an evaluator for the extended family.

Evaluation ideals: for a finite set ``S`` of points, ``J_S`` is the ideal of
matrices over F[t] whose entries vanish on ``S``.  The quotient by ``J_S`` is
the algebra of functions ``S -> M(n, F)``, so spectra relative to ``J_S`` are
unions of pointwise spectra.
"""

from dataclasses import dataclass
from itertools import islice

from .certify import certify
from .errors import (
    EmptyFamily,
    EmptySampleSet,
    NotSquare,
    PreconditionError,
    ProductsNotInIdeal,
    TheoremViolated,
)
from .matrix import Mat, mat_det, mat_inverse, solve
from .poly import Poly, PolyRing, poly_gcd
from .spectrum import SpectrumReport, spectrum_of


def _square(a):
    if not a.is_square:
        raise NotSquare(f"expected a square matrix, got {a.nrows}x{a.ncols}")


class ResolventFamily:
    """Finite sample of a (pseudo-)resolvent family."""

    def __init__(self, samples):
        self.samples = dict(samples)
        if not self.samples:
            raise EmptyFamily("a resolvent family needs at least one sample")
        shapes = {m.shape for m in self.samples.values()}
        if len(shapes) != 1 or not next(iter(self.samples.values())).is_square:
            raise NotSquare("family values must be square matrices of one size")

    @classmethod
    def of_matrix(cls, a, points):
        """The true resolvent ``(lam e - a)^-1`` sampled at ``points``."""
        eye = Mat.identity(a.ring, a.nrows)
        samples = {}
        for lam in points:
            inv = mat_inverse(eye * a.ring(lam) - a)
            if inv is None:
                raise PreconditionError(f"{lam} lies in the spectrum")
            samples[a.ring(lam)] = inv
        return cls(samples)

    def __len__(self):
        return len(self.samples)

    def items(self):
        return list(self.samples.items())


@dataclass(frozen=True)
class FamilyCheck:
    valid: bool
    violating_pair: tuple = None

    def __bool__(self):
        return self.valid


def verify_family(family):
    """Check the resolvent identity (and hence commutation) on every ordered pair."""
    if not isinstance(family, ResolventFamily):
        family = ResolventFamily(family)
    items = family.items()
    for lam, r in items:
        for mu, s in items:
            if r - s != r * s * (mu - lam) or r * s != s * r:
                return FamilyCheck(False, (lam, mu))
    return FamilyCheck(True)


@dataclass(frozen=True)
class MaxExtensionReport:
    """Maximal extension of the family generated by ``r_alpha`` at ``alpha``."""

    anchor: object
    r_anchor: Mat
    excluded_poly: Poly
    excluded_roots: SpectrumReport

    def in_domain(self, lam):
        return bool(self.excluded_poly(lam))

    def __call__(self, lam):
        """``(e + (lam - alpha) r_alpha)^-1 r_alpha``."""
        ring = self.r_anchor.ring
        lam = ring(lam)
        eye = Mat.identity(ring, self.r_anchor.nrows)
        x = solve(eye + self.r_anchor * (lam - self.anchor), self.r_anchor)
        if x is None:
            raise PreconditionError(f"{lam} lies in the spectrum of the family")
        return x

    def domain_points(self, count, avoid=()):
        avoid = set(avoid)
        ring = self.r_anchor.ring
        pts = (p for p in ring.sample_points() if p not in avoid and self.in_domain(p))
        return list(islice(pts, count))


def extend_maximal(alpha, r_alpha):
    """Maximal extension of a pseudo-resolvent known at a single point.

    >>> from algspec.fields import QQ
    >>> r0 = -Mat.diag(QQ, [1, 2]) ** -1
    >>> rep = extend_maximal(0, r0)
    >>> print(rep.excluded_poly, rep.excluded_roots.roots)
    z^2 - 3*z + 2 (Fraction(1, 1), Fraction(2, 1))
    """
    _square(r_alpha)
    field = r_alpha.ring
    alpha = field(alpha)
    ring = PolyRing(field, "z")
    lam = ring.gen()
    n = r_alpha.nrows
    m = Mat._raw(ring, [[(ring.one if i == j else ring.zero) + (lam - alpha) * r_alpha[i, j] for j in range(n)]
                        for i in range(n)])
    det = mat_det(m)
    certify("excluded polynomial is nonzero at the anchor", bool(det(alpha)))
    excluded = det.monic()
    return MaxExtensionReport(alpha, r_alpha, excluded, SpectrumReport.of_poly(excluded))


def associated_element(alpha, r_alpha, checks=3, extension=None):
    """The ``a`` with ``r_lam = (lam e - a)^-1``, or ``None`` if ``r_alpha`` is singular.

    ``extension`` may pass in the already computed :func:`extend_maximal` report.
    """
    _square(r_alpha)
    field = r_alpha.ring
    alpha = field(alpha)
    inv = mat_inverse(r_alpha)
    if inv is None:
        return None
    eye = Mat.identity(field, r_alpha.nrows)
    a = eye * alpha - inv
    ext = extension or extend_maximal(alpha, r_alpha)
    for lam in ext.domain_points(checks, avoid=[alpha]):
        certify(f"associated element: (lam e - a) r_lam = e at lam={lam}", (eye * lam - a) * ext(lam) == eye)
    spec = spectrum_of(a)
    certify("spectrum of the family equals spectrum of a", spec.root_set == ext.excluded_roots.root_set)
    return a


# ----------------------------------------------------------------------
# evaluation ideals J_S of M(n, F[t])

def _points(ring, S):
    S = [ring.field(s) for s in S]
    if not S:
        raise EmptySampleSet("the evaluation set S must be nonempty")
    return list(dict.fromkeys(S))


def in_evaluation_ideal(a, S):
    """Whether every entry of ``a`` vanishes at every point of ``S``."""
    return all(a.evaluate(s).is_zero() for s in _points(a.ring, S))


@dataclass(frozen=True)
class QuotientSpectrum:
    per_point: dict
    union: frozenset
    complete: bool


def evaluation_quotient_spectrum(a, S, name="a"):
    """Spectrum of ``a`` in ``M(n, F[t]) / J_S``: the union of ``spec(a(s))``.

    >>> from algspec.fields import QQ
    >>> R = PolyRing(QQ, "x"); x = R.gen()
    >>> a = Mat(R, [[x**2, 1], [0, x**2]])
    >>> sorted(evaluation_quotient_spectrum(a, [1, 2]).union)
    [Fraction(1, 1), Fraction(4, 1)]
    """
    _square(a)
    pts = _points(a.ring, S)
    per_point = {s: spectrum_of(a.evaluate(s), name=f"{name}({s})") for s in pts}
    union = frozenset().union(*(r.root_set for r in per_point.values()))
    certify(f"#spec_J({name}) <= n #S", len(union) <= a.nrows * len(pts))
    return QuotientSpectrum(per_point, union, all(r.complete for r in per_point.values()))


def _family_quotient_spectrum(r_lam, lam, S):
    """J_S-spectrum of the family generated by ``r_lam`` at ``lam``."""
    return {s: extend_maximal(lam, r_lam.evaluate(s)).excluded_roots for s in S}


@dataclass(frozen=True)
class PerturbationCheck:
    in_ideal: bool
    spectra_equal: bool
    spectrum1: dict
    spectrum2: dict

    @property
    def holds(self):
        return self.in_ideal and self.spectra_equal

    def __bool__(self):
        return self.holds


def j_spectrum_perturbation_check(r1, r2, lam, S):
    """Check that a difference in ``J_S`` leaves the ``J_S``-spectrum unchanged.

    ``r1`` and ``r2`` are the values at ``lam`` of two resolvent families over
    F[t].  Returns a report whose truth value is "difference lies in J_S and
    the quotient spectra agree".
    """
    pts = _points(r1.ring, S)
    lam = r1.ring.field(lam)
    in_ideal = in_evaluation_ideal(r1 - r2, pts)
    s1 = _family_quotient_spectrum(r1, lam, pts)
    s2 = _family_quotient_spectrum(r2, lam, pts)
    equal = all(s1[s].defining_poly == s2[s].defining_poly for s in pts)
    if in_ideal:
        if not equal:
            raise TheoremViolated("difference in J_S but J_S-spectra differ")
        certify("perturbation in J_S preserves the J_S-spectrum", equal)
    return PerturbationCheck(in_ideal, equal, s1, s2)


@dataclass(frozen=True)
class SpecUnionReport:
    left: frozenset
    right: frozenset
    complete: bool

    @property
    def holds(self):
        return self.left == self.right


def spec_union_orthogonal(parts, S):
    """``spec_J(a) u {0} = U_r spec_J(a_r)`` when ``a_r a_s`` lies in ``J_S`` for ``r != s``.

    Both sides are computed pointwise on ``S`` with 0 adjoined.
    """
    if not parts:
        raise PreconditionError("need at least one summand")
    ring = parts[0].ring
    pts = _points(ring, S)
    for r, ar in enumerate(parts):
        for s, as_ in enumerate(parts):
            if r != s and not in_evaluation_ideal(ar * as_, pts):
                raise ProductsNotInIdeal(f"a_{r + 1} a_{s + 1} does not vanish on S")
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    zero = ring.field.zero
    left = evaluation_quotient_spectrum(total, pts, "a")
    rights = [evaluation_quotient_spectrum(p, pts, f"a_{r}") for r, p in enumerate(parts, 1)]
    lhs = left.union | {zero}
    rhs = frozenset().union(*(r.union for r in rights)) | {zero}
    complete = left.complete and all(r.complete for r in rights)
    report = SpecUnionReport(lhs, rhs, complete)
    if not report.holds:
        raise TheoremViolated("orthogonal-sum spectral union fails")
    certify("spec_J(a) u {0} = union of spec_J(a_r) (rational points)", report.holds)
    return report


# ----------------------------------------------------------------------
@dataclass(frozen=True)
class RingSpectrum:
    """Spectrum of ``a`` in M(n, F[t]).

    ``a - lam e`` is invertible exactly when ``det(a - lam e)`` is a nonzero
    constant polynomial in ``t``.  Either the spectrum is finite
    (``cofinite=False``, listing its points) or its complement is finite
    (``cofinite=True``, listing the complement).
    """

    det_coeffs: tuple  # det(a - lam e) = sum_k det_coeffs[k](lam) t^k
    cofinite: bool
    points: tuple
    complete: bool

    def contains(self, lam):
        lam_in_list = lam in self.points
        return lam_in_list != self.cofinite


def polyring_spectrum(a):
    """Spectrum of a square matrix over F[t] inside the algebra M(n, F[t]).

    ``det(a - lam e)`` is obtained as a polynomial in ``(lam, t)`` by
    evaluating at ``n + 1`` values of ``lam`` and interpolating.
    """
    _square(a)
    ring = a.ring
    if not isinstance(ring, PolyRing):
        raise PreconditionError("expected a matrix over a polynomial ring")
    field, n = ring.field, a.nrows
    nodes = list(islice(field.sample_points(), n + 1))
    if len(nodes) < n + 1:
        raise PreconditionError("field too small to interpolate the determinant")
    eye = Mat.identity(ring, n)
    values = [mat_det(a - eye * ring(lam)) for lam in nodes]
    tdeg = max(v.degree for v in values)
    coeffs = []
    for k in range(max(tdeg, 0) + 1):
        coeffs.append(_interpolate(field, nodes, [v[k] for v in values]))
    for lam, v in zip(nodes, values):
        certify(f"interpolated det(a - lam e) matches at lam = {lam}", all(c(lam) == v[k] for k, c in enumerate(coeffs)))
    const, rest = coeffs[0], [c for c in coeffs[1:] if c]
    if not rest:
        # invertible exactly off the zeros of the constant coefficient
        if not const:
            return RingSpectrum(tuple(coeffs), True, (), True)
        rep = SpectrumReport.of_poly(const)
        return RingSpectrum(tuple(coeffs), False, rep.roots, rep.complete)
    g = rest[0]
    for c in rest[1:]:
        g = poly_gcd(g, c)
    if g.degree == 0:
        return RingSpectrum(tuple(coeffs), True, (), True)
    rep = SpectrumReport.of_poly(g)
    good = tuple(r for r in rep.roots if const(r))
    # irrational common zeros would also leave the spectrum; only rational ones are listed
    return RingSpectrum(tuple(coeffs), True, good, rep.complete)


def _interpolate(field, xs, ys):
    result = Poly(field, (), "z")
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        term = Poly(field, (yi,), "z")
        for j, xj in enumerate(xs):
            if j != i:
                term = term * Poly(field, (-xj, 1), "z") / (xi - xj)
        result = result + term
    return result
