"""Linearization and factorization of monic matrix pencils, and quadratic
polynomials with a matrix-valued variable.

Two quadratic conventions appear:

* scalar variable: ``p(x) = x^2 e - x a + b`` with ``x`` in F; a factorization
  ``(x e - c)(x e - d)`` exists iff ``c^2 - c a + b = 0`` has a solution;
* ring variable: ``p(x) = x^2 + u x + x v + w`` with ``x`` ranging over the
  whole matrix algebra; ``(x - a)(x - b)`` expands to ``x^2 - a x - x b + ab``.
"""

from dataclasses import dataclass
from itertools import product

from .certify import certify
from .errors import CannotFactor, DomainTooLarge, NoFactorization, NotAFactorization, NotMonic, ShapeMismatch, TheoremViolated
from .fields import PrimeField
from .matrix import Mat, kernel_basis, mat_inverse, rank
from .pencil import MatPoly, multiply_linear_factors
from .poly import Poly
from .roots import find_roots


def _require_monic(P):
    if not P.is_monic():
        raise NotMonic("the pencil's leading coefficient must be the identity")


@dataclass(frozen=True)
class CompanionForm:
    X: Mat
    block_size: int
    degree: int

    def block(self, r, s):
        n = self.block_size
        return self.X.block(r * n, (r + 1) * n, s * n, (s + 1) * n)


def _assemble(field, blocks, n):
    rows = []
    for brow in blocks:
        for i in range(n):
            rows.append([x for b in brow for x in b.rows[i]])
    return Mat._raw(field, rows)


def companion_linearize(P):
    """Block companion matrix: identity blocks on the superdiagonal and
    last block row ``(-A_0, ..., -A_{m-1})``.  Certifies
    ``det P(x) = det(x I - X)``.
    """
    _require_monic(P)
    F, n, m = P.field, P.size, P.degree
    zero, eye = Mat.zeros(F, n), Mat.identity(F, n)
    blocks = [[zero] * m for _ in range(m)]
    for r in range(m - 1):
        blocks[r][r + 1] = eye
    for s in range(m):
        blocks[m - 1][s] = -P.coeffs[s]
    X = _assemble(F, blocks, n)
    certify("companion: det P(x) = det(xI - X)", P.det() == MatPoly.linear(X).det())
    return CompanionForm(X, n, m)


def linearization_matrices(P, x):
    """``G(x)`` and ``H(x)`` with ``G(x)(x e_m - X) = diag(P(x), e_{m-1}) H(x)``.

    First block row of ``G``: ``G_{1,j} = sum_{i >= j} x^(i-j) A_i`` (with
    ``A_m = e``); ``-e`` on the block subdiagonal.  ``H`` is unipotent with
    ``-x e`` on the block subdiagonal.
    """
    F, n, m = P.field, P.size, P.degree
    x = F(x)
    zero, eye = Mat.zeros(F, n), Mat.identity(F, n)
    G = [[zero] * m for _ in range(m)]
    H = [[zero] * m for _ in range(m)]
    for j in range(1, m + 1):
        acc = zero
        for i in range(m, j - 1, -1):
            acc = acc * x + P.coeff(i)
        G[0][j - 1] = acc
    for r in range(1, m):
        G[r][r - 1] = -eye
        H[r][r - 1] = eye * (-x)
    for r in range(m):
        H[r][r] = eye
    return _assemble(F, G, n), _assemble(F, H, n)


@dataclass(frozen=True)
class LinearizationCheck:
    holds: bool
    points: tuple


def linearization_identity_check(P, sample_xs, companion=None):
    _require_monic(P)
    F, n, m = P.field, P.size, P.degree
    X = (companion or companion_linearize(P)).X
    big_eye = Mat.identity(F, n * m)
    ok = True
    for x in sample_xs:
        x = F(x)
        G, H = linearization_matrices(P, x)
        D = [[Mat.zeros(F, n)] * m for _ in range(m)]
        D[0][0] = P(x)
        for r in range(1, m):
            D[r][r] = Mat.identity(F, n)
        lhs = G * (big_eye * x - X)
        rhs = _assemble(F, D, n) * H
        inv_ok = mat_inverse(G, f"G({x})") is not None and mat_inverse(H, f"H({x})") is not None
        certify(f"linearization identity at x={x}", lhs == rhs and inv_ok)
        ok = ok and lhs == rhs and inv_ok
    return LinearizationCheck(ok, tuple(F(x) for x in sample_xs))


def euclid_divide(P, d):
    """Right division ``P(x) = Q(x)(x e - d) + rem``.

    ``b_{m-1} = e`` and ``b_{j-1} = A_j + b_j d``; ``rem = A_0 + b_0 d``,
    which equals ``sum_r A_r d^r`` (``d`` substituted on the right).
    """
    _require_monic(P)
    if d.shape != (P.size, P.size):
        raise ShapeMismatch("divisor has the wrong size")
    m = P.degree
    b = [None] * m
    b[m - 1] = Mat.identity(P.field, P.size)
    for j in range(m - 1, 0, -1):
        b[j - 1] = P.coeffs[j] + b[j] * d
    rem = P.coeffs[0] + b[0] * d
    Q = MatPoly(b, P.field, P.size)
    certify("Euclid: P = Q (x e - d) + rem", P == Q * MatPoly.linear(d) + MatPoly([rem]))
    direct = Mat.zeros(P.field, P.size)
    for r, A in enumerate(P.coeffs):
        direct = direct + A * d ** r
    certify("Euclid: rem = sum A_r d^r", rem == direct)
    return Q, rem


@dataclass(frozen=True)
class Factorization:
    """``P(x) = (x I - C_1)(x I - C_2) ... (x I - C_m)``."""

    factors: tuple

    def product(self):
        return multiply_linear_factors(list(self.factors))


def factor_pencil(P):
    """Factor a monic pencil whose determinant has ``m n`` distinct roots in F.

    The rightmost factor is built from eigenvectors of the companion matrix:
    the first blocks of the eigenvectors span ``F^n``, ``n`` of them are
    chosen greedily, and ``C_m`` is the matrix with those eigenvectors and
    eigenvalues.  Dividing by ``x I - C_m`` leaves a monic pencil of degree
    ``m - 1`` with the same property.
    """
    _require_monic(P)
    F, n, m = P.field, P.size, P.degree
    if m == 0:
        return Factorization(())
    if m == 1:
        return Factorization((-P.coeffs[0],))
    det = P.det()
    roots, complete, residual = find_roots(det)
    if len(roots) < m * n:
        raise CannotFactor("RootsNotSplitOrDistinct", residual=_repeated_part(det, roots), roots=roots)
    factors = []
    Q = P
    while Q.degree > 1:
        C = _right_factor(Q, roots)
        Q, rem = euclid_divide(Q, C)
        if not rem.is_zero():
            raise TheoremViolated("nonzero remainder after dividing by an eigenvector-built factor")
        factors.append(C)
        roots = [r for r in roots if not _eigen(C, r)]
    factors.append(-Q.coeffs[0])
    factors.reverse()
    result = Factorization(tuple(factors))
    certify("factorization multiplies back to P", result.product() == P)
    return result


def _eigen(C, lam):
    return bool(kernel_basis(C - Mat.identity(C.ring, C.nrows) * lam))


def _repeated_part(det, roots):
    residual = det.monic()
    for r in roots:
        q, rem = divmod(residual, Poly(det.field, (-r, 1), det.var))
        if not rem:
            residual = q
    return residual


def _right_factor(Q, roots):
    F, n = Q.field, Q.size
    X = companion_linearize(Q).X
    N = X.nrows
    chosen_vecs, chosen_vals = [], []
    for lam in roots:
        ker = kernel_basis(Mat.identity(F, N) * lam - X)
        if len(ker) != 1:
            raise TheoremViolated("eigenspace of a simple eigenvalue is not a line")
        u = ker[0][:n]
        trial = chosen_vecs + [u]
        if rank(Mat.from_columns(F, trial)) == len(trial):
            chosen_vecs.append(u)
            chosen_vals.append(lam)
            if len(chosen_vecs) == n:
                break
    if len(chosen_vecs) < n:
        raise TheoremViolated("eigenvector first blocks do not span F^n")
    U = Mat.from_columns(F, chosen_vecs)
    L = Mat.diag(F, chosen_vals)
    return U * L * mat_inverse(U)


# ----------------------------------------------------------------------
# quadratics with a matrix variable

def _same_shape(*mats):
    shapes = {m.shape for m in mats}
    if len(shapes) != 1 or not mats[0].is_square:
        raise ShapeMismatch("all quadratic coefficients must be square of one size")


def quad_identity_equiv(u, v, w, u2, v2, w2):
    """Whether ``x^2 + u x + x v + w`` and ``x^2 + u2 x + x v2 + w2`` agree for
    every matrix ``x``: iff ``w = w2`` and ``u - u2 = v2 - v`` is central.
    """
    _same_shape(u, v, w, u2, v2, w2)
    c = u - u2
    return w == w2 and c == v2 - v and c.is_scalar()


def quad_eval(u, v, w, x):
    return x * x + u * x + x * v + w


def quad_root_to_factorization(a, b, c):
    """Factor ``x^2 e - x a + b = (x e - c)(x e - d)`` given a root ``c`` of ``c^2 - c a + b = 0``.

    Returns ``(c, d)`` with ``d = a - c``; raises :class:`NoFactorization`
    carrying the residual ``c^2 - c a + b`` otherwise.
    """
    _same_shape(a, b, c)
    residual = c * c - c * a + b
    if not residual.is_zero():
        raise NoFactorization("c is not a root of c^2 - c a + b", residual=residual)
    d = a - c
    eye = Mat.identity(a.ring, a.nrows)
    target = MatPoly([b, -a, eye])
    certify("(x e - c)(x e - d) = x^2 e - x a + b", MatPoly.linear(c) * MatPoly.linear(d) == target)
    return c, d


@dataclass(frozen=True)
class LeftFactorAttempt:
    a: Mat
    b: Mat
    root_residual: Mat  # p(a)


def ring_left_factorization(u, v, w, a):
    """Try ``x^2 + u x + x v + w = (x - a)(x - b)`` for all matrices ``x``.

    Putting ``x = 0`` forces ``a b = w``; with ``a`` invertible this fixes
    ``b = a^-1 w`` and the remaining coefficients are compared.  Raises
    :class:`NoFactorization` when no ``b`` works.
    """
    _same_shape(u, v, w, a)
    ainv = mat_inverse(a)
    if ainv is None:
        raise NoFactorization("left candidate is singular; b is not determined by x = 0")
    b = ainv * w
    if not quad_identity_equiv(u, v, w, -a, -b, a * b):
        du, dv = u + a, -b - v
        if du == dv:
            raise NoFactorization("x = 0 forces b = a^-1 w, but u - u' = v' - v is not central",
                                  residual=du, forced=b)
        raise NoFactorization("x = 0 forces b = a^-1 w, but u - u' and v' - v differ",
                              residual=du - dv, forced=b)
    return LeftFactorAttempt(a, b, quad_eval(u, v, w, a))


def quad_factor_search(u, v, w, limit=81):
    """All ``(a, b)`` with ``x^2 + u x + x v + w = (x - a)(x - b)``, by enumeration.

    Only for prime fields with at most ``limit`` candidates per factor.
    """
    _same_shape(u, v, w)
    F, n = u.ring, u.nrows
    if not isinstance(F, PrimeField):
        raise DomainTooLarge("exhaustive search needs a prime field")
    if F.p ** (n * n) > limit:
        raise DomainTooLarge(f"{F.p}^{n * n} candidates per factor exceeds {limit}")
    elems = F.elements()
    candidates = [Mat._raw(F, [list(t[i * n:(i + 1) * n]) for i in range(n)])
                  for t in product(elems, repeat=n * n)]
    found = []
    for a in candidates:
        for b in candidates:
            if quad_identity_equiv(u, v, w, -a, -b, a * b):
                found.append((a, b))
    return found


def quad_uniqueness_check(f1, f2, u, v, w):
    """Classify two factorizations of the same quadratic.

    Returns ``("Unique", None)`` when they coincide, or
    ``("SwapWithCentralDifference", c)`` when ``f2 = (b, a)`` and
    ``c = a - b`` is central.  Anything else contradicts the uniqueness
    theorem and raises :class:`TheoremViolated`.
    """
    (a, b), (a2, b2) = f1, f2
    for x, y in (f1, f2):
        if not quad_identity_equiv(u, v, w, -x, -y, x * y):
            raise NotAFactorization("pair does not factor the quadratic")
    if a == a2 and b == b2:
        return "Unique", None
    c = a - a2
    if c.is_scalar() and a2 == b and b2 == a:
        certify("swapped factorization has central difference", (a - b).is_scalar())
        return "SwapWithCentralDifference", c
    raise TheoremViolated("two factorizations that are not related by a central swap")
