"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) or through pytest, where
the lines are repeated in the terminal summary.
"""

import itertools
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from algspec.errors import CannotFactor, NoFactorization, NotSpectrallyDisjoint  # noqa: E402
from algspec.factorization import (euclid_divide, factor_pencil, linearization_identity_check,  # noqa: E402
                                   quad_eval, quad_factor_search, quad_identity_equiv, quad_uniqueness_check,
                                   ring_left_factorization)
from algspec.fields import QQ, PrimeField  # noqa: E402
from algspec.matrix import Mat, mat_det, mat_inverse, min_poly  # noqa: E402
from algspec.pencil import (MatPoly, Moebius, moebius_transform_pencil, pencil_spectrum,  # noqa: E402
                            regularize, spectrum_equivariance_check)
from algspec.poly import Poly, PolyRing  # noqa: E402
from algspec.ratfunc import RationalFunctions, rf_sqrt  # noqa: E402
from algspec.resolvent import (ResolventFamily, evaluation_quotient_spectrum, extend_maximal,  # noqa: E402
                               polyring_spectrum, verify_family)
from algspec.spectrum import jordan_ideal_dim, spectrum_of  # noqa: E402
from algspec.sylvester import (Quaternion, commutant_dimension, left_regular, quaternion_criterion,  # noqa: E402
                               right_regular, solve_sylvester, trace_obstruction)

import oracles  # noqa: E402
from conftest import rand_invertible, rand_mat  # noqa: E402
from golden_cases import CASES  # noqa: E402
from regen_golden import GOLDEN, transcript  # noqa: E402

SEED = 20240611
RESULTS = []


def _rng(k):
    return random.Random(SEED + k)


# ----------------------------------------------------------------------
def criterion_1():
    """A 2x2 rational matrix with empty rational spectrum whose fourth power is -4 e."""
    a = Mat(QQ, [[1, 1], [-1, 1]])
    z = Poly.gen(QQ)
    rep = spectrum_of(a)
    rep4 = spectrum_of(a ** 4)
    return (min_poly(a).poly == z ** 2 - 2 * z + 2 and rep.roots == () and not rep.complete
            and a ** 4 == Mat.identity(QQ, 2) * -4 and rep4.roots == (-4,) and rep4.complete)


def criterion_2():
    """Spectra over Q[x] and relative to an evaluation ideal."""
    R = PolyRing(QQ, "x")
    x = R.gen()
    a = Mat(R, [[1, 1], [x, 1 + x]])
    rep = polyring_spectrum(a)
    eye = Mat.identity(R, 2)
    # det(a - lam e) is the constant 1 at lam = 0 and non-constant at sampled lam != 0
    ok = mat_det(a) == 1 and rep.cofinite and rep.points == (0,)
    for lam in [Fraction(k, d) for k in range(-6, 7) for d in (1, 2, 3) if k]:
        ok = ok and mat_det(a - eye * lam).degree >= 1 and rep.contains(lam)
    b = Mat(R, [[0, 1 + x ** 3], [0, 0]])
    ok = ok and mat_det(b) == 0 and polyring_spectrum(b).contains(0)
    quotient = evaluation_quotient_spectrum(Mat(R, [[x ** 2, 1], [0, x ** 2]]), [1, 2])
    return ok and quotient.union == {1, 4}


def criterion_3():
    """ab versus ba over finite fields, and the lambda = 0 failure."""
    rng = _rng(3)
    F5, F3 = PrimeField(5), PrimeField(3)
    for _ in range(200):
        n = rng.choice((2, 3))
        a, b = rand_mat(F5, n, rng), rand_mat(F5, n, rng)
        zero = F5(0)
        if spectrum_of(a * b).root_set | {zero} != spectrum_of(b * a).root_set | {zero}:
            return False
    for _ in range(50):
        a, b = rand_mat(F3, 2, rng), rand_mat(F3, 2, rng)
        for lam in (1, 2):
            for k in (1, 2, 3):
                if jordan_ideal_dim(a * b, lam, k) != jordan_ideal_dim(b * a, lam, k):
                    return False
    a = Mat(QQ, [[0, 1], [0, 0]])
    b = Mat(QQ, [[1, 0], [0, 0]])
    return jordan_ideal_dim(a * b, 0, 1) == 4 and jordan_ideal_dim(b * a, 0, 1) == 2


def criterion_4():
    """Resolvent extensions over Q."""
    rng = _rng(4)
    checked = 0
    for _ in range(50):
        n = rng.randint(1, 3)
        a = rand_mat(QQ, n, rng)
        eye = Mat.identity(QQ, n)
        inv = mat_inverse(a)
        if inv is not None:
            checked += 1
            ext = extend_maximal(0, -inv)
            want = oracles.rational_roots(list(min_poly(a).poly.coeffs))
            if sorted(ext.excluded_roots.roots) != want:
                return False
        anchors = [lam for lam in (7, 11, 13, 17) if mat_inverse(eye * lam - a) is not None][:2]
        e1 = extend_maximal(anchors[0], mat_inverse(eye * anchors[0] - a))
        e2 = extend_maximal(anchors[1], mat_inverse(eye * anchors[1] - a))
        common = e1.domain_points(5, avoid=anchors)
        if len(common) != 5 or any(not e2.in_domain(lam) or e1(lam) != e2(lam) for lam in common):
            return False
        fam = ResolventFamily({lam: e1(lam) for lam in common})
        if not verify_family(fam):
            return False
    return checked >= 25


def _rand_moebius(F, rng):
    while True:
        a, b, c = (F(rng.randrange(F.p)) for _ in range(3))
        if a:
            return Moebius(F, a, b, c, (1 + b * c) / a)


def criterion_5():
    """Moebius action, equivariance and regularization."""
    rng = _rng(5)
    F = PrimeField(7)
    equivariance_points = 0
    for _ in range(100):
        n = rng.randint(0, 3)
        size = rng.randint(1, 2)
        P = MatPoly([rand_mat(F, size, rng) for _ in range(rng.randint(1, n + 1))], F, size)
        g, h = _rand_moebius(F, rng), _rand_moebius(F, rng)
        if moebius_transform_pencil(g, moebius_transform_pencil(h, P, n), n) != moebius_transform_pencil(g * h, P, n):
            return False
        if P.det() and P.degree >= 0:
            rep = spectrum_equivariance_check(g, P, n)
            if not rep.holds:
                return False
            equivariance_points += rep.method == "points"
    regular = 0
    while regular < 50:
        size, deg = rng.randint(1, 3), rng.randint(1, 3)
        coeffs = [rand_mat(QQ, size, rng) for _ in range(deg + 1)]
        # force singular end coefficients so the search has work to do
        coeffs[0] = coeffs[0] * Mat.diag(QQ, [0] + [1] * (size - 1))
        coeffs[-1] = Mat.identity(QQ, size) + Mat.diag(QQ, [-1] + [0] * (size - 1))
        if size == 1:
            coeffs[-1] = Mat(QQ, [[0]])
            coeffs.append(Mat(QQ, [[1]]))
        P = MatPoly(coeffs)
        if not P.det():
            continue
        regular += 1
        reg = regularize(P)
        Q, m = reg.pencil, P.degree
        if reg.tried > m * P.size + 2:
            return False
        if mat_inverse(Q.coeff(0)) is None or mat_inverse(Q.coeff(m)) is None:
            return False
    return equivariance_points > 10


def criterion_6():
    """Factorization of monic pencils, Euclid division and linearization."""
    rng = _rng(6)
    built = 0
    while built < 50:
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        values = rng.sample(range(-20, 21), m * n)
        factors = []
        for i in range(m):
            S = rand_invertible(QQ, n, rng)
            factors.append(S * Mat.diag(QQ, values[i * n:(i + 1) * n]) * mat_inverse(S))
        P = MatPoly([Mat.identity(QQ, n)])
        for C in factors:
            P = P * MatPoly.linear(C)
        if factor_pencil(P).product() != P:
            return False
        built += 1
    J = Mat(QQ, [[0, 1], [0, 0]])
    try:
        factor_pencil(MatPoly([-J, Mat.zeros(QQ, 2), Mat.identity(QQ, 2)]))
        return False
    except CannotFactor:
        pass
    for _ in range(200):
        n, m = rng.randint(1, 3), rng.randint(1, 4)
        P = MatPoly([rand_mat(QQ, n, rng) for _ in range(m)] + [Mat.identity(QQ, n)])
        d = rand_mat(QQ, n, rng)
        Q, rem = euclid_divide(P, d)
        if P - Q * MatPoly.linear(d) - MatPoly([rem], QQ, n) != MatPoly([], QQ, n):
            return False
    for m in range(1, 5):
        P = MatPoly([rand_mat(QQ, 2, rng) for _ in range(m)] + [Mat.identity(QQ, 2)])
        if not linearization_identity_check(P, [0, 1, -1]).holds:
            return False
    return True


def criterion_7():
    """Quadratics with a matrix unknown."""
    rng = _rng(7)
    F = PrimeField(2)
    mats = [Mat(F, [list(b[:2]), list(b[2:])]) for b in itertools.product((0, 1), repeat=4)]
    for _ in range(400):
        u, v, w, u2, v2, w2 = (rng.choice(mats) for _ in range(6))
        if rng.random() < 0.5:
            c = rng.choice(mats[:1] + [Mat.identity(F, 2)])
            u2, v2, w2 = u + c, v - c, w
        agree = all(quad_eval(u, v, w, x) == quad_eval(u2, v2, w2, x) for x in mats)
        if quad_identity_equiv(u, v, w, u2, v2, w2) != agree:
            return False
    eye = Mat.identity(QQ, 2)
    u, v, w = -Mat(QQ, [[1, 0], [0, 0]]), -Mat(QQ, [[0, 0], [0, 1]]), eye * -2
    if not quad_eval(u, v, w, eye * 2).is_zero():
        return False
    try:
        ring_left_factorization(u, v, w, eye * 2)
        return False
    except NoFactorization as exc:
        if exc.forced != -eye:
            return False
    swaps = 0
    for _ in range(20):
        a, b = rng.choice(mats), rng.choice(mats)
        if rng.random() < 0.5:
            b = a + rng.choice([Mat.identity(F, 2), Mat.zeros(F, 2)])
        found = quad_factor_search(-a, -b, a * b, limit=16)
        for f1, f2 in itertools.combinations(found, 2):
            verdict, c = quad_uniqueness_check(f1, f2, -a, -b, a * b)
            if verdict == "SwapWithCentralDifference":
                swaps += 1
                if not (f1[0] - f1[1]).is_scalar() or f2 != (f1[1], f1[0]):
                    return False
    return swaps > 0


def criterion_8():
    """Sylvester equations, trace constraints, commutants and quaternions."""
    rng = _rng(8)
    F = PrimeField(5)
    disjoint = 0
    for _ in range(100):
        a, b, c = rand_mat(F, 2, rng), rand_mat(F, 2, rng), rand_mat(F, 2, rng)
        try:
            x = solve_sylvester(a, b, c)
        except NotSpectrallyDisjoint:
            continue
        disjoint += 1
        if oracles.sylvester_bruteforce(a, b, c, 5) != [[[int(v) for v in r] for r in x.rows]]:
            return False
    for _ in range(100):
        n = rng.randint(1, 4)
        a, x = rand_mat(QQ, n, rng), rand_mat(QQ, n, rng)
        if trace_obstruction(a, a * x - x * a).obstructed:
            return False
    if commutant_dimension(Mat.identity(QQ, 3))[0] != 0:
        return False
    for n in (2, 3, 4):
        jordan = Mat(QQ, [[1 if j == i + 1 else (2 if i == j else 0) for j in range(n)] for i in range(n)])
        if commutant_dimension(jordan)[0] != n * n - n:
            return False
    grid = [Quaternion(*v) for v in itertools.product((-1, 0, 1), repeat=4)]
    pairs = rng.sample(list(itertools.product(grid, grid)), 500)
    for qa, qb in pairs:
        singular = mat_inverse(left_regular(qa) - right_regular(qb)) is None
        if quaternion_criterion(qa, qb) == singular:
            return False
    return disjoint >= 30


def criterion_9():
    """Square roots of squares in Q(t); odd orders rejected."""
    rng = _rng(9)
    K = RationalFunctions(QQ)
    t = K.gen()

    def rand_poly(deg):
        return sum((K(Fraction(rng.randint(-5, 5), rng.randint(1, 3))) * t ** k for k in range(deg + 1)), K.zero)

    count = 0
    while count < 100:
        num, den = rand_poly(rng.randint(0, 6)), rand_poly(rng.randint(0, 6))
        if not num or not den:
            continue
        g = num / den
        count += 1
        r = rf_sqrt(g * g)
        if r is None or r * r != g * g or r not in (g, -g):
            return False
        r0 = K(rng.randint(-4, 4))
        if rf_sqrt(g * g * (t - r0)) is not None or rf_sqrt(g * g / (t - r0) ** 3) is not None:
            return False
    return True


def criterion_10():
    """Golden CLI transcripts for the worked examples."""
    for name, doc, args, expect in CASES:
        got = transcript(name, doc, args)
        if got != (GOLDEN / f"{name}.out").read_text():
            return False
        if any(line not in got.splitlines() for line in expect):
            return False
    return True


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _report(number, fn):
    ok = bool(fn())
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {fn.__doc__.strip()}"
    print(line)
    RESULTS.append(line)
    return ok


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number):
    assert _report(number, CRITERIA[number - 1])


if __name__ == "__main__":
    results = [_report(i, fn) for i, fn in enumerate(CRITERIA, start=1)]
    sys.exit(0 if all(results) else 1)
