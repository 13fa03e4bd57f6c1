from fractions import Fraction

import pytest

from algspec.errors import DegreeExceedsWeight, InvariantViolation, NonRegular
from algspec.fields import QQ
from algspec.matrix import Mat, mat_det, mat_inverse
from algspec.pencil import (INFINITY, MatPoly, Moebius, homogenize, moebius_act_point, moebius_transform_pencil,
                            pencil_spectrum, regularize, spectrum_equivariance_check)

from conftest import rand_mat

EYE = Mat.identity(QQ, 2)
E11 = Mat(QQ, [[1, 0], [0, 0]])
J = Mat(QQ, [[0, 1], [0, 0]])


def rand_moebius(F, rng):
    while True:
        a, b, c = (F(rng.randrange(F.p)) for _ in range(3))
        if a:
            return Moebius(F, a, b, c, (1 + b * c) / a)


def rand_pencil(F, n, deg, rng):
    return MatPoly([rand_mat(F, n, rng) for _ in range(deg + 1)], F, n)


def test_spectrum_with_infinity():
    P = MatPoly([EYE, E11])
    sp = pencil_spectrum(P)
    assert sp.finite_part.roots == (-1,) and sp.contains_infinity
    assert sp.points() == {-1, INFINITY}


def test_unimodular_pencil_has_empty_spectrum():
    # e + x N with N nilpotent: det = 1, but the singular N puts oo in the spectrum
    P = MatPoly([EYE, J])
    assert P.det() == 1
    sp = pencil_spectrum(P)
    assert sp.finite_part.roots == () and sp.contains_infinity


def test_nonregular_pencil():
    with pytest.raises(NonRegular):
        pencil_spectrum(MatPoly([E11, E11]))


def test_moebius_points():
    rev = Moebius.reversal(QQ)
    assert moebius_act_point(rev, 2) == Fraction(-1, 2)
    assert rev(0) is INFINITY and rev(INFINITY) == 0
    with pytest.raises(InvariantViolation):
        Moebius(QQ, 1, 1, 1, 1)


def test_reversal_formula(rng):
    rev = Moebius.reversal(QQ)
    for _ in range(10):
        P = MatPoly([rand_mat(QQ, 2, rng) for _ in range(3)])
        n = P.degree
        Q = moebius_transform_pencil(rev, P)
        for x in (1, 2, -1, Fraction(1, 3), 5):
            assert Q(x) == P(Fraction(-1, x)) * Fraction(x) ** n


def test_shift_moves_spectrum():
    P = MatPoly.linear(Mat.diag(QQ, [1, 2]))
    g = Moebius(QQ, 1, 1, 0, 1)
    Q = moebius_transform_pencil(g, P)
    assert pencil_spectrum(Q).finite_part.root_set == {2, 3}


def test_reversal_swaps_zero_and_infinity():
    rep = spectrum_equivariance_check(Moebius.reversal(QQ), MatPoly([EYE, E11]))
    assert rep.holds and rep.transformed == {1, 0}


def test_weight_must_bound_degree():
    with pytest.raises(DegreeExceedsWeight):
        moebius_transform_pencil(Moebius.reversal(QQ), MatPoly([EYE, E11, E11]), weight=1)


def test_transform_is_an_action(rng, gf):
    F = gf[7]
    for _ in range(20):
        g, h = rand_moebius(F, rng), rand_moebius(F, rng)
        P = rand_pencil(F, 2, 3, rng)
        lhs = moebius_transform_pencil(g, moebius_transform_pencil(h, P, 3), 3)
        assert lhs == moebius_transform_pencil(g * h, P, 3)


def test_identity_acts_trivially(rng, gf):
    P = rand_pencil(gf[5], 2, 2, rng)
    assert moebius_transform_pencil(Moebius.identity(gf[5]), P, 2) == P


def test_homogenize_scaling(rng):
    P = MatPoly([rand_mat(QQ, 2, rng) for _ in range(3)])
    hp = homogenize(P)
    for x0 in (0, 1, Fraction(3, 2)):
        assert hp(2 * x0, 2) == hp(x0, 1) * 4
        assert hp(x0, 1) == P(x0)


def test_regularize_nilpotent_shift():
    P = MatPoly.linear(J) * MatPoly.linear(J)
    reg = regularize(P)
    Q = reg.pencil
    assert mat_inverse(Q.coeff(0)) is not None and mat_inverse(Q.coeff(P.degree)) is not None
    assert reg.tried <= P.degree * P.size + 2


def test_regularize_explicit_points():
    reg = regularize(MatPoly.linear(J), search_points=[0, 1, 2])
    assert reg.points == (1, 2)


def test_det_of_pencil():
    P = MatPoly.linear(Mat.diag(QQ, [1, 2]))
    assert str(P.det()) == "x^2 - 3*x + 2"
    assert mat_det(P(5)) == 12
