from fractions import Fraction

import pytest

from algspec.errors import EmptyFamily, EmptySampleSet, ProductsNotInIdeal
from algspec.fields import QQ
from algspec.matrix import Mat, mat_inverse
from algspec.poly import PolyRing
from algspec.resolvent import (ResolventFamily, associated_element, evaluation_quotient_spectrum, extend_maximal,
                               in_evaluation_ideal, j_spectrum_perturbation_check, polyring_spectrum,
                               spec_union_orthogonal, verify_family)

from conftest import rand_mat

R = PolyRing(QQ, "x")
x = R.gen()
D = Mat.diag(QQ, [1, 2])
J = Mat(QQ, [[0, 1], [0, 0]])
EYE = Mat.identity(QQ, 2)


def test_true_resolvent_family_is_valid():
    fam = ResolventFamily.of_matrix(D, [0, 3, 5])
    assert verify_family(fam)


def test_perturbed_family_reports_pair():
    fam = ResolventFamily.of_matrix(D, [0, 3, 5])
    samples = dict(fam.samples)
    r = samples[QQ(3)]
    samples[QQ(3)] = r + Mat(QQ, [[1, 0], [0, 0]])
    check = verify_family(samples)
    assert not check and QQ(3) in check.violating_pair


def test_empty_family():
    with pytest.raises(EmptyFamily):
        ResolventFamily({})


def test_extend_diagonal():
    rep = extend_maximal(0, -mat_inverse(D))
    assert rep.excluded_roots.root_set == {1, 2} and rep.excluded_roots.complete
    assert rep(3) == mat_inverse(EYE * 3 - D)
    assert not rep.in_domain(1) and rep.in_domain(4)


def test_extend_nilpotent_has_empty_spectrum():
    rep = extend_maximal(0, J)
    assert rep.excluded_poly == 1
    assert rep.excluded_roots.roots == () and rep.excluded_roots.complete


def test_associated_element():
    assert associated_element(0, -Mat.diag(QQ, [1, Fraction(1, 2)])) == D
    assert associated_element(1, mat_inverse(EYE - J)) == J
    assert associated_element(0, J) is None


def test_extension_agrees_with_true_resolvent(rng):
    for _ in range(20):
        a = rand_mat(QQ, 3, rng)
        fam = ResolventFamily.of_matrix(a, [lam for lam in (7, 11, 13)])
        alpha, r = next(iter(fam.samples.items()))
        rep = extend_maximal(alpha, r)
        for lam, s in fam.items():
            assert rep(lam) == s


def test_evaluation_quotient_spectrum():
    a = Mat(R, [[x ** 2, 1], [0, x ** 2]])
    assert evaluation_quotient_spectrum(a, [1, 2]).union == {1, 4}
    b = Mat(R, [[1, 1], [x, 1 + x]])
    assert evaluation_quotient_spectrum(b, [0]).union == {1}
    with pytest.raises(EmptySampleSet):
        evaluation_quotient_spectrum(a, [])


def test_in_evaluation_ideal():
    a = Mat(R, [[x * (x - 1), 0], [0, x]])
    assert in_evaluation_ideal(a, [0])
    assert not in_evaluation_ideal(a, [0, 1])


def test_perturbation_in_ideal_keeps_spectrum():
    s0 = 2
    r1 = Mat(R, [[x, 1], [0, 3]])
    r2 = r1 + Mat(R, [[x - s0, 0], [0, (x - s0) * x]])
    check = j_spectrum_perturbation_check(r1, r2, 0, [s0])
    assert check.in_ideal and check.spectra_equal and check
    far = j_spectrum_perturbation_check(r1, r2, 0, [s0, 5])
    assert not far.in_ideal


def test_spec_union_block_diagonal():
    a1 = Mat(R, [[3, 0], [0, 0]])
    a2 = Mat(R, [[0, 0], [0, 5]])
    rep = spec_union_orthogonal([a1, a2], [0, 1])
    assert rep.holds and rep.left == {0, 3, 5}


def test_spec_union_requires_orthogonality():
    with pytest.raises(ProductsNotInIdeal):
        spec_union_orthogonal([Mat(R, [[1, 1], [0, 0]]), Mat(R, [[0, 0], [1, 1]])], [0])


def test_polyring_spectrum_examples():
    rep = polyring_spectrum(Mat(R, [[1, 1], [x, 1 + x]]))
    assert rep.cofinite and rep.points == (0,)
    assert not rep.contains(0) and rep.contains(1) and rep.contains(Fraction(7, 3))
    b = polyring_spectrum(Mat(R, [[0, 1 + x ** 3], [0, 0]]))
    assert b.contains(0)


def test_polyring_spectrum_constant_matrix():
    rep = polyring_spectrum(Mat(R, [[1, 0], [0, 2]]))
    assert not rep.cofinite and set(rep.points) == {1, 2}
