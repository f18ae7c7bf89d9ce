"""Gauge algebra data: structure constants, form, irreps, Casimir."""

import pytest

from knwznw import Rat
from knwznw.errors import DomainError
from knwznw.exactlinalg import commutator, is_zero_matrix, mat_mul
from knwznw.finite_lie import (casimir_eigenvalue, casimir_omega,
                               casimir_pairs, diagonal_action, finite_irrep,
                               make_algebra, omega_matrix, tensor_dim)


@pytest.fixture(scope="module")
def sl2():
    return make_algebra("sl2")


@pytest.fixture(scope="module")
def ab():
    return make_algebra("abelian1")


def test_kinds(sl2, ab):
    assert sl2.dim == 3 and sl2.k_dual == Rat(2)
    assert ab.dim == 1 and ab.k_dual == Rat(0)
    with pytest.raises(DomainError):
        make_algebra("e8")


def test_form_normalization(sl2):
    E, H, F = 0, 1, 2
    assert sl2.form[E][F] == Rat(1)
    assert sl2.form[H][H] == Rat(2)
    assert sl2.form[E][E] == Rat(0)
    # trace-form oracle on the defining 2x2 matrices
    v1 = finite_irrep(sl2, 1)
    for i in range(3):
        for j in range(3):
            tr = sum((mat_mul(v1.matrices[i], v1.matrices[j])[k][k]
                      for k in range(2)), Rat(0))
            assert tr == sl2.form[i][j]


def test_dual_basis_completeness(sl2):
    basis = [[Rat(1) if i == j else Rat(0) for j in range(3)]
             for i in range(3)]
    for x in basis:
        back = [Rat(0)] * 3
        for i, dual in casimir_pairs(sl2):
            c = sl2.form_vectors(x, dual)
            back[i] = back[i] + c
        assert back == x


def test_irrep_dimensions(sl2):
    assert finite_irrep(sl2, 0).dim == 1
    assert finite_irrep(sl2, 1).dim == 2
    assert finite_irrep(sl2, 2).dim == 3
    with pytest.raises(DomainError):
        finite_irrep(sl2, -1)


def test_irrep_brackets_exact(sl2):
    for lam in (0, 1, 2, 3):
        mod = finite_irrep(sl2, lam)
        E, H, F = (list(map(list, m)) for m in mod.matrices)
        hh = commutator(E, F)
        for r in range(mod.dim):
            for s in range(mod.dim):
                assert hh[r][s] == H[r][s]


def test_casimir_eigenvalues(sl2, ab):
    # C = e f + f e + h^2/2 acts by m(m+2)/2 on the (m+1)-dim module
    assert casimir_eigenvalue(sl2, 1) == Rat(3, 2)
    assert casimir_eigenvalue(sl2, 2) == Rat(4)
    assert casimir_eigenvalue(ab, Rat(3)) == Rat(9)
    for lam in (1, 2, 3):
        mod = finite_irrep(sl2, lam)
        E, H, F = (list(map(list, m)) for m in mod.matrices)
        cas = mat_mul(E, F)
        fe = mat_mul(F, E)
        hh = mat_mul(H, H)
        for r in range(mod.dim):
            for s in range(mod.dim):
                v = cas[r][s] + fe[r][s] + hh[r][s] * Rat(1, 2)
                want = casimir_eigenvalue(sl2, lam) if r == s else Rat(0)
                assert v == want


def test_omega_abelian(ab):
    m = finite_irrep(ab, Rat(2))
    om = omega_matrix(ab, [m, m], 0, 1)
    assert om == [[Rat(4)]]


def test_omega_eigenvalues(sl2):
    v1 = finite_irrep(sl2, 1)
    om = omega_matrix(sl2, [v1, v1], 0, 1)
    # triplet highest vector v0 x v0 (column 0): eigenvalue 1/2
    col0 = [om[r][0] for r in range(4)]
    assert col0 == [Rat(1, 2), Rat(0), Rat(0), Rat(0)]
    # singlet v0 x v1 - v1 x v0: eigenvalue -3/2
    s_img = [om[r][1] - om[r][2] for r in range(4)]
    assert s_img == [Rat(0), Rat(-3, 2), Rat(3, 2), Rat(0)]
    # 2 x 2 = 3 + 1: trace = 3*(1/2) + (-3/2) = 0
    assert sum((om[i][i] for i in range(4)), Rat(0)) == Rat(0)


def test_omega_invariance(sl2):
    v1 = finite_irrep(sl2, 1)
    v2 = finite_irrep(sl2, 2)
    mods = [v1, v2]
    om = omega_matrix(sl2, mods, 0, 1)
    for i in range(3):
        xv = [Rat(0)] * 3
        xv[i] = Rat(1)
        D = diagonal_action(sl2, mods, xv)
        assert is_zero_matrix(commutator(om, D))


def test_tensor_dim(sl2):
    mods = [finite_irrep(sl2, w) for w in (1, 2, 0)]
    assert tensor_dim(mods) == 6


def test_casimir_omega_object(sl2, ab):
    om = casimir_omega(sl2)
    v1 = finite_irrep(sl2, 1)
    assert om.matrix([v1, v1], 0, 1) == omega_matrix(sl2, [v1, v1], 0, 1)
    assert len(om.pairs) == 3
    omab = casimir_omega(ab)
    m = finite_irrep(ab, Rat(1))
    assert omab.matrix([m, m], 0, 1) == [[Rat(1)]]
