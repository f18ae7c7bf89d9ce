"""Induced modules: slices, exact action, truncation, coinvariants."""

import random

import pytest

from knwznw import Rat
from knwznw._kernel import RAT0, RAT1
from knwznw.affine import AffineElement, affine_bracket, block_algebra_basis
from knwznw.basis import Config
from knwznw.errors import DomainError, TruncationOverflow
from knwznw.finite_lie import factor_op, make_algebra
from knwznw.modules import (ModuleSpec, ModuleVector, PBWMonomial,
                            degree_zero_coinvariant_dimension,
                            induce_module)

E, H, F = 0, 1, 2


@pytest.fixture(scope="module")
def sl2():
    return make_algebra("sl2")


@pytest.fixture(scope="module")
def ab():
    return make_algebra("abelian1")


@pytest.fixture(scope="module")
def cfg1():
    return Config(["0"])


@pytest.fixture(scope="module")
def cfg2():
    return Config(["0", "1"])


@pytest.fixture(scope="module")
def weyl11(sl2, cfg2):
    return induce_module(sl2, cfg2, ModuleSpec("weyl", (1, 1), Rat(1), 4))


@pytest.fixture(scope="module")
def fock(ab, cfg1):
    return induce_module(ab, cfg1, ModuleSpec("fock", (RAT0,), Rat(1), 6))


def test_spec_validation(ab, cfg1):
    with pytest.raises(DomainError):
        ModuleSpec("coherent", (1,), Rat(1), 3)
    with pytest.raises(DomainError):
        ModuleSpec("verma", (Rat(1),), Rat(1), 3)  # width required
    with pytest.raises(DomainError):
        induce_module(make_algebra("sl2"), cfg1,
                      ModuleSpec("fock", (RAT0,), Rat(1), 2))


def test_slice_dimensions_weyl(sl2, cfg1):
    m = induce_module(sl2, cfg1, ModuleSpec("weyl", (1,), Rat(1), 4))
    assert m.slice_dimension(0) == 2
    # one negative key per (g-index), three colors: colored partitions
    assert m.slice_dimension(-1) == 3 * 2
    assert m.slice_dimension(-2) == (3 + 6) * 2


def test_slice_dimensions_fock(fock):
    # partitions of d (single color)
    assert [fock.slice_dimension(-d) for d in range(7)] == \
        [1, 1, 2, 3, 5, 7, 11]


def test_slice_dimensions_tensor(weyl11):
    assert weyl11.slice_dimension(0) == 4
    assert weyl11.slice_dimension(-1) == 6 * 4


def test_verma_slices(sl2, cfg1):
    m = induce_module(sl2, cfg1, ModuleSpec("verma", (Rat(1),), Rat(1), 2, 3))
    # degree-0 strings: powers of f(0,1) up to the width bound
    assert m.slice_dimension(0) == 4
    deg0 = [mono.creation for mono in m.slice_basis(0)]
    assert () in deg0 and ((0, 1, F),) in deg0
    assert ((0, 1, F), (0, 1, F), (0, 1, F)) in deg0
    # degree -1 strings: one negative key plus degree-0 tails
    assert all(mono.degree == -1 for mono in m.slice_basis(-1))
    assert m.slice_dimension(-1) == 3 * 3  # 3 negative keys x <=2 zero tails


def test_level_action(weyl11, fock):
    t = AffineElement.center()
    v = ModuleVector.monomial(weyl11.slice_basis(-1)[0])
    assert weyl11.act(t, v) == v
    f2 = induce_module(fock.alg, fock.cfg,
                       ModuleSpec("fock", (RAT0,), Rat(5, 2), 2))
    assert f2.act(t, f2.vacuum_vector()) == \
        f2.vacuum_vector().scale(Rat(5, 2))


def test_annihilation(weyl11):
    v = weyl11.vacuum_vector(0)
    for n in (1, 2, 3):
        for p in (1, 2):
            for i in range(3):
                assert weyl11.act(AffineElement.loop_term(i, n, p), v) \
                    .is_zero()


def test_classical_associativity_oracle(sl2, cfg1):
    # (e ot z^-1)(f ot 1) vac = [e ot z^-1, f ot 1] vac + (f ot 1)(e ot z^-1) vac
    m = induce_module(sl2, cfg1, ModuleSpec("weyl", (1,), Rat(1), 3))
    v = m.vacuum_vector(0)
    a = AffineElement.loop_term(E, -1, 1)
    b = AffineElement.loop_term(F, 0, 1)
    lhs = m.act(a, m.act(b, v))
    br = affine_bracket(cfg1, sl2, a, b)
    rhs = m.act(br, v) + m.act(b, m.act(a, v))
    assert lhs == rhs


def test_representation_property_weyl(weyl11, cfg2, sl2):
    rng = random.Random(31)
    for _ in range(25):
        def rnd():
            e = AffineElement()
            for _j in range(2):
                e = e + AffineElement.loop_term(
                    rng.randrange(3), rng.randint(-1, 1),
                    rng.randint(1, 2), Rat(rng.randint(-2, 2)))
            return e
        a, b = rnd(), rnd()
        v = ModuleVector.monomial(rng.choice(weyl11.slice_basis(-1)))
        br = affine_bracket(cfg2, sl2, a, b)
        lhs = ModuleVector(weyl11._act_affine_raw(br, v.terms))
        r1 = ModuleVector(weyl11._act_affine_raw(
            a, weyl11._act_affine_raw(b, v.terms)))
        r2 = ModuleVector(weyl11._act_affine_raw(
            b, weyl11._act_affine_raw(a, v.terms)))
        assert lhs == r1 - r2


def test_representation_property_fock(fock, cfg1, ab):
    rng = random.Random(32)
    for _ in range(25):
        def rnd():
            e = AffineElement()
            for _j in range(2):
                e = e + AffineElement.loop_term(
                    0, rng.randint(-2, 2), 1, Rat(rng.randint(-2, 2)))
            return e
        a, b = rnd(), rnd()
        v = ModuleVector.monomial(rng.choice(fock.slice_basis(-2)))
        br = affine_bracket(cfg1, ab, a, b)
        lhs = ModuleVector(fock._act_affine_raw(br, v.terms))
        r1 = ModuleVector(fock._act_affine_raw(
            a, fock._act_affine_raw(b, v.terms)))
        r2 = ModuleVector(fock._act_affine_raw(
            b, fock._act_affine_raw(a, v.terms)))
        assert lhs == r1 - r2


def test_admissibility(weyl11):
    for d in (0, -1, -2):
        for mono in weyl11.slice_basis(d):
            n0 = -d + 1
            for n in range(n0, n0 + 4):
                for p in (1, 2):
                    for i in range(3):
                        assert not weyl11._act_gen((n, p, i), mono)


def test_degree_zero_matches_finite_module(weyl11):
    basis0 = weyl11.slice_basis(0)
    index = {m: i for i, m in enumerate(basis0)}
    for p in (1, 2):
        for i in range(3):
            got = [[RAT0] * 4 for _ in range(4)]
            for col, mono in enumerate(basis0):
                for m2, c in weyl11._act_gen((0, p, i), mono).items():
                    got[index[m2]][col] = c
            want = factor_op(weyl11.factors, p - 1,
                             weyl11.factors[p - 1].matrices[i])
            assert got == [list(r) for r in want]


def test_truncation_overflow_is_loud(weyl11):
    deep = weyl11.slice_basis(-4)[0]
    a = AffineElement.loop_term(E, -1, 1)
    with pytest.raises(TruncationOverflow) as ei:
        weyl11.act(a, ModuleVector.monomial(deep))
    assert ei.value.lost_degrees == (-5,)


def test_width_overflow_is_loud(sl2, cfg1):
    m = induce_module(sl2, cfg1, ModuleSpec("verma", (Rat(1),), Rat(1), 2, 2))
    mono = PBWMonomial(((0, 1, F), (0, 1, F)), 0)
    with pytest.raises(TruncationOverflow) as ei:
        m.act(AffineElement.loop_term(F, 0, 1), ModuleVector.monomial(mono))
    assert ei.value.lost_widths == (3,)


def test_reduce_degree_zero_unchanged(weyl11):
    v = weyl11.vacuum_vector(2)
    red, status = weyl11.coinvariant_reduce(v, 2)
    assert status == "reduced-to-degree-0" and red == v


def test_reduce_single_mode_fock(fock):
    # u ot (z - 0)^{-1} is itself a block generator, so u(-1,1) vac dies
    v = ModuleVector(fock._act_affine_raw(
        AffineElement.loop_term(0, -1, 1), fock.vacuum_vector().terms))
    red, status = fock.coinvariant_reduce(v, 2)
    assert status == "reduced-to-degree-0" and red.is_zero()


def test_reduce_diagonal_action(weyl11, cfg2, sl2):
    # x ot 1 = sum_p x ot A_{0,p} acts by the diagonal tensor action and
    # is already a degree-0 representative (its class is zero)
    from knwznw.basis import Section, expand_in_basis
    from knwznw.ratfield import RationalFunction as RF
    one = expand_in_basis(cfg2, Section(0, RF.one()))
    xa = AffineElement({(E, n, p): c for (n, p), c in one.terms.items()})
    v = weyl11.vacuum_vector(3)
    img = weyl11.act(xa, v)
    red, status = weyl11.coinvariant_reduce(img, 4)
    assert status == "reduced-to-degree-0"
    assert red == img  # degree-0 representative is already reduced
    # and it matches the diagonal finite-dimensional action
    D = factor_op(weyl11.factors, 0, weyl11.factors[0].matrices[E])
    D2 = factor_op(weyl11.factors, 1, weyl11.factors[1].matrices[E])
    want = {}
    for m2, c in img.terms.items():
        want[m2.vacuum] = c
    col = 3
    for r in range(4):
        expect = D[r][col] + D2[r][col]
        assert want.get(r, RAT0) == expect


def test_reduce_is_projection(weyl11, cfg2, sl2):
    gens = block_algebra_basis(cfg2, sl2, 2)
    for u in gens[::2]:
        for mono in weyl11.slice_basis(-1)[:4]:
            img = ModuleVector(weyl11._act_affine_raw(
                u.as_affine(), {mono: RAT1}))
            red, status = weyl11.coinvariant_reduce(img, 4)
            assert status == "reduced-to-degree-0"
            again, st2 = weyl11.coinvariant_reduce(img - red, 4)
            assert st2 == "reduced-to-degree-0" and again.is_zero()


def test_reduce_budget_exhaustion_is_status(fock):
    deep = ModuleVector.monomial(fock.slice_basis(-3)[0])
    red, status = fock.coinvariant_reduce(deep, 2, budget=0)
    assert status == "budget-exhausted"


def test_coinvariant_dimension_stabilizes(sl2):
    cfg3 = Config(["0", "1", "-1"])
    dims = {}
    for d in (2, 3, 4):
        m = induce_module(sl2, cfg3, ModuleSpec("weyl", (1, 1, 1), Rat(1), d))
        dims[d] = degree_zero_coinvariant_dimension(m)
    assert dims[3] == dims[4]
    # a case with a one-dimensional block space at this truncation
    m = induce_module(sl2, cfg3, ModuleSpec("weyl", (1, 1, 0), Rat(1), 3))
    assert degree_zero_coinvariant_dimension(m) == 1
