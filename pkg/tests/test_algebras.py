"""Function/vector-field algebra structure, cocycles, decompositions."""

import random

import pytest

from knwznw import Rat
from knwznw.algebras import (ProjectiveConnection,
                             R_ZERO, coboundary_compare, cocycle_chi,
                             cocycle_gamma, grading_report, lie_derivative,
                             multiply, triangular_decompose, vf_bracket)
from knwznw.basis import Config, GradedElement, KNIndex, kn_basis_element
from knwznw.errors import DomainError
from knwznw.ratfield import INFINITY, Poly, RationalFunction as RF

z = Poly.x()


@pytest.fixture(scope="module")
def cfg1():
    return Config(["0"])


@pytest.fixture(scope="module")
def cfg2():
    return Config(["0", "1"])


def U(lam, n, p=1):
    return GradedElement.unit(lam, n, p)


def test_multiply_unit(cfg2):
    f = GradedElement(0, {(1, 1): Rat(2), (-1, 2): Rat(3)})
    one = GradedElement(0, {(0, 1): Rat(1), (0, 2): Rat(1)})
    assert multiply(cfg2, one, f) == f


def test_multiply_single_point_monomials(cfg1):
    for n in range(-3, 4):
        for m in range(-3, 4):
            assert multiply(cfg1, U(0, n), U(0, m)) == U(0, n + m)


def test_multiply_example_degree_zero_component(cfg2):
    out = multiply(cfg2, U(0, 0, 1), U(0, 0, 2))
    assert out.coefficient(0, 1) == Rat(0)
    assert out.coefficient(0, 2) == Rat(0)
    assert min(out.support_degrees()) >= 0
    # oracle: expand the raw product (1-z) z directly
    from knwznw.basis import Section, expand_in_basis
    assert out == expand_in_basis(cfg2, Section(0, RF((1 - z) * z)))


def test_virasoro_bracket(cfg1):
    for n in range(-6, 7):
        for m in range(-6, 7):
            out = vf_bracket(cfg1, U(-1, n), U(-1, m))
            want = GradedElement(-1, {(n + m, 1): Rat(m - n)}) \
                if m != n else GradedElement(-1, {})
            assert out == want


def test_bracket_antisymmetry(cfg2):
    e = GradedElement(-1, {(1, 1): Rat(2), (-1, 2): Rat(5)})
    assert vf_bracket(cfg2, e, e).is_zero()


def test_bracket_against_direct_computation(cfg2):
    from knwznw.basis import Section, expand_in_basis
    e = kn_basis_element(cfg2, KNIndex(-1, 0, 1))
    f = kn_basis_element(cfg2, KNIndex(-1, 0, 2))
    direct = e.value * f.value.deriv() - f.value * e.value.deriv()
    assert vf_bracket(cfg2, U(-1, 0, 1), U(-1, 0, 2)) == \
        expand_in_basis(cfg2, Section(-1, direct))


def test_jacobi(cfg2):
    units = [U(-1, n, p) for n in range(-2, 3) for p in (1, 2)]
    for a in units:
        for b in units:
            ab = vf_bracket(cfg2, a, b)
            for c in units:
                s = vf_bracket(cfg2, ab, c) \
                    + vf_bracket(cfg2, vf_bracket(cfg2, b, c), a) \
                    + vf_bracket(cfg2, vf_bracket(cfg2, c, a), b)
                assert s.is_zero()


def test_lie_derivative_monomials(cfg1):
    # e_0 = z d/dz on the raw monomial z^m dz^lam gives (m + lam) z^m dz^lam
    from knwznw.basis import Section, expand_in_basis
    for lam in (-1, 0, 1, 2):
        for m in range(-3, 4):
            s = expand_in_basis(cfg1, Section(lam, RF(z) ** m))
            out = lie_derivative(cfg1, U(-1, 0), s)
            assert out == s.scale(Rat(m + lam))
    # on basis elements the eigenvalue is the degree itself
    for lam in (-1, 0, 1, 2):
        for n in range(-3, 4):
            out = lie_derivative(cfg1, U(-1, 0), U(lam, n))
            assert out == U(lam, n).scale(Rat(n))


def test_lie_derivative_zero(cfg2):
    assert lie_derivative(cfg2, U(-1, 1, 2), GradedElement(2, {})).is_zero()


def test_lie_derivative_leibniz(cfg2):
    rng = random.Random(13)
    for _ in range(12):
        e = U(-1, rng.randint(-2, 2), rng.randint(1, 2))
        s = U(0, rng.randint(-2, 2), rng.randint(1, 2))
        t = U(1, rng.randint(-2, 2), rng.randint(1, 2))
        lhs = lie_derivative(cfg2, e, multiply(cfg2, s, t))
        rhs = multiply(cfg2, lie_derivative(cfg2, e, s), t) \
            + multiply(cfg2, s, lie_derivative(cfg2, e, t))
        assert lhs == rhs


def test_lie_module_property(cfg2):
    rng = random.Random(17)
    for _ in range(12):
        e = U(-1, rng.randint(-2, 2), rng.randint(1, 2))
        f = U(-1, rng.randint(-2, 2), rng.randint(1, 2))
        s = U(rng.choice((-1, 0, 1, 2)), rng.randint(-2, 2),
              rng.randint(1, 2))
        lhs = lie_derivative(cfg2, vf_bracket(cfg2, e, f), s)
        rhs = lie_derivative(cfg2, e, lie_derivative(cfg2, f, s)) \
            - lie_derivative(cfg2, f, lie_derivative(cfg2, e, s))
        assert lhs == rhs


def test_gamma_classical(cfg1):
    for n in range(-4, 5):
        for m in range(-4, 5):
            v = cocycle_gamma(cfg1, U(0, n), U(0, m))
            assert v == (Rat(m) if n + m == 0 else Rat(0))


def test_gamma_antisymmetric(cfg2):
    f = GradedElement(0, {(2, 1): Rat(3), (-1, 2): Rat(1)})
    assert cocycle_gamma(cfg2, f, f) == Rat(0)


def test_gamma_block_vanishing(cfg2):
    # functions with poles only at marked points: 1 and (z - P)^(-j)
    from knwznw.basis import Section, expand_in_basis
    fs = [expand_in_basis(cfg2, Section(0, RF.one())),
          expand_in_basis(cfg2, Section(0, RF(Poly((1,)), z))),
          expand_in_basis(cfg2, Section(0, RF(Poly((1,)), (z - 1) ** 2)))]
    for a in fs:
        for b in fs:
            assert cocycle_gamma(cfg2, a, b) == Rat(0)


def test_chi_classical(cfg1):
    for n in range(-6, 7):
        v = cocycle_chi(cfg1, U(-1, n), U(-1, -n))
        assert v == Rat(n ** 3 - n, 12)
    assert cocycle_chi(cfg1, U(-1, 2), U(-1, 1)) == Rat(0)


def test_chi_antisymmetric_and_subalgebra_vanishing(cfg2):
    e = GradedElement(-1, {(2, 1): Rat(1), (1, 2): Rat(-2)})
    assert cocycle_chi(cfg2, e, e) == Rat(0)
    for n in (1, 2, 3):
        for m in (1, 2, 3):
            for p in (1, 2):
                for r in (1, 2):
                    assert cocycle_chi(cfg2, U(-1, n, p),
                                       U(-1, m, r)) == Rat(0)
                    assert cocycle_chi(cfg2, U(-1, -n - 1, p),
                                       U(-1, -m - 1, r)) == Rat(0)


def test_chi_connection_pole_rejected(cfg2):
    R = ProjectiveConnection(RF(Poly((1,)), z))
    with pytest.raises(DomainError, match="pole at marked point"):
        cocycle_chi(cfg2, U(-1, 0, 1), U(-1, 0, 2), R)


def test_coboundary_trivial(cfg2):
    Rc = ProjectiveConnection(RF.const(4))
    d, w = coboundary_compare(cfg2, U(-1, 1, 1), U(-1, -1, 2), Rc, Rc)
    assert d == Rat(0) and w == Rat(0)


def test_coboundary_classical_value(cfg1):
    # N = 1, R = c constant, pair (e_0, e_{-2}):
    # chi_R - chi_0 = -(c/12) res(c-term) = -c/6 and the witness agrees
    c = Rat(5)
    Rc = ProjectiveConnection(RF.const(c))
    d, w = coboundary_compare(cfg1, U(-1, 0), U(-1, -2), Rc, R_ZERO)
    assert d == w == Rat(-5, 6)
    d2, w2 = coboundary_compare(cfg1, U(-1, 2), U(-1, -2), Rc, R_ZERO)
    assert d2 == w2


def test_coboundary_random_pairs(cfg2):
    rng = random.Random(19)
    Ra = ProjectiveConnection(RF.const(3))
    Rb = ProjectiveConnection(RF(2 - z, (z - 5) * (z - 7)))
    for R in (Ra, Rb):
        for _ in range(25):
            e = U(-1, rng.randint(-3, 3), rng.randint(1, 2))
            f = U(-1, rng.randint(-3, 3), rng.randint(1, 2))
            d, w = coboundary_compare(cfg2, e, f, R, R_ZERO)
            assert d == w


def test_grading_report_classical(cfg1):
    rep = grading_report(cfg1, "A", (-4, 4))
    assert rep.lower_shift == 0 and rep.upper_shift == 0 and rep.ok
    repc = grading_report(cfg1, "chi", (-4, 4))
    assert repc.ok
    assert all(n + m == 0 for ((n, _p), (m, _r)), _v in repc.band_witnesses)


def test_grading_report_two_points(cfg2):
    rep = grading_report(cfg2, "A", (-4, 4))
    assert rep.lower_shift == 0 and rep.upper_shift == 1 and rep.ok
    repl = grading_report(cfg2, "L", (-4, 4))
    assert repl.lower_shift == 0 and repl.upper_shift >= 0 and repl.ok
    repg = grading_report(cfg2, "gamma", (-4, 4))
    assert repg.ok and repg.lower_shift == -1
    repx = grading_report(cfg2, "chi", (-4, 4))
    assert repx.ok and repx.lower_shift >= -2


def test_triangular_decomposition_strips(cfg1, cfg2):
    td1 = triangular_decompose(cfg1, "L", (-4, 4))
    assert td1.strip == [(0, 1)] and td1.strip_dimension == 1
    td2 = triangular_decompose(cfg2, "L", (-4, 4))
    assert sorted(td2.strip) == [(-1, 1), (-1, 2), (0, 1), (0, 2)]
    assert td2.strip_dimension == 4
    ta = triangular_decompose(cfg2, "A", (-4, 4))
    assert ta.strip == [(0, 1), (0, 2)]
    assert min(n for n, _p in ta.plus) == 1
    assert all(n <= -1 for n, _p in ta.minus)


def test_triangular_window_too_small(cfg2):
    with pytest.raises(DomainError, match="window"):
        triangular_decompose(cfg2, "L", (0, 1))


def test_triangular_order_classification(cfg2):
    td = triangular_decompose(cfg2, "L", (-3, 3))
    for (n, p) in td.plus:
        sec = kn_basis_element(cfg2, KNIndex(-1, n, p))
        assert min(sec.order_at(pt) for pt in cfg2.points) >= 2
    for (n, p) in td.minus:
        sec = kn_basis_element(cfg2, KNIndex(-1, n, p))
        assert sec.order_at(INFINITY) >= 2
