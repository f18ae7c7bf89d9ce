"""Rational function field: orders, expansions, residues."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knwznw import Rat
from knwznw.errors import DomainError
from knwznw.ratfield import (INFINITY, Poly, RationalFunction as RF,
                             local_expansion, order_at, residue_at)

z = Poly.x()


def test_order_examples():
    f = RF(z ** 2, z - 1)
    assert order_at(f, Rat(0)) == 2
    assert order_at(f, INFINITY) == -1
    assert order_at(RF(1 - z), Rat(1)) == 1


def test_order_of_zero():
    with pytest.raises(DomainError, match="order of zero"):
        order_at(RF.zero(), Rat(0))


def test_residue_examples():
    g = RF(Poly((1,)), z)
    assert residue_at(g, Rat(0)) == Rat(1)
    assert residue_at(g, INFINITY) == Rat(-1)
    # partial fractions: (1-z)/z = 1/z - 1
    assert residue_at(RF(1 - z, z), Rat(0)) == Rat(1)
    # regular point
    assert residue_at(g, Rat(5)) == Rat(0)
    assert residue_at(RF.zero(), Rat(0)) == Rat(0)


def test_local_expansion_examples():
    o, cs = local_expansion(RF(Poly((1,)), 1 - z), Rat(0), 3)
    assert o == 0 and cs == [Rat(1), Rat(1), Rat(1)]
    o, cs = local_expansion(RF(z), INFINITY, 1)
    assert o == -1 and cs == [Rat(1)]
    # long division: (1-z)/z = z^{-1} - 1
    o, cs = local_expansion(RF(1 - z, z), Rat(0), 2)
    assert o == -1 and cs == [Rat(1), Rat(-1)]


def test_local_expansion_errors():
    with pytest.raises(DomainError):
        local_expansion(RF(z), Rat(0), 0)
    with pytest.raises(DomainError):
        local_expansion(RF.zero(), Rat(0), 2)


def _random_rf(rng):
    # poles and zeros drawn from small rationals so residues stay exact
    pts = [Rat(k) for k in (-2, -1, 0, 1, 2, 3)]
    num = Poly((Rat(rng.randint(1, 5)),))
    for _ in range(rng.randint(0, 3)):
        num = num * (z - rng.choice(pts))
    den = Poly((Rat(1),))
    for _ in range(rng.randint(1, 3)):
        den = den * (z - rng.choice(pts))
    return RF(num, den), pts


def test_residue_theorem():
    rng = random.Random(5)
    for _ in range(60):
        f, pts = _random_rf(rng)
        if f.is_zero():
            continue
        total = residue_at(f, INFINITY)
        for a in pts:
            total = total + residue_at(f, a)
        assert total == Rat(0)


def test_order_additivity():
    rng = random.Random(6)
    for _ in range(40):
        f, pts = _random_rf(rng)
        g, _ = _random_rf(rng)
        if f.is_zero() or g.is_zero():
            continue
        for a in pts + [INFINITY]:
            assert order_at(f * g, a) == order_at(f, a) + order_at(g, a)


def test_expansion_leading_matches_order():
    rng = random.Random(7)
    for _ in range(40):
        f, pts = _random_rf(rng)
        for a in pts + [INFINITY]:
            o, cs = local_expansion(f, a, 3)
            assert cs[0].num != 0
            assert o == order_at(f, a)


@given(st.integers(-8, 8), st.integers(-8, 8).filter(lambda x: x != 0),
       st.integers(-8, 8), st.integers(1, 8))
@settings(max_examples=60, deadline=None)
def test_rf_field_ops(a, b, c, d):
    f = RF(z - Rat(a), z ** 2 + Poly((Rat(b),)))
    g = RF(Poly((Rat(c), Rat(d))))
    if not g.is_zero():
        assert (f / g) * g == f
    assert f - f == RF.zero()
    assert (f + g) - g == f
    assert f * g == g * f


def test_rf_reduction_invariants():
    f = RF((z - 1) * (z - 2) * 3, (z - 1) * (z + 4) * 2)
    assert f.den.leading() == Rat(1)
    assert f.den.mult_at(Rat(1)) == 0  # common factor cancelled
    assert f == RF((z - 2) * Rat(3, 2), z + 4)


def test_derivative_quotient_rule():
    f = RF(z ** 2 - 1, z ** 3 + z + Poly((Rat(1),)))
    g = RF(z + 5, z - 2)
    lhs = (f * g).deriv()
    rhs = f.deriv() * g + f * g.deriv()
    assert lhs == rhs


def test_evaluation():
    f = RF(z ** 2 - 1, z - 2)
    assert f(Rat(3)) == Rat(8)
    with pytest.raises(ZeroDivisionError):
        f(Rat(2))


def test_poly_shifted():
    p = z ** 3 - z * 2 + Poly((Rat(7),))
    sh = p.shifted(Rat(2))
    # p(2 + t) expanded: value, then derivatives/k!
    q = Poly(sh)
    assert q(Rat(0)) == p(Rat(2))
    assert q(Rat(1)) == p(Rat(3))
