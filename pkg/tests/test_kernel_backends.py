"""Both arithmetic kernels must behave identically."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knwznw._kernel import _pure

BACKENDS = [_pure]
try:
    from knwznw._kernel import _fast
    BACKENDS.append(_fast)
except ImportError:
    _fast = None

nonzero = st.integers(min_value=-200, max_value=200).filter(lambda x: x != 0)
anyint = st.integers(min_value=-200, max_value=200)


@pytest.fixture(params=BACKENDS, ids=lambda b: b.__name__.rsplit(".", 1)[-1])
def kernel(request):
    return request.param


def test_normalization(kernel):
    r = kernel.Rat(6, -4)
    assert (r.num, r.den) == (-3, 2)
    assert (kernel.Rat(0, 7).num, kernel.Rat(0, 7).den) == (0, 1)
    with pytest.raises(ZeroDivisionError):
        kernel.Rat(1, 0)


def test_parse_and_str(kernel):
    assert str(kernel.Rat.parse("-3/6")) == "-1/2"
    assert str(kernel.Rat.parse("14")) == "14"
    assert kernel.Rat.parse(" 7/2 ") == kernel.Rat(7, 2)


def test_int_interop(kernel):
    r = kernel.Rat(3, 4)
    assert r + 1 == kernel.Rat(7, 4)
    assert 1 + r == kernel.Rat(7, 4)
    assert 2 - r == kernel.Rat(5, 4)
    assert r * 2 == kernel.Rat(3, 2) == 2 * r
    assert 3 / kernel.Rat(3, 4) == kernel.Rat(4)
    assert kernel.Rat(5) == 5
    assert hash(kernel.Rat(5)) == hash(5)
    assert kernel.Rat(1, 2) < 1 and kernel.Rat(1, 2) > 0


def test_pow(kernel):
    assert kernel.Rat(2, 3) ** 3 == kernel.Rat(8, 27)
    assert kernel.Rat(-2, 3) ** -2 == kernel.Rat(9, 4)
    with pytest.raises(ZeroDivisionError):
        kernel.Rat(0) ** -1


@given(a=anyint, b=nonzero, c=anyint, d=nonzero, e=anyint, f=nonzero)
@settings(max_examples=150, deadline=None)
def test_field_axioms(a, b, c, d, e, f):
    for kernel in BACKENDS:
        x = kernel.Rat(a, b)
        y = kernel.Rat(c, d)
        z = kernel.Rat(e, f)
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x and x * y == y * x
        assert x + kernel.Rat(0) == x and x * kernel.Rat(1) == x
        assert x + (-x) == kernel.Rat(0)
        if x.num != 0:
            assert x * (kernel.Rat(1) / x) == kernel.Rat(1)


@given(st.lists(st.integers(-9, 9), max_size=6),
       st.lists(st.integers(-9, 9), max_size=6))
@settings(max_examples=100, deadline=None)
def test_poly_mul_agree(xs, ys):
    results = []
    for kernel in BACKENDS:
        a = kernel.poly_trim([kernel.Rat(x) for x in xs])
        b = kernel.poly_trim([kernel.Rat(y) for y in ys])
        prod = kernel.poly_mul(a, b)
        results.append([(c.num, c.den) for c in prod])
    assert all(r == results[0] for r in results)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6),
       st.lists(st.integers(-9, 9), min_size=1, max_size=5))
@settings(max_examples=100, deadline=None)
def test_poly_divmod_identity(xs, ys):
    for kernel in BACKENDS:
        a = kernel.poly_trim([kernel.Rat(x) for x in xs])
        b = kernel.poly_trim([kernel.Rat(y) for y in ys])
        if not b:
            continue
        q, r = kernel.poly_divmod(a, b)
        back = kernel.poly_add(kernel.poly_mul(q, b), r)
        assert back == a
        assert len(r) < len(b)


def test_poly_gcd_monic(kernel):
    R = kernel.Rat
    # (z-1)(z-2) and (z-1)(z-3): gcd z-1
    a = kernel.poly_mul((R(-1), R(1)), (R(-2), R(1)))
    b = kernel.poly_mul((R(-1), R(1)), (R(-3), R(1)))
    assert kernel.poly_gcd(a, b) == (R(-1), R(1))


def test_backend_selected():
    import knwznw
    assert knwznw.BACKEND in ("cython", "python")
