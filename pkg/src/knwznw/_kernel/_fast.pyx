# cython: language_level=3
"""Compiled arithmetic kernel: exact rationals and dense polynomial helpers.

Behavioural twin of ``_pure``; keep both in sync.  The win over the pure
kernel comes from cheap extension-type instances and direct C-level
dispatch in the inner loops, not from machine arithmetic: coefficients
are arbitrary-precision Python ints throughout.
"""

from math import gcd as _gcd


cdef inline Rat _mk(object num, object den):
    cdef Rat r = Rat.__new__(Rat)
    r.num = num
    r.den = den
    return r


cdef class Rat:
    """Rational number p/q in lowest terms with q > 0; zero is 0/1."""

    cdef readonly object num
    cdef readonly object den

    def __init__(self, num=0, den=1):
        if den == 0:
            raise ZeroDivisionError("rational with zero denominator")
        if den < 0:
            num = -num
            den = -den
        g = _gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        self.num = num
        self.den = den

    @classmethod
    def parse(cls, text):
        """Parse "p/q" or "p" with optional sign."""
        s = text.strip()
        if "/" in s:
            a, b = s.split("/", 1)
            return cls(int(a), int(b))
        return cls(int(s))

    def __add__(self, other):
        cdef Rat o
        if isinstance(other, Rat):
            o = <Rat> other
            da = self.den
            db = o.den
            g = _gcd(da, db)
            if g == 1:
                return _mk(self.num * db + o.num * da, da * db)
            s = da // g
            t = self.num * (db // g) + o.num * s
            g2 = _gcd(t, g)
            if g2 == 1:
                return _mk(t, s * db)
            return _mk(t // g2, s * (db // g2))
        if isinstance(other, int):
            return _mk(self.num + other * self.den, self.den)
        return NotImplemented

    def __radd__(self, other):
        if isinstance(other, int):
            return _mk(self.num + other * self.den, self.den)
        return NotImplemented

    def __sub__(self, other):
        cdef Rat o
        if isinstance(other, Rat):
            o = <Rat> other
            return self.__add__(_mk(-o.num, o.den))
        if isinstance(other, int):
            return _mk(self.num - other * self.den, self.den)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return _mk(other * self.den - self.num, self.den)
        return NotImplemented

    def __mul__(self, other):
        cdef Rat o
        if isinstance(other, Rat):
            o = <Rat> other
            na = self.num
            da = self.den
            nb = o.num
            db = o.den
            g1 = _gcd(na, db)
            if g1 > 1:
                na //= g1
                db //= g1
            g2 = _gcd(nb, da)
            if g2 > 1:
                nb //= g2
                da //= g2
            return _mk(na * nb, da * db)
        if isinstance(other, int):
            g = _gcd(other, self.den)
            if g > 1:
                return _mk(self.num * (other // g), self.den // g)
            return _mk(self.num * other, self.den)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            g = _gcd(other, self.den)
            if g > 1:
                return _mk(self.num * (other // g), self.den // g)
            return _mk(self.num * other, self.den)
        return NotImplemented

    def __truediv__(self, other):
        cdef Rat o
        if isinstance(other, Rat):
            o = <Rat> other
            if o.num == 0:
                raise ZeroDivisionError("division by zero rational")
            na = self.num
            da = self.den
            nb = o.num
            db = o.den
            g1 = _gcd(na, nb)
            if g1 > 1:
                na //= g1
                nb //= g1
            g2 = _gcd(db, da)
            if g2 > 1:
                db //= g2
                da //= g2
            if nb < 0:
                na = -na
                nb = -nb
            return _mk(na * db, da * nb)
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.__truediv__(_mk(other, 1))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return Rat(other).__truediv__(self)
        return NotImplemented

    def __pow__(self, n, mod):
        if not isinstance(n, int):
            return NotImplemented
        if n >= 0:
            return _mk(self.num ** n, self.den ** n)
        if self.num == 0:
            raise ZeroDivisionError("zero to a negative power")
        if self.num < 0:
            return _mk((-self.den) ** -n, (-self.num) ** -n)
        return _mk(self.den ** -n, self.num ** -n)

    def __neg__(self):
        return _mk(-self.num, self.den)

    def __abs__(self):
        return _mk(abs(self.num), self.den)

    def __bool__(self):
        return self.num != 0

    def __richcmp__(self, other, int op):
        cdef Rat o
        if isinstance(other, Rat):
            o = <Rat> other
            a = self.num * o.den
            b = o.num * self.den
        elif isinstance(other, int):
            a = self.num
            b = other * self.den
        else:
            return NotImplemented
        if op == 2:
            return a == b
        if op == 3:
            return a != b
        if op == 0:
            return a < b
        if op == 1:
            return a <= b
        if op == 4:
            return a > b
        return a >= b

    def __hash__(self):
        if self.den == 1:
            return hash(self.num)
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return "%d/%d" % (self.num, self.den)

    def __repr__(self):
        return "Rat(%d, %d)" % (self.num, self.den)


RAT0 = Rat(0)
RAT1 = Rat(1)


def poly_trim(coeffs):
    """Normalize a coefficient list to a trimmed tuple."""
    cdef list cs = list(coeffs)
    while cs and (<Rat> cs[-1]).num == 0:
        cs.pop()
    return tuple(cs)


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    cdef Py_ssize_t i
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return poly_trim(out)


def poly_neg(a):
    return tuple(-c for c in a)


def poly_sub(a, b):
    return poly_add(a, poly_neg(b))


def poly_scale(a, c):
    if (<Rat> c).num == 0:
        return ()
    return tuple(x * c for x in a)


def poly_mul(a, b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if la == 0 or lb == 0:
        return ()
    cdef list out = [RAT0] * (la + lb - 1)
    cdef object x
    for i in range(la):
        x = a[i]
        if (<Rat> x).num == 0:
            continue
        for j in range(lb):
            out[i + j] = out[i + j] + x * b[j]
    return poly_trim(out)


def poly_divmod(a, b):
    """Exact division with remainder; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return (), ()
    cdef Py_ssize_t db = len(b) - 1, k, i
    cdef list q = [RAT0] * max(0, len(a) - len(b) + 1)
    cdef list r = list(a)
    lead = b[-1]
    while len(r) >= len(b):
        c = r[-1] / lead
        k = len(r) - 1 - db
        q[k] = c
        for i in range(len(b)):
            r[k + i] = r[k + i] - c * b[i]
        while r and (<Rat> r[-1]).num == 0:
            r.pop()
    return poly_trim(q), poly_trim(r)


def poly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return ()
    lead = a[-1]
    if lead == RAT1:
        return a
    return tuple(c / lead for c in a)


def poly_deriv(a):
    return poly_trim(a[i] * i for i in range(1, len(a)))


def poly_eval(a, x):
    acc = RAT0
    for c in reversed(a):
        acc = acc * x + c
    return acc
