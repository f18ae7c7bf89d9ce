"""Krichever-Novikov bases for tensor powers of the canonical bundle.

A weight-h section is f(z) dz^h with f rational.  Its order at a finite
point is the order of f; at infinity the order picks up the chart factor
(dz = -dw/w^2), so ord_inf = order_at(f, inf) - 2h.  For a marked-point
configuration (P_1, ..., P_N; infinity) the basis element of weight h,
degree n and point index p is pinned by

    ord_{P_p} = n - h,   ord_{P_i} = n - h + 1 (i != p),
    ord_inf  >= -N(n + 1 - h) - 2h + 1,

normalized so the expansion at P_p is xi^(n-h) (1 + O(xi)) dxi^h.  At
genus zero the order count is tight, so the solution space is always one
dimensional and every prescribed order is attained exactly; the solver
still carries the order-at-infinity adjustment loop and flags it in the
construction record should it ever fire.

Degrees and expansions are exact; the residue pairing of weights h and
1 - h realizes the duality that drives basis expansion.
"""

from __future__ import annotations

from math import comb
from typing import NamedTuple

from ._kernel import RAT0, RAT1, Rat
from .errors import BasisConstructionError, DomainError
from .exactlinalg import nullspace
from .ratfield import (INFINITY, Poly, RationalFunction, as_rat,
                       local_expansion, order_at, residue_at)


class Config:
    """Marked points: N distinct finite rational coordinates; reference
    point fixed at z = infinity; genus 0.

    Carries a memo table for constructed basis elements and derived
    structure constants.  Values are immutable, so concurrent lookups are
    benign (same key always maps to the same value).
    """

    genus = 0

    def __init__(self, points):
        pts = tuple(as_rat(p) for p in points)
        if not pts:
            raise DomainError("need at least one marked point")
        if len(set(pts)) != len(pts):
            raise DomainError("marked points must be pairwise distinct")
        self.points = pts
        self.n_points = len(pts)
        self.cache = {}

    def point(self, p):
        """1-based access, matching the index convention of the basis."""
        if not 1 <= p <= self.n_points:
            raise DomainError("point index %d out of range 1..%d"
                              % (p, self.n_points))
        return self.points[p - 1]

    def __eq__(self, other):
        return isinstance(other, Config) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return "Config(%s)" % (", ".join(str(p) for p in self.points),)


class KNIndex(NamedTuple):
    lam: int
    n: int
    p: int


class Section:
    """A weight-lam differential f(z) dz^lam."""

    __slots__ = ("lam", "value")

    def __init__(self, lam, value):
        self.lam = lam
        self.value = value if isinstance(value, RationalFunction) \
            else RationalFunction(value)

    def is_zero(self):
        return self.value.is_zero()

    def order_at(self, p):
        if p is INFINITY:
            return order_at(self.value, p) - 2 * self.lam
        return order_at(self.value, p)

    def __eq__(self, other):
        return (isinstance(other, Section) and self.lam == other.lam
                and self.value == other.value)

    def __hash__(self):
        return hash((self.lam, self.value))

    def __repr__(self):
        return "Section(lam=%d, %s)" % (self.lam, self.value)


class GradedElement:
    """Finite linear combination of basis elements of one weight.

    terms maps (n, p) -> coefficient; zero coefficients are never stored.
    """

    __slots__ = ("lam", "terms")

    def __init__(self, lam, terms=()):
        self.lam = lam
        t = dict(terms) if not isinstance(terms, dict) else dict(terms)
        self.terms = {k: v for k, v in t.items() if v.num != 0}

    @classmethod
    def unit(cls, lam, n, p):
        return cls(lam, {(n, p): RAT1})

    def is_zero(self):
        return not self.terms

    def support_degrees(self):
        return sorted({n for (n, _p) in self.terms})

    def coefficient(self, n, p):
        return self.terms.get((n, p), RAT0)

    def __add__(self, other):
        if self.lam != other.lam:
            raise DomainError("weight mismatch in graded sum")
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, RAT0) + v
            if w.num == 0:
                out.pop(k, None)
            else:
                out[k] = w
        return GradedElement(self.lam, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GradedElement(self.lam, {k: -v for k, v in self.terms.items()})

    def scale(self, c):
        c = as_rat(c)
        if c.num == 0:
            return GradedElement(self.lam, {})
        return GradedElement(self.lam, {k: v * c for k, v in self.terms.items()})

    def items(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        return (isinstance(other, GradedElement) and self.lam == other.lam
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.lam, frozenset(self.terms.items())))

    def __repr__(self):
        body = " + ".join("%s*f[%d,%d]" % (v, n, p)
                          for (n, p), v in self.items())
        return "GradedElement(lam=%d, %s)" % (self.lam, body or "0")


class BasisRecord(NamedTuple):
    section: Section
    orders: dict          # point index (1-based) -> attained order
    order_infinity: int   # attained order at the reference point
    adjusted: bool


def _prescribed_orders(cfg, idx):
    lam, n, p = idx
    orders = {}
    for i in range(1, cfg.n_points + 1):
        orders[i] = n - lam if i == p else n - lam + 1
    m_inf = -cfg.n_points * (n + 1 - lam) - 2 * lam + 1
    return orders, m_inf


def _section_space(cfg, point_orders, lam, m_inf):
    """Solve for weight-lam sections with ord_{P_i} >= point_orders[i] and
    section order at infinity >= m_inf.  Returns (numerators, den, rows)."""
    pts = cfg.points
    den_exp = {i: max(0, -point_orders[i]) for i in point_orders}
    den = Poly((RAT1,))
    for i, e in den_exp.items():
        if e:
            den = den * (Poly((-pts[i - 1], RAT1)) ** e)
    deg_d = den.degree()
    # section order at inf of q/den dz^lam is (deg den - deg q) - 2 lam
    deg_max = deg_d - 2 * lam - m_inf
    if deg_max < 0:
        return [], den, []
    ncols = deg_max + 1
    rows = []
    for i, a in point_orders.items():
        k = a + den_exp[i]  # equals max(a, 0): required zero order of q at P_i
        # first k Taylor coefficients of q at P_i must vanish
        a_pt = pts[i - 1]
        powers = [RAT1]
        for _ in range(ncols):
            powers.append(powers[-1] * a_pt)
        for j in range(k):
            row = [RAT0] * ncols
            for t in range(j, ncols):
                row[t] = Rat(comb(t, j)) * powers[t - j]
            rows.append(row)
    sols = nullspace(rows, ncols)
    nums = [Poly(v) for v in sols]
    return nums, den, rows


def kn_basis_record(cfg, idx):
    """Construct the basis element with full metadata; memoized per Config."""
    idx = KNIndex(*idx)
    if not 1 <= idx.p <= cfg.n_points:
        raise DomainError("point index %d out of range" % idx.p)
    key = ("basis", idx)
    hit = cfg.cache.get(key)
    if hit is not None:
        return hit

    point_orders, m_generic = _prescribed_orders(cfg, idx)
    attempts = 2 * cfg.n_points + 4
    nums = den = None
    m_inf = m_generic
    adjusted = False
    for step in range(attempts):
        m_inf = m_generic + step
        nums, den, rows = _section_space(cfg, point_orders, idx.lam, m_inf)
        if len(nums) == 1:
            adjusted = step > 0
            break
        if len(nums) == 0:
            raise BasisConstructionError(
                "no section for %s with ord_inf >= %d" % (idx, m_inf),
                matrix=rows)
    else:
        raise BasisConstructionError(
            "no unique section for %s after %d adjustments" % (idx, attempts),
            matrix=rows)

    value = RationalFunction(nums[0], den)
    # verify the attained orders; at genus 0 the prescription is exact
    attained = {}
    for i, a in point_orders.items():
        o = order_at(value, cfg.points[i - 1])
        if o != a:
            raise BasisConstructionError(
                "order %d attained instead of %d at P_%d for %s"
                % (o, a, i, idx), matrix=rows)
        attained[i] = o
    o_inf = order_at(value, INFINITY) - 2 * idx.lam
    if o_inf < m_inf:
        raise BasisConstructionError(
            "order %d at infinity below prescription %d for %s"
            % (o_inf, m_inf, idx), matrix=rows)

    # normalize the expansion at P_p to xi^(n-lam) (1 + O(xi))
    _, coeffs = local_expansion(value, cfg.point(idx.p), 1)
    lead = coeffs[0]
    if lead != RAT1:
        value = value * (RAT1 / lead)

    rec = BasisRecord(Section(idx.lam, value), attained, o_inf, adjusted)
    cfg.cache[key] = rec
    return rec


def kn_basis_element(cfg, idx):
    """The unique normalized section for (weight, degree, point index)."""
    return kn_basis_record(cfg, idx).section


def kn_pairing(cfg, f, g):
    """Residue pairing of sections of weights h and 1 - h.

    Computed as the sum of residues of f*g over the marked points; equals
    minus the residue at infinity by the residue theorem.
    """
    if not isinstance(f, Section) or not isinstance(g, Section):
        raise DomainError("pairing expects sections")
    if f.lam + g.lam != 1:
        raise DomainError("weight mismatch: %d + %d != 1" % (f.lam, g.lam))
    if f.is_zero() or g.is_zero():
        return RAT0
    h = f.value * g.value
    total = RAT0
    for pt in cfg.points:
        total = total + residue_at(h, pt)
    return total


def section_from_graded(cfg, ge):
    """Realize a graded element as an actual section."""
    value = RationalFunction.zero()
    for (n, p), c in ge.terms.items():
        value = value + kn_basis_element(cfg, KNIndex(ge.lam, n, p)).value * c
    return Section(ge.lam, value)


def _check_poles(cfg, value):
    den = value.den
    for i, pt in enumerate(cfg.points, start=1):
        m = den.mult_at(pt)
        if m:
            den = den // (Poly((-pt, RAT1)) ** m)
    if den.degree() > 0:
        if den.degree() == 1:
            bad = -den.coeffs[0] / den.coeffs[1]
            raise DomainError("pole at %s outside the marked points" % bad)
        raise DomainError(
            "poles outside the marked points (denominator factor %s)" % den)


def expand_in_basis(cfg, s):
    """Exact expansion of a section in the basis of its weight.

    Coefficients are extracted by pairing against the dual-weight basis;
    the reconstruction is verified to reproduce the input exactly.
    """
    if not isinstance(s, Section):
        raise DomainError("expected a section")
    if s.is_zero():
        return GradedElement(s.lam, {})
    _check_poles(cfg, s.value)
    lam = s.lam
    n_pts = cfg.n_points
    o_min = min(order_at(s.value, pt) for pt in cfg.points)
    o_inf = order_at(s.value, INFINITY) - 2 * lam
    n_min = lam + o_min
    n_max = (n_pts * lam - 2 * lam - o_inf) // n_pts
    terms = {}
    for n in range(n_min, n_max + 1):
        for p in range(1, n_pts + 1):
            dual = kn_basis_element(cfg, KNIndex(1 - lam, -n, p))
            c = kn_pairing(cfg, s, dual)
            if c.num != 0:
                terms[(n, p)] = c
    ge = GradedElement(lam, terms)
    if section_from_graded(cfg, ge).value != s.value:
        raise BasisConstructionError(
            "expansion failed to reproduce the section (internal error)")
    return ge


def homogeneous_dimension(cfg, lam, n):
    """Dimension of the degree-n homogeneous subspace: N at genus 0."""
    return cfg.n_points
