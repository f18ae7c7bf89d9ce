"""Sugawara operators from the normal-ordered current square.

The energy-momentum field is half the normal-ordered contraction of the
currents over a dual pair of gauge-algebra bases.  Pairing it against the
vector field e_{k,r} through the weight-(-1)/weight-2 duality collapses
the contour integral to exact triple-residue coefficients

    c_{(n,p),(m,s)} = sum_i res_{P_i}( w^{n,p} w^{m,s} e_{k,r} ),

with w^{n,p} the weight-one dual basis, and

    L(k,r) = 1/2 sum_i sum_{(n,p),(m,s)} c_{(n,p),(m,s)} :u_i(n,p) u^i(m,s): .

Normal ordering moves strictly positive degrees right and strictly
negative degrees left; a degree-0/degree-0 pair keeps its written order
(the swapped tie rule is exposed for the equivalence audit).  On an
admissible module every application is a finite sum: for a vector of
degree d only mode indices n in [t + d, -d] can contribute to total
degree t, which the implementation uses as its summation bound.

The rescaled operators -1/(level + dual Coxeter) L(k,r) represent the
centrally extended vector-field algebra; the audit measures the central
scalar instead of assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from ._kernel import RAT0, RAT1, Rat
from .algebras import R_ZERO, cocycle_chi, vf_bracket
from .basis import GradedElement, KNIndex, kn_basis_element
from .errors import CriticalLevelError, DomainError
from .modules import ModuleVector, _merge
from .ratfield import residue_at


class SugawaraIndex(NamedTuple):
    k: int
    r: int


@dataclass
class TripleCoefficientTable:
    """Residue-pairing coefficients for one operator index (k, r)."""

    k: int
    r: int
    entries: dict  # ((n, p), (m, s)) -> Rat

    def coefficient(self, n, p, m, s):
        return self.entries.get(((n, p), (m, s)), RAT0)


def _triple_coefficient(cfg, k, r, n, p, m, s):
    key = ("sugw3", k, r, n, p, m, s)
    hit = cfg.cache.get(key)
    if hit is None:
        w1 = kn_basis_element(cfg, KNIndex(1, -n, p)).value
        w2 = kn_basis_element(cfg, KNIndex(1, -m, s)).value
        e = kn_basis_element(cfg, KNIndex(-1, k, r)).value
        h = w1 * w2 * e
        hit = RAT0
        for pt in cfg.points:
            hit = hit + residue_at(h, pt)
        cfg.cache[key] = hit
    return hit


def total_degree_band(cfg, k):
    """Totals n + m with possibly nonzero coefficients: [k, k + B]."""
    return (k, k if cfg.n_points == 1 else k + 1)


def sugawara_coefficients(cfg, idx, band):
    """Table of coefficients over a finite band of (n, m) totals.

    band is (t_min, t_max); per total, mode indices run over a window wide
    enough for any vector with degree >= t_min - band use (callers slice
    what they need; entries outside the structural band [k, k+B] vanish).
    """
    k, r = idx
    t_min, t_max = band
    entries = {}
    span = max(abs(t_min), abs(t_max)) + abs(k) + 2
    for t in range(t_min, t_max + 1):
        for n in range(t - span, span + 1):
            m = t - n
            for p in range(1, cfg.n_points + 1):
                for s in range(1, cfg.n_points + 1):
                    c = _triple_coefficient(cfg, k, r, n, p, m, s)
                    if c.num != 0:
                        entries[((n, p), (m, s))] = c
    return TripleCoefficientTable(k, r, entries)


def _ordered(nvec_a, nvec_b):
    """Normal order a pair of (degree, ...) ops: positive degrees right,
    negative degrees left; n == m == 0 keeps the written order."""
    n = nvec_a[0]
    m = nvec_b[0]
    if n > 0 and m <= 0:
        return nvec_b, nvec_a
    if m < 0 and n >= 0:
        return nvec_b, nvec_a
    return nvec_a, nvec_b


def _act_vector_gen(module, xvec, n, p, terms):
    """Action of (sum_j xvec[j] u_j) (x) A_{n,p} on a term dict."""
    out = {}
    for mono, cm in terms.items():
        for j, c in enumerate(xvec):
            if c.num == 0:
                continue
            _merge(out, module._act_gen((n, p, j), mono), c * cm)
    return out


def apply_L_raw(module, idx, terms, tie_swap=False, extra_margin=0):
    """Exact L(k, r) on a term dict; no truncation window applied."""
    cfg = module.cfg
    alg = module.alg
    k, r = idx
    t_lo, t_hi = total_degree_band(cfg, k)
    half = Rat(1, 2)
    out = {}
    unit_vecs = [[RAT1 if a == i else RAT0 for a in range(alg.dim)]
                 for i in range(alg.dim)]
    for mono, cm in terms.items():
        dv = mono.degree
        base = {mono: cm}
        for t in range(t_lo, t_hi + 1):
            lo = t + dv - extra_margin
            hi = -dv + extra_margin
            for n in range(lo, hi + 1):
                m = t - n
                for p in range(1, cfg.n_points + 1):
                    for s in range(1, cfg.n_points + 1):
                        c = _triple_coefficient(cfg, k, r, n, p, m, s)
                        if c.num == 0:
                            continue
                        for i in range(alg.dim):
                            first, second = _ordered((n, p, i, "b"),
                                                     (m, s, i, "d"))
                            if tie_swap and n == 0 and m == 0:
                                first, second = second, first
                            mid = _apply_current_op(module, second, base,
                                                    unit_vecs)
                            if not mid:
                                continue
                            res = _apply_current_op(module, first, mid,
                                                    unit_vecs)
                            _merge(out, res, c * half)
    return out


def _apply_current_op(module, op, terms, unit_vecs):
    n, p, i, which = op
    if which == "b":
        return _act_vector_gen(module, unit_vecs[i], n, p, terms)
    return _act_vector_gen(module, module.alg.dual_vectors[i], n, p, terms)


def apply_L(module, idx, v, tie_swap=False, extra_margin=0):
    """L(k, r) on a module vector, with loud truncation at the window."""
    out = apply_L_raw(module, SugawaraIndex(*idx), v.terms, tie_swap,
                      extra_margin)
    vec = ModuleVector(out)
    lost = {m.degree for m in vec.terms if m.degree < -module.spec.depth}
    if lost:
        from .errors import TruncationOverflow
        raise TruncationOverflow(lost)
    return vec


def rescale_factor(alg, level):
    den = level + alg.k_dual
    if den.num == 0:
        raise CriticalLevelError(
            "critical level: level + dual Coxeter number = 0")
    return Rat(-1) / den


def rescaled_L(module, idx, v, tie_swap=False):
    """-1/(level + dual Coxeter) times L(k, r)."""
    f = rescale_factor(module.alg, module.level)
    return apply_L(module, idx, v, tie_swap=tie_swap).scale(f)


def T_of_vectorfield(module, l, v, tie_swap=False):
    """Sugawara operator attached to a vector field.

    l is a weight-(-1) graded element; duality collapses the contour
    pairing to the sum of its coefficients times the rescaled operators.
    """
    if not isinstance(l, GradedElement) or l.lam != -1:
        raise DomainError("expected a weight -1 graded element")
    f = rescale_factor(module.alg, module.level)
    out = ModuleVector({})
    for (k, r), c in l.terms.items():
        out = out + apply_L(module, SugawaraIndex(k, r), v,
                            tie_swap=tie_swap).scale(f * c)
    return out


@dataclass
class AuditEntry:
    pair: tuple               # ((k, r), (m, s))
    is_scalar: bool
    scalar: Rat               # the measured central scalar (0 if none)
    chi: Rat                  # chi_0(e_{k,r}, e_{m,s})
    ratio: object             # scalar / chi, or None when chi == 0
    per_slice: dict = field(default_factory=dict)
    counterexample: object = None


def sugawara_commutator_audit(cfg, alg, module, pairs, window,
                              tie_swap=False):
    """Measure [L*_{k,r}, L*_{m,s}] - L*_{[e_{k,r}, e_{m,s}]} on the window.

    The difference must be a scalar multiple of the identity on every
    slice (zero when the slices do not match); the common scalar and its
    ratio to the zero-connection cocycle are reported.  The window must
    sit inside the depth window with margin covering the grading band of
    the operators involved.
    """
    depth = module.spec.depth
    band = 0 if cfg.n_points == 1 else 1
    fac = rescale_factor(alg, module.level)
    results = []
    for (k, r), (m, s) in pairs:
        worst = min(0, k, m, k + m) - band
        lo_needed = -depth - worst
        for d in window:
            if d > 0 or d < lo_needed:
                raise DomainError(
                    "window slice %d unsafe for pair ((%d,%d),(%d,%d)); "
                    "need %d <= d <= 0 at depth %d"
                    % (d, k, r, m, s, lo_needed, depth))
        bracket = vf_bracket(cfg, GradedElement.unit(-1, k, r),
                             GradedElement.unit(-1, m, s))
        per_slice = {}
        is_scalar = True
        counterexample = None
        for d in window:
            basis = module.slice_basis(d)
            sigma = None
            for mono in basis:
                base = {mono: RAT1}
                w1 = apply_L_raw(module, (m, s), base, tie_swap)
                w1 = apply_L_raw(module, (k, r), w1, tie_swap)
                w2 = apply_L_raw(module, (k, r), base, tie_swap)
                w2 = apply_L_raw(module, (m, s), w2, tie_swap)
                diff = {}
                _merge(diff, w1, fac * fac)
                _merge(diff, w2, -(fac * fac))
                for (h, u), cb in bracket.terms.items():
                    wb = apply_L_raw(module, (h, u), base, tie_swap)
                    _merge(diff, wb, -(fac * cb))
                got = diff.get(mono, RAT0)
                if sigma is None:
                    sigma = got
                rest = dict(diff)
                rest.pop(mono, None)
                if got != sigma or any(c.num != 0 for c in rest.values()):
                    is_scalar = False
                    counterexample = (d, mono, ModuleVector(diff))
                    break
            per_slice[d] = sigma if sigma is not None else RAT0
            if not is_scalar:
                break
        scalars = set(per_slice.values())
        common = scalars.pop() if len(scalars) == 1 else None
        if common is None:
            is_scalar = False
        chi = cocycle_chi(cfg, GradedElement.unit(-1, k, r),
                          GradedElement.unit(-1, m, s), R_ZERO)
        ratio = None
        if is_scalar and chi.num != 0:
            ratio = common / chi
        results.append(AuditEntry(((k, r), (m, s)), is_scalar,
                                  common if common is not None else RAT0,
                                  chi, ratio, per_slice, counterexample))
    return results
