"""Formal Knizhnik-Zamolodchikov system on the configuration space.

At genus zero the configuration directions are the N point-moving vector
fields: e_{-1,p} has leading term d/dxi_p at P_p and a zero at every other
marked point (for N >= 3 the three global vector fields make the N fields
span the N-3 true moduli directions with a kernel; the raw fields are kept
and the kernel is reported as metadata).

The connection matrix in direction p is the Sugawara operator of e_{-1,p}
on the degree-zero slice of the induced module, pushed back to degree zero
through coinvariant reduction; the emitted system reads

    dPhi/dz_p = -A_p Phi .

Measured matrices decompose exactly as

    A_p = kappa * sum_{j != p} Omega_{pj} / (z_p - z_j) + sigma_p * Id,

one global kappa with |kappa| = 1/(level + dual Coxeter), and per-point
scalar shifts sigma_p.  The shifts are the conformal-weight part of the
connection (a closed scalar form absorbed by rescaling the unknown); they
obey the closed formula

    sigma_p = -1/(2(level+k)) [ C_p sum_{l!=p} 1/(z_p - z_l)
                                + sum_{q != p} E_p'(z_q) C_q ]

with C the Casimir eigenvalues of the local modules and E_p the
coefficient function of e_{-1,p}.  The fit reports kappa, the shifts and
the residual, which must vanish identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._kernel import RAT0, RAT1, Rat
from .basis import Config, GradedElement, KNIndex, kn_basis_element
from .errors import DomainError
from .exactlinalg import commutator, is_zero_matrix
from .finite_lie import (casimir_eigenvalue, finite_irrep, omega_matrix,
                         tensor_dim)
from .modules import ModuleSpec, ModuleVector, induce_module
from .ratfield import INFINITY, local_expansion, order_at
from .sugawara import T_of_vectorfield, rescale_factor


def tangent_fields(cfg):
    """The N point-moving fields e_{-1,p}, with verified local behavior.

    Returns (fields, metadata): fields as weight -1 graded elements;
    metadata records per point the leading term at its own point and the
    vanishing order at the others, plus the global-field kernel count.
    """
    fields = []
    meta = {"per_point": {}, "n_points": cfg.n_points,
            "moduli_directions": max(0, cfg.n_points - 3),
            "global_field_kernel": min(3, cfg.n_points)}
    for p in range(1, cfg.n_points + 1):
        sec = kn_basis_element(cfg, KNIndex(-1, -1, p))
        _, coeffs = local_expansion(sec.value, cfg.point(p), 1)
        if order_at(sec.value, cfg.point(p)) != 0 or coeffs[0] != RAT1:
            raise DomainError("point-moving field not normalized at P_%d" % p)
        others = {}
        for q in range(1, cfg.n_points + 1):
            if q != p:
                o = order_at(sec.value, cfg.point(q))
                if o < 1:
                    raise DomainError(
                        "e_{-1,%d} does not vanish at P_%d" % (p, q))
                others[q] = o
        meta["per_point"][p] = {
            "leading": "d/dxi_%d" % p,
            "zero_orders": others,
            "order_at_infinity": sec.order_at(INFINITY),
        }
        fields.append(GradedElement.unit(-1, -1, p))
    return fields, meta


@dataclass
class KZSystem:
    config: Config
    algebra_kind: str
    weights: tuple
    level: Rat
    matrices: list                 # N matrices on the degree-zero slice
    kappa: object                  # Rat or None (degenerate fit)
    scalar_shifts: list            # per-point Rat, or None when partial
    sign_convention: object        # +1 / -1 / None
    residual_zero: bool
    partial: bool
    metadata: dict = field(default_factory=dict)

    @property
    def dimension(self):
        return len(self.matrices[0]) if self.matrices else 0


def classical_oracle_matrices(cfg, alg, weights):
    """The matrices sum_{j != p} Omega_{pj} / (z_p - z_j), built from the
    finite-dimensional Casimir tensor only."""
    mods = [finite_irrep(alg, w) for w in weights]
    n = cfg.n_points
    dim = tensor_dim(mods)
    out = []
    for p in range(n):
        m = [[RAT0] * dim for _ in range(dim)]
        for j in range(n):
            if j == p:
                continue
            om = omega_matrix(alg, mods, p, j)
            fac = RAT1 / (cfg.points[p] - cfg.points[j])
            for r in range(dim):
                for s in range(dim):
                    m[r][s] = m[r][s] + om[r][s] * fac
        out.append(m)
    return out


def point_mover_linear_coefficient(cfg, p, q):
    """E_p'(z_q): the xi-linear coefficient of e_{-1,p} at P_q (q != p)."""
    sec = kn_basis_element(cfg, KNIndex(-1, -1, p))
    _, coeffs = local_expansion(sec.value, cfg.point(q), 2)
    o = order_at(sec.value, cfg.point(q))
    # expansion starts at the vanishing order; linear coefficient is the
    # order-1 coefficient
    if o == 1:
        return coeffs[0]
    return RAT0


def predicted_scalar_shift(cfg, alg, weights, level, p):
    """Closed-form conformal-weight shift of the direction-p matrix."""
    fac = rescale_factor(alg, level) * Rat(1, 2)
    zs = cfg.points
    zp = zs[p - 1]
    own = RAT0
    for l in range(1, cfg.n_points + 1):
        if l != p:
            own = own + RAT1 / (zp - zs[l - 1])
    total = casimir_eigenvalue(alg, weights[p - 1]) * own
    for q in range(1, cfg.n_points + 1):
        if q == p:
            continue
        total = total + (point_mover_linear_coefficient(cfg, p, q)
                         * casimir_eigenvalue(alg, weights[q - 1]))
    return fac * total


def _traceless_dot(a, b):
    dim = len(a)
    tra = sum((a[i][i] for i in range(dim)), RAT0) / dim
    trb = sum((b[i][i] for i in range(dim)), RAT0) / dim
    dot = RAT0
    for i in range(dim):
        for j in range(dim):
            x = a[i][j] - (tra if i == j else RAT0)
            y = b[i][j] - (trb if i == j else RAT0)
            dot = dot + x * y
    return dot


def _is_scalar_matrix(m):
    dim = len(m)
    s = m[0][0]
    for i in range(dim):
        for j in range(dim):
            want = s if i == j else RAT0
            if m[i][j] != want:
                return None
    return s


def kz_matrices(cfg, alg, weights, level, depth):
    """Measure the connection matrices and fit the classical form.

    Builds the induced module (weyl for sl2, fock for the abelian
    algebra), applies the Sugawara operator of each point-moving field to
    the degree-zero basis, reduces each image to degree zero and fits

        A_p = kappa * M_p + sigma_p * Id

    against the Casimir oracle matrices M_p.  Residuals must vanish
    exactly; any basis vector whose reduction exhausts its budget marks
    the system partial.
    """
    level = level if isinstance(level, Rat) else Rat(level)
    kind = "fock" if alg.kind == "abelian1" else "weyl"
    spec = ModuleSpec(kind, tuple(weights), level, depth)
    module = induce_module(alg, cfg, spec)
    fields, meta = tangent_fields(cfg)
    fac = rescale_factor(alg, level)  # raises at the critical level
    basis = module.slice_basis(0)
    dim = len(basis)
    index = {m: i for i, m in enumerate(basis)}
    matrices = []
    partial = False
    for p, l in enumerate(fields, start=1):
        mat = [[RAT0] * dim for _ in range(dim)]
        for col, mono in enumerate(basis):
            w = T_of_vectorfield(module, l, ModuleVector.monomial(mono))
            red, status = module.coinvariant_reduce(w, depth)
            if status != "reduced-to-degree-0":
                partial = True
                continue
            for m2, c in red.terms.items():
                row = index.get(m2)
                if row is None:
                    raise DomainError("reduced vector left the degree-0 slice")
                mat[row][col] = c
        matrices.append(mat)

    oracle = classical_oracle_matrices(cfg, alg, weights)
    kappa = None
    shifts = None
    residual_zero = False
    sign = None
    fit_mode = "partial"
    if not partial:
        den = RAT0
        num = RAT0
        for a, m in zip(matrices, oracle):
            den = den + _traceless_dot(m, m)
            num = num + _traceless_dot(a, m)
        if den.num != 0:
            kappa = num / den
            fit_mode = "traceless"
        elif any(any(c.num != 0 for row in m for c in row) for m in oracle):
            # oracle matrices are scalar (abelian): use the structural value
            kappa = fac
            fit_mode = "scalar-oracle"
        else:
            fit_mode = "degenerate"
        if kappa is not None:
            shifts = []
            residual_zero = True
            for a, m in zip(matrices, oracle):
                r = [[a[i][j] - kappa * m[i][j] for j in range(dim)]
                     for i in range(dim)]
                s = _is_scalar_matrix(r)
                if s is None:
                    residual_zero = False
                    shifts.append(None)
                else:
                    shifts.append(s)
            sign = 1 if kappa > 0 else -1
        else:
            # fully degenerate (all-zero oracle): matrices must be scalar
            shifts = []
            residual_zero = True
            for a in matrices:
                s = _is_scalar_matrix(a)
                if s is None:
                    residual_zero = False
                    shifts.append(None)
                else:
                    shifts.append(s)
    meta["fit"] = fit_mode
    meta["rescale_factor"] = fac
    return KZSystem(cfg, alg.kind, tuple(weights), level, matrices, kappa,
                    shifts, sign, residual_zero, partial, meta)


@dataclass
class FlatnessReport:
    holds: bool
    vacuous: bool
    checked_relations: int
    counterexample: object = None


def flatness_check(system):
    """Infinitesimal-braid relations of the fitted classical form.

    [Omega_pq, Omega_pr + Omega_qr] = 0 and [Omega_pq, Omega_rs] = 0 for
    distinct indices: the algebraic identities equivalent to flatness of
    the classical system.  Exact; vacuous for N = 2.
    """
    if system.partial:
        raise DomainError("flatness check requires a complete system")
    cfg = system.config
    n = cfg.n_points
    if n < 3:
        return FlatnessReport(True, True, 0)
    from .finite_lie import make_algebra
    alg = make_algebra(system.algebra_kind)
    mods = [finite_irrep(alg, w) for w in system.weights]
    om = {}
    for p in range(n):
        for q in range(n):
            if p != q:
                om[(p, q)] = omega_matrix(alg, mods, p, q)
    checked = 0
    for p in range(n):
        for q in range(n):
            if p == q:
                continue
            for r in range(n):
                if r in (p, q):
                    continue
                lhs = commutator(om[(p, q)],
                                 [[a + b for a, b in zip(ra, rb)]
                                  for ra, rb in zip(om[(p, r)], om[(q, r)])])
                checked += 1
                if not is_zero_matrix(lhs):
                    return FlatnessReport(False, False, checked,
                                          ((p, q, r), lhs))
                for s in range(n):
                    if s in (p, q, r):
                        continue
                    c2 = commutator(om[(p, q)], om[(r, s)])
                    checked += 1
                    if not is_zero_matrix(c2):
                        return FlatnessReport(False, False, checked,
                                              ((p, q, r, s), c2))
    return FlatnessReport(True, False, checked)
