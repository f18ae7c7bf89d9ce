"""Command-line interface.

All subcommands read an optional JSON config file (--config) and emit
deterministic JSON on stdout: keys sorted, rationals as canonical "p/q"
strings, polynomials as ascending coefficient arrays.  Exit codes:
0 success, 1 domain error, 2 configuration/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from ._kernel import BACKEND, Rat
from .affine import AffineElement, affine_bracket
from .algebras import (ProjectiveConnection, R_ZERO, cocycle_chi,
                       cocycle_gamma, grading_report, multiply,
                       triangular_decompose, vf_bracket)
from .basis import Config, GradedElement, KNIndex, kn_basis_record
from .errors import ConfigError, DomainError, KNError
from .finite_lie import make_algebra
from .kz import flatness_check, kz_matrices
from .modules import (ModuleSpec, degree_zero_coinvariant_dimension,
                      induce_module)
from .ratfield import Poly, RationalFunction
from .sugawara import sugawara_commutator_audit
from .verify import run_suite


def _rat_str(x):
    return str(x)


def _poly_json(p):
    return [str(c) for c in p.coeffs]


def _parse_rat(text):
    try:
        return Rat.parse(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError("bad rational %r: %s" % (text, exc))


def _load_config(path):
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError("cannot read config %s: %s" % (path, exc))


def _config_points(data, args):
    pts = None
    if getattr(args, "points", None):
        pts = [s for s in args.points.split(",") if s]
    elif "points" in data:
        pts = data["points"]
    if not pts:
        raise ConfigError("no marked points given (config 'points' or --points)")
    try:
        return Config([_parse_rat(p) for p in pts])
    except DomainError as exc:
        raise ConfigError(str(exc))


def _config_algebra(data):
    kind = data.get("lie_algebra", "sl2")
    try:
        return make_algebra(kind)
    except DomainError as exc:
        raise ConfigError(str(exc))


def _config_connection(data):
    spec = data.get("connection_R")
    if not spec:
        return R_ZERO
    num = Poly([_parse_rat(c) for c in spec.get("num", [])])
    den = Poly([_parse_rat(c) for c in spec.get("den", ["1"])])
    return ProjectiveConnection(RationalFunction(num, den))


def _config_module_spec(cfg, data):
    m = data.get("module", {})
    kind = m.get("kind", "weyl")
    weights = m.get("weights", data.get("weights"))
    if weights is None:
        raise ConfigError("module weights missing")
    level = _parse_rat(m.get("level", data.get("level", "1")))
    depth = int(m.get("depth", data.get("depth", 4)))
    width = m.get("width")
    if kind in ("weyl",):
        weights = tuple(int(w) for w in weights)
    else:
        weights = tuple(_parse_rat(w) for w in weights)
    try:
        return ModuleSpec(kind, weights, level, depth,
                          None if width is None else int(width))
    except DomainError as exc:
        raise ConfigError(str(exc))


def _window(args):
    try:
        lo, hi = args.window.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise ConfigError("bad window %r; expected lo:hi" % args.window)


def _emit(args, payload):
    indent = args.json_indent if args.json_indent >= 0 else None
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=indent))
    sys.stdout.write("\n")


# ------------------------------------------------------------- commands --

def cmd_basis(args):
    data = _load_config(args.config)
    cfg = _config_points(data, args)
    rec = kn_basis_record(cfg, KNIndex(args.lam, args.n, args.p))
    payload = {
        "lambda": args.lam,
        "n": args.n,
        "p": args.p,
        "num": _poly_json(rec.section.value.num),
        "den": _poly_json(rec.section.value.den),
        "orders": {str(i): o for i, o in rec.orders.items()}
                  | {"infinity": rec.order_infinity},
        "adjusted": rec.adjusted,
    }
    _emit(args, payload)
    return 0


def _ge_json(ge):
    return [[n, p, str(c)] for (n, p), c in ge.items()]


def cmd_table(args):
    data = _load_config(args.config)
    cfg = _config_points(data, args)
    lo, hi = _window(args)
    lam = 0 if args.algebra == "A" else -1
    op = multiply if args.algebra == "A" else vf_bracket
    entries = []
    for n in range(lo, hi + 1):
        for m in range(lo, hi + 1):
            for p in range(1, cfg.n_points + 1):
                for r in range(1, cfg.n_points + 1):
                    out = op(cfg, GradedElement.unit(lam, n, p),
                             GradedElement.unit(lam, m, r))
                    entries.append({
                        "left": [lam, n, p],
                        "right": [lam, m, r],
                        "result": _ge_json(out),
                    })
    _emit(args, {"algebra": args.algebra, "entries": entries})
    return 0


def cmd_cocycle(args):
    data = _load_config(args.config)
    cfg = _config_points(data, args)
    lo, hi = _window(args)
    R = _config_connection(data)
    entries = []
    lam = 0 if args.kind == "gamma" else -1
    for n in range(lo, hi + 1):
        for m in range(lo, hi + 1):
            for p in range(1, cfg.n_points + 1):
                for r in range(1, cfg.n_points + 1):
                    if args.kind == "gamma":
                        v = cocycle_gamma(cfg, GradedElement.unit(0, n, p),
                                          GradedElement.unit(0, m, r))
                    else:
                        v = cocycle_chi(cfg, GradedElement.unit(-1, n, p),
                                        GradedElement.unit(-1, m, r), R)
                    if v.num != 0:
                        entries.append({
                            "left": [lam, n, p],
                            "right": [lam, m, r],
                            "result": str(v),
                        })
    _emit(args, {"kind": args.kind, "entries": entries})
    return 0


def cmd_affine(args):
    data = _load_config(args.config)
    cfg = _config_points(data, args)
    alg = _config_algebra(data)
    lo, hi = _window(args)
    entries = []
    for n in range(lo, hi + 1):
        for m in range(lo, hi + 1):
            for p in range(1, cfg.n_points + 1):
                for r in range(1, cfg.n_points + 1):
                    for i in range(alg.dim):
                        for j in range(alg.dim):
                            out = affine_bracket(
                                cfg, alg,
                                AffineElement.loop_term(i, n, p),
                                AffineElement.loop_term(j, m, r))
                            entries.append({
                                "left": [alg.labels[i], n, p],
                                "right": [alg.labels[j], m, r],
                                "result": [[alg.labels[k], h, s, str(c)]
                                           for (k, h, s), c in out.items()],
                                "central": str(out.central),
                            })
    _emit(args, {"lie_algebra": alg.kind, "entries": entries})
    return 0


def cmd_module(args):
    data = _load_config(args.config)
    cfg = _config_points(data, args)
    alg = _config_algebra(data)
    spec = _config_module_spec(cfg, data)
    module = induce_module(alg, cfg, spec)
    slices = {str(-d): module.slice_dimension(-d)
              for d in range(0, spec.depth + 1)}
    payload = {
        "kind": spec.kind,
        "weights": [str(w) for w in spec.weights],
        "level": str(module.level),
        "depth": spec.depth,
        "slice_dimensions": slices,
    }
    if args.coinvariants:
        payload["coinvariant_dimension_degree0"] = \
            degree_zero_coinvariant_dimension(module)
    if args.action:
        basis0 = module.slice_basis(0)
        index = {m: i for i, m in enumerate(basis0)}
        mats = {}
        for p in range(1, cfg.n_points + 1):
            for i, label in enumerate(alg.labels):
                rows = [["0"] * len(basis0) for _ in basis0]
                for col, mono in enumerate(basis0):
                    for m2, c in module._act_gen((0, p, i), mono).items():
                        rows[index[m2]][col] = str(c)
                mats["%s(0,%d)" % (label, p)] = rows
        payload["degree0_action"] = mats
    _emit(args, payload)
    return 0


def cmd_sugawara(args):
    data = _load_config(args.config)
    cfg = _config_points(data, args)
    alg = _config_algebra(data)
    spec = _config_module_spec(cfg, data)
    module = induce_module(alg, cfg, spec)
    pairs = []
    for chunk in args.pairs.split(";"):
        k, r, m, s = (int(x) for x in chunk.split(","))
        pairs.append(((k, r), (m, s)))
    window = [int(x) for x in args.slices.split(",")]
    entries = []
    for e in sugawara_commutator_audit(cfg, alg, module, pairs, window):
        entries.append({
            "pair": [list(e.pair[0]), list(e.pair[1])],
            "is_scalar": e.is_scalar,
            "scalar": str(e.scalar),
            "chi": str(e.chi),
            "ratio": None if e.ratio is None else str(e.ratio),
        })
    _emit(args, {"lie_algebra": alg.kind, "level": str(module.level),
                 "entries": entries})
    return 0


def cmd_kz(args):
    data = _load_config(args.config)
    cfg = _config_points(data, args)
    alg = _config_algebra(data)
    weights = data.get("weights")
    if weights is None:
        raise ConfigError("weights missing")
    if alg.kind == "sl2":
        weights = tuple(int(w) for w in weights)
    else:
        weights = tuple(_parse_rat(w) for w in weights)
    level = _parse_rat(data.get("level", "1"))
    depth = int(data.get("depth", 4))
    system = kz_matrices(cfg, alg, weights, level, depth)
    flat = "n/a"
    if not system.partial and cfg.n_points >= 3:
        flat = "ok" if flatness_check(system).holds else "violated"
    elif not system.partial:
        flat = "ok"
    payload = {
        "points": [str(p) for p in cfg.points],
        "lie_algebra": alg.kind,
        "weights": [str(w) for w in weights],
        "level": str(level),
        "kappa": None if system.kappa is None else str(system.kappa),
        "sign_convention": (None if system.sign_convention is None
                            else "%+d" % system.sign_convention),
        "matrices": [[[str(c) for c in row] for row in m]
                     for m in system.matrices],
        "scalar_shifts": (None if system.scalar_shifts is None else
                          [None if s is None else str(s)
                           for s in system.scalar_shifts]),
        "residual_zero": system.residual_zero,
        "partial": system.partial,
        "flatness": flat,
        "moduli_directions": system.metadata.get("moduli_directions"),
        "global_field_kernel": system.metadata.get("global_field_kernel"),
    }
    _emit(args, payload)
    return 0


def cmd_verify(args):
    results = run_suite(args.suite)
    payload = {
        "suite": args.suite,
        "backend": BACKEND,
        "checks": [r.as_dict() for r in results],
        "passed": all(r.passed for r in results),
    }
    _emit(args, payload)
    if not payload["passed"]:
        for r in results:
            if not r.passed:
                sys.stderr.write("FAIL %s: %s\n" % (r.name, r.detail))
        return 1
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS,
                        help="JSON configuration file")
    common.add_argument("--json-indent", type=int, default=argparse.SUPPRESS,
                        help="indentation for JSON output (-1 = compact)")
    ap = argparse.ArgumentParser(
        prog="knwznw",
        parents=[common],
        description="Exact multi-point Krichever-Novikov / WZNW toolkit "
                    "on the rational curve")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common],
                       help="one basis element as JSON")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--points", help="comma-separated marked points")
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("table", parents=[common],
                       help="structure constants of A or L")
    p.add_argument("--algebra", choices=("A", "L"), default="L")
    p.add_argument("--window", default="-2:2")
    p.add_argument("--points")
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("cocycle", parents=[common],
                       help="cocycle values over a window")
    p.add_argument("--kind", choices=("gamma", "chi"), default="gamma")
    p.add_argument("--window", default="-3:3")
    p.add_argument("--points")
    p.set_defaults(fn=cmd_cocycle)

    p = sub.add_parser("affine", parents=[common],
                       help="affine bracket table")
    p.add_argument("--window", default="-2:2")
    p.add_argument("--points")
    p.set_defaults(fn=cmd_affine)

    p = sub.add_parser("module", parents=[common],
                       help="induced module slice dimensions")
    p.add_argument("--points")
    p.add_argument("--coinvariants", action="store_true",
                   help="also report the degree-0 coinvariant dimension")
    p.add_argument("--action", action="store_true",
                   help="emit the degree-0 action matrices")
    p.set_defaults(fn=cmd_module)

    p = sub.add_parser("sugawara", parents=[common],
                       help="commutator audit")
    p.add_argument("--pairs", default="2,1,-2,1",
                   help="semicolon-separated k,r,m,s")
    p.add_argument("--slices", default="-2",
                   help="comma-separated slice degrees")
    p.add_argument("--points")
    p.set_defaults(fn=cmd_sugawara)

    p = sub.add_parser("kz", parents=[common], help="formal KZ system")
    p.add_argument("--points")
    p.set_defaults(fn=cmd_kz)

    p = sub.add_parser("verify", parents=[common],
                       help="run an invariant suite")
    p.add_argument("--suite", default="all",
                   choices=("basis", "algebra", "affine", "module",
                            "sugawara", "kz", "all"))
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    # shared flags may arrive before or after the subcommand; the
    # subparser namespace wins, absent means default
    if not hasattr(args, "config"):
        args.config = None
    if not hasattr(args, "json_indent"):
        args.json_indent = -1
    try:
        return args.fn(args)
    except ConfigError as exc:
        sys.stderr.write("config error: %s\n" % exc)
        return 2
    except KNError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
