"""Command-line interface.

Subcommands: plane-curve, cartier, fermat, dims, jacobian, selftest.
Exit codes: 0 success, 2 usage error, 3 parse error, 4 verification or
fixture failure, 5 paper-discrepancy flag present under --strict.
Diagnostics go to stderr; JSON payloads to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fermat, jacobian, planecurve, selftest
from .errors import (
    BasisEscape,
    BasisVerificationFailed,
    CurveAlgebraError,
    FieldParseError,
    ImageEscapesSpan,
    InconsistentInvariants,
    PolySyntaxError,
    UnboundIdentifier,
)
from .gf import field_create
from .parser import parse_poly
from .poly import PolyRing

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_VERIFY = 4
EXIT_DISCREPANCY = 5

_PARSE_ERRORS = (PolySyntaxError, UnboundIdentifier, FieldParseError)
_VERIFY_ERRORS = (BasisVerificationFailed, ImageEscapesSpan,
                  InconsistentInvariants, BasisEscape)


def _emit(payload, fmt):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _print_table(payload)


def _print_table(payload, indent=""):
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _print_table(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], str):
            print(f"{indent}{key}:")
            for line in value:
                print(f"{indent}  {line}")
        else:
            print(f"{indent}{key}: {value}")


def _parse_params(field, entries):
    out = {}
    for entry in entries or []:
        name, eq, text = entry.partition("=")
        if not eq or not name:
            raise FieldParseError(f"parameter {entry!r} is not name=value")
        out[name] = field.parse(text)
    return out


def _build_curve(args):
    field = field_create(args.p, args.ext)
    ring = PolyRing(field, ("x", "y", "z"))
    params = _parse_params(field, args.param)
    f = parse_poly(args.poly, ring, params)
    return planecurve.PlaneCurveSpec(f)


def _cmd_plane_curve(args):
    curve = _build_curve(args)
    chart = {"x": 0, "y": 1, "z": 2}[args.chart]
    rep = planecurve.report(curve, with_cartier=args.cartier,
                            infinity_var=chart)
    _emit(rep, args.format)
    return EXIT_OK


def _cmd_cartier(args):
    curve = _build_curve(args)
    chart = {"x": 0, "y": 1, "z": 2}[args.chart]
    cm = planecurve.cartier_manin(curve, infinity_var=chart)
    hw = planecurve.hasse_witt(curve)
    rep = {
        "p": curve.field.p, "k": curve.field.k, "degree": curve.degree,
        "pa": curve.arithmetic_genus,
        "cartier_manin": cm.to_json(),
        "cartier_rank": cm.rank(),
        "a_number": cm.a_number(),
        "hasse_witt_rank": hw.rank(),
        "rank_duality_holds": cm.rank() == hw.rank(),
    }
    _emit(rep, args.format)
    return EXIT_OK


def _cmd_fermat(args):
    lam_texts = [s.strip() for s in args.lambdas.split(",") if s.strip()]
    ext = args.ext
    if ext is None:
        ext = 2 if any("t" in s for s in lam_texts) else 1
    field = field_create(args.p, ext)
    lambdas = [field.parse(s) for s in lam_texts]
    spec = fermat.FermatSpec(args.m, args.n, lambdas, field)
    rep = fermat.fermat_invariants(spec)
    payload = dict(rep)
    payload["genericity"] = rep["genericity"].to_json()
    payload["S_cardinalities"] = {f"{r},{s}": v
                                  for (r, s), v in rep["S_cardinalities"].items()}
    payload["T_cardinalities"] = {f"{r},{s}": v
                                  for (r, s), v in rep["T_cardinalities"].items()}
    payload["prank_subcurves"] = [
        {"t": d["t"], "subset": list(d["subset"]), "sigma": d["sigma"]}
        for d in rep["prank_subcurves"]]
    _emit(payload, args.format)
    if args.strict and rep["flags"]:
        print("discrepancy flags present", file=sys.stderr)
        return EXIT_DISCREPANCY
    return EXIT_OK


def _cmd_dims(args):
    m, n = args.m, args.n
    g = fermat.genus(m, n)
    h1 = fermat.h1_dim(m, n)
    ci = fermat.complete_intersection_h(n, (m,) * (n - 1), 1, 0)
    ident_ok = all(fermat.binom_identity(nn, t)[2]
                   for nn in range(1, 13) for t in range(nn))
    rep = {
        "m": m, "n": n,
        "genus": g, "h1_dim": h1,
        "complete_intersection_h1": ci,
        "dimensions_agree": g == h1 == ci,
        "binom_identity_ok": ident_ok,
    }
    _emit(rep, args.format)
    return EXIT_OK if rep["dimensions_agree"] else EXIT_VERIFY


_SING_KINDS = {"ordinary": jacobian.ORDINARY, "cusp": jacobian.CUSP,
               "diagonal": jacobian.DIAGONAL}


def _cmd_jacobian(args):
    data = []
    for entry in args.sing or []:
        parts = entry.split(":")
        if len(parts) not in (2, 3) or parts[0] not in _SING_KINDS:
            raise InconsistentInvariants(
                f"bad --sing {entry!r}; expected kind:param[:count] with "
                f"kind in {sorted(_SING_KINDS)}")
        kind = _SING_KINDS[parts[0]]
        param = int(parts[1])
        count = int(parts[2]) if len(parts) == 3 else 1
        data.append(jacobian.SingularityDatum(kind, param, count))
    rep = jacobian.chain_report(args.pa, args.sigma, args.anum, data)
    _emit(rep, args.format)
    if args.strict and rep["flags"]:
        return EXIT_DISCREPANCY
    return EXIT_OK


def _cmd_selftest(args):
    rep = selftest.run_all()
    if args.format == "json":
        print(json.dumps(rep, indent=2, sort_keys=True))
    else:
        for fx in rep["fixtures"]:
            status = "PASS" if fx["ok"] else "FAIL"
            print(f"{status} {fx['name']}: {fx['detail']}")
        print("all_ok:", rep["all_ok"])
    return EXIT_OK if rep["all_ok"] else EXIT_VERIFY


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hassewitt",
        description="p-rank and a-number of projective curves in "
                    "characteristic p, by exact Hasse-Witt and Cartier-Manin "
                    "matrices")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "table"), default="json")
        sp.add_argument("--strict", action="store_true",
                        help="exit 5 when a paper-discrepancy flag is raised")

    pc = sub.add_parser("plane-curve", help="Hasse-Witt matrix, sigma and a "
                                            "of a plane curve f(x,y,z)=0")
    pc.add_argument("--p", type=int, required=True)
    pc.add_argument("--ext", type=int, default=1,
                    help="extension degree k of the coefficient field")
    pc.add_argument("--poly", required=True)
    pc.add_argument("--param", action="append", metavar="NAME=VALUE",
                    help="bind an identifier to a field element")
    pc.add_argument("--cartier", action="store_true",
                    help="also compute the Cartier-Manin matrix")
    pc.add_argument("--chart", choices=("x", "y", "z"), default="z",
                    help="variable set to 1 for the Cartier chart")
    common(pc)
    pc.set_defaults(func=_cmd_plane_curve)

    ca = sub.add_parser("cartier", help="Cartier-Manin matrix of a plane curve")
    ca.add_argument("--p", type=int, required=True)
    ca.add_argument("--ext", type=int, default=1)
    ca.add_argument("--poly", required=True)
    ca.add_argument("--param", action="append", metavar="NAME=VALUE")
    ca.add_argument("--chart", choices=("x", "y", "z"), default="z")
    common(ca)
    ca.set_defaults(func=_cmd_cartier)

    fm = sub.add_parser("fermat", help="invariants of a generalized Fermat "
                                       "curve C^m(lambda_0..lambda_{n-2})")
    fm.add_argument("--m", type=int, required=True)
    fm.add_argument("--n", type=int, required=True)
    fm.add_argument("--p", type=int, required=True)
    fm.add_argument("--ext", type=int, default=None,
                    help="extension degree; defaults to 2 when a parameter "
                         "mentions t, else 1")
    fm.add_argument("--lambda", dest="lambdas", required=True,
                    metavar="L0,L1,...", help="comma-separated parameters in "
                                              "the field-element grammar")
    common(fm)
    fm.set_defaults(func=_cmd_fermat)

    dm = sub.add_parser("dims", help="genus / h1 dimension identities")
    dm.add_argument("--m", type=int, required=True)
    dm.add_argument("--n", type=int, required=True)
    common(dm)
    dm.set_defaults(func=_cmd_dims)

    jc = sub.add_parser("jacobian", help="smooth-model invariants from "
                                         "singularity data")
    jc.add_argument("--pa", type=int, required=True)
    jc.add_argument("--sigma", type=int, required=True)
    jc.add_argument("--anum", type=int, required=True)
    jc.add_argument("--sing", action="append", metavar="KIND:PARAM[:COUNT]",
                    help="ordinary:b, cusp:r or diagonal:m, with multiplicity")
    common(jc)
    jc.set_defaults(func=_cmd_jacobian)

    st = sub.add_parser("selftest", help="run the built-in fixtures")
    common(st)
    st.set_defaults(func=_cmd_selftest)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except _PARSE_ERRORS as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _VERIFY_ERRORS as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except CurveAlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
