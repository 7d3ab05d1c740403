"""Command-line driver: construction, validation, classification, fibers,
and Grassmannian computations with canonical JSON output.

Exit codes: 0 success / verdict pass, 1 verdict fail, 2 malformed request,
3 domain error (inadmissible input reaching a library precondition).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .scalars import (
    INFINITY,
    GaussianRational,
    LaurentPoly,
    PoleAtPoint,
    RationalFunction,
    UnsplitQuadratic,
)
from . import liefam, hcmod, classify, grassfam, acceptance
from .liefam import (
    FamilyMorphism,
    NotALieAlgebra,
    base_change,
    check_morphism,
    constant_family,
    contraction_family,
    deformation_family,
    fiber,
    fiber_invariants,
    gl2_algebra,
    jacobi_check,
    scaled_bracket_family,
    sl2_algebra,
)
from .sl2fam import sl2_involution
from .hcmod import (
    HCModuleFamily,
    NotValidated,
    DegreeBoundViolated,
    WeightNotPresent,
    WeightSet,
    fiber_module,
    fiber_irreducible,
    iso_check,
    picard_twist,
    reducible_locus,
    swap_transitions,
    validate,
)
from .classify import (
    ClassSpec,
    InadmissibleCasimir,
    IncompatibleClass,
    admissible_casimir,
    classification_report,
    construct,
    uniqueness_probe,
)
from .grassfam import (
    GrassmannPencil,
    NoIsomorphismFound,
    RankDropAtLimit,
    contraction_comparison,
    fiber_group_closure_check,
    limit_subspace,
    pencil_basis,
    real_form_at,
    verify_subalgebra,
)


class RequestError(Exception):
    """Malformed request (schema level)."""


DOMAIN_ERRORS = (
    InadmissibleCasimir,
    IncompatibleClass,
    NotValidated,
    DegreeBoundViolated,
    WeightNotPresent,
    RankDropAtLimit,
    NoIsomorphismFound,
    NotALieAlgebra,
    PoleAtPoint,
    UnsplitQuadratic,
)


def emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


# ---------------------------------------------------------------------------
# Flag parsing helpers
# ---------------------------------------------------------------------------


def parse_point(text: str):
    if text in ("inf", "infinity", "oo"):
        return INFINITY
    try:
        return GaussianRational.parse(text)
    except Exception as e:
        raise RequestError(f"bad point {text!r}: {e}")


def parse_window(text: str):
    try:
        lo, hi = text.split("..")
        return (int(lo), int(hi))
    except ValueError:
        raise RequestError(f"bad window {text!r}, expected LO..HI")


def parse_weights(text: str) -> WeightSet:
    kind, _, param = text.partition(":")
    try:
        return WeightSet(kind, int(param) if param else 0)
    except ValueError as e:
        raise RequestError(str(e))


def parse_class(text: str) -> ClassSpec:
    kind, _, k = text.partition(":")
    try:
        return ClassSpec(kind, int(k) if k else None)
    except ValueError as e:
        raise RequestError(str(e))


def parse_casimir(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise RequestError("casimir must be three comma-separated scalars")
    try:
        return tuple(GaussianRational.parse(p) for p in parts)
    except Exception as e:
        raise RequestError(f"bad casimir: {e}")


def load_module(path: str) -> HCModuleFamily:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
        return HCModuleFamily.from_json(json.loads(text))
    except (OSError, ValueError, KeyError) as e:
        raise RequestError(f"cannot load module from {path!r}: {e}")


def build_family(algebra: str, kind: str, power: int):
    try:
        alg = {"sl2": sl2_algebra, "gl2": gl2_algebra}[algebra]()
    except KeyError:
        raise RequestError(f"unknown algebra {algebra!r}")
    if kind == "constant":
        return constant_family(alg)
    from .acceptance import _gl2_involution

    theta = sl2_involution() if algebra == "sl2" else _gl2_involution()
    if kind == "scaled":
        return scaled_bracket_family(alg, power)
    if kind == "contraction":
        return contraction_family(alg, theta)
    if kind == "deformation":
        return deformation_family(alg, theta)
    raise RequestError(f"unknown family kind {kind!r}")


def pair_json(pair) -> dict:
    return {
        "first": [[str(v) for v in row] for row in pair[0]],
        "second": [[str(v) for v in row] for row in pair[1]],
    }


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def cmd_family(args) -> int:
    fam = build_family(args.algebra, args.kind, args.power)
    if args.action == "build":
        emit(fam.to_json())
        return 0
    if args.action == "jacobi":
        witness = jacobi_check(fam)
        if witness is None:
            emit({"ok": True})
            return 0
        (i, j, k), residual = witness
        emit({"ok": False, "witness": {"i": i, "j": j, "k": k, "residual": [str(x) for x in residual]}})
        return 1
    if args.action == "fiber":
        p = parse_point(args.at)
        alg = fiber(fam, p)
        emit({"at": str(p), "invariants": fiber_invariants(alg)})
        return 0
    if args.action == "basechange":
        if args.exponent < 1:
            raise RequestError("base-change exponent must be >= 1")
        emit(base_change(fam, LaurentPoly.monomial(args.exponent)).to_json())
        return 0
    if args.action == "morphcheck":
        return cmd_morphcheck(args)
    raise RequestError(f"unknown family action {args.action!r}")


def cmd_morphcheck(args) -> int:
    alg, theta = sl2_algebra(), sl2_involution()
    con = contraction_family(alg, theta)
    def_ = deformation_family(alg, theta)
    presets = {
        "pullback-deformation": (
            FamilyMorphism.identity(3),
            def_,
            base_change(con, LaurentPoly.monomial(2)),
        ),
        "p-scaling-embedding": (
            FamilyMorphism.diagonal(
                [RationalFunction.constant(GaussianRational(1)), RationalFunction.z(), RationalFunction.z()]
            ),
            def_,
            constant_family(alg),
        ),
        "identity-contraction-deformation": (FamilyMorphism.identity(3), con, def_),
    }
    if args.preset not in presets:
        raise RequestError(f"unknown preset, choose from {sorted(presets)}")
    phi, src, tgt = presets[args.preset]
    witness = check_morphism(phi, src, tgt)
    if witness is None:
        emit({"morphism": True, "preset": args.preset})
        return 0
    i, j, residual = witness
    emit(
        {
            "morphism": False,
            "preset": args.preset,
            "witness": {"i": i, "j": j, "residual": [str(x) for x in residual]},
        }
    )
    return 1


def cmd_module(args) -> int:
    window = parse_window(args.window)
    module = load_module(args.module)
    if args.action == "validate":
        report = validate(module, window)
        emit(report.to_json())
        return 0 if report.ok else 1
    if args.action == "fiber":
        p = parse_point(args.at)
        scalars = fiber_module(module, p, window)
        vanishing = []
        for n in sorted(scalars):
            a, b = scalars[n]
            if a.is_zero():
                vanishing.append({"n": n, "poly": "A"})
            if b.is_zero():
                vanishing.append({"n": n, "poly": "B"})
        verdict = fiber_irreducible(module, p, window)
        emit({"at": str(p), "irreducible": verdict, "vanishing": vanishing})
        return 0 if verdict else 1
    if args.action == "locus":
        locus = reducible_locus(module, window)
        emit(
            {
                "points": sorted(str(p) for p in locus.points),
                "boundary": sorted(str(p) for p in locus.boundary),
                "unsplit": [
                    {"n": n, "poly": which, "quadratic": str(poly)}
                    for n, which, poly in locus.unsplit
                ],
            }
        )
        return 0
    if args.action == "iso":
        other = load_module(args.other)
        result = iso_check(module, other, window)
        emit(
            {
                "isomorphic": result.isomorphic,
                "obstruction": result.obstruction,
                "scalars": {str(n): str(mu) for n, mu in result.scalars.items()},
            }
        )
        return 0 if result.isomorphic else 1
    if args.action == "twist":
        emit(picard_twist(module, args.degree, window).to_json())
        return 0
    if args.action == "swap":
        try:
            indices = [int(x) for x in args.indices.split(",")]
        except ValueError:
            raise RequestError("indices must be comma-separated integers")
        emit(swap_transitions(module, indices, window).to_json())
        return 0
    raise RequestError(f"unknown module action {args.action!r}")


def cmd_classify(args) -> int:
    weights = parse_weights(args.weights)
    if args.action == "admissible":
        verdict = admissible_casimir(weights, parse_casimir(args.casimir))
        emit({"admissible": verdict.ok, "reason": verdict.reason})
        return 0 if verdict.ok else 1
    cls = parse_class(getattr(args, "cls"))
    if args.action == "construct":
        module = construct(weights, cls, parse_casimir(args.casimir), parse_window(args.window))
        emit(module.to_json())
        return 0
    if args.action == "report":
        emit(classification_report(weights, cls))
        return 0
    if args.action == "probe":
        probe = uniqueness_probe(
            weights,
            cls,
            parse_casimir(args.casimir),
            trials=args.trials,
            seed=args.seed,
            window=parse_window(args.window),
        )
        emit(
            {
                "status": probe.status,
                "trials": probe.trials,
                "seed": args.seed,
                "detail": probe.detail,
            }
        )
        return 0 if probe.status in ("pass", "inapplicable") else 1
    raise RequestError(f"unknown classify action {args.action!r}")


def _parse_pq(text: str):
    try:
        p, q = (int(x) for x in text.split(","))
        return p, q
    except ValueError:
        raise RequestError("--pq expects two comma-separated integers, e.g. 1,1")


def cmd_grassmann(args) -> int:
    p, q = _parse_pq(args.pq)
    pencil = GrassmannPencil(p, q, det_one=args.det_one)
    if args.action == "pencil":
        t = parse_point(args.at) if args.at else None
        if t is INFINITY:
            raise RequestError("use the limit action for boundary parameters")
        emit({"basis": [pair_json(v) for v in pencil_basis(pencil, t)]})
        return 0
    if args.action == "limit":
        boundary = parse_point(args.boundary)
        emit({"basis": [pair_json(v) for v in limit_subspace(pencil, boundary)]})
        return 0
    if args.action == "subalg":
        witness = verify_subalgebra(pencil_basis(pencil))
        if witness is None:
            emit({"subalgebra": True})
            return 0
        emit({"subalgebra": False, "witness": list(witness)})
        return 1
    if args.action == "closure":
        failure = fiber_group_closure_check(pencil, parse_point(args.boundary))
        emit({"closed": failure is None, "detail": failure or ""})
        return 0 if failure is None else 1
    if args.action == "compare":
        phi = contraction_comparison(pencil)
        emit(
            {
                "isomorphic": True,
                "map": [[str(v) for v in row] for row in phi.matrix.entries],
            }
        )
        return 0
    if args.action == "realform":
        x = parse_point(args.at)
        report = real_form_at(pencil, x)
        emit(
            {
                "at": str(x),
                "dimension": report.dimension,
                "signature": list(report.signature),
                "invariants": report.invariants,
                "basis": [pair_json(v) for v in report.basis],
            }
        )
        return 0
    raise RequestError(f"unknown grassmann action {args.action!r}")


def cmd_verify(args) -> int:
    results = acceptance.run_suite(args.profile)
    for name, ok, details in results:
        sys.stdout.write(f"{'PASS' if ok else 'FAIL'}  {name}: {details}\n")
    failed = [name for name, ok, _ in results if not ok]
    emit({"profile": args.profile, "passed": len(results) - len(failed), "failed": failed})
    return 0 if not failed else 1


# ---------------------------------------------------------------------------
# Argument parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hcfam",
        description="Exact computations with algebraic families of Lie algebras "
        "and Harish-Chandra modules over the projective line.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    fam = sub.add_parser("family", help="Lie algebra families over the line")
    fam.add_argument("action", choices=["build", "jacobi", "fiber", "basechange", "morphcheck"])
    fam.add_argument("--algebra", default="sl2", choices=["sl2", "gl2"])
    fam.add_argument("--kind", default="contraction", choices=["constant", "scaled", "contraction", "deformation"])
    fam.add_argument("--power", type=int, default=1, help="bracket scaling exponent")
    fam.add_argument("--at", default="0", help="evaluation point (scalar or 'inf')")
    fam.add_argument("--exponent", type=int, default=2, help="base-change exponent")
    fam.add_argument("--preset", default="pullback-deformation", help="morphism preset")
    fam.set_defaults(handler=cmd_family)

    mod = sub.add_parser("module", help="Harish-Chandra module families")
    mod.add_argument("action", choices=["validate", "fiber", "locus", "iso", "twist", "swap"])
    mod.add_argument("--module", required=True, help="module JSON file, or '-' for stdin")
    mod.add_argument("--other", help="second module JSON file (for iso)")
    mod.add_argument("--window", default="-24..24", help="transition window LO..HI")
    mod.add_argument("--at", default="0", help="fiber point (scalar or 'inf')")
    mod.add_argument("--degree", type=int, default=1, help="twist degree")
    mod.add_argument("--indices", default="", help="comma-separated swap indices")
    mod.set_defaults(handler=cmd_module)

    cls = sub.add_parser("classify", help="classification of module families")
    cls.add_argument("action", choices=["admissible", "construct", "report", "probe"])
    cls.add_argument("--weights", required=True, help="even | odd | lowest:L | highest:L | finite:K")
    cls.add_argument("--class", dest="cls", default="III", help="I:k | II:k | III | IV")
    cls.add_argument("--casimir", default="0,0,1", help="c1,c0,c-1 as exact scalars")
    cls.add_argument("--window", default="-24..24")
    cls.add_argument("--trials", type=int, default=10)
    cls.add_argument("--seed", type=int, default=0)
    cls.set_defaults(handler=cmd_classify)

    gra = sub.add_parser("grassmann", help="pencils of subalgebras of g x g")
    gra.add_argument("action", choices=["pencil", "limit", "subalg", "closure", "compare", "realform"])
    gra.add_argument("--pq", default="1,1", help="block sizes p,q")
    gra.add_argument("--det-one", action="store_true", dest="det_one")
    gra.add_argument("--boundary", default="0", help="0 or inf")
    gra.add_argument("--at", default="", help="parameter value (empty for symbolic)")
    gra.set_defaults(handler=cmd_grassmann)

    ver = sub.add_parser("verify", help="run the acceptance suite")
    ver.add_argument("--profile", default="full", choices=["quick", "full"])
    ver.set_defaults(handler=cmd_verify)
    return parser


_DASH_VALUE_FLAGS = {"--window", "--at", "--casimir", "--boundary", "--indices", "--pq"}


def _merge_dash_values(argv):
    """Join flag/value pairs whose value starts with '-', which argparse
    would otherwise mistake for an option."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _DASH_VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_dash_values(list(argv)))
    try:
        return args.handler(args)
    except RequestError as e:
        emit({"error": "request", "message": str(e)})
        return 2
    except DOMAIN_ERRORS as e:
        emit({"error": type(e).__name__, "message": str(e)})
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
