"""Command-line entry point.

Exit codes: 0 success, 1 input invariant violated, 2 parse error,
3 theorem check failed, 4 theorem hypothesis unmet.
"""
from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import convexcone as cc
from .core import attainment, inf_conv, verify_fond0
from .errors import HypothesisUnmet, InfconvError, InvariantViolation, ParseError
from .fnspace import is_katetov, is_lip1, is_positive
from .io import (
    cofinite_from_json,
    cyclic_from_json,
    dumps,
    fn_from_json,
    load_json,
    pl_from_json,
    read_magma,
    subspace_from_json,
)
from .katetov import (
    contraction_isometry_check,
    katetov_closure_check,
    katetov_extension,
    katetov_units,
)
from .kernels import MODES, bench_minplus
from .magma import check_metric_invariance, classify_magma, d_invariance_at, delta_fiber
from .monoid import argmin_morphism, cancellation_search, canonical_iso, is_unit, kuratowski_closure, verify_int2
from .rational import as_fraction
from .report import HOLDS, HYPOTHESIS_UNMET
from .zline import cyclic_minplus, z_minplus

EXIT_OK, EXIT_INVARIANT, EXIT_PARSE, EXIT_FAILED, EXIT_UNMET = 0, 1, 2, 3, 4
DEFAULT_SEED = 0


def _rational(text):
    try:
        return as_fraction(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _index_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational_list(text):
    return [_rational(t) for t in text.split(",") if t.strip()]


def _fn(path, M):
    return fn_from_json(load_json(path), M.n, str(path))


def _status_code(status: str) -> int:
    if status == HOLDS:
        return EXIT_OK
    return EXIT_UNMET if status == HYPOTHESIS_UNMET else EXIT_FAILED


# -- handlers: each returns (payload, exit code) ---------------------------------------


def cmd_classify(a):
    M = read_magma(a.magma)
    return {
        "class": classify_magma(M),
        "n": M.n,
        "latin": M.is_latin,
        "identity": M.identity,
        "associative": M.is_associative,
        "commutative": M.is_commutative,
        "metric_invariant": check_metric_invariance(M),
    }, EXIT_OK


def cmd_invariance(a):
    M = read_magma(a.magma)
    points = [a.at] if a.at is not None else range(M.n)
    out = {"metric_invariant": check_metric_invariance(M), "points": {}}
    for x in points:
        if not 0 <= x < M.n:
            raise InvariantViolation(f"index {x} outside [0, {M.n})", "--at")
        c = d_invariance_at(M, x)
        fib = delta_fiber(M, x)
        out["points"][str(x)] = {
            "constants": list(c.as_tuple()) if c else None,
            "fiber_size": len(fib.pairs),
            "proj1": sorted(fib.proj1),
            "proj2": sorted(fib.proj2),
        }
    return out, EXIT_OK


def cmd_convolve(a):
    M = read_magma(a.magma)
    f, g = _fn(a.f, M), _fn(a.g, M)
    out = {"result": inf_conv(M, f, g)}
    if a.attainment is not None:
        out["attainment"] = attainment(M, f, g, a.attainment)
    return out, EXIT_OK


def cmd_fond0(a):
    M = read_magma(a.magma)
    rep = verify_fond0(M, _fn(a.f, M), _fn(a.g, M))
    return rep, _status_code(rep.status)


def cmd_unit_check(a):
    M = read_magma(a.magma)
    cert = is_unit(M, _fn(a.f, M), positive=a.positive)
    return {"unit": cert is not None, "certificate": cert}, EXIT_OK


def cmd_closure(a):
    M = read_magma(a.magma)
    if not check_metric_invariance(M):
        raise HypothesisUnmet("metric is not invariant under translations", "metric")
    rep = kuratowski_closure(M)
    return rep, _status_code(rep.status)


def cmd_int2(a):
    M = read_magma(a.magma)
    rep = verify_int2(M)
    return rep, _status_code(rep.status)


def cmd_argmin(a):
    M = read_magma(a.magma)
    hom = None
    if a.hom_target is not None:
        if a.hom_map is None:
            raise ParseError("--hom-map is required with --hom-target", "--hom-map")
        hom = (read_magma(a.hom_target), a.hom_map)
    rep = argmin_morphism(M, _fn(a.f, M), _fn(a.g, M), hom)
    return rep, EXIT_OK if rep.holds else EXIT_FAILED


def cmd_iso_verify(a):
    M1 = read_magma(a.magma)
    M2 = read_magma(a.target) if a.target else M1
    suite = [_fn(p, M1) for p in a.suite]
    _, rep = canonical_iso(M1, M2, a.map, suite=suite, seed=a.seed)
    return rep, _status_code(rep.status)


def cmd_cancel_search(a):
    M = read_magma(a.magma)
    found = cancellation_search(M, a.grid)
    if found is None:
        return {"found": False}, EXIT_OK
    f, h, g = found
    return {"found": True, "f": f, "h": h, "g": g, "product": inf_conv(M, f, g)}, EXIT_OK


def cmd_katetov_extend(a):
    sf = subspace_from_json(load_json(a.subspace))
    return {"extension": katetov_extension(sf)}, EXIT_OK


def cmd_katetov_check(a):
    M = read_magma(a.magma)
    f = _fn(a.f, M)
    out = {"katetov": is_katetov(M, f), "lip1": is_lip1(M, f), "positive": is_positive(f)}
    if not out["katetov"]:
        return out, EXIT_INVARIANT
    code = EXIT_OK
    if a.g:
        g = _fn(a.g, M)
        rep = katetov_closure_check(M, f, g)
        if a.h:
            rep.merge(contraction_isometry_check(M, f, g, _fn(a.h, M)))
        out["report"] = rep
        code = _status_code(rep.status)
    return out, code


def cmd_katetov_units(a):
    rep = katetov_units(read_magma(a.magma))
    return rep, _status_code(rep.status)


def cmd_cyclic_conv(a):
    u = cyclic_from_json(load_json(a.u), str(a.u))
    v = cyclic_from_json(load_json(a.v), str(a.v))
    if a.p is not None and (u.p != a.p or v.p != a.p):
        raise InvariantViolation(f"sequences have periods {u.p} and {v.p}, expected {a.p}", "-p")
    w = cyclic_minplus(u, v, mode=a.mode)
    return {"result": w, "in_linf_dis": w.in_linf_dis()}, EXIT_OK


def cmd_zseq_conv(a):
    u = cofinite_from_json(load_json(a.u), str(a.u))
    v = cofinite_from_json(load_json(a.v), str(a.v))
    w = z_minplus(u, v)
    return {"result": w, "in_linf_dis": w.in_linf_dis()}, EXIT_OK


def _pl(path):
    return pl_from_json(load_json(path), str(path))


def _pl_summary(f):
    return {"function": f, "c_plus": f.c_plus, "c_minus": f.c_minus, "slopes": sorted(f.slopes()), "minimum": f.minimum()}


def cmd_pl_conv(a):
    return _pl_summary(cc.pl_infconv(_pl(a.f), _pl(a.g))), EXIT_OK


def cmd_pl_scale(a):
    return _pl_summary(cc.epi_scale(a.lam, _pl(a.f))), EXIT_OK


def cmd_pl_fixedpoint(a):
    res = cc.fixed_point_solve(a.lam, _pl(a.g), a.tol, max_iter=a.max_iter)
    code = EXIT_OK if res.residual <= a.tol and res.slopes_stable else EXIT_FAILED
    return res, code


def cmd_pl_check(a):
    # construction already enforces convexity, slope bounds and the Katetov condition
    return {**_pl_summary(_pl(a.f)), "katetov": True}, EXIT_OK


def cmd_bench_minplus(a):
    rep = bench_minplus(a.n, a.mode, seed=a.seed)
    return rep, EXIT_OK if rep.ok else EXIT_FAILED


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    common.add_argument("--output", default=argparse.SUPPRESS, help="write the report here instead of stdout")
    common.add_argument("--format", choices=["json"], default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="infconv", description="Exact inf-convolution toolkit.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)
    magma_help = "magma JSON file, or cyclic:n | dihedral:k | subtraction:n | leftproj:n | loop5"

    def leaf(parent, name, handler, help_):
        q = parent.add_parser(name, help=help_, parents=[common])
        q.set_defaults(handler=handler)
        return q

    def with_magma(q):
        q.add_argument("magma", help=magma_help)
        return q

    with_magma(leaf(sub, "classify", cmd_classify, "algebraic class of a finite law"))
    q = with_magma(leaf(sub, "invariance", cmd_invariance, "metric invariance and d-invariance constants"))
    q.add_argument("--at", type=int)
    q = with_magma(leaf(sub, "convolve", cmd_convolve, "inf-convolution of two functions"))
    q.add_argument("f")
    q.add_argument("g")
    q.add_argument("--attainment", type=int, metavar="A", help="also list minimizing pairs at A")
    q = with_magma(leaf(sub, "fond0", cmd_fond0, "strong-minimum equivalence check"))
    q.add_argument("f")
    q.add_argument("g")
    q = with_magma(leaf(sub, "unit-check", cmd_unit_check, "unit certificate for a function"))
    q.add_argument("f")
    q.add_argument("--positive", action="store_true", help="audit the nonnegative monoid")
    with_magma(leaf(sub, "closure", cmd_closure, "closure of Kuratowski functions under convolution"))
    with_magma(leaf(sub, "int2", cmd_int2, "identity and associativity probes"))
    q = with_magma(leaf(sub, "argmin", cmd_argmin, "argmin as a monoid morphism"))
    q.add_argument("f")
    q.add_argument("g")
    q.add_argument("--hom-target", help="codomain magma of a homomorphism to compose with")
    q.add_argument("--hom-map", type=_index_list, help="homomorphism as comma-separated images")
    q = with_magma(leaf(sub, "iso-verify", cmd_iso_verify, "canonical isomorphism induced by T"))
    q.add_argument("--map", type=_index_list, required=True, help="T as comma-separated images")
    q.add_argument("--target", help="codomain magma (default: same carrier)")
    q.add_argument("--suite", nargs="*", default=[], help="extra function files")
    q = with_magma(leaf(sub, "cancel-search", cmd_cancel_search, "search for a cancellation failure"))
    q.add_argument("--grid", type=_rational_list, default=[Fraction(0), Fraction(1)])

    kat = sub.add_parser("katetov", help="Katetov functions").add_subparsers(dest="katetov_cmd", required=True)
    leaf(kat, "extend", cmd_katetov_extend, "greatest 1-Lipschitz extension").add_argument("subspace")
    q = with_magma(leaf(kat, "check", cmd_katetov_check, "membership, closure and contraction checks"))
    q.add_argument("f")
    q.add_argument("g", nargs="?")
    q.add_argument("h", nargs="?")
    with_magma(leaf(kat, "units", cmd_katetov_units, "unit group of the Katetov monoid"))

    cyc = sub.add_parser("cyclic", help="sequences on Z/pZ").add_subparsers(dest="cyclic_cmd", required=True)
    q = leaf(cyc, "conv", cmd_cyclic_conv, "cyclic min-plus convolution")
    q.add_argument("-p", type=int)
    q.add_argument("u")
    q.add_argument("v")
    q.add_argument("--mode", choices=["naive", "merge", "smawk"], default="naive")

    zs = sub.add_parser("zseq", help="cofinite sequences on Z").add_subparsers(dest="zseq_cmd", required=True)
    q = leaf(zs, "conv", cmd_zseq_conv, "min-plus convolution on Z")
    q.add_argument("u")
    q.add_argument("v")

    pl = sub.add_parser("pl", help="convex Katetov functions on the line").add_subparsers(dest="pl_cmd", required=True)
    q = leaf(pl, "conv", cmd_pl_conv, "inf-convolution")
    q.add_argument("f")
    q.add_argument("g")
    q = leaf(pl, "scale", cmd_pl_scale, "epi-scaling")
    q.add_argument("--lambda", dest="lam", type=_rational, required=True)
    q.add_argument("f")
    q = leaf(pl, "fixedpoint", cmd_pl_fixedpoint, "solve (lambda * f) (+) g = f")
    q.add_argument("--lambda", dest="lam", type=_rational, required=True)
    q.add_argument("--tol", type=_rational, required=True)
    q.add_argument("--max-iter", type=int, default=10_000)
    q.add_argument("g")
    leaf(pl, "check", cmd_pl_check, "validate and summarize").add_argument("f")

    bench = sub.add_parser("bench", help="benchmarks").add_subparsers(dest="bench_cmd", required=True)
    q = leaf(bench, "minplus", cmd_bench_minplus, "min-plus kernel timing")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--mode", choices=MODES, required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    args.seed = getattr(args, "seed", DEFAULT_SEED)
    random.seed(args.seed)
    try:
        payload, code = args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HypothesisUnmet as exc:
        print(f"hypothesis unmet: {exc}", file=sys.stderr)
        return EXIT_UNMET
    except InfconvError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    text = dumps(payload)
    output = getattr(args, "output", None)
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
