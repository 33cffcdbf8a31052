"""Command-line front end.

Subcommands: matrix, simtest, classify, verify, extend, dual, graph.
Exit codes: 0 success (simtest: consistent or certified; verify: PASS),
1 refuted / FAIL, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import certificates as certs
from . import similarity as sim
from .errors import EigenvalueOneError, PetrieError
from .exact import QMatrix, charpoly, det, invariant_factors, minpoly, trace
from .extensions import RightExtensionSpec, spec_from_json
from .perms import Permutation, dual, parse_permutation
from .transition import export_digraph, petrie_matrix, reversal_matrix

SCHEMA_VERSION = sim.SCHEMA_VERSION


def default_cache_dir() -> str:
    env = os.environ.get("PETRIE_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "petrie")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", choices=("text", "json"), default="text")


def _parse_bound(text: str | None, mode: str):
    if text is None:
        return None
    if "," in text:
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad bound {text!r}")
        return (int(parts[0]), int(parts[1]))
    b = int(text)
    return (b, b) if mode == sim.TWO_SIDED else b


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="petrie",
        description="Exact similarity analysis of permutations through their "
        "interval transition matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="print the transition matrix and its invariants")
    p.add_argument("perm", help="image list like '3 1 4 5 2' or cycles like '(3 4 5)@5'")
    p.add_argument("--minpoly", action="store_true", help="also print the minimal "
                   "polynomial and invariant factors")
    _common(p)

    p = sub.add_parser("simtest", help="bounded similarity check of a pair")
    p.add_argument("sigma")
    p.add_argument("rho")
    p.add_argument("--mode", choices=sim.MODES, default=sim.RIGHT)
    p.add_argument("--weak", action="store_true", help="compare characteristic "
                   "polynomials instead of full similarity")
    p.add_argument("--bound", help="extension size bound: N, or M,N for two-sided")
    _common(p)

    p = sub.add_parser("classify", help="candidate classes of a full symmetric group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=sim.MODES, default=sim.RIGHT)
    p.add_argument("--weak", action="store_true")
    p.add_argument("--bound")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--fresh", action="store_true", help="ignore any cached report")
    _common(p)

    p = sub.add_parser("verify", help="build and check a certificate-family witness")
    p.add_argument("--theorem", type=int, required=True, choices=(5, 7, 9, 10, 12, 13))
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--sigma", help="base permutation (family 5)")
    p.add_argument("--rho", help="base permutation (family 5)")
    p.add_argument("--mu", help="permutation text (family 9)")
    p.add_argument("--witness", help="base witness rows as JSON (family 5)")
    p.add_argument("--assert-base-similar", action="store_true",
                   help="also require the bare pair matrices to be similar")
    _common(p)

    p = sub.add_parser("extend", help="apply an extension spec to a base permutation")
    p.add_argument("base")
    p.add_argument("--spec", required=True, help='e.g. {"kind":"right","filler":[5],"slot":5}')
    _common(p)

    p = sub.add_parser("dual", help="mirror permutation i -> n+1 - p(n+1-i)")
    p.add_argument("perm")
    _common(p)

    p = sub.add_parser("graph", help="DOT digraph of the interval covering relation")
    p.add_argument("perm")
    _common(p)

    return parser


def _emit(data: dict, args) -> None:
    if args.output == "json":
        print(json.dumps(data, indent=2, sort_keys=True, default=str))


def cmd_matrix(args) -> int:
    p = parse_permutation(args.perm)
    m = petrie_matrix(p)
    cp = charpoly(m)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "permutation": list(p.images),
        "matrix": m.to_json(),
        "determinant": det(m),
        "trace": trace(m),
        "charpoly": {"text": str(cp), "coeffs": cp.to_json()},
    }
    if args.minpoly:
        mp = minpoly(m)
        payload["minpoly"] = {"text": str(mp), "coeffs": mp.to_json()}
        payload["invariant_factors"] = [
            {"text": str(f), "coeffs": f.to_json()} for f in invariant_factors(m)
        ]
    if args.output == "json":
        _emit(payload, args)
        return 0
    print(m)
    print(f"det: {payload['determinant']}")
    print(f"trace: {payload['trace']}")
    print(f"charpoly: {cp}")
    if args.minpoly:
        print(f"minpoly: {payload['minpoly']['text']}")
        print("invariant factors: " + ", ".join(f["text"] for f in payload["invariant_factors"]))
    return 0


def cmd_simtest(args) -> int:
    a, b = parse_permutation(args.sigma), parse_permutation(args.rho)
    strength = sim.WEAKLY_SIMILAR if args.weak else sim.SIMILAR
    bound = _parse_bound(args.bound, args.mode)
    verdict = sim.check_pair(a, b, args.mode, strength, bound)
    if args.output == "json":
        _emit(verdict.to_json(), args)
    else:
        print(f"{verdict.outcome}: {a.image_string()} vs {b.image_string()} "
              f"[{args.mode}, {strength}, bound {sim.bound_label(verdict.bound)}]")
        print(f"base matrices: charpoly_equal={verdict.base['charpoly_equal']} "
              f"similar={verdict.base['similar']}")
        if verdict.witness is not None:
            w = verdict.witness
            print(f"witness: size {w['size']}, spec {json.dumps(w['spec'])}")
            print(f"discriminator {w['discriminator']}: "
                  f"{w['value_sigma']} vs {w['value_rho']}")
            print("replay: petrie extend '" + a.image_string() + "' --spec '"
                  + json.dumps(w["spec"]) + "'  (and the same spec on the second "
                  "permutation), then petrie matrix on both outputs")
        if verdict.certificate is not None:
            print(f"certificate: {json.dumps(verdict.certificate, default=str)}")
    return 1 if verdict.refuted else 0


def cmd_classify(args) -> int:
    strength = sim.WEAKLY_SIMILAR if args.weak else sim.SIMILAR
    mode = args.mode
    bound = _parse_bound(args.bound, mode)
    _, _, bound = sim._normalize(mode, strength, bound)
    cache_dir = args.cache_dir or default_cache_dir()
    path = sim.report_cache_path(cache_dir, args.n, mode, strength, bound)
    report = None if args.fresh else sim.load_cached_report(path)
    fresh = report is None
    if report is None:
        report = sim.classify(args.n, mode, strength, bound, jobs=args.jobs)
        sim.store_report(path, report)
    if args.output == "json":
        print(report.dumps(), end="")
        return 0
    print(f"S_{args.n} {mode} {strength} bound {sim.bound_label(bound)} "
          f"({'computed' if fresh else 'cached'}: {path})")
    nontrivial = report.nontrivial_classes()
    if not nontrivial:
        print("no nontrivial classes")
    for cls, flag in zip(report.classes, report.candidate_flags):
        if len(cls) == 1:
            continue
        names = ", ".join(Permutation(p).cycle_string() for p in cls)
        print(("candidate class: " if flag else "certified class: ") + "{" + names + "}")
    print(f"refuted pairs: {len(report.refutations)}")
    return 0


def _verify_payload(witness: certs.ConjugacyWitness, extra: dict | None = None) -> dict:
    data = witness.to_json()
    if extra:
        data.update(extra)
    return data


def cmd_verify(args) -> int:
    out: dict
    try:
        if args.theorem == 7:
            if args.m is None:
                raise ValueError("--m is required for --theorem 7")
            n = args.n or 0
            s = args.s if args.s is not None else 1
            t = args.t if args.t is not None else (args.m + 5 if n >= 1 else None)
            sigma, rho, wit = certs.build_thm7(args.m, n, s, t)
            out = _verify_payload(wit)
        elif args.theorem == 9:
            if args.k is None:
                raise ValueError("--k is required for --theorem 9")
            k = args.k
            n = args.n if args.n is not None else 3
            if args.mu:
                mu = parse_permutation(args.mu)
            else:
                imgs = [0] * (k + n)
                imgs[0] = k
                for i in range(2, k):
                    imgs[i - 1] = i - 1
                imgs[k - 1] = k + 1
                rest = sorted(set(range(1, k + n + 1)) - set(v for v in imgs if v))
                for pos, val in zip(range(k + 1, k + n + 1), rest):
                    imgs[pos - 1] = val
                mu = Permutation(tuple(imgs))
            basis = certs.build_lemma9_basis(mu, k)
            out = {
                "schema_version": SCHEMA_VERSION,
                "theorem": 9,
                "params": {"k": k, "mu": list(mu.images)},
                "basis": [[str(c) for c in v.coords] for v in basis.vectors],
                "determinant": str(basis.determinant()),
                "verified": True,
            }
        elif args.theorem == 10:
            if args.j is None or args.k is None:
                raise ValueError("--j and --k are required for --theorem 10")
            j, k = args.j, args.k
            s = args.s if args.s is not None else 1
            c = args.c if args.c is not None else j - 1
            lows = sorted(v for v in range(1, j) if v != c)
            n = args.n if args.n is not None else 1
            t = args.t if args.t is not None else k + 1
            spec = RightExtensionSpec(k, _identity_perm(n), t)
            _, _, wit = certs.build_thm10(j, k, s, c, lows, spec)
            out = _verify_payload(wit)
        elif args.theorem == 12:
            if args.k is None:
                raise ValueError("--k is required for --theorem 12")
            k = args.k
            n = args.n if args.n is not None else (0 if k == 5 else 1)
            spec = None
            if n >= 1:
                t = args.t if args.t is not None else k + 1
                spec = RightExtensionSpec(k, _identity_perm(n), t)
            alpha, theta, wit = certs.build_thm12(k, n, spec)
            extra = {}
            if args.assert_base_similar:
                from .exact import similar
                from .perms import family_thm12
                a0, t0 = family_thm12(k)
                base_ok = similar(petrie_matrix(a0), petrie_matrix(t0))
                extra["base_similar"] = base_ok
                if not base_ok:
                    out = _verify_payload(wit, extra)
                    _print_verify(out, args, ok=False)
                    return 1
            out = _verify_payload(wit, extra)
        elif args.theorem == 13:
            if args.k is None:
                raise ValueError("--k is required for --theorem 13")
            k = args.k
            n = args.n if args.n is not None else 1
            t = args.t if args.t is not None else k + 1
            spec = RightExtensionSpec(k, _identity_perm(n), t)
            _, _, wit = certs.build_thm13(k, n, spec)
            out = _verify_payload(wit)
        elif args.theorem == 5:
            if not args.sigma or not args.rho:
                raise ValueError("--sigma and --rho are required for --theorem 5")
            sigma, rho = parse_permutation(args.sigma), parse_permutation(args.rho)
            m = args.m or 0
            n = args.n if args.n is not None else (0 if m >= 1 else 1)
            head = _identity_perm(m) if m >= 1 else None
            tail = _identity_perm(n) if n >= 1 else None
            if args.witness:
                g = QMatrix.from_json(json.loads(args.witness))
            elif sigma == rho:
                g = QMatrix.identity(sigma.degree - 1)
            elif rho == dual(sigma):
                g = reversal_matrix(sigma.degree - 1).to_q()
            else:
                # no witness in hand; the eigenvalue obstruction is still
                # decidable and is the interesting failure mode
                mr = petrie_matrix(rho)
                shifted = [[mr.rows[i][jj] - (1 if i == jj else 0) for jj in range(mr.dim)]
                           for i in range(mr.dim)]
                from .exact import IntMatrix
                if det(IntMatrix(tuple(tuple(r) for r in shifted))) == 0:
                    raise EigenvalueOneError(
                        "1 is an eigenvalue of the base transition matrix; lifting unavailable")
                raise ValueError("--witness is required when no built-in witness applies")
            _, _, wit = certs.lift_thm5(sigma, rho, g, head, tail)
            out = _verify_payload(wit)
        else:  # pragma: no cover
            raise ValueError(f"unknown certificate family {args.theorem}")
    except EigenvalueOneError as exc:
        if args.output == "json":
            _emit({"schema_version": SCHEMA_VERSION, "theorem": args.theorem,
                   "verified": False, "error": "eigenvalue-1", "detail": str(exc)}, args)
        else:
            print(f"FAIL: eigenvalue-1: {exc}")
        return 1
    _print_verify(out, args, ok=True)
    return 0


def _print_verify(payload: dict, args, ok: bool) -> None:
    if args.output == "json":
        _emit(payload, args)
    else:
        print(("PASS" if ok and payload.get("verified") else "FAIL")
              + f": family {payload.get('theorem')} "
              + json.dumps(payload.get("params", {}), default=str))


def _identity_perm(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def cmd_extend(args) -> int:
    base = parse_permutation(args.base)
    spec = spec_from_json(json.loads(args.spec))
    from .extensions import apply_spec

    ext = apply_spec(base, spec)
    if args.output == "json":
        _emit({"schema_version": SCHEMA_VERSION, "images": list(ext.images),
               "cycles": ext.cycle_string()}, args)
    else:
        print(ext.cycle_string())
    return 0


def cmd_dual(args) -> int:
    p = parse_permutation(args.perm)
    d = dual(p)
    if args.output == "json":
        _emit({"schema_version": SCHEMA_VERSION, "images": list(d.images),
               "cycles": d.cycle_string()}, args)
    else:
        print(d.cycle_string())
    return 0


def cmd_graph(args) -> int:
    p = parse_permutation(args.perm)
    print(export_digraph(p), end="")
    return 0


_COMMANDS = {
    "matrix": cmd_matrix,
    "simtest": cmd_simtest,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "extend": cmd_extend,
    "dual": cmd_dual,
    "graph": cmd_graph,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (PetrieError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
