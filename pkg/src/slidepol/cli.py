"""Command-line surface.

Every command is deterministic given its flags, input files and seed.
Exit codes: 0 success or property holds, 1 property violated with a
counterexample emitted, 2 usage or format error, 3 a size cap was
exceeded fatally.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bier import bier_murai_ideal, bm_complex, sphere_certificate
from .core import (
    CapExceededError,
    MonomialIdeal,
    UnitIdealError,
    Vec,
    grid_ring,
    lcm_join,
    make_ring,
    ones_vec,
    vjoin,
)
from .duality import alexander_dual
from .functors import (
    compress,
    contract_ideal,
    copolarize,
    depolarize,
    inflate,
    polarize,
    slide_ideal,
)
from .harness import HarnessConfig, verify_suite
from .homalg import (
    as_ideal_module,
    as_quotient_module,
    associated_primes,
    depth_dim,
    has_linear_quotients,
    multigraded_betti,
    ring_properties,
    standard_pairs,
)
from .ideal_io import (
    ParseError,
    document_to_ideal,
    dumps_document,
    ideal_to_document,
    loads_document,
    parse_ideal,
    render_ideal,
)
from .stanley import sdepth_exact

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(ValueError):
    pass


def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _add_ideal_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ideal", help="path to a JSON ideal document")
    p.add_argument("--gens", help="generator list, e.g. 'x*y*z, x*w, y*w'")
    p.add_argument("--vars", help="comma-separated variable names")
    p.add_argument("--grid", help="comma-separated slot counts (grid ring)")


def _load_ideal(args) -> tuple[MonomialIdeal, Vec | None]:
    if args.ideal:
        with open(args.ideal, encoding="utf-8") as fh:
            return document_to_ideal(loads_document(fh.read()))
    if args.gens is None or args.vars is None:
        raise UsageError("provide --ideal FILE or both --vars and --gens")
    names = tuple(v.strip() for v in args.vars.split(","))
    if args.grid:
        ring = grid_ring(names, _csv_ints(args.grid))
    else:
        ring = make_ring(names)
    return parse_ideal(args.gens, ring), None


def _default_a(ideal: MonomialIdeal, a: Vec | None) -> Vec:
    if a is not None:
        return a
    base = lcm_join(ideal) if not ideal.is_zero else ones_vec(ideal.ring.n)
    return vjoin(base, ones_vec(ideal.ring.n))


def _emit_ideal(ideal: MonomialIdeal, args, extra: dict | None = None) -> None:
    if args.format == "json":
        doc = ideal_to_document(ideal)
        if extra:
            doc.update(extra)
        sys.stdout.write(dumps_document(doc))
    else:
        print(render_ideal(ideal))
        if extra:
            for key, value in extra.items():
                print(f"{key}: {value}")


def _emit(data: dict, args) -> None:
    if args.format == "json":
        sys.stdout.write(dumps_document(data))
    else:
        for key, value in data.items():
            print(f"{key}: {value}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slidepol",
        description="exact monomial-ideal toolkit: slides, polarization, duality, "
        "Stanley depth and sphere certificates",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name: str, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        _add_ideal_args(p)
        return p

    p = cmd("slide", help="apply the slide along an axis at a threshold")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)

    p = cmd("contract", help="inverse slide")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)

    cmd("compress", help="remove exponent gaps; prints the rebuild script")

    p = cmd("polarize", help="polarize into a grid ring")
    p.add_argument("--a", help="determining vector (default: lcm join, at least 1)")
    p.add_argument("--reversed", action="store_true", help="fill slots from the top")

    cmd("depolarize", help="identify all slots of each axis")

    p = cmd("inflate", help="1-vertex inflation at a (grid) variable")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, default=1)

    p = cmd("dual", help="Alexander dual w.r.t. a determining vector")
    p.add_argument("--a")

    p = cmd("betti", help="multigraded Betti table")
    p.add_argument("--module", choices=("ideal", "quotient"), default="quotient")
    p.add_argument("--char", type=int, default=0)

    for name in ("depth", "dim"):
        p = cmd(name, help="depth / projective dimension / Krull dimension")
        p.add_argument("--module", choices=("ideal", "quotient"), default="quotient")
        p.add_argument("--char", type=int, default=0)

    cmd("ass", help="associated primes of the quotient")

    cmd("pairs", help="standard pairs, arithmetic degree, degree, dimension")

    p = cmd("props", help="Cohen-Macaulay / Gorenstein / sequentially CM flags")
    p.add_argument("--char", type=int, default=0)

    cmd("linquot", help="search for a linear-quotients generator order")

    p = cmd("sdepth", help="exact Stanley depth with a witness decomposition")
    p.add_argument("--module", choices=("ideal", "quotient"), default="quotient")

    p = cmd("bm", help="sphere ideal of a determined ideal")
    p.add_argument("--a")
    p.add_argument("--certify", action="store_true")

    p = sub.add_parser("verify", help="run a theorem-verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--max-exp", type=int, default=2)
    p.add_argument("--max-gens", type=int, default=4)
    p.add_argument("--max-box", type=int, default=10**6)
    p.add_argument("--max-poset", type=int, default=4096)
    p.add_argument("--max-vertices", type=int, default=24)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--max-skip-ratio", type=float, default=0.5)
    return parser


def _run(args) -> int:
    if args.command == "verify":
        cfg = HarnessConfig(
            suite=args.suite,
            trials=args.trials,
            seed=args.seed,
            n=args.n,
            max_exp=args.max_exp,
            max_gens=args.max_gens,
            box_cap=args.max_box,
            poset_cap=args.max_poset,
            vertex_cap=args.max_vertices,
            char=args.char,
            max_skip_ratio=args.max_skip_ratio,
        )
        try:
            report = verify_suite(cfg)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if args.format == "json":
            sys.stdout.write(dumps_document(report.to_dict()))
        else:
            status = "ok" if report.ok else "VIOLATED"
            print(
                f"suite {report.suite}: {status} "
                f"({report.completed}/{report.trials} trials, {report.skipped} skipped, "
                f"{len(report.violations)} violations, {len(report.findings)} findings, "
                f"{report.elapsed_s:.2f}s)"
            )
            for v in report.violations:
                print(f"  violation: {json.dumps(v, sort_keys=True)}")
            for f in report.findings:
                print(f"  finding: {json.dumps(f, sort_keys=True)}")
        return EXIT_OK if report.ok else EXIT_VIOLATED

    ideal, doc_a = _load_ideal(args)
    if args.command == "slide":
        _emit_ideal(slide_ideal(ideal, args.i, args.j), args)
    elif args.command == "contract":
        _emit_ideal(contract_ideal(ideal, args.i, args.j), args)
    elif args.command == "compress":
        core_ideal, script = compress(ideal)
        _emit_ideal(core_ideal, args, {"script": [[op.axis, op.threshold] for op in script]})
    elif args.command == "polarize":
        a = _csv_ints(args.a) if args.a else _default_a(ideal, doc_a)
        out = copolarize(ideal, a) if args.reversed else polarize(ideal, a)
        _emit_ideal(out, args)
    elif args.command == "depolarize":
        _emit_ideal(depolarize(ideal), args)
    elif args.command == "inflate":
        _emit_ideal(inflate(ideal, args.i, args.j), args)
    elif args.command == "dual":
        a = _csv_ints(args.a) if args.a else _default_a(ideal, doc_a)
        _emit_ideal(alexander_dual(ideal, a), args)
    elif args.command == "betti":
        mk = as_ideal_module if args.module == "ideal" else as_quotient_module
        bt = multigraded_betti(mk(ideal), args.char)
        entries = [
            {"index": l, "degree": list(b), "rank": r}
            for (l, b), r in sorted(bt.entries.items())
        ]
        _emit({"betti": entries, "by_index": bt.by_index()}, args)
    elif args.command in ("depth", "dim"):
        mk = as_ideal_module if args.module == "ideal" else as_quotient_module
        dd = depth_dim(mk(ideal), args.char)
        _emit({"depth": dd.depth, "projdim": dd.projdim, "dim": dd.dim}, args)
    elif args.command == "ass":
        primes = associated_primes(ideal)
        names = ideal.ring.names
        rendered = sorted(sorted(names[k - 1] for k in p) for p in primes)
        _emit({"associated_primes": rendered}, args)
    elif args.command == "pairs":
        sp = standard_pairs(ideal)
        names = ideal.ring.names
        rendered = [
            {"base": list(p.base), "free": sorted(names[k - 1] for k in p.free)}
            for p in sp.pairs
        ]
        _emit({"pairs": rendered, "adeg": sp.adeg, "deg": sp.deg, "dim": sp.dim}, args)
    elif args.command == "props":
        props = ring_properties(ideal, args.char)
        _emit(
            {
                "cohen_macaulay": props.cohen_macaulay,
                "gorenstein": props.gorenstein,
                "seq_cm": props.seq_cm,
            },
            args,
        )
    elif args.command == "linquot":
        ok, order = has_linear_quotients(ideal)
        rendered = [list(g) for g in order] if order else None
        _emit({"linear_quotients": ok, "order": rendered}, args)
    elif args.command == "sdepth":
        mk = as_ideal_module if args.module == "ideal" else as_quotient_module
        value, witness = sdepth_exact(mk(ideal))
        spaces = [
            {"degree": list(s.degree), "free": sorted(s.free)} for s in witness.spaces
        ]
        _emit({"sdepth": value, "witness": spaces}, args)
    elif args.command == "bm":
        a = _csv_ints(args.a) if args.a else _default_a(ideal, doc_a)
        sphere = bier_murai_ideal(ideal, a)
        extra = None
        if args.certify:
            cert = sphere_certificate(bm_complex(ideal, a), sum(a) - 2)
            extra = {
                "certificate": {
                    "vertex_count": cert.vertex_count,
                    "dimension": cert.dimension,
                    "f_vector": list(cert.f_vector),
                    "pure": cert.pure,
                    "pseudomanifold": cert.pseudomanifold,
                    "euler_reduced": cert.euler_reduced,
                    "homology": list(cert.homology),
                    "verdict": cert.verdict,
                }
            }
        _emit_ideal(sphere, args, extra)
    else:
        raise UsageError(f"unknown command {args.command!r}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _run(args)
    except (UsageError, ParseError, UnitIdealError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
