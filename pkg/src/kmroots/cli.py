"""Command-line interface.

Exit codes: 0 success (or condition (*) holds), 1 verified failure
(condition (*) fails, catalog mismatch), 2 error (bad input, budget
exceeded).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog as catalog_io
from .classify import (
    build_hasse,
    find_subsystems,
    lookup_class,
    system_id,
    verify_catalog,
)
from .coset import coxeter_presentation, reflection_word, todd_coxeter
from .diagrams import CoxeterDiagram, classify_diagram, classify_type, enumerate_hyperbolic_simplex_diagrams, is_hyperbolic
from .dsl import one_line, parse_diagram, parse_gcm, parse_roots
from .dynkin import enumerate_dynkin
from .emit import emit_dot, emit_json
from .config import ConfigError, load_settings
from .errors import Exceeded, KmRootsError
from .lattice import Lattice, lattice_index
from .roots import real_roots_up_to_height, sorted_roots
from .subsystem import Embedding, check_star_bounded, is_minimal, star_exact, tile

OK, FAILED, ERROR = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _fmt(v) -> str:
    return " ".join(str(x) for x in v)


def _embedding(args) -> Embedding:
    A = parse_gcm(_read(args.ambient))
    roots = parse_roots(_read(args.roots))
    return Embedding(A, tuple(roots))


def cmd_classify_type(args, settings, out) -> int:
    obj = parse_diagram(_read(args.file))
    t = classify_diagram(obj) if isinstance(obj, CoxeterDiagram) else classify_type(obj)
    out.write(f"type: {t.tag}\n")
    out.write(f"indecomposable: {str(t.indecomposable).lower()}\n")
    out.write(f"symmetrizable: {str(t.symmetrizable).lower()}\n")
    out.write(f"hyperbolic: {str(t.hyperbolic).lower()}\n")
    return OK


def cmd_enum_simplices(args, settings, out) -> int:
    found = enumerate_hyperbolic_simplex_diagrams(args.rank)
    for D in found:
        out.write(one_line(D) + "\n")
    out.write(f"# {len(found)} diagrams\n")
    return OK


def cmd_enum_dynkin(args, settings, out) -> int:
    D = parse_diagram(_read(args.file), kind="coxeter")
    found = enumerate_dynkin(D, up_to_automorphism=args.up_to_automorphism)
    for A in found:
        out.write(one_line(A) + "\n")
    out.write(f"# {len(found)} root systems\n")
    return OK


def cmd_roots(args, settings, out) -> int:
    A = parse_gcm(_read(args.file))
    H = args.height or settings["height"]
    roots = sorted_roots(real_roots_up_to_height(A, H))
    for r in roots:
        out.write(_fmt(r) + "\n")
    out.write(f"# {len(roots)} positive real roots of height <= {H}\n")
    return OK


def cmd_star_check(args, settings, out) -> int:
    e = _embedding(args)
    H = args.height or settings["height"]
    v = check_star_bounded(e, H)
    out.write(v.status + "\n")
    return OK if v.holds else FAILED


def cmd_lattice_index(args, settings, out) -> int:
    e = _embedding(args)
    out.write(f"{lattice_index(e.sub_lattice, Lattice.standard(e.ambient.n_plus_1))}\n")
    return OK


def cmd_coset_index(args, settings, out) -> int:
    A = parse_gcm(_read(args.ambient))
    roots = parse_roots(_read(args.roots))
    max_cosets = args.max_cosets or settings["max_cosets"]
    words = [reflection_word(A, r) for r in roots]
    out.write(f"{todd_coxeter(coxeter_presentation(A), words, max_cosets)}\n")
    return OK


def cmd_find_subsystems(args, settings, out) -> int:
    A = parse_gcm(_read(args.file))
    if not is_hyperbolic(A):
        raise KmRootsError("ambient matrix is not hyperbolic")
    H = args.height or settings["height"]
    found = find_subsystems(A, H)
    for e in found:
        t = tile(e)
        holds = star_exact(e, t)[0]
        cls = lookup_class(e, H)
        extra = ""
        if cls is not None and not cls.minimal and holds:
            extra = " tower" if cls.holding_chain else " no-holding-chain"
        out.write(
            f"{system_id(e.induced)} index={t.index} lattice={e.lattice_index} "
            f"minimal={str(is_minimal(e, t)).lower()} star={'holds' if holds else 'fails'}{extra} "
            f"roots=[{'; '.join(_fmt(r) for r in e.sub_roots)}]\n"
        )
    out.write(f"# {len(found)} subsystems, complete up to height {H} among one-facet replacements and their compositions\n")
    return OK


def cmd_verify_catalog(args, settings, out) -> int:
    records = catalog_io.load_catalog(args.catalog)
    bad = 0
    for k, rec in enumerate(records):
        rep = verify_catalog(rec, settings["height"], args.max_cosets or settings["max_cosets"])
        status = "ok" if rep.ok else "MISMATCH"
        out.write(f"[{k}] {rec.provenance}: {status}\n")
        if not rep.ok or args.verbose:
            for line in rep.lines():
                out.write(f"    {line}\n")
        bad += not rep.ok
    out.write(f"# {len(records) - bad}/{len(records)} records verified\n")
    return OK if bad == 0 else FAILED


def cmd_emit_hasse(args, settings, out) -> int:
    records = catalog_io.load_catalog(args.catalog)
    g = build_hasse(records)
    out.write(emit_dot(g) if args.out == "dot" else emit_json(g))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kmroots", description="Hyperbolic Kac-Moody root systems and their subsystems.")
    p.add_argument("--config", help="key = value settings file (default: ./kmroots.toml if present)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify-type", help="finite/affine/indefinite type of a diagram or Cartan matrix")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify_type)

    s = sub.add_parser("enum-simplices", help="hyperbolic Coxeter simplex diagrams of a given rank")
    s.add_argument("--rank", type=int, required=True)
    s.set_defaults(func=cmd_enum_simplices)

    s = sub.add_parser("enum-dynkin", help="root-length assignments of a Coxeter diagram")
    s.add_argument("file")
    s.add_argument("--up-to-automorphism", action="store_true")
    s.set_defaults(func=cmd_enum_dynkin)

    s = sub.add_parser("roots", help="positive real roots up to a height")
    s.add_argument("file")
    s.add_argument("--height", type=int)
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("star-check", help="condition (*) on real roots up to a height")
    s.add_argument("ambient")
    s.add_argument("roots")
    s.add_argument("--height", type=int)
    s.set_defaults(func=cmd_star_check)

    s = sub.add_parser("lattice-index", help="index of the sublattice spanned by the roots")
    s.add_argument("ambient")
    s.add_argument("roots")
    s.set_defaults(func=cmd_lattice_index)

    s = sub.add_parser("coset-index", help="index of the reflection subgroup (Todd-Coxeter)")
    s.add_argument("ambient")
    s.add_argument("roots")
    s.add_argument("--max-cosets", type=int)
    s.set_defaults(func=cmd_coset_index)

    s = sub.add_parser("find-subsystems", help="maximal rank hyperbolic subsystems up to a height")
    s.add_argument("file")
    s.add_argument("--height", type=int)
    s.set_defaults(func=cmd_find_subsystems)

    s = sub.add_parser("verify-catalog", help="recompute every record of a catalog")
    s.add_argument("catalog")
    s.add_argument("--max-cosets", type=int)
    s.add_argument("-v", "--verbose", action="store_true")
    s.set_defaults(func=cmd_verify_catalog)

    s = sub.add_parser("emit-hasse", help="Hasse graph of a catalog as DOT or JSON")
    s.add_argument("catalog")
    s.add_argument("--out", choices=("dot", "json"), default="dot")
    s.set_defaults(func=cmd_emit_hasse)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else ERROR
    try:
        settings = load_settings(args.config)
    except (OSError, ConfigError) as exc:
        err.write(f"error: config: {exc}\n")
        return ERROR
    for key in ("height", "max_cosets"):
        value = getattr(args, key, None)
        if value is not None and value < 1:
            err.write(f"error: --{key.replace('_', '-')} must be positive\n")
            return ERROR
    try:
        return args.func(args, settings, out)
    except Exceeded as exc:
        err.write(f"error: {exc}\n")
        return ERROR
    except (KmRootsError, OSError, ValueError, KeyError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return ERROR


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
