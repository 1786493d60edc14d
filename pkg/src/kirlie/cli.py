"""Command-line front end: ``kirlie <command> [input] [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import catalog as cat
from .coadjoint import stabilizer
from .decompose import full_decomposition
from .documents import (
    DocumentError,
    algebra_to_obj,
    dumps_algebra,
    loads_algebra,
    loads_matrix,
    loads_omega,
    loads_psi,
    omega_to_obj,
    psi_to_obj,
)
from .exactlin import FieldSpec
from .extend import central_extension, extract_cocycle, gl_action, psi_to_algebra, validate_cocycle
from .report import analyze, decomposition_summary, emit, kirillov_summary, render_text, span_labels

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _field(tag: Optional[str]) -> FieldSpec:
    try:
        return FieldSpec.parse(tag or "Q")
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _algebra(args):
    if getattr(args, "catalog", None):
        try:
            return cat.catalog(args.catalog, _field(args.field))
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    if not getattr(args, "input", None):
        raise InputError("give an algebra document path or --catalog NAME")
    return loads_algebra(_read(args.input))


def _dump(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2) + "\n"
    return render_text(obj)


def cmd_analyze(args) -> str:
    return emit(analyze(_algebra(args)), args.format).decode()


def cmd_decompose(args) -> str:
    g = _algebra(args)
    tree = full_decomposition(g)
    out = decomposition_summary(g, tree)
    out["warnings"] = list(tree.warnings)
    return _dump(out, args.format)


def cmd_kirillov(args) -> str:
    return _dump(kirillov_summary(_algebra(args)), args.format)


def cmd_coadjoint(args) -> str:
    g = _algebra(args)
    if args.xi is None:
        raise InputError("--xi is required")
    parts = [p.strip() for p in args.xi.split(",")]
    if len(parts) != g.dim:
        raise InputError(f"--xi needs {g.dim} comma-separated scalars")
    try:
        xi = [g.field(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad --xi value: {exc}") from None
    rep = stabilizer(g, xi)
    out = {
        "xi": [g.field.format(x) for x in xi],
        "stabilizer": span_labels(g, rep.stabilizer),
        "orbit_dim": rep.orbit_dim,
        "flat_at_xi": rep.is_flat_at_xi,
    }
    return _dump(out, args.format)


def cmd_extend(args) -> str:
    g0 = _algebra(args)
    if args.cocycle is None:
        ex = extract_cocycle(g0)
        out = {"quotient": algebra_to_obj(ex.g0), **omega_to_obj(ex.omega, g0.field)}
        return json.dumps(out, indent=2) + "\n"
    omega = loads_omega(_read(args.cocycle), g0.dim, g0.field)
    rep = validate_cocycle(g0, omega)
    if not rep.is_cocycle:
        raise InputError(f"cocycle identity fails on basis triple {rep.failing_triple}")
    g = central_extension(g0, omega)
    return dumps_algebra(g)


def cmd_psi(args) -> str:
    psi = loads_psi(_read(args.input))
    if args.action:
        gmat = loads_matrix(_read(args.action), psi.field)
        psi = gl_action(gmat, psi)
        if args.format == "json":
            return json.dumps(psi_to_obj(psi), indent=2) + "\n"
    return dumps_algebra(psi_to_algebra(psi))


def cmd_catalog(args) -> str:
    if args.show:
        try:
            return dumps_algebra(cat.catalog(args.show, _field(args.field)))
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    return "\n".join(cat.catalog_list()) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kirlie", description="Exact structure analysis of nilpotent Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def algebra_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", nargs="?", help="algebra document ('-' for stdin)")
        sp.add_argument("-c", "--catalog", metavar="NAME", help="use a built-in algebra")
        sp.add_argument("--field", metavar="TAG", help="field for --catalog (Q or Fp:<p>)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.set_defaults(func=func)
        return sp

    algebra_cmd("analyze", cmd_analyze, "full report")
    algebra_cmd("decompose", cmd_decompose, "Heisenberg and semidirect splitting")
    algebra_cmd("kirillov", cmd_kirillov, "dual bases X, Y, Z")
    sp = algebra_cmd("coadjoint", cmd_coadjoint, "stabilizer of a functional")
    sp.add_argument("--xi", metavar="A,B,...", help="functional coefficients")
    sp = algebra_cmd("extend", cmd_extend, "central extension by a cocycle, or extract one")
    sp.add_argument("--cocycle", metavar="FILE", help="cocycle document")

    sp = sub.add_parser("psi", help="algebra of a skew map psi")
    sp.add_argument("input", help="psi document")
    sp.add_argument("--action", metavar="FILE", help="matrix document; act on psi first")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_psi)

    sp = sub.add_parser("catalog", help="built-in algebras")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--show", metavar="NAME")
    sp.add_argument("--field", metavar="TAG")
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except (InputError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:  # library precondition errors on valid documents
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
