"""Command-line surface with machine-readable, byte-stable output.

Exit codes: 0 success, 1 usage or input errors, 2 a mathematical
verification failed (the witness is printed).  All JSON is emitted with
sorted keys and deterministic list ordering so identical invocations are
byte-identical.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import picard, roots, chevalley, curves, deform, genpos

USAGE_ERROR = 1
VERIFY_ERROR = 2


def _emit(payload, out) -> None:
    out.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")


def _load_json(path):
    with open(path) as f:
        return json.load(f)


def _resolve_out(path: str) -> str:
    if os.path.isabs(path):
        return path
    base = os.environ.get("ADELATTICE_OUT", "")
    return os.path.join(base, path) if base else path


def _finite_algebra(type_name: str) -> chevalley.ChevalleyAlgebra:
    return chevalley.ChevalleyAlgebra(roots.standard_root_system(type_name))


def cmd_roots_enumerate(args, out) -> int:
    if args.type:
        rs = roots.standard_root_system(args.type)
        _emit(rs.to_json(), out)
        return 0
    if args.n is None:
        raise ValueError("need --type or --n")
    if args.n == 9:
        if args.cap is None:
            raise ValueError("enumeration on the nine-point lattice needs --cap")
        ars = roots.enumerate_affine_real_roots(9, args.cap)
        _emit(ars.to_json(), out)
        return 0
    rs = roots.enumerate_en_roots(args.n)
    _emit(rs.to_json(), out)
    return 0


def cmd_diagram_classify(args, out) -> int:
    matrix = _load_json(args.matrix)
    report = roots.classify_diagram(matrix)
    _emit(report.to_json(), out)
    return 0


def cmd_chevalley_table(args, out) -> int:
    alg = _finite_algebra(args.type)
    if args.format == "tsv":
        text = alg.to_tsv()
        if args.export:
            with open(_resolve_out(args.export), "w") as f:
                f.write(text)
        else:
            out.write(text)
        return 0
    payload = alg.to_json()
    if args.export:
        with open(_resolve_out(args.export), "w") as f:
            json.dump(payload, f, sort_keys=True, separators=(",", ":"))
            f.write("\n")
    else:
        _emit(payload, out)
    return 0


def cmd_chevalley_verify(args, out) -> int:
    alg = _finite_algebra(args.type)
    if args.suite == "jacobi":
        witness = chevalley.jacobi_witness_finite(alg)
        if witness is None and args.affine_levels:
            aff = chevalley.jacobi_witness_affine_sampled(
                alg, max_level=args.affine_levels, samples=args.samples, seed=args.seed
            )
            if aff is not None:
                x, y, z, total = aff
                witness = ("affine sample", str(x), str(y), str(z))
        if witness is not None:
            _emit({"suite": "jacobi", "type": args.type, "passed": False,
                   "seed": args.seed, "witness": list(witness)}, out)
            return VERIFY_ERROR
        _emit({"suite": "jacobi", "type": args.type, "passed": True, "seed": args.seed}, out)
        return 0
    if args.suite == "killing":
        m2 = 2 * alg.dual_coxeter()
        for i in range(alg.dim):
            for j in range(alg.dim):
                lemma = alg.killing_basis(i, j)
                trace = alg.killing_trace({i: 1}, {j: 1})
                if lemma != trace:
                    _emit({"suite": "killing", "type": args.type, "passed": False,
                           "seed": args.seed,
                           "witness": {"x": alg.label_str(i), "y": alg.label_str(j),
                                       "closed_form": lemma, "trace": trace}}, out)
                    return VERIFY_ERROR
        _emit({"suite": "killing", "type": args.type, "passed": True,
               "dual_coxeter": m2 // 2, "seed": args.seed}, out)
        return 0
    if args.suite == "extroot":
        cfg = roots.affine_configuration(args.type)
        reports = []
        for k, mark in enumerate(cfg.marks):
            if mark != 1:
                continue
            for mode in ("loop", "affine"):
                rep = chevalley.verify_extended_root_independence(
                    cfg, k, mode=mode, max_level=args.affine_levels or 1,
                    sample=args.samples if args.samples < 10**9 else None,
                    seed=args.seed,
                )
                reports.append(rep.to_json())
                if not rep.passed:
                    _emit({"suite": "extroot", "type": args.type, "passed": False,
                           "seed": args.seed, "reports": reports}, out)
                    return VERIFY_ERROR
        _emit({"suite": "extroot", "type": args.type, "passed": True,
               "seed": args.seed, "reports": reports}, out)
        return 0
    raise ValueError(f"unknown suite {args.suite}")


def cmd_curves_negclasses(args, out) -> int:
    q = curves.NegativeClassQuery(args.m, n=args.n, cap=args.cap)
    result = curves.enumerate_negative_classes(q)
    _emit(result.to_json(), out)
    return 0


def cmd_curves_perp_l(args, out) -> int:
    base = [picard.DivisorClass.from_json(v) for v in _load_json(args.base)]
    l = curves.perpendicular_minus_one_class(base)
    _emit(l.to_json(), out)
    return 0


def cmd_deform_emit(args, out) -> int:
    alg = _finite_algebra(args.type)
    system = deform.generate_loop_system(alg, args.loop)
    _emit(system.to_json(), out)
    return 0


def cmd_genpos_check(args, out) -> int:
    data = _load_json(args.points)
    points = [genpos.PlanePoint.from_json(row) for row in data]
    report = genpos.is_general_position(points)
    _emit(report.to_json(), out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adelattice",
        description="Exact arithmetic for ADE root systems in blown-up-plane lattices",
    )
    sub = parser.add_subparsers(dest="group", required=True)

    p_roots = sub.add_parser("roots", help="root system enumeration")
    sub_roots = p_roots.add_subparsers(dest="cmd", required=True)
    p = sub_roots.add_parser("enumerate")
    p.add_argument("--type", help="finite type, e.g. E8, A2, D4")
    p.add_argument("--n", type=int, help="lattice size (9 = affine, needs --cap)")
    p.add_argument("--cap", type=int, help="degree cap for the affine enumeration")
    p.set_defaults(func=cmd_roots_enumerate)

    p_diag = sub.add_parser("diagram", help="Dynkin diagram classification")
    sub_diag = p_diag.add_subparsers(dest="cmd", required=True)
    p = sub_diag.add_parser("classify")
    p.add_argument("--matrix", required=True, help="JSON file with the intersection matrix")
    p.set_defaults(func=cmd_diagram_classify)

    p_chev = sub.add_parser("chevalley", help="structure constants and verification")
    sub_chev = p_chev.add_subparsers(dest="cmd", required=True)
    p = sub_chev.add_parser("table")
    p.add_argument("--type", required=True)
    p.add_argument("--export", help="write to this file instead of stdout")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_chevalley_table)
    p = sub_chev.add_parser("verify")
    p.add_argument("--type", required=True)
    p.add_argument("--suite", required=True, choices=("jacobi", "killing", "extroot"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--affine-levels", type=int, default=0,
                   help="also sample affine Jacobi up to this level / extroot level cap")
    p.set_defaults(func=cmd_chevalley_verify)

    p_curves = sub.add_parser("curves", help="negative classes and the perpendicular (-1)-class")
    sub_curves = p_curves.add_subparsers(dest="cmd", required=True)
    p = sub_curves.add_parser("negclasses")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=9)
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_curves_negclasses)
    p = sub_curves.add_parser("perp-l")
    p.add_argument("--base", required=True, help="JSON file with eight class vectors")
    p.set_defaults(func=cmd_curves_perp_l)

    p_def = sub.add_parser("deform", help="graded quadratic integrability systems")
    sub_def = p_def.add_subparsers(dest="cmd", required=True)
    p = sub_def.add_parser("emit")
    p.add_argument("--type", required=True)
    p.add_argument("--loop", type=int, default=0, help="loop truncation level (0 = finite system)")
    p.set_defaults(func=cmd_deform_emit)

    p_gen = sub.add_parser("genpos", help="nine-point general position checks")
    sub_gen = p_gen.add_subparsers(dest="cmd", required=True)
    p = sub_gen.add_parser("check")
    p.add_argument("--points", required=True, help="JSON file with nine [X, Y, Z] rows")
    p.set_defaults(func=cmd_genpos_check)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        return args.func(args, out)
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def console_main() -> None:
    sys.exit(main())
