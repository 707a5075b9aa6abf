"""Command line interface. Every subcommand prints a JSON document on
stdout and exits 0 only when its internal self-checks pass."""

from __future__ import annotations

import argparse
import json
import sys

from . import classify, obstruction, serialize
from .matreps import sl_tautological, sp_tautological
from .multiplications import (
    FlagAmbient,
    build_a18,
    from_trilinear,
    subalgebra_from_mult,
    verify_compatible,
)
from .roots import LieType, adjoint_weight, build, datum_as_dict, fundamental_weight
from .tensor import character_product_oracle, klimyk
from .weights import weight_system


def _labels(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _emit(doc, text: str | None = None, as_text: bool = False) -> None:
    if as_text and text is not None:
        sys.stdout.write(text)
    else:
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")


def _build(args):
    return build(LieType(args.family, args.rank))


def cmd_root_datum(args) -> int:
    _emit(datum_as_dict(_build(args)))
    return 0


def cmd_weights(args) -> int:
    rd = _build(args)
    lam = _labels(args.lam) if args.lam else fundamental_weight(rd, args.weight)
    _emit(serialize.weight_system_out(weight_system(rd, lam)))
    return 0


def cmd_decompose(args) -> int:
    rd = _build(args)
    lam = _labels(args.lam)
    mu = adjoint_weight(rd) if args.adjoint else _labels(args.mu)
    dec = klimyk(rd, lam, mu)
    doc = serialize.decomposition_out(dec)
    ok = True
    if args.oracle:
        ok = character_product_oracle(rd, lam, mu).summands == dec.summands
        doc["oracle_agrees"] = ok
    _emit(doc)
    return 0 if ok else 1


def cmd_obstruct(args) -> int:
    rd = _build(args)
    lam = fundamental_weight(rd, args.weight)
    report = obstruction.obstruction_report(rd, lam)
    ok = all(
        e.witness is None or obstruction.witness_is_valid(rd, lam, e.gamma, e.witness)
        for e in report.entries
    )
    doc = obstruction.report_as_dict(report)
    doc["witnesses_revalidated"] = ok
    _emit(doc)
    return 0 if ok else 1


def cmd_classify(args) -> int:
    nodes = [args.node] if args.node else range(1, args.rank + 1)
    rows = []
    ok = True
    for node in nodes:
        p = classify.PairDescriptor(LieType(args.family, args.rank), node)
        try:
            v = classify.classify_pair(p)
        except AssertionError as exc:
            rows.append({"node": node, "error": str(exc)})
            ok = False
            continue
        row = {"node": node, "verdict": v.kind}
        if v.family_dim is not None:
            row["family_dim"] = v.family_dim
        if v.replacement is not None:
            row["replacement"] = {
                "family": v.replacement.lie_type.family,
                "rank": v.replacement.lie_type.rank,
                "node": v.replacement.node,
            }
        rows.append(row)
    _emit({"family": args.family, "rank": args.rank, "pairs": rows})
    return 0 if ok else 1


def cmd_tables(args) -> int:
    report = classify.emit_tables()
    doc = {
        "intro_matches_fixture": report.intro_matches_fixture,
        "levi_matches_fixture": report.levi_matches_fixture,
        "intro_table": report.intro_table.splitlines(),
        "levi_table": report.levi_table.splitlines(),
    }
    text = (
        "pairs admitting an action\n" + "-" * 25 + "\n" + report.intro_table
        + "\nLevi data of the non-A pairs\n" + "-" * 28 + "\n" + report.levi_table
    )
    _emit(doc, text, args.text)
    return 0 if report.all_match else 1


def cmd_verify_mult(args) -> int:
    with open(args.input) as fh:
        doc = json.load(fh)
    tensor = serialize.tensor_in(doc)
    rep_kind = doc.get("rep", "sl")
    if rep_kind == "sl":
        rep = sl_tautological(tensor.dim)
    elif rep_kind == "sp":
        if tensor.dim % 2:
            raise SystemExit("sp module dimension must be even")
        rep = sp_tautological(tensor.dim // 2)
    else:
        raise SystemExit(f"unknown rep {rep_kind!r}")
    report = verify_compatible(rep, tensor)
    _emit(serialize.compat_report_out(report))
    return 0


def cmd_sp_from_form(args) -> int:
    with open(args.input) as fh:
        doc = json.load(fh)
    form = serialize.trilinear_in(doc)
    tensor = from_trilinear(form.dim, form)
    report = verify_compatible(sp_tautological(form.dim), tensor)
    _emit({
        "tensor": serialize.tensor_out(tensor),
        "report": serialize.compat_report_out(report),
    })
    return 0 if report.compatible else 1


def cmd_subalgebra(args) -> int:
    with open(args.input) as fh:
        doc = json.load(fh)
    ambient = FlagAmbient(
        family=doc["family"], rank=int(doc["rank"]), node=int(doc["node"])
    )
    tensor = serialize.tensor_in(doc["tensor"])
    report = subalgebra_from_mult(ambient, tensor)
    _emit(serialize.subalgebra_report_out(report))
    return 0 if report.all_checks_pass else 1


def cmd_example_a18(args) -> int:
    spec, facts = build_a18()
    doc = serialize.algebra_spec_out(spec)
    doc["facts"] = {k: (list(v) if isinstance(v, tuple) else v) for k, v in facts.items()}
    _emit(doc)
    return 0 if all(v for k, v in facts.items() if isinstance(v, bool)) else 1


def _add_type_args(sub, weight=False):
    sub.add_argument("--family", required=True, choices=list("ABCDEFG"))
    sub.add_argument("--rank", required=True, type=int)
    if weight:
        sub.add_argument("--weight", required=True, type=int,
                         help="fundamental weight index (1-based)")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="flagmult",
        description="exact Lie-theoretic classification engine for "
                    "compatible multiplications and unipotent flag actions",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("root-datum", help="canonical root system document")
    _add_type_args(s)
    s.set_defaults(func=cmd_root_datum)

    s = subs.add_parser("weights", help="weight system of an irreducible module")
    _add_type_args(s)
    s.add_argument("--weight", type=int, help="fundamental weight index")
    s.add_argument("--lam", help="comma-separated Dynkin labels")
    s.set_defaults(func=cmd_weights)

    s = subs.add_parser("decompose", help="tensor product decomposition")
    _add_type_args(s)
    s.add_argument("--lam", required=True, help="comma-separated Dynkin labels")
    s.add_argument("--mu", help="comma-separated Dynkin labels")
    s.add_argument("--adjoint", action="store_true", help="use the adjoint factor")
    s.add_argument("--oracle", action="store_true",
                   help="cross-validate against the brute-force oracle")
    s.set_defaults(func=cmd_decompose)

    s = subs.add_parser("obstruct", help="witness-search exclusion report")
    _add_type_args(s, weight=True)
    s.set_defaults(func=cmd_obstruct)

    s = subs.add_parser("classify", help="action classification verdicts")
    _add_type_args(s)
    s.add_argument("--node", type=int, help="parabolic node (default: all)")
    s.set_defaults(func=cmd_classify)

    s = subs.add_parser("tables", help="regenerate and diff the reference tables")
    s.add_argument("--text", action="store_true", help="human-readable output")
    s.set_defaults(func=cmd_tables)

    s = subs.add_parser("verify-mult", help="check a structure tensor for compatibility")
    s.add_argument("--input", required=True, help="JSON file with n and sparse entries")
    s.set_defaults(func=cmd_verify_mult)

    s = subs.add_parser("sp-from-form",
                        help="build the symplectic multiplication of a trilinear form")
    s.add_argument("--input", required=True, help="JSON file with l and sparse entries")
    s.set_defaults(func=cmd_sp_from_form)

    s = subs.add_parser("subalgebra",
                        help="commutative unipotent complement from a multiplication")
    s.add_argument("--input", required=True,
                   help="JSON file with family, rank, node, tensor")
    s.set_defaults(func=cmd_subalgebra)

    s = subs.add_parser("example-a18", help="the 18-dimensional worked example")
    s.set_defaults(func=cmd_example_a18)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        json.dump({"error": str(exc)}, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
