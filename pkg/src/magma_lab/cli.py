"""Command-line front end.

Exit codes: 0 for success (holds / found / verified), 1 for a semantically
negative outcome (a law fails, a search exhausts, a theorem sweep finds a
counterexample), 2 for usage, input or feasibility errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .core import Magma, TableError, canonical_form, format_table, parse_table
from .dsl import LawSyntaxError, format_law, parse_law, parse_spec
from .enumeration import (
    ALL_MAGMAS,
    LATIN,
    EnumSpec,
    InfeasibleError,
    count as count_tables,
    tables,
)
from .properties import check_law, classify
from .search import SearchSpec, find_model
from .structures import builtin, example_suite
from .theorems import CATALOG, BY_ID, QUASIGROUPS, verify_theorems

_MODES = {"all": ALL_MAGMAS, "latin": LATIN}
_ORDERS_ARG = re.compile(r"\A(\d+)\.\.(\d+)\Z")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_magma(path: str) -> Magma:
    return parse_table(_read_text(path))


def _load_law_file(path: str) -> list:
    laws = []
    for line in _read_text(path).splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        laws.append(parse_law(stripped))
    return laws


def _parse_assume(values) -> list:
    laws = []
    for value in values or ():
        for piece in value.split(","):
            if piece.strip():
                laws.append(parse_law(piece))
    return laws


def _fmt_pairs(d: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in d.items())


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _report_obj(rep) -> dict:
    return {
        "law": format_law(rep.law),
        "order": rep.order,
        "holds": rep.holds,
        "witness": rep.witness,
        "detail": rep.detail,
    }


def _cmd_check(args) -> int:
    m = _load_magma(args.table)
    laws = _parse_assume(args.law)
    if args.law_file:
        laws.extend(_load_law_file(args.law_file))
    if not laws:
        raise ValueError("no laws given; use --law or --law-file")
    reports = [check_law(m, law) for law in laws]
    if args.json:
        _emit_json([_report_obj(r) for r in reports])
    else:
        for rep in reports:
            name = format_law(rep.law)
            if rep.holds:
                print(f"{name}: holds")
            else:
                line = f"{name}: fails"
                if rep.witness:
                    line += f" witness {_fmt_pairs(rep.witness)}"
                if rep.detail:
                    line += f" [{_fmt_pairs(rep.detail)}]"
                print(line)
    return 0 if all(r.holds for r in reports) else 1


def _cmd_classify(args) -> int:
    m = _load_magma(args.table)
    rep = classify(m)
    if args.json:
        _emit_json({
            "order": rep.order,
            "labels": list(rep.labels),
            "neutrals": {
                "left": list(rep.neutrals.left),
                "right": list(rep.neutrals.right),
                "two_sided": rep.neutrals.two_sided,
            },
            "inverses": list(rep.inverses) if rep.inverses is not None else None,
        })
        return 0
    def fmt(vals):
        return " ".join(str(v) for v in vals) if vals else "none"
    print(f"order {rep.order}")
    print("classes: " + ", ".join(rep.labels))
    print(f"left neutrals: {fmt(rep.neutrals.left)}")
    print(f"right neutrals: {fmt(rep.neutrals.right)}")
    two = rep.neutrals.two_sided
    print(f"two-sided neutral: {two if two is not None else 'none'}")
    if rep.inverses is not None:
        pairs = " ".join(
            f"{a}:{b if b is not None else '-'}" for a, b in enumerate(rep.inverses)
        )
        print(f"inverses: {pairs}")
    return 0


def _cmd_canon(args) -> int:
    m = _load_magma(args.table)
    cm = canonical_form(m)
    if args.json:
        _emit_json({"order": cm.order, "rows": cm.rows()})
    else:
        sys.stdout.write(format_table(cm))
    return 0


def _enum_spec_from_args(args) -> EnumSpec:
    return EnumSpec(
        order=args.order,
        mode=_MODES[args.mode],
        constraints=tuple(_parse_assume(args.assume)),
        up_to_iso=args.up_to_iso,
    )


def _cmd_enumerate(args) -> int:
    spec = _enum_spec_from_args(args)
    stream = tables(spec, workers=args.workers)
    if args.emit:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        total = 0
        for i, m in enumerate(stream):
            (out / f"{i:06d}.cay").write_text(format_table(m), encoding="utf-8")
            total += 1
        if args.json:
            _emit_json({
                "order": spec.order, "mode": spec.mode,
                "count": total, "emitted": str(out),
            })
        else:
            print(f"wrote {total} tables to {out}")
        return 0
    if args.json:
        rows = [m.rows() for m in stream]
        _emit_json({
            "order": spec.order, "mode": spec.mode,
            "count": len(rows), "tables": rows,
        })
        return 0
    total = 0
    for m in stream:
        sys.stdout.write(format_table(m))
        sys.stdout.write("\n")
        total += 1
    print(f"{total} tables")
    return 0


def _cmd_count(args) -> int:
    spec = _enum_spec_from_args(args)
    total = count_tables(spec, workers=args.workers)
    if args.json:
        _emit_json({"order": spec.order, "mode": spec.mode, "count": total})
    else:
        print(total)
    return 0


def _search_spec_from_args(args) -> SearchSpec:
    if args.spec:
        if args.assume or args.refute or args.orders:
            raise ValueError("--spec excludes --assume/--refute/--orders")
        return parse_spec(args.spec)
    if not (args.assume and args.refute and args.orders):
        raise ValueError("need either --spec or all of --assume, --refute, --orders")
    m = _ORDERS_ARG.match(args.orders)
    if m is None:
        raise ValueError(f"malformed order range {args.orders!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    return SearchSpec(
        assume=tuple(_parse_assume(args.assume)),
        refute=parse_law(args.refute),
        orders=(lo, hi),
    )


def _cmd_search(args) -> int:
    spec = _search_spec_from_args(args)
    result = find_model(spec, workers=args.workers)
    lo, hi = spec.orders
    if args.json:
        _emit_json({
            "assume": [format_law(l) for l in spec.assume],
            "refute": format_law(spec.refute),
            "orders": [lo, hi],
            "found": result.found.rows() if result.found else None,
            "order": result.order_found,
            "examined": result.examined,
        })
    elif result.found is not None:
        print(
            f"found at order {result.order_found} "
            f"after examining {result.examined} structures"
        )
        sys.stdout.write(format_table(result.found))
    else:
        print(f"exhausted orders {lo}..{hi}; examined {result.examined} structures")
    if result.found is not None and args.emit:
        Path(args.emit).write_text(format_table(result.found), encoding="utf-8")
    return 0 if result.found is not None else 1


def _cmd_theorems(args) -> int:
    if args.id:
        unknown = [tid for tid in args.id if tid not in BY_ID]
        if unknown:
            raise ValueError(f"unknown theorem ids: {', '.join(unknown)}")
        specs = [t for t in CATALOG if t.id in set(args.id)]
    elif args.quasigroups:
        specs = [t for t in CATALOG if t.domain == QUASIGROUPS]
    else:
        specs = list(CATALOG)
    reports = verify_theorems(specs, args.max_order)
    if args.json:
        out = []
        for r in reports:
            item = {
                "id": r.theorem.id,
                "kind": r.theorem.kind,
                "domain": r.theorem.domain,
                "statement": r.theorem.statement,
                "max_order": r.max_order,
                "examined": r.structures_examined,
                "verified": r.verified,
                "branch": r.branch,
                "counterexample": r.counterexample.rows() if r.counterexample else None,
            }
            if args.timings:
                item["elapsed"] = round(r.elapsed, 3)
            out.append(item)
        _emit_json(out)
    else:
        for r in reports:
            status = "PASS" if r.verified else "FAIL"
            line = (
                f"{r.theorem.id}: {status}  {r.theorem.domain} up to order "
                f"{r.max_order}, {r.structures_examined} structures"
            )
            if args.timings:
                line += f" ({r.elapsed:.2f}s)"
            print(line)
            if not r.verified:
                print(f"  failing branch: {r.branch}")
                for tline in format_table(r.counterexample).splitlines():
                    print(f"  {tline}")
        npass = sum(1 for r in reports if r.verified)
        print(f"{npass}/{len(reports)} verified")
    return 0 if all(r.verified for r in reports) else 1


def _slug(s) -> str:
    base = s.name
    if s.params:
        base += "_" + "_".join(str(p) for p in s.params)
    return base.replace("-", "m")


def _cmd_examples(args) -> int:
    records = example_suite()
    if args.id:
        records = [r for r in records if r.example == args.id]
        if not records:
            raise ValueError(f"no example numbered {args.id}")
    if args.emit:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        written = 0
        for rec in records:
            if rec.structure.kind == "finite":
                path = out / f"{_slug(rec.structure)}.cay"
                path.write_text(format_table(rec.structure.magma), encoding="utf-8")
                written += 1
        print(f"wrote {written} tables to {out}")
        return 0
    if args.json:
        _emit_json([
            {
                "example": rec.example,
                "structure": rec.structure.label,
                "kind": rec.structure.kind,
                "claims": rec.claims,
                "actual": rec.actual,
                "scopes": rec.scopes,
                "mismatches": list(rec.mismatches),
                "notes": list(rec.notes),
            }
            for rec in records
        ])
        return 0
    for rec in records:
        print(f"example {rec.example}: {rec.structure.label} [{rec.structure.kind}]")
        for tag in rec.claims:
            mark = "  MISMATCH" if tag in rec.mismatches else ""
            print(
                f"  {tag:<5} documented {str(rec.claims[tag]):<5} "
                f"computed {str(rec.actual[tag]):<5} ({rec.scopes[tag]}){mark}"
            )
        for note in rec.notes:
            print(f"  note: {note}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magma-lab",
        description="check, classify, enumerate and search finite binary operations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("check", help="check laws against a Cayley table")
    p.add_argument("--table", required=True, help="Cayley file, or - for stdin")
    p.add_argument("--law", action="append", help="law name or equation; repeatable")
    p.add_argument("--law-file", help="file with one law per line")
    add_json(p)

    p = sub.add_parser("classify", help="name the classes a table belongs to")
    p.add_argument("--table", required=True)
    add_json(p)

    p = sub.add_parser("canon", help="print the canonical form of a table")
    p.add_argument("--table", required=True)
    add_json(p)

    for name, help_ in (("enumerate", "stream all tables"), ("count", "count tables")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--order", type=int, required=True)
        p.add_argument("--mode", choices=sorted(_MODES), default="all")
        p.add_argument("--assume", action="append",
                       help="constraint law, comma-separable; repeatable")
        p.add_argument("--up-to-iso", action="store_true",
                       help="emit only canonical representatives")
        p.add_argument("--workers", type=int, default=1)
        if name == "enumerate":
            p.add_argument("--emit", help="write one .cay file per table here")
        add_json(p)

    p = sub.add_parser("search", help="find a model of some laws refuting another")
    p.add_argument("--spec", help="'assume ...; refute ...; orders lo..hi'")
    p.add_argument("--assume", action="append", help="law, comma-separable; repeatable")
    p.add_argument("--refute", help="law to refute")
    p.add_argument("--orders", help="order range lo..hi")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--emit", help="write the found table to this file")
    add_json(p)

    p = sub.add_parser("theorems", help="verify the theorem catalog exhaustively")
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--quasigroups", action="store_true",
                   help="only the quasigroup-domain theorems")
    p.add_argument("--id", action="append", help="theorem id, e.g. T7; repeatable")
    p.add_argument("--timings", action="store_true", help="append wall-clock times")
    add_json(p)

    p = sub.add_parser("examples", help="evaluate the built-in structure catalog")
    p.add_argument("--id", type=int, help="only this example number")
    p.add_argument("--emit", help="write finite catalog tables here")
    add_json(p)

    return parser


_COMMANDS = {
    "check": _cmd_check,
    "classify": _cmd_classify,
    "canon": _cmd_canon,
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "search": _cmd_search,
    "theorems": _cmd_theorems,
    "examples": _cmd_examples,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (TableError, LawSyntaxError, InfeasibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
