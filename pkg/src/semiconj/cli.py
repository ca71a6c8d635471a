"""Command-line interface: ``semiconj {classify,conj,census,abstract,dot}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .abstract import RelationKind, SemigroupError, check_axioms, classes, load_table, relation
from .census import CensusError, census
from .conjugacy import Family, MembershipError, conj_oracle, decide
from .digraph import ChoType, decompose, invariant, to_dot
from .transform import PartialTransformation, SizeMismatchError

EXIT_OK, EXIT_NOT_CONJUGATE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load_transformation(path: str) -> PartialTransformation:
    try:
        data = json.loads(Path(path).read_text())
        return PartialTransformation.from_dict(data)
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    except (ValueError, TypeError) as e:
        raise InputError(f"{path}: {e}") from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_classify(args) -> int:
    a = _load_transformation(args.file)
    comps = []
    for c in decompose(a):
        entry = {"vertices": sorted(c.vertices)}
        if isinstance(c.kind, ChoType):
            entry.update(kind="cho", root=c.kind.root, root_rank=c.kind.root_rank)
        else:
            entry.update(kind="cycle", length=c.kind.length, cycle=list(c.kind.cycle))
        comps.append(entry)
    inv = invariant(a)
    _emit({"components": comps, "cs": list(inv.cs), "s": inv.s})
    return EXIT_OK


def cmd_conj(args) -> int:
    a, b = _load_transformation(args.a), _load_transformation(args.b)
    family = Family(args.family)
    try:
        if family is Family.IX:
            verdict = conj_oracle(a, b, family)
        else:
            verdict = decide(a, b, family, witness=args.witness)
    except (MembershipError, SizeMismatchError) as e:
        raise InputError(str(e)) from None
    out = verdict.to_dict()
    if not args.witness:
        out.pop("witness_forward", None)
        out.pop("witness_backward", None)
    _emit(out)
    return EXIT_OK if verdict.conjugate else EXIT_NOT_CONJUGATE


def cmd_census(args) -> int:
    try:
        report = census(Family(args.family), args.n, args.mode)
    except CensusError as e:
        raise InputError(str(e)) from None
    text = json.dumps(report.to_dict(), indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_abstract(args) -> int:
    try:
        s = load_table(Path(args.table).read_text())
    except OSError as e:
        raise InputError(f"{args.table}: {e.strerror}") from None
    except (SemigroupError, ValueError) as e:
        raise InputError(f"{args.table}: {e}") from None
    kind = RelationKind(args.relation)
    rel = relation(s, kind)
    out: dict = {
        "order": s.order,
        "zero": s.zero,
        "relation": kind.value,
        "pairs": [[int(a), int(b)] for a, b in np.argwhere(rel)],
    }
    if args.classes:
        try:
            out["classes"] = classes(s, kind)
        except SemigroupError as e:
            raise InputError(str(e)) from None
    if args.check_axioms:
        report = check_axioms(s)
        out["axioms"] = report.checks
        out["c_is_identity"] = report.c_is_identity
    _emit(out)
    return EXIT_OK


def cmd_dot(args) -> int:
    a = _load_transformation(args.file)
    sys.stdout.write(to_dot(a, show_isolated=args.show_isolated))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semiconj", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="components, kinds, cycle set and root rank")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("conj", help="decide conjugacy of two transformations")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--family", choices=[f.value for f in Family], default="p")
    p.add_argument("--witness", action="store_true", help="include witness maps")
    p.set_defaults(func=cmd_conj)

    p = sub.add_parser("census", help="count conjugacy classes of a family")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["invariant", "bruteforce", "both"], default="both")
    p.add_argument("--out")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("abstract", help="relations on a Cayley table")
    p.add_argument("table")
    p.add_argument("--relation", choices=[k.value for k in RelationKind], default="c")
    p.add_argument("--classes", action="store_true")
    p.add_argument("--check-axioms", action="store_true")
    p.set_defaults(func=cmd_abstract)

    p = sub.add_parser("dot", help="render the digraph in DOT")
    p.add_argument("file")
    p.add_argument("--show-isolated", action="store_true")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
