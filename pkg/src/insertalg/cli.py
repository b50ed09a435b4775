"""Command-line interface.

Exit codes: 0 the checked property holds, 1 a violation was found,
2 usage or configuration error, 3 domain error in the inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .coefficients import parse_coefficient
from .errors import InsertAlgError, InvalidAlphabet
from .identities import DEFAULT_CEILING, IdentityKind, associator, audit_adjacency_theorem, check_identity, identity_defect
from .operations import AdjacencyRelation, InsertionOperator, Kind, apply, right_insertion
from .poly import Polynomial, format_polynomial
from .weights import (
    ConstantWeight,
    ExpBilinear,
    ParityWeight,
    WeightFunction,
    check_f_equations,
    check_f_symmetry,
    load_table,
)
from .words import Alphabet, parse_word

DEFAULT_SEED = 20240101
OPS = [k.value for k in Kind]
IDENTITIES = [k.value for k in IdentityKind]


class ConfigError(Exception):
    pass


def parse_weight(spec: str) -> WeightFunction:
    """``exp``, ``parity``, ``const:<coeff>``, ``table:<file>`` or a bare table path."""
    if spec == "exp":
        return ExpBilinear()
    if spec == "parity":
        return ParityWeight()
    if spec.startswith("const:"):
        try:
            return ConstantWeight(parse_coefficient(spec[len("const:"):]))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    path = spec[len("table:"):] if spec.startswith("table:") else spec
    if not Path(path).is_file():
        raise ConfigError(f"unknown weight function {spec!r}")
    try:
        return load_table(path)
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"bad weight table {path}: {exc}") from exc


def load_relation(path: str) -> AdjacencyRelation:
    try:
        return AdjacencyRelation.load(path)
    except OSError as exc:
        raise ConfigError(f"cannot read adjacency file: {exc}") from exc
    except (ValueError, KeyError, TypeError, InsertAlgError) as exc:
        raise ConfigError(f"bad adjacency file {path}: {exc}") from exc


def resolve(args) -> tuple[Alphabet, InsertionOperator]:
    rel = load_relation(args.rel) if getattr(args, "rel", None) else None
    if args.alphabet is None and rel is None:
        raise ConfigError("--alphabet is required")
    try:
        alphabet = Alphabet(args.alphabet) if args.alphabet is not None else rel.alphabet
    except InvalidAlphabet as exc:
        raise ConfigError(str(exc)) from exc
    if rel is not None and rel.alphabet != alphabet:
        raise ConfigError(f"--alphabet {alphabet.letters!r} differs from the relation's {rel.alphabet.letters!r}")
    kind = Kind(args.op)
    if kind is Kind.WEIGHTED:
        if not args.f:
            raise ConfigError("--op weighted needs --f")
        return alphabet, InsertionOperator.weighted(parse_weight(args.f))
    if kind is Kind.ADJACENCY:
        return alphabet, InsertionOperator.adjacency(rel or AdjacencyRelation.full(alphabet))
    return alphabet, InsertionOperator(kind)


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_insert(args) -> int:
    alphabet, op = resolve(args)
    x, y = (Polynomial.word(alphabet, parse_word(w, alphabet)) for w in (args.x, args.y))
    result = format_polynomial(apply(op, x, y))
    _emit(args, result, {"result": result})
    return 0


def cmd_associator(args) -> int:
    alphabet, op = resolve(args)
    x, y, z = (parse_word(w, alphabet) for w in (args.x, args.y, args.z))
    if args.defect:
        poly = identity_defect(op, IdentityKind(args.identity), alphabet, x, y, z)
    else:
        poly = associator(op, *(Polynomial.word(alphabet, w) for w in (x, y, z)))
    result = format_polynomial(poly)
    _emit(args, result, {"result": result})
    return 0


def cmd_check_identity(args) -> int:
    alphabet, op = resolve(args)
    report = check_identity(
        op, IdentityKind(args.identity), alphabet, args.max_len,
        mode=args.mode, seed=args.seed, trials=args.trials,
        include_empty=args.include_empty, ceiling=args.ceiling,
    )
    _emit(args, report.to_text(), report.to_json())
    return 0 if report.passed else 1


def cmd_check_f(args) -> int:
    f = parse_weight(args.f)
    report = check_f_equations(f, args.bound)
    payload = report.to_json()
    ok = report.passed
    if args.symmetry:
        sym = check_f_symmetry(f, args.bound)
        payload["symmetry"] = sym.to_json()
        ok = ok and sym.symmetric
    print(json.dumps(payload, sort_keys=True))
    return 0 if ok else 1


def cmd_audit(args) -> int:
    report = audit_adjacency_theorem(args.max_len)
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        for case in report.cases:
            verdict = "agrees" if case.agrees_with_claim else "DIVERGES"
            line = f"case {case.case}: {case.description}: claimed {case.claim}, computed {case.computed} [{verdict}]"
            print(line)
            print(f"    {case.report.to_text()}")
            if case.note:
                print(f"    note: {case.note}")
    return 0 if report.all_agree else 1


def load_fixtures(path: str | None = None) -> list[dict]:
    if path is None:
        text = resources.files("insertalg").joinpath("fixtures.json").read_text()
    else:
        text = Path(path).read_text()
    return json.loads(text)


def run_fixture(fx: dict) -> str:
    """Evaluate one stored fixture and return its canonical text output."""
    kind = fx["kind"]
    if kind == "check-f":
        return "passed" if check_f_equations(parse_weight(fx["f"]), fx["bound"]).passed else "failed"
    alphabet = Alphabet(fx["alphabet"])
    op_kind = Kind(fx["op"])
    if op_kind is Kind.WEIGHTED:
        op = InsertionOperator.weighted(parse_weight(fx["f"]))
    elif op_kind is Kind.ADJACENCY:
        op = InsertionOperator.adjacency(AdjacencyRelation(alphabet, [tuple(p) for p in fx["forbidden"]]))
    else:
        op = InsertionOperator(op_kind)
    words = [parse_word(w, alphabet) for w in fx["args"]]
    polys = [Polynomial.word(alphabet, w) for w in words]
    if kind == "insert":
        return format_polynomial(apply(op, *polys))
    if kind == "right-insert":
        return format_polynomial(right_insertion(op, *polys))
    if kind == "associator":
        return format_polynomial(associator(op, *polys))
    if kind == "defect":
        return format_polynomial(identity_defect(op, IdentityKind(fx["identity"]), alphabet, *words))
    raise ConfigError(f"unknown fixture kind {kind!r}")


def cmd_repro(args) -> int:
    try:
        fixtures = load_fixtures(args.fixtures)
    except (OSError, ValueError) as exc:
        raise ConfigError(f"cannot load fixtures: {exc}") from exc
    if args.list:
        for fx in fixtures:
            print(f"{fx['id']}\t{fx['anchor']}")
        return 0
    first_bad = None
    for fx in fixtures:
        got = run_fixture(fx)
        ok = got == fx["expected"]
        print(f"{'PASS' if ok else 'FAIL'} {fx['id']}: {got}" + ("" if ok else f" (expected {fx['expected']})"))
        if not ok and first_bad is None:
            first_bad = fx["id"]
    if first_bad is not None:
        print(f"first mismatch: {first_bad}", file=sys.stderr)
        return 1
    print(f"all {len(fixtures)} fixtures match")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", help="letters of the alphabet, e.g. abc")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    op_args = argparse.ArgumentParser(add_help=False)
    op_args.add_argument("--op", choices=OPS, required=True)
    op_args.add_argument("--f", help="weight function: exp, parity, const:<coeff>, table:<file>")
    op_args.add_argument("--rel", help="adjacency relation JSON file")

    parser = argparse.ArgumentParser(prog="insertalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", parents=[common, op_args], help="insert x into y")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("associator", parents=[common, op_args], help="associator or identity defect of three words")
    p.add_argument("--defect", action="store_true", help="print the identity defect instead of the associator")
    p.add_argument("--identity", choices=IDENTITIES, default="left-sym")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("z")
    p.set_defaults(func=cmd_associator)

    p = sub.add_parser("check-identity", parents=[common, op_args], help="search for identity violations")
    p.add_argument("--identity", choices=IDENTITIES, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--include-empty", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.set_defaults(func=cmd_check_identity)

    p = sub.add_parser("check-f", parents=[common], help="check the weight-function equations")
    p.add_argument("--f", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--symmetry", action="store_true")
    p.set_defaults(func=cmd_check_f)

    p = sub.add_parser("audit", parents=[common], help="audit the adjacency-restricted classification")
    p.add_argument("--theorem", choices=["3.1"], default="3.1")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("repro", parents=[common], help="rerun the stored worked-example fixtures")
    p.add_argument("--list", action="store_true")
    p.add_argument("--fixtures", help="alternative fixture store (JSON)")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InsertAlgError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
