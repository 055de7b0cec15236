"""Batch command-line front end.

All structured output is JSON with exact string-encoded rationals; --pretty
switches to a human-readable rendering.  Exit codes: 0 success, 1 usage or
parse error, 2 criterion violated / oracle mismatch (with --assert) or a
failed selftest.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import criteria, selftest, sl2, weyl_dims
from .criteria import IrreducibilityStatus
from .drinfeld import (
    tuple_from_dict,
    tuple_to_dict,
    word_from_dict,
    word_to_dict,
)
from .rootsys import LieType, cartan_data


class _Parser(argparse.ArgumentParser):
    # usage errors exit with 1, reserving 2 for failed assertions
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(report: dict, pretty: bool, lines=None) -> None:
    if pretty and lines is not None:
        for line in lines:
            print(line)
    else:
        print(json.dumps(report, sort_keys=True))


def _load_json(text: str, what: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed {what} JSON: {exc}") from None


def _violations_json(violations) -> list[dict]:
    return [
        {"m": v.m, "n": v.n, "diff": str(v.diff), "set_member": str(v.member)}
        for v in violations
    ]


def _cmd_sets(args) -> int:
    lt = LieType.parse(args.type)
    data = cartan_data(lt)
    if args.tset:
        tset = criteria.t_set_C(data, args.bm, args.bn)
        derived = criteria.derive_s_from_t(data, args.bm, args.bn)
        offsets = tset.sorted_offsets()
        report = {
            "type": str(lt),
            "i": args.bm,
            "rj": args.bn,
            "t_set": [
                {"scale": str(scale), "shift": str(shift), "root": _render_root(scale, shift)}
                for scale, shift in offsets
            ],
            "derived_s": [str(v) for v in derived.sorted_values()],
        }
        lines = [f"T({args.bm},{args.bn}) for {lt}:"]
        lines += [f"  {_render_root(scale, shift)}" for scale, shift in offsets]
        lines.append("derived S: {" + ", ".join(str(v) for v in derived.sorted_values()) + "}")
        _emit(report, args.pretty, lines)
        return 0
    sset = criteria.s_set(data, args.bm, args.bn)
    values = sset.sorted_values()
    report = {
        "type": str(lt),
        "bm": args.bm,
        "bn": args.bn,
        "s_set": [str(v) for v in values],
    }
    lines = [f"S({args.bm},{args.bn}) for {lt} = {{" + ", ".join(str(v) for v in values) + "}"]
    _emit(report, args.pretty, lines)
    return 0


def _render_root(scale, shift) -> str:
    base = f"a1+{shift}" if shift else "a1"
    return base if scale == 1 else f"({base})/2"


def _cmd_check(args) -> int:
    word = word_from_dict(_load_json(args.word, "word"))
    if args.irreducible:
        verdict = criteria.is_irreducible(word)
        report = {
            "word": word_to_dict(word),
            "status": verdict.status.value,
            "violations": _violations_json(verdict.evidence),
        }
        lines = [f"irreducibility: {verdict.status.value}"]
        lines += [
            f"  pair ({v.m},{v.n}): difference {v.diff} lies in S, member {v.member}"
            for v in verdict.evidence
        ]
        _emit(report, args.pretty, lines)
        violated = verdict.status is not IrreducibilityStatus.IRREDUCIBLE_GUARANTEED
    else:
        result = criteria.is_cyclic(word)
        report = {
            "word": word_to_dict(word),
            "cyclic_guaranteed": result.cyclic_guaranteed,
            "violations": _violations_json(result.violations),
        }
        lines = [f"cyclic guaranteed: {result.cyclic_guaranteed}"]
        lines += [
            f"  pair ({v.m},{v.n}): difference {v.diff} lies in S, member {v.member}"
            for v in result.violations
        ]
        _emit(report, args.pretty, lines)
        violated = not result.cyclic_guaranteed
    return 2 if args.assert_ and violated else 0


_KAPPA_NOTE = (
    "kappa uses the computed half dual Coxeter number; its overall"
    " normalization is informational only"
)


def _cmd_dual(args) -> int:
    word = word_from_dict(_load_json(args.word, "word"))
    dual = criteria.left_dual(word)
    data = cartan_data(word.type)
    report = {
        "word": word_to_dict(word),
        "dual": word_to_dict(dual),
        "kappa": str(data.kappa),
        "note": _KAPPA_NOTE,
    }
    lines = [
        f"left dual (kappa = {data.kappa}):",
        "  " + json.dumps(word_to_dict(dual), sort_keys=True),
        f"note: {_KAPPA_NOTE}",
    ]
    _emit(report, args.pretty, lines)
    return 0


def _cmd_factorize(args) -> int:
    t = tuple_from_dict(_load_json(args.tuple, "tuple"))
    word = criteria.weyl_factorize(t)
    report = {"tuple": tuple_to_dict(t), "word": word_to_dict(word)}
    lines = ["ordered factorization:", "  " + json.dumps(word_to_dict(word), sort_keys=True)]
    if t.type == LieType("A", 1):
        module = sl2.local_weyl_sl2([f.param for f in word.factors])
        rank, _ = sl2.hw_closure(module)
        report.update(
            {"closure_dim": rank, "dim": module.dim, "full": rank == module.dim}
        )
        lines.append(f"rank-1 closure check: {rank} of {module.dim}")
    _emit(report, args.pretty, lines)
    return 0


def _cmd_dims(args) -> int:
    t = tuple_from_dict(_load_json(args.tuple, "tuple"))
    if args.table is not None:
        table = weyl_dims.table_from_dict(_load_json(args.table, "table"))
    else:
        table = weyl_dims.builtin_table(t.type)
    result = weyl_dims.dim_bound_report(t, table)
    report = {
        "tuple": tuple_to_dict(t),
        "weyl_dim": result.weyl_dim,
        "bound": result.bound,
        "table_source": table.source,
    }
    lines = [f"local Weyl dimension {result.weyl_dim} (bound {result.bound}, attained)"]
    _emit(report, args.pretty, lines)
    return 0


def _cmd_sl2_oracle(args) -> int:
    word = word_from_dict(_load_json(args.word, "word"))
    if word.type != LieType("A", 1):
        raise ValueError(f"sl2-oracle requires type A1 words, got {word.type}")
    module = sl2.irrep_Wm(1, word.factors[0].param)
    for f in word.factors[1:]:
        module = sl2.tensor(module, sl2.irrep_Wm(1, f.param))
    closure, _ = sl2.hw_closure(module)
    algebra = sl2.burnside_dim(module)
    full_closure = closure == module.dim
    full_algebra = algebra == module.dim**2
    cyc = criteria.is_cyclic(word)
    verdict = criteria.is_irreducible(word)
    agree_cyc = full_closure or not cyc.cyclic_guaranteed
    agree_irr = full_algebra == (
        verdict.status is IrreducibilityStatus.IRREDUCIBLE_GUARANTEED
    )
    agree = agree_cyc and agree_irr
    report = {
        "word": word_to_dict(word),
        "dim": module.dim,
        "closure_dim": closure,
        "full": full_closure,
        "burnside_dim": algebra,
        "burnside_full": full_algebra,
        "cyclic_guaranteed": cyc.cyclic_guaranteed,
        "criterion": verdict.status.value,
        "agree": agree,
    }
    lines = [
        f"dim {module.dim}, closure {closure}, algebra {algebra} of {module.dim ** 2}",
        f"criterion: cyclic_guaranteed={cyc.cyclic_guaranteed}, {verdict.status.value}",
        f"oracle agreement: {agree}",
    ]
    _emit(report, args.pretty, lines)
    return 2 if args.assert_ and not agree else 0


def _cmd_selftest(args) -> int:
    results = selftest.run_all()
    all_ok = True
    for name, ok, detail in results:
        all_ok &= ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    print("selftest:", "all checks passed" if all_ok else "FAILURES above")
    return 0 if all_ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weylcyc")
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sets", parents=[common],
                       help="print S(b_m, b_n), or T-sets for type C")
    p.add_argument("--type", required=True)
    p.add_argument("--bm", type=int, required=True)
    p.add_argument("--bn", type=int, required=True)
    p.add_argument("--tset", action="store_true", help="print T(bm, bn) instead (type C)")
    p.set_defaults(func=_cmd_sets)

    p = sub.add_parser("check", parents=[common], help="run the cyclicity or irreducibility criterion")
    p.add_argument("--word", required=True, help="tensor word JSON")
    p.add_argument("--irreducible", action="store_true")
    p.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit 2 when the criterion is violated")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("dual", parents=[common], help="left dual of a tensor word")
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("factorize", parents=[common], help="order a Drinfeld tuple into a cyclic word")
    p.add_argument("--tuple", required=True, help="Drinfeld tuple JSON")
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("dims", parents=[common], help="local Weyl module dimension")
    p.add_argument("--tuple", required=True)
    p.add_argument("--table", help="fundamental dimension table JSON (required outside type A)")
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("sl2-oracle", parents=[common], help="matrix oracles vs criterion for an A1 word")
    p.add_argument("--word", required=True)
    p.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit 2 when the oracles disagree with the criterion")
    p.set_defaults(func=_cmd_sl2_oracle)

    p = sub.add_parser("selftest", parents=[common], help="run the built-in invariant suite")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, ArithmeticError) as exc:
        print(f"weylcyc: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
