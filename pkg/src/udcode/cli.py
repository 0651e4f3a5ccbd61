"""Command-line interface.

Every subcommand builds a report dictionary. With ``--machine`` the report
is printed as JSON (sorted keys, two-space indent, trailing newline); the
document carries ``"format": "udcode-report"`` and ``"version": 1``.
Without it a human-readable rendering is printed instead.

Exit statuses: 0 success / property holds, 1 property fails (or no
factorization, or a Kraft violation), 2 usage, input or bound errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path

from . import __version__
from .codefile import format_code, read_code, write_code
from .codes import construct_prefix_code, is_uniquely_decipherable, kraft_sum, lengths_kraft_sum
from .errors import (
    KraftViolationError,
    LimitExceededError,
    NotSubcodeError,
    NotUniquelyDecipherableError,
    TraceCheckError,
    UdCodeError,
)
from .factorization import DEFAULT_MAX_PARSES, all_factorizations
from .freealg import DEFAULT_MAX_DEGREE, DEFAULT_MAX_TERMS, code_sum_power, rewrite_mod_ideal
from .generators import GenConfig, random_composed_pair, random_non_ud_code, random_prefix_code
from .monoid import Alphabet
from .theorem import DEFAULT_MAX_TUPLES, Limits, check_extended_mcmillan, run_proof_trace

REPORT_FORMAT = "udcode-report"
REPORT_VERSION = 1


def rational(q: Fraction) -> dict:
    """Exact ``num/den`` plus a 12-significant-digit decimal."""
    with localcontext() as ctx:
        ctx.prec = 40
        approx = Decimal(q.numerator) / Decimal(q.denominator)
    return {"exact": f"{q.numerator}/{q.denominator}", "approx": f"{approx:.12g}"}


def _seq(blocks) -> list[str]:
    return [w.text for w in blocks]


def _paren(blocks) -> str:
    return "(" + ",".join(w.text for w in blocks) + ")"


def _witness(verdict) -> dict | None:
    if verdict.decipherable:
        return None
    word, first, second = verdict.witness
    return {"word": word.text, "parses": [_seq(first), _seq(second)]}


class Outcome(Exception):
    """Carries a finished report out of a command (used for failures)."""

    def __init__(self, status: int, report: dict, human: list[str]):
        self.status = status
        self.report = report
        self.human = human


def _not_ud_outcome(exc: NotUniquelyDecipherableError) -> Outcome:
    w = _witness(exc.verdict)
    return Outcome(
        1,
        {"precondition": "uniquely-decipherable", "code": exc.label, "witness": w},
        [
            f"{exc.label} is not uniquely decipherable",
            f"witness: {w['word']} = ({','.join(w['parses'][0])}) = ({','.join(w['parses'][1])})",
        ],
    )


def _not_subcode_outcome(exc: NotSubcodeError) -> Outcome:
    bad = [w.text for w in exc.unparseable]
    return Outcome(
        1,
        {"precondition": "concatenation-of-D", "unparseable": bad},
        ["some words of C are not concatenations of words of D:"] + [f"  {w}" for w in bad],
    )


# -- commands ---------------------------------------------------------------


def cmd_kraft(args):
    code = read_code(args.file)
    k = kraft_sum(code)
    report = {"alphabet": code.alphabet.symbols, "size": len(code), "kraft_sum": rational(k)}
    human = [f"K(C) = {rational(k)['exact']}  (~{rational(k)['approx']})"]
    return 0, report, human


def cmd_check_ud(args):
    code = read_code(args.file)
    verdict = is_uniquely_decipherable(code)
    report = {"decipherable": verdict.decipherable, "witness": _witness(verdict)}
    if verdict.decipherable:
        return 0, report, ["uniquely decipherable"]
    w = report["witness"]
    human = [
        "NOT uniquely decipherable",
        f"witness: {w['word']}",
        f"  parse 1: ({','.join(w['parses'][0])})",
        f"  parse 2: ({','.join(w['parses'][1])})",
    ]
    return 1, report, human


def cmd_factorize(args):
    code = read_code(args.file)
    word = code.alphabet.word(args.word)
    parses = all_factorizations(word, code, args.max_parses)
    verdict = is_uniquely_decipherable(code)
    report = {
        "word": word.text,
        "factorizations": [_seq(f) for f in parses],
        "count": len(parses),
        "code_decipherable": verdict.decipherable,
    }
    human = [_paren(f) for f in parses] or ["no factorization"]
    if not verdict.decipherable:
        report["witness"] = _witness(verdict)
        human.append("note: the code is not uniquely decipherable")
    return (0 if parses else 1), report, human


def cmd_prefix_from_lengths(args):
    alphabet = Alphabet(args.alphabet) if args.alphabet else Alphabet.of_size(args.r)
    total = lengths_kraft_sum(args.lengths, alphabet.r)
    try:
        code = construct_prefix_code(args.lengths, alphabet)
    except KraftViolationError as exc:
        t = rational(exc.total)
        raise Outcome(
            1,
            {"kraft_violation": True, "kraft_sum": t},
            [f"Kraft violation: {t['exact']} > 1"],
        )
    text = format_code(code)
    report = {"lengths": sorted(args.lengths), "kraft_sum": rational(total), "code_file": text}
    if args.output:
        write_code(code, args.output)
        report["written"] = args.output
    return 0, report, text.rstrip("\n").splitlines()


def cmd_check_extended(args):
    c = read_code(args.file_c)
    d = read_code(args.file_d)
    try:
        v = check_extended_mcmillan(c, d)
    except NotUniquelyDecipherableError as exc:
        raise _not_ud_outcome(exc)
    except NotSubcodeError as exc:
        raise _not_subcode_outcome(exc)
    kc, kd = rational(v.kraft_c), rational(v.kraft_d)
    report = {
        "holds": v.holds,
        "kraft_c": kc,
        "kraft_d": kd,
        "factorizations": {w.text: _seq(f) for w, f in v.report.parses.items()},
    }
    human = [f"{kc['exact']} {'<=' if v.holds else '>'} {kd['exact']}"]
    human += [f"  {w.text} = {_paren(f)}" for w, f in v.report.parses.items()]
    return (0 if v.holds else 1), report, human


def cmd_prove_trace(args):
    c = read_code(args.file_c)
    d = read_code(args.file_d)
    limits = Limits(max_tuples=args.max_tuples, max_degree=args.max_degree, max_terms=args.max_terms)
    try:
        t = run_proof_trace(c, d, args.k, limits)
    except NotUniquelyDecipherableError as exc:
        raise _not_ud_outcome(exc)
    except NotSubcodeError as exc:
        raise _not_subcode_outcome(exc)
    except TraceCheckError as exc:
        raise Outcome(
            1,
            {"failed_expression": exc.expression, "detail": exc.detail},
            [f"({exc.expression}) FAILED: {exc.detail}"],
        )
    report = {
        "k": t.k,
        "m": t.m,
        "kraft_c": rational(t.kraft_c),
        "kraft_d": rational(t.kraft_d),
        "levels": [
            {
                "l": lv.l,
                "tuples": lv.total,
                "w_l1": lv.w1,
                "w_l2": lv.w2,
                "eval_power": rational(lv.eval_power),
                "eval_w_l1": rational(lv.eval_w1),
                "eval_w_l2": rational(lv.eval_w2),
            }
            for lv in t.levels
        ],
        "evaluations": {
            "3": rational(t.eval_3),
            "4": rational(t.eval_4),
            "5": rational(t.eval_5),
            "6": rational(t.eval_6),
        },
        "expressions": [
            {"id": r.expression, "ok": r.ok, "detail": r.detail} for r in t.checks.values()
        ],
        "ok": t.ok,
    }
    if args.show_polys:
        p6 = code_sum_power(c, args.k, limits.max_terms, limits.max_degree)
        report["polynomials"] = {"6": p6.to_text(), "6_rewritten": rewrite_mod_ideal(p6, c, d).to_text()}
    human = [f"k = {t.k}, m = {t.m}, K(C) = {report['kraft_c']['exact']}, K(D) = {report['kraft_d']['exact']}"]
    for lv in t.levels:
        human.append(f"  l={lv.l}: |D^l|={lv.total} |W_l1|={lv.w1} |W_l2|={lv.w2}")
    for r in t.checks.values():
        human.append(f"({r.expression}) {'OK' if r.ok else 'FAIL'}  {r.detail}")
    if args.show_polys:
        human.append(f"(6) = {report['polynomials']['6']}")
        human.append(f"(6) rewritten = {report['polynomials']['6_rewritten']}")
    return 0, report, human


def cmd_random(args):
    alphabet = Alphabet(args.alphabet)
    cfg = GenConfig(
        seed=args.seed,
        alphabet=alphabet,
        size=args.size,
        max_len=args.max_len,
        c_size=args.c_size,
        max_blocks=args.max_blocks,
    )
    if args.kind == "pair":
        c, d = random_composed_pair(cfg)
        files = {"d": format_code(d), "c": format_code(c)}
        if args.output:
            out = Path(args.output)
            out.mkdir(parents=True, exist_ok=True)
            write_code(d, out / "d.code")
            write_code(c, out / "c.code")
        report = {"kind": "pair", "seed": args.seed, "d_file": files["d"], "c_file": files["c"]}
        human = ["# D"] + files["d"].splitlines() + ["", "# C"] + files["c"].splitlines()
        return 0, report, human
    code = random_prefix_code(cfg) if args.kind == "prefix" else random_non_ud_code(cfg)
    text = format_code(code)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    report = {"kind": args.kind, "seed": args.seed, "code_file": text}
    return 0, report, text.rstrip("\n").splitlines()


# -- parser -----------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="emit the JSON report")

    parser = argparse.ArgumentParser(prog="udcode", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kraft", parents=[common], help="exact Kraft sum of a code file")
    p.add_argument("file")
    p.set_defaults(func=cmd_kraft)

    p = sub.add_parser("check-ud", parents=[common], help="unique decipherability test")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_ud)

    p = sub.add_parser("factorize", parents=[common], help="all factorizations of a word")
    p.add_argument("file")
    p.add_argument("word")
    p.add_argument("--max-parses", type=_positive, default=DEFAULT_MAX_PARSES)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser(
        "prefix-from-lengths", parents=[common], help="canonical prefix code for given lengths"
    )
    p.add_argument("lengths", type=_positive, nargs="*")
    p.add_argument("--r", type=_positive, default=2, help="alphabet size (default 2)")
    p.add_argument("--alphabet", help="explicit alphabet symbols (overrides --r)")
    p.add_argument("-o", "--output", help="also write the code file here")
    p.set_defaults(func=cmd_prefix_from_lengths)

    for name, helptext in (
        ("check-extended", "check K(C) <= K(D) with all hypotheses"),
        ("prove-trace", "verify every step of the polynomial argument"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file_c")
        p.add_argument("file_d")
        if name == "prove-trace":
            p.add_argument("--k", type=_positive, default=1)
            p.add_argument("--max-terms", type=_positive, default=DEFAULT_MAX_TERMS)
            p.add_argument("--max-tuples", type=_positive, default=DEFAULT_MAX_TUPLES)
            p.add_argument("--max-degree", type=_positive, default=DEFAULT_MAX_DEGREE)
            p.add_argument("--show-polys", action="store_true")
            p.set_defaults(func=cmd_prove_trace)
        else:
            p.set_defaults(func=cmd_check_extended)

    p = sub.add_parser("random", parents=[common], help="seeded random code files")
    p.add_argument("kind", choices=["prefix", "pair", "nonud"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alphabet", default="01")
    p.add_argument("--size", type=_positive, default=4)
    p.add_argument("--max-len", type=_positive, default=4)
    p.add_argument("--c-size", type=_positive, default=3)
    p.add_argument("--max-blocks", type=_positive, default=3)
    p.add_argument("-o", "--output", help="file (prefix, nonud) or directory (pair)")
    p.set_defaults(func=cmd_random)
    return parser


def _echo(args) -> dict:
    skip = {"func", "machine", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit(args, status: int, outcome: str, payload: dict, human: list[str], out, err) -> int:
    if args.machine:
        doc = {
            "format": REPORT_FORMAT,
            "version": REPORT_VERSION,
            "command": args.command,
            "args": _echo(args),
            "status": outcome,
            "exit": status,
        }
        doc.update(payload)
        out.write(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
        if outcome == "error":
            for line in human:
                err.write(line + "\n")
    else:
        stream = err if outcome == "error" else out
        for line in human:
            stream.write(line + "\n")
    return status


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        status, payload, human = args.func(args)
        return _emit(args, status, "ok" if status == 0 else "fail", payload, human, out, err)
    except Outcome as o:
        return _emit(args, o.status, "fail", o.report, o.human, out, err)
    except LimitExceededError as exc:
        payload = {
            "error": {
                "type": "limit-exceeded",
                "bound": exc.bound,
                "value": exc.value,
                "limit": exc.limit,
                "message": str(exc),
            }
        }
        return _emit(args, 2, "error", payload, [f"error: {exc}"], out, err)
    except (UdCodeError, ValueError) as exc:
        payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        return _emit(args, 2, "error", payload, [f"error: {exc}"], out, err)


if __name__ == "__main__":
    sys.exit(main())
