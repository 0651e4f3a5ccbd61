"""Executable checks of the Kraft-sum inequalities between UD codes.

Given uniquely decipherable codes ``C`` and ``D`` with every word of ``C``
a concatenation of words of ``D``, and an exponent ``k``, the argument
compares three polynomials in the free algebra:

* the power sum ``S(D) = sum_{l=k}^{mk} (sum_{x in D} x)^l``;
* its part over tuples ``w in D^l`` whose concatenation spells a
  ``k``-tuple of ``C``-words (the sets ``W_l1``);
* its complement (the sets ``W_l2``).

Rewriting ``(sum_{x in C} x)^k`` modulo the ideal ``I(C, D)`` reproduces
the ``W_l1`` part exactly, and evaluating everything at
``x := r ** -len(x)`` turns the polynomial identity into
``K(C)^k <= sum_{l=k}^{mk} K(D)^l``.

:func:`run_proof_trace` checks every step on a concrete instance and
records one entry per expression label ``"1"`` .. ``"8"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .codes import Code, check_same_alphabet, is_uniquely_decipherable, kraft_sum
from .errors import LimitExceededError, NotSubcodeError, NotUniquelyDecipherableError, TraceCheckError
from .factorization import SubcodeReport, depth_m, is_subcode_of_star, unique_factorization
from .freealg import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_TERMS,
    NCPolynomial,
    code_sum_power,
    evaluate,
    rewrite_mod_ideal,
)

DEFAULT_MAX_TUPLES = 200_000


@dataclass(frozen=True)
class Limits:
    """Desk-scale bounds for enumerations in this module."""

    max_tuples: int = DEFAULT_MAX_TUPLES
    max_degree: int = DEFAULT_MAX_DEGREE
    max_terms: int = DEFAULT_MAX_TERMS


def require_ud(c: Code, label: str = "code") -> None:
    verdict = is_uniquely_decipherable(c)
    if not verdict.decipherable:
        raise NotUniquelyDecipherableError(verdict, label)


def _require_pair(c: Code, d: Code) -> SubcodeReport:
    check_same_alphabet(c, d)
    require_ud(c, "C")
    require_ud(d, "D")
    report = is_subcode_of_star(c, d)
    if not report.holds:
        raise NotSubcodeError(report.unparseable)
    return report


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")


def _check_enumeration(n: int, l: int, limits: Limits, what: str) -> None:
    if l > limits.max_degree:
        raise LimitExceededError("max_degree", l, limits.max_degree, what)
    if n**l > limits.max_tuples:
        raise LimitExceededError("max_tuples", n**l, limits.max_tuples, what)


def _c_block_count(text: str, c: Code) -> int | None:
    f = unique_factorization(c.alphabet.word(text), c) if text else ()
    return None if f is None else len(f)


def partition_Wl(c: Code, d: Code, k: int, l: int, limits: Limits = Limits()):
    """Split ``D^l`` by whether the concatenation lies in ``con[C^k]``.

    Returns ``(W_l1, W_l2)`` as lists of tuples in lexicographic order.
    Membership in ``W_l1`` means the concatenation has a ``C``-factorization
    with exactly ``k`` blocks (unique because ``C`` is UD).
    """
    _check_k(k)
    check_same_alphabet(c, d)
    require_ud(c, "C")
    require_ud(d, "D")
    _check_enumeration(len(d), l, limits, f"D^{l}")
    return _partition(c, d, k, l, {})


def _partition(c: Code, d: Code, k: int, l: int, cache: dict):
    w1, w2 = [], []
    for w in product(d.words, repeat=l):
        text = "".join(x.text for x in w)
        blocks = cache.get(text, -1)
        if blocks == -1:
            blocks = cache[text] = _c_block_count(text, c)
        (w1 if blocks == k else w2).append(w)
    return w1, w2


@dataclass(frozen=True)
class ClassicalVerdict:
    holds: bool
    kraft: Fraction


@dataclass(frozen=True)
class ExtendedVerdict:
    holds: bool
    kraft_c: Fraction
    kraft_d: Fraction
    report: SubcodeReport


def check_extended_mcmillan(c: Code, d: Code) -> ExtendedVerdict:
    """Verify the hypotheses on ``(c, d)`` and compare ``K(c) <= K(d)``.

    Raises NotUniquelyDecipherableError or NotSubcodeError when a
    hypothesis fails.
    """
    report = _require_pair(c, d)
    kc, kd = kraft_sum(c), kraft_sum(d)
    return ExtendedVerdict(kc <= kd, kc, kd, report)


def check_classical_mcmillan(c: Code) -> ClassicalVerdict:
    # the classical bound is the extended one with D = all one-letter words
    v = check_extended_mcmillan(c, Code.full(c.alphabet, 1))
    return ClassicalVerdict(v.holds, v.kraft_c)


@dataclass(frozen=True)
class InequalityCheck:
    lhs: Fraction
    rhs: Fraction
    holds: bool
    m: int


@dataclass(frozen=True)
class ChainCheck:
    lhs: Fraction
    mid: Fraction
    rhs: Fraction
    holds: bool
    m: int


def _power_sum(kd: Fraction, k: int, m: int) -> Fraction:
    return sum((kd**l for l in range(k, m * k + 1)), Fraction(0))


def check_inequality_7(c: Code, d: Code, k: int) -> InequalityCheck:
    """``K(c)^k <= sum_{l=k}^{mk} K(d)^l``, exactly."""
    _check_k(k)
    _require_pair(c, d)
    m = depth_m(c, d)
    lhs = kraft_sum(c) ** k
    rhs = _power_sum(kraft_sum(d), k, m)
    return InequalityCheck(lhs, rhs, lhs <= rhs, m)


def check_inequality_8(c: Code, d: Code, k: int) -> ChainCheck:
    """``K(c)^k <= sum_{l=k}^{mk} K(d)^l <= mk * K(d)^k``, exactly.

    The second step needs ``K(d) <= 1``; a violation raises
    TraceCheckError.
    """
    _check_k(k)
    _require_pair(c, d)
    kd = kraft_sum(d)
    if kd > 1:
        raise TraceCheckError("8", f"K(D) = {kd} > 1")
    m = depth_m(c, d)
    lhs = kraft_sum(c) ** k
    mid = _power_sum(kd, k, m)
    rhs = m * k * kd**k
    return ChainCheck(lhs, mid, rhs, lhs <= mid <= rhs, m)


def _flatten_image(c: Code, d: Code, k: int, limits: Limits) -> list[tuple]:
    _check_enumeration(len(c), k, limits, f"C^{k}")
    parse = {x: unique_factorization(x, d) for x in c}
    return [tuple(b for x in xs for b in parse[x]) for xs in product(c.words, repeat=k)]


def decode_bijection_check(c: Code, d: Code, k: int, limits: Limits = Limits()) -> bool:
    """Check that flattening ``d``-factorizations maps ``C^k`` onto the ``W_l1``.

    True iff the map is injective and its image equals the union of
    ``W_l1`` over ``l = k .. mk``.
    """
    _check_k(k)
    _require_pair(c, d)
    m = depth_m(c, d)
    _check_enumeration(len(d), m * k, limits, f"D^{m * k}")
    image = _flatten_image(c, d, k, limits)
    if len(set(image)) != len(image):
        return False
    cache: dict = {}
    union = set()
    for l in range(k, m * k + 1):
        union.update(_partition(c, d, k, l, cache)[0])
    return set(image) == union


@dataclass
class LevelRecord:
    """Counts and evaluations for one exponent ``l``."""

    l: int
    total: int
    w1: int
    w2: int
    eval_power: Fraction
    eval_w1: Fraction
    eval_w2: Fraction


@dataclass
class CheckRecord:
    expression: str
    ok: bool
    detail: str


@dataclass
class ProofTrace:
    c: Code
    d: Code
    k: int
    m: int
    kraft_c: Fraction
    kraft_d: Fraction
    levels: list[LevelRecord] = field(default_factory=list)
    eval_3: Fraction = Fraction(0)
    eval_4: Fraction = Fraction(0)
    eval_5: Fraction = Fraction(0)
    eval_6: Fraction = Fraction(0)
    terms_3: int = 0
    terms_4: int = 0
    terms_5: int = 0
    inequality_7: InequalityCheck | None = None
    inequality_8: ChainCheck | None = None
    checks: dict[str, CheckRecord] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.checks.values()) and len(self.checks) == 8

    def _record(self, expression: str, ok: bool, detail: str) -> None:
        self.checks[expression] = CheckRecord(expression, ok, detail)
        if not ok:
            raise TraceCheckError(expression, detail)


def run_proof_trace(c: Code, d: Code, k: int, limits: Limits = Limits()) -> ProofTrace:
    """Check every identity and inequality of the argument on ``(c, d, k)``.

    Raises TraceCheckError naming the first expression that fails, and
    LimitExceededError when an enumeration bound is hit.
    """
    _check_k(k)
    _require_pair(c, d)
    m = depth_m(c, d)
    mk = m * k
    _check_enumeration(len(d), mk, limits, f"D^{mk}")
    _check_enumeration(len(c), k, limits, f"C^{k}")
    alphabet = c.alphabet
    kc, kd = kraft_sum(c), kraft_sum(d)
    trace = ProofTrace(c, d, k, m, kc, kd)

    agg3 = NCPolynomial.zero()
    agg4 = NCPolynomial.zero()
    agg5 = NCPolynomial.zero()
    cache: dict = {}
    expansion_ok, partition_ok = True, True
    notes_1, notes_2 = [], []
    for l in range(k, mk + 1):
        power = code_sum_power(d, l, limits.max_terms, limits.max_degree)
        tuples = list(product(d.words, repeat=l))
        enumerated = NCPolynomial.sum_of_monomials(tuples)
        unit = all(coef == 1 for _, coef in power.terms())
        if not (power == enumerated and len(power) == len(d) ** l and unit):
            expansion_ok = False
            notes_1.append(f"l={l}")
        w1, w2 = _partition(c, d, k, l, cache)
        p1 = NCPolynomial.sum_of_monomials(w1)
        p2 = NCPolynomial.sum_of_monomials(w2)
        disjoint = not set(w1) & set(w2)
        if not (disjoint and len(w1) + len(w2) == len(tuples) and p1 + p2 == power):
            partition_ok = False
            notes_2.append(f"l={l}")
        trace.levels.append(
            LevelRecord(
                l,
                len(tuples),
                len(w1),
                len(w2),
                evaluate(power, alphabet),
                evaluate(p1, alphabet),
                evaluate(p2, alphabet),
            )
        )
        agg3 = agg3 + power
        agg4 = agg4 + p1
        agg5 = agg5 + p2

    trace._record(
        "1",
        expansion_ok,
        f"(sum D)^l has |D|^l unit terms for l={k}..{mk}"
        if expansion_ok
        else "expansion mismatch at " + ", ".join(notes_1),
    )
    trace._record(
        "2",
        partition_ok,
        "W_l1 and W_l2 partition D^l and their sums add to (sum D)^l"
        if partition_ok
        else "partition mismatch at " + ", ".join(notes_2),
    )

    trace.terms_3, trace.terms_4, trace.terms_5 = len(agg3), len(agg4), len(agg5)
    ok3 = agg3 == agg4 + agg5
    trace._record(
        "3",
        ok3,
        f"S(D) = (4) + (5) as polynomials ({len(agg3)} = {len(agg4)} + {len(agg5)} terms)",
    )

    poly6 = code_sum_power(c, k, limits.max_terms, limits.max_degree)
    rewritten = rewrite_mod_ideal(poly6, c, d)
    ok4 = rewritten == agg4
    trace._record("4", ok4, "(sum C)^k rewritten modulo I(C,D) equals (4)")

    trace.eval_3 = evaluate(agg3, alphabet)
    trace.eval_4 = evaluate(agg4, alphabet)
    trace.eval_5 = evaluate(agg5, alphabet)
    trace.eval_6 = evaluate(poly6, alphabet)
    nonneg = all(coef >= 0 for _, coef in agg5.terms()) and trace.eval_5 >= 0
    trace._record(
        "5",
        nonneg,
        f"eval(5) = {_fmt(trace.eval_5)} >= 0 with non-negative coefficients",
    )
    ok6 = (
        trace.eval_6 == kc**k
        and trace.eval_4 == trace.eval_6
        and trace.eval_3 == trace.eval_5 + trace.eval_6
    )
    trace._record(
        "6",
        ok6,
        f"eval(6) = K(C)^k = {_fmt(trace.eval_6)}; "
        f"eval(3) = {_fmt(trace.eval_3)} = eval(5) + eval(6)",
    )

    lhs, rhs = kc**k, _power_sum(kd, k, m)
    ok7 = trace.eval_3 == rhs and lhs <= rhs
    trace.inequality_7 = InequalityCheck(lhs, rhs, lhs <= rhs, m)
    trace._record("7", ok7, f"K(C)^k = {_fmt(lhs)} <= {_fmt(rhs)}")

    if kd > 1:
        trace._record("8", False, f"K(D) = {_fmt(kd)} > 1")
    top = mk * kd**k
    ok8 = lhs <= rhs <= top
    trace.inequality_8 = ChainCheck(lhs, rhs, top, ok8, m)
    trace._record("8", ok8, f"{_fmt(lhs)} <= {_fmt(rhs)} <= mk*K(D)^k = {_fmt(top)}")
    return trace


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"
