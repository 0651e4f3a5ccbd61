"""Polynomials in non-commuting indeterminates, one per word.

A monomial is a tuple of :class:`~udcode.monoid.Word` objects. Two
monomials are equal only when their word sequences are equal, so
``("0", "10")`` and ``("01", "0")`` are different monomials even though
both spell ``010``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .codes import Code, check_same_alphabet
from .errors import (
    AlphabetMismatchError,
    IndeterminateOutsideCodeError,
    LimitExceededError,
    NotSubcodeError,
)
from .factorization import unique_factorization
from .monoid import Alphabet, Word

DEFAULT_MAX_TERMS = 200_000
DEFAULT_MAX_DEGREE = 12

Monomial = tuple  # tuple[Word, ...]; () is the unit monomial


def monomial_key(m: Monomial) -> tuple:
    return (len(m), tuple(w.sort_key for w in m))


class NCPolynomial:
    """An element of the free associative algebra over the rationals.

    Stored as a mapping from monomials to non-zero :class:`Fraction`
    coefficients. Instances are treated as immutable.

    >>> from udcode.monoid import Alphabet
    >>> A = Alphabet("01")
    >>> x, y = NCPolynomial.var(A.word("0")), NCPolynomial.var(A.word("1"))
    >>> x * y == y * x
    False
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Rational] | None = None):
        clean = {}
        if terms:
            for m, coef in terms.items():
                coef = Fraction(coef)
                if coef:
                    clean[tuple(m)] = coef
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> NCPolynomial:
        p = object.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def zero(cls) -> NCPolynomial:
        return cls._raw({})

    @classmethod
    def one(cls) -> NCPolynomial:
        return cls._raw({(): Fraction(1)})

    @classmethod
    def var(cls, word: Word) -> NCPolynomial:
        return cls._raw({(word,): Fraction(1)})

    @classmethod
    def monomial(cls, words: Iterable[Word], coef: Rational = 1) -> NCPolynomial:
        """The product ``coef * w1 * w2 * ...`` (``P(w)`` when coef is 1)."""
        return cls({tuple(words): coef})

    @classmethod
    def sum_of_monomials(cls, seqs: Iterable[Iterable[Word]]) -> NCPolynomial:
        terms: dict = {}
        one = Fraction(1)
        for s in seqs:
            m = tuple(s)
            terms[m] = terms.get(m, 0) + one
        return cls._raw(terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, m: Iterable[Word]) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical monomial order (length, then wordwise)."""
        return sorted(self._terms.items(), key=lambda t: monomial_key(t[0]))

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms()]

    def indeterminates(self) -> set[Word]:
        return {w for m in self._terms for w in m}

    def degree(self) -> int:
        return max((len(m) for m in self._terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, NCPolynomial):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == NCPolynomial({(): other})._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> NCPolynomial:
        return NCPolynomial._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, Rational):
            other = NCPolynomial({(): other})
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Rational):
            other = NCPolynomial({(): other})
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return poly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> NCPolynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = NCPolynomial.one()
        for _ in range(n):
            result = poly_mul(result, self)
        return result

    def scale(self, k: Rational) -> NCPolynomial:
        k = Fraction(k)
        if not k:
            return NCPolynomial.zero()
        return NCPolynomial._raw({m: c * k for m, c in self._terms.items()})

    def to_text(self) -> str:
        """Serialize as ``coef * (w1.w2)`` terms joined by `` + ``.

        The unit monomial prints as ``1`` and the empty word as ``ε``.
        """
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.terms():
            coef = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            mono = "1" if not m else "(" + ".".join(w.text or "ε" for w in m) + ")"
            parts.append(f"{coef} * {mono}")
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"NCPolynomial({self.to_text()!r})"


def poly_add(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    terms = dict(p._terms)
    for m, c in q._terms.items():
        s = terms.get(m, 0) + c
        if s:
            terms[m] = s
        else:
            terms.pop(m, None)
    return NCPolynomial._raw(terms)


def poly_mul(p: NCPolynomial, q: NCPolynomial, max_terms: int = DEFAULT_MAX_TERMS) -> NCPolynomial:
    """Product extending monomial concatenation bilinearly.

    Raises LimitExceededError (bound ``max_terms``) if the product could
    hold more than ``max_terms`` monomials.
    """
    bound = len(p._terms) * len(q._terms)
    if bound > max_terms:
        raise LimitExceededError("max_terms", bound, max_terms, "polynomial product")
    terms: dict = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            m = m1 + m2
            s = terms.get(m, 0) + c1 * c2
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
    return NCPolynomial._raw(terms)


def code_sum(c: Code) -> NCPolynomial:
    """Sum of the codewords of ``c``, each as a degree-one monomial."""
    return NCPolynomial._raw({(w,): Fraction(1) for w in c})


def code_sum_power(
    d: Code,
    l: int,
    max_terms: int = DEFAULT_MAX_TERMS,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> NCPolynomial:
    if l < 0:
        raise ValueError("exponent must be non-negative")
    if l > max_degree:
        raise LimitExceededError("max_degree", l, max_degree, "code-sum power")
    if len(d) ** l > max_terms:
        raise LimitExceededError("max_terms", len(d) ** l, max_terms, f"code-sum power {l}")
    base = code_sum(d)
    result = NCPolynomial.one()
    for _ in range(l):
        result = poly_mul(result, base, max_terms)
    return result


def evaluate(p: NCPolynomial, a: Alphabet) -> Fraction:
    """Substitute ``r ** -len(x)`` for every indeterminate ``x``."""
    r = a.r
    total = Fraction(0)
    for m, coef in p._terms.items():
        n = 0
        for w in m:
            if w.alphabet != a:
                raise AlphabetMismatchError(
                    f"indeterminate {w.text!r} is over {w.alphabet.symbols!r}, "
                    f"not {a.symbols!r}"
                )
            n += len(w.text)
        total += coef / r**n
    return total


def rewrite_mod_ideal(p: NCPolynomial, c: Code, d: Code) -> NCPolynomial:
    """Replace every indeterminate of ``c`` by its ``d``-factorization.

    Each monomial ``(x1, ..., xn)`` maps to the flattened sequence of the
    factorizations of the ``xi``. The result differs from ``p`` by an
    element of the ideal generated by ``x - P(w)`` (``x`` in ``c``,
    ``w`` its ``d``-factorization).
    """
    check_same_alphabet(c, d)
    subst: dict[Word, tuple] = {}
    terms: dict = {}
    for m, coef in p._terms.items():
        out = []
        for x in m:
            f = subst.get(x)
            if f is None:
                if x not in c:
                    raise IndeterminateOutsideCodeError(
                        f"indeterminate {x.text!r} is not a codeword of C"
                    )
                f = unique_factorization(x, d)
                if f is None:
                    raise NotSubcodeError([x])
                subst[x] = f
            out.extend(f)
        key = tuple(out)
        s = terms.get(key, 0) + coef
        if s:
            terms[key] = s
        else:
            terms.pop(key, None)
    return NCPolynomial._raw(terms)
