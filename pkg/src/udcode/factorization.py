"""Parsing words over a code."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .codes import Code, check_same_alphabet
from .errors import (
    AlphabetMismatchError,
    EmptyCodeError,
    InconsistentFactorizationError,
    LimitExceededError,
    NotSubcodeError,
)
from .monoid import Word

DEFAULT_MAX_PARSES = 10_000

Factorization = tuple  # tuple[Word, ...] whose concatenation is the parsed word


class ParseDag:
    """All ways of cutting ``word`` into codewords of ``code``.

    Nodes are the positions ``0..len(word)``; an edge ``i -> j`` is labelled
    by the codeword equal to ``word[i:j]``. Only edges lying on some
    0-to-end path are kept, so every path enumerated is a factorization.
    """

    def __init__(self, word: Word, code: Code):
        if word.alphabet != code.alphabet:
            raise AlphabetMismatchError(
                f"alphabet mismatch: word over {word.alphabet.symbols!r}, "
                f"code over {code.alphabet.symbols!r}"
            )
        self.word = word
        self.code = code
        text = word.text
        n = len(text)
        raw: list[list[tuple[int, Word]]] = [[] for _ in range(n + 1)]
        for i in range(n):
            for cw in code.words:
                if text.startswith(cw.text, i):
                    raw[i].append((i + len(cw.text), cw))

        # paths[i] = number of paths from i to n
        paths = [0] * (n + 1)
        paths[n] = 1
        for i in range(n - 1, -1, -1):
            paths[i] = sum(paths[j] for j, _ in raw[i])
        self._paths = paths
        self.edges: list[list[tuple[int, Word]]] = [
            [(j, cw) for j, cw in out if paths[j]] for out in raw
        ]

    def count_paths(self) -> int:
        return self._paths[0]

    def paths(self) -> Iterator[Factorization]:
        """Yield factorizations in lexicographic block order."""
        n = len(self.word.text)
        if not self._paths[0]:
            return
        stack: list[tuple[int, tuple]] = [(0, ())]
        while stack:
            i, blocks = stack.pop()
            if i == n:
                yield blocks
                continue
            # edges are already in canonical codeword order; push reversed
            for j, cw in reversed(self.edges[i]):
                stack.append((j, blocks + (cw,)))


def all_factorizations(w: Word, d: Code, cap: int = DEFAULT_MAX_PARSES) -> list[Factorization]:
    """Every sequence of codewords of ``d`` that concatenates to ``w``.

    Raises LimitExceededError (bound ``max_parses``) when there are more
    than ``cap`` factorizations; the exact total is reported.
    """
    dag = ParseDag(w, d)
    total = dag.count_paths()
    if total > cap:
        raise LimitExceededError("max_parses", total, cap, f"factorizations of {w.text!r}")
    return list(dag.paths())


def unique_factorization(w: Word, d: Code) -> Optional[Factorization]:
    """The factorization of ``w`` over a uniquely decipherable ``d``, if any."""
    dag = ParseDag(w, d)
    found = list(_take(dag.paths(), 2))
    if len(found) > 1:
        a, b = found
        raise InconsistentFactorizationError(
            f"{w.text!r} has two factorizations ({','.join(map(str, a))}) and "
            f"({','.join(map(str, b))}); the code is not uniquely decipherable"
        )
    return found[0] if found else None


def _take(it, n):
    for i, x in enumerate(it):
        if i >= n:
            return
        yield x


@dataclass(frozen=True)
class SubcodeReport:
    """Per-word factorizations of ``c`` over ``d``; ``None`` marks a miss."""

    parses: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(f is not None for f in self.parses.values())

    @property
    def unparseable(self) -> tuple[Word, ...]:
        return tuple(w for w, f in self.parses.items() if f is None)

    def __bool__(self):
        return self.holds


def is_subcode_of_star(c: Code, d: Code) -> SubcodeReport:
    """Check that every word of ``c`` is a concatenation of words of ``d``."""
    check_same_alphabet(c, d)
    return SubcodeReport({x: unique_factorization(x, d) for x in c})


def depth_m(c: Code, d: Code) -> int:
    """Largest number of ``d``-blocks in the factorization of a word of ``c``."""
    if not len(c):
        raise EmptyCodeError("depth is undefined for an empty code")
    report = is_subcode_of_star(c, d)
    if not report.holds:
        raise NotSubcodeError(report.unparseable)
    return max(len(f) for f in report.parses.values())
