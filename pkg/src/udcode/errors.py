"""Exception types raised across the package."""

from __future__ import annotations

from fractions import Fraction


class UdCodeError(Exception):
    """Base class for every error raised by udcode."""


class AlphabetError(UdCodeError, ValueError):
    pass


class AlphabetMismatchError(AlphabetError):
    pass


class InvalidCodeError(UdCodeError, ValueError):
    """A codeword list contained the empty word or a duplicate."""


class KraftViolationError(UdCodeError, ValueError):
    def __init__(self, total: Fraction):
        self.total = total
        super().__init__(
            f"Kraft sum {total.numerator}/{total.denominator} > 1: "
            "no prefix code has these lengths"
        )


class LimitExceededError(UdCodeError, RuntimeError):
    """An enumeration or expansion bound was exceeded.

    ``bound`` names the flag/parameter that tripped (e.g. ``max_terms``),
    ``value`` is the size that was reached or required.
    """

    def __init__(self, bound: str, value: int, limit: int, what: str = ""):
        self.bound = bound
        self.value = value
        self.limit = limit
        msg = f"{bound} exceeded: {value} > {limit}"
        if what:
            msg += f" ({what})"
        super().__init__(msg)


class InconsistentFactorizationError(UdCodeError, RuntimeError):
    """Two factorizations were found where at most one was expected."""


class NotUniquelyDecipherableError(UdCodeError, ValueError):
    def __init__(self, verdict, label: str = "code"):
        self.verdict = verdict
        self.label = label
        word, first, second = verdict.witness
        super().__init__(
            f"{label} is not uniquely decipherable: {word.text!r} = "
            f"({','.join(map(str, first))}) = ({','.join(map(str, second))})"
        )


class NotSubcodeError(UdCodeError, ValueError):
    """Some words of C are not concatenations of words of D."""

    def __init__(self, unparseable):
        self.unparseable = tuple(unparseable)
        super().__init__(
            "not a concatenation of codewords: "
            + ", ".join(repr(w.text) for w in self.unparseable)
        )


class IndeterminateOutsideCodeError(UdCodeError, ValueError):
    pass


class EmptyCodeError(UdCodeError, ValueError):
    pass


class UnsatisfiableBoundsError(UdCodeError, ValueError):
    pass


class TraceCheckError(UdCodeError, AssertionError):
    """A checked identity or inequality of the proof trace failed."""

    def __init__(self, expression: str, detail: str):
        self.expression = expression
        self.detail = detail
        super().__init__(f"expression ({expression}) failed: {detail}")


class CodeFileError(UdCodeError, ValueError):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = path or "<input>"
        if line is not None:
            where += f":{line}"
        super().__init__(f"{where}: {message}")
