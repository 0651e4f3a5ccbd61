"""Reading and writing code files.

Format::

    # comments start with '#'
    alphabet: 01
    0
    10
    11

The first non-comment line declares the alphabet as a run of distinct
single characters. Each following non-empty line holds one codeword.
Blank lines are skipped; whitespace-only lines and the marker ``""`` are
rejected as empty codewords, and repeated codewords are rejected.
"""

from __future__ import annotations

from pathlib import Path

from .codes import Code
from .errors import AlphabetError, CodeFileError
from .monoid import Alphabet, Word


def parse_code(text: str, path: str | None = None) -> Code:
    alphabet = None
    words: list[Word] = []
    first_line: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if line == "":
            continue
        if alphabet is None:
            if not stripped.startswith("alphabet:"):
                raise CodeFileError("expected 'alphabet: <symbols>' header", lineno, path)
            symbols = stripped[len("alphabet:"):].strip()
            if not symbols:
                raise CodeFileError("alphabet is empty", lineno, path)
            if any(ch.isspace() for ch in symbols):
                raise CodeFileError("alphabet symbols must not be separated", lineno, path)
            try:
                alphabet = Alphabet(symbols)
            except AlphabetError as exc:
                raise CodeFileError(str(exc), lineno, path) from None
            continue
        if stripped in ("", '""'):
            raise CodeFileError("empty codeword", lineno, path)
        if stripped in first_line:
            raise CodeFileError(
                f"duplicate codeword {stripped!r} (first on line {first_line[stripped]})",
                lineno,
                path,
            )
        try:
            words.append(Word(stripped, alphabet))
        except AlphabetError as exc:
            raise CodeFileError(str(exc), lineno, path) from None
        first_line[stripped] = lineno
    if alphabet is None:
        raise CodeFileError("missing 'alphabet:' header", None, path)
    return Code(words, alphabet)


def read_code(path: str | Path) -> Code:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise CodeFileError(f"cannot read file: {exc.strerror}", None, str(path)) from None
    return parse_code(text, str(path))


def format_code(code: Code, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"alphabet: {code.alphabet.symbols}")
    lines.extend(code.texts)
    return "\n".join(lines) + "\n"


def write_code(code: Code, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_code(code, comment), encoding="utf-8")
