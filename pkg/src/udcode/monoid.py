"""The free monoid over a finite alphabet: alphabets, words, concatenation."""

from __future__ import annotations

from functools import total_ordering
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetError, AlphabetMismatchError


class Alphabet:
    """A non-empty ordered set of single-character symbols.

    The order in which symbols are given is the order used for every
    canonical (length-then-lexicographic) ordering of words.

    >>> Alphabet("01").r
    2
    """

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: str | Sequence[str]):
        symbols = tuple(symbols)
        if not symbols:
            raise AlphabetError("alphabet must be non-empty")
        for s in symbols:
            if not isinstance(s, str) or len(s) != 1:
                raise AlphabetError(f"symbols must be single characters, got {s!r}")
        if len(set(symbols)) != len(symbols):
            raise AlphabetError(f"duplicate symbols in alphabet {''.join(symbols)!r}")
        self.symbols = "".join(symbols)
        self._index = {s: i for i, s in enumerate(symbols)}

    @property
    def r(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._index

    def __eq__(self, other):
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.symbols == other.symbols

    def __hash__(self):
        return hash(("Alphabet", self.symbols))

    def __repr__(self):
        return f"Alphabet({self.symbols!r})"

    def index(self, symbol: str) -> int:
        return self._index[symbol]

    def word(self, text: str) -> Word:
        return Word(text, self)

    @property
    def empty(self) -> Word:
        return Word("", self)

    def words_of_length(self, n: int) -> Iterator[Word]:
        """All words of length ``n``, in canonical order."""
        for chars in product(self.symbols, repeat=n):
            yield Word._trusted("".join(chars), self)

    @classmethod
    def of_size(cls, r: int) -> Alphabet:
        """Default alphabet with ``r`` symbols: ``0-9`` then ``a-z`` then ``A-Z``."""
        pool = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
        if not 1 <= r <= len(pool):
            raise AlphabetError(f"no default alphabet of size {r}")
        return cls(pool[:r])


@total_ordering
class Word:
    """An immutable word over an :class:`Alphabet`.

    Words compare by length first and then lexicographically in alphabet
    order. Comparing words over different alphabets is an error.
    """

    __slots__ = ("text", "alphabet", "_key")

    def __init__(self, text: str, alphabet: Alphabet):
        for ch in text:
            if ch not in alphabet:
                raise AlphabetError(
                    f"symbol {ch!r} of {text!r} not in alphabet {alphabet.symbols!r}"
                )
        self.text = text
        self.alphabet = alphabet
        self._key = None

    @classmethod
    def _trusted(cls, text: str, alphabet: Alphabet) -> Word:
        # caller guarantees every character is in the alphabet
        w = object.__new__(cls)
        w.text = text
        w.alphabet = alphabet
        w._key = None
        return w

    @property
    def sort_key(self) -> tuple:
        if self._key is None:
            idx = self.alphabet._index
            self._key = (len(self.text), tuple(idx[c] for c in self.text))
        return self._key

    def __len__(self) -> int:
        return len(self.text)

    def __bool__(self) -> bool:
        return bool(self.text)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.text == other.text and self.alphabet == other.alphabet

    def __hash__(self):
        return hash(self.text)

    def __lt__(self, other: Word) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        _check_same(self.alphabet, other.alphabet)
        return self.sort_key < other.sort_key

    def __add__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        _check_same(self.alphabet, other.alphabet)
        return Word._trusted(self.text + other.text, self.alphabet)

    def startswith(self, prefix: Word) -> bool:
        return self.text.startswith(prefix.text)

    def __str__(self):
        return self.text

    def __repr__(self):
        return f"Word({self.text!r})"


def _check_same(a: Alphabet, b: Alphabet) -> None:
    if a != b:
        raise AlphabetMismatchError(
            f"alphabet mismatch: {a.symbols!r} vs {b.symbols!r}"
        )


def common_alphabet(words: Iterable[Word], alphabet: Alphabet | None = None) -> Alphabet | None:
    """Return the alphabet shared by ``words`` (or ``alphabet`` if given).

    Raises AlphabetMismatchError on mixed alphabets.
    """
    for w in words:
        if alphabet is None:
            alphabet = w.alphabet
        else:
            _check_same(alphabet, w.alphabet)
    return alphabet


def concat(ws: Sequence[Word], alphabet: Alphabet | None = None) -> Word:
    """Concatenate a sequence of words left to right.

    ``alphabet`` is only needed to build the empty word from an empty
    sequence.
    """
    alphabet = common_alphabet(ws, alphabet)
    if alphabet is None:
        raise AlphabetError("concat of an empty sequence needs an explicit alphabet")
    return Word._trusted("".join(w.text for w in ws), alphabet)


def length(w: Word) -> int:
    return len(w.text)
