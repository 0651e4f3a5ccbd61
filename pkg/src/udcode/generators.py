"""Seeded construction of test codes.

Randomness comes from SplitMix64 so that a seed produces the same codes in
any language::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output z ^ (z >> 31)

Bounded draws ``below(n)`` use rejection sampling on the top of the 64-bit
range, so they are exactly uniform.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .codes import Code, is_uniquely_decipherable
from .errors import UdCodeError, UnsatisfiableBoundsError
from .monoid import Alphabet, Word

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        # Fisher-Yates, high index down
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, items: Sequence, n: int) -> list:
        pool = list(items)
        self.shuffle(pool)
        return pool[:n]


@dataclass(frozen=True)
class GenConfig:
    """Parameters for the generators; equal configs give equal output.

    ``size`` is the number of codewords (of D, for composed pairs);
    ``c_size`` the number of words of C in a composed pair.
    """

    seed: int = 0
    alphabet: Alphabet = field(default_factory=lambda: Alphabet("01"))
    size: int = 3
    max_len: int = 4
    c_size: int = 3
    max_blocks: int = 3
    extra_splits: int = 2


def _random_prefix_sequences(rng: SplitMix64, r: int, size: int, max_len: int, extra: int):
    """Leaves of a random r-ary tree, as tuples of digits, pruned to ``size``."""
    if size < 0:
        raise UnsatisfiableBoundsError("size must be non-negative")
    if size == 0:
        return []
    if max_len < 1 or size > r**max_len:
        raise UnsatisfiableBoundsError(
            f"no prefix code of {size} words with length <= {max_len} over {r} symbols"
        )
    leaves: list[tuple[int, ...]] = [()]

    def split():
        candidates = [i for i, leaf in enumerate(leaves) if len(leaf) < max_len]
        if not candidates:
            return False
        i = rng.choice(candidates)
        leaf = leaves.pop(i)
        leaves[i:i] = [leaf + (s,) for s in range(r)]
        return True

    while len(leaves) < size or () in leaves:
        split()
    for _ in range(rng.between(0, extra)):
        if not split():
            break
    return sorted(rng.sample(leaves, size))


def random_prefix_code(cfg: GenConfig) -> Code:
    """A random prefix code of exactly ``cfg.size`` words, lengths ``<= cfg.max_len``."""
    rng = SplitMix64(cfg.seed)
    a = cfg.alphabet
    seqs = _random_prefix_sequences(rng, a.r, cfg.size, cfg.max_len, cfg.extra_splits)
    return Code([Word._trusted("".join(a.symbols[i] for i in s), a) for s in seqs], a)


def random_composed_pair(cfg: GenConfig) -> tuple[Code, Code]:
    """Return ``(c, d)`` with ``d`` a random prefix code and ``c`` built over it.

    The block sequences used for ``c`` form a prefix code over the symbol
    set ``d``, so ``c`` is uniquely decipherable and every word of ``c`` is
    a concatenation of 1 to ``cfg.max_blocks`` words of ``d``.
    """
    rng = SplitMix64(cfg.seed)
    a = cfg.alphabet
    d_seqs = _random_prefix_sequences(rng, a.r, cfg.size, cfg.max_len, cfg.extra_splits)
    d = Code([Word._trusted("".join(a.symbols[i] for i in s), a) for s in d_seqs], a)
    blocks = _random_prefix_sequences(rng, len(d), cfg.c_size, cfg.max_blocks, cfg.extra_splits)
    c = Code(
        [Word._trusted("".join(d.words[i].text for i in b), a) for b in blocks],
        a,
    )
    return c, d


def planted_non_ud_code(u: Word, v: Word, w: Word) -> Code:
    """The code ``{u, uv, vw, w}``, ambiguous on ``uvw`` = u.vw = uv.w.

    With ``v == u`` and ``w == u`` this degenerates to ``{u, uu}``.
    """
    words = {x.text: x for x in (u, u + v, v + w, w)}
    return Code(words.values(), u.alphabet)


def random_non_ud_code(cfg: GenConfig, retries: int = 16) -> Code:
    """A code with a planted collision, padded with random words up to ``cfg.size``."""
    rng = SplitMix64(cfg.seed)
    a = cfg.alphabet
    half = max(1, cfg.max_len // 2)

    def rand_word(lo, hi):
        n = rng.between(lo, hi)
        return Word._trusted("".join(rng.choice(a.symbols) for _ in range(n)), a)

    for _ in range(retries):
        u, v, w = rand_word(1, half), rand_word(1, half), rand_word(1, half)
        code = planted_non_ud_code(u, v, w)
        words = {x.text: x for x in code}
        for _ in range(4 * cfg.size):
            if len(words) >= cfg.size:
                break
            x = rand_word(1, cfg.max_len)
            words.setdefault(x.text, x)
        code = Code(words.values(), a)
        verdict = is_uniquely_decipherable(code)
        if not verdict.decipherable and verdict.verify(code):
            return code
    raise UdCodeError(f"could not build a non-UD code after {retries} attempts")
