from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import BIN, code
from udcode import (
    Alphabet,
    Code,
    ParseDag,
    all_factorizations,
    concat,
    depth_m,
    is_subcode_of_star,
    is_uniquely_decipherable,
    unique_factorization,
)
from udcode.errors import (
    AlphabetMismatchError,
    EmptyCodeError,
    InconsistentFactorizationError,
    LimitExceededError,
    NotSubcodeError,
)

W = BIN.word


def texts(f):
    return tuple(w.text for w in f)


@pytest.mark.parametrize(
    "word, d, expected",
    [
        ("010", ["0", "01", "10"], [("0", "10"), ("01", "0")]),
        ("", ["0", "10", "11"], [()]),
        ("010", ["0", "10", "11"], [("0", "10")]),
    ],
)
def test_all_factorizations_examples(word, d, expected):
    assert oracles.segmentations(word, d) == expected
    assert [texts(f) for f in all_factorizations(W(word), code(*d))] == expected


def test_all_factorizations_cap():
    d = code("0", "00")
    # 0^12 has fib(13) = 233 factorizations over {0, 00}
    assert len(oracles.segmentations("0" * 12, ["0", "00"])) == 233
    assert len(all_factorizations(W("0" * 12), d, cap=233)) == 233
    with pytest.raises(LimitExceededError) as info:
        all_factorizations(W("0" * 12), d, cap=100)
    assert info.value.value == 233 and info.value.bound == "max_parses"


def test_all_factorizations_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        all_factorizations(Alphabet("ab").word("a"), code("0"))


@given(st.text("01", max_size=9), st.sets(st.text("01", min_size=1, max_size=3), max_size=5))
def test_factorizations_match_segmentation_oracle(word, d):
    c = Code.from_strings(BIN, d)
    found = all_factorizations(W(word), c)
    assert [texts(f) for f in found] == oracles.segmentations(word, d)
    assert ParseDag(W(word), c).count_paths() == len(found)
    for f in found:
        assert concat(f, BIN) == W(word)


@pytest.mark.parametrize(
    "word, d, expected",
    [("1100", ["0", "10", "11"], ("11", "0", "0")), ("1", ["0", "10", "11"], None), ("0", ["0"], ("0",))],
)
def test_unique_factorization_examples(word, d, expected):
    f = unique_factorization(W(word), code(*d))
    assert (None if f is None else texts(f)) == expected


def test_unique_factorization_detects_ambiguity():
    with pytest.raises(InconsistentFactorizationError):
        unique_factorization(W("010"), code("0", "01", "10"))


def test_at_most_one_factorization_over_ud_codes():
    pool = ["".join(p) for n in (1, 2, 3) for p in product("01", repeat=n)]
    words = ["".join(p) for n in range(9) for p in product("01", repeat=n)]
    for size in range(1, 4):
        for ds in combinations(pool, size):
            d = code(*ds)
            if not is_uniquely_decipherable(d).decipherable:
                continue
            for w in words:
                assert len(all_factorizations(W(w), d)) <= 1


def test_subcode_examples():
    d = code("0", "10", "11")
    report = is_subcode_of_star(code("010", "1100", "011"), d)
    assert report.holds
    assert {w.text: texts(f) for w, f in report.parses.items()} == {
        "010": ("0", "10"),
        "1100": ("11", "0", "0"),
        "011": ("0", "11"),
    }
    miss = is_subcode_of_star(code("1"), d)
    assert not miss.holds and [w.text for w in miss.unparseable] == ["1"]
    same = is_subcode_of_star(d, d)
    assert same.holds and all(len(f) == 1 for f in same.parses.values())


def test_subcode_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        is_subcode_of_star(Code.from_strings("ab", ["a"]), code("0"))


@pytest.mark.parametrize(
    "c, d, m",
    [
        (["0", "10", "11"], ["0", "1"], 2),
        (["010", "1100", "011"], ["0", "10", "11"], 3),
        (["0", "10", "11"], ["0", "10", "11"], 1),
        (["1", "10", "100"], ["1", "10", "100"], 1),
    ],
)
def test_depth_m_examples(c, d, m):
    counts = [len(oracles.segmentations(x, d)[0]) for x in c]
    assert max(counts) == m
    assert depth_m(code(*c), code(*d)) == m


def test_depth_m_errors():
    d = code("0", "10", "11")
    with pytest.raises(EmptyCodeError):
        depth_m(Code([], BIN), d)
    with pytest.raises(NotSubcodeError) as info:
        depth_m(code("1", "0"), d)
    assert [w.text for w in info.value.unparseable] == ["1"]


@given(st.lists(st.lists(st.sampled_from(["0", "10", "11"]), min_size=1, max_size=4), min_size=1, max_size=5, unique_by=tuple))
def test_depth_is_max_block_count(seqs):
    d = code("0", "10", "11")
    c_texts = {"".join(s) for s in seqs}
    c = code(*c_texts)
    m = depth_m(c, d)
    counts = [len(unique_factorization(x, d)) for x in c]
    assert all(1 <= n <= m for n in counts) and m in counts
