from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import BIN, code
from udcode import (
    Alphabet,
    Code,
    construct_prefix_code,
    is_prefix_code,
    is_uniquely_decipherable,
    kraft_sum,
)
from udcode.errors import AlphabetMismatchError, InvalidCodeError, KraftViolationError


def test_code_rejects_empty_word_and_duplicates():
    with pytest.raises(InvalidCodeError):
        code("0", "")
    with pytest.raises(InvalidCodeError):
        code("0", "10", "0")
    with pytest.raises(InvalidCodeError):
        Code([])


def test_code_rejects_mixed_alphabets():
    with pytest.raises(AlphabetMismatchError):
        Code([BIN.word("0"), Alphabet("ab").word("a")])


def test_code_iterates_in_canonical_order():
    assert code("11", "0", "10").texts == ("0", "10", "11")


# -- Kraft sums ----------------------------------------------------------------


@pytest.mark.parametrize(
    "texts, expected",
    [
        (["0", "1"], Fraction(1)),
        (["0", "10", "11"], Fraction(1)),
        ([], Fraction(0)),
        (["010", "1100", "011"], Fraction(5, 16)),
    ],
)
def test_kraft_sum_examples(texts, expected):
    assert expected == oracles.kraft(texts, 2)
    assert kraft_sum(code(*texts)) == expected


def test_kraft_sum_unary_counts_codewords():
    U = Alphabet("a")
    assert kraft_sum(Code.from_strings(U, ["a", "aaa"])) == 2


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_full_code_has_kraft_one_and_is_ud(r, n):
    full = Code.full(Alphabet.of_size(r), n)
    assert len(full) == r**n
    assert kraft_sum(full) == 1
    assert is_uniquely_decipherable(full).decipherable


@given(st.sets(st.text("012", min_size=1, max_size=5), max_size=6), st.text("012", min_size=1, max_size=5))
def test_kraft_additive_on_new_word(texts, extra):
    A = Alphabet("012")
    c = Code.from_strings(A, texts)
    if extra in texts:
        return
    bigger = c.with_word(A.word(extra))
    assert kraft_sum(bigger) == kraft_sum(c) + Fraction(1, 3 ** len(extra))
    assert kraft_sum(bigger) > kraft_sum(c)


# -- unique decipherability --------------------------------------------------


@pytest.mark.parametrize("texts", [["0", "10", "11"], ["1", "10", "100"]])
def test_ud_positive_examples(texts):
    assert oracles.collision(texts, 8) is None
    v = is_uniquely_decipherable(code(*texts))
    assert v.decipherable and v.witness is None


def test_ud_negative_example_witness_010():
    c = code("0", "01", "10")
    assert oracles.collision(["0", "01", "10"], 6)[0] == "010"
    v = is_uniquely_decipherable(c)
    assert not v.decipherable
    word, first, second = v.witness
    assert word.text == "010"
    assert {tuple(map(str, first)), tuple(map(str, second))} == {("0", "10"), ("01", "0")}
    assert v.verify(c)


def test_ud_negative_example_powers():
    c = code("00", "0000")
    v = is_uniquely_decipherable(c)
    assert not v.decipherable and v.verify(c)
    # shortest collision; "000000" = (00,0000) = (0000,00) is another one
    assert v.witness[0].text == "0000"
    assert ("00", "0000") in oracles.segmentations("000000", ["00", "0000"])
    assert ("0000", "00") in oracles.segmentations("000000", ["00", "0000"])


def test_empty_code_is_ud():
    assert is_uniquely_decipherable(Code([], BIN)).decipherable


def test_unary_alphabet():
    U = Alphabet("a")
    assert is_uniquely_decipherable(Code.from_strings(U, ["aa"])).decipherable
    v = is_uniquely_decipherable(Code.from_strings(U, ["a", "aa"]))
    assert not v.decipherable


def _small_universe():
    pool = ["".join(p) for n in (1, 2, 3) for p in product("01", repeat=n)]
    for size in range(4):
        yield from combinations(pool, size)


def test_ud_agrees_with_brute_force_small_universe():
    for texts in _small_universe():
        c = code(*texts)
        v = is_uniquely_decipherable(c)
        assert v.decipherable == (oracles.collision(texts, 6) is None), texts
        if not v.decipherable:
            assert v.verify(c)


def test_ud_witness_is_shortest():
    for texts in _small_universe():
        v = is_uniquely_decipherable(code(*texts))
        if v.decipherable:
            continue
        n = len(v.witness[0])
        shorter = ["".join(p) for m in range(1, n) for p in product("01", repeat=m)]
        assert all(len(oracles.segmentations(s, texts)) < 2 for s in shorter), texts


@settings(max_examples=150)
@given(st.sets(st.text("012", min_size=1, max_size=4), max_size=5))
def test_prefix_implies_ud(texts):
    c = Code.from_strings("012", texts)
    assert is_prefix_code(c) == oracles.is_prefix_free(texts)
    if is_prefix_code(c):
        assert is_uniquely_decipherable(c).decipherable


@settings(max_examples=150)
@given(st.sets(st.text("01", min_size=1, max_size=4), max_size=4))
def test_negative_verdicts_self_verify(texts):
    c = Code.from_strings("01", texts)
    v = is_uniquely_decipherable(c)
    if not v.decipherable:
        assert v.verify(c)
        word, first, second = v.witness
        parses = oracles.segmentations(word.text, texts)
        assert tuple(map(str, first)) in parses and tuple(map(str, second)) in parses


# -- prefix codes ----------------------------------------------------------------


@pytest.mark.parametrize(
    "texts, expected", [(["0", "10", "11"], True), (["0", "01", "10"], False), ([], True)]
)
def test_is_prefix_code_examples(texts, expected):
    assert is_prefix_code(code(*texts)) is expected


@pytest.mark.parametrize(
    "lengths, expected",
    [([1, 2, 2], ["0", "10", "11"]), ([1], ["0"]), ([3], ["000"]), ([2, 1, 2], ["0", "10", "11"])],
)
def test_construct_prefix_code_examples(lengths, expected):
    assert construct_prefix_code(lengths, BIN).texts == tuple(expected)


def test_construct_prefix_code_violation_reports_sum():
    assert oracles.kraft(["0", "1", "00"], 2) == Fraction(5, 4)
    with pytest.raises(KraftViolationError) as info:
        construct_prefix_code([1, 1, 2], BIN)
    assert info.value.total == Fraction(5, 4)
    assert "5/4" in str(info.value)


def test_construct_prefix_code_ternary_and_unary():
    assert construct_prefix_code([1, 1, 2, 2, 2], Alphabet("abc")).texts == (
        "a", "b", "ca", "cb", "cc",
    )
    assert construct_prefix_code([3], Alphabet("x")).texts == ("xxx",)
    with pytest.raises(KraftViolationError):
        construct_prefix_code([1, 2], Alphabet("x"))


def test_construct_prefix_code_rejects_bad_lengths():
    with pytest.raises(ValueError):
        construct_prefix_code([0], BIN)


@given(st.integers(2, 4), st.lists(st.integers(1, 6), max_size=10))
def test_construct_prefix_code_round_trip(r, lengths):
    A = Alphabet.of_size(r)
    total = oracles.kraft(["x" * l for l in lengths], r)
    if total > 1:
        with pytest.raises(KraftViolationError):
            construct_prefix_code(lengths, A)
        return
    c = construct_prefix_code(lengths, A)
    assert sorted(len(w) for w in c) == sorted(lengths)
    assert oracles.is_prefix_free(c.texts)
    assert kraft_sum(c) == total
