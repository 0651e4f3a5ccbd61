import pytest

import oracles
from udcode import (
    Alphabet,
    GenConfig,
    SplitMix64,
    check_extended_mcmillan,
    is_prefix_code,
    is_subcode_of_star,
    is_uniquely_decipherable,
    kraft_sum,
    random_composed_pair,
    random_non_ud_code,
    random_prefix_code,
)
from udcode.errors import UnsatisfiableBoundsError
from udcode.generators import planted_non_ud_code

BIN = Alphabet("01")


def test_splitmix64_reference_values():
    # reference outputs of SplitMix64 seeded with 0 and 1234567
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_below_is_in_range():
    rng = SplitMix64(99)
    draws = [rng.below(7) for _ in range(2000)]
    assert set(draws) == set(range(7))


def test_prefix_code_postconditions():
    for seed in range(200):
        cfg = GenConfig(seed=seed, size=1 + seed % 6, max_len=4)
        c = random_prefix_code(cfg)
        assert len(c) == cfg.size
        assert max(len(w) for w in c) <= 4
        assert is_prefix_code(c) and oracles.is_prefix_free(c.texts)
        assert is_uniquely_decipherable(c).decipherable


def test_prefix_code_singleton_and_determinism():
    assert len(random_prefix_code(GenConfig(seed=5, size=1))) == 1
    cfg = GenConfig(seed=11, alphabet=Alphabet("abc"), size=5, max_len=3)
    assert random_prefix_code(cfg) == random_prefix_code(cfg)


def test_prefix_code_unsatisfiable():
    with pytest.raises(UnsatisfiableBoundsError):
        random_prefix_code(GenConfig(size=2**4 + 1, max_len=4))
    # exactly 2^maxlen leaves is still possible
    c = random_prefix_code(GenConfig(size=16, max_len=4))
    assert sorted(c.texts) == sorted(w.text for w in BIN.words_of_length(4))


def test_composed_pair_postconditions():
    for seed in range(100):
        cfg = GenConfig(seed=seed, size=3, c_size=4, max_blocks=3)
        c, d = random_composed_pair(cfg)
        assert is_uniquely_decipherable(c).decipherable
        assert is_uniquely_decipherable(d).decipherable
        report = is_subcode_of_star(c, d)
        assert report.holds
        assert all(1 <= len(f) <= 3 for f in report.parses.values())
        assert kraft_sum(c) <= kraft_sum(d)


def test_composed_pair_single_block_is_subset():
    for seed in range(20):
        c, d = random_composed_pair(GenConfig(seed=seed, size=4, c_size=3, max_blocks=1))
        assert set(c.texts) <= set(d.texts)


def test_composed_pair_theorem_instance():
    c, d = random_composed_pair(GenConfig(seed=2, size=3, c_size=4, max_blocks=3))
    v = check_extended_mcmillan(c, d)
    assert v.holds and v.kraft_c <= v.kraft_d


def test_planted_collisions():
    w = BIN.word
    c = planted_non_ud_code(w("0"), w("1"), w("0"))
    assert c.texts == ("0", "01", "10")
    assert is_uniquely_decipherable(c).witness[0].text == "010"
    c = planted_non_ud_code(w("00"), w("00"), w("00"))
    assert c.texts == ("00", "0000")
    v = is_uniquely_decipherable(c)
    assert not v.decipherable and v.verify(c)


def test_non_ud_outputs_verify():
    for seed in range(100):
        cfg = GenConfig(seed=seed, size=5, max_len=4)
        c = random_non_ud_code(cfg)
        v = is_uniquely_decipherable(c)
        assert not v.decipherable and v.verify(c)
        assert oracles.collision(c.texts, 4) is not None
    cfg = GenConfig(seed=3, size=5)
    assert random_non_ud_code(cfg) == random_non_ud_code(cfg)
