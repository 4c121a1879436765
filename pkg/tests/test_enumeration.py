import logging
import random

import pytest

from oracles import has_xyyx
from shufsq import (
    CanonicalWord,
    PreconditionError,
    Word,
    canonical_shuffle_square_count,
    catalan,
    count_table,
    dyck_witness,
    enumerate_canonical_words,
    has_xyyx_subword,
    is_dyck,
    is_shuffle_square,
    total_shuffle_squares,
    two_ones_closed_form,
    validate_witness,
)
from shufsq.enumeration import color_pattern

LENGTHS = list(range(2, 21, 2))

# |B(2n, 2k)| by row 2k, columns 2n = 2, 4, ..., 20
TABLE_5 = {
    2: [1, 4, 10, 19, 31, 46, 64, 85, 109, 136],
    4: [0, 1, 10, 42, 128, 306, 633, 1169, 1997, 3199],
    6: [0, 0, 1, 19, 128, 562, 1853, 5041, 11914, 25331],
    8: [0, 0, 0, 1, 31, 306, 1853, 8040, 27965, 82208],
    10: [0, 0, 0, 0, 1, 46, 633, 5041, 27965, 120718],
}
TOTALS = [2, 6, 22, 82, 320, 1268, 5102, 20632, 83972, 342468]


def _check_table(table, max_length):
    for column, two_n in enumerate(LENGTHS):
        if two_n > max_length:
            break
        for two_k, row in TABLE_5.items():
            assert table.cell(two_n, two_k) == row[column], (two_n, two_k)
        assert table.totals[two_n] == TOTALS[column]


# --- Count table ---


def test_count_table_small(caplog):
    with caplog.at_level(logging.ERROR, logger="shufsq"):
        table = count_table(12, workers=1)
    _check_table(table, 12)
    assert not [r for r in caplog.records if r.levelno >= logging.ERROR]


def test_count_table_symmetry():
    table = count_table(10, workers=1)
    for two_n in table.lengths:
        for two_k in range(0, two_n + 1, 2):
            assert table.cell(two_n, two_k) == table.cell(two_n, two_n - two_k)


@pytest.mark.slow
def test_count_table_to_16():
    _check_table(count_table(16, workers=2), 16)


@pytest.mark.extended
def test_count_table_to_20():
    _check_table(count_table(20, workers=4), 20)


def test_count_table_csv():
    assert count_table(4, workers=1).to_csv() == "2k\\2n,2,4\n2,1,4\ntotal,2,6\n"


def test_count_table_rejects_odd_length():
    with pytest.raises(PreconditionError):
        count_table(9)


@pytest.mark.parametrize("two_n", [2, 4, 6, 8, 10])
def test_totals_match_direct_count(two_n):
    table = count_table(two_n, workers=1)
    assert table.totals[two_n] == total_shuffle_squares(two_n)


@pytest.mark.parametrize("n, value", [(1, 1), (2, 4), (3, 10), (4, 19), (5, 31), (10, 136)])
def test_two_ones_closed_form(n, value):
    assert two_ones_closed_form(n) == value


def test_two_ones_closed_form_rejects_zero():
    with pytest.raises(PreconditionError):
        two_ones_closed_form(0)


# --- XYYX and the Catalan count ---


def test_has_xyyx_subword():
    assert has_xyyx_subword(Word("ABBA"))
    assert not has_xyyx_subword(Word("AABB"))
    assert not has_xyyx_subword(Word("ABAB"))
    assert has_xyyx_subword(Word("ABCBAC"))


def test_has_xyyx_matches_quartic_search():
    for k in (2, 3, 4):
        for word in enumerate_canonical_words(k):
            assert has_xyyx_subword(word) == has_xyyx(word), str(word)


def test_has_xyyx_matches_quartic_search_on_arbitrary_words():
    rng = random.Random(6)
    for _ in range(300):
        word = Word(bytes(rng.randrange(3) for _ in range(rng.randrange(1, 13))), 3)
        assert has_xyyx_subword(word) == has_xyyx(word), str(word)
    assert has_xyyx_subword(Word("AAAA"))
    assert not has_xyyx_subword(Word("ABCABC"))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_canonical_shuffle_squares_avoid_xyyx(k):
    for word in enumerate_canonical_words(k):
        assert (is_shuffle_square(word) is not None) == (not has_xyyx_subword(word)), str(word)


def test_catalan_numbers():
    assert [catalan(k) for k in range(1, 6)] == [1, 2, 5, 14, 42]


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_canonical_shuffle_square_count(k):
    assert canonical_shuffle_square_count(k) == catalan(k)


@pytest.mark.extended
def test_canonical_shuffle_square_count_k6():
    assert canonical_shuffle_square_count(6) == catalan(6)


# --- Dyck words ---


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_dyck_witness_exactly_for_shuffle_squares(k):
    for word in enumerate_canonical_words(k):
        witness = dyck_witness(word)
        assert (witness is not None) == (is_shuffle_square(word) is not None), str(word)
        if witness is not None:
            assert validate_witness(word, witness)
            assert is_dyck(color_pattern(witness))


def test_dyck_witness_example():
    word = CanonicalWord("AABCBC")
    witness = dyck_witness(word)
    assert witness.first_positions == (0, 2, 3)
    assert color_pattern(witness) == "()(())"
    assert str(witness.first(word)) == "ABC"


def test_dyck_witness_absent_for_nested_chords():
    assert dyck_witness(CanonicalWord("ABBA")) is None


@pytest.mark.parametrize(
    "pattern, expected",
    [("(())", True), ("()()", True), (")(", False), ("(()", False), ("", True), ([True, False], True)],
)
def test_is_dyck(pattern, expected):
    assert is_dyck(pattern) is expected
