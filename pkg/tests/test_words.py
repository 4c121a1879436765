from math import factorial

import pytest

from shufsq import (
    ALL_SYMMETRIES,
    AlphabetError,
    CanonicalWord,
    DegreeMismatchError,
    GroupKind,
    GroupSpec,
    Permutation,
    Word,
    WordParseError,
    cyclic_shifts,
    enumerate_canonical_words,
    group_members,
    is_even,
    is_square,
    iter_orbit_representatives,
    necklaces,
    orbit_representative,
    parse_permutation,
    parse_word,
)
from shufsq.models import symmetric_group

# --- Parsing ---


def test_parse_binary_word():
    word = parse_word("0110")
    assert word.letters == b"\x00\x01\x01\x00"
    assert word.alphabet_size == 2
    assert str(word) == "0110"


def test_parse_letter_word_keeps_letters():
    word = parse_word("ABBA")
    assert word.alphabet_size == 2
    assert str(word) == "ABBA"
    assert word == Word("0110")


def test_mixed_alphabet_is_rejected():
    with pytest.raises(WordParseError):
        parse_word("0A1")


def test_letter_outside_alphabet():
    with pytest.raises(AlphabetError):
        Word("012", 2)


def test_parse_permutation_forms():
    gamma = parse_permutation("231")
    assert gamma.images == (1, 2, 0)
    assert gamma.one_line() == "231"
    long = parse_permutation("2,3,4,5,6,7,8,9,10,1")
    assert long.degree == 10
    assert long.is_cyclic
    with pytest.raises(WordParseError):
        parse_permutation("112")


# --- Permutations acting on words ---


def test_apply_reads_positions():
    assert str(Permutation("231").apply(Word("ABC"))) == "BCA"
    assert str(Permutation("321").apply(Word("ABC"))) == "CBA"


def test_apply_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        Permutation("12").apply(Word("ABC"))


def test_composition_matches_successive_application():
    word = Word("ABCD")
    group = symmetric_group(4)
    for g in group:
        for h in group:
            assert (g * h).apply(word) == g.apply(h.apply(word))


def test_inverse():
    for gamma in symmetric_group(4):
        assert (gamma * gamma.inverse()).is_identity


def test_cycle_notation():
    assert Permutation("1234").cycle_notation() == "id"
    assert Permutation("2143").cycle_notation() == "(12)(34)"
    assert Permutation("2314").cycle_notation() == "(123)"


# --- Word predicates ---


@pytest.mark.parametrize(
    "text, even",
    [("0110", True), ("0111", False), ("ABAB", True), ("ABCA", False), ("", True)],
)
def test_is_even(text, even):
    assert is_even(Word(text)) is even


def test_is_square():
    assert is_square(Word("0101"))
    assert not is_square(Word("0110"))
    assert is_square(Word(""))
    assert not is_square(Word("010"))


def test_cyclic_shifts():
    assert [str(w) for w in cyclic_shifts(Word("0011"))] == ["0011", "0110", "1100", "1001"]


# --- Orbits and enumeration ---


def test_orbit_representative_and_size():
    cls = orbit_representative(Word("1001"))
    assert str(cls.representative) == "0011"
    assert cls.orbit_size == 4
    assert orbit_representative(Word("1010")).orbit_size == 2


def test_orbit_representative_without_renaming():
    spec = GroupSpec(cyclic=True, reversal=False, alphabet=False)
    cls = orbit_representative(Word("1101"), spec)
    assert str(cls.representative) == "0111"
    assert cls.orbit_size == 4


def test_binary_necklaces():
    assert [letters.hex() for letters in necklaces(4, 2)] == [
        "00000000", "00000001", "00000101", "00010001", "00010101", "01010101",
    ]


def test_necklaces_resume_after_start():
    assert list(necklaces(4, 2, start=b"\x00\x00\x01\x01")) == [
        b"\x00\x01\x00\x01",
        b"\x00\x01\x01\x01",
        b"\x01\x01\x01\x01",
    ]


def test_orbit_representatives_of_even_binary_words():
    assert [str(w) for w in iter_orbit_representatives(4, 2, ALL_SYMMETRIES)] == ["0000", "0011", "0101"]
    assert [str(w) for w in iter_orbit_representatives(2, 2, ALL_SYMMETRIES)] == ["00"]


def test_orbit_representatives_resume():
    words = list(iter_orbit_representatives(10, 2, ALL_SYMMETRIES))
    resumed = list(iter_orbit_representatives(10, 2, ALL_SYMMETRIES, start=words[4]))
    assert resumed == words[5:]


def test_orbit_sizes_partition_even_words():
    for length in (4, 6, 8, 10):
        total = sum(orbit_representative(w).orbit_size for w in iter_orbit_representatives(length, 2))
        assert total == 2 ** (length - 1)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_canonical_word_count(k):
    words = enumerate_canonical_words(k)
    assert len(words) == factorial(2 * k) // (factorial(k) * 2 ** k)
    assert words == sorted(words)
    assert len(set(words)) == len(words)


def test_canonical_words_for_two_letters():
    assert [str(w) for w in enumerate_canonical_words(2)] == ["AABB", "ABAB", "ABBA"]


def test_canonical_word_validation():
    assert str(CanonicalWord("ABBA")) == "ABBA"
    with pytest.raises(AlphabetError):
        CanonicalWord("BAAB")
    with pytest.raises(AlphabetError):
        CanonicalWord("AAAB")


# --- Permutation groups ---


def test_cyclic_group():
    assert [g.one_line() for g in group_members(GroupKind.CYCLIC, 4)] == ["1234", "2341", "3412", "4123"]


def test_dihedral_group_sizes():
    assert len(group_members(GroupKind.DIHEDRAL, 1)) == 1
    assert [g.one_line() for g in group_members(GroupKind.DIHEDRAL, 2)] == ["12", "21"]
    assert len(group_members(GroupKind.DIHEDRAL, 3)) == 6
    for n in range(3, 8):
        members = group_members(GroupKind.DIHEDRAL, n)
        assert len(members) == 2 * n
        assert all(g.is_dihedral for g in members)


def test_reflection_reverses():
    assert Permutation.reflection(3, 0).one_line() == "321"
    assert Permutation.reflection(4, 0).is_reflection


def test_symmetric_group_accepts_string_kind():
    assert len(group_members("symmetric", 4)) == 24
