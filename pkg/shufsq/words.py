# shufsq/words.py
"""
Alphabets, words, permutations, symmetry orbits and canonical words.

Everything here is a pure function on immutable values.
"""
import logging
from itertools import product
from math import factorial
from typing import Iterator, List, Optional

from shufsq.errors import WordParseError
from shufsq.models import (
    ALL_SYMMETRIES,
    CanonicalWord,
    GroupKind,
    GroupSpec,
    Permutation,
    SymmetryClass,
    Word,
    symmetric_group,
)

logger = logging.getLogger(__name__)

# --- Parsing and printing ---


def parse_word(text: str, alphabet_size: Optional[int] = None) -> Word:
    """Parses ``0110`` or ``ABBA`` style text; mixed alphabets are rejected."""
    text = text.strip()
    if alphabet_size is not None and alphabet_size < 1:
        raise WordParseError(f"Alphabet size must be positive, got {alphabet_size}.")
    return Word(text, alphabet_size)


def parse_permutation(text: str) -> Permutation:
    """Parses one-line notation: ``231`` for n <= 9, ``2,3,...,10,1`` otherwise."""
    return Permutation(text)


def format_word(word: Word) -> str:
    return str(word)


# --- Word predicates and operations ---


def is_even(word: Word) -> bool:
    """True iff every letter occurs an even number of times."""
    return all(count % 2 == 0 for count in word.counts())


def is_square(word: Word) -> bool:
    """True iff the word is UU for some word U (the empty word counts)."""
    half, odd = divmod(len(word), 2)
    return not odd and word.letters[:half] == word.letters[half:]


def apply_permutation(gamma: Permutation, word: Word) -> Word:
    """gamma(W) = w[gamma_1] w[gamma_2] ... w[gamma_n]."""
    return gamma.apply(word)


def cyclic_shifts(word: Word) -> List[Word]:
    """The multiset of all circular shifts; entry ``j`` moves the first ``j`` letters to the end."""
    return [word.rotate(shift) for shift in range(len(word))]


def period(letters: bytes) -> int:
    """Smallest p > 0 such that rotating by p gives back the same word."""
    length = len(letters)
    for p in range(1, length + 1):
        if length % p == 0 and letters[p:] + letters[:p] == letters:
            return p
    return max(length, 1)


def relabel_by_first_occurrence(letters: bytes) -> bytes:
    """Renames letters by order of first appearance: the least word under alphabet renaming."""
    mapping = {}
    out = bytearray()
    for letter in letters:
        if letter not in mapping:
            mapping[letter] = len(mapping)
        out.append(mapping[letter])
    return bytes(out)


# --- Symmetry orbits ---


def _geometric_images(letters: bytes, spec: GroupSpec) -> Iterator[bytes]:
    bases = [letters, letters[::-1]] if spec.reversal else [letters]
    for base in bases:
        if spec.cyclic and base:
            for shift in range(len(base)):
                yield base[shift:] + base[:shift]
        else:
            yield base


def _images(letters: bytes, spec: GroupSpec) -> Iterator[bytes]:
    for image in _geometric_images(letters, spec):
        yield relabel_by_first_occurrence(image) if spec.alphabet else image


def is_orbit_minimum(letters: bytes, spec: GroupSpec) -> bool:
    """True iff no image of ``letters`` under ``spec`` is lexicographically smaller."""
    return all(image >= letters for image in _images(letters, spec))


def orbit_representative(word: Word, group_spec: GroupSpec = ALL_SYMMETRIES) -> SymmetryClass:
    """
    The lexicographically least image of ``word`` under the selected
    symmetries, together with the number of distinct images.

    Alphabet renaming is handled by relabelling letters in order of first
    occurrence, so the k! renamings are never enumerated; the orbit size
    comes from orbit-stabilizer: every geometric image class contributes
    k!/(k-m)! words, m being the number of letters used.
    """
    geometric = set(_geometric_images(word.letters, group_spec))
    if group_spec.alphabet:
        classes = {relabel_by_first_occurrence(image) for image in geometric}
        used = len(set(word.letters))
        k = word.alphabet_size
        orbit_size = len(classes) * (factorial(k) // factorial(k - used))
        representative = min(classes)
    else:
        orbit_size = len(geometric)
        representative = min(geometric)
    return SymmetryClass(
        representative=Word(representative, word.alphabet_size, word.notation),
        orbit_size=orbit_size,
        group_spec=group_spec,
    )


# --- Enumeration ---


def necklaces(length: int, k: int = 2, start: Optional[bytes] = None) -> Iterator[bytes]:
    """
    Necklaces (least rotations) of the given length over k letters, in
    lexicographic order, by the FKM successor rule on prenecklaces.
    With ``start`` the enumeration resumes strictly after that necklace.
    """
    if length == 0:
        if start is None:
            yield b""
        return
    if start is None:
        current = [0] * length
        yield bytes(current)
    else:
        current = list(start)
    while True:
        i = length - 1
        while i >= 0 and current[i] == k - 1:
            i -= 1
        if i < 0:
            return
        current[i] += 1
        p = i + 1
        for j in range(p, length):
            current[j] = current[j - p]
        if length % p == 0:
            yield bytes(current)


def restricted_growth_words(length: int, k: int) -> Iterator[bytes]:
    """Words using at most k letters whose first occurrences come in order 0, 1, 2, ..."""
    word = bytearray(length)

    def extend(position: int, used: int) -> Iterator[bytes]:
        if position == length:
            yield bytes(word)
            return
        for letter in range(min(used + 1, k)):
            word[position] = letter
            yield from extend(position + 1, max(used, letter + 1))

    yield from extend(0, 0)


def iter_orbit_representatives(
    length: int,
    k: int,
    group_spec: GroupSpec = ALL_SYMMETRIES,
    even_only: bool = True,
    start: Optional[Word] = None,
) -> Iterator[Word]:
    """
    One word per orbit, in increasing order, optionally restricted to even
    words and resuming strictly after ``start``.
    """
    resume = start.letters if start is not None else None
    if group_spec.cyclic:
        candidates = necklaces(length, k, resume)
    elif group_spec.alphabet:
        candidates = restricted_growth_words(length, k)
    else:
        candidates = (bytes(letters) for letters in product(range(k), repeat=length))

    for letters in candidates:
        if resume is not None and letters <= resume:
            continue
        if even_only and any(letters.count(letter) % 2 for letter in set(letters)):
            continue
        if is_orbit_minimum(letters, group_spec):
            yield Word(letters, k)


def enumerate_canonical_words(k: int) -> List[CanonicalWord]:
    """All canonical words C_k, sorted; there are (2k)!/(k! 2^k) of them."""
    if k < 1:
        raise WordParseError(f"Canonical words need k >= 1, got {k}.")
    results: List[CanonicalWord] = []
    word = bytearray(2 * k)
    seen = [0] * k

    def extend(position: int, next_new: int):
        if position == 2 * k:
            results.append(CanonicalWord(bytes(word), k))
            return
        for letter in range(min(next_new + 1, k)):
            if letter == next_new:
                seen[letter] = 1
                word[position] = letter
                extend(position + 1, next_new + 1)
                seen[letter] = 0
            elif seen[letter] == 1:
                seen[letter] = 2
                word[position] = letter
                extend(position + 1, next_new)
                seen[letter] = 1

    extend(0, 0)
    return results


# --- Permutation groups ---


def group_members(kind: GroupKind, degree: int) -> List[Permutation]:
    """
    Members of the cyclic, dihedral or symmetric group of the given degree,
    sorted by one-line form. Vertices 1..n sit on a circle; reflections are
    i -> ((c - i) mod n) + 1 for c = 0..n-1. For n <= 2 rotations and
    reflections coincide, so D_n has fewer than 2n distinct members there.
    """
    kind = GroupKind(kind)
    if kind is GroupKind.SYMMETRIC:
        return symmetric_group(degree)
    members = {Permutation.rotation(degree, shift) for shift in range(degree)}
    if kind is GroupKind.DIHEDRAL:
        members |= {Permutation.reflection(degree, center) for center in range(degree)}
    return sorted(members)
