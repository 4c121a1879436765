# shufsq/shuffle.py
"""
Exact deciders for shuffle squares and shuffle gamma-squares.

Recognition is NP-complete in general; these are exact, desk-scale
searches. Every call owns its own memo table.
"""
import logging
from functools import lru_cache
from typing import Callable, FrozenSet, Iterable, List, Optional, Tuple

from shufsq.errors import DegreeMismatchError, PreconditionError
from shufsq.models import Permutation, SplitWitness, Word
from shufsq.words import is_even

logger = logging.getLogger(__name__)

_SINGLE = [bytes((letter,)) for letter in range(256)]

# --- Shuffle squares: overhang search ---


def _overhang_search(letters: bytes) -> Callable[[int, bytes], bool]:
    """
    ``feasible(i, overhang)`` tells whether the suffix starting at ``i`` can
    complete a split whose leading copy is ahead of the trailing copy by
    ``overhang``. Letters either extend the leading copy or match the first
    unmatched letter of the overhang.
    """
    length = len(letters)

    @lru_cache(maxsize=None)
    def feasible(i: int, overhang: bytes) -> bool:
        remaining = length - i
        if len(overhang) > remaining:
            return False
        if remaining == 0:
            return True
        letter = letters[i]
        if overhang and overhang[0] == letter and feasible(i + 1, overhang[1:]):
            return True
        return feasible(i + 1, overhang + _SINGLE[letter])

    return feasible


def _has_even_counts(letters: bytes) -> bool:
    return all(letters.count(letter) % 2 == 0 for letter in set(letters))


def decide_shuffle_square(letters: bytes) -> bool:
    """Decision-only fast path on raw letters, used by the scans."""
    if len(letters) % 2 or not _has_even_counts(letters):
        return False
    return _overhang_search(letters)(0, b"")


def is_shuffle_square(word: Word) -> Optional[SplitWitness]:
    """
    A witness that ``word`` splits into two identical subwords, or None.
    The witness has the lexicographically least ``first_positions``.
    """
    letters = word.letters
    if len(letters) % 2 or not is_even(word):
        return None
    feasible = _overhang_search(letters)
    if not feasible(0, b""):
        return None

    # Greedy reconstruction: give each position to the first copy whenever a
    # completion still exists. The first copy takes every letter read while
    # the overhang is empty, so it is always the leading copy.
    first: List[int] = []
    second: List[int] = []
    overhang = b""
    for i, letter in enumerate(letters):
        extended = overhang + _SINGLE[letter]
        if not overhang or feasible(i + 1, extended):
            first.append(i)
            overhang = extended
        else:
            second.append(i)
            overhang = overhang[1:]
    return SplitWitness(first, second, Permutation.identity(len(first)))


def is_shuffle_of(word: Word, u: Word, v: Word) -> bool:
    """True iff ``word`` interleaves ``u`` and ``v`` as disjoint subsequences."""
    if len(word) != len(u) + len(v):
        raise PreconditionError(
            f"Length {len(word)} is not {len(u)} + {len(v)}; {word} cannot interleave {u} and {v}."
        )
    a, b, w = u.letters, v.letters, word.letters
    # reachable[i]: a prefix of length i of u (and the rest of v) explains the prefix of word
    reachable = {0}
    for position, letter in enumerate(w, start=1):
        step = set()
        for i in reachable:
            j = position - 1 - i
            if i < len(a) and a[i] == letter:
                step.add(i + 1)
            if j < len(b) and b[j] == letter:
                step.add(i)
        if not step:
            return False
        reachable = step
    return len(a) in reachable


# --- Shuffle gamma-squares: constraint backtracking ---


def _gamma_split(letters: bytes, images: Tuple[int, ...]) -> Optional[Tuple[List[int], List[int]]]:
    """
    Assigns positions left to right to slots of the first or the second
    copy under ``first[i] == second[images[i]]``. Each constraint is checked
    when its later endpoint is placed; letter counts cap both copies.
    """
    n = len(images)
    inverse = [0] * n
    for i, image in enumerate(images):
        inverse[image] = i
    alphabet = max(letters) + 1 if letters else 1
    half = [letters.count(letter) // 2 for letter in range(alphabet)]
    first_letters = [-1] * n
    second_letters = [-1] * n
    first_count = [0] * alphabet
    second_count = [0] * alphabet
    first_positions: List[int] = []
    second_positions: List[int] = []
    total = 2 * n

    def place(p: int, a: int, b: int) -> bool:
        if p == total:
            return True
        letter = letters[p]
        if a < n and first_count[letter] < half[letter]:
            partner = images[a]
            if partner >= b or second_letters[partner] == letter:
                first_letters[a] = letter
                first_count[letter] += 1
                first_positions.append(p)
                if place(p + 1, a + 1, b):
                    return True
                first_positions.pop()
                first_count[letter] -= 1
                first_letters[a] = -1
        if b < n and second_count[letter] < half[letter]:
            partner = inverse[b]
            if partner >= a or first_letters[partner] == letter:
                second_letters[b] = letter
                second_count[letter] += 1
                second_positions.append(p)
                if place(p + 1, a, b + 1):
                    return True
                second_positions.pop()
                second_count[letter] -= 1
                second_letters[b] = -1
        return False

    if place(0, 0, 0):
        return first_positions, second_positions
    return None


def is_gamma_shuffle_square(word: Word, gamma: Permutation) -> Optional[SplitWitness]:
    """
    A split of ``word`` into subwords with ``first == gamma(second)``, or None.

    gamma-similarity is symmetric (U = gamma(V) iff V = gamma^-1(U)), and the
    split is unordered, so searching ordered splits with one orientation
    covers both directions. Ties go to the least ``first_positions``.
    """
    if len(word) != 2 * gamma.degree:
        raise DegreeMismatchError(gamma.degree, len(word))
    if not is_even(word):
        return None
    found = _gamma_split(word.letters, gamma.images)
    if found is None:
        return None
    first, second = found
    return SplitWitness(first, second, gamma)


def gamma_neighbors(word: Word, candidates: Iterable[Permutation]) -> FrozenSet[Permutation]:
    """The candidates gamma for which ``word`` is a shuffle gamma-square."""
    return frozenset(gamma for gamma in candidates if is_gamma_shuffle_square(word, gamma) is not None)


# --- Witness checks and the two-1's characterization ---


def validate_witness(word: Word, witness: SplitWitness) -> bool:
    """Structural check of a witness against the word it claims to split."""
    first, second = witness.first_positions, witness.second_positions
    n = len(first)
    if len(second) != n or len(word) != 2 * n or witness.gamma.degree != n:
        return False
    if any(x >= y for x, y in zip(first, first[1:])) or any(x >= y for x, y in zip(second, second[1:])):
        return False
    if sorted(first + second) != list(range(2 * n)):
        return False
    return word.subword(first) == witness.gamma.apply(word.subword(second))


def two_ones_shuffle_square(word: Word) -> bool:
    """
    Structural test for binary words of even length with exactly two 1's:
    a shuffle square iff it starts with 0^(2p) 11, or has a factor 1 0^j 1
    of length between 3 and n + 1.
    """
    if not word.is_binary or len(word) % 2:
        raise PreconditionError(f"{word} must be binary with even length.")
    ones = [i for i, letter in enumerate(word.letters) if letter == 1]
    if len(ones) != 2:
        raise PreconditionError(f"{word} must contain exactly two 1's, found {len(ones)}.")
    left, right = ones
    if right == left + 1 and left % 2 == 0:
        return True
    factor_length = right - left + 1
    return 3 <= factor_length <= len(word) // 2 + 1
