# shufsq/enumeration.py
"""
Counts of binary shuffle squares by length and number of 1's, closed forms
that cross-check them, and the Catalan/XYYX picture for canonical words.
"""
import logging
from itertools import combinations, product
from math import comb
from typing import Iterable, Optional, Tuple, Union

from shufsq.errors import PreconditionError
from shufsq.models import CanonicalWord, CountTable, SplitWitness, Word
from shufsq.shuffle import decide_shuffle_square, validate_witness
from shufsq.words import enumerate_canonical_words
from shufsq.worker_pool import WorkerPool, default_workers

logger = logging.getLogger(__name__)

# --- Count tables ---


def _count_cell(job: Tuple[int, int]) -> int:
    """|B(2n, 2k)|: shuffle squares among words of length 2n with 2k ones."""
    two_n, two_k = job
    total = 0
    for ones in combinations(range(two_n), two_k):
        letters = bytearray(two_n)
        for position in ones:
            letters[position] = 1
        total += decide_shuffle_square(bytes(letters))
    return total


def count_table(max_length: int, workers: Optional[int] = None, progress: bool = False) -> CountTable:
    """
    Every cell by exhaustive decision. The symmetry |B(2n,2k)| = |B(2n,2n-2k)|
    is checked afterwards and never used to skip work.
    """
    if max_length < 2 or max_length % 2:
        raise PreconditionError(f"max_length must be even and at least 2, got {max_length}.")
    cells = [(two_n, two_k) for two_n in range(2, max_length + 1, 2) for two_k in range(0, two_n + 1, 2)]
    pool = WorkerPool(workers or default_workers(), progress, "Counting shuffle squares")

    table = CountTable(max_length)
    for (two_n, two_k), count in zip(cells, pool.map(_count_cell, cells, total=len(cells))):
        table.entries.setdefault(two_n, {})[two_k] = count

    for two_n, row in table.entries.items():
        table.totals[two_n] = sum(row.values())
        for two_k, count in row.items():
            if row[two_n - two_k] != count:
                logger.error(f"❌ Asymmetric cell: |B({two_n},{two_k})|={count} but "
                             f"|B({two_n},{two_n - two_k})|={row[two_n - two_k]}.")
        if row[2] != two_ones_closed_form(two_n // 2):
            logger.error(f"❌ |B({two_n},2)|={row[2]} disagrees with the closed form.")
    return table


def two_ones_closed_form(n: int) -> int:
    """3n(n-1)/2 + 1, the centered triangular numbers."""
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}.")
    return 3 * n * (n - 1) // 2 + 1


def total_shuffle_squares(two_n: int) -> int:
    """All binary shuffle squares of length 2n, counted over every word directly."""
    if two_n < 2 or two_n % 2:
        raise PreconditionError(f"Length must be even and at least 2, got {two_n}.")
    return sum(decide_shuffle_square(bytes(letters)) for letters in product((0, 1), repeat=two_n))


# --- Canonical words: XYYX patterns, Catalan numbers and Dyck words ---


def has_xyyx_subword(word: Word) -> bool:
    """
    True iff some letters X, Y occur as a subsequence X Y Y X. For a
    canonical word this means one chord nested inside another.

    One pass over the word keeps, for every ordered pair (X, Y), how much
    of X Y Y X has been matched greedily so far.
    """
    letters = word.letters
    used = sorted(set(letters))
    matched = {(x, y): 0 for x in used for y in used}
    for letter in letters:
        for other in used:
            for pair in {(letter, other), (other, letter)}:
                x, y = pair
                if (x, y, y, x)[matched[pair]] == letter:
                    matched[pair] += 1
                    if matched[pair] == 4:
                        return True
    return False


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def canonical_shuffle_square_count(k: int) -> int:
    """How many canonical words over k letters are shuffle squares."""
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}.")
    return sum(decide_shuffle_square(word.letters) for word in enumerate_canonical_words(k))


def dyck_witness(word: CanonicalWord) -> Optional[SplitWitness]:
    """
    Colour the first occurrence of every letter into the first copy and the
    second occurrence into the second copy. A canonical word is a shuffle
    square exactly when this colouring is a valid split.
    """
    seen = set()
    first, second = [], []
    for position, letter in enumerate(word.letters):
        (second if letter in seen else first).append(position)
        seen.add(letter)
    witness = SplitWitness(first, second)
    return witness if validate_witness(word, witness) else None


def color_pattern(witness: SplitWitness) -> str:
    """``(`` at positions of the first copy and ``)`` at positions of the second."""
    length = 2 * witness.half_length
    first = set(witness.first_positions)
    return "".join("(" if position in first else ")" for position in range(length))


def is_dyck(pattern: Union[str, Iterable[bool]]) -> bool:
    """Balanced, and no prefix closes more than it opens. Accepts ``()`` text or booleans (True opens)."""
    depth = 0
    for symbol in pattern:
        opens = symbol == "(" if isinstance(symbol, str) else bool(symbol)
        depth += 1 if opens else -1
        if depth < 0:
            return False
    return depth == 0
