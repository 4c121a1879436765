# shufsq/covering.py
"""
Covering sets of permutations: the bipartite graph between canonical words
and inverse-reduced permutations, exact minimum covers, and scans for
dihedral and cyclic coverability.
"""
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from shufsq.errors import CoverInfeasibleError, DegreeMismatchError, PreconditionError
from shufsq.models import CoverInstance, CoverSolution, GroupKind, GroupSpec, Permutation, Word, symmetric_group
from shufsq.shuffle import decide_shuffle_square, is_gamma_shuffle_square
from shufsq.words import enumerate_canonical_words, group_members, iter_orbit_representatives
from shufsq.worker_pool import WorkerPool, default_workers

logger = logging.getLogger(__name__)

# A minimum covering set for k = 4, as published.
TABLE_4_COVER: Tuple[Permutation, ...] = tuple(
    Permutation(text)
    for text in (
        "1234", "2134", "3214", "4231", "1324", "1432", "1243",
        "2143", "4321", "1342", "3241", "2431", "2314", "2341",
    )
)

# Reversal and renaming map gamma-squares to gamma'-squares with gamma' in
# the same cyclic or dihedral group; cyclic shifts of the word do not.
COVERABILITY_SYMMETRIES = GroupSpec(cyclic=False, reversal=True, alphabet=True)

# --- The reduced bipartite graph ---


def reduce_permutations(perms: Iterable[Permutation]) -> List[Permutation]:
    """One permutation from every {gamma, gamma^-1} pair present, the smaller one-line form."""
    chosen: List[Permutation] = []
    kept = set()
    for gamma in sorted(set(perms)):
        if gamma.inverse() in kept:
            continue
        kept.add(gamma)
        chosen.append(gamma)
    return chosen


def _neighbor_row(job: Tuple[Word, Tuple[Permutation, ...]]) -> FrozenSet[int]:
    word, perms = job
    return frozenset(j for j, gamma in enumerate(perms) if is_gamma_shuffle_square(word, gamma) is not None)


def cover_instance(words: Sequence[Word], perms: Sequence[Permutation], workers: int = 1) -> CoverInstance:
    """The bipartite graph between the given words and permutations."""
    perms = tuple(perms)
    pool = WorkerPool(workers, description="Building neighbourhoods")
    adjacency = list(pool.map(_neighbor_row, ((word, perms) for word in words)))
    return CoverInstance(words, perms, adjacency)


def build_cover_instance(k: int, workers: Optional[int] = None) -> CoverInstance:
    """Canonical words C_k against the inverse-reduced symmetric group S'_k."""
    if k < 1:
        raise PreconditionError(f"Covering instances need k >= 1, got {k}.")
    if k > 6:
        logger.warning(f"⚠️ k={k} is beyond the practical range; this will take a long time.")
    words = enumerate_canonical_words(k)
    perms = reduce_permutations(symmetric_group(k))
    logger.debug(f"Building G'_{k}: {len(words)} words x {len(perms)} permutations.")
    return cover_instance(words, perms, workers or default_workers())


def degree_report(instance: CoverInstance) -> Dict[Permutation, int]:
    """Number of neighbouring words of every permutation."""
    degrees = {gamma: 0 for gamma in instance.perms}
    for row in instance.adjacency:
        for j in row:
            degrees[instance.perms[j]] += 1
    return degrees


def cover_matrix_text(instance: CoverInstance) -> str:
    """Words as rows, permutations as columns, 0/1 entries."""
    header = " ".join(["word"] + [gamma.one_line() for gamma in instance.perms])
    lines = [header]
    for word, row in zip(instance.words, instance.adjacency):
        lines.append(" ".join([str(word)] + ["1" if j in row else "0" for j in range(len(instance.perms))]))
    return "\n".join(lines) + "\n"


# --- Minimum covers ---


def _lex_least_cover(masks: List[int], full: int, size: int) -> Optional[List[int]]:
    """
    The lexicographically least index set of exactly ``size`` masks whose
    union is ``full``, or None. Branches include-first over the sorted
    permutations and prunes with the union of the remaining masks and the
    bound ceil(uncovered / best remaining coverage).
    """
    count = len(masks)
    suffix_union = [0] * (count + 1)
    for j in range(count - 1, -1, -1):
        suffix_union[j] = suffix_union[j + 1] | masks[j]
    chosen: List[int] = []

    def search(start: int, covered: int) -> bool:
        uncovered = full & ~covered
        if not uncovered:
            return True
        left = size - len(chosen)
        if left == 0 or (suffix_union[start] & uncovered) != uncovered:
            return False
        best_gain = max((bin(masks[j] & uncovered).count("1") for j in range(start, count)), default=0)
        if best_gain == 0 or -(-bin(uncovered).count("1") // best_gain) > left:
            return False
        for j in range(start, count - left + 1):
            if not masks[j] & uncovered:
                continue
            chosen.append(j)
            if search(j + 1, covered | masks[j]):
                return True
            chosen.pop()
        return False

    if not search(0, 0):
        return None
    # Pad with the smallest unused indices when fewer sets already cover.
    unused = [j for j in range(count) if j not in chosen]
    return sorted(chosen + unused[: size - len(chosen)])


def min_cover(instance: CoverInstance) -> CoverSolution:
    """
    Exact minimum covering set. Sizes are tried upwards from the counting
    lower bound; an exhausted search at every smaller size certifies
    optimality. Among the minimum covers the lexicographically least is
    returned.
    """
    if not instance.words:
        raise PreconditionError("Cannot cover an empty instance.")
    for word, row in zip(instance.words, instance.adjacency):
        if not row:
            raise CoverInfeasibleError(word)

    masks = instance.coverage_masks()
    full = (1 << len(instance.words)) - 1
    widest = max(bin(mask).count("1") for mask in masks)
    size = -(-len(instance.words) // widest)
    while size <= len(masks):
        found = _lex_least_cover(masks, full, size)
        if found is not None:
            logger.debug(f"✅ Minimum cover of size {size} found.")
            return CoverSolution(tuple(instance.perms[j] for j in found), size, optimal=True)
        logger.debug(f"No cover of size {size}.")
        size += 1
    raise AssertionError("Every word has a neighbour, so all permutations together must cover")


def verify_cover(instance: CoverInstance, candidate: Iterable[Permutation]) -> bool:
    """True iff every word has a neighbour in ``candidate``; inverses count as their representative."""
    index = {gamma: j for j, gamma in enumerate(instance.perms)}
    selected = set()
    for gamma in candidate:
        j = index.get(gamma)
        if j is None:
            j = index.get(gamma.inverse())
        if j is None:
            raise PreconditionError(f"{gamma} is not a permutation of this instance.")
        selected.add(j)
    return all(row & selected for row in instance.adjacency)


# --- Coverability scans ---


def _dihedral_violation(job: Tuple[Word, Tuple[Permutation, ...]]) -> bool:
    word, group = job
    return all(is_gamma_shuffle_square(word, gamma) is None for gamma in group)


def dihedral_scan(
    k: int = 3,
    max_length: int = 8,
    kind: GroupKind = GroupKind.DIHEDRAL,
    workers: Optional[int] = None,
    lengths: Optional[Iterable[int]] = None,
) -> List[Word]:
    """
    Even words over k letters, one per class under reversal and renaming,
    that are not shuffle gamma-squares for any gamma of the chosen group of
    degree n. An empty list means every word up to ``max_length`` is covered.
    """
    if max_length % 2:
        raise PreconditionError(f"max_length must be even, got {max_length}.")
    kind = GroupKind(kind)
    pool = WorkerPool(workers or default_workers(), description=f"{kind.value.capitalize()} scan")
    violations: List[Word] = []
    for length in lengths if lengths is not None else range(2, max_length + 1, 2):
        group = tuple(group_members(kind, length // 2))
        words = list(iter_orbit_representatives(length, k, COVERABILITY_SYMMETRIES, even_only=True))
        flagged = [word for word, bad in zip(words, pool.map(_dihedral_violation, ((w, group) for w in words))) if bad]
        logger.info(f"Length {length}: {len(words)} classes, {len(flagged)} not {kind.value}.")
        violations.extend(flagged)
    return violations


def whole_word_transform_scan(word: Word, perms: Iterable[Permutation]) -> FrozenSet[Permutation]:
    """Permutations of degree 2n that turn the whole word into a shuffle square."""
    found = set()
    for gamma in perms:
        if gamma.degree != len(word):
            raise DegreeMismatchError(gamma.degree, len(word))
        if decide_shuffle_square(gamma.apply(word).letters):
            found.add(gamma)
    return frozenset(found)
