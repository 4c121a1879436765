# shufsq/codes.py
"""
Double occurrence words as Gauss codes: the digraph of consecutive letters,
its Euler number, and the circle graph of the chord diagram.
"""
import logging
from collections import Counter
from math import factorial
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from shufsq.errors import PreconditionError
from shufsq.models import ChordDiagram, EulerRow, EulerScan, Word, WordDigraph
from shufsq.shuffle import decide_shuffle_square
from shufsq.words import enumerate_canonical_words
from shufsq.worker_pool import WorkerPool, default_workers

logger = logging.getLogger(__name__)

# --- Digraph of consecutive letters ---


def gauss_digraph(word: Word) -> WordDigraph:
    """Arcs (w_i, w_{i+1}) for every position, the last one closing the cycle."""
    letters = word.letters
    length = len(letters)
    arcs = tuple((letters[i], letters[(i + 1) % length]) for i in range(length))
    return WordDigraph(word, tuple(sorted(set(letters))), arcs)


def _arc_counts(word: Word) -> Tuple[Counter, Tuple[int, int]]:
    if not word.letters:
        raise PreconditionError("The empty word has no Euler circuits.")
    digraph = gauss_digraph(word)
    return Counter(digraph.arcs), digraph.arcs[0]


def _circuits(word: Word) -> Iterator[Tuple[int, ...]]:
    """Eulerian circuits of D_W as letter sequences starting with the arc leaving position 0."""
    counts, anchor = _arc_counts(word)
    total_arcs = sum(counts.values())
    heads: Dict[int, List[int]] = {}
    for tail, head in sorted(counts):
        heads.setdefault(tail, []).append(head)
    counts[anchor] -= 1
    path = [anchor[0], anchor[1]]

    def walk(vertex: int) -> Iterator[Tuple[int, ...]]:
        if len(path) == total_arcs + 1:
            if vertex == anchor[0]:
                yield tuple(path[:-1])
            return
        for head in heads.get(vertex, ()):
            if counts[vertex, head]:
                counts[vertex, head] -= 1
                path.append(head)
                yield from walk(head)
                path.pop()
                counts[vertex, head] += 1

    yield from walk(anchor[1])


def euler_number(word: Word) -> int:
    """
    Eulerian circuits of D_W, read as letter sequences starting with the
    arc leaving position 0. Parallel arcs are interchangeable, so each
    circuit is one sequence of letters.
    """
    return sum(1 for _ in _circuits(word))


def euler_number_up_to_rotation(word: Word) -> int:
    """Eulerian circuits of D_W as cyclic letter sequences, with no distinguished start."""
    return len({min(c[i:] + c[:i] for i in range(len(c))) for c in _circuits(word)})


def arborescence_count(word: Word, root: Optional[int] = None) -> int:
    """Spanning arborescences of D_W towards ``root``, by the matrix-tree theorem."""
    digraph = gauss_digraph(word)
    vertices = list(digraph.vertices)
    index = {vertex: i for i, vertex in enumerate(vertices)}
    laplacian = np.zeros((len(vertices), len(vertices)), dtype=np.int64)
    for tail, head in digraph.arcs:
        if tail != head:
            laplacian[index[tail], index[tail]] += 1
            laplacian[index[tail], index[head]] -= 1
    keep = [i for i in range(len(vertices)) if vertices[i] != (vertices[0] if root is None else root)]
    minor = laplacian[np.ix_(keep, keep)]
    if minor.size == 0:
        return 1
    return int(round(np.linalg.det(minor.astype(float))))


def euler_number_best(word: Word) -> int:
    """
    The same count by the BEST theorem: t_w * prod (outdeg(v) - 1)! circuits
    start with a fixed labelled arc; multiply by the copies of the anchor arc
    and divide out the orderings of parallel arcs.
    """
    counts, anchor = _arc_counts(word)
    out_degree: Counter = Counter()
    for (tail, _), multiplicity in counts.items():
        out_degree[tail] += multiplicity
    labelled = arborescence_count(word, anchor[0])
    for degree in out_degree.values():
        labelled *= factorial(degree - 1)
    parallel = 1
    for multiplicity in counts.values():
        parallel *= factorial(multiplicity)
    return counts[anchor] * labelled // parallel


# --- Chord diagrams ---


def _chords(word: Word) -> List[Tuple[int, int]]:
    positions: Dict[int, List[int]] = {}
    for position, letter in enumerate(word.letters):
        positions.setdefault(letter, []).append(position)
    if any(len(found) != 2 for found in positions.values()):
        raise PreconditionError(f"{word} is not a double occurrence word.")
    return [tuple(positions[letter]) for letter in sorted(positions)]


def circle_graph(word: Word) -> ChordDiagram:
    """Letters are adjacent iff their chords cross: exactly one end of one lies inside the other."""
    chords = _chords(word)
    letters = sorted(set(word.letters))
    edges = set()
    for i, (a, b) in enumerate(chords):
        for j in range(i + 1, len(chords)):
            c, d = chords[j]
            if (a < c < b) != (a < d < b):
                edges.add((letters[i], letters[j]))
    return ChordDiagram(word, tuple(chords), frozenset(edges))


# --- Euler numbers against shuffle squares ---


def _euler_row(word: Word) -> EulerRow:
    return EulerRow(
        word,
        euler_number(word),
        euler_number_best(word),
        euler_number_up_to_rotation(word),
        decide_shuffle_square(word.letters),
    )


def euler_shuffle_scan(k: int, workers: Optional[int] = None) -> EulerScan:
    """
    Euler numbers of all canonical words over k letters next to the
    shuffle-square decision, with circuits counted both from the anchor arc
    and up to rotation. Words with Euler number one that are not shuffle
    squares (or the reverse) are logged as violations.
    """
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}.")
    if k > 5:
        logger.warning(f"⚠️ k={k} has {len(enumerate_canonical_words(k))} canonical words; this is slow.")
    pool = WorkerPool(workers or default_workers(), description="Euler numbers")
    scan = EulerScan(k, tuple(pool.map(_euler_row, enumerate_canonical_words(k))))
    for row in scan.violations:
        logger.warning(
            f"⚠️ {row.word}: Euler number {row.euler_number} but "
            f"{'a' if row.is_shuffle_square else 'not a'} shuffle square."
        )
    logger.info(
        f"k={k}: {len(scan.violations)} violations anchored, "
        f"{len(scan.rotation_violations)} up to rotation."
    )
    for row in scan.disagreements:
        logger.error(f"❌ {row.word}: backtracking gives {row.euler_number}, BEST gives {row.best_number}.")
    return scan
