# shufsq/models/reports.py
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple

from .common import Permutation, Word


def letter_names(word: Word) -> List[str]:
    """Printed name of every letter of the word's alphabet."""
    return [str(Word(bytes([letter]), word.alphabet_size, word.notation)) for letter in range(word.alphabet_size)]


# --- Scan results ---


@dataclass(frozen=True)
class AntiSquareReport:
    """The minimum s_{2n} over even binary words and the minimal orbit classes."""
    length: int
    s_min: int
    class_count: int
    representatives: Tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "representatives", tuple(self.representatives))

    def to_text(self) -> str:
        """Header line, then one representative per line."""
        lines = [f"length={self.length} s_min={self.s_min} classes={self.class_count}"]
        lines.extend(str(word) for word in self.representatives)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "AntiSquareReport":
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines:
            raise ValueError("Empty anti-square report.")
        try:
            header = dict(item.split("=", 1) for item in lines[0].split())
            length, s_min, classes = int(header["length"]), int(header["s_min"]), int(header["classes"])
        except (KeyError, ValueError):
            raise ValueError(f"Malformed report header {lines[0]!r}.")
        representatives = tuple(Word(line, 2) for line in lines[1:])
        if len(representatives) != classes:
            raise ValueError(f"Header announces {classes} classes, found {len(representatives)}.")
        return cls(length, s_min, classes, representatives)


# --- Covering sets ---


@dataclass(frozen=True)
class CoverInstance:
    """
    The bipartite graph between words and (inverse-reduced) permutations.
    ``adjacency[i]`` holds the indices into ``perms`` of the neighbours of
    ``words[i]``.
    """
    words: Tuple[Word, ...]
    perms: Tuple[Permutation, ...]
    adjacency: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        object.__setattr__(self, "perms", tuple(self.perms))
        object.__setattr__(self, "adjacency", tuple(frozenset(row) for row in self.adjacency))

    def neighbors(self, word_index: int) -> List[Permutation]:
        return [self.perms[j] for j in sorted(self.adjacency[word_index])]

    def coverage_masks(self) -> List[int]:
        """For every permutation, the bitmask of the words it covers."""
        masks = [0] * len(self.perms)
        for i, row in enumerate(self.adjacency):
            for j in row:
                masks[j] |= 1 << i
        return masks


@dataclass(frozen=True)
class CoverSolution:
    chosen: Tuple[Permutation, ...]
    size: int
    optimal: bool = True

    def __post_init__(self):
        object.__setattr__(self, "chosen", tuple(sorted(self.chosen)))


# --- Count tables ---


@dataclass
class CountTable:
    """|B(2n, 2k)| indexed as ``entries[2n][2k]``."""
    max_length: int
    entries: Dict[int, Dict[int, int]] = field(default_factory=dict)
    totals: Dict[int, int] = field(default_factory=dict)

    def cell(self, two_n: int, two_k: int) -> int:
        return self.entries.get(two_n, {}).get(two_k, 0)

    @property
    def lengths(self) -> List[int]:
        return sorted(self.entries)

    def row_weights(self) -> List[int]:
        """Rows 2k = 2, 4, ... up to half the longest length; the rest follow by symmetry."""
        top = max(2, self.max_length // 2)
        return list(range(2, top + 1, 2))

    def to_csv(self) -> str:
        """Rows 2k, columns 2n, a final row of totals."""
        lengths = self.lengths
        lines = [",".join(["2k\\2n"] + [str(two_n) for two_n in lengths])]
        for two_k in self.row_weights():
            lines.append(",".join([str(two_k)] + [str(self.cell(two_n, two_k)) for two_n in lengths]))
        lines.append(",".join(["total"] + [str(self.totals[two_n]) for two_n in lengths]))
        return "\n".join(lines) + "\n"


# --- Gauss codes: digraphs and chord diagrams ---


@dataclass(frozen=True)
class WordDigraph:
    """D_W: letters as vertices, one arc per cyclically consecutive pair."""
    word: Word
    vertices: Tuple[int, ...]
    arcs: Tuple[Tuple[int, int], ...]

    def out_degree(self) -> Dict[int, int]:
        degree = {vertex: 0 for vertex in self.vertices}
        for tail, _ in self.arcs:
            degree[tail] += 1
        return degree

    def in_degree(self) -> Dict[int, int]:
        degree = {vertex: 0 for vertex in self.vertices}
        for _, head in self.arcs:
            degree[head] += 1
        return degree

    def to_edge_list(self) -> str:
        names = letter_names(self.word)
        return "".join(f"{names[tail]} {names[head]}\n" for tail, head in self.arcs)


@dataclass(frozen=True)
class ChordDiagram:
    """Chords join the two occurrences of each letter of a canonical word."""
    points: Word
    chords: Tuple[Tuple[int, int], ...]
    intersection_graph: FrozenSet[Tuple[int, int]]

    def edges(self) -> List[Tuple[int, int]]:
        """Intersecting letter pairs, sorted."""
        return sorted(self.intersection_graph)

    def to_edge_list(self) -> str:
        names = letter_names(self.points)
        return "".join(f"{names[a]} {names[b]}\n" for a, b in self.edges())


@dataclass(frozen=True)
class EulerRow:
    word: Word
    euler_number: int
    best_number: int
    rotation_number: int
    is_shuffle_square: bool

    @property
    def coincides(self) -> bool:
        return (self.euler_number == 1) == self.is_shuffle_square

    @property
    def coincides_up_to_rotation(self) -> bool:
        return (self.rotation_number == 1) == self.is_shuffle_square


@dataclass(frozen=True)
class EulerScan:
    k: int
    rows: Tuple[EulerRow, ...]

    @property
    def violations(self) -> List[EulerRow]:
        """Words where "Euler number one" and "shuffle square" disagree."""
        return [row for row in self.rows if not row.coincides]

    @property
    def rotation_violations(self) -> List[EulerRow]:
        """The same disagreement with circuits counted up to rotation."""
        return [row for row in self.rows if not row.coincides_up_to_rotation]

    @property
    def disagreements(self) -> List[EulerRow]:
        """Words where the backtracking and BEST counters differ."""
        return [row for row in self.rows if row.euler_number != row.best_number]

    def with_euler_number(self, value: int) -> List[Word]:
        return [row.word for row in self.rows if row.euler_number == value]
