# shufsq/models/witness.py
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

from .common import Permutation, Word

# --- Decompositions of a word into two similar subwords ---


@dataclass(frozen=True)
class SplitWitness:
    """
    Two disjoint increasing position sequences covering 0..2n-1 together
    with the permutation relating the extracted subwords:
    ``word[first] == gamma(word[second])``. Positions are 0-based.
    """
    first_positions: Union[Tuple[int, ...], Sequence[int]]
    second_positions: Union[Tuple[int, ...], Sequence[int]]
    gamma: Union[Permutation, str, None] = None

    def __post_init__(self):
        """Convert position lists to tuples and one-line strings to permutations."""
        object.__setattr__(self, "first_positions", tuple(self.first_positions))
        object.__setattr__(self, "second_positions", tuple(self.second_positions))
        gamma = self.gamma
        if gamma is None:
            gamma = Permutation.identity(len(self.first_positions))
        elif isinstance(gamma, str):
            gamma = Permutation(gamma)
        object.__setattr__(self, "gamma", gamma)

    @property
    def half_length(self) -> int:
        return len(self.first_positions)

    def first(self, word: Word) -> Word:
        return word.subword(self.first_positions)

    def second(self, word: Word) -> Word:
        return word.subword(self.second_positions)

    def to_record(self) -> Dict[str, Union[List[int], str]]:
        return {
            "first": list(self.first_positions),
            "second": list(self.second_positions),
            "gamma": self.gamma.one_line(),
        }

    @classmethod
    def from_record(cls, record: Dict) -> "SplitWitness":
        return cls(record["first"], record["second"], record.get("gamma") or None)


@dataclass(frozen=True)
class FairSplit:
    """W = X V Y where V, and also XY, carry half of every letter count."""
    x: Word
    v: Word
    y: Word
    window_start: int


@dataclass(frozen=True)
class ShiftResult:
    """
    A cyclic shift turning a word into a shuffle square. ``fallback`` is set
    when the structural case analysis failed and exhaustive search was used.
    """
    shift: int
    word: Word
    fallback: bool = False
