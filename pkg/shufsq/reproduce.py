# shufsq/reproduce.py
from dataclasses import dataclass
from typing import Dict, List, Optional

from shufsq.covering import build_cover_instance, degree_report, min_cover
from shufsq.cyclic import anti_square_scan, match_appendix
from shufsq.enumeration import count_table
from shufsq.models import AntiSquareReport, CountTable, CoverInstance, CoverSolution, Permutation, Word
from shufsq.worker_pool import ScanOptions, default_workers


@dataclass
class CoveringResult:
    """A covering instance together with its minimum cover and permutation degrees."""
    instance: CoverInstance
    solution: CoverSolution
    degrees: Dict[Permutation, int]


@dataclass
class AppendixMatch:
    """An anti-square report compared orbit by orbit with the published lists."""
    report: AntiSquareReport
    missing: List[Word]
    unexpected: List[Word]

    @property
    def matches(self) -> bool:
        return not self.missing and not self.unexpected


class PaperTables:
    """
    A high-level entry point that reproduces the published tables.

    Covering instances are built once per alphabet size and cached for the
    lifetime of the object, so the neighbourhood table and the minimum cover
    of the same k share the work.
    """

    def __init__(self, workers: Optional[int] = None, progress: bool = False):
        self.workers = workers or default_workers()
        self.progress = progress
        self._instances: Dict[int, CoverInstance] = {}

    def _options(self, **overrides) -> ScanOptions:
        return ScanOptions(workers=self.workers, progress=self.progress, **overrides)

    # --- Anti-squares ---

    def anti_squares(self, max_length: int, min_length: int = 2) -> List[AntiSquareReport]:
        """s_{2n} and the minimal classes for every even length in range."""
        return [anti_square_scan(length, self._options()) for length in range(min_length, max_length + 1, 2)]

    def appendix(self, length: int, options: Optional[ScanOptions] = None) -> AppendixMatch:
        report = anti_square_scan(length, options or self._options())
        missing, unexpected = match_appendix(report)
        return AppendixMatch(report, missing, unexpected)

    # --- Covering sets ---

    def cover_instance(self, k: int) -> CoverInstance:
        if k not in self._instances:
            self._instances[k] = build_cover_instance(k, self.workers)
        return self._instances[k]

    def neighbourhoods(self, k: int = 3) -> Dict[Word, List[Permutation]]:
        """Word -> neighbouring permutations in the reduced graph."""
        instance = self.cover_instance(k)
        return {word: instance.neighbors(i) for i, word in enumerate(instance.words)}

    def covering(self, k: int) -> CoveringResult:
        instance = self.cover_instance(k)
        return CoveringResult(instance, min_cover(instance), degree_report(instance))

    # --- Counts ---

    def shuffle_square_counts(self, max_length: int) -> CountTable:
        return count_table(max_length, self.workers, self.progress)
