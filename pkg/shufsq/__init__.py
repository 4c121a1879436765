# shufsq/__init__.py
"""
Shuffle Squares
~~~~~~~~~~~~~~~

Exact tools for shuffle squares and their cyclic, dihedral and permuted
relatives: deciders with witnesses, constructive decompositions of binary
words, the shuffle anti-square search, minimum covering sets of
permutations, count tables, and Gauss-code structures of canonical words.
"""

__version__ = "1.0.0"
__license__ = "MIT"

from .models import *
from .errors import (
    AlphabetError,
    CheckpointError,
    CoverInfeasibleError,
    DegreeMismatchError,
    PreconditionError,
    ScanInterrupted,
    ShuffleError,
    WordParseError,
)
from .words import (
    apply_permutation,
    cyclic_shifts,
    enumerate_canonical_words,
    format_word,
    group_members,
    is_even,
    is_square,
    iter_orbit_representatives,
    necklaces,
    orbit_representative,
    parse_permutation,
    parse_word,
)
from .shuffle import (
    gamma_neighbors,
    is_gamma_shuffle_square,
    is_shuffle_of,
    is_shuffle_square,
    two_ones_shuffle_square,
    validate_witness,
)
from .cyclic import (
    APPENDIX_A,
    anti_square_scan,
    cyclic_decompose,
    fair_split_binary,
    is_anti_square,
    match_appendix,
    reduced_cyclic_cover,
    s_bounded,
    s_of,
    shift_to_shuffle_square,
)
from .covering import (
    TABLE_4_COVER,
    build_cover_instance,
    cover_instance,
    degree_report,
    dihedral_scan,
    min_cover,
    reduce_permutations,
    verify_cover,
    whole_word_transform_scan,
)
from .enumeration import (
    canonical_shuffle_square_count,
    catalan,
    count_table,
    dyck_witness,
    has_xyyx_subword,
    is_dyck,
    total_shuffle_squares,
    two_ones_closed_form,
)
from .codes import (
    arborescence_count,
    circle_graph,
    euler_number,
    euler_number_best,
    euler_number_up_to_rotation,
    euler_shuffle_scan,
    gauss_digraph,
)
from .checkpoint_manager import CheckpointManager
from .worker_pool import ScanOptions, WorkerPool
from .reproduce import PaperTables

__all__ = [
    # High-level entry point
    "PaperTables",

    # Infrastructure
    "CheckpointManager",
    "ScanOptions",
    "WorkerPool",

    # Errors
    "ShuffleError",
    "WordParseError",
    "AlphabetError",
    "DegreeMismatchError",
    "PreconditionError",
    "CoverInfeasibleError",
    "CheckpointError",
    "ScanInterrupted",

    # Models
    "Word",
    "CanonicalWord",
    "Permutation",
    "GroupKind",
    "GroupSpec",
    "ALL_SYMMETRIES",
    "SymmetryClass",
    "SplitWitness",
    "FairSplit",
    "ShiftResult",
    "AntiSquareReport",
    "CoverInstance",
    "CoverSolution",
    "CountTable",
    "WordDigraph",
    "ChordDiagram",
    "EulerRow",
    "EulerScan",

    # Words
    "parse_word",
    "parse_permutation",
    "format_word",
    "is_even",
    "is_square",
    "apply_permutation",
    "cyclic_shifts",
    "orbit_representative",
    "necklaces",
    "iter_orbit_representatives",
    "enumerate_canonical_words",
    "group_members",

    # Shuffle squares
    "is_shuffle_square",
    "is_shuffle_of",
    "is_gamma_shuffle_square",
    "gamma_neighbors",
    "two_ones_shuffle_square",
    "validate_witness",

    # Binary words on a circle
    "fair_split_binary",
    "cyclic_decompose",
    "shift_to_shuffle_square",
    "s_of",
    "s_bounded",
    "is_anti_square",
    "anti_square_scan",
    "match_appendix",
    "reduced_cyclic_cover",
    "APPENDIX_A",

    # Covering sets
    "reduce_permutations",
    "cover_instance",
    "build_cover_instance",
    "min_cover",
    "verify_cover",
    "degree_report",
    "dihedral_scan",
    "whole_word_transform_scan",
    "TABLE_4_COVER",

    # Counting
    "count_table",
    "two_ones_closed_form",
    "total_shuffle_squares",
    "has_xyyx_subword",
    "canonical_shuffle_square_count",
    "catalan",
    "dyck_witness",
    "is_dyck",

    # Gauss codes
    "gauss_digraph",
    "euler_number",
    "euler_number_best",
    "euler_number_up_to_rotation",
    "arborescence_count",
    "circle_graph",
    "euler_shuffle_scan",
]
