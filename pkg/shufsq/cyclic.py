# shufsq/cyclic.py
"""
Binary words on a circle: fair splits, cyclic decompositions, shifts into
shuffle squares, the s(W) statistic and the anti-square scan.
"""
import logging
from typing import Dict, List, Optional, Tuple

from shufsq.checkpoint_manager import DEFAULT_CHECKPOINT_EVERY, CheckpointManager
from shufsq.errors import PreconditionError, ScanInterrupted
from shufsq.models import (
    ALL_SYMMETRIES,
    AntiSquareReport,
    FairSplit,
    Permutation,
    ShiftResult,
    SplitWitness,
    Word,
)
from shufsq.shuffle import decide_shuffle_square
from shufsq.words import is_even, iter_orbit_representatives, orbit_representative, period
from shufsq.worker_pool import ScanOptions, WorkerPool, chunked

logger = logging.getLogger(__name__)

# --- Fair splits and the cyclic decomposition ---


def _require_even_binary(word: Word):
    if not word.is_binary:
        raise PreconditionError(f"{word} is not a binary word.")
    if not is_even(word):
        raise PreconditionError(f"{word} is not even: every letter must occur an even number of times.")


def fair_split_binary(word: Word) -> FairSplit:
    """
    W = X V Y with V a window of length n holding half of the 0's (and so
    half of the 1's). Windows are tried left to right; consecutive windows
    differ by at most one 0, and the windows at 0 and n hold all 2r zeros
    between them, so some window holds exactly r.
    """
    _require_even_binary(word)
    letters = word.letters
    n = len(letters) // 2
    target = letters.count(0) // 2
    zeros = letters[:n].count(0)
    for start in range(n + 1):
        if zeros == target:
            return FairSplit(word[:start], word[start:start + n], word[start + n:], start)
        if start < n:
            zeros += (letters[start + n] == 0) - (letters[start] == 0)
    raise AssertionError(f"No balanced window in {word}")  # unreachable for even words


def cyclic_decompose(word: Word) -> SplitWitness:
    """
    Split an even binary word into A = X0 V1 Y0 and B = X1 V0 Y1 (the 0's
    of X, the 1's of V, the 0's of Y, and the complementary positions).
    Both are rotations of 0^r 1^s, so A = gamma(B) for a rotation gamma;
    the smallest such rotation is reported.
    """
    split = fair_split_binary(word)
    letters = word.letters
    n = len(letters) // 2
    start, end = split.window_start, split.window_start + n

    first: List[int] = []
    second: List[int] = []
    for position, letter in enumerate(letters):
        inside = start <= position < end
        if (letter == 1) == inside:
            first.append(position)
        else:
            second.append(position)

    a = bytes(letters[p] for p in first)
    b = bytes(letters[p] for p in second)
    for shift in range(max(n, 1)):
        if all(a[i] == b[(i + shift) % n] for i in range(n)):
            return SplitWitness(first, second, Permutation.rotation(n, shift))
    raise AssertionError(f"Halves of {word} are not rotations of each other")


def reduced_cyclic_cover(n: int) -> List[Permutation]:
    """
    Rotations by 0..n//2: one rotation from every pair {gamma, gamma^-1}
    of the cyclic group. Every even binary word of length 2n is a shuffle
    gamma-square for one of them.
    """
    return [Permutation.rotation(n, shift) for shift in range(n // 2 + 1)]


# --- Shifting a word with few 1's into a shuffle square ---


def _gaps(rotated: bytes) -> List[int]:
    """Lengths of the 0-runs following each 1 of a word that starts with 1."""
    gaps: List[int] = []
    for letter in rotated:
        if letter == 1:
            gaps.append(0)
        else:
            gaps[-1] += 1
    return gaps


def _longest_block_start(letters: bytes) -> Tuple[int, int]:
    """Start and length of the longest cyclic run of 1's (earliest start on ties)."""
    n = len(letters)
    best_start, best_length = -1, 0
    for start in range(n):
        if letters[start] != 1 or letters[start - 1] == 1:
            continue
        length = 0
        while length < n and letters[(start + length) % n] == 1:
            length += 1
        if length > best_length:
            best_start, best_length = start, length
    return best_start, best_length


def _structural_shift(letters: bytes) -> int:
    """Case analysis on the cyclic arrangement of at most four 1's."""
    n = len(letters)
    ones = [i for i, letter in enumerate(letters) if letter == 1]
    if not ones or len(ones) == n:
        return 0

    if len(ones) == 2:
        start = ones[0]
        a, b = _gaps(letters[start:] + letters[:start])
        return start if a <= b else (start + 1) % n

    start, block = _longest_block_start(letters)
    rotated = letters[start:] + letters[:start]
    gaps = _gaps(rotated)

    if block == 4:
        return start
    if block == 3:
        a, b = gaps[2], gaps[3]
        return start if a <= b else (start + 1) % n
    if block == 2:
        a, b, c = gaps[1], gaps[2], gaps[3]
        if b == 0:
            return start if a <= c else (start + 2) % n
        half = (a + b + c) // 2
        if half < a:
            return start
        if half <= a + b:
            return (start + 1) % n
        return (start + 2) % n

    # Four isolated 1's: start at the 1 before the shortest gap a, read
    # I = 1 0^a as a single letter and solve the shorter word over {0, I}.
    first_one = min(range(4), key=lambda i: (gaps[i], i))
    start = (start + sum(gaps[j] + 1 for j in range(first_one))) % n
    a, b, c, d = _gaps(letters[start:] + letters[:start])
    reduced = bytes([1, 1] + [0] * (b - a) + [1] + [0] * (c - a) + [1] + [0] * (d - a))
    inner = _structural_shift(reduced)
    offset = sum(a + 1 if letter == 1 else 1 for letter in reduced[:inner])
    return (start + offset) % n


def shift_to_shuffle_square(word: Word) -> ShiftResult:
    """
    A cyclic shift of an even binary word with at most four 1's that is a
    shuffle square. The structural answer is always re-checked with the
    decider; on disagreement an exhaustive shift search takes over and the
    result carries ``fallback=True``.
    """
    _require_even_binary(word)
    letters = word.letters
    ones = letters.count(1)
    if ones > 4:
        raise PreconditionError(f"{word} has {ones} 1's; at most four are supported.")
    if not letters or decide_shuffle_square(letters):
        return ShiftResult(0, word)

    shift = _structural_shift(letters)
    shifted = word.rotate(shift)
    if decide_shuffle_square(shifted.letters):
        return ShiftResult(shift, shifted)

    logger.warning(f"⚠️ Structural shift {shift} failed for {word}; falling back to exhaustive search.")
    for shift in range(len(letters)):
        shifted = word.rotate(shift)
        if decide_shuffle_square(shifted.letters):
            return ShiftResult(shift, shifted, fallback=True)
    raise AssertionError(f"No cyclic shift of {word} is a shuffle square")


# --- The s(W) statistic ---


def _s_bounded(letters: bytes, bound: int) -> int:
    """
    s(W) when it is at most ``bound``; otherwise some value above ``bound``.
    Only the distinct shifts are decided; each stands for length/period
    members of the multiset of shifts.
    """
    length = len(letters)
    if not length or length % 2:
        return 0
    p = period(letters)
    multiplicity = length // p
    count = 0
    for shift in range(p):
        if decide_shuffle_square(letters[shift:] + letters[:shift]):
            count += multiplicity
            if count > bound:
                return count
    return count


def s_of(word: Word) -> int:
    """How many of the ``len(word)`` cyclic shifts (with multiplicity) are shuffle squares."""
    return _s_bounded(word.letters, len(word))


def s_bounded(word: Word, bound: int) -> int:
    """Early-exit s(W): exact up to ``bound``, otherwise any value above it."""
    return _s_bounded(word.letters, bound)


def is_anti_square(word: Word) -> bool:
    """Even, and no cyclic shift is a shuffle square."""
    return bool(word.letters) and is_even(word) and _s_bounded(word.letters, 0) == 0


# --- Anti-square scan ---


def _scan_chunk(job: Tuple[List[bytes], int]) -> Tuple[int, bytes, Optional[int], List[bytes]]:
    """Minimum of s over one chunk of representatives; values above ``bound`` are skipped."""
    chunk, bound = job
    best: Optional[int] = None
    minimal: List[bytes] = []
    for letters in chunk:
        limit = bound if best is None else min(bound, best)
        value = _s_bounded(letters, limit)
        if value > limit:
            continue
        if best is None or value < best:
            best, minimal = value, [letters]
        else:
            minimal.append(letters)
    return len(chunk), chunk[-1], best, minimal


def _scan_state(last: Optional[bytes], best: Optional[int], minimal: List[bytes], processed: int) -> Dict:
    return {
        "last": last.hex() if last is not None else None,
        "s_min": best,
        "representatives": [letters.hex() for letters in minimal],
        "processed": processed,
    }


def anti_square_scan(length: int, options: Optional[ScanOptions] = None) -> AntiSquareReport:
    """
    s_{2n} and the orbit classes attaining it, over all even binary words of
    the given length up to rotation, reversal and complement.

    Representatives are produced in increasing order and processed in
    chunks; results are merged in order, so the report is the same for any
    worker count and across checkpoint resumes.
    """
    if length < 2 or length % 2:
        raise PreconditionError(f"Scan length must be even and at least 2, got {length}.")
    options = options or ScanOptions()
    every = options.checkpoint_every or DEFAULT_CHECKPOINT_EVERY

    checkpoint: Optional[CheckpointManager] = None
    best: Optional[int] = None
    minimal: List[bytes] = []
    processed = 0
    last: Optional[bytes] = None
    if options.checkpoint is not None:
        checkpoint = CheckpointManager(options.checkpoint, "anti-square", {"length": length})
        state = checkpoint.load()
        if state is not None:
            best = state["s_min"]
            minimal = [bytes.fromhex(text) for text in state["representatives"]]
            processed = state["processed"]
            last = bytes.fromhex(state["last"]) if state["last"] is not None else None

    # A chunk reads the bound when it is submitted, after every earlier result
    # outside the in-flight window has been merged.
    bound = [length if best is None else best]
    start = Word(last, 2) if last is not None else None

    def jobs():
        representatives = iter_orbit_representatives(length, 2, ALL_SYMMETRIES, even_only=True, start=start)
        for chunk in chunked((word.letters for word in representatives), options.chunk_size):
            yield chunk, bound[0]

    pool = WorkerPool(options.workers, options.progress, f"Anti-square scan of length {length}")
    next_checkpoint = (processed // every + 1) * every
    for count, chunk_last, chunk_best, chunk_minimal in pool.map(_scan_chunk, jobs()):
        processed += count
        last = chunk_last
        if chunk_best is not None:
            if best is None or chunk_best < best:
                best, minimal = chunk_best, list(chunk_minimal)
                bound[0] = best
            elif chunk_best == best:
                minimal.extend(chunk_minimal)

        if options.stop_after is not None and processed >= options.stop_after:
            saved = checkpoint.save(_scan_state(last, best, minimal, processed)) if checkpoint else False
            raise ScanInterrupted(processed, options.checkpoint if saved else None)
        if checkpoint is not None and processed >= next_checkpoint:
            checkpoint.save(_scan_state(last, best, minimal, processed))
            next_checkpoint = (processed // every + 1) * every

    logger.info(f"✅ Length {length}: {processed} representatives, s_min={best}, {len(minimal)} classes.")
    representatives = tuple(Word(letters, 2) for letters in minimal)
    return AntiSquareReport(length, best if best is not None else 0, len(representatives), representatives)


def match_appendix(report: AntiSquareReport) -> Tuple[List[Word], List[Word]]:
    """
    Compares a report with the published anti-square lists orbit by orbit.
    Returns the listed words whose orbit is missing from the report and the
    reported representatives whose orbit is not listed.
    """
    listed = {orbit_representative(Word(text, 2)).representative: Word(text, 2)
              for text in APPENDIX_A.get(report.length, ())}
    found = {orbit_representative(word).representative for word in report.representatives}
    missing = [word for key, word in listed.items() if key not in found]
    unexpected = [word for word in report.representatives
                  if orbit_representative(word).representative not in listed]
    return missing, unexpected


# --- Published anti-squares ---

APPENDIX_A: Dict[int, Tuple[str, ...]] = {
    24: ("000001001111000011101111",),
    26: (
        "00000001001110010000110111",
        "00000001001110010001100111",
        "00000001110100100010010111",
        "00000011010011011000011111",
        "00000011010110011000011111",
        "00000011010110101000011111",
        "00000011011010101000011111",
        "00000100011101000011011111",
        "00000100011110000011011111",
        "00000100011110000110101111",
        "00000100111100001101011011",
        "00000100111110001110011111",
        "00000101011010101000011111",
        "00000101011110100011101111",
        "00000101011110100011110111",
        "00000111100110010110011111",
        "00001111010010000111110111",
        "00001111100010000111110111",
        "00001111100010000111111011",
        "00001111101010001001110001",
        "00001111101100100111100101",
        "00001111101101000111110001",
        "00001111101111000111110101",
        "00001111101111000111111001",
        "00001111110111000111111001",
        "00001111111000110110111011",
    ),
    28: (
        "0000000010001110010000110111",
        "0000000010011100100000110111",
        "0000000100001110000001101111",
        "0000000100011110000011101111",
        "0000000100100110100000110111",
        "0000000100101100100000110111",
        "0000000100110010100000101111",
        "0000000100110100100000101111",
        "0000000100111100000011101111",
        "0000000100111100000111001111",
        "0000000100111100010001101111",
        "0000000100111100100001101111",
        "0000000100111100100011001111",
        "0000000101111000010011011011",
        "0000000110010011011000011111",
        "0000000110010011101000011111",
        "0000000110010110011000011111",
        "0000000110010110101000011111",
        "0000000110011001011000011111",
        "0000000110011001100010011111",
        "0000000110011001100100011111",
        "0000000110011001101000011111",
        "0000000110011010011000011111",
        "0000000110011010101000011111",
        "0000000110011100011000011111",
        "0000000110011100101000011111",
        "0000000110100110110000011111",
        "0000000110101100000110011111",
        "0000000110101100110000011111",
        "0000000110101101010000011111",
        "0000000110110101010000011111",
        "0000000110111001100011000111",
        "0000000111001000011010011111",
        "0000000111001001001010011111",
        "0000000111001010001010011111",
        "0000000111001010001100011111",
        "0000000111001100001010011111",
        "0000000111001100001011001111",
        "0000000111001100001100011111",
        "0000000111010001001010011111",
        "0000000111010010001010011111",
        "0000000111010100001010011111",
        "0000000111100100100010011111",
        "0000000111101001000100101111",
        "0000001000011110000011011111",
        "0000001000111001000011011111",
        "0000001000111010000011011111",
        "0000001000111010000101101111",
        "0000001000111100000011011111",
        "0000001000111100000011101111",
        "0000001000111100000101101111",
        "0000001000111100000110101111",
        "0000001000111110000111011111",
        "0000001001011100000011101111",
        "0000001001011110100011101111",
        "0000001001101100000110101111",
        "0000001001111000001101011011",
        "0000001001111000001110011101",
        "0000001010101111000011110111",
        "0000001010110101010000011111",
        "0000001010111011000011101111",
        "0000001010111101000011101111",
        "0000001010111101000011110111",
        "0000001011011100111000011111",
        "0000001011101011000011011111",
        "0000001011101101000011011111",
        "0000001011110000110001110011",
        "0000001011110000110010110011",
        "0000001011110000110011010011",
        "0000001011111000011101100111",
        "0000001011111001000011000111",
        "0000001011111001000101000111",
        "0000001011111001000110000111",
        "0000001011111001001001000111",
        "0000001011111001001010000111",
        "0000001011111001001101001111",
        "0000001100011100000011011111",
        "0000001100101100110000011111",
        "0000001101111000100010010111",
        "0000001101111000100010100111",
        "0000001101111010000011000111",
        "0000001101111100000100001111",
        "0000001101111100000101000111",
        "0000001101111100000110000111",
        "0000001101111100001000001111",
        "0000001101111100001001000111",
        "0000001101111100001010000111",
        "0000010000111010000011011111",
        "0000010000111010000101011111",
        "0000010000111100000101011111",
        "0000010000111100000110011111",
        "0000010000111110101000001111",
        "0000010001011100000110011111",
        "0000010001101100000101011111",
        "0000010001101100000110011111",
        "0000010001110100000101011111",
        "0000010010101100000110011111",
        "0000010011010110010000011111",
        "0000010011111000001100110011",
        "0000010011111000100001100111",
        "0000010011111001000001101011",
        "0000010101011101000011101111",
        "0000011001100110001000011111",
    ),
}
