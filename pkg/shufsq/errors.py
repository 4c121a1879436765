# shufsq/errors.py


class ShuffleError(Exception):
    """Base class for every error raised by the library."""


class WordParseError(ShuffleError, ValueError):
    """A textual word or permutation could not be parsed."""


class AlphabetError(ShuffleError, ValueError):
    """A letter index lies outside the declared alphabet."""


class DegreeMismatchError(ShuffleError, ValueError):
    """A permutation was applied to a word of the wrong length."""

    def __init__(self, degree: int, length: int):
        super().__init__(f"Permutation of degree {degree} cannot act on length {length}.")
        self.degree = degree
        self.length = length


class PreconditionError(ShuffleError, ValueError):
    """An operation was called outside its domain (odd word, too many 1's, ...)."""


class CoverInfeasibleError(ShuffleError):
    """Some word has no neighbour at all, so no covering set exists."""

    def __init__(self, word):
        super().__init__(f"Word {word} has no neighbouring permutation; no cover exists.")
        self.word = word


class CheckpointError(ShuffleError):
    """A checkpoint file is corrupt or belongs to a different scan."""


class ScanInterrupted(ShuffleError):
    """A scan stopped early after persisting its progress."""

    def __init__(self, processed: int, checkpoint_path):
        super().__init__(f"Scan interrupted after {processed} representatives; resume from {checkpoint_path}.")
        self.processed = processed
        self.checkpoint_path = checkpoint_path
