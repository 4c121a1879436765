# shufsq/models/common.py
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations as _all_orderings
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from shufsq.errors import AlphabetError, DegreeMismatchError, WordParseError

# --- Shared vocabulary: words, permutations and symmetry groups ---

DIGITS = "digits"
LETTERS = "letters"

_LETTER_CHARS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_DIGIT_CHARS = "0123456789"


def _parse_text(text: str) -> Tuple[bytes, str]:
    """Parses a bare string over {0..9} or {A..Z}; mixed alphabets are rejected."""
    if not text:
        return b"", ""
    if all(ch in _DIGIT_CHARS for ch in text):
        return bytes(ord(ch) - 48 for ch in text), DIGITS
    if all(ch in _LETTER_CHARS for ch in text):
        return bytes(ord(ch) - 65 for ch in text), LETTERS
    raise WordParseError(f"Cannot parse word {text!r}: use only digits or only capital letters.")


@dataclass(frozen=True, eq=False)
class Word:
    """
    A finite word over the alphabet {0..k-1}.

    Letters are kept as ``bytes`` (one letter per byte), which gives the
    total order for free: lexicographic on letter indices, shorter prefix first.
    Strings are accepted for convenience and parsed with the textual syntax.
    """
    letters: Union[bytes, str, Sequence[int]]
    alphabet_size: Optional[int] = None
    notation: str = field(default="", compare=False, repr=False)

    def __post_init__(self):
        """Normalize the letters to bytes and infer the alphabet and notation."""
        letters = self.letters
        notation = self.notation
        if isinstance(letters, str):
            letters, parsed_notation = _parse_text(letters)
            notation = notation or parsed_notation
        elif not isinstance(letters, bytes):
            try:
                letters = bytes(letters)
            except ValueError:
                raise AlphabetError(f"Letter indices must lie in 0..255, got {list(letters)!r}.")

        size = self.alphabet_size
        if size is None:
            highest = max(letters) + 1 if letters else 1
            size = max(2, highest) if notation == DIGITS else highest
        if size < 1:
            raise AlphabetError(f"Alphabet size must be positive, got {size}.")
        if letters and max(letters) >= size:
            raise AlphabetError(f"Letter {max(letters)} is outside an alphabet of size {size}.")
        if not notation:
            notation = DIGITS if size <= 2 else LETTERS

        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "alphabet_size", size)
        object.__setattr__(self, "notation", notation)

    # --- Equality and the total order (subclasses compare with plain words) ---

    def _key(self) -> Tuple[bytes, int]:
        return self.letters, self.alphabet_size

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __lt__(self, other: "Word") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "Word") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "Word") -> bool:
        return self._key() > other._key()

    def __ge__(self, other: "Word") -> bool:
        return self._key() >= other._key()

    # --- Sequence protocol ---

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return self._with(self.letters[index])
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        size = max(self.alphabet_size, other.alphabet_size)
        return Word(self.letters + other.letters, size, self.notation)

    def __str__(self) -> str:
        chars = _DIGIT_CHARS if self.notation == DIGITS and self.alphabet_size <= 10 else _LETTER_CHARS
        if self.alphabet_size > len(chars):
            return ",".join(str(letter) for letter in self.letters)
        return "".join(chars[letter] for letter in self.letters)

    def _with(self, letters: bytes) -> "Word":
        return Word(letters, self.alphabet_size, self.notation)

    # --- Basic statistics and transforms ---

    @property
    def length(self) -> int:
        return len(self.letters)

    def counts(self) -> List[int]:
        """Number of occurrences of every letter of the alphabet."""
        tally = [0] * self.alphabet_size
        for letter in self.letters:
            tally[letter] += 1
        return tally

    @property
    def is_binary(self) -> bool:
        return all(letter < 2 for letter in self.letters)

    def reverse(self) -> "Word":
        return self._with(self.letters[::-1])

    def rotate(self, shift: int) -> "Word":
        """Moves the first ``shift`` letters to the end."""
        if not self.letters:
            return self
        shift %= len(self.letters)
        return self._with(self.letters[shift:] + self.letters[:shift])

    def complement(self) -> "Word":
        """Swaps the letters 0 and 1 of a binary word."""
        if not self.is_binary:
            raise AlphabetError(f"Complement is only defined for binary words, got {self}.")
        return Word(self.letters.translate(_COMPLEMENT), max(2, self.alphabet_size), self.notation)

    def subword(self, positions: Sequence[int]) -> "Word":
        """The subword read at the given (0-based) positions."""
        return self._with(bytes(self.letters[p] for p in positions))

    def relabel(self, mapping: Sequence[int]) -> "Word":
        """Renames letter ``i`` to ``mapping[i]``."""
        return self._with(bytes(mapping[letter] for letter in self.letters))

    def pack(self) -> int:
        """Packs the word into an integer, 4 bits per letter, with a length sentinel."""
        if self.alphabet_size > 16:
            raise AlphabetError("Packing needs an alphabet of at most 16 letters.")
        value = 1
        for letter in self.letters:
            value = (value << 4) | letter
        return value


_COMPLEMENT = bytes([1, 0] + list(range(2, 256)))


@dataclass(frozen=True, eq=False)
class CanonicalWord(Word):
    """
    A word of length 2k over k letters, every letter twice, with first
    occurrences in increasing alphabet order (the lexicographically least
    member of its renaming class).
    """

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "notation", LETTERS)
        tally = self.counts()
        if any(count != 2 for count in tally):
            raise AlphabetError(f"{self} is not canonical: every letter must occur exactly twice.")
        expected = 0
        for letter in self.letters:
            if letter > expected:
                raise AlphabetError(f"{self} is not canonical: first occurrences are out of order.")
            if letter == expected:
                expected += 1


class GroupKind(str, Enum):
    """Permutation groups acting on positions 1..n."""
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class GroupSpec:
    """Which word symmetries are quotiented out when picking representatives."""
    cyclic: bool = True
    reversal: bool = True
    alphabet: bool = True

    def __str__(self) -> str:
        parts = [name for name, on in (("cyclic", self.cyclic), ("reversal", self.reversal),
                                       ("alphabet", self.alphabet)) if on]
        return "+".join(parts) or "trivial"


ALL_SYMMETRIES = GroupSpec()


@dataclass(frozen=True)
class SymmetryClass:
    representative: Word
    orbit_size: int
    group_spec: GroupSpec


@dataclass(frozen=True, order=True)
class Permutation:
    """
    A permutation in one-line notation.

    Stored 0-based in ``images``; the usual 1-based one-line form (``"231"``)
    is used for parsing and printing. Applying it to a word follows
    gamma(W) = w[gamma_1] w[gamma_2] ... w[gamma_n].
    """
    images: Union[Tuple[int, ...], str, Sequence[int]]

    def __post_init__(self):
        """Parse one-line strings and check that the mapping is a bijection."""
        images = self.images
        if isinstance(images, str):
            images = _parse_one_line(images)
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise WordParseError(f"{images!r} is not a permutation of 0..{len(images) - 1}.")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_one_line(cls, values: Sequence[int]) -> "Permutation":
        """Builds a permutation from 1-based one-line values."""
        return cls(tuple(value - 1 for value in values))

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def rotation(cls, degree: int, shift: int) -> "Permutation":
        """The cyclic permutation (j+1)(j+2)...n 1...j, i.e. a shift of the word by ``shift``."""
        return cls(tuple((i + shift) % degree for i in range(degree)))

    @classmethod
    def reflection(cls, degree: int, center: int) -> "Permutation":
        """The polygon reflection i -> ((center - i) mod n) + 1 on vertices 1..n."""
        return cls(tuple((center - i - 1) % degree for i in range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def one_line(self) -> str:
        values = [str(image + 1) for image in self.images]
        return "".join(values) if self.degree <= 9 else ",".join(values)

    def __str__(self) -> str:
        return self.one_line()

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``(g * h).apply(w) == g.apply(h.apply(w))``."""
        if other.degree != self.degree:
            raise DegreeMismatchError(other.degree, self.degree)
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inverse = [0] * self.degree
        for position, image in enumerate(self.images):
            inverse[image] = position
        return Permutation(tuple(inverse))

    def apply(self, word: Word) -> Word:
        if len(word) != self.degree:
            raise DegreeMismatchError(self.degree, len(word))
        return word.subword(self.images)

    # --- Group predicates ---

    @property
    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images))

    @property
    def is_involution(self) -> bool:
        return all(self.images[image] == i for i, image in enumerate(self.images))

    @property
    def is_cyclic(self) -> bool:
        if not self.images:
            return True
        shift = self.images[0]
        return all(image == (i + shift) % self.degree for i, image in enumerate(self.images))

    @property
    def is_reflection(self) -> bool:
        if not self.images:
            return True
        top = self.images[0]
        return all(image == (top - i) % self.degree for i, image in enumerate(self.images))

    @property
    def is_dihedral(self) -> bool:
        return self.is_cyclic or self.is_reflection

    def cycle_notation(self) -> str:
        """Cycle form without fixed points, e.g. ``(12)(34)``; the identity prints as ``id``."""
        seen = [False] * self.degree
        cycles = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = []
            current = start
            while not seen[current]:
                seen[current] = True
                cycle.append(current + 1)
                current = self.images[current]
            if len(cycle) > 1:
                separator = "" if self.degree <= 9 else " "
                cycles.append("(" + separator.join(map(str, cycle)) + ")")
        return "".join(cycles) or "id"


def _parse_one_line(text: str) -> Tuple[int, ...]:
    text = text.strip()
    try:
        if "," in text:
            values = [int(part) for part in text.split(",")]
        else:
            values = [int(ch) for ch in text]
    except ValueError:
        raise WordParseError(f"Cannot parse permutation {text!r}.")
    return tuple(value - 1 for value in values)


def symmetric_group(degree: int) -> List[Permutation]:
    """All n! permutations in lexicographic order."""
    return [Permutation(order) for order in _all_orderings(range(degree))]


LETTER_NAMES: Dict[str, str] = {DIGITS: _DIGIT_CHARS, LETTERS: _LETTER_CHARS}
