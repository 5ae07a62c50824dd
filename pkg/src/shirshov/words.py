"""Words over a finite ordered alphabet.

Letters are stored as ranks ``1..m``. Rank 1 is the *largest* letter, so in
text form ``'a' > 'b' > 'c' > ...``. Words are ordered degree-lexicographically:
a longer word is always greater, and words of equal length are compared
letter by letter from the left.

All public positions are 1-based and closed, ``[start, end]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import AlphabetMismatch, BoundsError, DegeneratePattern, ParseError

LETTERS = "abcdefghijklmnopqrstuvwxyz"
# Text format limit only; the core works with any positive alphabet size.
MAX_TEXT_ALPHABET = len(LETTERS)

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self):
        if not 1 <= self.size <= MAX_TEXT_ALPHABET:
            raise BoundsError(
                f"alphabet size must lie in [1, {MAX_TEXT_ALPHABET}], got {self.size}"
            )

    def letters(self) -> str:
        return LETTERS[: self.size]


@dataclass(frozen=True)
class Position:
    start: int
    end: int

    def __post_init__(self):
        if self.start < 1 or self.end < self.start:
            raise BoundsError(f"invalid position [{self.start}, {self.end}]")

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def to_list(self):
        return [self.start, self.end]


@dataclass(frozen=True)
class Word:
    letters: tuple
    m: int

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if self.m < 1:
            raise BoundsError(f"alphabet size must be positive, got {self.m}")
        for r in self.letters:
            if not 1 <= r <= self.m:
                raise BoundsError(f"rank {r} outside alphabet of size {self.m}")

    @classmethod
    def parse(cls, text: str, m: int) -> "Word":
        return parse_word(text, Alphabet(m))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return render_word(self)

    def __add__(self, other: "Word") -> "Word":
        _same_alphabet(self, other)
        return Word(self.letters + other.letters, self.m)

    def __mul__(self, k: int) -> "Word":
        return Word(self.letters * k, self.m)

    def key(self):
        """Sort key realising the deg-lex order (larger word, larger key)."""
        return (len(self.letters), tuple(-r for r in self.letters))

    def __lt__(self, other):
        return compare_deglex(self, other) == LESS

    def __le__(self, other):
        return compare_deglex(self, other) != GREATER

    def __gt__(self, other):
        return compare_deglex(self, other) == GREATER

    def __ge__(self, other):
        return compare_deglex(self, other) != LESS


def _same_alphabet(u: Word, v: Word):
    if u.m != v.m:
        raise AlphabetMismatch(f"words over alphabets of size {u.m} and {v.m}")


def compare_deglex(u: Word, v: Word) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    _same_alphabet(u, v)
    if len(u) != len(v):
        return LESS if len(u) < len(v) else GREATER
    for a, b in zip(u.letters, v.letters):
        if a != b:
            # smaller rank is the larger letter
            return GREATER if a < b else LESS
    return EQUAL


def subword(w: Word, p: Position) -> Word:
    if p.end > len(w):
        raise BoundsError(f"position [{p.start}, {p.end}] outside word of length {len(w)}")
    return Word(w.letters[p.start - 1 : p.end], w.m)


def occurrences(w: Word, v: Word, window: Optional[Position] = None) -> list:
    """Start indices (1-based, ascending, overlapping) of ``v`` inside ``w``.

    With ``window`` only occurrences lying entirely inside it are returned.
    """
    _same_alphabet(w, v)
    if len(v) == 0:
        raise DegeneratePattern("the empty word is not a valid pattern")
    lo, hi = 1, len(w)
    if window is not None:
        if window.end > len(w):
            raise BoundsError(f"window [{window.start}, {window.end}] outside word of length {len(w)}")
        lo, hi = window.start, window.end
    return scan(w.letters, v.letters, lo, hi)


def scan(text: Sequence[int], pattern: Sequence[int], lo: int = 1, hi: Optional[int] = None) -> list:
    """Raw occurrence scan on rank tuples; ``lo``/``hi`` bound the occurrence."""
    if hi is None:
        hi = len(text)
    k = len(pattern)
    pattern = tuple(pattern)
    text = tuple(text)
    return [i + 1 for i in range(lo - 1, hi - k + 1) if text[i : i + k] == pattern]


def parse_word(text: str, alphabet: Union[Alphabet, int]) -> Word:
    if isinstance(alphabet, int):
        alphabet = Alphabet(alphabet)
    ranks = []
    for idx, ch in enumerate(text, start=1):
        r = LETTERS.find(ch) + 1
        if ch == "" or r == 0 or r > alphabet.size:
            raise ParseError(
                f"character {ch!r} at index {idx} is outside the alphabet "
                f"{alphabet.letters()!r}",
                index=idx,
            )
        ranks.append(r)
    return Word(tuple(ranks), alphabet.size)


def render_word(w: Word) -> str:
    if w.m > MAX_TEXT_ALPHABET:
        raise BoundsError("alphabets larger than 26 letters have no text form")
    return "".join(LETTERS[r - 1] for r in w.letters)


def infer_alphabet(text: str, minimum: int = 1) -> int:
    """Smallest alphabet size able to hold every letter of ``text``."""
    size = minimum
    for idx, ch in enumerate(text, start=1):
        r = LETTERS.find(ch) + 1
        if r == 0:
            raise ParseError(f"character {ch!r} at index {idx} is not a lowercase letter", index=idx)
        size = max(size, r)
    return size


def concat(words: Iterable[Word], m: int) -> Word:
    letters = ()
    for w in words:
        if w.m != m:
            raise AlphabetMismatch(f"word over alphabet {w.m}, expected {m}")
        letters += w.letters
    return Word(letters, m)
