"""Prefixes of right-infinite words and their finite-prefix statistics.

Two kinds of generator are supported: fixed points of prolongable
substitutions, and purely periodic words. Complexity and recurrence values
are always those of the scanned prefix; nothing here is a claim about the
infinite word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .errors import BoundsError, ConstructionError, InsufficientOccurrences, ParameterError
from .words import LETTERS, Word, parse_word, scan


@dataclass(frozen=True)
class MorphicGenerator:
    substitution: dict
    seed: int
    m: int
    name: Optional[str] = None

    def __post_init__(self):
        image = self.substitution.get(self.seed)
        if image is None or image[0] != self.seed:
            raise ConstructionError(f"substitution is not prolongable on seed {LETTERS[self.seed - 1]!r}")
        if len(image) < 2:
            raise ConstructionError("seed image must have length >= 2 for the fixed point to grow")
        todo, seen = [self.seed], {self.seed}
        while todo:
            r = todo.pop()
            img = self.substitution.get(r)
            if not img:
                raise ConstructionError(f"letter {LETTERS[r - 1]!r} has no (non-empty) image")
            for x in img:
                if not 1 <= x <= self.m:
                    raise ConstructionError(f"rank {x} outside alphabet of size {self.m}")
                if x not in seen:
                    seen.add(x)
                    todo.append(x)

    def prefix(self, length: int) -> Word:
        if length < 1:
            raise BoundsError(f"prefix length must be >= 1, got {length}")
        w = (self.seed,)
        while len(w) < length:
            w = self.apply(w)
        return Word(w[:length], self.m)

    def apply(self, letters: tuple) -> tuple:
        out = []
        for r in letters:
            out.extend(self.substitution[r])
        return tuple(out)

    def describe(self) -> str:
        rules = ", ".join(
            f"{LETTERS[r - 1]}->{''.join(LETTERS[x - 1] for x in img)}"
            for r, img in sorted(self.substitution.items())
        )
        return f"{self.name or 'morphic'}: {rules}, seed={LETTERS[self.seed - 1]}"


@dataclass(frozen=True)
class PeriodicGenerator:
    period: tuple
    m: int
    name: Optional[str] = None

    def __post_init__(self):
        if not self.period:
            raise ConstructionError("periodic generator needs a non-empty period")

    def prefix(self, length: int) -> Word:
        if length < 1:
            raise BoundsError(f"prefix length must be >= 1, got {length}")
        reps = -(-length // len(self.period))
        return Word((self.period * reps)[:length], self.m)

    def describe(self) -> str:
        return f"{self.name or 'periodic'}: period={''.join(LETTERS[r - 1] for r in self.period)}"


def morphic(rules: dict, seed: str = "a", name: Optional[str] = None) -> MorphicGenerator:
    """Build a generator from text rules such as ``{"a": "ab", "b": "ba"}``."""
    letters = set(rules) | {ch for img in rules.values() for ch in img} | {seed}
    m = max(LETTERS.index(ch) + 1 for ch in letters)
    sub = {parse_word(k, m).letters[0]: parse_word(v, m).letters for k, v in rules.items()}
    return MorphicGenerator(sub, parse_word(seed, m).letters[0], m, name)


def periodic(period: str, name: Optional[str] = None, m: Optional[int] = None) -> PeriodicGenerator:
    size = m or max(LETTERS.index(ch) + 1 for ch in period)
    return PeriodicGenerator(parse_word(period, size).letters, size, name)


THUE_MORSE = morphic({"a": "ab", "b": "ba"}, name="thue-morse")
FIBONACCI = morphic({"a": "ab", "b": "a"}, name="fibonacci")
TRIBONACCI = morphic({"a": "ab", "b": "ac", "c": "a"}, name="tribonacci")

BUILTIN = {g.name: g for g in (THUE_MORSE, FIBONACCI, TRIBONACCI)}


def builtin(name: str):
    """Look up a named generator; ``period-k`` cycles the first k letters."""
    if name in BUILTIN:
        return BUILTIN[name]
    match = re.fullmatch(r"period-(\d+)", name)
    if match:
        k = int(match.group(1))
        if not 1 <= k <= len(LETTERS):
            raise ParameterError(f"period must lie in [1, {len(LETTERS)}], got {k}")
        return periodic(LETTERS[:k], name=name)
    known = ", ".join(sorted(BUILTIN) + ["period-k"])
    raise ParameterError(f"unknown generator {name!r}; known: {known}")


_RULE = re.compile(r"^([a-z])\s*->\s*([a-z]+)$")


def parse_generator_line(line: str):
    """Parse one config line.

    Grammar::

        line     := name ":" body
        body     := rule ("," rule)* "," "seed=" letter
                  | "period=" letters
        rule     := letter "->" letters

    e.g. ``tm: a->ab, b->ba, seed=a`` or ``p3: period=abc``.
    """
    if ":" not in line:
        raise ParameterError(f"generator line needs 'name: ...', got {line!r}")
    name, body = (part.strip() for part in line.split(":", 1))
    if not name:
        raise ParameterError("generator name is empty")
    items = [item.strip() for item in body.split(",") if item.strip()]
    if len(items) == 1 and items[0].startswith("period="):
        return periodic(items[0][len("period=") :].strip(), name=name)
    rules, seed = {}, None
    for item in items:
        if item.startswith("seed="):
            seed = item[len("seed=") :].strip()
            continue
        match = _RULE.match(item)
        if not match:
            raise ParameterError(f"cannot parse rule {item!r} in generator {name!r}")
        if match.group(1) in rules:
            raise ParameterError(f"letter {match.group(1)!r} has two rules in generator {name!r}")
        rules[match.group(1)] = match.group(2)
    if seed is None or len(seed) != 1:
        raise ParameterError(f"generator {name!r} needs 'seed=<letter>'")
    return morphic(rules, seed=seed, name=name)


def load_generators(text: str) -> dict:
    gens = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            gen = parse_generator_line(line)
            gens[gen.name] = gen
    return gens


# -- statistics ---------------------------------------------------------------


@dataclass
class ComplexityProfile:
    prefix_length: int
    values: list = field(default_factory=list)

    def omega(self, n: int) -> int:
        return dict(self.values)[n]

    def to_dict(self):
        return {
            "prefix_length": self.prefix_length,
            "values": [[n, c] for n, c in self.values],
            "note": "prefix-certified only",
        }


def complexity(w: Word, n_max: int) -> ComplexityProfile:
    """Number of distinct length-n factors of ``w`` for n = 1..n_max."""
    n = len(w)
    if n_max < 1 or n_max > n:
        raise BoundsError(f"n_max must lie in [1, {n}], got {n_max}")
    # one byte per letter keeps slicing and hashing in C
    data = bytes(w.letters)
    values = [(k, len({data[i : i + k] for i in range(n - k + 1)})) for k in range(1, n_max + 1)]
    return ComplexityProfile(n, values)


@dataclass
class RecurrenceProfile:
    pattern: Word
    prefix_length: int
    occurrences: int
    max_gap: int
    window_constant: Optional[int]

    def to_dict(self):
        return {
            "pattern": str(self.pattern),
            "prefix_length": self.prefix_length,
            "occurrences": self.occurrences,
            "max_gap": self.max_gap,
            "window_constant": self.window_constant,
            "note": "prefix-certified only",
        }


def smallest_window(n: int, starts: list, k: int) -> Optional[int]:
    """Smallest L such that every length-L window of a length-n text holds
    one of the length-k occurrences in ``starts``; None if no L works."""
    inf = n + 1
    # need[i]: shortest window starting at 1-based i that holds an occurrence
    need = [inf] * (n + 1)
    j = len(starts) - 1
    nxt = None
    for i in range(n, 0, -1):
        while j >= 0 and starts[j] >= i:
            nxt = starts[j]
            j -= 1
        if nxt is not None:
            need[i] = nxt + k - i
    worst = [0] * (n + 1)
    for i in range(1, n + 1):
        worst[i] = max(worst[i - 1], need[i])
    for length in range(max(k, 1), n + 1):
        if worst[n - length + 1] <= length:
            return length
    return None


def window_works(w: Word, v: Word, length: int) -> bool:
    """Every length-``length`` factor of ``w`` contains ``v``."""
    s, pat = w.letters, v.letters
    return all(scan(s[i : i + length], pat) for i in range(len(s) - length + 1))


def recurrence(w: Word, v: Word) -> RecurrenceProfile:
    if len(v) == 0:
        raise InsufficientOccurrences("the empty word is not a valid pattern")
    starts = scan(w.letters, v.letters)
    if len(starts) < 2:
        raise InsufficientOccurrences(
            f"{v} occurs {len(starts)} time(s) in the prefix; need at least 2"
        )
    max_gap = max(b - a for a, b in zip(starts, starts[1:]))
    candidate = max_gap + len(v) - 1
    if candidate <= len(w) and window_works(w, v, candidate):
        constant = candidate
    else:
        constant = smallest_window(len(w), starts, len(v))
    return RecurrenceProfile(v, len(w), len(starts), max_gap, constant)


def eventually_periodic_check(w: Word, max_period: int) -> Optional[tuple]:
    """Smallest ``(preperiod, period)`` (in that order) fitting the prefix.

    A pair fits when ``w[i] == w[i + period]`` for every ``i`` past the
    preperiod and the periodic tail spans at least two full periods.
    """
    s = w.letters
    n = len(s)
    if max_period < 1 or 2 * max_period > n:
        raise BoundsError(f"max_period must lie in [1, {n // 2}], got {max_period}")
    # last[P]: largest 0-based i with s[i] != s[i + P], or -1
    last = {}
    for period in range(1, max_period + 1):
        bad = -1
        for i in range(n - period - 1, -1, -1):
            if s[i] != s[i + period]:
                bad = i
                break
        last[period] = bad
    best = None
    for period in range(1, max_period + 1):
        pre = last[period] + 1
        if n - pre >= 2 * period and (best is None or (pre, period) < best):
            best = (pre, period)
    return best
