"""Detection and re-verification of the two Shirshov witnesses.

A *power witness* is an occurrence of ``t^p`` with ``t`` non-empty. A
*decomposition witness* is an occurrence of a subword ``w = w1 w2 ... wq``
whose identity-order concatenation is strictly greater (deg-lex) than the
concatenation in every other order. It is *strong* when additionally
``(q - 1) * len(wi) < len(w)`` for every factor.

Search order is fixed so that every result is reproducible: leftmost
position first, then the shortest subword, then the lexicographically
earliest vector of factor lengths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Optional, Union

from .errors import DegeneratePattern, LimitError, ParameterError, SearchBudgetExceeded
from .words import GREATER, Position, Word, compare_deglex, concat, subword

MAX_CHECK_FACTORS = 8
MAX_SEARCH_FACTORS = 6
DEFAULT_MAX_LENGTH = 200
DEFAULT_MAX_SPLITS = 2_000_000

PLAIN, STRONG = "plain", "strong"


@dataclass(frozen=True)
class PowerWitness:
    position: Position
    base: Word
    exponent: int

    kind = "power"

    def to_dict(self):
        return {
            "kind": self.kind,
            "position": self.position.to_list(),
            "base": str(self.base),
            "exponent": self.exponent,
        }


@dataclass(frozen=True)
class DecompWitness:
    position: Position
    factors: tuple
    strong: bool

    kind = "decomposition"

    def to_dict(self):
        return {
            "kind": self.kind,
            "position": self.position.to_list(),
            "factors": [str(f) for f in self.factors],
            "strong": self.strong,
        }


Witness = Union[PowerWitness, DecompWitness]


@dataclass
class AnalysisReport:
    word: Word
    p: int
    q: int
    mode: str
    outcome: Optional[Witness]
    budget_exceeded: bool = False
    witnesses: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def outcome_kind(self) -> str:
        if self.outcome is not None:
            return self.outcome.kind
        return "budget_exceeded" if self.budget_exceeded else "none"

    def to_dict(self):
        if self.outcome is not None:
            outcome = self.outcome.to_dict()
        else:
            outcome = {"kind": self.outcome_kind}
        return {
            "word": str(self.word),
            "m": self.word.m,
            "p": self.p,
            "q": self.q,
            "mode": self.mode,
            "outcome": outcome,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "stats": dict(self.stats),
        }


# -- powers -----------------------------------------------------------------


def _check_exponent(p):
    if p < 2:
        raise ParameterError(f"power exponent must be >= 2, got {p}")


def find_power(w: Word, p: int) -> Optional[PowerWitness]:
    """Leftmost p-power occurrence in ``w``, shortest base among the leftmost.

    For each candidate period ``l`` the run of consecutive matches
    ``w[k] == w[k + l]`` starting at every ``k`` is computed right to left; a
    p-power with base length ``l`` starts at ``i`` iff that run is at least
    ``(p - 1) * l``.
    """
    _check_exponent(p)
    s = w.letters
    n = len(s)
    best = None
    for period in range(1, n // p + 1):
        need = (p - 1) * period
        limit = n - p * period  # last admissible 0-based start
        if best is not None:
            limit = min(limit, best[0] - 1)
        run = 0
        found = None
        for k in range(n - period - 1, -1, -1):
            run = run + 1 if s[k] == s[k + period] else 0
            if k <= limit and run >= need:
                found = k
        if found is not None and (best is None or found < best[0]):
            best = (found, period)
    if best is None:
        return None
    i, period = best
    return PowerWitness(Position(i + 1, i + p * period), Word(s[i : i + period], w.m), p)


def find_power_naive(w: Word, p: int) -> Optional[PowerWitness]:
    """Reference scan: try every start, then every base length."""
    _check_exponent(p)
    s = w.letters
    n = len(s)
    for i in range(n):
        for period in range(1, (n - i) // p + 1):
            base = s[i : i + period]
            if s[i : i + p * period] == base * p:
                return PowerWitness(Position(i + 1, i + p * period), Word(base, w.m), p)
    return None


def power_suffix(s: tuple, p: int) -> Optional[int]:
    """Base length of the shortest p-power that is a suffix of ``s``."""
    n = len(s)
    for period in range(1, n // p + 1):
        tail = s[n - p * period :]
        if tail == tail[:period] * p:
            return period
    return None


# -- decompositions ---------------------------------------------------------


def _dominates(factors) -> bool:
    """Identity concatenation strictly beats every other order.

    All permuted concatenations have the same length, so deg-lex reduces to
    lexicographic comparison of rank tuples with the order reversed.
    """
    ident = tuple(r for f in factors for r in f)
    q = len(factors)
    it = permutations(range(q))
    next(it)
    for perm in it:
        other = tuple(r for i in perm for r in factors[i])
        if not ident < other:
            return False
    return True


def check_decomposition(factors, strong: bool = False) -> bool:
    factors = list(factors)
    q = len(factors)
    if q < 2:
        raise ParameterError(f"a decomposition needs at least 2 factors, got {q}")
    if q > MAX_CHECK_FACTORS:
        raise LimitError(f"decomposition checks are capped at q = {MAX_CHECK_FACTORS}, got {q}")
    if any(len(f) == 0 for f in factors):
        raise DegeneratePattern("decomposition factors must be non-empty")
    ranks = [concat([f], factors[0].m).letters for f in factors]
    if strong:
        total = sum(len(f) for f in ranks)
        if any((q - 1) * len(f) >= total for f in ranks):
            return False
    return _dominates(ranks)


class _SplitSearch:
    """Pruned depth-first enumeration of factor-length vectors.

    A decomposition's leading factors ``(w1, ..., wk)`` always form a
    decomposition on their own (permuting only them leaves the tail fixed),
    so any prefix tuple that fails is cut immediately.
    """

    def __init__(self, s: tuple, q: int, strong: bool, max_splits: int, stats: dict):
        self.s = s
        self.q = q
        self.strong = strong
        self.max_splits = max_splits
        self.stats = stats
        self._prefix_ok = {}

    def _prefix_decomposable(self, start, lengths):
        key = (start, lengths)
        ok = self._prefix_ok.get(key)
        if ok is None:
            factors, pos = [], start
            for length in lengths:
                factors.append(self.s[pos : pos + length])
                pos += length
            ok = _dominates(factors)
            self._prefix_ok[key] = ok
        return ok

    def first_split(self, start: int, total: int) -> Optional[tuple]:
        """Earliest length vector splitting ``s[start:start+total]``, if any."""
        q = self.q
        if total < q:
            return None
        cap = (total - 1) // (q - 1) if self.strong else total - (q - 1)
        if cap < 1:
            return None
        return self._dfs(start, total, (), 0, cap)

    def _dfs(self, start, total, lengths, used, cap):
        k = len(lengths)
        remaining = total - used
        if k == self.q - 1:
            if not 1 <= remaining <= cap:
                return None
            full = lengths + (remaining,)
            self.stats["splits_examined"] = self.stats.get("splits_examined", 0) + 1
            if self.stats["splits_examined"] > self.max_splits:
                raise SearchBudgetExceeded(
                    f"split budget of {self.max_splits} exhausted", dict(self.stats)
                )
            if self._prefix_decomposable(start, full):
                return full
            return None
        for length in range(1, min(cap, remaining - (self.q - 1 - k)) + 1):
            nxt = lengths + (length,)
            if k >= 1 and not self._prefix_decomposable(start, nxt):
                continue
            found = self._dfs(start, total, nxt, used + length, cap)
            if found is not None:
                return found
        return None


def _validate_search(q):
    if q < 2:
        raise ParameterError(f"q must be >= 2, got {q}")


def _make_witness(w: Word, start: int, lengths: tuple, strong: bool) -> DecompWitness:
    factors, pos = [], start
    for length in lengths:
        factors.append(Word(w.letters[pos : pos + length], w.m))
        pos += length
    return DecompWitness(Position(start + 1, pos), tuple(factors), strong)


def find_decomposable_subword(
    w: Word,
    q: int,
    strong: bool = False,
    max_length: int = DEFAULT_MAX_LENGTH,
    max_splits: int = DEFAULT_MAX_SPLITS,
    stats: Optional[dict] = None,
) -> Optional[DecompWitness]:
    """First (strongly) q-decomposable subword of ``w`` in search order.

    Raises :class:`SearchBudgetExceeded` when ``w`` is longer than
    ``max_length`` or more than ``max_splits`` complete splits are tried.
    """
    _validate_search(q)
    stats = {} if stats is None else stats
    stats.setdefault("subwords_examined", 0)
    stats.setdefault("splits_examined", 0)
    n = len(w)
    if n < q:
        return None
    if q > MAX_SEARCH_FACTORS:
        raise LimitError(f"subword decomposition search is capped at q = {MAX_SEARCH_FACTORS}, got {q}")
    if n > max_length:
        raise SearchBudgetExceeded(
            f"word length {n} exceeds the exhaustive search budget of {max_length}", dict(stats)
        )
    search = _SplitSearch(w.letters, q, strong, max_splits, stats)
    for start in range(n - q + 1):
        for total in range(q, n - start + 1):
            stats["subwords_examined"] += 1
            lengths = search.first_split(start, total)
            if lengths is not None:
                return _make_witness(w, start, lengths, strong)
    return None


def decomposable_suffix(s: tuple, q: int, strong: bool) -> Optional[tuple]:
    """Split of the shortest (strongly) q-decomposable suffix of ``s``."""
    n = len(s)
    if n < q:
        return None
    if q > MAX_SEARCH_FACTORS:
        raise LimitError(f"subword decomposition search is capped at q = {MAX_SEARCH_FACTORS}, got {q}")
    search = _SplitSearch(s, q, strong, float("inf"), {})
    for total in range(q, n + 1):
        lengths = search.first_split(n - total, total)
        if lengths is not None:
            return lengths
    return None


# -- analysis ---------------------------------------------------------------


def analyze(
    w: Word,
    p: int,
    q: int,
    mode: str = PLAIN,
    exhaustive: bool = False,
    max_length: int = DEFAULT_MAX_LENGTH,
    max_splits: int = DEFAULT_MAX_SPLITS,
) -> AnalysisReport:
    """Look for a p-power first, then for a q-decomposable subword.

    With ``exhaustive`` both searches always run and every witness found is
    listed in ``witnesses``; ``outcome`` is still the first one.
    """
    if mode not in (PLAIN, STRONG):
        raise ParameterError(f"mode must be 'plain' or 'strong', got {mode!r}")
    _check_exponent(p)
    _validate_search(q)
    stats = {"subwords_examined": 0, "splits_examined": 0}
    found = []
    power = find_power(w, p)
    if power is not None:
        found.append(power)
    over_budget = False
    if power is None or exhaustive:
        try:
            decomp = find_decomposable_subword(
                w, q, mode == STRONG, max_length=max_length, max_splits=max_splits, stats=stats
            )
        except SearchBudgetExceeded:
            decomp = None
            over_budget = True
        if decomp is not None:
            found.append(decomp)
    outcome = found[0] if found else None
    return AnalysisReport(
        word=w,
        p=p,
        q=q,
        mode=mode,
        outcome=outcome,
        budget_exceeded=over_budget and outcome is None,
        witnesses=found,
        stats=stats,
    )


def verify_witness(w: Word, witness: Witness) -> bool:
    """Recheck a witness from scratch with word-level primitives only."""
    try:
        target = subword(w, witness.position)
    except Exception:
        return False
    if isinstance(witness, PowerWitness):
        if len(witness.base) == 0 or witness.exponent < 2:
            return False
        built = Word((), w.m)
        for _ in range(witness.exponent):
            built = built + witness.base
        return compare_deglex(built, target) == 0
    if isinstance(witness, DecompWitness):
        factors = list(witness.factors)
        q = len(factors)
        if q < 2 or q > MAX_CHECK_FACTORS or any(len(f) == 0 for f in factors):
            return False
        ident = concat(factors, w.m)
        if compare_deglex(ident, target) != 0:
            return False
        if witness.strong and any((q - 1) * len(f) >= len(ident) for f in factors):
            return False
        it = permutations(range(q))
        next(it)
        for perm in it:
            if compare_deglex(ident, concat([factors[i] for i in perm], w.m)) != GREATER:
                return False
        return True
    return False


def witness_from_dict(d: dict, m: int) -> Witness:
    from .words import parse_word

    pos = Position(*d["position"])
    if d["kind"] == "power":
        return PowerWitness(pos, parse_word(d["base"], m), d["exponent"])
    if d["kind"] == "decomposition":
        return DecompWitness(pos, tuple(parse_word(f, m) for f in d["factors"]), d["strong"])
    raise ParameterError(f"unknown witness kind {d['kind']!r}")
