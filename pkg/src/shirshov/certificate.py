"""Explicit strongly q-decomposable subwords of recurrent aperiodic prefixes.

Given a prefix ``u`` of a uniformly recurrent word, pick q distinct marker
factors ``w1 > w2 > ... > wq`` of a common length N, and a window size L
such that every length-L factor of ``u`` contains all markers. Marker
``wi`` is then placed at the leftmost start ``ji`` in

    [2Lq(i-1) + 1, 2Lq(i-1) + L + 1]

and the factors are ``ui = u[ji, j(i+1) - 1]`` for i < q and
``uq = u[jq, jq + 2Lq]``. Each ``ui`` begins with ``wi``, which orders every
permutation, and the windows are spaced so that no factor is longer than
``1/(q-1)`` of the whole.

Every certificate is checked clause by clause before it is returned, and
:func:`first_violation` re-derives the same clauses from raw data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    ConstructionError,
    InsufficientComplexity,
    InsufficientOccurrences,
    ParameterError,
    PrefixTooShort,
)
from .morphic import smallest_window
from .witness import MAX_CHECK_FACTORS, check_decomposition
from .words import GREATER, Position, Word, compare_deglex, concat, parse_word, scan, subword


@dataclass
class StrongDecompCertificate:
    source: Word
    q: int
    N: int
    markers: list
    L: int
    positions: list
    factors: list
    inequalities: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "kind": "strong_decomposition_certificate",
            "m": self.source.m,
            "q": self.q,
            "N": self.N,
            "L": self.L,
            "markers": [str(w) for w in self.markers],
            "positions": list(self.positions),
            "factors": [str(u) for u in self.factors],
            "inequalities": dict(self.inequalities),
            "source_length": len(self.source),
            "source": str(self.source),
        }

    @classmethod
    def from_dict(cls, d):
        m = d["m"]
        return cls(
            source=parse_word(d["source"], m),
            q=d["q"],
            N=d["N"],
            markers=[parse_word(t, m) for t in d["markers"]],
            L=d["L"],
            positions=list(d["positions"]),
            factors=[parse_word(t, m) for t in d["factors"]],
            inequalities=dict(d.get("inequalities", {})),
        )


def _distinct_factors(s: tuple, n: int) -> set:
    return {s[i : i + n] for i in range(len(s) - n + 1)}


def select_markers(prefix: Word, q: int):
    """Smallest N with at least q distinct length-N factors, and the q
    deg-lex-largest of them in strictly decreasing order."""
    if q < 2:
        raise ParameterError(f"q must be >= 2, got {q}")
    s = prefix.letters
    for n in range(1, len(s) + 1):
        found = _distinct_factors(s, n)
        if len(found) >= q:
            # equal lengths: larger word <=> lexicographically smaller ranks
            chosen = sorted(found)[:q]
            return n, [Word(f, prefix.m) for f in chosen]
    raise InsufficientComplexity(
        f"the prefix never has {q} distinct factors of one length (too simple for q={q})"
    )


def estimate_L(prefix: Word, markers) -> int:
    """Smallest L such that every length-L window holds every marker.

    Such an L also makes every window ``u[i, i+L]`` hold every marker, and
    it puts each marker start at most ``L - 1`` past its window's left end,
    which keeps ``j1 <= L`` and ``length(ui) < L(2q+1)``.
    """
    n = len(prefix)
    worst = 0
    for w in markers:
        starts = scan(prefix.letters, w.letters)
        if len(starts) < 2:
            raise InsufficientOccurrences(
                f"marker {w} occurs {len(starts)} time(s) in the prefix; need at least 2"
            )
        width = smallest_window(n, starts, len(w))
        if width is None:
            raise InsufficientOccurrences(f"no window size covers marker {w}")
        worst = max(worst, width)
    return worst


def required_length(q: int, L: int, N: int) -> int:
    return 2 * L * q * (q - 1) + L + 1 + 2 * L * q + N


def window(i: int, q: int, L: int):
    """Closed 1-based start window for marker i (1-based)."""
    lo = 2 * L * q * (i - 1) + 1
    return lo, lo + L


def _inequalities(q, L, positions, factors):
    lengths = [len(u) for u in factors]
    total = sum(lengths)
    return {
        "factor_lengths": lengths,
        "factor_length_bound": L * (2 * q + 1),
        "total_length": total,
        "total_length_formula": 2 * L * q + positions[-1] - positions[0] + 1,
        "total_lower_bound": L * (2 * q * q - 1) + 1,
        "middle_term": (q - 1) * L * (2 * q + 1),
        "largest_scaled_factor": (q - 1) * max(lengths),
    }


def construct(prefix: Word, q: int) -> StrongDecompCertificate:
    N, markers = select_markers(prefix, q)
    L = estimate_L(prefix, markers)
    need = required_length(q, L, N)
    if len(prefix) < need:
        raise PrefixTooShort(
            f"prefix of length {len(prefix)} is too short; need at least {need} (q={q}, L={L}, N={N})",
            required=need,
        )
    s = prefix.letters
    positions = []
    for i, w in enumerate(markers, start=1):
        lo, hi = window(i, q, L)
        hits = scan(s, w.letters, lo, hi + N - 1)
        if not hits:
            raise ConstructionError(f"marker w_{i} = {w} does not start in window [{lo}, {hi}]")
        positions.append(hits[0])
    factors = []
    for i in range(q):
        start = positions[i]
        end = positions[i + 1] - 1 if i + 1 < q else positions[i] + 2 * L * q
        factors.append(Word(s[start - 1 : end], prefix.m))
    cert = StrongDecompCertificate(
        source=prefix,
        q=q,
        N=N,
        markers=markers,
        L=L,
        positions=positions,
        factors=factors,
        inequalities=_inequalities(q, L, positions, factors),
    )
    problem = first_violation(cert)
    if problem is not None:
        raise ConstructionError(f"construction failed: {problem}")
    return cert


def first_violation(cert: StrongDecompCertificate) -> Optional[str]:
    """Name of the first certificate clause that fails, or None."""
    q, L, N = cert.q, cert.L, cert.N
    src = cert.source
    if q < 2 or q > MAX_CHECK_FACTORS:
        return f"q={q} outside [2, {MAX_CHECK_FACTORS}]"
    if L < 1 or N < 1:
        return "L and N must be positive"
    if len(cert.markers) != q or len(cert.positions) != q or len(cert.factors) != q:
        return "markers, positions and factors must each number q"

    for i, w in enumerate(cert.markers, start=1):
        if len(w) != N:
            return f"marker w_{i} has length {len(w)}, expected N={N}"
    for i in range(q - 1):
        if compare_deglex(cert.markers[i], cert.markers[i + 1]) != GREATER:
            return f"markers not strictly decreasing at w_{i + 1}, w_{i + 2}"

    n = len(src)
    for w in cert.markers:
        for start in range(1, n - L + 2):
            if not scan(src.letters, w.letters, start, start + L - 1):
                return f"window u[{start}, {start + L - 1}] misses marker {w} (L not a recurrence constant)"

    for i, (j, w) in enumerate(zip(cert.positions, cert.markers), start=1):
        lo, hi = window(i, q, L)
        if not lo <= j <= hi:
            return f"j_{i} = {j} outside window [{lo}, {hi}]"
        if j + N - 1 > n or subword(src, Position(j, j + N - 1)) != w:
            return f"marker w_{i} does not occur at j_{i} = {j}"

    for i in range(q):
        j = cert.positions[i]
        end = cert.positions[i + 1] - 1 if i + 1 < q else j + 2 * L * q
        if end > n or end < j:
            return f"u_{i + 1} = u[{j}, {end}] does not fit in the source"
        if subword(src, Position(j, end)) != cert.factors[i]:
            return f"u_{i + 1} differs from u[{j}, {end}]"

    if not cert.positions[0] <= L:
        return f"j_1 = {cert.positions[0]} is not <= L = {L}"
    if not cert.positions[-1] >= 2 * L * q * (q - 1) + 1:
        return f"j_q = {cert.positions[-1]} is not >= 2Lq(q-1)+1 = {2 * L * q * (q - 1) + 1}"

    bound = L * (2 * q + 1)
    for i, u in enumerate(cert.factors, start=1):
        if not len(u) < bound:
            return f"length(u_{i}) = {len(u)} is not < L(2q+1) = {bound}"

    total = len(concat(cert.factors, src.m))
    formula = 2 * L * q + cert.positions[-1] - cert.positions[0] + 1
    if total != formula:
        return f"length(u_1...u_q) = {total} differs from 2Lq + j_q - j_1 + 1 = {formula}"
    lower = L * (2 * q * q - 1) + 1
    if not total >= lower:
        return f"length(u_1...u_q) = {total} is not >= L(2q^2-1)+1 = {lower}"
    middle = (q - 1) * L * (2 * q + 1)
    if not lower > middle:
        return f"L(2q^2-1)+1 = {lower} is not > (q-1)L(2q+1) = {middle}"
    for i, u in enumerate(cert.factors, start=1):
        if not middle > (q - 1) * len(u):
            return f"(q-1)L(2q+1) = {middle} is not > (q-1)length(u_{i}) = {(q - 1) * len(u)}"

    if not check_decomposition(cert.factors, strong=True):
        return "factors are not a strong q-decomposition"

    if cert.inequalities and cert.inequalities != _inequalities(q, L, cert.positions, cert.factors):
        return "recorded inequality values do not match the recomputed ones"
    return None


def verify_certificate(cert: StrongDecompCertificate) -> bool:
    return first_violation(cert) is None
