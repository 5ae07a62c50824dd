import dataclasses
import json

import pytest

from shirshov.certificate import (
    StrongDecompCertificate,
    construct,
    estimate_L,
    first_violation,
    required_length,
    select_markers,
    verify_certificate,
    window,
)
from shirshov.errors import InsufficientComplexity, InsufficientOccurrences, ParameterError, PrefixTooShort
from shirshov.morphic import FIBONACCI, THUE_MORSE, TRIBONACCI, builtin
from shirshov.words import Word, parse_word

import oracles


def build(gen, q, probe=4096):
    p = gen.prefix(probe)
    N, markers = select_markers(p, q)
    L = estimate_L(p, markers)
    return construct(gen.prefix(required_length(q, L, N)), q)


def test_select_markers_examples():
    tm = THUE_MORSE.prefix(256)
    N, markers = select_markers(tm, 2)
    assert N == 1 and [str(w) for w in markers] == ["a", "b"]
    N, markers = select_markers(tm, 3)
    assert N == 2 and [str(w) for w in markers] == ["aa", "ab", "ba"]
    with pytest.raises(InsufficientComplexity):
        select_markers(parse_word("aaaaaaaa", 2), 2)
    with pytest.raises(ParameterError):
        select_markers(tm, 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_markers_against_oracle(q):
    s = str(FIBONACCI.prefix(300))
    N, markers = select_markers(FIBONACCI.prefix(300), q)
    assert N == next(n for n in range(1, 300) if oracles.distinct_factor_count(s, n) >= q)
    factors = sorted({s[i : i + N] for i in range(len(s) - N + 1)})
    assert [str(w) for w in markers] == factors[:q]


def test_estimate_L_examples():
    ab = parse_word("ab" * 50, 2)
    assert estimate_L(ab, [parse_word("ab", 2), parse_word("ba", 2)]) == 3
    tm = THUE_MORSE.prefix(2048)
    _, markers = select_markers(tm, 3)
    assert estimate_L(tm, markers) == 9
    with pytest.raises(InsufficientOccurrences):
        estimate_L(parse_word("aab", 2), [parse_word("aa", 2)])


def test_estimate_L_matches_oracle():
    s = THUE_MORSE.prefix(512)
    _, markers = select_markers(s, 3)
    assert estimate_L(s, markers) == oracles.smallest_window_containing(str(s), [str(w) for w in markers])


def test_window_formula():
    assert window(1, 3, 9) == (1, 10)
    assert window(3, 3, 9) == (109, 118)


@pytest.mark.parametrize(
    "gen,q",
    [(FIBONACCI, 2), (THUE_MORSE, 3), (builtin("period-2"), 2), (TRIBONACCI, 3), (FIBONACCI, 5), (THUE_MORSE, 4)],
)
def test_construction_verifies(gen, q):
    cert = build(gen, q)
    assert verify_certificate(cert)
    parts = [str(u) for u in cert.factors]
    assert oracles.is_decomposition(parts, strong=True)
    ident = "".join(parts)
    assert ident in str(cert.source)
    assert all(str(u).startswith(str(w)) for u, w in zip(cert.factors, cert.markers))


def test_fibonacci_q2_frozen():
    cert = build(FIBONACCI, 2)
    assert (cert.N, cert.L) == (1, 3)
    assert [str(w) for w in cert.markers] == ["a", "b"]


def test_prefix_too_short():
    tm = THUE_MORSE.prefix(100)
    with pytest.raises(PrefixTooShort) as info:
        construct(tm, 3)
    assert info.value.required == required_length(3, estimate_L(tm, select_markers(tm, 3)[1]), 2)


def test_tampering_is_caught():
    cert = build(THUE_MORSE, 3)
    moved = dataclasses.replace(cert, positions=[cert.positions[0], cert.positions[1] + 100, cert.positions[2]])
    assert not verify_certificate(moved)
    assert first_violation(moved).startswith("j_2")
    last = cert.factors[-1]
    cut = dataclasses.replace(cert, factors=cert.factors[:-1] + [Word(last.letters[:-1], last.m)])
    assert not verify_certificate(cut)
    swapped = dataclasses.replace(cert, markers=[cert.markers[1], cert.markers[0], cert.markers[2]])
    assert "decreasing" in first_violation(swapped)
    fake = dict(cert.inequalities, total_length=0)
    assert "inequality" in first_violation(dataclasses.replace(cert, inequalities=fake))


def test_json_round_trip():
    cert = build(FIBONACCI, 3)
    d = json.loads(json.dumps(cert.to_dict()))
    again = StrongDecompCertificate.from_dict(d)
    assert verify_certificate(again)
    assert again.to_dict() == cert.to_dict()
