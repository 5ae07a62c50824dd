import json
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shirshov.errors import DegeneratePattern, LimitError, ParameterError, SearchBudgetExceeded
from shirshov.morphic import FIBONACCI, THUE_MORSE
from shirshov.witness import (
    DecompWitness,
    PowerWitness,
    analyze,
    check_decomposition,
    find_decomposable_subword,
    find_power,
    find_power_naive,
    verify_witness,
    witness_from_dict,
)
from shirshov.words import GREATER, Position, Word, compare_deglex, parse_word

import oracles
from strategies import words


def W(text, m=2):
    return parse_word(text, m)


# -- powers ---------------------------------------------------------------


def test_find_power_examples():
    wit = find_power(W("abab"), 2)
    assert (str(wit.base), wit.position) == ("ab", Position(1, 4))
    assert find_power(W("aba"), 2) is None
    # frozen from oracles.powers(thue_morse_64, 3) == []
    assert find_power(THUE_MORSE.prefix(64), 3) is None
    assert find_power_naive(THUE_MORSE.prefix(64), 3) is None


def test_find_power_prefers_leftmost_then_shortest():
    wit = find_power(W("baaaa"), 2)
    assert wit.position == Position(2, 3)
    wit = find_power(W("abababbabb"), 2)
    assert (wit.position, str(wit.base)) == (Position(1, 4), "ab")


def test_exponent_must_be_at_least_two():
    with pytest.raises(ParameterError):
        find_power(W("aa"), 1)


def test_power_matches_oracle_exhaustively():
    for n in range(1, 11):
        for letters in product("ab", repeat=n):
            text = "".join(letters)
            for p in (2, 3):
                expected = oracles.powers(text, p)
                got = find_power(W(text), p)
                if not expected:
                    assert got is None
                else:
                    start, length = expected[0]
                    assert got.position.start == start and len(got.base) == length


@given(words(3, max_size=40), st.integers(2, 4))
def test_period_scan_equals_naive(w, p):
    assert find_power(w, p) == find_power_naive(w, p)


# -- decomposition checks -----------------------------------------------------


@pytest.mark.parametrize(
    "parts, expected", [(["a", "b"], True), (["b", "a"], False), (["ab", "ab"], False), (["a", "ba"], True), (["ba", "a"], False)]
)
def test_check_decomposition_examples(parts, expected):
    assert check_decomposition([W(x) for x in parts]) is expected


def test_check_decomposition_errors():
    with pytest.raises(DegeneratePattern):
        check_decomposition([W("a"), W("")])
    with pytest.raises(LimitError, match="8"):
        check_decomposition([W("a")] * 9)
    with pytest.raises(ParameterError):
        check_decomposition([W("a")])


def test_strong_length_constraint():
    # for q = 2 every non-empty split satisfies the length constraint
    assert check_decomposition([W("a"), W("b")], strong=True)
    assert check_decomposition([W("aab"), W("b")], strong=True)
    parts = [W("aab"), W("ab"), W("b")]
    assert check_decomposition(parts) and not check_decomposition(parts, strong=True)
    assert check_decomposition([W("aab"), W("ab"), W("bb")], strong=True)


@given(words(3, 1, 5), words(3, 1, 5))
def test_two_factor_criterion(u, v):
    expected = compare_deglex(u + v, v + u) == GREATER
    assert check_decomposition([u, v]) is expected


@given(st.lists(words(2, 1, 4), min_size=2, max_size=4), st.booleans())
def test_check_matches_oracle(parts, strong):
    assert check_decomposition(parts, strong) is oracles.is_decomposition([str(x) for x in parts], strong)


# -- decomposable subword search ----------------------------------------------


def test_find_decomposable_examples():
    assert find_decomposable_subword(W("ba"), 2) is None
    wit = find_decomposable_subword(W("aba"), 2)
    assert wit.position == Position(1, 2) and [str(f) for f in wit.factors] == ["a", "b"]
    wit = find_decomposable_subword(W("ab"), 2, strong=True)
    assert [str(f) for f in wit.factors] == ["a", "b"] and wit.strong


def test_search_limits():
    with pytest.raises(LimitError):
        find_decomposable_subword(W("ab" * 4), 7)
    # too short to split into q parts: nothing to search, no limit needed
    assert find_decomposable_subword(W("ab"), 9) is None
    with pytest.raises(SearchBudgetExceeded):
        find_decomposable_subword(W("b" * 30), 2, max_length=20)
    with pytest.raises(SearchBudgetExceeded):
        find_decomposable_subword(FIBONACCI.prefix(60), 5, strong=True, max_splits=50)


@pytest.mark.parametrize("q, strong", [(2, False), (2, True), (3, False), (3, True)])
def test_search_matches_oracle_exhaustively(q, strong):
    for n in range(1, 11):
        for letters in product("ab", repeat=n):
            text = "".join(letters)
            expected = oracles.decompositions(text, q, strong, first_only=True)
            got = find_decomposable_subword(W(text), q, strong)
            if not expected:
                assert got is None, text
            else:
                start, parts = expected[0]
                assert got.position.start == start, text
                assert [str(f) for f in got.factors] == parts, text


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3]).flatmap(lambda m: words(m, 0, 40)), st.integers(2, 4), st.booleans())
def test_search_soundness(w, q, strong):
    wit = find_decomposable_subword(w, q, strong)
    if wit is not None:
        assert verify_witness(w, wit)
        if strong:
            assert verify_witness(w, DecompWitness(wit.position, wit.factors, False))


# -- analysis -------------------------------------------------------------------


def test_analyze_examples():
    assert analyze(W("aa"), 2, 2).outcome_kind == "power"
    assert str(analyze(W("aa"), 2, 2).outcome.base) == "a"
    rep = analyze(W("ab"), 2, 2)
    assert rep.outcome_kind == "decomposition"
    assert [str(f) for f in rep.outcome.factors] == ["a", "b"]
    assert analyze(W("b"), 2, 2).outcome_kind == "none"


def test_analyze_budget_outcome():
    rep = analyze(W("b" * 30), 2, 2, max_length=10)
    assert rep.outcome is not None  # the square "bb" is found before any budget matters
    rep = analyze(W("ba" * 1), 3, 2, max_length=1)
    assert rep.outcome_kind == "budget_exceeded"
    assert rep.to_dict()["outcome"] == {"kind": "budget_exceeded"}


def test_analyze_exhaustive_lists_both():
    rep = analyze(W("aab"), 2, 2, exhaustive=True)
    assert [w.kind for w in rep.witnesses] == ["power", "decomposition"]
    assert rep.outcome.kind == "power"


@settings(max_examples=40, deadline=None)
@given(words(3, 0, 30))
def test_report_deterministic(w):
    a = json.dumps(analyze(w, 2, 3, "strong", exhaustive=True).to_dict())
    b = json.dumps(analyze(w, 2, 3, "strong", exhaustive=True).to_dict())
    assert a == b


# -- verification -----------------------------------------------------------


def test_verify_examples():
    w = W("abab")
    assert verify_witness(w, find_power(w, 2))
    bad = PowerWitness(Position(1, 3), W("ab"), 2)
    assert not verify_witness(W("aba"), bad)
    assert not verify_witness(W("ba"), DecompWitness(Position(1, 2), (W("b"), W("a")), False))
    assert not verify_witness(W("ab"), PowerWitness(Position(1, 5), W("a"), 2))


def test_witness_json_round_trip():
    w = W("aabab")
    for wit in analyze(w, 2, 2, exhaustive=True).witnesses:
        assert witness_from_dict(wit.to_dict(), 2) == wit
