import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shirshov.errors import LimitError, ParameterError
from shirshov.identity import (
    INT64_MAX,
    ONE,
    I,
    J,
    K,
    ExactMatrix,
    Quaternion,
    amitsur_levitzski_check,
    evaluate,
    permutation_sign,
    quaternion_min_poly,
    random_matrix,
    rank,
    spanning_constant,
    standard_polynomial,
)

import oracles

small = st.integers(-3, 3)


def matrices(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n).map(ExactMatrix)


def as_lists(m):
    return [list(r) for r in m.rows]


def e(i, j, n=2):
    return ExactMatrix.unit(n, i, j)


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((1, 2, 0)) == 1


def test_low_degrees():
    a, b = e(1, 2), e(2, 1)
    assert standard_polynomial(1, [a]) == a
    assert standard_polynomial(2, [a, b]) == a * b - b * a


def test_s3_matrix_units():
    value = standard_polynomial(3, [e(1, 1), e(1, 2), e(2, 2)])
    assert value == e(1, 2)
    assert as_lists(value) == oracles.standard_poly_laplace([as_lists(e(1, 1)), as_lists(e(1, 2)), as_lists(e(2, 2))])


@settings(deadline=None, max_examples=40)
@given(st.lists(matrices(2), min_size=3, max_size=4))
def test_matches_laplace_expansion(args):
    assert as_lists(standard_polynomial(len(args), args)) == oracles.standard_poly_laplace([as_lists(m) for m in args])


@settings(deadline=None, max_examples=30)
@given(st.lists(matrices(2), min_size=3, max_size=3), st.permutations(range(3)))
def test_alternating(args, perm):
    base = standard_polynomial(3, args)
    moved = standard_polynomial(3, [args[i] for i in perm])
    assert moved == base * permutation_sign(perm)
    repeated = standard_polynomial(3, [args[0], args[1], args[0]])
    assert repeated.is_zero()


@settings(deadline=None, max_examples=30)
@given(matrices(2), matrices(2), matrices(2), matrices(2), st.fractions(max_denominator=5))
def test_multilinear_in_first_slot(x, y, z, w, c):
    lhs = standard_polynomial(3, [x + y * c, z, w])
    rhs = standard_polynomial(3, [x, z, w]) + standard_polynomial(3, [y, z, w]) * c
    assert lhs == rhs


def test_degree_cap():
    with pytest.raises(LimitError):
        standard_polynomial(9, [e(1, 1)] * 9)
    with pytest.raises(ParameterError):
        standard_polynomial(3, [e(1, 1)] * 2)


def test_al_checks():
    r1 = amitsur_levitzski_check(1, 20)
    assert r1.all_vanished and r1.degree == 2
    assert r1.lower_witness is not None
    r2 = amitsur_levitzski_check(2, 100, 42)
    assert r2.all_vanished and r2.degree == 4
    assert r2.to_dict()["lower_witness"] == ["e11", "e12", "e21"]
    assert not r2.lower_value.is_zero()
    assert amitsur_levitzski_check(2, 30, 7).to_dict() == amitsur_levitzski_check(2, 30, 7).to_dict()
    with pytest.raises(LimitError):
        amitsur_levitzski_check(3, 1)


def test_s4_on_random_tuples_independently():
    rng = random.Random(5)
    for _ in range(20):
        args = [as_lists(random_matrix(2, rng)) for _ in range(4)]
        assert all(x == 0 for row in oracles.standard_poly_laplace(args) for x in row)


def test_spanning_constant():
    assert spanning_constant(2, 3) == (15, 30)
    assert spanning_constant(1, 4) == (5, 10)
    assert spanning_constant(3, 0) == (1, 2)
    for m in range(1, 6):
        for N in range(0, 8):
            assert spanning_constant(m, N)[0] == sum(m**k for k in range(N + 1))
    with pytest.raises(OverflowError):
        spanning_constant(2, 62)
    assert spanning_constant(2, 61)[1] <= INT64_MAX


def test_quaternion_table():
    assert I * I == J * J == K * K == -ONE
    assert I * J == K and J * K == I and K * I == J
    assert J * I == -K


@settings(deadline=None)
@given(st.lists(st.fractions(max_denominator=4), min_size=8, max_size=8))
def test_quaternion_product_against_table(xs):
    x, y = Quaternion(*xs[:4]), Quaternion(*xs[4:])
    assert list((x * y).coords()) == oracles.quat_mul(xs[:4], xs[4:])


def test_min_poly_examples():
    assert quaternion_min_poly(Quaternion(3)) == (1, -3)
    assert quaternion_min_poly(I) == (1, 0, 1)
    x = Quaternion(1, 1, 1, 1)
    assert quaternion_min_poly(x) == (1, -2, 4)
    assert (x * x - 2 * x + 4).is_zero()


@settings(deadline=None)
@given(st.lists(st.fractions(max_denominator=6), min_size=4, max_size=4))
def test_min_poly_annihilates(xs):
    x = Quaternion(*xs)
    coeffs = quaternion_min_poly(x)
    assert evaluate(coeffs, x).is_zero()
    assert coeffs[0] == 1 and len(coeffs) <= 3
    if len(coeffs) == 3:
        # no rational root: a real quaternion would have b=c=d=0
        assert coeffs[1] ** 2 - 4 * coeffs[2] < 0


def test_rank():
    assert rank([ONE.coords(), I.coords(), J.coords(), K.coords()]) == 4
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[Fraction(1, 2), 1, 0], [1, 2, 0], [0, 0, 3]]) == 2
