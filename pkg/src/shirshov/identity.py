"""Exact-arithmetic checks of standard polynomial identities.

Everything here uses :class:`fractions.Fraction`; identities are zero/nonzero
decisions and floating point would make them meaningless.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Optional

from .errors import LimitError, ParameterError

MAX_DEGREE = 8
ENTRY_RANGE = (-3, 3)
DEFAULT_SEED = 42
INT64_MAX = 2**63 - 1


class ExactMatrix:
    """Square matrix with :class:`Fraction` entries."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(rows)
        if n < 1 or any(len(row) != n for row in rows):
            raise ParameterError("ExactMatrix needs a non-empty square array")
        self.n = n
        self.rows = rows

    @classmethod
    def zero(cls, n):
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n, i, j):
        """Matrix unit e_ij (1-based)."""
        return cls([[int((r, c) == (i - 1, j - 1)) for c in range(n)] for r in range(n)])

    def _check(self, other):
        if not isinstance(other, ExactMatrix) or other.n != self.n:
            raise ParameterError("matrix dimensions differ")

    def __add__(self, other):
        self._check(other)
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return ExactMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            self._check(other)
            cols = list(zip(*other.rows))
            return ExactMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])
        return ExactMatrix([[a * other for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self):
        return all(a == 0 for r in self.rows for a in r)

    def __repr__(self):
        return f"ExactMatrix({[[str(a) for a in r] for r in self.rows]})"

    def to_list(self):
        return [[str(a) for a in r] for r in self.rows]


def permutation_sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def standard_polynomial(C: int, args) -> ExactMatrix:
    """s_C(y1, ..., yC): signed sum of the products over all orderings."""
    args = list(args)
    if C < 1:
        raise ParameterError(f"degree must be >= 1, got {C}")
    if C > MAX_DEGREE:
        raise LimitError(f"standard polynomial degree is capped at {MAX_DEGREE}, got {C}")
    if len(args) != C:
        raise ParameterError(f"s_{C} takes {C} arguments, got {len(args)}")
    n = args[0].n
    if any(a.n != n for a in args):
        raise ParameterError("standard polynomial arguments must share one dimension")
    total = ExactMatrix.zero(n)
    for perm in permutations(range(C)):
        term = args[perm[0]]
        for i in perm[1:]:
            term = term * args[i]
        total = total + term if permutation_sign(perm) > 0 else total - term
    return total


def random_matrix(n: int, rng: random.Random) -> ExactMatrix:
    lo, hi = ENTRY_RANGE
    return ExactMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


@dataclass
class IdentityReport:
    degree: int
    dimension: int
    trials: int
    seed: int
    all_vanished: bool
    counterexample: Optional[tuple] = None
    lower_degree: Optional[int] = None
    lower_witness: Optional[tuple] = None  # matrix-unit labels (i, j)
    lower_value: Optional[ExactMatrix] = None

    def to_dict(self):
        return {
            "degree": self.degree,
            "dimension": self.dimension,
            "trials": self.trials,
            "seed": self.seed,
            "all_vanished": self.all_vanished,
            "counterexample": None
            if self.counterexample is None
            else [m.to_list() for m in self.counterexample],
            "lower_degree": self.lower_degree,
            "lower_witness": None
            if self.lower_witness is None
            else [f"e{i}{j}" for i, j in self.lower_witness],
            "lower_value": None if self.lower_value is None else self.lower_value.to_list(),
        }


def amitsur_levitzski_check(n: int, trials: int = 100, rng_seed: int = DEFAULT_SEED) -> IdentityReport:
    """Evaluate s_2n on random n x n tuples and look for an s_(2n-1) witness
    among tuples of matrix units."""
    if not 1 <= n <= 2:
        raise LimitError(f"dimension is capped at 2 (s_2n needs (2n)! terms), got {n}")
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    rng = random.Random(rng_seed)
    C = 2 * n
    counterexample = None
    for _ in range(trials):
        args = tuple(random_matrix(n, rng) for _ in range(C))
        if not standard_polynomial(C, args).is_zero():
            counterexample = args
            break
    labels = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    witness = value = None
    for combo in product(labels, repeat=C - 1):
        result = standard_polynomial(C - 1, [ExactMatrix.unit(n, i, j) for i, j in combo])
        if not result.is_zero():
            witness, value = combo, result
            break
    return IdentityReport(
        degree=C,
        dimension=n,
        trials=trials,
        seed=rng_seed,
        all_vanished=counterexample is None,
        counterexample=counterexample,
        lower_degree=C - 1,
        lower_witness=witness,
        lower_value=value,
    )


def spanning_constant(m: int, N: int):
    """Number of words of length <= N over m letters, and twice that."""
    if m < 1 or N < 0:
        raise ParameterError(f"need m >= 1 and N >= 0, got m={m}, N={N}")
    bound = N + 1 if m == 1 else (m ** (N + 1) - 1) // (m - 1)
    C = 2 * bound
    if C > INT64_MAX:
        raise OverflowError(f"C = 2(1 + m + ... + m^N) exceeds 2^63 - 1 for m={m}, N={N}")
    return bound, C


# -- quaternions --------------------------------------------------------------


@dataclass(frozen=True)
class Quaternion:
    """a + b i + c j + d k over the rationals."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def _coerce(self, other):
        return other if isinstance(other, Quaternion) else Quaternion(other)

    def __add__(self, other):
        o = self._coerce(other)
        return Quaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Quaternion(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        return self._coerce(other) * self

    def conjugate(self):
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> Fraction:
        return self.a**2 + self.b**2 + self.c**2 + self.d**2

    def inverse(self):
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        c = self.conjugate()
        return Quaternion(c.a / nrm, c.b / nrm, c.c / nrm, c.d / nrm)

    def is_zero(self):
        return self.a == self.b == self.c == self.d == 0

    def coords(self):
        return (self.a, self.b, self.c, self.d)


ONE, I, J, K = Quaternion(1), Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)


def quaternion_min_poly(x: Quaternion) -> tuple:
    """Monic minimal polynomial over the rationals, highest degree first."""
    if x.b == x.c == x.d == 0:
        return (Fraction(1), -x.a)
    return (Fraction(1), -2 * x.a, x.norm())


def evaluate(coeffs, x: Quaternion) -> Quaternion:
    """Horner evaluation with rational coefficients, highest degree first."""
    acc = Quaternion(0)
    for c in coeffs:
        acc = acc * x + Quaternion(c)
    return acc


def rank(rows) -> int:
    """Exact rank of a rational matrix given as a list of rows."""
    m = [[Fraction(x) for x in row] for row in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r
