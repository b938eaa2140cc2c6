import random
from fractions import Fraction

import pytest

from ietbwt.exact import FieldValue, make_quadratic, make_rational
from ietbwt.iet import Iet, diet_spec


def fv(p, q=0, d=0) -> FieldValue:
    return make_quadratic(Fraction(p), Fraction(q), d)


def make_e5() -> Iet:
    """Five letters, two irrational lengths, image order ecbda."""
    lengths = {
        "a": make_rational(1, 6),
        "b": make_quadratic(Fraction(-1, 4), Fraction(1, 4), 5),
        "c": make_quadratic(Fraction(3, 4), Fraction(-1, 4), 5),
        "d": make_rational(1, 6),
        "e": make_rational(1, 6),
    }
    return Iet("abcde", lengths, "ecbda")


def make_golden() -> Iet:
    lengths = {
        "a": make_quadratic(Fraction(-1, 2), Fraction(1, 2), 5),
        "b": make_quadratic(Fraction(3, 2), Fraction(-1, 2), 5),
    }
    return Iet("ab", lengths, "ba")


def make_rational2() -> Iet:
    return Iet("ab", {"a": make_rational(1, 3), "b": make_rational(2, 3)}, "ba")


def make_sym3() -> Iet:
    lengths = {
        "a": make_rational(1, 6),
        "b": make_rational(1, 2),
        "c": make_rational(1, 3),
    }
    return Iet("abc", lengths, "cba")


def make_sym4() -> Iet:
    lengths = {x: make_rational(n, 10) for x, n in zip("abcd", (1, 2, 3, 4))}
    return Iet("abcd", lengths, "dcba")


def make_diet421():
    return diet_spec((4, 2, 1), "cba")


@pytest.fixture
def e5() -> Iet:
    return make_e5()


@pytest.fixture
def golden() -> Iet:
    return make_golden()


@pytest.fixture
def rational2() -> Iet:
    return make_rational2()


@pytest.fixture
def sym3() -> Iet:
    return make_sym3()


@pytest.fixture
def sym4() -> Iet:
    return make_sym4()


@pytest.fixture
def diet421():
    return make_diet421()


def random_rational_iet(rng: random.Random, k: int, steppable: bool = False) -> Iet:
    """Random IET with small integer lengths over a common denominator.

    With steppable, neither extreme image slot holds its own domain letter,
    so both induction sides are unblocked."""
    from ietbwt.alphabet import Alphabet

    letters = Alphabet.first(k).letters
    while True:
        nums = [rng.randint(1, 9) for _ in range(k)]
        den = sum(nums)
        row = list(letters)
        rng.shuffle(row)
        if steppable and (row[-1] == letters[-1] or row[0] == letters[0]):
            continue
        lengths = {x: make_rational(n, den) for x, n in zip(letters, nums)}
        return Iet(letters, lengths, "".join(row))
