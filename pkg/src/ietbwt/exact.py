"""Exact arithmetic in Q and in real quadratic fields Q(sqrt(d)).

A value is stored as p + q*sqrt(d) with p, q rational and d a square-free
non-negative integer.  Rational values carry d = 0.  No floating point is
used anywhere; comparisons are decided by exact sign computations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Union

from .errors import DomainError

_TRIAL_LIMIT = 10 ** 6

Rationalish = Union[int, Fraction]


def _squarefree_part(d: int) -> tuple[int, int]:
    """Write d = s*s*f with f square-free.  Trial division only."""
    s, f, m = 1, 1, d
    p = 2
    while p <= _TRIAL_LIMIT and p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                f *= p
        p += 1 if p == 2 else 2
    if m > 1:
        if m > _TRIAL_LIMIT:
            raise DomainError(
                "cannot normalize radicand %d: cofactor %d has prime factors above %d"
                % (d, m, _TRIAL_LIMIT)
            )
        f *= m  # remaining cofactor below the bound is prime
    return s, f


@dataclass(frozen=True)
class FieldValue:
    """p + q*sqrt(d), canonicalized so that q == 0 implies d == 0."""

    p: Fraction
    q: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self):
        p, q, d = Fraction(self.p), Fraction(self.q), self.d
        if not isinstance(d, int) or d < 0:
            raise DomainError("radicand must be a non-negative integer, got %r" % (d,))
        if q == 0 or d == 0:
            q, d = Fraction(0), 0
        else:
            s, f = _squarefree_part(d)
            if f == 1:
                p, q, d = p + q * s, Fraction(0), 0
            else:
                q, d = q * s, f
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    # -- predicates ------------------------------------------------------

    def is_rational(self) -> bool:
        return self.q == 0

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        sp = (self.p > 0) - (self.p < 0)
        if self.q == 0:
            return sp
        sq = 1 if self.q > 0 else -1
        if self.p == 0:
            return sq
        if sp == sq:
            return sp
        pp = self.p * self.p
        qq = self.q * self.q * self.d
        if pp == qq:
            return 0  # unreachable for square-free d >= 2, kept for safety
        return sp if pp > qq else sq

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "FieldValue":
        if isinstance(other, FieldValue):
            return other
        if isinstance(other, (int, Fraction)):
            return FieldValue(Fraction(other))
        return NotImplemented

    def _join_radicand(self, other: "FieldValue") -> int:
        if self.d and other.d and self.d != other.d:
            raise DomainError(
                "incompatible radicands %d and %d" % (self.d, other.d)
            )
        return self.d or other.d

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join_radicand(other)
        return FieldValue(self.p + other.p, self.q + other.q, d)

    __radd__ = __add__

    def __neg__(self):
        return FieldValue(-self.p, -self.q, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join_radicand(other)
        return FieldValue(
            self.p * other.p + self.q * other.q * d,
            self.p * other.q + self.q * other.p,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DomainError("division by zero")
        d = self._join_radicand(other)
        denom = other.p * other.p - other.q * other.q * d
        num = self * FieldValue(other.p, -other.q, d)
        return FieldValue(num.p / denom, num.q / denom, d)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    # -- comparisons -----------------------------------------------------

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    # -- rendering -------------------------------------------------------

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        root = "%s*sqrt(%d)" % (abs(self.q), self.d)
        if self.p == 0:
            return root if self.q > 0 else "-" + root
        op = "+" if self.q > 0 else "-"
        return "%s %s %s" % (self.p, op, root)

    def __repr__(self):
        return "FieldValue(%r)" % str(self)

    def decimal(self, digits: int = 20) -> str:
        """Decimal approximation truncated toward zero, exact-integer based."""
        if digits < 1:
            raise DomainError("digits must be positive")
        neg = self.sign() < 0
        v = -self if neg else self
        scale = 10 ** digits
        n = _floor_scaled(v, scale)
        whole, frac = divmod(n, scale)
        out = "%d.%0*d" % (whole, digits, frac)
        return "-" + out if neg else out


def _floor_scaled(v: FieldValue, scale: int) -> int:
    """floor(v * scale) for v >= 0, computed with integer arithmetic."""
    a_frac = v.p * scale
    b_frac = v.q * scale
    denom = a_frac.denominator * b_frac.denominator // gcd(
        a_frac.denominator, b_frac.denominator
    )
    a = a_frac.numerator * (denom // a_frac.denominator)
    b = b_frac.numerator * (denom // b_frac.denominator)
    if b == 0:
        s = 0
    elif b > 0:
        s = isqrt(b * b * v.d)
    else:
        t = b * b * v.d
        r = isqrt(t)
        s = -r if r * r == t else -r - 1
    return (a + s) // denom


ZERO = FieldValue(Fraction(0))
ONE = FieldValue(Fraction(1))


def make_rational(num: int, den: int = 1) -> FieldValue:
    """num/den as an exact value."""
    if den == 0:
        raise DomainError("zero denominator")
    return FieldValue(Fraction(num, den))


def make_quadratic(p: Rationalish, q: Rationalish, d: int) -> FieldValue:
    """p + q*sqrt(d); d is reduced to its square-free part."""
    return FieldValue(Fraction(p), Fraction(q), d)


def compare(x: FieldValue, y: FieldValue) -> int:
    """-1, 0 or 1 according to the exact sign of x - y."""
    return (x - y).sign()


_TERM = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)\*?)?(?:sqrt\((\d+)\))?$")


def parse_value(text: str) -> FieldValue:
    """Parse 'p/q' or 'p/q + r/s*sqrt(D)'.  Decimals are rejected."""
    s = text.replace(" ", "")
    if not s:
        raise DomainError("empty value")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise DomainError("cannot parse value %r" % text)
    total = FieldValue(Fraction(0))
    for term in terms:
        m = _TERM.match(term)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise DomainError("cannot parse term %r in %r" % (term, text))
        coef = Fraction(m.group(2)) if m.group(2) is not None else Fraction(1)
        if m.group(1) == "-":
            coef = -coef
        if m.group(3) is None:
            part = FieldValue(coef)
        else:
            part = make_quadratic(0, coef, int(m.group(3)))
        total = total + part
    return total


def value_from_json(obj) -> FieldValue:
    """Accept either the string grammar or {"p": .., "q": .., "d": ..}."""
    if isinstance(obj, str):
        return parse_value(obj)
    if isinstance(obj, dict):
        for key in ("p", "q", "d"):
            if isinstance(obj.get(key), float):
                raise DomainError("refusing float %r for %r" % (obj[key], key))
        try:
            p = Fraction(obj["p"])
            q = Fraction(obj.get("q", 0))
            d = int(obj.get("d", 0))
        except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
            raise DomainError("malformed value object %r" % (obj,)) from exc
        return FieldValue(p, q, d)
    raise DomainError("cannot read value from %r" % (obj,))


def value_to_json(v: FieldValue) -> str:
    return str(v)
