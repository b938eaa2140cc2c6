"""Interval exchange transformations with exact endpoints.

An IET is given by an ordered alphabet, one positive exact length per
letter, a permutation whose one-line row lists the image order left to
right, and an origin.  All intervals are half-open [x, y).  The map is
total on its domain: each point moves by the translation of its letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .alphabet import Alphabet, LettersLike, Perm
from .errors import DomainError
from .exact import FieldValue, ZERO, value_from_json
from .words import lyndon_representative

Interval = tuple[FieldValue, FieldValue]


@dataclass(frozen=True)
class Connection:
    """An inverse-discontinuity start whose forward orbit hits a
    discontinuity end after the given number of steps."""

    start: FieldValue
    end: FieldValue
    steps: int


class Iet:
    def __init__(
        self,
        alphabet: LettersLike,
        lengths: dict[str, FieldValue],
        perm: Union[Perm, str],
        origin: Optional[FieldValue] = None,
    ):
        self.alphabet = Alphabet(alphabet)
        if isinstance(perm, str):
            perm = Perm.from_one_line(self.alphabet, perm)
        if perm.letters != self.alphabet.letters:
            raise DomainError(
                "permutation base %r does not match alphabet %s"
                % ("".join(perm.letters), self.alphabet)
            )
        self.perm = perm
        self.origin = origin if origin is not None else ZERO
        if set(lengths) != set(self.alphabet):
            raise DomainError("lengths must cover exactly the alphabet")
        self.lengths = {x: lengths[x] for x in self.alphabet}
        radicands = {v.d for v in self.lengths.values()} | {self.origin.d}
        radicands.discard(0)
        if len(radicands) > 1:
            raise DomainError("mixed radicands %s in one transformation" % radicands)
        for x, v in self.lengths.items():
            if v.sign() <= 0:
                raise DomainError("length of %r must be positive, got %s" % (x, v))
        self._left: dict[str, FieldValue] = {}
        acc = self.origin
        for x in self.alphabet:
            self._left[x] = acc
            acc = acc + self.lengths[x]
        self.total = acc - self.origin
        self._image_left: dict[str, FieldValue] = {}
        acc = self.origin
        for y in self.perm.images:
            self._image_left[y] = acc
            acc = acc + self.lengths[y]
        self._tau = {x: self._image_left[x] - self._left[x] for x in self.alphabet}

    # -- geometry --------------------------------------------------------

    def domain(self) -> Interval:
        return (self.origin, self.origin + self.total)

    def interval(self, letter: str) -> Interval:
        lo = self._left[letter]
        return (lo, lo + self.lengths[letter])

    def image_interval(self, letter: str) -> Interval:
        lo = self._image_left[letter]
        return (lo, lo + self.lengths[letter])

    def left(self, letter: str) -> FieldValue:
        return self._left[letter]

    def translation(self, letter: str) -> FieldValue:
        return self._tau[letter]

    def contains(self, x: FieldValue) -> bool:
        lo, hi = self.domain()
        return lo <= x < hi

    def letter_at(self, x: FieldValue) -> str:
        if not self.contains(x):
            raise DomainError("point %s outside domain [%s, %s)" % (x, *self.domain()))
        for a in reversed(self.alphabet.letters):
            if self._left[a] <= x:
                return a
        raise AssertionError("unreachable")

    # -- the map ---------------------------------------------------------

    def apply(self, x: FieldValue) -> FieldValue:
        return x + self._tau[self.letter_at(x)]

    def apply_inverse(self, y: FieldValue) -> FieldValue:
        if not self.contains(y):
            raise DomainError("point %s outside domain [%s, %s)" % (y, *self.domain()))
        for a in self.alphabet:
            lo = self._image_left[a]
            if lo <= y < lo + self.lengths[a]:
                return y - self._tau[a]
        raise AssertionError("unreachable")

    def apply_n(self, x: FieldValue, n: int) -> FieldValue:
        step = self.apply if n >= 0 else self.apply_inverse
        for _ in range(abs(n)):
            x = step(x)
        return x

    # -- discontinuity structure -----------------------------------------

    def discontinuities(self) -> tuple[FieldValue, ...]:
        """Interior left endpoints of the domain intervals, ascending."""
        return tuple(self._left[a] for a in self.alphabet.letters[1:])

    def discontinuities_inverse(self) -> tuple[FieldValue, ...]:
        """Interior left endpoints of the image slots, ascending."""
        return tuple(self._image_left[y] for y in self.perm.images[1:])

    def zero_connections(self) -> tuple[FieldValue, ...]:
        inv = self.discontinuities_inverse()
        return tuple(x for x in self.discontinuities() if any(x == y for y in inv))

    def regions(self) -> tuple[Interval, ...]:
        lo, hi = self.domain()
        cuts = [lo, *self.zero_connections(), hi]
        return tuple((cuts[i], cuts[i + 1]) for i in range(len(cuts) - 1))

    def invariant_blocks(self) -> tuple[tuple[str, ...], ...]:
        """Proper contiguous letter runs mapped onto their own interval.

        A run is invariant when the row entries at its positions are the
        same letters and the run's interval starts where its image does."""
        base = self.alphabet.letters
        row = self.perm.images
        k = len(base)
        dom_prefix = [ZERO]
        img_prefix = [ZERO]
        for i in range(k):
            dom_prefix.append(dom_prefix[-1] + self.lengths[base[i]])
            img_prefix.append(img_prefix[-1] + self.lengths[row[i]])
        out = []
        for i in range(k):
            for j in range(i, k):
                if i == 0 and j == k - 1:
                    continue
                if set(base[i : j + 1]) != set(row[i : j + 1]):
                    continue
                if dom_prefix[i] != img_prefix[i]:
                    continue
                out.append(base[i : j + 1])
        return tuple(out)

    def is_invariant_block(self, block: Iterable[str]) -> bool:
        want = tuple(self.alphabet.ordered(block))
        return want in self.invariant_blocks()

    def block_interval(self, block: Iterable[str]) -> Interval:
        letters = self.alphabet.ordered(block)
        if not letters:
            raise DomainError("empty block")
        i = self.alphabet.index(letters[0])
        if tuple(self.alphabet.letters[i : i + len(letters)]) != letters:
            raise DomainError("block %r is not contiguous" % ("".join(letters),))
        return (self._left[letters[0]], *self.interval(letters[-1])[1:])

    # -- connections -----------------------------------------------------

    def find_connections(self, max_steps: int) -> tuple[Connection, ...]:
        """All (start, end, n) with start an inverse discontinuity whose
        n-th image, n <= max_steps, is a forward discontinuity."""
        targets = self.discontinuities()
        out = []
        for start in self.discontinuities_inverse():
            pt = start
            for n in range(max_steps + 1):
                if any(pt == t for t in targets):
                    out.append(Connection(start, pt, n))
                pt = self.apply(pt)
        return tuple(out)

    def keane_probe(self, max_steps: int) -> Optional[Connection]:
        """First connection in (steps, start) scan order, or None if the
        transformation looks regular to that depth."""
        targets = self.discontinuities()
        pts = list(self.discontinuities_inverse())
        starts = list(pts)
        for n in range(max_steps + 1):
            for start, pt in zip(starts, pts):
                if any(pt == t for t in targets):
                    return Connection(start, pt, n)
            pts = [self.apply(pt) for pt in pts]
        return None

    # -- reshaping -------------------------------------------------------

    def translate(self, delta: FieldValue) -> "Iet":
        return Iet(self.alphabet, self.lengths, self.perm, self.origin + delta)

    def with_origin(self, origin: FieldValue) -> "Iet":
        return Iet(self.alphabet, self.lengths, self.perm, origin)

    # -- plumbing --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Iet):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.perm == other.perm
            and self.origin == other.origin
            and all(self.lengths[x] == other.lengths[x] for x in self.alphabet)
        )

    def __repr__(self):
        return "Iet(%s, %s, origin=%s)" % (
            self.alphabet,
            self.perm.one_line(),
            self.origin,
        )

    def to_json(self) -> dict:
        return {
            "alphabet": str(self.alphabet),
            "lengths": {x: str(self.lengths[x]) for x in self.alphabet},
            "permutation": self.perm.one_line(),
            "origin": str(self.origin),
        }


def iet_from_json(obj: dict) -> Iet:
    if not isinstance(obj, dict):
        raise DomainError("expected an object, got %r" % (obj,))
    try:
        alphabet = obj["alphabet"]
        lengths_raw = obj["lengths"]
        perm_raw = obj["permutation"]
    except KeyError as exc:
        raise DomainError("missing field %s" % exc) from exc
    lengths = {x: value_from_json(v) for x, v in lengths_raw.items()}
    origin = value_from_json(obj.get("origin", "0"))
    perm = Perm.from_json(alphabet, perm_raw)
    return Iet(alphabet, lengths, perm, origin)


# -- discrete interval exchanges ----------------------------------------


@dataclass(frozen=True)
class DietSpec:
    """Discrete interval exchange: integer letter multiplicities plus an
    image-order permutation over the first k lowercase letters."""

    composition: tuple[int, ...]
    perm: Perm

    def __post_init__(self):
        comp = tuple(int(c) for c in self.composition)
        if not comp or any(c <= 0 for c in comp):
            raise DomainError("composition must be positive integers")
        if self.perm.letters != Alphabet.first(len(comp)).letters:
            raise DomainError("permutation must cover the first %d letters" % len(comp))
        object.__setattr__(self, "composition", comp)

    @property
    def letters(self) -> tuple[str, ...]:
        return self.perm.letters

    @property
    def size(self) -> int:
        return sum(self.composition)

    def word(self) -> str:
        """The underlying word a^c1 b^c2 ..."""
        return "".join(x * c for x, c in zip(self.letters, self.composition))


def diet_spec(composition: Iterable[int], row: LettersLike) -> DietSpec:
    comp = tuple(composition)
    return DietSpec(comp, Perm.from_one_line(Alphabet.first(len(comp)), row))


def diet_action(spec: DietSpec) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """The permutation of positions 1..n: a mapping tuple (mapping[i-1] is
    the image of i) and its cycles, each from its least element."""
    dom_start = {}
    acc = 1
    for x, c in zip(spec.letters, spec.composition):
        dom_start[x] = acc
        acc += c
    img_start = {}
    acc = 1
    for y in spec.perm.images:
        img_start[y] = acc
        acc += spec.composition[spec.letters.index(y)]
    word = spec.word()
    mapping = tuple(
        img_start[word[i]] + (i + 1 - dom_start[word[i]]) for i in range(spec.size)
    )
    seen: set[int] = set()
    cycles = []
    for start in range(1, spec.size + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = mapping[start - 1]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = mapping[j - 1]
        cycles.append(tuple(cyc))
    return mapping, tuple(cycles)


def diet_to_iet(spec: DietSpec, origin: Optional[FieldValue] = None) -> Iet:
    """The same exchange on [0, n) with unit-length cells merged per letter."""
    lengths = {
        x: FieldValue(c) for x, c in zip(spec.letters, spec.composition)
    }
    return Iet(Alphabet.first(len(spec.composition)), lengths, spec.perm, origin)


def diet_lyndon_multiset(spec: DietSpec) -> tuple[str, ...]:
    """Sorted Lyndon representatives of the words read along each cycle."""
    word = spec.word()
    _, cycles = diet_action(spec)
    reps = [lyndon_representative("".join(word[i - 1] for i in cyc)) for cyc in cycles]
    return tuple(sorted(reps))
