"""Ordered alphabets and letter permutations.

An alphabet is a finite ordered list of distinct single-character letters.
A permutation is stored against a base order as its one-line row, so
``row[i]`` is the image of the i-th base letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import DomainError

LettersLike = Union[str, Iterable[str], "Alphabet"]


class Alphabet:
    """Immutable ordered collection of distinct single-character letters."""

    __slots__ = ("letters", "_index")

    def __init__(self, letters: LettersLike):
        if isinstance(letters, Alphabet):
            seq = letters.letters
        else:
            seq = tuple(letters)
        if not seq:
            raise DomainError("alphabet must be non-empty")
        for x in seq:
            if not isinstance(x, str) or len(x) != 1:
                raise DomainError("letters must be single characters, got %r" % (x,))
        if len(set(seq)) != len(seq):
            raise DomainError("duplicate letters in %r" % ("".join(seq),))
        object.__setattr__(self, "letters", seq)
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(seq)})

    def __setattr__(self, name, value):
        raise AttributeError("Alphabet is immutable")

    @classmethod
    def first(cls, k: int) -> "Alphabet":
        """The first k lowercase letters."""
        if not 1 <= k <= 26:
            raise DomainError("need 1 <= k <= 26, got %d" % k)
        return cls("abcdefghijklmnopqrstuvwxyz"[:k])

    def index(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise DomainError("letter %r not in alphabet %s" % (letter, self)) from None

    def ordered(self, subset: Iterable[str]) -> tuple[str, ...]:
        """The letters of subset in alphabet order."""
        want = set(subset)
        for x in want:
            if x not in self._index:
                raise DomainError("letter %r not in alphabet %s" % (x, self))
        return tuple(x for x in self.letters if x in want)

    def __contains__(self, letter) -> bool:
        return letter in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other):
        if isinstance(other, Alphabet):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        return "".join(self.letters)

    def __repr__(self):
        return "Alphabet(%r)" % str(self)


@dataclass(frozen=True)
class Perm:
    """Permutation of an alphabet, stored as base letters and one-line row."""

    letters: tuple[str, ...]
    images: tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        images = tuple(self.images)
        if sorted(letters) != sorted(images) or len(set(letters)) != len(letters):
            raise DomainError(
                "row %r is not a permutation of %r"
                % ("".join(images), "".join(letters))
            )
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "images", images)

    @classmethod
    def from_one_line(cls, letters: LettersLike, row: LettersLike) -> "Perm":
        return cls(tuple(Alphabet(letters)), tuple(row))

    @classmethod
    def identity(cls, letters: LettersLike) -> "Perm":
        base = tuple(Alphabet(letters))
        return cls(base, base)

    @classmethod
    def symmetric(cls, letters: LettersLike) -> "Perm":
        base = tuple(Alphabet(letters))
        return cls(base, base[::-1])

    @classmethod
    def from_cycles(cls, letters: LettersLike, cycles: Iterable[Iterable[str]]) -> "Perm":
        base = Alphabet(letters)
        mapping = {x: x for x in base}
        for cycle in cycles:
            cyc = list(cycle)
            for x in cyc:
                if x not in base:
                    raise DomainError("cycle letter %r not in %s" % (x, base))
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                mapping[a] = b
        return cls(tuple(base), tuple(mapping[x] for x in base))

    def __call__(self, letter: str) -> str:
        try:
            return self.images[self.letters.index(letter)]
        except ValueError:
            raise DomainError(
                "letter %r not in base %r" % (letter, "".join(self.letters))
            ) from None

    def inverse(self) -> "Perm":
        inv = {y: x for x, y in zip(self.letters, self.images)}
        return Perm(self.letters, tuple(inv[x] for x in self.letters))

    def one_line(self) -> str:
        return "".join(self.images)

    def cycles(self) -> tuple[tuple[str, ...], ...]:
        """Cycle decomposition; each cycle starts at its least letter,
        cycles sorted by first letter, fixed points included."""
        seen: set[str] = set()
        out = []
        for start in sorted(self.letters):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            y = self(start)
            while y != start:
                cyc.append(y)
                seen.add(y)
                y = self(y)
            out.append(tuple(cyc))
        return tuple(out)

    def is_identity(self) -> bool:
        return self.letters == self.images

    def is_symmetric(self) -> bool:
        return self.images == self.letters[::-1]

    def restrict(self, subset: Iterable[str]) -> "Perm":
        """Sub-permutation on positions of subset letters, orders preserved.

        Valid when the row entries at those positions are again the subset."""
        keep = set(subset)
        sub_letters = tuple(x for x in self.letters if x in keep)
        sub_images = tuple(y for y in self.images if y in keep)
        if len(sub_letters) != len(keep):
            raise DomainError("subset %r not within base" % ("".join(sorted(keep)),))
        return Perm(sub_letters, sub_images)

    def to_json(self) -> str:
        return self.one_line()

    @classmethod
    def from_json(cls, letters: LettersLike, obj) -> "Perm":
        if isinstance(obj, str):
            return cls.from_one_line(letters, obj)
        if isinstance(obj, dict):
            if "one_line" in obj:
                return cls.from_one_line(letters, obj["one_line"])
            if "cycles" in obj:
                return cls.from_cycles(letters, obj["cycles"])
        raise DomainError("cannot read permutation from %r" % (obj,))
