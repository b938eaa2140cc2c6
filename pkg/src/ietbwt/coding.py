"""Symbolic codings: trajectories, cylinder intervals, finite language
samples, return words, and the letter-to-word morphisms that induction
steps produce.

A language sample holds every factor up to a stated bound, so membership
questions are only meaningful up to that bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .alphabet import Alphabet, LettersLike
from .errors import DomainError
from .exact import FieldValue
from .iet import DietSpec, Iet, Interval, diet_action


def trajectory(t: Iet, x: FieldValue, n: int) -> str:
    """The first n letters of the coding of x."""
    if n < 0:
        raise DomainError("trajectory length must be non-negative")
    out = []
    for _ in range(n):
        out.append(t.letter_at(x))
        x = t.apply(x)
    return "".join(out)


@dataclass(frozen=True)
class CylinderTable:
    """Non-empty cylinder intervals, level by level; level m holds every
    admissible length-m coding word with its interval."""

    transformation: Iet
    depth: int
    levels: tuple[dict, ...]

    def interval(self, word: str) -> Interval:
        if len(word) > self.depth:
            raise DomainError("table depth %d < |%s|" % (self.depth, word))
        try:
            return self.levels[len(word)][word]
        except KeyError:
            raise DomainError("empty cylinder for %r" % word) from None

    def words(self) -> frozenset:
        return frozenset(w for level in self.levels for w in level)

    def level(self, m: int) -> dict:
        return dict(self.levels[m])


def cylinders(t: Iet, depth: int) -> CylinderTable:
    if depth < 0:
        raise DomainError("depth must be non-negative")
    levels: list[dict] = [{"": t.domain()}]
    for _ in range(depth):
        nxt: dict = {}
        for w, (lo, hi) in levels[-1].items():
            for x in t.alphabet:
                xlo, xhi = t.interval(x)
                tau = t.translation(x)
                nlo = max(xlo, lo - tau)
                nhi = min(xhi, hi - tau)
                if nlo < nhi:
                    nxt[x + w] = (nlo, nhi)
        levels.append(nxt)
    return CylinderTable(t, depth, tuple(levels))


@dataclass(frozen=True)
class LanguageSample:
    alphabet: tuple[str, ...]
    bound: int
    words: frozenset
    source: str = ""

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def words_of_length(self, n: int) -> tuple[str, ...]:
        return tuple(sorted(w for w in self.words if len(w) == n))

    def longest(self) -> tuple[str, ...]:
        return self.words_of_length(self.bound)


def language(t: Iet, bound: int) -> LanguageSample:
    """All coding words of length up to the bound."""
    table = cylinders(t, bound)
    return LanguageSample(t.alphabet.letters, bound, table.words(), "iet")


def language_of_periodic(word: str, bound: int) -> LanguageSample:
    """Factors of the periodic sequence word^w, up to the bound."""
    if not word:
        raise DomainError("empty word")
    reps = word * (bound // len(word) + 2)
    words = {""}
    for n in range(1, bound + 1):
        for i in range(len(word)):
            words.add(reps[i : i + n])
    return LanguageSample(tuple(sorted(set(word))), bound, frozenset(words), "periodic")


def diet_language(spec: DietSpec, bound: int) -> LanguageSample:
    """Factors of the periodic orbits of a discrete exchange: the union of
    the periodic languages of its cycle words."""
    word = spec.word()
    _, cycles = diet_action(spec)
    words: set = set()
    for cyc in cycles:
        cycle_word = "".join(word[i - 1] for i in cyc)
        words |= language_of_periodic(cycle_word, bound).words
    return LanguageSample(spec.letters, bound, frozenset(words), "diet")


def occurrences(text: str, pattern: str) -> tuple[int, ...]:
    """Starting indices of all, possibly overlapping, occurrences."""
    if not pattern:
        raise DomainError("empty pattern")
    out = []
    i = text.find(pattern)
    while i != -1:
        out.append(i)
        i = text.find(pattern, i + 1)
    return tuple(out)


def left_return_words(
    lang: LanguageSample, word: str, max_len: int
) -> tuple[frozenset, bool]:
    """Words u with uw in the language and w occurring in uw only as its
    prefix and suffix.  The flag reports completeness: every long-enough
    word starting with w sees a second occurrence, so no return word longer
    than max_len was missed."""
    if max_len < 1:
        raise DomainError("max_len must be positive")
    if word == "":
        return frozenset(lang.words_of_length(1)), True
    if word not in lang:
        raise DomainError("word %r not in language sample" % word)
    if lang.bound < max_len + len(word):
        raise DomainError(
            "language bound %d too small, need %d" % (lang.bound, max_len + len(word))
        )
    found = set()
    for ell in range(1, max_len + 1):
        for v in lang.words_of_length(ell + len(word)):
            if occurrences(v, word) == (0, ell):
                found.add(v[:ell])
    complete = all(
        len(occurrences(v, word)) >= 2
        for v in lang.words_of_length(max_len + len(word))
        if v.startswith(word)
    )
    return frozenset(found), complete


def right_return_words(
    lang: LanguageSample, word: str, max_len: int
) -> tuple[frozenset, bool]:
    """Words v with wv in the language and w occurring only at its ends;
    each left return u pairs with v = (uw) with its leading w removed."""
    lefts, complete = left_return_words(lang, word, max_len)
    return frozenset((u + word)[len(word) :] for u in lefts), complete


# -- letter morphisms ---------------------------------------------------


class LetterMorphism:
    """Substitution sending each source letter to a non-empty target word."""

    def __init__(self, source: LettersLike, target: LettersLike, rules: dict):
        self.source = Alphabet(source)
        self.target = Alphabet(target)
        if set(rules) != set(self.source):
            raise DomainError("rules must cover the source alphabet exactly")
        for x, image in rules.items():
            if not image:
                raise DomainError("empty image for %r" % x)
            for ch in image:
                if ch not in self.target:
                    raise DomainError(
                        "image letter %r of %r not in target %s"
                        % (ch, x, self.target)
                    )
        self.rules = {x: rules[x] for x in self.source}

    def __call__(self, word: str) -> str:
        try:
            return "".join(self.rules[ch] for ch in word)
        except KeyError as exc:
            raise DomainError("letter %s not in source alphabet" % exc) from exc

    def is_identity(self) -> bool:
        return self.source == self.target and all(
            self.rules[x] == x for x in self.source
        )

    def __eq__(self, other):
        if not isinstance(other, LetterMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.rules == other.rules
        )

    def __repr__(self):
        body = ", ".join("%s->%s" % (x, w) for x, w in self.rules.items())
        return "LetterMorphism(%s)" % body

    def to_json(self) -> dict:
        return {
            "source": str(self.source),
            "target": str(self.target),
            "rules": dict(self.rules),
        }


def identity_morphism(letters: LettersLike) -> LetterMorphism:
    base = Alphabet(letters)
    return LetterMorphism(base, base, {x: x for x in base})


def make_alpha(
    source: LettersLike, a: str, b: str, target: Optional[LettersLike] = None
) -> LetterMorphism:
    """a maps to ab, everything else is fixed."""
    src = Alphabet(source)
    tgt = Alphabet(target) if target is not None else src
    rules = {x: x for x in src}
    rules[a] = a + b
    return LetterMorphism(src, tgt, rules)


def make_alpha_tilde(
    source: LettersLike, a: str, b: str, target: Optional[LettersLike] = None
) -> LetterMorphism:
    """a maps to ba, everything else is fixed."""
    src = Alphabet(source)
    tgt = Alphabet(target) if target is not None else src
    rules = {x: x for x in src}
    rules[a] = b + a
    return LetterMorphism(src, tgt, rules)


def make_inclusion(source: LettersLike, target: LettersLike) -> LetterMorphism:
    src = Alphabet(source)
    return LetterMorphism(src, target, {x: x for x in src})


def make_rename(
    source: LettersLike, target: LettersLike, mapping: dict
) -> LetterMorphism:
    src = Alphabet(source)
    for x, y in mapping.items():
        if len(y) != 1:
            raise DomainError("rename image %r is not a letter" % y)
    if len(set(mapping.values())) != len(mapping):
        raise DomainError("rename is not injective")
    return LetterMorphism(src, target, dict(mapping))


def compose(outer: LetterMorphism, inner: LetterMorphism) -> LetterMorphism:
    """The morphism applying inner first, then outer."""
    if not set(inner.target) <= set(outer.source):
        raise DomainError(
            "cannot compose: inner target %s exceeds outer source %s"
            % (inner.target, outer.source)
        )
    return LetterMorphism(
        inner.source, outer.target, {x: outer(inner.rules[x]) for x in inner.source}
    )
