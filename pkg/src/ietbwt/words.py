"""Word combinatorics: rotations, Burrows-Wheeler transforms, Lyndon
representatives, clustering permutations and their transport along
elementary substitutions.

A word is "pi-clustering" for a letter order and a permutation pi of that
order when the transform output is the concatenation, over the order, of
one run per letter: the run at position x consists of pi(x) repeated as
often as pi(x) occurs in the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations, groupby
from typing import Iterable, Optional, Sequence, Union

from .alphabet import Alphabet, Perm
from .errors import DomainError

OrderLike = Union[str, Sequence[str], Alphabet, None]


def _resolve_order(order: OrderLike, *words: str) -> tuple[str, ...]:
    if order is None:
        return tuple(sorted(set("".join(words))))
    out = tuple(order)
    seen = set(out)
    if len(seen) != len(out):
        raise DomainError("letter order has duplicates")
    for w in words:
        for ch in w:
            if ch not in seen:
                raise DomainError("letter %r not in order %r" % (ch, "".join(out)))
    return out


def rotations(word: str) -> tuple[str, ...]:
    return tuple(word[i:] + word[:i] for i in range(len(word)))


def runs_of(s: str) -> tuple[tuple[str, int], ...]:
    return tuple((ch, len(list(grp))) for ch, grp in groupby(s))


@dataclass(frozen=True)
class BwtResult:
    words: tuple[str, ...]
    order: tuple[str, ...]
    output: str
    runs: tuple[tuple[str, int], ...]
    rotations: tuple[str, ...]


def bwt(word: str, order: OrderLike = None) -> BwtResult:
    """Burrows-Wheeler transform: last column of the sorted rotations."""
    if not word:
        raise DomainError("empty word")
    base = _resolve_order(order, word)
    index = {ch: i for i, ch in enumerate(base)}
    rots = sorted(rotations(word), key=lambda s: tuple(index[ch] for ch in s))
    output = "".join(s[-1] for s in rots)
    return BwtResult((word,), base, output, runs_of(output), tuple(rots))


def omega_compare(u: str, v: str, order: OrderLike = None) -> int:
    """Compare the infinite powers u^w and v^w letter by letter; the first
    len(u)+len(v) positions decide."""
    if not u or not v:
        raise DomainError("empty word")
    base = _resolve_order(order, u, v)
    index = {ch: i for i, ch in enumerate(base)}
    for i in range(len(u) + len(v)):
        cu, cv = index[u[i % len(u)]], index[v[i % len(v)]]
        if cu != cv:
            return -1 if cu < cv else 1
    return 0


def ebwt(words: Iterable[str], order: OrderLike = None) -> BwtResult:
    """Extended transform of a multiset of primitive words: last letters of
    all their rotations sorted by omega order."""
    ws = tuple(words)
    if not ws:
        raise DomainError("empty multiset")
    for w in ws:
        if not is_primitive(w):
            raise DomainError("word %r is not primitive" % w)
    base = _resolve_order(order, *ws)
    conj = [r for w in ws for r in rotations(w)]
    conj.sort(key=cmp_to_key(lambda u, v: omega_compare(u, v, base)))
    output = "".join(s[-1] for s in conj)
    return BwtResult(ws, base, output, runs_of(output), tuple(conj))


def is_primitive(word: str) -> bool:
    if not word:
        raise DomainError("empty word")
    return (word + word).find(word, 1) == len(word)


def primitive_root(word: str) -> str:
    if not word:
        raise DomainError("empty word")
    return word[: (word + word).find(word, 1)]


def lyndon_representative(word: str, order: OrderLike = None) -> str:
    """Least rotation under the letter order."""
    base = _resolve_order(order, word)
    index = {ch: i for i, ch in enumerate(base)}
    return min(rotations(word), key=lambda s: tuple(index[ch] for ch in s))


def is_lyndon(word: str, order: OrderLike = None) -> bool:
    return is_primitive(word) and word == lyndon_representative(word, order)


def parikh(word: str, letters: OrderLike = None) -> dict[str, int]:
    base = _resolve_order(letters, word)
    return {ch: word.count(ch) for ch in base}


def is_pangrammatic(word: str, letters: OrderLike) -> bool:
    return set(letters) <= set(word)


# -- clustering ---------------------------------------------------------


def expected_clustered_output(word: str, perm: Perm) -> str:
    counts = parikh(word, perm.letters)
    return "".join(perm(x) * counts[perm(x)] for x in perm.letters)


def is_pi_clustering(word: str, perm: Perm) -> bool:
    """Whether the transform under the permutation's base order equals the
    run concatenation prescribed by the permutation."""
    return bwt(word, perm.letters).output == expected_clustered_output(word, perm)


def is_clustering(word: str, order: OrderLike = None) -> bool:
    """Whether each letter forms at most one run in the transform output."""
    res = bwt(word, order)
    return len(set(ltr for ltr, _ in res.runs)) == len(res.runs)


def infer_clustering_permutation(
    word: str, order: OrderLike = None, all_completions: bool = False
):
    """The canonical permutation certifying that the word clusters, or None.

    Canonically, letters absent from the word are fixed and the present
    letters map, in order, onto the run letters in run order.  With
    all_completions, every valid permutation with absent letters placed
    order-preservingly is returned as a tuple."""
    base = _resolve_order(order, word)
    res = bwt(word, base)
    run_letters = [ltr for ltr, _ in res.runs]
    if len(set(run_letters)) != len(run_letters):
        return () if all_completions else None
    present = set(word)
    absent = [x for x in base if x not in present]
    if not all_completions:
        mapping = {x: x for x in absent}
        for x, y in zip((x for x in base if x in present), run_letters):
            mapping[x] = y
        return Perm(base, tuple(mapping[x] for x in base))
    out = []
    m = len(run_letters)
    for subset in combinations(range(len(base)), m):
        mapping = {}
        for pos, y in zip(subset, run_letters):
            mapping[base[pos]] = y
        rest = [i for i in range(len(base)) if i not in subset]
        for pos, y in zip(rest, absent):
            mapping[base[pos]] = y
        out.append(Perm(base, tuple(mapping[x] for x in base)))
    return tuple(out)


# -- transport of clustering pairs along substitutions ------------------


@dataclass(frozen=True)
class MorphismStep:
    """One elementary substitution: a letter rename, a -> ab, a -> ba, or
    an inclusion adding unused letters.  For a -> ab with b a fresh letter,
    place says which end of the order receives b."""

    kind: str
    a: Optional[str] = None
    b: Optional[str] = None
    rename: Optional[tuple[tuple[str, str], ...]] = None
    fresh: Optional[tuple[str, ...]] = None
    place: Optional[str] = None


def rename_step(mapping: dict[str, str]) -> MorphismStep:
    if len(set(mapping.values())) != len(mapping):
        raise DomainError("rename is not injective")
    return MorphismStep("rename", rename=tuple(sorted(mapping.items())))


def alpha_step(a: str, b: str, place: Optional[str] = None) -> MorphismStep:
    if a == b:
        raise DomainError("substitution letters must differ")
    return MorphismStep("alpha", a=a, b=b, place=place)


def alpha_tilde_step(a: str, b: str) -> MorphismStep:
    if a == b:
        raise DomainError("substitution letters must differ")
    return MorphismStep("alpha_tilde", a=a, b=b)


def inclusion_step(fresh: Iterable[str]) -> MorphismStep:
    return MorphismStep("inclusion", fresh=tuple(fresh))


def apply_step_to_word(step: MorphismStep, word: str) -> str:
    if step.kind == "rename":
        table = dict(step.rename)
        try:
            return "".join(table[ch] for ch in word)
        except KeyError as exc:
            raise DomainError("rename does not cover letter %s" % exc) from exc
    if step.kind == "alpha":
        return word.replace(step.a, step.a + step.b)
    if step.kind == "alpha_tilde":
        return word.replace(step.a, step.b + step.a)
    if step.kind == "inclusion":
        return word
    raise DomainError("unknown step kind %r" % step.kind)


def _adjacent(seq: Sequence[str], first: str, second: str) -> bool:
    i = seq.index(first)
    return i + 1 < len(seq) and seq[i + 1] == second


def clustering_transport(
    order: OrderLike, perm: Perm, step: MorphismStep
) -> tuple[tuple[str, ...], Perm]:
    """Push a clustering pair (order, permutation) through one substitution.

    If a word is clustering for the input pair, its image under the step is
    clustering for the returned pair.  Raises DomainError when the step's
    side condition does not hold for this pair."""
    base = tuple(order)
    if perm.letters != base:
        raise DomainError("permutation base does not match the order")
    row = perm.images

    if step.kind == "rename":
        table = dict(step.rename)
        if set(table) != set(base):
            raise DomainError("rename must cover the order exactly")
        order2 = tuple(table[x] for x in base)
        return order2, Perm(order2, tuple(table[y] for y in row))

    if step.kind == "alpha":
        a, b = step.a, step.b
        if a not in base:
            raise DomainError("letter %r not in order" % a)
        if b not in base:
            if step.place not in ("front", "back"):
                raise DomainError("fresh letter needs place 'front' or 'back'")
            sub = tuple(b if y == a else y for y in row)
            if step.place == "back":
                order2 = base + (b,)
                return order2, Perm(order2, sub + (a,))
            order2 = (b,) + base
            return order2, Perm(order2, (a,) + sub)
        if b == base[0]:
            if not _adjacent(row, a, b):
                raise DomainError("row must place %r right before %r" % (a, b))
            return base, Perm(base, (a,) + tuple(y for y in row if y != a))
        if b == base[-1]:
            if not _adjacent(row, b, a):
                raise DomainError("row must place %r right before %r" % (b, a))
            return base, Perm(base, tuple(y for y in row if y != a) + (a,))
        raise DomainError("letter %r must sit at an end of the order" % b)

    if step.kind == "alpha_tilde":
        a, b = step.a, step.b
        if a not in base or b not in base:
            raise DomainError("both letters must be in the order")
        if row[0] == b:
            if not _adjacent(base, a, b):
                raise DomainError("order must place %r right before %r" % (a, b))
            order2 = (a,) + tuple(x for x in base if x != a)
            return order2, Perm(order2, row)
        if row[-1] == b:
            if not _adjacent(base, b, a):
                raise DomainError("order must place %r right before %r" % (b, a))
            order2 = tuple(x for x in base if x != a) + (a,)
            return order2, Perm(order2, row)
        raise DomainError("letter %r must sit at an end of the row" % b)

    if step.kind == "inclusion":
        fresh = step.fresh or ()
        if set(fresh) & set(base) or len(set(fresh)) != len(fresh):
            raise DomainError("inclusion letters must be new and distinct")
        order2 = base + fresh
        return order2, Perm(order2, row + fresh)

    raise DomainError("unknown step kind %r" % step.kind)
