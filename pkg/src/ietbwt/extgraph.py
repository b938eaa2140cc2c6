"""Extension graphs of language factors and the orderings that certify
clustering: a factor's graph joins left extensions to right extensions,
and a language is classified by whether every graph is a tree, a forest,
or a forest compatible with a pair of vertex orders."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .alphabet import Perm
from .coding import LanguageSample, language_of_periodic
from .errors import DomainError


@dataclass(frozen=True)
class ExtensionGraph:
    """Bipartite graph of one factor: an edge (a, b) records that the word
    extends to awb inside the language."""

    word: str
    left: tuple
    right: tuple
    edges: tuple

    def is_bispecial(self) -> bool:
        return len(self.left) >= 2 and len(self.right) >= 2

    def vertices(self) -> tuple:
        out = [("L", a) for a in self.left]
        out.extend(("R", b) for b in self.right)
        return tuple(out)

    def components(self) -> tuple:
        parent = {v: v for v in self.vertices()}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in self.edges:
            ra, rb = find(("L", a)), find(("R", b))
            if ra != rb:
                parent[ra] = rb
        groups: dict = {}
        for v in parent:
            groups.setdefault(find(v), []).append(v)
        comps = [frozenset(vs) for vs in groups.values()]
        comps.sort(key=lambda c: min(c))
        return tuple(comps)

    def is_forest(self) -> bool:
        # acyclic iff every component has one more vertex than it has edges
        return len(self.vertices()) == len(self.edges) + len(self.components())

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_tree(self) -> bool:
        return self.is_forest() and self.is_connected()

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "left": list(self.left),
            "right": list(self.right),
            "edges": [list(e) for e in self.edges],
        }


def extension_graph(lang: LanguageSample, word: str) -> ExtensionGraph:
    """The graph of a factor, read off the language sample.  The sample
    must be deep enough to decide every two-sided extension."""
    if word not in lang:
        raise DomainError("%r is not in the language" % word)
    if lang.bound < len(word) + 2:
        raise DomainError(
            "language sampled to %d is too shallow for a length-%d factor"
            % (lang.bound, len(word))
        )
    letters = tuple(lang.alphabet)
    left = tuple(a for a in letters if a + word in lang)
    right = tuple(b for b in letters if word + b in lang)
    edges = tuple(
        (a, b) for a in left for b in right if a + word + b in lang
    )
    return ExtensionGraph(word, left, right, edges)


def order_from_permutation(perm: Perm) -> tuple:
    """The order the permutation's rows read left to right, used to sort
    left vertices when testing a clustering candidate."""
    return perm.images


def compatible(graph: ExtensionGraph, left_order, right_order) -> bool:
    """Whether the edge relation is monotone: strictly increasing left
    vertices never see decreasing right vertices."""
    li = {a: i for i, a in enumerate(left_order)}
    ri = {b: i for i, b in enumerate(right_order)}
    for a in graph.left:
        if a not in li:
            raise DomainError("left order misses vertex %r" % a)
    for b in graph.right:
        if b not in ri:
            raise DomainError("right order misses vertex %r" % b)
    for a, b in graph.edges:
        for c, d in graph.edges:
            if li[a] < li[c] and ri[b] > ri[d]:
                return False
    return True


@dataclass
class ClassifyReport:
    left_order: tuple
    right_order: tuple
    max_word_len: int
    words_checked: int
    dendric: bool
    alsinic: bool
    ordered_alsinic: bool
    first_non_tree: Optional[str]
    first_non_forest: Optional[str]
    first_incompatible: Optional[str]

    def to_json(self) -> dict:
        return {
            "left_order": "".join(self.left_order),
            "right_order": "".join(self.right_order),
            "max_word_len": self.max_word_len,
            "words_checked": self.words_checked,
            "dendric": self.dendric,
            "alsinic": self.alsinic,
            "ordered_alsinic": self.ordered_alsinic,
            "first_non_tree": self.first_non_tree,
            "first_non_forest": self.first_non_forest,
            "first_incompatible": self.first_incompatible,
        }


def classify_language(
    lang: LanguageSample,
    left_order,
    right_order,
    max_word_len: Optional[int] = None,
) -> ClassifyReport:
    """Check every factor up to the length bound.  Graphs of factors that
    are not bispecial are forests and compatible with any orders, so only
    bispecial factors can break those two properties."""
    if max_word_len is None:
        max_word_len = lang.bound - 2
    if max_word_len < 0 or lang.bound < max_word_len + 2:
        raise DomainError(
            "need language depth %d to classify factors up to length %d"
            % (max_word_len + 2, max_word_len)
        )
    first_non_tree = first_non_forest = first_incompatible = None
    checked = 0
    for n in range(max_word_len + 1):
        for w in lang.words_of_length(n):
            g = extension_graph(lang, w)
            checked += 1
            if first_non_tree is None and not g.is_tree():
                first_non_tree = w
            if g.is_bispecial():
                if first_non_forest is None and not g.is_forest():
                    first_non_forest = w
                if first_incompatible is None and not compatible(
                    g, left_order, right_order
                ):
                    first_incompatible = w
    return ClassifyReport(
        left_order=tuple(left_order),
        right_order=tuple(right_order),
        max_word_len=max_word_len,
        words_checked=checked,
        dendric=first_non_tree is None,
        alsinic=first_non_forest is None,
        ordered_alsinic=first_incompatible is None,
        first_non_tree=first_non_tree,
        first_non_forest=first_non_forest,
        first_incompatible=first_incompatible,
    )


def periodic_clustering_report(
    word: str, perm: Perm, max_word_len: Optional[int] = None
) -> ClassifyReport:
    """Classify the periodic closure of a word against the row order of a
    permutation on the left and its base order on the right.  Factors up
    to the word's own length decide the matter: longer bispecial factors
    cannot occur in a periodic language of that period."""
    if max_word_len is None:
        max_word_len = len(word)
    lang = language_of_periodic(word, max_word_len + 2)
    return classify_language(
        lang, order_from_permutation(perm), perm.letters, max_word_len
    )
