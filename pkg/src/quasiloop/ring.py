"""Exact integer arithmetic in the group algebra A = Z[F] of a free group
and in its commutator quotient, realized as combinations of conjugacy
classes.

``GroupRingElement`` is a finite map reduced word -> integer; the product
is the bilinear extension of concatenation.  ``LoopCombination`` is the
image module: a finite map conjugacy class -> integer.  Neither container
ever stores a zero coefficient.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .words import ConjClass, Word, canonical_conjugacy, format_word, parse_word


def _clean(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c != 0}


class GroupRingElement:
    """An element of Z[F]: finitely many reduced words with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None):
        self.terms = _clean(terms or {})

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls()

    @classmethod
    def from_word(cls, w: Word, coeff: int = 1) -> "GroupRingElement":
        return cls({w: coeff})

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls.from_word(Word())

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[tuple[Word, int]]:
        return iter(self.terms.items())

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return GroupRingElement(terms)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "GroupRingElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return GroupRingElement({w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        terms: dict[Word, int] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u * v
                terms[w] = terms.get(w, 0) + a * b
        return GroupRingElement(terms)

    def left_mul(self, w: Word) -> "GroupRingElement":
        return GroupRingElement({w * u: c for u, c in self.terms.items()})

    def right_mul(self, w: Word) -> "GroupRingElement":
        return GroupRingElement({u * w: c for u, c in self.terms.items()})

    def augmentation(self) -> int:
        """Sum of coefficients (image under the map sending every group element to 1)."""
        return sum(self.terms.values())

    def sorted_terms(self) -> list[tuple[Word, int]]:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0].key()))

    def __repr__(self) -> str:
        if not self.terms:
            return "GroupRingElement(0)"
        parts = [f"{c}*[{format_word(w)}]" for w, c in self.sorted_terms()]
        return "GroupRingElement(" + " + ".join(parts) + ")"

    def to_pairs(self) -> list[list]:
        return [[c, format_word(w)] for w, c in self.sorted_terms()]

    @classmethod
    def from_pairs(cls, pairs: Iterable, rank: int | None = None) -> "GroupRingElement":
        terms: dict[Word, int] = {}
        for coeff, text in pairs:
            w = parse_word(text, rank)
            terms[w] = terms.get(w, 0) + int(coeff)
        return cls(terms)


class LoopCombination:
    """An integer combination of conjugacy classes (an element of A/[A,A])."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[ConjClass, int] | None = None):
        self.terms = _clean(terms or {})

    @classmethod
    def zero(cls) -> "LoopCombination":
        return cls()

    @classmethod
    def from_class(cls, c: ConjClass, coeff: int = 1) -> "LoopCombination":
        return cls({c: coeff})

    @classmethod
    def from_word(cls, w: Word, coeff: int = 1) -> "LoopCombination":
        return cls({canonical_conjugacy(w): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LoopCombination) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[tuple[ConjClass, int]]:
        return iter(self.terms.items())

    def __add__(self, other: "LoopCombination") -> "LoopCombination":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return LoopCombination(terms)

    def __neg__(self) -> "LoopCombination":
        return LoopCombination({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LoopCombination") -> "LoopCombination":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "LoopCombination":
        if not isinstance(scalar, int):
            return NotImplemented
        return LoopCombination({k: scalar * c for k, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[ConjClass, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0].key())

    def __repr__(self) -> str:
        if not self.terms:
            return "LoopCombination(0)"
        parts = [f"{c}*<{format_word(k.word)}>" for k, c in self.sorted_terms()]
        return "LoopCombination(" + " + ".join(parts) + ")"

    def to_pairs(self) -> list[list]:
        return [[c, format_word(k.word)] for k, c in self.sorted_terms()]

    @classmethod
    def from_pairs(cls, pairs: Iterable, rank: int | None = None) -> "LoopCombination":
        terms: dict[ConjClass, int] = {}
        for coeff, text in pairs:
            k = canonical_conjugacy(parse_word(text, rank))
            terms[k] = terms.get(k, 0) + int(coeff)
        return cls(terms)


def project_to_classes(x: GroupRingElement) -> LoopCombination:
    """The projection A -> A/[A,A]: canonicalize each term's conjugacy class and merge."""
    terms: dict[ConjClass, int] = {}
    for w, c in x.terms.items():
        k = canonical_conjugacy(w)
        terms[k] = terms.get(k, 0) + c
    return LoopCombination(terms)
