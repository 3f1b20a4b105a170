"""U(gl_M) with PBW normal forms, over a pluggable coefficient field.

Generators E[a,b] (1-based indices) are totally ordered lexicographically on
(a, b); a PBW monomial is a nondecreasing word in that order.  Straightening
rewrites any word to normal form by adjacent swaps,
E[a,b] E[c,d] = E[c,d] E[a,b] + delta_bc E[a,d] - delta_da E[c,b],
with memoization on whole words.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .field import QQ

GLGen = tuple[int, int]

_memo: dict = {}


def commutator_terms(x: GLGen, y: GLGen) -> dict[GLGen, int]:
    """[E_x, E_y] as a dict of generators with integer coefficients."""
    (a, b), (c, d) = x, y
    out: dict[GLGen, int] = {}
    if b == c:
        out[(a, d)] = out.get((a, d), 0) + 1
    if d == a:
        out[(c, b)] = out.get((c, b), 0) - 1
    return {g: v for g, v in out.items() if v}


def straighten_word(word_: tuple[GLGen, ...], field=QQ) -> dict:
    """Normal form of a free word as {sorted monomial: coefficient}."""
    key = (field.name, word_)
    hit = _memo.get(key)
    if hit is not None:
        return dict(hit)
    i = next((j for j in range(len(word_) - 1) if word_[j] > word_[j + 1]), None)
    if i is None:
        result = {word_: field.one}
    else:
        x, y = word_[i], word_[i + 1]
        swapped = word_[:i] + (y, x) + word_[i + 2:]
        result = dict(straighten_word(swapped, field))
        for g, c in commutator_terms(x, y).items():
            sub = straighten_word(word_[:i] + (g,) + word_[i + 2:], field)
            for mono, v in sub.items():
                nv = result.get(mono, field.zero) + field.from_int(c) * v
                if nv:
                    result[mono] = nv
                else:
                    result.pop(mono, None)
    _memo[key] = dict(result)
    return result


class UElement:
    """Element of U(gl_M) in PBW normal form."""

    __slots__ = ("M", "terms", "field")

    def __init__(self, M: int, terms=None, field=QQ):
        self.M = M
        self.field = field
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, M: int, field=QQ) -> "UElement":
        return cls(M, {}, field)

    @classmethod
    def one(cls, M: int, field=QQ) -> "UElement":
        return cls(M, {(): field.one}, field)

    @classmethod
    def gen(cls, M: int, a: int, b: int, field=QQ) -> "UElement":
        if not (1 <= a <= M and 1 <= b <= M):
            raise ValueError(f"generator E[{a},{b}] out of range for M={M}")
        return cls(M, {((a, b),): field.one}, field)

    @classmethod
    def from_word(cls, M: int, word_, field=QQ) -> "UElement":
        return cls(M, straighten_word(tuple(word_), field), field)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def scale(self, c) -> "UElement":
        if isinstance(c, (int, Fraction)):
            c = self.field.from_int(c)
        return UElement(self.M, {m: v * c for m, v in self.terms.items()},
                        self.field)

    def __add__(self, other: "UElement") -> "UElement":
        self._compat(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            nv = terms.get(m, self.field.zero) + c
            if nv:
                terms[m] = nv
            else:
                terms.pop(m, None)
        return UElement(self.M, terms, self.field)

    def __neg__(self) -> "UElement":
        return self.scale(-1)

    def __sub__(self, other: "UElement") -> "UElement":
        return self + (-other)

    def __mul__(self, other: "UElement") -> "UElement":
        self._compat(other)
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for mono, v in straighten_word(m1 + m2, self.field).items():
                    nv = acc.get(mono, self.field.zero) + c * v
                    if nv:
                        acc[mono] = nv
                    else:
                        acc.pop(mono, None)
        return UElement(self.M, acc, self.field)

    def commutator(self, other: "UElement") -> "UElement":
        return self * other - other * self

    def truncate_degree(self, m: int) -> "UElement":
        return UElement(self.M, {k: v for k, v in self.terms.items()
                                 if len(k) <= m}, self.field)

    def top_part(self) -> "UElement":
        d = self.degree()
        return UElement(self.M, {k: v for k, v in self.terms.items()
                                 if len(k) == d}, self.field)

    def _compat(self, other: "UElement"):
        if self.M != other.M:
            raise ValueError("mixed gl sizes")
        if self.field is not other.field and self.field != other.field:
            raise ValueError("mixed coefficient fields")

    def __eq__(self, other) -> bool:
        if not isinstance(other, UElement):
            return NotImplemented
        return self.M == other.M and self.terms == other.terms

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            body = "".join(f"E[{a},{b}]" for a, b in mono) or "1"
            parts.append(f"{c}*{body}")
        return " + ".join(parts)

    @classmethod
    def from_text(cls, M: int, text: str, field=QQ) -> "UElement":
        text = text.strip()
        if text == "0":
            return cls.zero(M, field)
        acc = cls.zero(M, field)
        for part in re.split(r"\s*\+\s*", text):
            cstr, _, body = part.partition("*")
            coeff = Fraction(cstr)
            word_ = tuple(
                (int(a), int(b))
                for a, b in re.findall(r"E\[(\d+),(\d+)\]", body))
            acc = acc + cls.from_word(M, word_, field).scale(coeff)
        return acc

    def __repr__(self) -> str:
        return f"UElement(M={self.M}, {self.to_text()})"


def straighten(word_, M: int, field=QQ) -> UElement:
    """Normal form of a free word in the generators."""
    for (a, b) in word_:
        if not (1 <= a <= M and 1 <= b <= M):
            raise ValueError(f"generator E[{a},{b}] out of range for M={M}")
    return UElement.from_word(M, word_, field)


def gelfand(k: int, M: int, field=QQ) -> UElement:
    """Central element tr(E^k): sum of E[a1,a2] E[a2,a3] ... E[ak,a1]."""
    if k < 1:
        raise ValueError("gelfand degree must be >= 1")
    acc = UElement.zero(M, field)
    for idx in itertools.product(range(1, M + 1), repeat=k):
        word_ = tuple((idx[i], idx[(i + 1) % k]) for i in range(k))
        acc = acc + UElement.from_word(M, word_, field)
    return acc


def centralizer_membership(x: UElement, block) -> bool:
    """True iff x commutes with every E[a,b] for a, b in the index block."""
    for a in block:
        for b in block:
            if not x.commutator(UElement.gen(x.M, a, b, x.field)).is_zero():
                return False
    return True


def filtration_basis(m: int, M: int) -> list[tuple[GLGen, ...]]:
    """All PBW monomials with at most m factors."""
    gens = [(a, b) for a in range(1, M + 1) for b in range(1, M + 1)]
    out: list[tuple[GLGen, ...]] = []
    for j in range(m + 1):
        out.extend(itertools.combinations_with_replacement(gens, j))
    return out
