"""Formal operator words: linear combinations of words in the generators.

A word is a tuple of symbols drawn from E_i, F_i, K_i^{+-1}, R^{+-1},
weight projectors P(lambda), and the classical generators e_i, f_i, H_i.
Words multiply by concatenation and act on tensor space by applying the
rightmost symbol first.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .ring import LaurentPoly
from .weights import Weight

Kind = str  # 'E','F','K','Kinv','R','Rinv','P','e','f','H'


@dataclass(frozen=True)
class Sym:
    kind: Kind
    index: int = 0
    weight: Weight | None = None

    def render(self) -> str:
        if self.kind == "P":
            return f"P{self.weight.render()}"
        if self.kind in ("R", "Rinv"):
            return "R" if self.kind == "R" else "R^-1"
        if self.kind == "Kinv":
            return f"K{self.index}^-1"
        return f"{self.kind}{self.index}"


def E(i: int) -> Sym:
    return Sym("E", i)


def F(i: int) -> Sym:
    return Sym("F", i)


def K(i: int) -> Sym:
    return Sym("K", i)


def Kinv(i: int) -> Sym:
    return Sym("Kinv", i)


R = Sym("R")
Rinv = Sym("Rinv")


def P(w: Weight) -> Sym:
    return Sym("P", weight=w)


def ce(i: int) -> Sym:
    return Sym("e", i)


def cf(i: int) -> Sym:
    return Sym("f", i)


def cH(i: int) -> Sym:
    return Sym("H", i)


Word = tuple[Sym, ...]


class OperatorExpr:
    """Finite LaurentPoly-combination of operator words."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Word, LaurentPoly] | None = None):
        t: dict[Word, LaurentPoly] = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    t[tuple(w)] = c
        self.terms = t

    @classmethod
    def zero(cls) -> OperatorExpr:
        return cls()

    @classmethod
    def one(cls) -> OperatorExpr:
        return cls({(): LaurentPoly.one()})

    @classmethod
    def word(cls, syms: Iterable[Sym], coeff: LaurentPoly | int = 1) -> OperatorExpr:
        c = coeff if isinstance(coeff, LaurentPoly) else LaurentPoly.const(coeff)
        return cls({tuple(syms): c})

    def __add__(self, other: OperatorExpr) -> OperatorExpr:
        t = dict(self.terms)
        for w, c in other.terms.items():
            s = t.get(w, LaurentPoly.zero()) + c
            if s.is_zero():
                t.pop(w, None)
            else:
                t[w] = s
        return OperatorExpr(t)

    def __neg__(self) -> OperatorExpr:
        return OperatorExpr({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: OperatorExpr) -> OperatorExpr:
        return self + (-other)

    def __mul__(self, other: OperatorExpr) -> OperatorExpr:
        t: dict[Word, LaurentPoly] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = t.get(w, LaurentPoly.zero()) + c1 * c2
                if s.is_zero():
                    t.pop(w, None)
                else:
                    t[w] = s
        return OperatorExpr(t)

    def scaled(self, c: LaurentPoly | int) -> OperatorExpr:
        cc = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
        return OperatorExpr({w: x * cc for w, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, OperatorExpr) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def max_word_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), tuple(s.render() for s in w))):
            c = self.terms[w]
            body = " ".join(s.render() for s in w) if w else "1"
            parts.append(f"({c.render()})*{body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"OperatorExpr<{self.render()}>"


def chain(kind: Kind, indices: Iterable[int]) -> list[Sym]:
    """[X_{i_1}, X_{i_2}, ...] for X = E or F."""
    return [Sym(kind, i) for i in indices]


def power(sym: Sym, c: int) -> list[Sym]:
    return [sym] * c
