"""The extended affine Hecke algebra on the T_w basis.

Elements are finite Z[q, q^-1]-combinations of basis symbols T_w indexed
by extended affine permutations (q = v^2 in the scalar ring).  The
product folds the right factor generator by generator:

    T_u * T_{s_i} = T_{u s_i}                       if length goes up,
    T_u * T_{s_i} = q T_{u s_i} + (q - 1) T_u       if length goes down,

and rho powers move through basis symbols by rotating generator indices,
so T_u * T_rho^k = T_{u rho^k} exactly.
"""
from __future__ import annotations

from .aweyl import AffinePerm, ParabolicIndex, enumerate_parabolic
from .ring import LaurentPoly
from .weights import Weight

Q = LaurentPoly.q()
QM1 = LaurentPoly.q() - 1


class HeckeElement:
    """A finite map from AffinePerm to LaurentPoly (span of the T_w)."""

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: dict[AffinePerm, LaurentPoly] | None = None):
        self.r = r
        t: dict[AffinePerm, LaurentPoly] = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    t[w] = c
        self.terms = t

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, r: int) -> HeckeElement:
        return cls(r)

    @classmethod
    def unit(cls, r: int) -> HeckeElement:
        return t_element(AffinePerm.identity(r))

    # -- linear structure -------------------------------------------------------

    def __add__(self, other: HeckeElement) -> HeckeElement:
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            s = t.get(w, LaurentPoly.zero()) + c
            if s.is_zero():
                t.pop(w, None)
            else:
                t[w] = s
        return HeckeElement(self.r, t)

    def __neg__(self) -> HeckeElement:
        return HeckeElement(self.r, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + (-other)

    def scaled(self, c: LaurentPoly) -> HeckeElement:
        return HeckeElement(self.r, {w: x * c for w, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeckeElement)
            and self.r == other.r
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("HeckeElement is not hashable")

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: AffinePerm) -> LaurentPoly:
        return self.terms.get(w, LaurentPoly.zero())

    def support(self) -> list[AffinePerm]:
        return sorted(self.terms, key=_perm_key)

    def _check(self, other: HeckeElement):
        if self.r != other.r:
            raise ValueError("period mismatch")

    # -- multiplication -----------------------------------------------------------

    def __mul__(self, other: HeckeElement) -> HeckeElement:
        self._check(other)
        out = HeckeElement.zero(self.r)
        for v, cv in other.terms.items():
            word = v.reduced_word()
            for u, cu in self.terms.items():
                out = out + _fold_basis(u, v.z, word).scaled(cu * cv)
        return out

    def specialize_q_one(self) -> dict[AffinePerm, object]:
        """Coefficients at v = 1 (group-algebra specialization)."""
        return {w: c.specialize(1) for w, c in self.terms.items()}

    # -- rendering ----------------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in self.support():
            c = self.terms[w]
            parts.append(f"({c.render()})*T[{w.render()}]")
        return " + ".join(parts)

    def structured(self) -> list[dict]:
        return [
            {"perm": w.structured(), "coeff": self.terms[w].structured()}
            for w in self.support()
        ]

    def __repr__(self) -> str:
        return f"HeckeElement<{self.render()}>"


def _perm_key(w: AffinePerm):
    return (w.length(), w.z, w.window)


def t_element(w: AffinePerm) -> HeckeElement:
    """The basis element T_w."""
    return HeckeElement(w.r, {w: LaurentPoly.one()})


def _fold_basis(u: AffinePerm, z: int, word: tuple[int, ...]) -> HeckeElement:
    """T_u * T_rho^z * T_{s_{i_1}} * ... * T_{s_{i_m}}."""
    acc: dict[AffinePerm, LaurentPoly] = {u.mul_rho_right(z): LaurentPoly.one()}
    for i in word:
        nxt: dict[AffinePerm, LaurentPoly] = {}
        for x, c in acc.items():
            xs = x.mul_gen_right(i)
            if xs.length() > x.length():
                _add(nxt, xs, c)
            else:
                _add(nxt, xs, c * Q)
                _add(nxt, x, c * QM1)
        acc = nxt
    return HeckeElement(u.r, acc)


def _add(d: dict[AffinePerm, LaurentPoly], w: AffinePerm, c: LaurentPoly):
    s = d.get(w, LaurentPoly.zero()) + c
    if s.is_zero():
        d.pop(w, None)
    else:
        d[w] = s


def young_parabolic(lam: Weight) -> ParabolicIndex:
    """Generator indices of the Young subgroup S_lambda inside S_r.

    s_i belongs iff i and i+1 fall in the same block of lambda, i <= r-1.

    >>> sorted(young_parabolic(Weight((2, 1, 0))).gens)
    [1]
    """
    r = lam.r
    cuts = set()
    total = 0
    for p in lam.parts:
        total += p
        cuts.add(total)
    gens = frozenset(i for i in range(1, r) if i not in cuts)
    return ParabolicIndex(r, gens)


def x_lambda(lam: Weight, shift: int = 0) -> HeckeElement:
    """x_{lambda+shift}: the sum of T_w over the shifted Young subgroup.

    >>> len(x_lambda(Weight((3, 0, 0))).terms)
    6
    """
    pi = young_parabolic(lam).shifted(shift)
    terms = {w: LaurentPoly.one() for w in enumerate_parabolic(pi)}
    return HeckeElement(lam.r, terms)
