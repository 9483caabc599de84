"""The affine q-Schur algebra on the phi basis.

Basis symbols phi^d_{lambda,mu} are indexed by pairs of weights and a
minimal-length double coset representative d.  The defining data is the
Hecke element

    phi^d_{lambda,mu}(x_mu) = sum of T_w over the double coset
                              S_lambda * d * S_mu,

and products are computed by evaluating on x, multiplying in the Hecke
algebra, and greedily re-expanding double-coset sums.  The expansion must
terminate with remainder exactly zero; a nonzero remainder is an internal
error and raises.
"""
from __future__ import annotations

from dataclasses import dataclass

from .aweyl import (
    AffinePerm,
    double_coset_min,
    enumerate_double_coset,
    is_distinguished_right,
    is_double_coset_min,
)
from .hecke import HeckeElement, young_parabolic
from .ring import LaurentPoly
from .weights import Weight, all_weights, omega


class BasisExpansionError(RuntimeError):
    """The double-coset extraction left a nonzero remainder."""


@dataclass(frozen=True)
class SchurBasisIndex:
    """(lambda, mu, d) with d minimal in S_lambda d S_mu."""

    lam: Weight
    mu: Weight
    d: AffinePerm

    def __post_init__(self):
        if self.lam.n != self.mu.n or self.lam.r != self.mu.r:
            raise ValueError("weights must share (n, r)")
        if self.lam.r != self.d.r:
            raise ValueError("permutation period must equal r")
        if not is_double_coset_min(self.d, young_parabolic(self.lam), young_parabolic(self.mu)):
            raise ValueError("d is not minimal in its double coset")

    @classmethod
    def make(cls, lam: Weight, mu: Weight, d: AffinePerm) -> SchurBasisIndex:
        """Build with d replaced by the minimal representative of its coset."""
        dmin = double_coset_min(d, young_parabolic(lam), young_parabolic(mu))
        return cls(lam, mu, dmin)

    def render(self) -> str:
        return f"phi[{self.lam.render()} | {self.d.render()} | {self.mu.render()}]"


class SchurElement:
    """A finite map from SchurBasisIndex to LaurentPoly."""

    __slots__ = ("n", "r", "terms")

    def __init__(self, n: int, r: int, terms: dict[SchurBasisIndex, LaurentPoly] | None = None):
        self.n = n
        self.r = r
        t: dict[SchurBasisIndex, LaurentPoly] = {}
        if terms:
            for k, c in terms.items():
                if k.lam.n != n or k.lam.r != r:
                    raise ValueError("index does not match (n, r)")
                if not c.is_zero():
                    t[k] = c
        self.terms = t

    @classmethod
    def zero(cls, n: int, r: int) -> SchurElement:
        return cls(n, r)

    @classmethod
    def basis(cls, idx: SchurBasisIndex) -> SchurElement:
        return cls(idx.lam.n, idx.lam.r, {idx: LaurentPoly.one()})

    def __add__(self, other: SchurElement) -> SchurElement:
        self._check(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k, LaurentPoly.zero()) + c
            if s.is_zero():
                t.pop(k, None)
            else:
                t[k] = s
        return SchurElement(self.n, self.r, t)

    def __neg__(self) -> SchurElement:
        return SchurElement(self.n, self.r, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: SchurElement) -> SchurElement:
        return self + (-other)

    def scaled(self, c: LaurentPoly) -> SchurElement:
        return SchurElement(self.n, self.r, {k: x * c for k, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurElement)
            and (self.n, self.r) == (other.n, other.r)
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, idx: SchurBasisIndex) -> LaurentPoly:
        return self.terms.get(idx, LaurentPoly.zero())

    def support(self) -> list[SchurBasisIndex]:
        return sorted(
            self.terms,
            key=lambda k: (k.lam.parts, k.mu.parts, k.d.length(), k.d.z, k.d.window),
        )

    def _check(self, other: SchurElement):
        if (self.n, self.r) != (other.n, other.r):
            raise ValueError("(n, r) mismatch")

    # -- multiplication -----------------------------------------------------------

    def __mul__(self, other: SchurElement) -> SchurElement:
        self._check(other)
        out = SchurElement.zero(self.n, self.r)
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                if k1.mu != k2.lam:
                    continue
                out = out + _mul_basis(k1, k2).scaled(c1 * c2)
        return out

    # -- rendering ----------------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({self.terms[k].render()}) * {k.render()}" for k in self.support()
        )

    def structured(self) -> list[dict]:
        return [
            {
                "lambda": list(k.lam.parts),
                "mu": list(k.mu.parts),
                "d": k.d.structured(),
                "coeff": self.terms[k].structured(),
            }
            for k in self.support()
        ]

    def __repr__(self) -> str:
        return f"SchurElement<{self.render()}>"


def phi_value(idx: SchurBasisIndex) -> HeckeElement:
    """The Hecke element phi^d_{lambda,mu}(x_mu): the double-coset sum.

    >>> from .aweyl import AffinePerm
    >>> w = Weight((2, 0, 0)); om = Weight((1, 1, 0))
    >>> idx = SchurBasisIndex(w, w, AffinePerm.identity(2))
    >>> sorted(t.length() for t in phi_value(idx).terms)
    [0, 1]
    """
    coset = enumerate_double_coset(
        young_parabolic(idx.lam), idx.d, young_parabolic(idx.mu)
    )
    return HeckeElement(idx.d.r, {w: LaurentPoly.one() for w in coset})


def _right_generator(idx: SchurBasisIndex) -> HeckeElement:
    """h with phi^d_{lambda,mu}(x_mu) = x_lambda * h: the sum of T_b over
    the distinguished (left-minimal) members of the double coset."""
    pi = young_parabolic(idx.lam)
    coset = enumerate_double_coset(pi, idx.d, young_parabolic(idx.mu))
    return HeckeElement(
        idx.d.r,
        {b: LaurentPoly.one() for b in coset if is_distinguished_right(b, pi)},
    )


def _mul_basis(k1: SchurBasisIndex, k2: SchurBasisIndex) -> SchurElement:
    """Expand phi_{k1} . phi_{k2} in the phi basis (middle weights match)."""
    value = phi_value(k1) * _right_generator(k2)
    return expand_in_basis(k1.lam, k2.mu, value)


def expand_in_basis(lam: Weight, mu: Weight, value: HeckeElement) -> SchurElement:
    """Write a Hecke element as a combination of double-coset sums.

    Greedy extraction: take a minimal-length support element (it is the
    minimal representative of its double coset), subtract its coset sum,
    repeat.  Any nonzero remainder raises BasisExpansionError.
    """
    n = lam.n
    r = lam.r
    pil, pim = young_parabolic(lam), young_parabolic(mu)
    out: dict[SchurBasisIndex, LaurentPoly] = {}
    rem = value
    while not rem.is_zero():
        d = min(rem.terms, key=lambda w: (w.length(), w.z, w.window))
        if not is_double_coset_min(d, pil, pim):
            raise BasisExpansionError(
                f"minimal support element {d.render()} is not coset-minimal"
            )
        c = rem.coeff(d)
        idx = SchurBasisIndex(lam, mu, d)
        rem = rem - phi_value(idx).scaled(c)
        if d in rem.terms:
            raise BasisExpansionError("extraction failed to clear the pivot")
        out[idx] = c
    return SchurElement(n, r, out)


def identity_element(n: int, r: int) -> SchurElement:
    """The unit: sum over all weights of phi^1_{lambda,lambda}.

    >>> len(identity_element(3, 2).terms)
    6
    """
    e = AffinePerm.identity(r)
    terms = {
        SchurBasisIndex(lam, lam, e): LaurentPoly.one() for lam in all_weights(n, r)
    }
    return SchurElement(n, r, terms)


def hecke_embed(h: HeckeElement, n: int) -> SchurElement:
    """T_d -> phi^d_{omega,omega}, extended linearly; requires n >= r."""
    r = h.r
    if n < r:
        raise ValueError("the omega weight needs n >= r")
    om = omega(n, r)
    terms = {SchurBasisIndex(om, om, w): c for w, c in h.terms.items()}
    return SchurElement(n, r, terms)


def finite_subalgebra_check(d: AffinePerm) -> bool:
    """Whether phi^d_{omega,omega} lies in the finite q-Schur subalgebra,
    i.e. d belongs to the finite symmetric group."""
    return d.is_finite()
