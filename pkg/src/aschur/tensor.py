"""Tensor space and the generator action through the coproduct.

The module V has basis e_t for every integer t; its r-fold tensor power
has basis e_{t_1} x ... x e_{t_r} encoded as integer tuples.  Vectors are
sparse maps from basis tuples to Laurent polynomials.

The one-factor action (indices read mod n):

    E_i e_{t+1} = e_t   if t = i,      F_i e_t = e_{t+1}  if t = i,
    K_i e_t     = v e_t if t = i (else fixed),     R e_t = e_{t+1},

lifts to r factors through the comultiplication: the E_i term acting in
position j carries the grouplike twist K_i K_{i+1}^-1 on every position
after j, and the F_i term carries the inverse twist on every position
before j.  The classical generators e_i, f_i act by the same position
sums with no twist, and H_i acts by the integer weight entry.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator

from .operators import E, F, OperatorExpr, R, Rinv, Sym, Word, chain
from .ring import LaurentPoly
from .weights import Weight, omega

Basis = tuple[int, ...]
Vector = dict[Basis, LaurentPoly]


def _res(t: int, n: int) -> int:
    """Residue of t mod n, in {1, ..., n}."""
    return (t - 1) % n + 1


def weight_of(n: int, b: Basis) -> Weight:
    """lambda_i = #{j : t_j = i mod n}.

    >>> weight_of(3, (1, 4)).parts
    (2, 0, 0)
    """
    counts = [0] * n
    for t in b:
        counts[_res(t, n) - 1] += 1
    return Weight(tuple(counts))


def shift(b: Basis, k: int) -> Basis:
    return tuple(t + k for t in b)


@lru_cache(maxsize=None)
def _act_basis(n: int, sym: Sym, b: Basis) -> tuple[tuple[Basis, LaurentPoly], ...]:
    kind, i = sym.kind, sym.index
    r = len(b)
    if kind == "E":
        out = []
        for j in range(r):
            if _res(b[j], n) == _res(i + 1, n):
                exp = 0
                for k in range(j + 1, r):
                    rk = _res(b[k], n)
                    if rk == _res(i, n):
                        exp += 1
                    elif rk == _res(i + 1, n):
                        exp -= 1
                out.append((b[:j] + (b[j] - 1,) + b[j + 1 :], LaurentPoly.v(exp)))
        return tuple(out)
    if kind == "F":
        out = []
        for j in range(r):
            if _res(b[j], n) == _res(i, n):
                exp = 0
                for k in range(j):
                    rk = _res(b[k], n)
                    if rk == _res(i, n):
                        exp -= 1
                    elif rk == _res(i + 1, n):
                        exp += 1
                out.append((b[:j] + (b[j] + 1,) + b[j + 1 :], LaurentPoly.v(exp)))
        return tuple(out)
    if kind in ("K", "Kinv"):
        count = sum(1 for t in b if _res(t, n) == _res(i, n))
        e = count if kind == "K" else -count
        return ((b, LaurentPoly.v(e)),)
    if kind == "R":
        return ((shift(b, 1), LaurentPoly.one()),)
    if kind == "Rinv":
        return ((shift(b, -1), LaurentPoly.one()),)
    if kind == "P":
        if weight_of(n, b) == sym.weight:
            return ((b, LaurentPoly.one()),)
        return ()
    if kind == "e":
        return tuple(
            (b[:j] + (b[j] - 1,) + b[j + 1 :], LaurentPoly.one())
            for j in range(r)
            if _res(b[j], n) == _res(i + 1, n)
        )
    if kind == "f":
        return tuple(
            (b[:j] + (b[j] + 1,) + b[j + 1 :], LaurentPoly.one())
            for j in range(r)
            if _res(b[j], n) == _res(i, n)
        )
    if kind == "H":
        count = sum(1 for t in b if _res(t, n) == _res(i, n))
        return ((b, LaurentPoly.const(count)),)
    raise ValueError(f"unknown symbol kind {kind!r}")


def act_symbol(n: int, sym: Sym, vec: Vector) -> Vector:
    out: Vector = {}
    for b, c in vec.items():
        for b2, c2 in _act_basis(n, sym, b):
            s = out.get(b2, LaurentPoly.zero()) + c * c2
            if s.is_zero():
                out.pop(b2, None)
            else:
                out[b2] = s
    return out


def act_word(n: int, word: Word, vec: Vector) -> Vector:
    """Apply a word of symbols, rightmost symbol first."""
    for sym in reversed(word):
        if not vec:
            return {}
        vec = act_symbol(n, sym, vec)
    return vec


def act_expr(n: int, expr: OperatorExpr, vec: Vector) -> Vector:
    out: Vector = {}
    for word, coeff in expr.terms.items():
        part = act_word(n, word, vec)
        for b, c in part.items():
            s = out.get(b, LaurentPoly.zero()) + c * coeff
            if s.is_zero():
                out.pop(b, None)
            else:
                out[b] = s
    return out


def act_expr_basis(n: int, expr: OperatorExpr, b: Basis) -> Vector:
    return act_expr(n, expr, {b: LaurentPoly.one()})


def vec_eq(a: Vector, b: Vector) -> bool:
    return a == b


def vec_sub(a: Vector, b: Vector) -> Vector:
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, LaurentPoly.zero()) - c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def render_basis(b: Basis) -> str:
    return "e[" + ",".join(str(t) for t in b) + "]"


def render_vector(vec: Vector) -> str:
    if not vec:
        return "0"
    return " + ".join(
        f"({vec[b].render()})*{render_basis(b)}" for b in sorted(vec)
    )


# -- window enumeration ---------------------------------------------------------


def window_basis(r: int, lo: int, hi: int) -> Iterator[Basis]:
    """All r-tuples with entries in [lo, hi]."""
    if hi < lo:
        raise ValueError("empty window")
    return product(range(lo, hi + 1), repeat=r)


def weight_space_basis(n: int, lam: Weight, lo: int, hi: int) -> list[Basis]:
    """Basis tuples with all indices in [lo, hi] and weight lambda.

    >>> weight_space_basis(3, Weight((1, 1, 0)), 1, 3)
    [(1, 2), (2, 1)]
    """
    if hi < lo:
        raise ValueError("empty window")
    r = lam.r
    out: list[Basis] = []
    values = list(range(lo, hi + 1))

    def rec(pos: int, remaining: list[int], acc: list[int]):
        if pos == r:
            out.append(tuple(acc))
            return
        for t in values:
            res = _res(t, n)
            if remaining[res - 1] > 0:
                remaining[res - 1] -= 1
                acc.append(t)
                rec(pos + 1, remaining, acc)
                acc.pop()
                remaining[res - 1] += 1

    rec(0, list(lam.parts), [])
    return out


# -- the Hecke-type endomorphisms of the omega weight space ----------------------


def tau(n: int, r: int, name: str, variant: str = "with-R") -> OperatorExpr:
    """The endomorphism of V_omega attached to a Hecke generator.

    ``name`` is one of 's<i>' (1 <= i <= r), 'rho', 'rho-inv'.  The two
    variants differ only for rho and rho-inv: 'with-R' uses the rotation
    generator R, 'R-free' replaces it by E/F chains which agree on the
    omega weight space.  's<r>' is the composite rho . s_1 . rho^-1.
    """
    if n <= r:
        raise ValueError("these endomorphisms require n > r")
    if variant not in ("with-R", "R-free"):
        raise ValueError(f"unknown variant {variant!r}")
    if name == "rho":
        syms = chain("E", range(r, n))
        if variant == "with-R":
            syms = syms + [Rinv]
        else:
            syms = syms + chain("E", range(r - 1, 0, -1)) + [E(n)]
        return OperatorExpr.word(syms)
    if name == "rho-inv":
        syms = chain("F", range(n, r, -1))
        if variant == "with-R":
            syms = syms + [R]
        else:
            syms = syms + chain("F", range(1, r + 1))
        return OperatorExpr.word(syms)
    if name.startswith("s"):
        i = int(name[1:])
        if 1 <= i < r:
            return OperatorExpr(
                {(F(i), E(i)): LaurentPoly.v(1), (): LaurentPoly.const(-1)}
            )
        if i == r:
            return (
                tau(n, r, "rho", variant)
                * tau(n, r, "s1", variant)
                * tau(n, r, "rho-inv", variant)
            )
    raise ValueError(f"unknown endomorphism name {name!r}")


def omega_window_basis(n: int, r: int, lo: int, hi: int) -> list[Basis]:
    return weight_space_basis(n, omega(n, r), lo, hi)
