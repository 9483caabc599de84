import random

from aschur.operators import E, F, K, Kinv, OperatorExpr, R, Rinv, cH, ce, cf
from aschur.ring import LaurentPoly, signed_quantum_int
from aschur.tensor import (
    act_expr_basis,
    act_symbol,
    act_word,
    omega_window_basis,
    shift,
    tau,
    weight_of,
    weight_space_basis,
    window_basis,
)
from aschur.weights import Weight, omega

ONE = LaurentPoly.one()
V = LaurentPoly.v()


def unit(b):
    return {tuple(b): ONE}


def test_single_factor_actions():
    # n=3, r=1
    assert act_expr_basis(3, OperatorExpr.word([K(1)]), (1,)) == {(1,): V}
    assert act_expr_basis(3, OperatorExpr.word([K(2)]), (1,)) == unit((1,))
    assert act_expr_basis(3, OperatorExpr.word([E(1)]), (2,)) == unit((1,))
    assert act_expr_basis(3, OperatorExpr.word([E(1)]), (1,)) == {}
    assert act_expr_basis(3, OperatorExpr.word([F(1)]), (1,)) == unit((2,))
    assert act_expr_basis(3, OperatorExpr.word([R]), (5,)) == unit((6,))


def test_coproduct_examples():
    # n=3, r=2
    assert act_expr_basis(3, OperatorExpr.word([E(1)]), (1, 2)) == unit((1, 1))
    assert act_expr_basis(3, OperatorExpr.word([R]), (1, 2)) == unit((2, 3))
    # the twist: E_1 on (2, 2) sees K_1 K_2^-1 on the trailing factor
    out = act_expr_basis(3, OperatorExpr.word([E(1)]), (2, 2))
    assert out == {(1, 2): V.bar(), (2, 1): ONE}
    out = act_expr_basis(3, OperatorExpr.word([F(1)]), (1, 1))
    assert out == {(2, 1): ONE, (1, 2): V.bar()}


def test_weight_of():
    assert weight_of(3, (1, 2)).parts == (1, 1, 0)
    assert weight_of(3, (1, 4)).parts == (2, 0, 0)
    assert weight_of(4, (2, 3, 4)).parts == (0, 1, 1, 1)


def test_weight_transport():
    rng = random.Random(3)
    n, r = 4, 3
    for _ in range(60):
        b = tuple(rng.randint(-3, 7) for _ in range(r))
        lam = weight_of(n, b)
        for i in range(1, n + 1):
            for sym, c in ((E(i), 1), (F(i), -1)):
                out = act_symbol(n, sym, unit(b))
                for b2 in out:
                    expected = list(lam.parts)
                    expected[(i - 1) % n] += c
                    expected[i % n] -= c
                    assert weight_of(n, b2).parts == tuple(expected)


def test_shift_equivariance():
    rng = random.Random(5)
    n, r = 3, 2
    syms = [E(1), E(2), E(3), F(1), F(2), F(3), K(1), Kinv(2), R, Rinv]
    for _ in range(80):
        b = tuple(rng.randint(-4, 8) for _ in range(r))
        for sym in syms:
            lhs = act_symbol(n, sym, unit(shift(b, n)))
            rhs = {shift(bb, n): c for bb, c in act_symbol(n, sym, unit(b)).items()}
            assert lhs == rhs


def test_commutator_matches_k_difference():
    # (E_i F_i - F_i E_i) b = [lam_i - lam_{i+1}] b, via exact division
    n, r = 3, 2
    vminus = LaurentPoly({1: 1, -1: -1})
    for b in window_basis(r, -1, 4):
        lam = weight_of(n, b)
        for i in range(1, n + 1):
            word_lhs = OperatorExpr.word([E(i), F(i)]) - OperatorExpr.word([F(i), E(i)])
            lhs = act_expr_basis(n, word_lhs, b)
            ktop = act_expr_basis(
                n, OperatorExpr.word([K(i), Kinv(i % n + 1)]), b
            )[b]
            kbot = act_expr_basis(
                n, OperatorExpr.word([Kinv(i), K(i % n + 1)]), b
            )[b]
            scalar = (ktop - kbot).exact_div(vminus) if ktop != kbot else LaurentPoly.zero()
            expected = {b: scalar} if not scalar.is_zero() else {}
            assert lhs == expected
            assert scalar == signed_quantum_int(lam.entry(i) - lam.entry(i + 1))


def test_act_word_composition():
    n = 3
    w1 = (E(1), F(2))
    w2 = (K(3), R)
    b = (1, 2)
    lhs = act_word(n, w1 + w2, unit(b))
    rhs = act_word(n, w1, act_word(n, w2, unit(b)))
    assert lhs == rhs
    assert act_word(n, (), unit(b)) == unit(b)
    assert act_expr_basis(n, OperatorExpr.word([K(1), Kinv(1)]), b) == unit(b)


def test_weight_space_basis():
    assert weight_space_basis(3, omega(3, 2), 1, 3) == [(1, 2), (2, 1)]
    assert weight_space_basis(3, Weight((2, 0, 0)), 1, 3) == [(1, 1)]
    assert weight_space_basis(3, Weight((0, 0, 2)), 1, 2) == []
    count = len(weight_space_basis(4, Weight((0, 1, 1, 1)), 1, 4))
    assert count == 6  # arrangements of {2,3,4}


def test_tau_examples():
    t1 = tau(3, 2, "s1")
    assert act_expr_basis(3, t1, (1, 2)) == {(2, 1): V}
    trho = tau(3, 2, "rho")
    trhoi = tau(3, 2, "rho-inv")
    prod = trho * trhoi
    prod2 = trhoi * trho
    for b in omega_window_basis(3, 2, -3, 6):
        assert act_expr_basis(3, prod, b) == unit(b)
        assert act_expr_basis(3, prod2, b) == unit(b)


def test_tau_preserves_omega_space():
    om = omega(3, 2).parts
    for name in ("s1", "s2", "rho", "rho-inv"):
        op = tau(3, 2, name)
        for b in omega_window_basis(3, 2, -3, 6):
            for bb in act_expr_basis(3, op, b):
                assert weight_of(3, bb).parts == om, (name, b, bb)


def test_tau_variants_agree_on_omega():
    for n, r in ((3, 2), (4, 3)):
        for name in ("rho", "rho-inv", f"s{r}"):
            a = tau(n, r, name, "with-R")
            b = tau(n, r, name, "R-free")
            for vb in omega_window_basis(n, r, -2, n + 3):
                assert act_expr_basis(n, a, vb) == act_expr_basis(n, b, vb), (n, r, name, vb)


def test_classical_action():
    n = 3
    assert act_expr_basis(n, OperatorExpr.word([cH(1)]), (1, 2)) == unit((1, 2))
    assert act_expr_basis(n, OperatorExpr.word([ce(1)]), (1, 2)) == unit((1, 1))
    out = act_expr_basis(n, OperatorExpr.word([ce(1)]), (2, 2))
    assert out == {(1, 2): ONE, (2, 1): ONE}  # no twist classically


def test_classical_commutator():
    n, r = 3, 2
    rng = random.Random(11)
    lhs_word = OperatorExpr.word([ce(1), cf(1)]) - OperatorExpr.word([cf(1), ce(1)])
    rhs_word = OperatorExpr.word([cH(1)]) - OperatorExpr.word([cH(2)])
    for _ in range(50):
        b = tuple(rng.randint(-2, 6) for _ in range(r))
        assert act_expr_basis(n, lhs_word, b) == act_expr_basis(n, rhs_word, b)
