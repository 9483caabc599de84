from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aschur.ring import (
    LaurentPoly,
    gauss_binom,
    quantum_fact,
    quantum_int,
    signed_quantum_int,
    specialize,
)

V = LaurentPoly.v()
ONE = LaurentPoly.one()


def naive_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Independent convolution routine for cross-checking products."""
    out: dict[int, Fraction] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
    return LaurentPoly(out)


def pascal_binom(m: int, t: int) -> LaurentPoly:
    """Balanced q-Pascal recurrence, as an oracle for gauss_binom."""
    if t == 0:
        return ONE
    if m <= 0:
        # fall back on the defining product for the base row
        return gauss_binom(m, t)
    return LaurentPoly.v(m - t) * pascal_binom(m - 1, t - 1) + LaurentPoly.v(
        -t
    ) * pascal_binom(m - 1, t)


laurents = st.builds(
    lambda items: LaurentPoly({e: c for e, c in items}),
    st.lists(
        st.tuples(st.integers(-6, 6), st.integers(-9, 9)), min_size=0, max_size=5
    ),
)


def test_difference_of_squares():
    assert (V + 1) * (V - 1) == V * V - 1


def test_additive_identity():
    p = V**3 - 2 * V + LaurentPoly.v(-2)
    assert p + LaurentPoly.zero() == p


def test_square_of_v_plus_vinv():
    p = V + V.bar()
    expected = LaurentPoly({2: 1, 0: 2, -2: 1})
    assert p * p == expected
    assert naive_mul(p, p) == expected


@settings(max_examples=1000, deadline=None)
@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == naive_mul(a, b)


def test_quantum_int_basics():
    assert quantum_int(0).is_zero()
    assert quantum_int(1) == ONE
    assert quantum_int(2) == V + V.bar()
    assert signed_quantum_int(-3) == -quantum_int(3)


def test_quantum_fact():
    assert quantum_fact(1) == ONE
    # frozen from multiplying [2]*[3] with the naive convolution routine
    expected = naive_mul(quantum_int(2), quantum_int(3))
    assert quantum_fact(3) == expected
    assert expected == LaurentPoly({3: 1, 1: 2, -1: 2, -3: 1})


def test_gauss_binom_edges():
    for m in range(0, 7):
        assert gauss_binom(m, 0) == ONE
    assert gauss_binom(2, 2) == ONE
    for t in range(1, 5):
        for m in range(0, t):
            assert gauss_binom(m, t).is_zero()


def test_gauss_binom_pascal_oracle():
    for m in range(0, 8):
        for t in range(0, 8):
            assert gauss_binom(m, t) == pascal_binom(m, t), (m, t)
    assert gauss_binom(4, 2) == LaurentPoly({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})


def test_binomial_factorial_identity():
    for m in range(0, 9):
        for t in range(0, m + 1):
            lhs = gauss_binom(m, t) * quantum_fact(t) * quantum_fact(m - t)
            assert lhs == quantum_fact(m), (m, t)


def test_bar_invariance():
    for m in range(0, 7):
        assert quantum_int(m).bar() == quantum_int(m)
        assert quantum_fact(m).bar() == quantum_fact(m)
        for t in range(0, 5):
            assert gauss_binom(m, t).bar() == gauss_binom(m, t)


def test_specialize():
    assert specialize(V + V.bar(), 1) == 2
    q = LaurentPoly.q()
    assert specialize(q - 1, 1) == 0
    assert specialize(quantum_int(5), 1) == 5
    two = Fraction(2)
    assert specialize(quantum_int(5), two) == (two**5 - two**-5) / (two - two**-1)
    with pytest.raises(ZeroDivisionError):
        specialize(V, 0)


def test_exact_div():
    num = quantum_int(2) * quantum_int(3)
    assert num.exact_div(quantum_int(2)) == quantum_int(3)
    with pytest.raises(ValueError):
        (V + 1).exact_div(V + V.bar())


def test_render_modes():
    p = LaurentPoly({2: 1, 0: 2, -2: 1})
    assert p.render() == "v^2 + 2 + v^-2"
    assert p.render("q") == "q + 2 + q^-1"
    with pytest.raises(ValueError):
        (V + 1).render("q")
    assert p.structured() == [[2, 1, 1], [0, 2, 1], [-2, 1, 1]]
