import itertools
import random

import pytest

from aschur.aweyl import AffinePerm, enumerate_up_to_length
from aschur.hecke import t_element, x_lambda, young_parabolic
from aschur.ring import LaurentPoly
from aschur.schur import (
    BasisExpansionError,
    SchurBasisIndex,
    SchurElement,
    expand_in_basis,
    finite_subalgebra_check,
    hecke_embed,
    identity_element,
    phi_value,
)
from aschur.weights import Weight, all_weights, omega

Q = LaurentPoly.q()


def test_young_subgroup():
    assert young_parabolic(omega(3, 2)).gens == frozenset()
    assert young_parabolic(Weight((2, 1, 0))).gens == {1}
    assert young_parabolic(Weight((3, 0, 0))).gens == {1, 2}
    assert young_parabolic(Weight((1, 2, 1))).gens == {2}


def test_phi_value_examples():
    om = omega(3, 2)
    e = AffinePerm.identity(2)
    assert phi_value(SchurBasisIndex(om, om, e)) == t_element(e)
    lam = Weight((2, 0, 0))
    val = phi_value(SchurBasisIndex(lam, lam, e))
    assert val == t_element(e) + t_element(AffinePerm.s(2, 1))
    s1 = AffinePerm.s(2, 1)
    assert phi_value(SchurBasisIndex(om, om, s1)) == t_element(s1)


def test_phi_rejects_nonminimal_d():
    lam = Weight((2, 0, 0))
    s1 = AffinePerm.s(2, 1)
    with pytest.raises(ValueError):
        SchurBasisIndex(lam, lam, s1)
    idx = SchurBasisIndex.make(lam, lam, s1)  # normalized instead
    assert idx.d.is_identity()


def test_block_structure():
    om = omega(3, 2)
    lam = Weight((2, 0, 0))
    e = AffinePerm.identity(2)
    a = SchurElement.basis(SchurBasisIndex(om, lam, e))
    b = SchurElement.basis(SchurBasisIndex(om, om, e))
    assert (a * a).is_zero()  # middle weights lam != om
    assert not (a * SchurElement.basis(SchurBasisIndex(lam, om, e))).is_zero()
    assert (b * a) == a


def test_unit_acts_on_blocks():
    om = omega(3, 2)
    lam = Weight((2, 0, 0))
    e = AffinePerm.identity(2)
    unit_block = SchurElement.basis(SchurBasisIndex(lam, lam, e))
    x = SchurElement.basis(SchurBasisIndex(lam, om, e))
    assert unit_block * x == x


def test_q17_example():
    # the worked product: phi^1_{om,lam} phi^1_{lam,om} with lam = (2,0,0)
    om = omega(3, 2)
    lam = Weight((2, 0, 0))
    e = AffinePerm.identity(2)
    prod = SchurElement.basis(SchurBasisIndex(om, lam, e)) * SchurElement.basis(
        SchurBasisIndex(lam, om, e)
    )
    expected = SchurElement(3, 2, {
        SchurBasisIndex(om, om, e): LaurentPoly.one(),
        SchurBasisIndex(om, om, AffinePerm.s(2, 1)): LaurentPoly.one(),
    })
    assert prod == expected


def test_quadratic_in_omega_block():
    om = omega(3, 2)
    s1 = AffinePerm.s(2, 1)
    phis = SchurElement.basis(SchurBasisIndex(om, om, s1))
    phione = SchurElement.basis(SchurBasisIndex(om, om, AffinePerm.identity(2)))
    assert phis * phis == phione.scaled(Q) + phis.scaled(Q - 1)


def test_identity_element():
    unit = identity_element(3, 2)
    assert len(unit.terms) == len(all_weights(3, 2)) == 6
    rng = random.Random(9)
    elems = list(enumerate_up_to_length(2, 3))
    weights = all_weights(3, 2)
    for _ in range(50):
        lam, mu = rng.choice(weights), rng.choice(weights)
        d = AffinePerm.identity(2)
        while True:
            cand = rng.choice(elems).mul_rho_left(rng.randint(-1, 1))
            from aschur.aweyl import double_coset_min

            d = double_coset_min(cand, young_parabolic(lam), young_parabolic(mu))
            break
        x = SchurElement.basis(SchurBasisIndex(lam, mu, d))
        assert unit * x == x
        assert x * unit == x


def test_hecke_embedding_is_multiplicative_small():
    n, r = 3, 2
    elems = [w.mul_rho_left(z)
             for w in enumerate_up_to_length(r, 3) for z in (-1, 0, 1)]
    for u, v in itertools.product(elems, elems):
        lhs = hecke_embed(t_element(u) * t_element(v), n)
        rhs = hecke_embed(t_element(u), n) * hecke_embed(t_element(v), n)
        assert lhs == rhs, (u.render(), v.render())


def test_embed_examples_and_finite_check():
    n, r = 3, 2
    e = AffinePerm.identity(r)
    om = omega(n, r)
    assert hecke_embed(t_element(e), n) == SchurElement.basis(SchurBasisIndex(om, om, e))
    assert finite_subalgebra_check(AffinePerm.s(r, 1))
    assert not finite_subalgebra_check(AffinePerm.rho(r))
    assert not finite_subalgebra_check(AffinePerm.s(r, 2))  # affine generator
    with pytest.raises(ValueError):
        hecke_embed(t_element(e), 1)


def test_associativity_small():
    n, r = 3, 2
    e = AffinePerm.identity(r)
    om = omega(n, r)
    lam = Weight((2, 0, 0))
    mu = Weight((1, 0, 1))
    idxs = [
        SchurBasisIndex(om, om, AffinePerm.s(r, 1)),
        SchurBasisIndex(om, lam, e),
        SchurBasisIndex(lam, om, e),
        SchurBasisIndex(lam, lam, e),
        SchurBasisIndex(mu, lam, SchurBasisIndex.make(mu, lam, AffinePerm.s(r, 2)).d),
        SchurBasisIndex(om, om, AffinePerm.rho(r)),
    ]
    basis = [SchurElement.basis(i) for i in idxs]
    for a, b, c in itertools.product(basis, repeat=3):
        assert (a * b) * c == a * (b * c)


def test_expansion_remainder_guard():
    # a Hecke element that is not a combination of double-coset sums
    lam = Weight((2, 0, 0))
    bad = t_element(AffinePerm.s(2, 1))  # missing its coset partner T_1
    with pytest.raises(BasisExpansionError):
        expand_in_basis(lam, lam, bad)


def test_phi_value_matches_x_lambda_action():
    # phi^1_{lam,mu}(x_mu) agrees with x_lam * h for its right generator
    om = omega(3, 2)
    lam = Weight((2, 0, 0))
    e = AffinePerm.identity(2)
    val = phi_value(SchurBasisIndex(lam, lam, e))
    assert val == x_lambda(lam)
    val2 = phi_value(SchurBasisIndex(lam, om, e))
    assert val2 == x_lambda(lam)
