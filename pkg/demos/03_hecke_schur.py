"""The affine Hecke algebra on the T basis, and the q-Schur algebra on phi.

T_w multiplication folds reduced words with the quadratic rule
T_s^2 = q + (q-1) T_s; Schur products evaluate on x_mu, multiply in the
Hecke algebra, and re-expand double-coset sums with exact bookkeeping.
"""
from aschur import (
    AffinePerm,
    SchurBasisIndex,
    SchurElement,
    Weight,
    hecke_embed,
    omega,
    phi_value,
    t_element,
    x_lambda,
)
from aschur.ring import LaurentPoly
from aschur.schur import identity_element

r, n = 2, 3
e = AffinePerm.identity(r)
s1 = AffinePerm.s(r, 1)
rho = AffinePerm.rho(r)

print("The quadratic relation in the T basis:")
ts = t_element(s1)
print(f"  T_s1 * T_s1 = {(ts * ts).render()}")

print("\nRotation conjugation at the Hecke level:")
lhs = t_element(rho) * t_element(AffinePerm.s(r, 2)) * t_element(rho.inverse())
print(f"  T_rho T_s2 T_rho^-1 = {lhs.render()}")

print("\nYoung-subgroup sums x_lambda:")
lam = Weight((2, 0, 0))
print(f"  x_(2,0,0) = {x_lambda(lam).render()}")

print("\nThe phi basis evaluates to double-coset sums:")
om = omega(n, r)
idx = SchurBasisIndex(lam, lam, e)
print(f"  phi[{lam.render()}|1|{lam.render()}](x) = {phi_value(idx).render()}")

print("\nA product in the Schur algebra (re-expanded exactly):")
a = SchurElement.basis(SchurBasisIndex(om, lam, e))
b = SchurElement.basis(SchurBasisIndex(lam, om, e))
print(f"  phi^1_om,lam * phi^1_lam,om = {(a * b).render()}")

print("\nThe unit is the sum of the block idempotents:")
unit = identity_element(n, r)
print(f"  {len(unit.terms)} terms; unit * a == a: {unit * a == a}")

print("\nThe Hecke algebra embeds through the omega block:")
h = t_element(s1) * t_element(rho)
img = hecke_embed(h, n)
both = hecke_embed(t_element(s1), n) * hecke_embed(t_element(rho), n)
print(f"  embed(T_s1 T_rho) == embed(T_s1) embed(T_rho): {img == both}")
