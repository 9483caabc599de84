"""The verification engine: relation suites checked exactly on windows.

Each relation instance is a pair of operator words evaluated on every
basis tensor of a finite window; pass means the difference vanishes
identically there.  A deliberately corrupted relation demonstrates what
failure looks like.
"""
from aschur.present import (
    cancellation,
    factor_En,
    q15_instance,
    run_suite,
    verify_identity,
    zeta,
)
from aschur.tensor import act_expr_basis, render_vector
from aschur.weights import Weight

n, r = 3, 2

print("The defining presentation suite (finite window, exact):")
for rep in run_suite("schur-presentation", n, r):
    print(" ", rep.line())

print("\nNegative control: the same relation with a corrupted scalar:")
rep = verify_identity(n, r, q15_instance(n, r, corrupt=True))
print(" ", rep.line())

print("\nA slice of the idempotented suite:")
for rep in run_suite("idempotented", n, r)[:5]:
    print(" ", rep.line())

print("\nThe omega-anchored Hecke generator images and their relations:")
for rep in run_suite("zeta", n, r):
    print(" ", rep.line())

print("\nThe cancellation scalar, closed form:")
lam = Weight((0, 2, 1))
z = cancellation(lam, 1, 2, "FE")
print(f"  F1^2 E1^2 1_{lam.render()} = ({z.render()}) 1_{lam.render()}")

print("\nPulling E_n across a weight with the transport monomial:")
res = factor_En(4, 3, Weight((2, 1, 0, 0)))
print(f"  holds: {res.holds}   scalar z = {res.z.render()}")
print(f"  monomial: {res.m.render()}")
