"""Exact scalars: Laurent polynomials in v, quantum integers and binomials.

Everything downstream is computed over ZZ[v, v^-1] (with exact rational
coefficients where divided powers demand them); q is always v^2.
"""
from fractions import Fraction

from aschur import LaurentPoly, gauss_binom, quantum_fact, quantum_int, specialize

v = LaurentPoly.v()

print("A Laurent polynomial and its square:")
p = v + v.bar()  # v + v^-1
print(f"  p       = {p.render()}")
print(f"  p^2     = {(p * p).render()}")

print("\nQuantum integers [m] = (v^m - v^-m)/(v - v^-1):")
for m in range(5):
    print(f"  [{m}]     = {quantum_int(m).render()}")

print("\nQuantum factorial and a Gaussian binomial:")
print(f"  [3]!    = {quantum_fact(3).render()}")
print(f"  [4 C 2] = {gauss_binom(4, 2).render()}")

print("\nThe factorization [m C t] [t]! [m-t]! = [m]! (m = 6, t = 2):")
lhs = gauss_binom(6, 2) * quantum_fact(2) * quantum_fact(4)
print(f"  both sides equal: {lhs == quantum_fact(6)}")

print("\nEverything is bar-invariant (v <-> v^-1):")
print(f"  [4 C 2] bar-symmetric: {gauss_binom(4, 2).bar() == gauss_binom(4, 2)}")

print("\nSpecialization at v = 1 recovers classical values:")
print(f"  [5] |_(v=1)     = {specialize(quantum_int(5), 1)}")
print(f"  [4 C 2] |_(v=1) = {specialize(gauss_binom(4, 2), 1)}")
print(f"  [3] |_(v=2)     = {specialize(quantum_int(3), Fraction(2))}")

print("\nq-mode rendering (all exponents even):")
q = LaurentPoly.q()
print(f"  q^2 - q + 1 = {(q * q - q + 1).render('q')}")
