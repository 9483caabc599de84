"""Periodic matrices indexing the Schur basis.

Pairs of weights with a minimal double-coset representative correspond
to ZZ x ZZ periodic nonnegative matrices with prescribed row and column
sums; the statistic d_A rescales one natural basis into the other.
"""
from aschur import AffinePerm, Weight, coset_from_matrix, matrix_from_coset, omega
from aschur.latmat import PeriodicMatrix, bracket_coefficient, d_stat, is_aperiodic, row_col_sums

n, r = 3, 2
om = omega(n, r)

print("The identity coset gives the diagonal matrix of the weight:")
a = matrix_from_coset(om, om, AffinePerm.identity(r))
print(a.render())
print(f"  d_A = {d_stat(a)}   [A]-scalar = {bracket_coefficient(a).render()}")

print("\nA rotation produces an off-diagonal band:")
b = matrix_from_coset(om, om, AffinePerm.rho(r))
print(b.render())
rows, cols = row_col_sums(b)
print(f"  row sums {rows.parts}, column sums {cols.parts}, d_A = {d_stat(b)}")

print("\nRound trip back to the coset datum:")
lam, mu, d = coset_from_matrix(b)
print(f"  lambda={lam.render()} mu={mu.render()} d={d.render()}")

print("\nWith n > r every such matrix is aperiodic:")
print(f"  aperiodic: {is_aperiodic(b)}")

print("\nAt n = r the constant off-diagonal is the classic failure:")
c = PeriodicMatrix.from_dict(2, 2, {(1, 2): 1, (2, 3): 1})
print(c.render())
print(f"  aperiodic: {is_aperiodic(c)}")
