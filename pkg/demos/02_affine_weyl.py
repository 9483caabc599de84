"""The extended affine Weyl group in window notation.

Group elements are periodic permutations of the integers, stored as
rho^z * w with w in the affine Weyl group recorded by its window
((1)w, ..., (r)w).  Maps act on the right.
"""
from aschur import AffinePerm, ParabolicIndex
from aschur.aweyl import (
    coset_decompose,
    double_coset_min,
    enumerate_parabolic,
    enumerate_up_to_length,
    semidirect_decompose,
)

r = 3
s1, s2, s3 = (AffinePerm.s(r, i) for i in (1, 2, 3))
rho = AffinePerm.rho(r)

print("Generators and the rotation:")
for name, w in (("s1", s1), ("s2", s2), ("s3", s3), ("rho", rho)):
    print(f"  {name:3} = {w.render()}  images {w.images()}")

print("\nThe rotation conjugates the generators cyclically:")
print(f"  rho s2 rho^-1 == s1: {rho * s2 * rho.inverse() == s1}")

print("\nLengths and reduced words (the rho part is free):")
for w in (s1 * s2, s1 * s2 * s1, rho * s1 * s3, AffinePerm(r, 0, (0, 2, 4))):
    print(f"  {w.render():22}  length {w.length()}  word {w.reduced_word()}")

print("\nParabolic decomposition w = w_pi * w^pi with additive lengths:")
pi = ParabolicIndex.make(r, [1])
w = s1 * s2
par, dist = coset_decompose(w, pi, "left")
print(f"  w = {w.render()}  ->  {par.render()} * {dist.render()}")

print("\nMinimal double coset representative:")
d = double_coset_min(s1, pi, pi)
print(f"  min of W_pi s1 W_pi is the identity: {d.is_identity()}")

print("\nParabolic subgroups are finite:")
print(f"  |W_(1)|   = {len(enumerate_parabolic(ParabolicIndex.make(r, [1])))}")
print(f"  |W_(1,2)| = {len(enumerate_parabolic(ParabolicIndex.make(r, [1, 2])))}")

print("\nLength census of the affine Weyl group (z = 0), r = 3:")
from collections import Counter

census = Counter(enumerate_up_to_length(r, 5).values())
print("  ", dict(sorted(census.items())))

print("\nSemidirect decomposition: finite part times translation:")
w = rho * rho * s1
s, t = semidirect_decompose(w)
print(f"  {w.render()} = {s.render()} * translation {[t.apply(i) - i for i in (1, 2, 3)]}")
