"""Projecting to symmetric functions in superspace and the ribbon basis there."""

from superhopf import H, project_pi, r_basis_independence, ribbon_super_to_h, super_special
from superhopf.compositions import superpartitions_of_degree

# Fermionic generators anticommute, so sorting costs a sign and repeats vanish.
print("pi H[(1d,2,3,2d,3,1,4d)] =", project_pi(H("(1d,2,3,2d,3,1,4d)")))
print("pi H[(0d,0d)]            =", project_pi(H("(0d,0d)")))

print("r[(0d,1,2d,1)] =", ribbon_super_to_h("(0d,1,2d,1)"))

for n in range(3):
    print(f"pt_{n} =", super_special("pt", n))

# Ribbons indexed by superpartitions form a basis, degree by degree.
for n in range(1, 7):
    k = len(superpartitions_of_degree(n))
    print(f"degree {n}: {k} superpartitions, independent: {r_basis_independence(n)}")
