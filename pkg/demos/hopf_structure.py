"""A tour of sNSym in the H basis: coproducts, antipodes and primitives."""

from superhopf import H, antipode_closed, antipode_recursive, coproduct, is_primitive, power_sum, psi
from superhopf.snsym import power_sum_tilde

# Generators H_n are bosonic, H_nd fermionic; a dotted generator splits into
# one dotted and one undotted half.
print("Delta H[(2)]   =", coproduct(H("(2)")))
print("Delta H[(1d)]  =", coproduct(H("(1d)")))

# On words the coproduct is multiplicative with the Koszul sign, so the mixed
# terms of H[(0d,0d)] cancel.
print("Delta H[(0d,0d)] =", coproduct(H("(0d,0d)")))

# The closed antipode sums over refinements of the reversed index.
x = H("(1d,2)")
print("S(H[(1d,2)])   =", antipode_closed(x))
assert antipode_closed(x) == antipode_recursive(x)

# Primitive families.
for n in range(4):
    print(f"Psi_{n} ({len(psi(n))} terms) =", psi(n))
    assert is_primitive(psi(n))
print("P_3  =", power_sum(3))
print("Pt_1 =", power_sum_tilde(1))
