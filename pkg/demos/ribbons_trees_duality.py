"""Ribbon functions, the forest picture of the coproduct, and the dual sQSym."""

from superhopf import R, ribbon_product, ribbon_to_h, tree_coproduct, coproduct, H
from superhopf.sqsym import L, l_coproduct, l_from_m, m_product, pairing
from superhopf.trees import admissible_cuts, cut_split, forest_of, format_cut

# Products of ribbons never need the H basis.
print("R[(1)] R[(0d)]    =", ribbon_product("(1)", "(0d)"))
print("R[(0d)] R[(0d)]   =", ribbon_product("(0d)", "(0d)"))
print("R[(1,0d)] in H    =", ribbon_to_h("(1,0d)"))

# Each admissible cut of the ladder forest gives one signed coproduct term.
f = forest_of("(1d,0d)")
for cut in admissible_cuts(f):
    p, r, s = cut_split(f, cut)
    print(f"  cut {format_cut(cut):10s} sign {s:+d}  {p} (x) {r}")
assert tree_coproduct("(1d,0d)") == coproduct(H("(1d,0d)"))

# The dual side: M products come from coproduct coefficients, L coproducts
# from horizontal and vertical splits of the ribbon.
print("M[(1)] M[(0d)]    =", m_product("(1)", "(0d)"))
print("L[(1d)] in M      =", l_from_m("(1d)"))
print("Delta L[(1,3d,2)] has", len(l_coproduct("(1,3d,2)")), "terms")
print("<R[(1,0d)], L[(1,0d)]> =", pairing(R("(1,0d)"), L("(1,0d)")))
