import pytest

from superhopf import verify
from superhopf.compositions import Composition
from superhopf.snsym import H, coproduct
from superhopf.trees import (
    Forest,
    InadmissibleCut,
    LadderTree,
    TreeCut,
    admissible_cuts,
    composition_of,
    cut_split,
    forest_of,
    format_cut,
    parse_cut,
    tree_coproduct,
    tree_cuts,
)


def test_forest_of_examples():
    assert forest_of("(2)").trees == (LadderTree(2, False),)
    t = forest_of("(0d)").trees[0]
    assert t.coloured and t.degree == 1
    assert forest_of("()").trees == ()
    assert str(forest_of("(2d,0d,2)")) == "t[(2d,0d,2)]"


def test_cut_counts():
    assert len(admissible_cuts(forest_of("(2)"))) == 3
    assert len(admissible_cuts(forest_of("(0d)"))) == 2
    assert len(admissible_cuts(forest_of("(1,1)"))) == 4
    for n in range(5):
        assert len(tree_cuts(LadderTree(n, False))) == n + 1
        assert len(tree_cuts(LadderTree(n, True))) == 2 * (n + 1)
    f = forest_of("(2d,1,0d)")
    assert len(admissible_cuts(f)) == 6 * 2 * 2


def test_empty_cut():
    f = forest_of("(1d,2)")
    p, r, s = cut_split(f, admissible_cuts(f)[0])
    assert composition_of(p) == Composition(()) and composition_of(r) == Composition.parse("(1d,2)") and s == 1


def test_worked_sign_example():
    f = forest_of("(2d,0d,2,3d,1d)")
    p, r, s = cut_split(f, "[-,0,-,0,0]")
    assert s == -1
    assert str(p) == "t[(0d,0d,0d)]" and str(r) == "t[(2d,2,3,1)]"


def test_full_root_cut():
    f = forest_of("(2,1d)")
    p, r, s = cut_split(f, "[1,0+1]")
    assert composition_of(p) == Composition.parse("(2,1d)") and composition_of(r) == Composition(()) and s == 1


def test_cut_literals():
    cut = parse_cut("[-,0,2,0+1]")
    assert cut == (TreeCut(), TreeCut(None, True), TreeCut(2, False), TreeCut(1, True))
    assert format_cut(cut) == "[-,0,2,0+1]"
    with pytest.raises(InadmissibleCut):
        parse_cut("[1+2]")


def test_inadmissible_cuts_rejected():
    f = forest_of("(2)")
    with pytest.raises(InadmissibleCut):
        cut_split(f, "[0]")
    with pytest.raises(InadmissibleCut):
        cut_split(f, "[3]")
    with pytest.raises(InadmissibleCut):
        cut_split(f, "[-,-]")


def test_tree_coproduct_examples():
    for a in ["(2)", "(0d,0d)", "(1d)"]:
        assert tree_coproduct(a) == coproduct(H(a))
    assert len(tree_coproduct("(0d,0d)")) == 2
    assert len(tree_coproduct("(1d)")) == 4


def test_tree_coproduct_exhaustive():
    rep = verify.run("tree-coproduct", 5)
    assert rep.ok, rep.failures


def test_sign_multiplicative_without_interleaving():
    a, b = forest_of("(1d,0d)"), forest_of("(2,1d)")
    ab = Forest(a.trees + b.trees)
    for ca in admissible_cuts(a):
        for cb in admissible_cuts(b):
            _, _, sa = cut_split(a, ca)
            _, _, sb = cut_split(b, cb)
            _, _, sab = cut_split(ab, ca + cb)
            # coloured nodes of b interleave only if some of a's stay in R while b's go to P
            a_in_r = sum(1 for t, c in zip(a.trees, ca) if t.coloured and not c.coloured)
            b_in_p = sum(1 for t, c in zip(b.trees, cb) if t.coloured and c.coloured)
            assert sab == sa * sb * (-1) ** (a_in_r * b_in_p)
