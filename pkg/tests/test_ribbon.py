from hypothesis import given

from conftest import compositions, parts, small_compositions
from superhopf import verify
from superhopf.compositions import Composition, enumerate_degree, odot, up_set
from superhopf.linalg import LinComb, parse_element
from superhopf.ribbon import R, h_to_ribbon, ribbon_product, ribbon_to_h, to_h, to_ribbon
from superhopf.snsym import elementary, elementary_tilde, power_sum, power_sum_tilde, psi

E = parse_element


def C(parts):
    return Composition(parts)


def ones(k):
    return [1] * k


def test_ribbon_to_h_examples():
    assert ribbon_to_h("(3)") == E("H[(3)]")
    assert ribbon_to_h("(1,1)") == E("H[(1,1)] - H[(2)]")
    assert ribbon_to_h("(1,0d)") == E("H[(1,0d)] - H[(1d)]")


def test_h_to_ribbon_examples():
    assert h_to_ribbon("(2)") == E("R[(2)]")
    assert h_to_ribbon("(1,1)") == E("R[(1,1)] + R[(2)]")
    assert h_to_ribbon("(0d,0d)") == E("R[(0d,0d)]")


def test_round_trip_degree_six():
    for n in range(7):
        for a in enumerate_degree(n):
            assert to_ribbon(ribbon_to_h(a)) == R(a)
            assert to_h(h_to_ribbon(a)) == E(f"H[{a}]")


def test_ribbon_product_examples():
    assert ribbon_product("(0d)", "(0d)") == E("R[(0d,0d)]")
    assert ribbon_product("(1)", "(0d)") == E("R[(1,0d)] + R[(1d)]")
    assert ribbon_product("(1,1)", "(2,1)") == E("R[(1,1,2,1)] + R[(1,3,1)]")
    assert R("(1)") * R("(0d)") == ribbon_product("(1)", "(0d)")


def test_ribbon_product_exhaustive():
    rep = verify.run("thm-6-2", 5)
    assert rep.ok, rep.failures


@given(small_compositions(3), small_compositions(3), small_compositions(3))
def test_ribbon_product_associative(a, b, c):
    x, y, z = R(a), R(b), R(c)
    assert (x * y) * z == x * (y * z)


def test_special_functions_in_ribbons():
    for n in range(7):
        assert psi(n) == ribbon_to_h(C(ones(n) + ["0d"])).scale((-1) ** n)
        if n:
            assert ribbon_to_h(C(ones(n))) == elementary(n)
            p = sum((R(C(ones(k) + [n - k])).scale((-1) ** k) for k in range(n)), LinComb("R"))
            assert to_h(p) == power_sum(n)


def test_elementary_tilde_in_ribbons():
    for n in range(1, 6):
        st = LinComb("R")
        for k in range(n + 1):
            st = st + R(C(ones(k) + ["0d"] + ones(n - k)))
        for k in range(1, n + 1):
            st = st + R(C(ones(k - 1) + ["1d"] + ones(n - k)))
        assert to_h(st) == elementary_tilde(n)


def test_power_sum_tilde_in_ribbons():
    for n in range(1, 6):
        x = R(C(["0d", n])).scale(-1) + R(C(ones(n) + ["0d"])).scale((-1) ** n)
        for k in range(1, n):
            s = (-1) ** (k + 1)
            for i in range(1, k + 1):
                x = x + R(C(ones(i - 1) + ["1d"] + ones(k - i) + [n - k])).scale(s)
            for i in range(k + 1):
                x = x + R(C(ones(i) + ["0d"] + ones(k - i) + [n - k])).scale(s)
        assert to_h(x) == power_sum_tilde(n).scale(n + 1)


@given(compositions(3), parts())
def test_cover_set_of_appended_part(a, x):
    xs = Composition((x,))
    got = up_set(a + xs)
    ups = up_set(a)
    if not x.dotted:
        want = {b + xs for b in ups} | {odot(b, xs) for b in ups if b}
    elif a and a[-1].dotted:
        want = {b + xs for b in ups}
    else:
        want = {b + xs for b in ups} | {odot(b, xs) for b in ups if b and not b[-1].dotted}
    assert got == want
