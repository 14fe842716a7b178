
import pytest
from hypothesis import given

from conftest import small_compositions
from superhopf import verify
from superhopf.compositions import enumerate_degree
from superhopf.linalg import LinComb, TensorComb, parse_element, tensor
from superhopf.snsym import (
    H,
    antipode_closed,
    antipode_recursive,
    bracket,
    coproduct,
    counit,
    ctilde,
    df_of,
    elementary,
    elementary_tilde,
    expand_powersums,
    h_from_powersums,
    is_primitive,
    one,
    power_sum,
    power_sum_newton,
    power_sum_tilde,
    psi,
    psi_closed,
    psi_via_brackets,
)

E = parse_element
ZERO = LinComb("H")


def Hn(n):
    return one() if n == 0 else H(f"({n})")


def Ht(n):
    return H(f"({n}d)")


def T(a, b):
    return tensor(H(a) if isinstance(a, str) else a, H(b) if isinstance(b, str) else b)


def _upto(n):
    return [a for d in range(n + 1) for a in enumerate_degree(d)]


# -- product, coproduct, counit

def test_product_examples():
    assert H("(1)") * H("(0d)") == H("(1,0d)")
    assert one() * H("(2,1d)") == H("(2,1d)")
    assert (H("(1)") + H("(2)")) * H("(1d)") == E("H[(1,1d)] + H[(2,1d)]")


def test_coproduct_examples():
    assert coproduct(H("(2)")) == T("(2)", "()") + T("(1)", "(1)") + T("()", "(2)")
    assert coproduct(H("(1d)")) == T("(1d)", "()") + T("()", "(1d)") + T("(0d)", "(1)") + T("(1)", "(0d)")
    assert coproduct(H("(0d,0d)")) == T("(0d,0d)", "()") + T("()", "(0d,0d)")


def test_counit_examples():
    assert counit(one()) == 1
    assert counit(H("(3)")) == 0
    assert counit(one().scale(2) + H("(1d)")) == 2


def test_generator_coproduct_formula():
    for n in range(6):
        want = TensorComb(("H", "H"))
        for k in range(n + 1):
            want = want + tensor(Ht(k), Hn(n - k)) + tensor(Hn(n - k), Ht(k))
        assert coproduct(Ht(n)) == want


def test_coproduct_graded():
    for a in _upto(5):
        for (x, y) in coproduct(H(a)).terms:
            assert x.degree + y.degree == a.degree
            assert x.df + y.df == a.df


def test_cocommutative_up_to_sign():
    for a in _upto(4):
        d = coproduct(H(a))
        assert d.twist() == d


def test_hopf_axioms_catalog():
    rep = verify.run("hopf-axioms", 4)
    assert rep.ok, rep.failures


# -- antipode

def test_antipode_examples():
    assert antipode_closed("(0d)") == -H("(0d)")
    assert antipode_closed("(2)") == E("H[(1,1)] - H[(2)]")
    assert antipode_closed("(1d)") == E("-H[(1d)] + H[(0d,1)] + H[(1,0d)]")
    assert antipode_recursive(one()) == one()
    assert antipode_recursive(H("(1)")) == -H("(1)")
    assert antipode_recursive("(0d,0d)") == antipode_closed("(0d,0d)")


def test_antipode_agreement_exhaustive():
    for a in _upto(4):
        assert antipode_closed(a) == antipode_recursive(a), a


@given(small_compositions(4), small_compositions(3))
def test_antipode_signed_antihomomorphism(a, b):
    sign = (-1) ** (a.df * b.df)
    assert antipode_closed(H(a) * H(b)) == (antipode_closed(b) * antipode_closed(a)).scale(sign)


# -- primitives

def test_psi_examples():
    assert psi(0) == H("(0d)")
    assert psi(1) == E("H[(1d)] - H[(1,0d)]")
    assert len(psi(3)) == 8


def test_psi_primitive_and_closed_form():
    for n in range(7):
        assert is_primitive(psi(n))
        assert len(psi(n)) == 2 ** n
        assert psi(n) == psi_closed(n)


def test_is_primitive_examples():
    assert is_primitive(power_sum(4))
    assert is_primitive(psi(3))
    assert not is_primitive(H("(2)"))


def test_power_sum_examples():
    assert power_sum(1) == H("(1)")
    assert power_sum(2) == E("2*H[(2)] - H[(1,1)]")
    # the rg(alpha) coefficient sits on the last part
    assert power_sum(3) == E("3*H[(3)] - 2*H[(1,2)] - H[(2,1)] + H[(1,1,1)]")


def test_power_sum_newton_recursion():
    for n in range(1, 7):
        assert power_sum(n) == power_sum_newton(n)
        lhs = sum((Hn(k) * power_sum(n - k) for k in range(n)), ZERO)
        assert lhs == Hn(n).scale(n)
        assert is_primitive(power_sum(n))


def test_h_from_powersums():
    assert h_from_powersums(1) == E("P[(1)]")
    assert h_from_powersums(2) == E("1/2*P[(2)] + 1/2*P[(1,1)]")
    for n in range(1, 6):
        assert expand_powersums(h_from_powersums(n)) == Hn(n)


def test_elementary():
    assert elementary(1) == H("(1)")
    assert elementary(2) == E("H[(1,1)] - H[(2)]")
    for n in range(1, 7):
        assert sum((Hn(k) * elementary(n - k)).scale((-1) ** (n - k)) for k in range(n + 1)) == ZERO
        assert elementary(n) == antipode_closed(Hn(n)).scale((-1) ** n)


def test_elementary_tilde():
    assert elementary_tilde(0) == H("(0d)")
    assert elementary_tilde(1) == E("-H[(1d)] + H[(0d,1)] + H[(1,0d)]")
    for n in range(7):
        assert antipode_closed(Ht(n)) == elementary_tilde(n).scale((-1) ** (n + 1))
        via_psi = sum((psi(n - k) * elementary(k)).scale((-1) ** (n - k)) for k in range(n + 1))
        assert elementary_tilde(n) == via_psi
        want = TensorComb(("H", "H"))
        for k in range(n + 1):
            want = want + tensor(elementary_tilde(k), elementary(n - k)) + tensor(elementary(n - k), elementary_tilde(k))
        assert coproduct(elementary_tilde(n)) == want


def _p(k):
    return ZERO if k == 0 else power_sum(k)


def test_power_sum_tilde():
    assert power_sum_tilde(0) == H("(0d)")
    assert power_sum_tilde(1).scale(2) == E("2*H[(1d)] - H[(0d,1)] - H[(1,0d)]")
    assert power_sum_tilde(1).scale(2) - psi(1).scale(2) == bracket(power_sum(1), psi(0))
    for n in range(7):
        assert is_primitive(power_sum_tilde(n))
        lhs = sum((Ht(n - k) * _p(k) + (Hn(n - k) * power_sum_tilde(k)).scale(k + 1) for k in range(n + 1)), ZERO)
        assert lhs == Ht(n).scale(n + 1)
        if n:
            rhs = psi(n).scale(n + 1) + sum((bracket(power_sum(n - k), psi(k)) for k in range(n)), ZERO)
            assert power_sum_tilde(n).scale(n + 1) == rhs


def test_power_sum_tilde_has_fractional_coefficients():
    assert any(c.denominator > 1 for c in power_sum_tilde(2).terms.values())


def test_psi_via_brackets():
    assert psi_via_brackets(0) == H("(0d)")
    for n in range(5):
        assert psi_via_brackets(n) == psi(n)


def test_bracket_primitivity_criterion():
    prims = [power_sum(1), power_sum(2), psi(0), psi(1), psi(2)]
    for x in prims:
        for y in prims:
            b = bracket(x, y)
            even = (df_of(x) * df_of(y)) % 2 == 0
            assert is_primitive(b) == (even or not b)


# -- C tilde

def test_ctilde_examples():
    assert ctilde(4, 2) == 2
    assert ctilde(6, 3) == 0
    assert ctilde(8, 4) == 6
    with pytest.raises(ValueError):
        ctilde(2, 3)


def test_ctilde_catalog():
    rep = verify.run("ctilde", 8)
    assert rep.ok, rep.failures
