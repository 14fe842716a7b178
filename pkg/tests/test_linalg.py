from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import small_compositions
from superhopf.compositions import Composition
from superhopf.linalg import LinComb, TensorComb, parse_element, rank, solve, tensor
from superhopf.snsym import H, one

C = Composition.parse


def test_add_scale_examples():
    assert (H("(1)") + H("(2)")) + H("(1)").scale(-1) == H("(2)")
    assert not H("(1d)").scale(0)
    assert H("(1)") + H("(1)") == H("(1)", 2)
    assert H("(1)") - H("(1)") == 0


def test_coefficients_are_reduced_fractions():
    x = H("(1)", Fraction(2, 4))
    assert x[C("(1)")] == Fraction(1, 2)
    assert x.to_json() == [{"coef": "1/2", "index": "(1)"}]


def test_rendering():
    assert str(H("(1,0d)") - H("(1d)")) == "H[(1,0d)] - H[(1d)]"
    assert str(H("(2)", Fraction(3, 2)) - H("(1)")) == "-H[(1)] + 3/2*H[(2)]"
    assert str(LinComb("H")) == "0"


def test_parse_element_round_trip():
    for text in ["H[(1,0d)] - H[(1d)]", "-1/2*R[(0d)] + 3*R[(2)]", "h[(2d,0d;1,1)]", "M[()]"]:
        x = parse_element(text)
        assert parse_element(str(x)) == x


@pytest.mark.parametrize("bad", ["H[(1)] + R[(1)]", "H[(1)] H[(2)]", "", "H[(1", "Q[(1)]"])
def test_parse_element_errors(bad):
    with pytest.raises(ValueError):
        parse_element(bad)


def test_json_round_trip():
    x = parse_element("2*H[(1,0d)] - 1/3*H[(1d)]")
    assert LinComb.from_json("H", x.to_json()) == x


def test_basis_mismatch_rejected():
    with pytest.raises(TypeError):
        H("(1)") + parse_element("R[(1)]")


def test_tensor_sign_examples():
    u = one()
    t0 = tensor(H("(0d)"), u)
    assert t0 * t0 == tensor(H("(0d,0d)"), u)
    assert tensor(u, H("(0d)")) * t0 == tensor(H("(0d)"), H("(0d)")).scale(-1)
    assert tensor(u, H("(2)")) * t0 == tensor(H("(0d)"), H("(2)"))


def test_tensor_rendering():
    t = tensor(H("(0d)"), H("(1)")) - tensor(one(), H("(1d)"))
    assert str(t) == "-H[()] ⊗ H[(1d)] + H[(0d)] ⊗ H[(1)]"


terms = st.lists(st.tuples(small_compositions(2), small_compositions(2), st.integers(-2, 2)), max_size=3)


def _t(data):
    out = TensorComb(("H", "H"))
    for a, b, c in data:
        out._add((a, b), Fraction(c))
    return out


@given(terms, terms, terms)
def test_tensor_product_associative_and_unital(x, y, z):
    x, y, z = _t(x), _t(y), _t(z)
    unit = TensorComb.unit(("H", "H"))
    assert (x * y) * z == x * (y * z)
    assert unit * x == x == x * unit


@given(terms, terms)
def test_twist_is_algebra_involution(x, y):
    x, y = _t(x), _t(y)
    assert x.twist().twist() == x
    assert (x * y).twist() == x.twist() * y.twist()


def test_rank_and_solve():
    vs = [H("(1)") + H("(2)"), H("(2)"), H("(1)")]
    assert rank(vs) == 2
    assert solve(vs[:2], H("(1)")) == [Fraction(1), Fraction(-1)]
    assert solve(vs[1:2], H("(1)")) is None
