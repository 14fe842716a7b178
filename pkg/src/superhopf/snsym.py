"""The Hopf algebra sNSym in the complete homogeneous basis H.

Elements are ``LinComb`` objects in basis ``"H"``, indexed by dotted
compositions; ``H_alpha`` is the word ``H_{alpha_1} ... H_{alpha_k}`` and the
product is concatenation of indices.  The coproduct is fixed on generators by

    Delta(H_r) = sum over p (+) q = r of H_p (x) H_q,        H_0 = 1,

and extended to words one generator at a time with the signed tensor product.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .compositions import Composition, Part, ZERO, down_set, oplus
from .linalg import LinComb, TensorComb, register_product, tensor

__all__ = [
    "H",
    "one",
    "product",
    "coproduct",
    "reduced_coproduct",
    "counit",
    "antipode_closed",
    "antipode_recursive",
    "antipode",
    "bracket",
    "psi",
    "psi_closed",
    "power_sum",
    "power_sum_newton",
    "h_from_powersums",
    "expand_powersums",
    "elementary",
    "elementary_tilde",
    "power_sum_tilde",
    "psi_via_brackets",
    "is_primitive",
    "ctilde",
    "df_of",
]

EMPTY = Composition(())
HH = ("H", "H")


def H(alpha="()", coef=1) -> LinComb:
    """Basis element H_alpha from a Composition or a literal like ``"(1,0d)"``."""
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    return LinComb.term("H", Composition(alpha), coef)


def one() -> LinComb:
    return H(EMPTY)


def _gen(p: Part) -> LinComb:
    return H(EMPTY if p == ZERO else Composition((p,)))


register_product("H", lambda a, b: LinComb.term("H", a + b))
register_product("P", lambda a, b: LinComb.term("P", a + b))


def product(x: LinComb, y: LinComb) -> LinComb:
    return x * y


def df_of(x: LinComb) -> int:
    """Fermionic degree of a homogeneous element."""
    dfs = {idx.df for idx in x.terms}
    if len(dfs) > 1:
        raise ValueError("element is not homogeneous in fermionic degree")
    return dfs.pop() if dfs else 0


@lru_cache(maxsize=None)
def _generator_coproduct(r: Part) -> TensorComb:
    out = TensorComb(HH)
    # every (p, q) over N0 and dotted N0 with p (+) q == r
    for pv in range(r.value + 1):
        for qv in range(r.value + 1 - pv):
            for pd in (False, True):
                for qd in (False, True):
                    p, q = Part(pv, pd), Part(qv, qd)
                    if oplus(p, q) == r:
                        out._iadd(tensor(_gen(p), _gen(q)))
    return out


@lru_cache(maxsize=None)
def _word_coproduct(alpha: Composition) -> TensorComb:
    if not alpha:
        return TensorComb.unit(HH)
    if len(alpha) == 1:
        return _generator_coproduct(alpha[0])
    return _word_coproduct(alpha[:-1]) * _generator_coproduct(alpha[-1])


def coproduct(x: LinComb) -> TensorComb:
    if x.basis != "H":
        raise TypeError("coproduct expects an element in the H basis")
    out = TensorComb(HH)
    for alpha, c in x.terms.items():
        out._iadd(_word_coproduct(alpha), c)
    return out


def reduced_coproduct(x: LinComb) -> TensorComb:
    out = coproduct(x) - tensor(x, one()) - tensor(one(), x)
    # the counit part of x contributes 1 (x) 1 once, not twice
    e = counit(x)
    if e:
        out._iadd(TensorComb.unit(HH), e)
    return out


def counit(x: LinComb) -> Fraction:
    return x.coefficient(EMPTY)


def is_primitive(x: LinComb) -> bool:
    return not (coproduct(x) - tensor(x, one()) - tensor(one(), x))


# -- antipode -------------------------------------------------------------

@lru_cache(maxsize=None)
def _antipode_closed(alpha: Composition) -> LinComb:
    s = alpha.df
    sign = -1 if comb(s, 2) % 2 else 1
    out = LinComb("H")
    for beta in down_set(alpha.rev()):
        out.terms[beta] = Fraction(sign * (-1) ** len(beta))
    return out


def antipode_closed(alpha) -> LinComb:
    """S(H_alpha) = (-1)^C(df,2) sum over beta <= rev(alpha) of (-1)^len(beta) H_beta."""
    if isinstance(alpha, LinComb):
        return alpha.map(_antipode_closed, "H")
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    return _antipode_closed(Composition(alpha))


@lru_cache(maxsize=None)
def _antipode_rec(alpha: Composition) -> LinComb:
    if not alpha:
        return one()
    x = H(alpha)
    out = -x
    for (a, b), c in reduced_coproduct(x).terms.items():
        out._iadd(_antipode_rec(a) * H(b), -c)
    return out


def antipode_recursive(x) -> LinComb:
    """S(x) = -x - sum S(x1) x2 over the reduced coproduct."""
    if isinstance(x, LinComb):
        return x.map(_antipode_rec, "H")
    if isinstance(x, str):
        x = Composition.parse(x)
    return _antipode_rec(Composition(x))


antipode = antipode_closed


def bracket(*xs: LinComb) -> LinComb:
    """Right-nested commutator [x1, [x2, ..., xn]]."""
    if len(xs) == 1:
        return xs[0]
    y = bracket(*xs[1:])
    return xs[0] * y - y * xs[0]


# -- distinguished families ------------------------------------------------

def _Hn(n: int) -> LinComb:
    return one() if n == 0 else H(Composition((Part(n, False),)))


def _Ht(n: int) -> LinComb:
    return H(Composition((Part(n, True),)))


@lru_cache(maxsize=None)
def psi(n: int) -> LinComb:
    """Primitive Psi_n = Ht_n - sum_{k<n} H_{n-k} Psi_k, Psi_0 = Ht_0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = _Ht(n)
    for k in range(n):
        out = out - _Hn(n - k) * psi(k)
    return out


def psi_closed(n: int) -> LinComb:
    """Psi_n = Ht_n + sum_k sum_{alpha <= (n-k)} (-1)^len(alpha) H_alpha Ht_k."""
    out = _Ht(n)
    for k in range(n):
        tail = Composition((Part(k, True),))
        for alpha in down_set(Composition((Part(n - k, False),))):
            out._iadd(H(alpha + tail), (-1) ** len(alpha))
    return out


@lru_cache(maxsize=None)
def power_sum(n: int) -> LinComb:
    """P_n = sum over alpha <= (n) of (-1)^(len-1) rg(alpha) H_alpha."""
    if n < 1:
        raise ValueError("power sums start at n = 1")
    out = LinComb("H")
    for alpha in down_set(Composition((Part(n, False),))):
        out.terms[alpha] = Fraction((-1) ** (len(alpha) - 1) * alpha[-1].value)
    return out


@lru_cache(maxsize=None)
def power_sum_newton(n: int) -> LinComb:
    """P_n from sum_{k=0}^{n-1} H_k P_{n-k} = n H_n."""
    if n < 1:
        raise ValueError("power sums start at n = 1")
    out = _Hn(n).scale(n)
    for k in range(1, n):
        out = out - _Hn(k) * power_sum_newton(n - k)
    return out


def _nu(alpha: Composition) -> int:
    acc, prod = 0, 1
    for p in alpha:
        acc += p.value
        prod *= acc
    return prod


def h_from_powersums(n: int) -> LinComb:
    """H_n in the P basis: sum over classic alpha <= (n) of P_alpha / nu_alpha."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return LinComb("P", [(a, Fraction(1, _nu(a))) for a in down_set(Composition((Part(n, False),)))])


def expand_powersums(x: LinComb) -> LinComb:
    """Substitute P_k -> power_sum(k) in a P-basis element."""
    if x.basis != "P":
        raise TypeError("expected a P-basis element")

    def word(alpha):
        out = one()
        for p in alpha:
            out = out * power_sum(p.value)
        return out

    return x.map(word, "H")


@lru_cache(maxsize=None)
def elementary(n: int) -> LinComb:
    """S_n = (-1)^n sum over beta <= (n) of (-1)^len(beta) H_beta; S_0 = 1."""
    if n == 0:
        return one()
    out = LinComb("H")
    for beta in down_set(Composition((Part(n, False),))):
        out.terms[beta] = Fraction((-1) ** (n + len(beta)))
    return out


@lru_cache(maxsize=None)
def elementary_tilde(n: int) -> LinComb:
    """St_n = (-1)^(n+1) sum over alpha <= (nd) of (-1)^len(alpha) H_alpha."""
    out = LinComb("H")
    for alpha in down_set(Composition((Part(n, True),))):
        out.terms[alpha] = Fraction((-1) ** (n + 1 + len(alpha)))
    return out


@lru_cache(maxsize=None)
def power_sum_tilde(n: int) -> LinComb:
    """Pt_n, from (n+1) Pt_n = sum over alpha <= (nd) of (-1)^(len-1) |rg(alpha)| H_alpha."""
    out = LinComb("H")
    for alpha in down_set(Composition((Part(n, True),))):
        out.terms[alpha] = Fraction((-1) ** (len(alpha) - 1) * alpha[-1].degree, n + 1)
    return out


def _t(alpha: tuple) -> int:
    t = 1
    for i in range(len(alpha) - 1):
        t *= sum(alpha[i:]) + 1
    return t


def _classic_compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _classic_compositions(n - first):
            yield (first,) + rest


def psi_via_brackets(n: int) -> LinComb:
    """Psi_n as iterated brackets of P_i and Pt_j, summed over compositions of n."""
    if n == 0:
        return power_sum_tilde(0)
    out = LinComb("H")
    for alpha in _classic_compositions(n):
        k = len(alpha)
        t = _t(alpha)
        ps = [power_sum(a) for a in alpha]
        out._iadd(bracket(*ps[:-1], power_sum_tilde(alpha[-1])), Fraction((-1) ** (k + 1), t))
        out._iadd(bracket(*ps, power_sum_tilde(0)), Fraction((-1) ** k, (alpha[-1] + 1) * t))
    return out


@lru_cache(maxsize=None)
def ctilde(n: int, k: int) -> int:
    """Coefficients of Delta(H_(0d^n)), by the three-case recursion."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return 1
    if n % 2 == 0 and k % 2 == 1:
        return 0
    return ctilde(n - 1, k - 1) + ctilde(n - 1, k)
