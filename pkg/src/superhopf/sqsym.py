"""Quasisymmetric functions in superspace: the graded dual of sNSym.

Monomials ``M`` pair with ``H`` and fundamentals ``L`` pair with ``R``:
<H_a, M_b> = <R_a, L_b> = delta_ab.  Pairing of tensors is factor by factor.
The M product is read off from coproduct structure constants of sNSym.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .compositions import Composition, _splits, down_set, enumerate_degree
from .linalg import LinComb, TensorComb, register_product
from .ribbon import to_h
from .snsym import _word_coproduct

__all__ = [
    "M",
    "L",
    "pairing",
    "tensor_pairing",
    "m_product",
    "m_coproduct",
    "l_from_m",
    "m_from_l",
    "to_m",
    "to_l",
    "l_coproduct",
    "coproduct",
]


def M(alpha="()", coef=1) -> LinComb:
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    return LinComb.term("M", Composition(alpha), coef)


def L(alpha="()", coef=1) -> LinComb:
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    return LinComb.term("L", Composition(alpha), coef)


@lru_cache(maxsize=None)
def _l_from_m(alpha: Composition) -> LinComb:
    return LinComb("M", [(b, 1) for b in down_set(alpha)])


@lru_cache(maxsize=None)
def _m_from_l(alpha: Composition) -> LinComb:
    n = len(alpha)
    return LinComb("L", [(b, (-1) ** (n - len(b))) for b in down_set(alpha)])


def l_from_m(alpha) -> LinComb:
    """L_alpha = sum over beta <= alpha of M_beta."""
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    return _l_from_m(Composition(alpha))


def m_from_l(alpha) -> LinComb:
    """M_alpha = sum over beta <= alpha of (-1)^(len alpha - len beta) L_beta."""
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    return _m_from_l(Composition(alpha))


def to_m(x: LinComb) -> LinComb:
    if x.basis == "M":
        return x
    if x.basis != "L":
        raise TypeError(f"cannot convert basis {x.basis!r} to M")
    return x.map(_l_from_m, "M")


def to_l(x: LinComb) -> LinComb:
    if x.basis == "L":
        return x
    if x.basis != "M":
        raise TypeError(f"cannot convert basis {x.basis!r} to L")
    return x.map(_m_from_l, "L")


_DUAL = {"H": "M", "R": "L", "M": "H", "L": "R"}


def pairing(x: LinComb, y: LinComb) -> Fraction:
    """Bilinear pairing of an sNSym element (H or R) with an sQSym element (M or L)."""
    if x.basis in ("M", "L"):
        x, y = y, x
    if x.basis not in ("H", "R") or y.basis not in ("M", "L"):
        raise TypeError(f"cannot pair bases {x.basis!r} and {y.basis!r}")
    if _DUAL[x.basis] != y.basis:
        x, y = to_h(x), to_m(y)
    small, big = (x, y) if len(x) <= len(y) else (y, x)
    return sum((c * big.coefficient(i) for i, c in small.terms.items()), Fraction(0))


def tensor_pairing(s: TensorComb, t: TensorComb) -> Fraction:
    """<a1 (x) a2, b1 (x) b2> = <a1, b1><a2, b2>, extended bilinearly."""
    if s.arity != t.arity:
        raise ValueError("arity mismatch")
    for bx, by in zip(s.bases, t.bases):
        ok = {bx, by} in ({"H", "M"}, {"R", "L"})
        if not ok:
            raise TypeError(f"tensor factors {s.bases} and {t.bases} are not dual bases")
    small, big = (s, t) if len(s) <= len(t) else (t, s)
    return sum((c * big.coefficient(i) for i, c in small.terms.items()), Fraction(0))


@lru_cache(maxsize=None)
def _m_product(alpha: Composition, beta: Composition) -> LinComb:
    if not alpha:
        return M(beta)
    if not beta:
        return M(alpha)
    out = LinComb("M")
    df = alpha.df + beta.df
    for gamma in enumerate_degree(alpha.degree + beta.degree):
        if gamma.df != df:
            continue
        c = _word_coproduct(gamma).coefficient((alpha, beta))
        if c:
            out.terms[gamma] = c
    return out


def m_product(alpha, beta) -> LinComb:
    """M_alpha M_beta = sum_gamma <Delta H_gamma, H_alpha (x) H_beta> M_gamma."""
    if isinstance(alpha, LinComb):
        return to_m(alpha) * to_m(beta)
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    if isinstance(beta, str):
        beta = Composition.parse(beta)
    return _m_product(Composition(alpha), Composition(beta))


register_product("M", _m_product)


def _l_product(alpha: Composition, beta: Composition) -> LinComb:
    return to_l(to_m(L(alpha)) * to_m(L(beta)))


register_product("L", _l_product)


def m_coproduct(alpha) -> TensorComb:
    """Deconcatenation: sum over beta gamma = alpha of M_beta (x) M_gamma."""
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    alpha = Composition(alpha)
    return TensorComb(("M", "M"), [((alpha[:i], alpha[i:]), 1) for i in range(len(alpha) + 1)])


def l_coproduct(alpha) -> TensorComb:
    """Horizontal splits beta gamma = alpha plus vertical splits beta odot gamma = alpha."""
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    alpha = Composition(alpha)
    out = TensorComb(("L", "L"))
    for i in range(len(alpha) + 1):
        out._add((alpha[:i], alpha[i:]), Fraction(1))
    for i, p in enumerate(alpha):
        for a, b in _splits(p):
            out._add((alpha[:i] + (a,), Composition((b,) + tuple(alpha[i + 1:]))), Fraction(1))
    return out


def coproduct(x: LinComb) -> TensorComb:
    """Coproduct of an M- or L-basis element, in the same basis."""
    fn = {"M": m_coproduct, "L": l_coproduct}.get(x.basis)
    if fn is None:
        raise TypeError(f"expected an M or L element, got basis {x.basis!r}")
    out = TensorComb((x.basis, x.basis))
    for idx, c in x.terms.items():
        out._iadd(fn(idx), c)
    return out
