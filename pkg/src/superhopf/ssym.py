"""Symmetric functions in superspace as the image of the projection pi.

The h basis (``"h"``) is indexed by superpartitions, with
h_Lambda = ht_{Lambda^a_1} ... ht_{Lambda^a_m} h_{Lambda^s_1} ... h_{Lambda^s_n}.
Fermionic generators anticommute and square to zero; bosonic ones commute.
Ribbon Schur functions in superspace live in basis ``"r"``, indexed by dotted
compositions, with r_alpha = pi(R_alpha).
"""

from __future__ import annotations

from functools import lru_cache

from .compositions import (
    Composition,
    Part,
    Superpartition,
    superpartitions_of_degree,
    to_superpartition,
    up_set,
)
from .linalg import LinComb, TensorComb, rank, register_product, solve, tensor
from .ribbon import _ribbon_product_terms, ribbon_to_h, to_h
from . import snsym

__all__ = [
    "h",
    "r",
    "h_of_composition",
    "project_pi",
    "ssym_product",
    "ribbon_super_to_h",
    "ribbon_super_to_h_direct",
    "r_to_h",
    "ribbon_super_product",
    "super_special",
    "r_basis_independence",
    "r_basis_matrix",
    "express_in_r_basis",
    "ssym_coproduct",
    "ssym_antipode",
]

EMPTY_SP = Superpartition((), ())


def h(lam="(;)", coef=1) -> LinComb:
    """h_Lambda from a Superpartition or a literal such as ``"(2d,0d;1,1)"``."""
    if isinstance(lam, str):
        lam = Superpartition.parse(lam)
    return LinComb.term("h", lam, coef)


def r(alpha="()", coef=1) -> LinComb:
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    return LinComb.term("r", Composition(alpha), coef)


def h_of_composition(alpha: Composition) -> LinComb:
    """h_alpha = h_{alpha_1} ... h_{alpha_k}: zero or +-h of the sorted superpartition."""
    res = to_superpartition(alpha)
    if res is None:
        return LinComb("h")
    lam, sign = res
    return LinComb.term("h", lam, sign)


def _h_mul(a: Superpartition, b: Superpartition) -> LinComb:
    return h_of_composition(a.as_composition() + b.as_composition())


register_product("h", _h_mul)


def ssym_product(x: LinComb, y: LinComb) -> LinComb:
    return x * y


def project_pi(x: LinComb) -> LinComb:
    """pi(H_alpha) = h_alpha; R-basis input is converted to H first."""
    if x.basis == "R":
        x = to_h(x)
    if x.basis != "H":
        raise TypeError(f"pi is defined on sNSym elements, got basis {x.basis!r}")
    return x.map(h_of_composition, "h")


@lru_cache(maxsize=None)
def _r_to_h(alpha: Composition) -> LinComb:
    return project_pi(ribbon_to_h(alpha))


def ribbon_super_to_h(alpha) -> LinComb:
    """r_alpha = pi(R_alpha) in the h basis."""
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    return _r_to_h(Composition(alpha))


def ribbon_super_to_h_direct(alpha) -> LinComb:
    """sum over alpha <= beta of (-1)^(len alpha - len beta + sigma(beta)) h_{sorted beta}."""
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    alpha = Composition(alpha)
    out = LinComb("h")
    for beta in up_set(alpha):
        res = to_superpartition(beta)
        if res is None:
            continue
        lam, sign = res
        out = out + h(lam, sign * (-1) ** (len(alpha) - len(beta)))
    return out


def r_to_h(x: LinComb) -> LinComb:
    if x.basis != "r":
        raise TypeError(f"expected an r-basis element, got {x.basis!r}")
    return x.map(_r_to_h, "h")


def ribbon_super_product(alpha, beta) -> LinComb:
    """r_alpha r_beta in the r basis, by the same two-case rule as for R."""
    if isinstance(alpha, LinComb):
        return alpha * beta
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    if isinstance(beta, str):
        beta = Composition.parse(beta)
    return _ribbon_product_terms("r", Composition(alpha), Composition(beta))


register_product("r", lambda a, b: _ribbon_product_terms("r", a, b))


# -- special families -------------------------------------------------------

def _hn(n: int) -> LinComb:
    return h(EMPTY_SP) if n == 0 else h(Superpartition((), (n,)))


def _ht(n: int) -> LinComb:
    return h(Superpartition((n,), ()))


def super_special(kind: str, n: int) -> LinComb:
    """One of ``pt``, ``et``, ``p``, ``e``, ``ht``, ``h`` (t for tilde), in the h basis.

    ``pt`` and ``et`` are pi of the sNSym elements Pt_n and St_n; ``p`` and
    ``e`` are pi of P_n and S_n, with p_0 = 0 and e_0 = 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if kind == "ht":
        return _ht(n)
    if kind == "h":
        return _hn(n)
    if kind == "pt":
        return project_pi(snsym.power_sum_tilde(n))
    if kind == "et":
        return project_pi(snsym.elementary_tilde(n))
    if kind == "p":
        return LinComb("h") if n == 0 else project_pi(snsym.power_sum(n))
    if kind == "e":
        return project_pi(snsym.elementary(n))
    raise ValueError(f"unknown family {kind!r}")


# -- basis theorem ------------------------------------------------------------

def r_basis_matrix(n: int) -> tuple:
    """Superpartitions of degree n and the h-expansions of their r functions."""
    lams = superpartitions_of_degree(n)
    return lams, [ribbon_super_to_h(lam.as_composition()) for lam in lams]


def r_basis_independence(n: int) -> bool:
    """True iff {r_Lambda : |Lambda| = n} is independent, hence a basis of degree n."""
    lams, rows = r_basis_matrix(n)
    return rank(rows) == len(lams)


def express_in_r_basis(x: LinComb) -> dict:
    """Coordinates of a homogeneous h-basis element in the r_Lambda basis."""
    if x.basis == "r":
        x = r_to_h(x)
    degs = x.homogeneous_degrees()
    if not degs:
        return {}
    if len(degs) != 1:
        raise ValueError("element is not homogeneous")
    lams, rows = r_basis_matrix(degs.pop())
    coords = solve(rows, x)
    if coords is None:
        raise ValueError("element is outside the span of the r basis")
    return {lam: c for lam, c in zip(lams, coords) if c}


# -- Hopf structure transported through pi -----------------------------------

def _gen_coproduct(p: Part) -> TensorComb:
    n = p.value
    out = TensorComb(("h", "h"))
    for k in range(n + 1):
        if p.dotted:
            out._iadd(tensor(_ht(k), _hn(n - k)))
            out._iadd(tensor(_hn(n - k), _ht(k)))
        else:
            out._iadd(tensor(_hn(k), _hn(n - k)))
    return out


@lru_cache(maxsize=None)
def _sp_coproduct(lam: Superpartition) -> TensorComb:
    out = TensorComb.unit(("h", "h"))
    for p in lam.as_composition():
        out = out * _gen_coproduct(p)
    return out


def ssym_coproduct(x: LinComb) -> TensorComb:
    """Multiplicative coproduct on the h basis, generators as for H and Ht."""
    if x.basis != "h":
        raise TypeError("expected an h-basis element")
    out = TensorComb(("h", "h"))
    for lam, c in x.terms.items():
        out._iadd(_sp_coproduct(lam), c)
    return out


@lru_cache(maxsize=None)
def _sp_antipode(lam: Superpartition) -> LinComb:
    if lam == EMPTY_SP:
        return h(EMPTY_SP)
    x = h(lam)
    red = _sp_coproduct(lam) - tensor(x, h(EMPTY_SP)) - tensor(h(EMPTY_SP), x)
    out = -x
    for (a, b), c in red.terms.items():
        out = out - (_sp_antipode(a) * h(b)).scale(c)
    return out


def ssym_antipode(x: LinComb) -> LinComb:
    if x.basis != "h":
        raise TypeError("expected an h-basis element")
    return x.map(_sp_antipode, "h")
