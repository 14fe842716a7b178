"""Noncommutative ribbon Schur functions in superspace (basis ``"R"``)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .compositions import Composition, odot, up_set
from .linalg import LinComb, register_product

__all__ = ["R", "ribbon_to_h", "h_to_ribbon", "ribbon_product", "to_h", "to_ribbon"]


def R(alpha="()", coef=1) -> LinComb:
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    return LinComb.term("R", Composition(alpha), coef)


@lru_cache(maxsize=None)
def _ribbon_to_h(alpha: Composition) -> LinComb:
    n = len(alpha)
    return LinComb("H", [(b, (-1) ** (n - len(b))) for b in up_set(alpha)])


@lru_cache(maxsize=None)
def _h_to_ribbon(alpha: Composition) -> LinComb:
    return LinComb("R", [(b, 1) for b in up_set(alpha)])


def ribbon_to_h(alpha) -> LinComb:
    """R_alpha = sum over alpha <= beta of (-1)^(len alpha - len beta) H_beta."""
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    return _ribbon_to_h(Composition(alpha))


def h_to_ribbon(alpha) -> LinComb:
    """H_alpha = sum over alpha <= beta of R_beta."""
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    return _h_to_ribbon(Composition(alpha))


def to_h(x: LinComb) -> LinComb:
    if x.basis == "H":
        return x
    if x.basis != "R":
        raise TypeError(f"cannot convert basis {x.basis!r} to H")
    return x.map(_ribbon_to_h, "H")


def to_ribbon(x: LinComb) -> LinComb:
    if x.basis == "R":
        return x
    if x.basis != "H":
        raise TypeError(f"cannot convert basis {x.basis!r} to R")
    return x.map(_h_to_ribbon, "R")


def _ribbon_product_terms(basis: str, alpha: Composition, beta: Composition) -> LinComb:
    if not alpha:
        return LinComb.term(basis, beta)
    if not beta:
        return LinComb.term(basis, alpha)
    out = LinComb(basis, {alpha + beta: Fraction(1)})
    if not (alpha[-1].dotted and beta[0].dotted):
        out = out + LinComb.term(basis, odot(alpha, beta))
    return out


def ribbon_product(alpha, beta) -> LinComb:
    """R_alpha R_beta: R_{alpha beta}, plus R_{alpha odot beta} unless both boundary parts are dotted.

    Accepts two compositions or two R-basis elements.
    """
    if isinstance(alpha, LinComb):
        return alpha * beta
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    if isinstance(beta, str):
        beta = Composition.parse(beta)
    return _ribbon_product_terms("R", Composition(alpha), Composition(beta))


register_product("R", lambda a, b: _ribbon_product_terms("R", a, b))
