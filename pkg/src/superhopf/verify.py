"""Catalog of exhaustive identity checks, shared by the CLI and the test suite.

Each check takes a degree bound and returns a ``Report`` listing the number of
instances examined and a literal for every counterexample found.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from . import snsym, sqsym, ssym
from .compositions import (
    Composition,
    Part,
    down_set,
    enumerate_degree,
    to_superpartition,
)
from .linalg import LinComb, TensorComb, parse_element, tensor
from .ribbon import R, ribbon_product, to_h, to_ribbon
from .trees import cut_split, forest_of, tree_coproduct

__all__ = ["Report", "CATALOG", "ALIASES", "run", "names"]


@dataclass
class Report:
    name: str
    instances: int = 0
    failures: list = field(default_factory=list)
    scope: str = ""

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, witness: str) -> None:
        self.instances += 1
        if not cond:
            self.failures.append(witness)

    def summary(self) -> str:
        if self.ok:
            return f"PASS ({self.scope})" if self.scope else "PASS"
        return f"FAIL ({len(self.failures)} of {self.instances})"


def _upto(n: int):
    for d in range(n + 1):
        yield from enumerate_degree(d)


def _pairs(n: int):
    for a in _upto(n):
        for b in _upto(n - a.degree):
            yield a, b


# -- sNSym -------------------------------------------------------------------

def hopf_axioms(max_degree: int) -> Report:
    rep = Report("hopf-axioms")
    word = snsym._word_coproduct
    unit_h = snsym.one()
    for a in _upto(max_degree):
        d = word(a)
        rep.check(d.apply(word, None) == d.apply(None, word), f"coassociativity H[{a}]")
        left = d.contract(lambda ij: snsym.H(ij[1]) if not ij[0] else LinComb("H"), "H")
        right = d.contract(lambda ij: snsym.H(ij[0]) if not ij[1] else LinComb("H"), "H")
        rep.check(left == snsym.H(a) and right == snsym.H(a), f"counit H[{a}]")
        eps = unit_h if not a else LinComb("H")
        s_left = d.contract(lambda ij: snsym.antipode_closed(ij[0]) * snsym.H(ij[1]), "H")
        s_right = d.contract(lambda ij: snsym.H(ij[0]) * snsym.antipode_closed(ij[1]), "H")
        rep.check(s_left == eps and s_right == eps, f"antipode law H[{a}]")
    return rep


def antipode_agreement(max_degree: int) -> Report:
    rep = Report("antipode-closed-vs-recursive")
    for a in _upto(max_degree):
        rep.check(snsym.antipode_closed(a) == snsym.antipode_recursive(a), f"S(H[{a}])")
    return rep


def primitives(max_degree: int) -> Report:
    rep = Report("primitives")
    for n in range(max_degree + 1):
        p = snsym.psi(n)
        rep.check(snsym.is_primitive(p) and len(p) == 2 ** n, f"Psi_{n}")
        rep.check(p == snsym.psi_closed(n), f"Psi_{n} closed form")
        rep.check(snsym.is_primitive(snsym.power_sum_tilde(n)), f"Pt_{n}")
        if n:
            rep.check(snsym.is_primitive(snsym.power_sum(n)), f"P_{n}")
            rep.check(snsym.power_sum(n) == snsym.power_sum_newton(n), f"P_{n} Newton")
    return rep


def ctilde_identities(max_degree: int) -> Report:
    rep = Report("ctilde")
    ct = snsym.ctilde
    for n in range(max_degree + 1):
        for k in range(n + 1):
            if n % 2 == 0 and k % 2 == 0:
                rep.check(ct(n, k) == comb(n // 2, k // 2), f"C({n},{k})")
            if n % 2 == 1 and k % 2 == 0 and k < n:
                rep.check(ct(n, k) == ct(n, k + 1) == ct(n - 1, k), f"C({n},{k}) odd row")
        dots = Composition(["0d"] * n)
        expected = TensorComb(("H", "H"))
        for k in range(n + 1):
            expected._add((Composition(["0d"] * (n - k)), Composition(["0d"] * k)), Fraction(ct(n, k)))
        rep.check(snsym.coproduct(snsym.H(dots)) == expected, f"Delta(H[{dots}])")
    return rep


# -- combinatorics -----------------------------------------------------------

def counting(max_degree: int) -> Report:
    rep = Report("counting")
    for n in range(1, max_degree + 1):
        rep.check(len(enumerate_degree(n)) == 2 * 3 ** (n - 1), f"degree {n}")
    return rep


def down_set_counting(max_degree: int) -> Report:
    rep = Report("down-set")
    for n in range(1, max_degree + 1):
        size = len(down_set(Composition((Part(n, True),))))
        rep.check(size == (n + 2) * 2 ** (n - 1), f"({n}d)")
    return rep


# -- ribbons and trees ---------------------------------------------------------

def ribbon_product_rule(max_degree: int) -> Report:
    rep = Report("ribbon-product", scope="all pairs")
    for a, b in _pairs(max_degree):
        lhs = to_h(ribbon_product(a, b))
        rhs = to_h(R(a)) * to_h(R(b))
        rep.check(lhs == rhs, f"R[{a}]*R[{b}]")
    return rep


def tree_coproduct_agreement(max_degree: int) -> Report:
    rep = Report("tree-coproduct")
    for a in _upto(max_degree):
        rep.check(tree_coproduct(a) == snsym._word_coproduct(a), f"t[{a}]")
    f = forest_of("(2d,0d,2,3d,1d)")
    _, _, sign = cut_split(f, "[-,0,-,0,0]")
    rep.check(sign == -1, "sign of cut [-,0,-,0,0] on t[(2d,0d,2,3d,1d)]")
    return rep


# -- sQSym -------------------------------------------------------------------

def duality(max_degree: int) -> Report:
    rep = Report("duality", scope="all pairs")
    for g in _upto(max_degree):
        dm = sqsym.m_coproduct(g)
        dl = sqsym.l_coproduct(g)
        dr = snsym.coproduct(to_h(R(g)))
        dr = dr.apply(lambda x: to_ribbon(snsym.H(x)), lambda x: to_ribbon(snsym.H(x)))
        for a, b in _pairs(g.degree):
            if a.degree + b.degree != g.degree:
                continue
            hab = snsym.H(a) * snsym.H(b)
            lhs = sqsym.pairing(hab, sqsym.M(g))
            rhs = sqsym.tensor_pairing(tensor(snsym.H(a), snsym.H(b)), dm)
            rep.check(lhs == rhs, f"<H[{a}]H[{b}], M[{g}]>")
            lhs = sqsym.tensor_pairing(dl, tensor(R(a), R(b)))
            rhs = sqsym.pairing(sqsym.L(g), ribbon_product(a, b))
            rep.check(lhs == rhs, f"<Delta L[{g}], R[{a}] (x) R[{b}]>")
            lhs = sqsym.pairing(sqsym.L(a) * sqsym.L(b), R(g))
            rhs = sqsym.tensor_pairing(tensor(sqsym.L(a), sqsym.L(b)), dr)
            rep.check(lhs == rhs, f"<L[{a}]L[{b}], R[{g}]>")
    return rep


def lm_inverse(max_degree: int) -> Report:
    rep = Report("lm-inverse")
    for a in _upto(max_degree):
        rep.check(sqsym.to_l(sqsym.l_from_m(a)) == sqsym.L(a), f"L[{a}]")
        rep.check(sqsym.to_m(sqsym.m_from_l(a)) == sqsym.M(a), f"M[{a}]")
    return rep


# -- sSym --------------------------------------------------------------------

GOLDEN_R = ("(0d,1,2d,1)",
            "-h[(2d,0d;1,1)] + 2*h[(3d,0d;1)] + h[(2d,1d;1)] - h[(3d,1d;)] - h[(4d,0d;)]")


def golden_r(max_degree: int) -> Report:
    rep = Report("golden-r")
    alpha, text = GOLDEN_R
    want = parse_element(text)
    rep.check(ssym.ribbon_super_to_h(alpha) == want, f"r[{alpha}] via pi")
    rep.check(ssym.ribbon_super_to_h_direct(alpha) == want, f"r[{alpha}] direct")
    return rep


def pi_morphism(max_degree: int) -> Report:
    rep = Report("pi-morphism")
    pi = ssym.project_pi
    for a, b in _pairs(max_degree):
        rep.check(pi(snsym.H(a) * snsym.H(b)) == pi(snsym.H(a)) * pi(snsym.H(b)), f"pi(H[{a}]H[{b}])")
    for a in _upto(max_degree):
        x = snsym.H(a)
        img = snsym.coproduct(x).apply(ssym.h_of_composition, ssym.h_of_composition)
        rep.check(img == ssym.ssym_coproduct(pi(x)), f"Delta pi(H[{a}])")
        rep.check(pi(snsym.antipode(x)) == ssym.ssym_antipode(pi(x)), f"S pi(H[{a}])")
    return rep


def ribbon_hook(max_degree: int) -> Report:
    rep = Report("ribbon-hook")
    r = ssym.r
    for n in range(max_degree + 1):
        lhs = ssym.r_to_h(r(Composition([1] * n + ["0d"])))
        rhs = LinComb("h")
        for k in range(n + 1):
            rhs = rhs + ssym.r_to_h(r(Composition([1] * (n - k))) * r(Composition((Part(k, True),)))).scale((-1) ** k)
        rep.check(lhs == rhs, f"r[(1^{n},0d)]")
    return rep


def ssym_identities(max_degree: int) -> Report:
    rep = Report("ssym-identities")
    sp = ssym.super_special
    zero = LinComb("h")
    for n in range(max_degree + 1):
        hook = ssym.r_to_h(ssym.r(Composition([1] * n + ["0d"])))
        if n:
            rec = sp("ht", n) - sum((sp("h", n - k) * sp("pt", k) for k in range(n)), zero)
            rep.check(sp("pt", n) == rec, f"pt_{n} recursion")
            rhs = (sp("ht", n).scale(n + 1) - sp("p", n) * sp("ht", 0)
                   - sum((sp("p", k) * sp("ht", n - k) + (sp("pt", k) * sp("h", n - k)).scale(k + 1)
                          for k in range(n)), zero))
            rep.check(sp("pt", n).scale(n + 1) == rhs, f"(n+1)pt_{n} identity")
        et = sum(((sp("pt", n - k) * sp("e", k)).scale((-1) ** (n - k)) for k in range(n + 1)), zero)
        rep.check(sp("et", n) == et, f"et_{n}")
        rep.check(sp("pt", n) == hook.scale((-1) ** n), f"pt_{n} as hook ribbon")
        eh = sum(((sp("e", n - k) * sp("ht", k)).scale((-1) ** k) for k in range(n + 1)), zero)
        rep.check(hook == eh, f"r[(1^{n},0d)] in e and ht")
        rep.check(ssym.project_pi(snsym.psi(n)) == sp("pt", n), f"pi(Psi_{n})")
    for a, b in _pairs(max_degree):
        ra, rb = ssym.r(a), ssym.r(b)
        sign = (-1) ** (a.df * b.df)
        rep.check(ssym.r_to_h(ra * rb) == ssym.r_to_h(rb * ra).scale(sign), f"r[{a}] r[{b}] supercommute")
    return rep


def r_basis(max_degree: int) -> Report:
    rep = Report("r-basis")
    for n in range(1, max_degree + 1):
        rep.check(ssym.r_basis_independence(n), f"degree {n}")
    return rep


def r_triangularity(max_degree: int) -> Report:
    rep = Report("r-triangularity")
    for a in _upto(max_degree):
        res = to_superpartition(a)
        if res is None or a.df == 0:
            continue
        lam, sign = res
        diff = ssym.ribbon_super_to_h(a) - ssym.ribbon_super_to_h(lam.as_composition()).scale(sign)
        coords = ssym.express_in_r_basis(diff)
        rep.check(all(mu.length < len(a) for mu in coords), f"r[{a}]")
    return rep


CATALOG: dict = {
    "hopf-axioms": hopf_axioms,
    "antipode-closed-vs-recursive": antipode_agreement,
    "primitives": primitives,
    "ctilde": ctilde_identities,
    "counting": counting,
    "down-set": down_set_counting,
    "ribbon-product": ribbon_product_rule,
    "tree-coproduct": tree_coproduct_agreement,
    "duality": duality,
    "lm-inverse": lm_inverse,
    "golden-r": golden_r,
    "pi-morphism": pi_morphism,
    "ribbon-hook": ribbon_hook,
    "ssym-identities": ssym_identities,
    "r-basis": r_basis,
    "r-triangularity": r_triangularity,
}

# published names kept for the command line
ALIASES = {"thm-6-2": "ribbon-product", "prop-7-6": "ribbon-hook"}


def names() -> list:
    return sorted(CATALOG) + sorted(ALIASES)


def run(name: str, max_degree: int) -> Report:
    fn: Callable = CATALOG.get(ALIASES.get(name, name))
    if fn is None:
        raise KeyError(f"unknown identity {name!r}; choose from {', '.join(names())}")
    return fn(max_degree)
