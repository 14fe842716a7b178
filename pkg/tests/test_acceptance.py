"""The thirteen acceptance criteria, each printed as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` or directly as a script.
"""

import time

import pytest

from superhopf import snsym, ssym, verify
from superhopf.compositions import Composition, Part, Superpartition, down_set, enumerate_degree
from superhopf.trees import cut_split, forest_of

GOLDEN = [("(2d,0d;1,1)", -1), ("(3d,0d;1)", 2), ("(2d,1d;1)", 1), ("(3d,1d;)", -1), ("(4d,0d;)", -1)]


def _c1():
    return [len(enumerate_degree(n)) for n in range(1, 9)] == [2, 6, 18, 54, 162, 486, 1458, 4374]


def _c2():
    return all(len(down_set(Composition((Part(n, True),)))) == (n + 2) * 2 ** (n - 1) for n in range(1, 9))


def _catalog(*names, degree):
    def run():
        return all(verify.run(name, degree).ok for name in names)
    return run


def _c5():
    for n in range(7):
        p = snsym.psi(n)
        if not (snsym.is_primitive(p) and len(p) == 2 ** n):
            return False
        if not snsym.is_primitive(snsym.power_sum_tilde(n)):
            return False
        if n and not snsym.is_primitive(snsym.power_sum(n)):
            return False
    return True


def _c7():
    ok = verify.run("tree-coproduct", 5).ok
    _, _, sign = cut_split(forest_of("(2d,0d,2,3d,1d)"), "[-,0,-,0,0]")
    return ok and sign == -1


def _c10():
    got = ssym.ribbon_super_to_h("(0d,1,2d,1)")
    pairs = [(Superpartition.parse(lam), c) for lam, c in GOLDEN]
    return len(got) == len(pairs) and all(got.coefficient(lam) == c for lam, c in pairs)


def _c12():
    return all(ssym.r_basis_independence(n) for n in range(1, 7))


CRITERIA = [
    (1, "counting 2*3^(n-1), n=1..8", _c1, 5),
    (2, "down-set sizes (n+2)*2^(n-1), n=1..8", _c2, 10),
    (3, "Hopf axioms on H_alpha, |alpha| <= 5", _catalog("hopf-axioms", degree=5), 60),
    (4, "closed antipode = recursive antipode, |alpha| <= 5", _catalog("antipode-closed-vs-recursive", degree=5), None),
    (5, "Psi_n, P_n, Pt_n primitive, 2^n terms, n <= 6", _c5, None),
    (6, "ribbon product rule, |alpha|+|beta| <= 5", _catalog("ribbon-product", degree=5), None),
    (7, "tree coproduct = coproduct, |alpha| <= 5, worked sign", _c7, None),
    (8, "M/H and L/R duality, degree <= 4", _catalog("duality", degree=4), None),
    (9, "L/M transforms inverse, degree <= 6", _catalog("lm-inverse", degree=6), None),
    (10, "golden r expansion", _c10, None),
    (11, "sSym identity suite, n <= 5", _catalog("ssym-identities", "ribbon-hook", degree=5), None),
    (12, "r basis independence, n <= 6", _c12, 120),
    (13, "C tilde closed forms and Delta(H_(0d^n)), n <= 8", _catalog("ctilde", degree=8), None),
]


def evaluate(fn, limit):
    start = time.perf_counter()
    ok = bool(fn())
    elapsed = time.perf_counter() - start
    within = limit is None or elapsed < limit
    return ok and within, elapsed


def line(num, title, passed, elapsed):
    return f"criterion {num:2d}: {'PASS' if passed else 'FAIL'}  {title}  ({elapsed:.2f}s)"


@pytest.mark.parametrize("num,title,fn,limit", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn, limit, capsys):
    passed, elapsed = evaluate(fn, limit)
    with capsys.disabled():
        print("\n" + line(num, title, passed, elapsed))
    assert passed, f"criterion {num} failed ({elapsed:.2f}s, limit {limit})"


if __name__ == "__main__":
    results = [evaluate(fn, limit) + (num, title) for num, title, fn, limit in CRITERIA]
    for passed, elapsed, num, title in results:
        print(line(num, title, passed, elapsed))
    raise SystemExit(0 if all(r[0] for r in results) else 1)
