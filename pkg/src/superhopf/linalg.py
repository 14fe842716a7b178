"""Exact-rational formal linear combinations and Koszul-signed tensors.

``LinComb`` is a sparse vector over one named basis (``"H"``, ``"R"``, ``"M"``,
``"L"``, ``"h"``, ``"r"``, ``"P"``).  Multiplying two combinations in the same
basis dispatches to the product registered for that basis; there is no
coercion between bases.

``TensorComb`` is a sparse vector over k-tuples of basis indices.  Its product
carries the sign (-1)^(df(g1) df(f2)) for (f1 x g1)(f2 x g2) and the obvious
generalisation to more factors.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .compositions import Composition, Superpartition

__all__ = [
    "LinComb",
    "TensorComb",
    "register_product",
    "basis_product",
    "tensor",
    "parse_element",
    "format_coef",
    "rank",
    "solve",
]

# basis name -> function (index, index) -> LinComb
_PRODUCTS: dict[str, Callable] = {}

COMPOSITION_BASES = {"H", "R", "M", "L", "r", "P"}
SUPERPARTITION_BASES = {"h"}


def register_product(basis: str, fn: Callable) -> None:
    _PRODUCTS[basis] = fn


def basis_product(basis: str, a, b) -> "LinComb":
    try:
        fn = _PRODUCTS[basis]
    except KeyError:
        raise TypeError(f"no product registered for basis {basis!r}") from None
    return fn(a, b)


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def format_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _index_key(idx):
    return idx.display_key()


def _render(terms: list, render_index) -> str:
    if not terms:
        return "0"
    out = []
    for i, (idx, c) in enumerate(terms):
        neg = c < 0
        mag = -c if neg else c
        body = render_index(idx) if mag == 1 else f"{format_coef(mag)}*{render_index(idx)}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


class LinComb:
    """Finite formal sum of basis indices with nonzero Fraction coefficients."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        self.basis = basis
        self.terms: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for idx, c in items:
                c = _frac(c)
                if c:
                    v = self.terms.get(idx, 0) + c
                    if v:
                        self.terms[idx] = v
                    else:
                        self.terms.pop(idx, None)

    @classmethod
    def term(cls, basis: str, index, coef=1) -> "LinComb":
        return cls(basis, {index: coef})

    @classmethod
    def zero(cls, basis: str) -> "LinComb":
        return cls(basis)

    # -- container protocol
    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self):
        return iter(self.items())

    def items(self) -> list:
        """Terms as (index, coefficient) pairs in display order."""
        return sorted(self.terms.items(), key=lambda kv: _index_key(kv[0]))

    def coefficient(self, index) -> Fraction:
        return self.terms.get(index, Fraction(0))

    def __getitem__(self, index) -> Fraction:
        return self.coefficient(index)

    def support(self) -> set:
        return set(self.terms)

    # -- vector space
    def _check(self, other: "LinComb") -> None:
        if not isinstance(other, LinComb):
            raise TypeError(f"expected LinComb, got {type(other).__name__}")
        if other.basis != self.basis:
            raise TypeError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        self._check(other)
        out = LinComb(self.basis, self.terms)
        out._iadd(other)
        return out

    __radd__ = __add__

    def _iadd(self, other: "LinComb", coef=1) -> "LinComb":
        """In place ``self += coef * other``."""
        self._check(other)
        coef = _frac(coef)
        if not coef:
            return self
        t = self.terms
        for idx, c in other.terms.items():
            v = t.get(idx, 0) + coef * c
            if v:
                t[idx] = v
            else:
                t.pop(idx, None)
        return self

    def __neg__(self):
        return LinComb(self.basis, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        self._check(other)
        out = LinComb(self.basis, self.terms)
        out._iadd(other, -1)
        return out

    def scale(self, c) -> "LinComb":
        c = _frac(c)
        if not c:
            return LinComb(self.basis)
        return LinComb(self.basis, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = LinComb(self.basis)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                out._iadd(basis_product(self.basis, a, b), ca * cb)
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        return self.scale(Fraction(1) / _frac(c))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = LinComb.term(self.basis, _unit_index(self.basis))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self.terms
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def map(self, fn: Callable, basis: Optional[str] = None) -> "LinComb":
        """Linear extension of ``fn: index -> LinComb``."""
        out = None
        for idx, c in self.terms.items():
            img = fn(idx)
            if out is None:
                out = LinComb(img.basis)
            out._iadd(img, c)
        if out is None:
            if basis is None:
                raise ValueError("mapping the zero element needs an explicit target basis")
            return LinComb(basis)
        return out

    def homogeneous_degrees(self) -> set:
        return {idx.degree for idx in self.terms}

    # -- serialisation
    def __str__(self) -> str:
        return _render(self.items(), lambda idx: f"{self.basis}[{idx}]")

    def __repr__(self) -> str:
        return f"LinComb({self.basis!r}, {str(self)!r})"

    def to_json(self) -> list:
        return [{"coef": format_coef(c), "index": str(idx)} for idx, c in self.items()]

    @classmethod
    def from_json(cls, basis: str, data) -> "LinComb":
        if isinstance(data, str):
            data = json.loads(data)
        parse = _index_parser(basis)
        return cls(basis, [(parse(d["index"]), Fraction(d["coef"])) for d in data])


def _unit_index(basis: str):
    if basis in SUPERPARTITION_BASES:
        return Superpartition((), ())
    return Composition(())


def _index_parser(basis: str):
    if basis in COMPOSITION_BASES:
        return Composition.parse
    if basis in SUPERPARTITION_BASES:
        return Superpartition.parse
    raise ValueError(f"unknown basis {basis!r}")


_TERM_RE = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?([A-Za-z])\[(\([^\]]*\))\]\s*"
)


def parse_element(text: str) -> LinComb:
    """Parse ``2*H[(1)] - 1/2*H[(0d,1)]`` (or ``0`` with no basis)."""
    s = text.strip()
    pos = 0
    basis = None
    terms = []
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse element near {s[pos:]!r}")
        sign, coef, b, lit = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator before {m.group(0).strip()!r}")
        if basis is None:
            basis = b
        elif b != basis:
            raise ValueError(f"mixed bases {basis!r} and {b!r} in one element")
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        terms.append((_index_parser(b)(lit), c))
        pos = m.end()
        first = False
    if basis is None:
        raise ValueError(f"empty element literal {text!r}")
    return LinComb(basis, terms)


class TensorComb:
    """Sparse sum of k-fold tensors of basis elements."""

    __slots__ = ("bases", "terms")

    def __init__(self, bases: tuple, terms=None):
        self.bases = tuple(bases)
        self.terms: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for idx, c in items:
                self._add(tuple(idx), _frac(c))

    def _add(self, idx: tuple, c: Fraction) -> None:
        if not c:
            return
        v = self.terms.get(idx, 0) + c
        if v:
            self.terms[idx] = v
        else:
            self.terms.pop(idx, None)

    @classmethod
    def unit(cls, bases: tuple) -> "TensorComb":
        return cls(bases, {tuple(_unit_index(b) for b in bases): 1})

    @property
    def arity(self) -> int:
        return len(self.bases)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: tuple(_index_key(i) for i in kv[0]))

    def __iter__(self):
        return iter(self.items())

    def coefficient(self, idx) -> Fraction:
        return self.terms.get(tuple(idx), Fraction(0))

    def __getitem__(self, idx) -> Fraction:
        return self.coefficient(idx)

    def _check(self, other) -> None:
        if not isinstance(other, TensorComb):
            raise TypeError(f"expected TensorComb, got {type(other).__name__}")
        if other.bases != self.bases:
            raise TypeError(f"basis mismatch: {self.bases} vs {other.bases}")

    def _iadd(self, other: "TensorComb", coef=1) -> "TensorComb":
        self._check(other)
        coef = _frac(coef)
        for idx, c in other.terms.items():
            self._add(idx, coef * c)
        return self

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        out = TensorComb(self.bases, self.terms)
        return out._iadd(other)

    __radd__ = __add__

    def __sub__(self, other):
        out = TensorComb(self.bases, self.terms)
        return out._iadd(other, -1)

    def __neg__(self):
        return TensorComb(self.bases, {k: -v for k, v in self.terms.items()})

    def scale(self, c) -> "TensorComb":
        c = _frac(c)
        return TensorComb(self.bases, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = TensorComb(self.bases)
        k = self.arity
        for a, ca in self.terms.items():
            dfa = [x.df for x in a]
            for b, cb in other.terms.items():
                # b_j moves left past a_i for every i > j
                e = 0
                for j in range(k - 1):
                    if b[j].df:
                        e += b[j].df * sum(dfa[j + 1:])
                coef = ca * cb * (-1 if e % 2 else 1)
                factors = [basis_product(self.bases[i], a[i], b[i]) for i in range(k)]
                _accumulate_outer(out, factors, coef)
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self.terms
        if not isinstance(other, TensorComb):
            return NotImplemented
        return self.bases == other.bases and self.terms == other.terms

    def __hash__(self):
        return hash((self.bases, frozenset(self.terms.items())))

    def apply(self, *maps) -> "TensorComb":
        """Apply one linear map per factor.

        Each map sends an index to a LinComb or a TensorComb (the latter
        splices its factors in place, as for ``Delta (x) id``).  ``None``
        stands for the identity.  All maps used here are even, so no sign
        appears.
        """
        if len(maps) != self.arity:
            raise ValueError("need one map per tensor factor")
        out = None
        for idx, c in self.terms.items():
            parts = []
            for m, x, b in zip(maps, idx, self.bases):
                parts.append(LinComb.term(b, x) if m is None else m(x))
            img = tensor(*parts)
            if out is None:
                out = TensorComb(img.bases)
            out._iadd(img, c)
        if out is None:
            raise ValueError("cannot infer target bases of the zero tensor")
        return out

    def contract(self, fn: Callable, basis: str) -> LinComb:
        """Linear map to a LinComb via ``fn(index_tuple) -> LinComb``."""
        out = LinComb(basis)
        for idx, c in self.terms.items():
            out._iadd(fn(idx), c)
        return out

    def twist(self) -> "TensorComb":
        """tau(x (x) y) = (-1)^(df x df y) y (x) x, for arity two."""
        if self.arity != 2:
            raise ValueError("twist is defined on binary tensors")
        out = TensorComb((self.bases[1], self.bases[0]))
        for (x, y), c in self.terms.items():
            out._add((y, x), -c if (x.df * y.df) % 2 else c)
        return out

    def __str__(self) -> str:
        return _render(self.items(),
                       lambda idx: " ⊗ ".join(f"{b}[{x}]" for b, x in zip(self.bases, idx)))

    def __repr__(self) -> str:
        return f"TensorComb({self.bases!r}, {str(self)!r})"

    def to_json(self) -> list:
        return [{"coef": format_coef(c), "index": [str(x) for x in idx]} for idx, c in self.items()]


def _accumulate_outer(out: TensorComb, factors, coef: Fraction) -> None:
    acc = [((), coef)]
    for f in factors:
        acc = [(idx + (x,), c * cx) for idx, c in acc for x, cx in f.terms.items()]
    for idx, c in acc:
        out._add(idx, c)


def tensor(*parts) -> TensorComb:
    """Outer product of LinCombs and TensorCombs, flattening tensors."""
    bases: tuple = ()
    acc = [((), Fraction(1))]
    for p in parts:
        if isinstance(p, TensorComb):
            bases += p.bases
            items = p.terms.items()
        else:
            bases += (p.basis,)
            items = (((x,), c) for x, c in p.terms.items())
        items = list(items)
        acc = [(idx + x, c * cx) for idx, c in acc for x, cx in items]
    out = TensorComb(bases)
    for idx, c in acc:
        out._add(idx, c)
    return out


# -- exact elimination ----------------------------------------------------

def _echelon(rows: list) -> list:
    """Row-reduce a list of Fraction rows in place; returns pivot columns."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(vectors: Iterable[LinComb]) -> int:
    """Rank over Q of a family of combinations in one basis."""
    vectors = list(vectors)
    cols = sorted({i for v in vectors for i in v.terms}, key=_index_key)
    pos = {c: j for j, c in enumerate(cols)}
    rows = []
    for v in vectors:
        row = [Fraction(0)] * len(cols)
        for i, c in v.terms.items():
            row[pos[i]] = c
        rows.append(row)
    return len(_echelon(rows)) if rows else 0


def solve(vectors: list, target: LinComb) -> Optional[list]:
    """Coefficients x with sum x_i vectors[i] == target, or None if none exist.

    When the family is dependent an arbitrary solution is returned.
    """
    cols = sorted({i for v in list(vectors) + [target] for i in v.terms}, key=_index_key)
    n = len(vectors)
    # augmented system: one equation per column index
    rows = []
    for c in cols:
        rows.append([v.coefficient(c) for v in vectors] + [target.coefficient(c)])
    if not rows:
        return [Fraction(0)] * n
    pivots = _echelon(rows)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = rows[r][n]
    return x
