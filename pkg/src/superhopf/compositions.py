"""Dotted compositions, the partial sum ``oplus``, and the covering order.

A dotted composition is a tuple of parts, each part either bosonic (a positive
integer) or fermionic/dotted (a nonnegative integer written with a ``d``
suffix).  The text form is ``(0d,1,2d,1)``; the empty composition is ``()``.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterable, NamedTuple, Optional, Union

__all__ = [
    "Part",
    "ZERO",
    "BothDottedError",
    "Composition",
    "Superpartition",
    "oplus",
    "odot",
    "less_eq",
    "up_set",
    "down_set",
    "covers",
    "covered_by",
    "maximal_covers",
    "enumerate_degree",
    "to_superpartition",
    "count_inversions",
    "superpartitions_of_degree",
]


class Part(NamedTuple):
    value: int
    dotted: bool = False

    def __str__(self) -> str:
        return f"{self.value}d" if self.dotted else str(self.value)

    @property
    def degree(self) -> int:
        return self.value + (1 if self.dotted else 0)

    @property
    def is_zero(self) -> bool:
        return self.value == 0 and not self.dotted

    @classmethod
    def parse(cls, token: str) -> "Part":
        m = re.fullmatch(r"\s*(\d+)\s*(d?)\s*", token)
        if m is None:
            raise ValueError(f"bad part literal {token!r}")
        return cls(int(m.group(1)), m.group(2) == "d")


# The undotted 0: the result of dotted+dotted, standing for H_0 = 1.
ZERO = Part(0, False)


class BothDottedError(ValueError):
    """Raised when two dotted parts would have to be merged."""


def _as_part(p: Union[Part, int, str]) -> Part:
    if isinstance(p, Part):
        return p
    if isinstance(p, str):
        return Part.parse(p)
    if isinstance(p, int) and not isinstance(p, bool):
        return Part(p, False)
    raise TypeError(f"cannot interpret {p!r} as a part")


class Composition(tuple):
    """Immutable dotted composition.

    >>> Composition.parse("(1,0d,2)").degree
    4
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[Union[Part, int, str]] = ()):
        if isinstance(parts, str):
            return cls.parse(parts)
        ps = tuple(_as_part(p) for p in parts)
        for p in ps:
            if p.value < 0 or (not p.dotted and p.value == 0):
                raise ValueError(f"invalid component {p!r}")
        return super().__new__(cls, ps)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError(f"composition literal must be parenthesised: {text!r}")
        body = s[1:-1].strip()
        if not body:
            return cls(())
        return cls(Part.parse(tok) for tok in body.split(","))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"

    def __repr__(self) -> str:
        return f"Composition({str(self)!r})"

    def __add__(self, other):
        return Composition(tuple.__add__(self, tuple(other)))

    def __getitem__(self, i):
        r = tuple.__getitem__(self, i)
        return Composition(r) if isinstance(i, slice) else r

    @property
    def degree(self) -> int:
        return sum(p.degree for p in self)

    @property
    def df(self) -> int:
        return sum(1 for p in self if p.dotted)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def is_classic(self) -> bool:
        return not any(p.dotted for p in self)

    def rev(self) -> "Composition":
        return Composition(reversed(self))

    def key(self):
        """Canonical sort key: degree, then longer first, then fewer dots, then
        part by part with a dotted part placed before the bosonic part of
        equal value."""
        return (self.degree, -len(self), self.df, tuple((p.value, not p.dotted) for p in self))

    def display_key(self):
        """Order used when printing sums: degree, then parts compared left to
        right with larger values first and a bosonic part before a dotted one."""
        return (self.degree, tuple((-p.value, p.dotted) for p in self))


Comp = Composition


def oplus(a: Part, b: Part) -> Part:
    """Partial sum on N0 plus dotted N0.  Two dotted parts give ``ZERO``."""
    r = a.value + b.value
    if a.dotted and b.dotted:
        return ZERO
    return Part(r, a.dotted or b.dotted)


def odot(alpha: Composition, beta: Composition) -> Composition:
    if not alpha or not beta:
        raise ValueError("odot needs two nonempty compositions")
    x, y = alpha[-1], beta[0]
    if x.dotted and y.dotted:
        raise BothDottedError(f"{alpha} odot {beta}: boundary parts are both dotted")
    return Composition(tuple(alpha[:-1]) + (oplus(x, y),) + tuple(beta[1:]))


def _splits(p: Part) -> list[tuple[Part, Part]]:
    """All (a, b) with a (+) b == p, a and b genuine parts, not both dotted."""
    out = []
    if p.dotted:
        for k in range(p.value):
            out.append((Part(k, True), Part(p.value - k, False)))
        for k in range(1, p.value + 1):
            out.append((Part(k, False), Part(p.value - k, True)))
    else:
        for k in range(1, p.value):
            out.append((Part(k, False), Part(p.value - k, False)))
    return out


@lru_cache(maxsize=None)
def covers(alpha: Composition) -> frozenset:
    """Compositions obtained from alpha by one merge of adjacent parts."""
    out = set()
    for i in range(len(alpha) - 1):
        a, b = alpha[i], alpha[i + 1]
        if a.dotted and b.dotted:
            continue
        out.add(Composition(tuple(alpha[:i]) + (oplus(a, b),) + tuple(alpha[i + 2:])))
    return frozenset(out)


@lru_cache(maxsize=None)
def covered_by(alpha: Composition) -> frozenset:
    """Compositions that alpha covers in one step (one part split in two)."""
    out = set()
    for i, p in enumerate(alpha):
        for a, b in _splits(p):
            out.add(Composition(tuple(alpha[:i]) + (a, b) + tuple(alpha[i + 1:])))
    return frozenset(out)


def _closure(start: Composition, step) -> frozenset:
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for d in step(c):
                if d not in seen:
                    seen.add(d)
                    nxt.append(d)
        frontier = nxt
    return frozenset(seen)


@lru_cache(maxsize=None)
def up_set(alpha: Composition) -> frozenset:
    """All beta with alpha <= beta (alpha included)."""
    return _closure(Composition(alpha), covers)


@lru_cache(maxsize=None)
def down_set(alpha: Composition) -> frozenset:
    """All beta with beta <= alpha (alpha included)."""
    return _closure(Composition(alpha), covered_by)


def less_eq(alpha: Composition, beta: Composition) -> bool:
    if alpha == beta:
        return True
    if alpha.degree != beta.degree or alpha.df != beta.df or len(beta) >= len(alpha):
        return False
    return beta in up_set(alpha)


def _oplus_all(parts) -> Part:
    acc = ZERO
    for p in parts:
        acc = oplus(acc, p)
    return acc


def maximal_covers(alpha: Composition) -> frozenset:
    """Maximal elements above alpha.

    With at least one dotted part these come from convex partitions into
    blocks holding exactly one dotted part each, every block summed.
    """
    alpha = Composition(alpha)
    if not alpha:
        return frozenset({alpha})
    dots = [i for i, p in enumerate(alpha) if p.dotted]
    if not dots:
        return frozenset({Composition((Part(alpha.degree, False),))})
    # bosonic runs strictly between consecutive dots can be cut anywhere
    choices = [range(dots[j] + 1, dots[j + 1] + 1) for j in range(len(dots) - 1)]
    out = set()
    for cuts in _cartesian(*choices):
        bounds = (0,) + cuts + (len(alpha),)
        blocks = [alpha[bounds[j]:bounds[j + 1]] for j in range(len(bounds) - 1)]
        out.add(Composition(_oplus_all(b) for b in blocks))
    return frozenset(out)


@lru_cache(maxsize=None)
def _compositions_of(n: int) -> tuple:
    if n == 0:
        return (Composition(()),)
    out = []
    for first in range(1, n + 1):
        # bosonic first part of degree `first`, or dotted part value first-1
        for p in (Part(first, False), Part(first - 1, True)):
            for rest in _compositions_of(n - first):
                out.append(Composition((p,) + tuple(rest)))
    return tuple(out)


def enumerate_degree(n: int) -> list:
    """All dotted compositions of degree n in canonical order."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return sorted(_compositions_of(n), key=Composition.key)


def count_inversions(seq) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


class Superpartition(NamedTuple):
    """Pair (fermionic; bosonic), fermionic strictly decreasing, bosonic weakly decreasing."""

    fermionic: tuple = ()
    bosonic: tuple = ()

    @classmethod
    def make(cls, fermionic=(), bosonic=()) -> "Superpartition":
        f, b = tuple(int(x) for x in fermionic), tuple(int(x) for x in bosonic)
        if any(f[i] <= f[i + 1] for i in range(len(f) - 1)) or any(x < 0 for x in f):
            raise ValueError(f"fermionic part must be strictly decreasing and >= 0: {f}")
        if any(b[i] < b[i + 1] for i in range(len(b) - 1)) or any(x < 1 for x in b):
            raise ValueError(f"bosonic part must be a partition: {b}")
        return cls(f, b)

    @classmethod
    def parse(cls, text: str) -> "Superpartition":
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")) or s.count(";") != 1:
            raise ValueError(f"superpartition literal must look like (2d,0d;1,1): {text!r}")
        left, right = s[1:-1].split(";")
        ferm = []
        for tok in filter(None, (t.strip() for t in left.split(","))):
            p = Part.parse(tok)
            if not p.dotted:
                raise ValueError(f"fermionic entry must be dotted: {tok!r}")
            ferm.append(p.value)
        bos = []
        for tok in filter(None, (t.strip() for t in right.split(","))):
            p = Part.parse(tok)
            if p.dotted:
                raise ValueError(f"bosonic entry must not be dotted: {tok!r}")
            bos.append(p.value)
        return cls.make(ferm, bos)

    def __str__(self) -> str:
        f = ",".join(f"{x}d" for x in self.fermionic)
        b = ",".join(str(x) for x in self.bosonic)
        return f"({f};{b})"

    @property
    def df(self) -> int:
        return len(self.fermionic)

    @property
    def degree(self) -> int:
        return sum(self.fermionic) + sum(self.bosonic) + len(self.fermionic)

    @property
    def length(self) -> int:
        return len(self.fermionic) + len(self.bosonic)

    def as_composition(self) -> Composition:
        return Composition([Part(x, True) for x in self.fermionic] + [Part(x, False) for x in self.bosonic])

    def key(self):
        return self.as_composition().key()

    def display_key(self):
        return self.as_composition().display_key()


def to_superpartition(alpha: Composition) -> Optional[tuple]:
    """Sort alpha into a superpartition, returning ``(Lambda, sign)``.

    Returns None when alpha repeats a dotted value.  The sign is the parity of
    the permutation sorting the dotted parts into decreasing order.
    """
    dotted = [p.value for p in alpha if p.dotted]
    if len(set(dotted)) != len(dotted):
        return None
    # inversions relative to decreasing order
    sigma = count_inversions([-v for v in dotted])
    lam = Superpartition(tuple(sorted(dotted, reverse=True)),
                         tuple(sorted((p.value for p in alpha if not p.dotted), reverse=True)))
    return lam, (-1) ** sigma


def superpartitions_of_degree(n: int) -> list:
    """Superpartitions whose dotted-composition degree is n, in canonical order."""
    seen = set()
    for c in _compositions_of(n):
        r = to_superpartition(c)
        if r is not None:
            seen.add(r[0])
    return sorted(seen, key=Superpartition.key)

