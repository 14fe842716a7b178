"""Planar ladder forests and the admissible-cut coproduct.

Every tree arising from sNSym is a ladder ``t_n`` (n non-root nodes in a
chain) or ``t_nd``: a ladder ``t_n`` whose root also carries one coloured leaf.
So a tree is stored as ``(degree, coloured)`` and a cut as the pair
``(main, coloured)``: ``main`` is the index 1..n of the cut chain edge, counted
from the root, or None; ``coloured`` says whether the coloured edge is cut.

In text form a tree cut is ``-`` (nothing), an edge offset such as ``2``, ``0``
for the coloured edge, or ``0+2`` for both; a forest cut is the bracketed,
comma separated list of its tree cuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import NamedTuple, Optional

from .compositions import Composition, Part, count_inversions
from .linalg import TensorComb

__all__ = [
    "LadderTree",
    "TreeCut",
    "Forest",
    "forest_of",
    "composition_of",
    "admissible_cuts",
    "cut_split",
    "tree_coproduct",
    "InadmissibleCut",
    "tree_cuts",
    "cut_permutation",
    "format_cut",
    "parse_cut",
]


class InadmissibleCut(ValueError):
    pass


class LadderTree(NamedTuple):
    chain: int  # length of the uncoloured chain
    coloured: bool = False

    @property
    def degree(self) -> int:
        return self.chain + (1 if self.coloured else 0)

    def part(self) -> Optional[Part]:
        """The generator index; None for the bare root t_0."""
        if self.coloured:
            return Part(self.chain, True)
        return Part(self.chain, False) if self.chain else None

    def __str__(self) -> str:
        return f"t{self.chain}d" if self.coloured else f"t{self.chain}"


class TreeCut(NamedTuple):
    main: Optional[int] = None
    coloured: bool = False

    def __str__(self) -> str:
        if self.main is None and not self.coloured:
            return "-"
        bits = (["0"] if self.coloured else []) + ([str(self.main)] if self.main is not None else [])
        return "+".join(bits)

    @classmethod
    def parse(cls, text: str) -> "TreeCut":
        text = text.strip()
        if text == "-":
            return cls()
        offs = [int(t) for t in text.split("+")]
        coloured = 0 in offs
        main = [o for o in offs if o != 0]
        if len(main) > 1 or len(offs) != len(set(offs)):
            raise InadmissibleCut(f"two edges on one branch: {text!r}")
        return cls(main[0] if main else None, coloured)


@dataclass(frozen=True)
class Forest:
    trees: tuple

    def __str__(self) -> str:
        return f"t[{composition_of(self)}]"

    @property
    def coloured_count(self) -> int:
        return sum(1 for t in self.trees if t.coloured)


def forest_of(alpha) -> Forest:
    if isinstance(alpha, str):
        alpha = Composition.parse(alpha)
    return Forest(tuple(LadderTree(p.value, p.dotted) for p in alpha))


def composition_of(f: Forest) -> Composition:
    # bare roots t_0 are the unit and drop out
    return Composition(p for p in (t.part() for t in f.trees) if p is not None)


def tree_cuts(t: LadderTree) -> list:
    mains = [None] + list(range(1, t.chain + 1))
    cols = [False, True] if t.coloured else [False]
    return [TreeCut(m, c) for c in cols for m in mains]


def admissible_cuts(f: Forest) -> list:
    """Every tuple of per-tree admissible cuts, the empty cut first."""
    return [tuple(c) for c in _cartesian(*(tree_cuts(t) for t in f.trees))]


def _check(t: LadderTree, c: TreeCut) -> None:
    if c.coloured and not t.coloured:
        raise InadmissibleCut(f"{t} has no coloured edge")
    if c.main is not None and not 1 <= c.main <= t.chain:
        raise InadmissibleCut(f"{t} has no chain edge {c.main}")


def _split_tree(t: LadderTree, c: TreeCut):
    """(P^c(t), R^c(t)) for one tree."""
    _check(t, c)
    kept = t.chain if c.main is None else c.main - 1
    pruned = LadderTree(t.chain - kept, c.coloured)
    rooted = LadderTree(kept, t.coloured and not c.coloured)
    return pruned, rooted


def cut_permutation(f: Forest, cut) -> tuple:
    """Labels 1..j of the coloured nodes, read in P^c then R^c order."""
    label = 0
    in_p, in_r = [], []
    for t, c in zip(f.trees, cut):
        if t.coloured:
            label += 1
            (in_p if c.coloured else in_r).append(label)
    return tuple(in_p + in_r)


def cut_split(f: Forest, cut) -> tuple:
    """Return ``(P^c, R^c, sign)`` for an admissible cut of a forest."""
    if isinstance(cut, str):
        cut = parse_cut(cut)
    cut = tuple(cut)
    if len(cut) != len(f.trees):
        raise InadmissibleCut("cut must name one tree cut per tree")
    ps, rs = [], []
    for t, c in zip(f.trees, cut):
        p, r = _split_tree(t, c)
        ps.append(p)
        rs.append(r)
    sign = -1 if count_inversions(cut_permutation(f, cut)) % 2 else 1
    return Forest(tuple(ps)), Forest(tuple(rs)), sign


def format_cut(cut) -> str:
    return "[" + ",".join(str(c) for c in cut) + "]"


def parse_cut(text: str) -> tuple:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"cut literal must be bracketed: {text!r}")
    body = s[1:-1].strip()
    return tuple(TreeCut.parse(tok) for tok in body.split(",")) if body else ()


def tree_coproduct(alpha) -> TensorComb:
    """sum over admissible cuts of sgn(c) P^c (x) R^c, re-encoded as compositions."""
    f = forest_of(alpha)
    out = TensorComb(("H", "H"))
    for cut in admissible_cuts(f):
        p, r, s = cut_split(f, cut)
        out._add((composition_of(p), composition_of(r)), s)
    return out

