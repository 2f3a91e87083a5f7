"""Integer partitions, Young diagrams, hook lengths, and the walk bijection.

A partition corresponds to a numerical set through the profile walk: reading
n = 0, 1, 2, ... , step right when n is a member and up when n is a gap.  The
finite staircase this traces is the profile of the Young diagram of a
partition, the enumeration of the set.  Boxes of that diagram are labelled by
pairs (u, x) with u a member, x a gap and u < x; the hook of box (u, x) has
length x - u.

Hook sets here are always computed geometrically from the diagram (arm + leg
+ 1 per box) so that the identity between the hook set of the enumeration and
the gaps of the atom monoid stays an honest cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import NumericalSemigroup, NumericalSet


class Partition:
    """A weakly decreasing tuple of positive parts (possibly empty)."""

    def __init__(self, parts: Iterable[int] = ()):
        p = tuple(parts)
        for i, part in enumerate(p):
            if part < 1:
                raise ValueError(f"parts must be positive, got {part}")
            if i and p[i - 1] < part:
                raise ValueError(f"parts must be weakly decreasing, got {p}")
        self.parts: tuple[int, ...] = p

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram; column lengths become parts."""
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p > j)
                         for j in range(self.parts[0]))

    @property
    def durfee(self) -> int:
        """Side of the largest square inside the diagram."""
        return sum(1 for i, p in enumerate(self.parts) if p >= i + 1)

    def hook_grid(self) -> list[list[int]]:
        """Hook length of every box, row by row (arm + leg + 1)."""
        conj = self.conjugate().parts
        return [[row - j + conj[j] - i - 1 for j in range(row)]
                for i, row in enumerate(self.parts)]

    def hook_set(self) -> frozenset[int]:
        return frozenset(h for row in self.hook_grid() for h in row)

    def hook_lengths(self) -> tuple[int, ...]:
        """All hook lengths with multiplicity, sorted."""
        return tuple(sorted(h for row in self.hook_grid() for h in row))

    def to_json(self) -> dict:
        return {"parts": list(self.parts)}


def enumeration(t: NumericalSet) -> Partition:
    """The partition traced by the profile walk of t.

    The part contributed by gap x (gaps taken in decreasing order) is the
    number of members below x.
    """
    return Partition(t.count_below(x) for x in reversed(t.gaps))


def numerical_set_of(p: Partition) -> NumericalSet:
    """Inverse of enumeration: gap k-th from the top is part_k + (rows below k)."""
    n = len(p.parts)
    return NumericalSet(part + (n - 1 - i) for i, part in enumerate(p.parts))


def size_via_gap_count(t: NumericalSet) -> int:
    """|enumeration(t)| counted directly as pairs u < x with u member, x gap."""
    return sum(t.count_below(x) for x in t.gaps)


def hook_length(t: NumericalSet, u: int, x: int) -> int:
    """Length of the hook of box (u, x), which is x - u."""
    if u not in t or x in t or x < 0 or not u < x:
        raise ValueError(f"not a box: u={u}, x={x}")
    return x - u


@dataclass(frozen=True)
class SectionCell:
    box_count: int
    hook_lengths: frozenset[int]


@dataclass(frozen=True)
class SectionGrid:
    """Division of a Young diagram into sections along multiples of m.

    Box (u, x) lands in cell (a, b) with b = u // m and a = (F - x) // m,
    where m and F come from the semigroup the diagram is associated to.
    Cells exist for a, b >= 0 with a + b <= depth - 1.
    """

    multiplicity: int
    frobenius: int
    depth: int
    cells: dict[tuple[int, int], SectionCell]

    @property
    def total_boxes(self) -> int:
        return sum(c.box_count for c in self.cells.values())

    def depth2_cells(self) -> tuple[SectionCell, SectionCell, SectionCell]:
        """The three cells of a depth-2 grid: (1,0), (0,0), (0,1)."""
        if self.depth != 2:
            raise ValueError(f"grid has depth {self.depth}, not 2")
        return self.cells[(1, 0)], self.cells[(0, 0)], self.cells[(0, 1)]


def sections(t: NumericalSet, s: NumericalSemigroup) -> SectionGrid:
    """Section grid of the diagram of t relative to s.

    The caller asserts that t is associated to s (atom monoid equal to s);
    only m, F and depth of s are used.
    """
    if s.frobenius < 0:
        raise ValueError("sections undefined for N")
    m, F, q = s.multiplicity, s.frobenius, s.depth
    counts = {(a, b): 0 for a in range(q) for b in range(q - a)}
    hooks: dict[tuple[int, int], set[int]] = {ab: set() for ab in counts}
    for x in t.gaps:
        a = (F - x) // m
        bits = t.mask & ((1 << x) - 1)
        while bits:
            u = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            cell = (a, u // m)
            if cell not in counts:
                raise ValueError(f"box ({u},{x}) falls outside the grid")
            counts[cell] += 1
            hooks[cell].add(x - u)
    cells = {ab: SectionCell(counts[ab], frozenset(hooks[ab])) for ab in counts}
    return SectionGrid(m, F, q, cells)


def render_young(p: Partition, hooks: bool = False) -> str:
    """ASCII Young diagram, one cell per box, or hook lengths per box."""
    if not p.parts:
        return ""
    if not hooks:
        return "\n".join("#" * part for part in p.parts)
    grid = p.hook_grid()
    width = len(str(grid[0][0]))
    return "\n".join(" ".join(str(h).rjust(width) for h in row) for row in grid)


def walk_string(t: NumericalSet) -> str:
    """Profile walk of t: R for member, U for gap, up to the last gap."""
    steps = "".join("R" if n in t else "U" for n in range(t.frobenius + 1))
    return steps + "->"
