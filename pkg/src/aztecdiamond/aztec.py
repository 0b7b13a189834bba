"""The Aztec diamond, its domino tilings, and the tiling <-> path-family map.

Cells are named by their lower-left corner.  Row ``i`` (1..2n, bottom to top)
holds the cells with ``y == i - 1 - n``.  The midpoint of the vertical edge at
abscissa ``x`` in that row is written ``(x, y)`` using the same ``y``, which
keeps path tracing in integers: a horizontal domino moves ``(x, y)`` to
``(x+2, y)`` (level step), a vertical domino entered through its lower cell
moves to ``(x+1, y+1)`` (up step), and one entered through its upper cell moves
to ``(x+1, y-1)`` (down step).  With this naming the x-coordinates of the
tracing path and of the final Schroeder path agree, and path height is
``y + n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import (
    DomainError,
    InternalConsistencyError,
    SizeLimitError,
    TilingValidationError,
)
from .hankel import determinant, hankel_matrix
from .lgv import AnchorScheme, PathFamily
from .schroeder import SchroederPath, anchor_a

HORIZONTAL = "H"
VERTICAL = "V"
DEFAULT_TILING_CUTOFF = 5
METHODS = ("formula", "determinant", "enumeration")


class Domino(NamedTuple):
    x: int
    y: int
    o: str  # "H" covers (x, y) and (x+1, y); "V" covers (x, y) and (x, y+1)

    def cells(self) -> tuple[tuple[int, int], tuple[int, int]]:
        if self.o == HORIZONTAL:
            return (self.x, self.y), (self.x + 1, self.y)
        return (self.x, self.y), (self.x, self.y + 1)

    def sort_key(self):
        return (self.y, self.x, self.o)

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y, "o": self.o}


def _in_diamond(x, y, n):
    return all(abs(cx) + abs(cy) <= n + 1 for cx in (x, x + 1) for cy in (y, y + 1))


@lru_cache(maxsize=None)
def _region(n: int) -> frozenset:
    return frozenset(
        (x, y)
        for y in range(-n - 1, n + 1)
        for x in range(-n - 1, n + 1)
        if _in_diamond(x, y, n)
    )


def region_cells(n: int) -> frozenset[tuple[int, int]]:
    if n < 1:
        raise ValueError("order must be positive")
    return _region(n)


def row_y(n: int, i: int) -> int:
    return i - 1 - n


@dataclass(frozen=True)
class Tiling:
    order: int
    dominoes: frozenset

    def __post_init__(self):
        object.__setattr__(
            self, "dominoes", frozenset(Domino(int(d[0]), int(d[1]), str(d[2])) for d in self.dominoes)
        )

    def sorted_dominoes(self) -> list[Domino]:
        return sorted(self.dominoes, key=Domino.sort_key)

    def validate(self) -> Tiling:
        """Raise :class:`TilingValidationError` naming the first offending domino."""
        region = region_cells(self.order)
        covered: dict = {}
        for d in self.sorted_dominoes():
            if d.o not in (HORIZONTAL, VERTICAL):
                raise TilingValidationError(f"domino {d.to_json()}: orientation must be H or V")
            for c in d.cells():
                if c not in region:
                    raise TilingValidationError(
                        f"domino {d.to_json()}: cell {c} lies outside Az({self.order})"
                    )
                if c in covered:
                    raise TilingValidationError(
                        f"domino {d.to_json()}: cell {c} already covered by {covered[c].to_json()}"
                    )
                covered[c] = d
        if len(covered) != len(region):
            missing = min(region - covered.keys(), key=lambda c: (c[1], c[0]))
            raise TilingValidationError(f"cell {missing} of Az({self.order}) is not covered")
        return self

    def cell_owner(self) -> dict:
        return {c: d for d in self.dominoes for c in d.cells()}

    def to_json(self) -> dict:
        return {"order": self.order, "dominoes": [d.to_json() for d in self.sorted_dominoes()]}

    @classmethod
    def from_json(cls, obj: dict) -> Tiling:
        try:
            order = int(obj["order"])
            dominoes = [Domino(int(d["x"]), int(d["y"]), str(d["o"])) for d in obj["dominoes"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise TilingValidationError(f"malformed tiling record: {exc}") from exc
        if order < 1:
            raise TilingValidationError(f"order must be positive, got {order}")
        return cls(order, frozenset(dominoes))


def iter_tilings(n: int) -> Iterator[Tiling]:
    """Backtracking over the least uncovered cell in (y, x) order, H before V."""
    region = region_cells(n)
    cells = sorted(region, key=lambda c: (c[1], c[0]))
    index = {c: k for k, c in enumerate(cells)}
    covered = [False] * len(cells)
    placed: list[Domino] = []

    def search(k):
        while k < len(cells) and covered[k]:
            k += 1
        if k == len(cells):
            yield Tiling(n, frozenset(placed))
            return
        x, y = cells[k]
        for o, other in ((HORIZONTAL, (x + 1, y)), (VERTICAL, (x, y + 1))):
            m = index.get(other)
            if m is None or covered[m]:
                continue
            covered[k] = covered[m] = True
            placed.append(Domino(x, y, o))
            yield from search(k + 1)
            placed.pop()
            covered[k] = covered[m] = False

    yield from search(0)


def enumerate_tilings(n: int, max_n: int = DEFAULT_TILING_CUTOFF) -> list[Tiling]:
    if n < 1:
        raise ValueError("order must be positive")
    if n > max_n:
        raise SizeLimitError("tiling enumeration", n, max_n)
    return list(iter_tilings(n))


def count_tilings(n: int, method: str = "formula", max_n: int = DEFAULT_TILING_CUTOFF) -> int:
    if n < 1:
        raise ValueError("order must be positive")
    if method == "formula":
        return 2 ** (n * (n + 1) // 2)
    if method == "determinant":
        return determinant(hankel_matrix("H1", n))
    if method == "enumeration":
        if n > max_n:
            raise SizeLimitError("tiling enumeration", n, max_n)
        return sum(1 for _ in iter_tilings(n))
    raise ValueError(f"unknown counting method {method!r}; expected one of {METHODS}")


def trace_row(t: Tiling, i: int, owner: dict | None = None) -> str:
    """Step word of the path threaded through row ``i`` from its left edge to its right edge."""
    n = t.order
    owner = t.cell_owner() if owner is None else owner
    y0 = row_y(n, i)
    x, y = -i, y0
    word = []
    while x < i:
        d = owner.get((x, y))
        if d is None:
            raise TilingValidationError(f"row {i}: no domino east of edge midpoint ({x}, {y})")
        if d.o == HORIZONTAL:
            if d.x != x:
                raise TilingValidationError(
                    f"row {i}: edge midpoint ({x}, {y}) cuts through domino {d.to_json()}"
                )
            word.append("L")
            x += 2
        elif d.y == y:
            word.append("U")
            x, y = x + 1, y + 1
        else:
            word.append("D")
            x, y = x + 1, y - 1
    if (x, y) != (i, y0):
        raise TilingValidationError(f"row {i}: path exits at ({x}, {y}), not at the row's right edge")
    return "".join(word)


def tiling_to_paths(t: Tiling) -> PathFamily:
    """Map a tiling to its non-intersecting family of large Schroeder paths."""
    t.validate()
    n = t.order
    owner = t.cell_owner()
    paths = []
    for i in range(1, n + 1):
        word = "U" * (i - 1) + trace_row(t, i, owner) + "D" * (i - 1)
        try:
            paths.append(SchroederPath(anchor_a(i), word))
        except ValueError as exc:
            raise TilingValidationError(f"row {i}: {exc}") from exc
    family = PathFamily(AnchorScheme("pi", n), tuple(paths))
    if not family.nonintersecting:
        raise InternalConsistencyError("traced paths intersect")
    return family


def paths_to_tiling(f: PathFamily) -> Tiling:
    """Inverse of :func:`tiling_to_paths`: lay dominoes along each path, fill the rest horizontally."""
    if f.scheme.kind != "pi":
        raise DomainError(f"expected a pi family, got {f.scheme.kind}")
    if not f.nonintersecting:
        raise DomainError("family paths intersect")
    n = f.scheme.n
    if n < 1:
        raise DomainError("family must contain at least one path")
    region = region_cells(n)
    covered: set = set()
    dominoes = []

    def place(d):
        for c in d.cells():
            if c not in region or c in covered:
                raise InternalConsistencyError(f"domino {d.to_json()} does not fit")
            covered.add(c)
        dominoes.append(d)

    for i, p in enumerate(f.paths, start=1):
        frame = i - 1
        s = p.steps
        if len(s) < 2 * frame or s[:frame] != "U" * frame or s[len(s) - frame:] != "D" * frame:
            raise DomainError(f"path {i} ({s}) is not framed by {frame} up and down steps")
        x, y = -i, row_y(n, i)
        for step in s[frame:len(s) - frame]:
            if step == "L":
                place(Domino(x, y, HORIZONTAL))
                x += 2
            elif step == "U":
                place(Domino(x, y, VERTICAL))
                x, y = x + 1, y + 1
            else:
                place(Domino(x, y - 1, VERTICAL))
                x, y = x + 1, y - 1

    rest = sorted(region - covered, key=lambda c: (c[1], c[0]))
    for a, b in zip(rest[::2], rest[1::2]):
        if b != (a[0] + 1, a[1]):
            raise InternalConsistencyError(f"cells {a} and {b} cannot share a horizontal domino")
        dominoes.append(Domino(a[0], a[1], HORIZONTAL))
    if len(rest) % 2:
        raise InternalConsistencyError(f"cell {rest[-1]} is left unpaired")
    return Tiling(n, frozenset(dominoes))


def pi_families_via_tilings(n: int, max_n: int = DEFAULT_TILING_CUTOFF) -> list[PathFamily]:
    """All of Pi_n, obtained as the image of every tiling; avoids direct path search."""
    if n > max_n:
        raise SizeLimitError("tiling enumeration", n, max_n)
    return [tiling_to_paths(t) for t in iter_tilings(n)]

