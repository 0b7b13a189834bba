"""Schroeder lattice paths and the large/small Schroeder numbers.

A path is stored as its starting abscissa plus a step word over ``U``, ``L``
and ``D``; paths always start and end on the x-axis.  Enumeration walks steps
in the order U < L < D, so the output is lexicographic in that alphabet.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InvalidSpanError

STEP_ORDER = "ULD"


class Step(str, enum.Enum):
    UP = "U"
    LEVEL = "L"
    DOWN = "D"

    @property
    def dx(self) -> int:
        return 2 if self is Step.LEVEL else 1

    @property
    def dy(self) -> int:
        return {"U": 1, "L": 0, "D": -1}[self.value]


_DX = {"U": 1, "L": 2, "D": 1}
_DY = {"U": 1, "L": 0, "D": -1}


@dataclass(frozen=True, order=True)
class SchroederPath:
    """A path from ``(start_x, 0)`` back to the axis that never dips below it."""

    start_x: int
    steps: str = ""

    def __post_init__(self):
        if isinstance(self.steps, (list, tuple)):
            object.__setattr__(
                self, "steps", "".join(Step(s).value for s in self.steps)
            )
        h = 0
        for s in self.steps:
            if s not in _DY:
                raise ValueError(f"unknown step {s!r} in {self.steps!r}")
            h += _DY[s]
            if h < 0:
                raise ValueError(f"path {self.steps!r} passes below the x-axis")
        if h != 0:
            raise ValueError(f"path {self.steps!r} does not return to the x-axis")

    @property
    def width(self) -> int:
        return sum(_DX[s] for s in self.steps)

    @property
    def end_x(self) -> int:
        return self.start_x + self.width

    @property
    def semilength(self) -> int:
        return self.width // 2

    def vertices(self) -> tuple[tuple[int, int], ...]:
        """Lattice points visited, start point included, in path order."""
        x, y = self.start_x, 0
        out = [(x, y)]
        for s in self.steps:
            x += _DX[s]
            y += _DY[s]
            out.append((x, y))
        return tuple(out)

    @property
    def is_small(self) -> bool:
        h = 0
        for s in self.steps:
            if s == "L" and h == 0:
                return False
            h += _DY[s]
        return True

    def shifted(self, dx: int) -> SchroederPath:
        return SchroederPath(self.start_x + dx, self.steps)

    def to_json(self) -> dict:
        return {"start_x": self.start_x, "steps": self.steps}

    @classmethod
    def from_json(cls, obj: dict) -> SchroederPath:
        return cls(int(obj["start_x"]), str(obj["steps"]))

    def __str__(self):
        return f"{self.steps or '.'}@{self.start_x}"


@lru_cache(maxsize=None)
def _large_table(n: int) -> tuple[int, ...]:
    # first-return decomposition: r_{m+1} = r_m + sum_k r_k r_{m-k}
    r = [1]
    for m in range(n):
        r.append(r[m] + sum(r[k] * r[m - k] for k in range(m + 1)))
    return tuple(r)


def large_schroeder(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return _large_table(n)[n]


def small_schroeder(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return 1 if n == 0 else large_schroeder(n) // 2


def large_sequence(length: int) -> list[int]:
    """``[r_0, ..., r_{length-1}]``."""
    return list(_large_table(max(length - 1, 0))[:length])


def small_sequence(length: int) -> list[int]:
    return [small_schroeder(k) for k in range(length)]


def _check_span(start_x, end_x):
    width = end_x - start_x
    if width < 0 or width % 2:
        raise InvalidSpanError(
            f"span {start_x}..{end_x} has width {width}; need a non-negative even width"
        )
    return width


def iter_paths(
    start_x: int,
    end_x: int,
    small_only: bool = False,
    forbidden: frozenset | set | None = None,
) -> Iterator[SchroederPath]:
    """Yield Schroeder paths from ``(start_x, 0)`` to ``(end_x, 0)`` in U < L < D order.

    ``forbidden`` is a set of lattice points the path may not visit; partial
    paths are pruned as soon as they touch one.
    """
    _check_span(start_x, end_x)
    if forbidden is None:
        forbidden = ()
    if (start_x, 0) in forbidden:
        return
    word: list[str] = []

    def walk(x, h):
        remaining = end_x - x
        if remaining == 0:
            if h == 0:
                yield SchroederPath(start_x, "".join(word))
            return
        for s in STEP_ORDER:
            dx, dy = _DX[s], _DY[s]
            nx, nh = x + dx, h + dy
            # need nh >= 0 and enough width left to come back down
            if nh < 0 or nh > end_x - nx:
                continue
            if small_only and s == "L" and h == 0:
                continue
            if (nx, nh) in forbidden:
                continue
            word.append(s)
            yield from walk(nx, nh)
            word.pop()

    yield from walk(start_x, 0)


def enumerate_paths(start_x: int, end_x: int, small_only: bool = False) -> list[SchroederPath]:
    return list(iter_paths(start_x, end_x, small_only))


def count_paths(width: int, small_only: bool = False) -> int:
    """Count paths of the given even width by a column-by-column height DP."""
    if width < 0 or width % 2:
        raise InvalidSpanError(f"width {width} is not a non-negative even integer")
    # ways[x][h]: paths from (0,0) reaching (x,h); level steps jump two columns
    ways = [dict() for _ in range(width + 1)]
    ways[0][0] = 1
    for x in range(width):
        for h, c in ways[x].items():
            if h + 1 <= width - x - 1:
                ways[x + 1][h + 1] = ways[x + 1].get(h + 1, 0) + c
            if h > 0:
                ways[x + 1][h - 1] = ways[x + 1].get(h - 1, 0) + c
            if x + 2 <= width and h <= width - x - 2 and not (small_only and h == 0):
                ways[x + 2][h] = ways[x + 2].get(h, 0) + c
    return ways[width].get(0, 0)


def anchor_a(i: int) -> int:
    """Abscissa of the left anchor ``(-2i+1, 0)``."""
    return -2 * i + 1


def anchor_b(j: int) -> int:
    """Abscissa of the right anchor ``(2j-1, 0)``."""
    return 2 * j - 1


def count_paths_between(i: int, j: int) -> int:
    if i < 1 or j < 1:
        raise ValueError("anchor indices are 1-based")
    return count_paths(anchor_b(j) - anchor_a(i))
