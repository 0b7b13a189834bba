"""Hankel matrices of integer sequences and their exact determinants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    IllPosedProfileError,
    InconsistentProfileError,
    InsufficientTermsError,
)
from .schroeder import large_sequence, small_sequence

KINDS = ("H1", "G1", "H0", "G0")


@dataclass(frozen=True)
class HankelMatrix:
    """Square matrix with ``entries[i][j] == seq[i + j + offset]`` (0-based i, j)."""

    entries: tuple[tuple[int, ...], ...]
    offset: int
    source_tag: str = "custom"

    def __post_init__(self):
        n = len(self.entries)
        if n < 1 or any(len(row) != n for row in self.entries):
            raise ValueError("Hankel matrix must be square with order >= 1")
        if self.offset not in (0, 1):
            raise ValueError("offset must be 0 or 1")
        for i in range(1, n):
            for j in range(n - 1):
                if self.entries[i][j] != self.entries[i - 1][j + 1]:
                    raise ValueError("entries are not constant along anti-diagonals")

    @property
    def order(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        """1-based access."""
        return self.entries[i - 1][j - 1]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def to_json(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.entries]


def build_hankel(seq: Sequence[int], offset: int, n: int, source_tag: str = "custom") -> HankelMatrix:
    if n < 1:
        raise ValueError("order must be positive")
    if offset not in (0, 1):
        raise ValueError("offset must be 0 or 1")
    need = 2 * n - 1 + offset
    if len(seq) < need:
        raise InsufficientTermsError(
            f"order {n} with offset {offset} needs terms 0..{need - 1}, got {len(seq)}"
        )
    entries = tuple(
        tuple(int(seq[i + j + offset]) for j in range(n)) for i in range(n)
    )
    return HankelMatrix(entries, offset, source_tag)


def hankel_matrix(kind: str, n: int) -> HankelMatrix:
    """One of the four Schroeder Hankel matrices: ``H1``, ``G1``, ``H0``, ``G0``."""
    kind = kind.upper()
    if kind not in KINDS:
        raise ValueError(f"unknown Hankel kind {kind!r}")
    offset = int(kind[1])
    length = 2 * n - 1 + offset
    seq = large_sequence(length) if kind[0] == "H" else small_sequence(length)
    return build_hankel(seq, offset, n, source_tag=kind)


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant(m: HankelMatrix | Sequence[Sequence[int]]) -> int:
    rows = m.entries if isinstance(m, HankelMatrix) else m
    return bareiss_determinant(rows)


def closed_form(kind: str, n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    kind = kind.upper()
    if kind == "H1":
        return 2 ** (n * (n + 1) // 2)
    if kind in ("G1", "H0", "G0"):
        return 2 ** (n * (n - 1) // 2)
    raise ValueError(f"unknown Hankel kind {kind!r}")


def reconstruct_sequence(d0: Sequence[int], d1: Sequence[int], length: int) -> list[int]:
    """Recover ``c_0..c_{length-1}`` from the interleaved determinant profile.

    ``d0[k]`` is the target for the offset-0 matrix of order ``k+1`` and
    ``d1[k]`` for the offset-1 one.  Term ``c_{2k+e}`` is the bottom-right
    entry of the offset-``e`` matrix of order ``k+1``, so that determinant is
    affine in it with slope equal to the order-``k`` determinant of the same
    offset.  Terms are solved in the order c_0, c_1, c_2, ...
    """
    if length < 1:
        raise ValueError("length must be positive")
    need = (length + 1) // 2
    if len(d0) < need or len(d1) < (length // 2):
        raise InsufficientTermsError(
            f"{length} terms need {need} offset-0 and {length // 2} offset-1 determinants"
        )
    c: list[int] = []
    for t in range(length):
        offset, k = t % 2, t // 2
        target = int((d0, d1)[offset][k])
        slope = 1 if k == 0 else bareiss_determinant(
            [[c[i + j + offset] for j in range(k)] for i in range(k)]
        )
        if slope == 0:
            raise IllPosedProfileError(
                f"offset-{offset} determinant of order {k} vanishes; c_{t} is not determined"
            )
        c.append(0)
        rows = [[c[i + j + offset] for j in range(k + 1)] for i in range(k + 1)]
        base = bareiss_determinant(rows)
        q, rem = divmod(target - base, slope)
        if rem:
            raise InconsistentProfileError(
                f"c_{t} = {target - base}/{slope} is not an integer"
            )
        c[t] = q
    return c
