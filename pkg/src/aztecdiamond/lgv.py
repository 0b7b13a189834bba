"""Families of non-intersecting Schroeder paths and the signed-set argument.

Anchors: in the ``Pi`` and ``Omega`` schemes path ``i`` (1-based) runs from
``A_i = (-2i+1, 0)`` to ``B_i = (2i-1, 0)``; ``Omega`` paths must also be
small.  In the ``PiStar`` scheme path ``i`` (0-based) runs from ``(-2i, 0)``
to ``(2i, 0)`` and path 0 is the single point at the origin.

Intersection means sharing a lattice vertex.  Every vertex of a path in one
scheme has ``x + y`` of a fixed parity (odd for Pi/Omega, even for PiStar),
because U and D change ``x + y`` by 0 or 2 and L by 2.  The midpoint of a
level step has the opposite parity, so it is never a vertex of another path,
and two steps that cross in their interiors would need start points of
different parity.  Two paths therefore meet iff their vertex sets meet.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, SizeLimitError
from .schroeder import SchroederPath, anchor_a, anchor_b, enumerate_paths, iter_paths

SCHEMES = ("pi", "omega", "pistar")
DEFAULT_FAMILY_CUTOFF = {"pi": 3, "omega": 3, "pistar": 4}
_RANK = str.maketrans("ULD", "abc")


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation: ``word[i-1] == sigma(i)``."""

    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(z) for z in self.word))
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise ValueError(f"{self.word} is not a permutation of 1..{len(self.word)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self):
        return len(self.word)

    @property
    def inversions(self) -> int:
        w = self.word
        return sum(1 for a, b in itertools.combinations(range(len(w)), 2) if w[a] > w[b])

    @property
    def sign(self) -> int:
        return -1 if self.inversions % 2 else 1

    @property
    def is_identity(self) -> bool:
        return self.word == tuple(range(1, len(self.word) + 1))

    def compose_transposition(self, i: int, j: int) -> Permutation:
        """``sigma o (i j)``."""
        w = list(self.word)
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
        return Permutation(tuple(w))


@dataclass(frozen=True)
class AnchorScheme:
    kind: str
    n: int

    def __post_init__(self):
        kind = self.kind.lower()
        if kind not in SCHEMES:
            raise ValueError(f"unknown anchor scheme {self.kind!r}; expected one of {SCHEMES}")
        object.__setattr__(self, "kind", kind)
        if self.n < 0:
            raise ValueError("family size must be non-negative")

    @property
    def small(self) -> bool:
        return self.kind == "omega"

    def endpoints(self) -> list[tuple[int, int]]:
        """``(start_x, end_x)`` for each path, in family order."""
        if self.kind == "pistar":
            return [(-2 * i, 2 * i) for i in range(self.n)]
        return [(anchor_a(i), anchor_b(i)) for i in range(1, self.n + 1)]


def _vertex_sets(paths):
    return [frozenset(p.vertices()) for p in paths]


def _paths_disjoint(paths: Sequence[SchroederPath]) -> bool:
    seen: set = set()
    for vs in _vertex_sets(paths):
        if seen & vs:
            return False
        seen |= vs
    return True


@dataclass(frozen=True)
class PathFamily:
    scheme: AnchorScheme
    paths: tuple[SchroederPath, ...]

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        ends = self.scheme.endpoints()
        if len(self.paths) != len(ends):
            raise DomainError(
                f"{self.scheme.kind} family of size {self.scheme.n} needs {len(ends)} paths, "
                f"got {len(self.paths)}"
            )
        for k, (p, (a, b)) in enumerate(zip(self.paths, ends)):
            if (p.start_x, p.end_x) != (a, b):
                raise DomainError(
                    f"path {k} runs {p.start_x}->{p.end_x}, scheme requires {a}->{b}"
                )
            if self.scheme.small and not p.is_small:
                raise DomainError(f"path {k} ({p.steps}) has a level step on the axis")

    @property
    def nonintersecting(self) -> bool:
        return _paths_disjoint(self.paths)

    def to_json(self) -> dict:
        return {
            "scheme": self.scheme.kind,
            "n": self.scheme.n,
            "paths": [p.to_json() for p in self.paths],
        }

    @classmethod
    def from_json(cls, obj: dict) -> PathFamily:
        return cls(
            AnchorScheme(obj["scheme"], int(obj["n"])),
            tuple(SchroederPath.from_json(p) for p in obj["paths"]),
        )

    def sort_key(self):
        return tuple(p.steps.translate(_RANK) for p in self.paths)


@dataclass(frozen=True)
class SignedConfiguration:
    """A permutation with paths ``tau_i: A_i -> B_sigma(i)``."""

    sigma: Permutation
    paths: tuple[SchroederPath, ...]
    small: bool = False

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        if len(self.paths) != len(self.sigma):
            raise DomainError("one path per permutation entry is required")
        for i, p in enumerate(self.paths, start=1):
            if p.start_x != anchor_a(i) or p.end_x != anchor_b(self.sigma(i)):
                raise DomainError(
                    f"tau_{i} runs {p.start_x}->{p.end_x}, expected "
                    f"{anchor_a(i)}->{anchor_b(self.sigma(i))}"
                )
            if self.small and not p.is_small:
                raise DomainError(f"tau_{i} ({p.steps}) is not a small path")

    @property
    def n(self) -> int:
        return len(self.paths)

    @property
    def sign(self) -> int:
        return self.sigma.sign

    @property
    def nonintersecting(self) -> bool:
        return _paths_disjoint(self.paths)


def is_nonintersecting(f: PathFamily | SignedConfiguration | Sequence[SchroederPath]) -> bool:
    paths = f.paths if isinstance(f, (PathFamily, SignedConfiguration)) else f
    return _paths_disjoint(paths)


def first_intersecting_pair(c: SignedConfiguration | PathFamily):
    """Lexicographically least ``(i, j)``, 1-based, whose paths share a vertex."""
    vs = _vertex_sets(c.paths)
    for i, j in itertools.combinations(range(len(vs)), 2):
        if vs[i] & vs[j]:
            return i + 1, j + 1
    return None


def switching_point(c: SignedConfiguration):
    """Where the tail-swap involution acts: ``(i, j, vertex)`` or ``None``.

    ``i`` is the least index whose path meets any other path, ``vertex`` is
    the first vertex along ``tau_i`` shared with another path, and ``j`` is
    the least other index through that vertex.  Paths below ``i`` meet
    nothing, and the head of ``tau_i`` up to ``vertex`` survives the swap, so
    all three choices are recovered from the swapped configuration.
    """
    vs = _vertex_sets(c.paths)
    for i in range(len(vs)):
        others = set().union(*(vs[k] for k in range(len(vs)) if k != i))
        if not (vs[i] & others):
            continue
        for v in c.paths[i].vertices():
            if v in others:
                j = min(k for k in range(len(vs)) if k != i and v in vs[k])
                return i + 1, j + 1, v
    return None


def _swap_tails(c: SignedConfiguration, i: int, j: int, v) -> SignedConfiguration:
    pi, pj = c.paths[i - 1], c.paths[j - 1]
    ki = pi.vertices().index(v)
    kj = pj.vertices().index(v)
    new_i = SchroederPath(pi.start_x, pi.steps[:ki] + pj.steps[kj:])
    new_j = SchroederPath(pj.start_x, pj.steps[:kj] + pi.steps[ki:])
    paths = list(c.paths)
    paths[i - 1], paths[j - 1] = new_i, new_j
    return SignedConfiguration(c.sigma.compose_transposition(i, j), tuple(paths), c.small)


def tail_swap(c: SignedConfiguration) -> SignedConfiguration:
    """The sign-reversing involution on signed configurations.

    Non-intersecting configurations are fixed.  Otherwise the tails of
    ``tau_i`` and ``tau_j`` after the switching point (see
    :func:`switching_point`) are exchanged and sigma is composed with
    ``(i j)``.
    """
    sp = switching_point(c)
    if sp is None:
        return c
    return _swap_tails(c, *sp)


def tail_swap_first_pair(c: SignedConfiguration) -> SignedConfiguration:
    """Variant keyed on the lexicographically first meeting pair.

    Swaps ``tau_i``/``tau_j`` after their right-most common vertex.  This is
    an involution for two paths only: with three or more, the new tail of
    ``tau_i`` can meet a path ``tau_k`` with ``i < k < j`` and change which
    pair comes first.  Kept for comparison; use :func:`tail_swap`.
    """
    pair = first_intersecting_pair(c)
    if pair is None:
        return c
    i, j = pair
    common = set(c.paths[i - 1].vertices()) & set(c.paths[j - 1].vertices())
    return _swap_tails(c, i, j, max(common))


@lru_cache(maxsize=None)
def _paths_between(i: int, j: int, small: bool) -> tuple[SchroederPath, ...]:
    return tuple(enumerate_paths(anchor_a(i), anchor_b(j), small))


def iter_configurations(n: int, small: bool = False) -> Iterator[SignedConfiguration]:
    """Every signed configuration of size ``n``; grows like the permanent."""
    for word in itertools.permutations(range(1, n + 1)):
        sigma = Permutation(word)
        choices = [_paths_between(i, sigma(i), small) for i in range(1, n + 1)]
        for paths in itertools.product(*choices):
            yield SignedConfiguration(sigma, paths, small)


def random_configuration(n: int, rng: random.Random, small: bool = False) -> SignedConfiguration:
    word = list(range(1, n + 1))
    rng.shuffle(word)
    sigma = Permutation(tuple(word))
    paths = tuple(rng.choice(_paths_between(i, sigma(i), small)) for i in range(1, n + 1))
    return SignedConfiguration(sigma, paths, small)


SIGNED_COUNT_CUTOFF = 3


def signed_count(kind: str, n: int, max_n: int = SIGNED_COUNT_CUTOFF) -> int:
    """Sum of ``sgn(sigma)`` over all signed configurations.

    ``kind`` is ``"pi"`` (large paths) or ``"omega"`` (small paths).  The
    count runs over each permutation's path product without building every
    configuration object; :func:`iter_configurations` is the explicit walk.
    """
    kind = kind.lower()
    if kind not in ("pi", "omega"):
        raise ValueError("signed_count supports the 'pi' and 'omega' schemes")
    if n > max_n:
        raise SizeLimitError("signed_count", n, max_n)
    small = kind == "omega"
    total = 0
    for word in itertools.permutations(range(1, n + 1)):
        sigma = Permutation(word)
        choices = [_paths_between(i, sigma(i), small) for i in range(1, n + 1)]
        for _ in itertools.product(*choices):
            total += sigma.sign
    return total


def iter_family(scheme: AnchorScheme) -> Iterator[PathFamily]:
    """Non-intersecting families, each new path pruned against used vertices."""
    ends = scheme.endpoints()
    chosen: list[SchroederPath] = []

    def extend(k, used):
        if k == len(ends):
            yield PathFamily(scheme, tuple(chosen))
            return
        a, b = ends[k]
        for p in iter_paths(a, b, scheme.small, forbidden=used):
            chosen.append(p)
            yield from extend(k + 1, used | frozenset(p.vertices()))
            chosen.pop()

    yield from extend(0, frozenset())


def enumerate_family(scheme: AnchorScheme, max_n: int | None = None) -> list[PathFamily]:
    cutoff = DEFAULT_FAMILY_CUTOFF[scheme.kind] if max_n is None else max_n
    if scheme.n > cutoff:
        raise SizeLimitError(f"{scheme.kind} family enumeration", scheme.n, cutoff)
    return list(iter_family(scheme))


def _require_pi(f: PathFamily):
    if f.scheme.kind != "pi":
        raise DomainError(f"expected a pi family, got {f.scheme.kind}")
    if f.scheme.n < 1:
        raise DomainError("the family must contain at least one path")
    if not f.nonintersecting:
        raise DomainError("input family is not non-intersecting")


def phi(f: PathFamily) -> PathFamily:
    """Pi family of size n-1 -> Omega family of size n (frame every path in UU..DD)."""
    _require_pi(f)
    n = f.scheme.n + 1
    paths = [SchroederPath(anchor_a(1), "UD")]
    for i, p in enumerate(f.paths, start=2):
        paths.append(SchroederPath(anchor_a(i), "UU" + p.steps + "DD"))
    return PathFamily(AnchorScheme("omega", n), tuple(paths))


def phi_inverse(g: PathFamily) -> PathFamily:
    if g.scheme.kind != "omega" or g.scheme.n < 2:
        raise DomainError("phi_inverse expects an omega family of size >= 2")
    if g.paths[0].steps != "UD":
        raise DomainError("first path of the family must be UD")
    out = []
    for i, p in enumerate(g.paths[1:], start=1):
        s = p.steps
        if not (s.startswith("UU") and s.endswith("DD")) or len(s) < 4:
            raise DomainError(f"path {s} is not framed by UU...DD")
        out.append(SchroederPath(anchor_a(i), s[2:-2]))
    return PathFamily(AnchorScheme("pi", g.scheme.n - 1), tuple(out))


def rho(f: PathFamily) -> PathFamily:
    """Pi family of size n-1 -> PiStar family of size n (origin plus U..D frames)."""
    _require_pi(f)
    paths = [SchroederPath(0, "")]
    for i, p in enumerate(f.paths, start=1):
        paths.append(SchroederPath(-2 * i, "U" + p.steps + "D"))
    return PathFamily(AnchorScheme("pistar", f.scheme.n + 1), tuple(paths))


def rho_inverse(g: PathFamily) -> PathFamily:
    if g.scheme.kind != "pistar" or g.scheme.n < 2:
        raise DomainError("rho_inverse expects a pistar family of size >= 2")
    out = []
    for i, p in enumerate(g.paths[1:], start=1):
        s = p.steps
        if len(s) < 2 or s[0] != "U" or s[-1] != "D":
            raise DomainError(f"path {s} is not framed by U...D")
        out.append(SchroederPath(anchor_a(i), s[1:-1]))
    return PathFamily(AnchorScheme("pi", g.scheme.n - 1), tuple(out))


def canonical_order(families: Iterable[PathFamily]) -> list[PathFamily]:
    return sorted(families, key=PathFamily.sort_key)
