"""Explicit permutations, conjugacy classes of cycles, coordinate subgroups,
and implicit Cayley adjacency operators.

Permutations act on {1, ..., degree}; composition is (sigma * pi)(x) =
sigma(pi(x)).  Vertices of a Cayley graph are the members of a
:class:`GroupSlice` in lexicographic order of their image tuples, and two
vertices g, h are adjacent iff h g^{-1} lies in the connection set.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cache
from math import factorial

import numpy as np

from .errors import SizeLimitError

#: |Alt(9)| = 181440 is the largest group we will materialize element by element
MAX_MATERIALIZED_DEGREE = 9

#: dense adjacency matrices stop being reasonable past this order
DENSE_ORDER_LIMIT = 1000


class Permutation:
    """Immutable permutation of {1..degree}, stored as its image tuple."""

    __slots__ = ("_images",)

    def __init__(self, images):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self._images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        images = list(range(1, degree + 1))
        for cycle in cycles:
            cycle = [int(p) for p in cycle]
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle {cycle}")
            for p in cycle:
                if not 1 <= p <= degree:
                    raise ValueError(f"point {p} outside 1..{degree}")
            for src, dst in zip(cycle, cycle[1:] + cycle[:1]):
                images[src - 1] = dst
        perm = cls(images)
        return perm

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Accepts cycle notation "(1 2 3)(4 5)" or one-line notation "2 3 1 5 4"."""
        s = text.strip()
        if s.startswith("("):
            cycles = []
            for group in re.findall(r"\(([^()]*)\)", s):
                points = [int(tok) for tok in group.replace(",", " ").split()]
                if points:
                    cycles.append(points)
            leftover = re.sub(r"\([^()]*\)", "", s).strip()
            if leftover:
                raise ValueError(f"unparsed text {leftover!r} in {text!r}")
            top = max((p for c in cycles for p in c), default=1)
            deg = degree if degree is not None else top
            if top > deg:
                raise ValueError(f"cycle mentions point {top} but degree is {deg}")
            return cls.from_cycles(deg, cycles)
        images = [int(tok) for tok in s.replace(",", " ").split()]
        if not images:
            raise ValueError(f"empty permutation string {text!r}")
        if degree is not None and degree != len(images):
            raise ValueError(f"one-line string has {len(images)} points, expected {degree}")
        return cls(images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, point: int) -> int:
        return self._images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(self._images[v - 1] for v in other._images)

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for i, v in enumerate(self._images, start=1):
            images[v - 1] = i
        return Permutation(images)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, ordered by that point."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen[nxt - 1] = True
                nxt = self(nxt)
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True)
        return tuple(lengths)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self._images, start=1) if v != i)

    def sign(self) -> int:
        return -1 if (self.degree - len(self.cycles(include_fixed=True))) % 2 else 1

    def is_even(self) -> bool:
        return self.sign() == 1

    def fixes(self, point: int) -> bool:
        return self(point) == point

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cyc)

    def one_line_string(self) -> str:
        return " ".join(str(v) for v in self._images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __lt__(self, other: "Permutation") -> bool:
        return self._images < other._images

    def __repr__(self) -> str:
        return f"Permutation.parse({self.cycle_string()!r}, degree={self.degree})"


def _arrangement_parity(seq) -> int:
    """Inversion parity (0/1) of a sequence relative to its sorted order."""
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inversions += 1
    return inversions & 1


@dataclass(frozen=True)
class GroupSlice:
    """A subgroup of Sym(degree) cut out by coordinates: optionally only even
    permutations, optionally pointwise fixing a set of points."""

    degree: int
    even_only: bool = False
    fixed: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")
        object.__setattr__(self, "fixed", frozenset(int(p) for p in self.fixed))
        if any(not 1 <= p <= self.degree for p in self.fixed):
            raise ValueError(f"fixed points {sorted(self.fixed)} outside 1..{self.degree}")

    def free_points(self) -> list[int]:
        return [p for p in range(1, self.degree + 1) if p not in self.fixed]

    @property
    def order(self) -> int:
        m = self.degree - len(self.fixed)
        if self.even_only and m >= 2:
            return factorial(m) // 2
        return factorial(m)

    def contains(self, perm: Permutation) -> bool:
        if perm.degree != self.degree:
            return False
        if any(not perm.fixes(p) for p in self.fixed):
            return False
        return perm.is_even() if self.even_only else True

    def members(self) -> list[Permutation]:
        """All members in lexicographic order of image tuples (degree <= 9)."""
        return [Permutation(images) for images in _member_images(self)]

    def _completions(self, remaining: int, parity_so_far: int) -> int:
        """Ways to finish a partial arrangement of `remaining` free values."""
        if not self.even_only:
            return factorial(remaining)
        if remaining >= 2:
            return factorial(remaining) // 2
        return 1 if parity_so_far == 0 else 0

    def unrank(self, index: int) -> Permutation:
        """The index-th member in lexicographic order, without enumerating the group."""
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} outside 0..{self.order - 1}")
        free = self.free_points()
        remaining = sorted(free)
        images = {p: p for p in self.fixed}
        parity = 0
        for pos in free:
            for slot, value in enumerate(remaining):
                count = self._completions(len(remaining) - 1, (parity + slot) & 1)
                if index < count:
                    images[pos] = value
                    parity = (parity + slot) & 1
                    remaining.pop(slot)
                    break
                index -= count
            else:  # pragma: no cover - guarded by the range check above
                raise AssertionError("unrank ran out of candidates")
        return Permutation(images[p] for p in range(1, self.degree + 1))

    def rank(self, perm: Permutation) -> int:
        """Inverse of :func:`unrank`; requires membership."""
        if not self.contains(perm):
            raise ValueError(f"{perm!r} is not a member of {self}")
        free = self.free_points()
        remaining = sorted(free)
        parity = 0
        index = 0
        for pos in free:
            value = perm(pos)
            slot = remaining.index(value)
            for earlier in range(slot):
                index += self._completions(len(remaining) - 1, (parity + earlier) & 1)
            parity = (parity + slot) & 1
            remaining.pop(slot)
        return index


@cache
def _member_images(slice_: GroupSlice) -> tuple[tuple[int, ...], ...]:
    if slice_.degree > MAX_MATERIALIZED_DEGREE:
        raise SizeLimitError(
            f"group materialization is capped at degree {MAX_MATERIALIZED_DEGREE}, "
            f"got degree {slice_.degree}"
        )
    free = slice_.free_points()
    out = []
    base = list(range(1, slice_.degree + 1))
    for arrangement in itertools.permutations(free):
        if slice_.even_only and _arrangement_parity(arrangement):
            continue
        images = base.copy()
        for pos, value in zip(free, arrangement):
            images[pos - 1] = value
        out.append(tuple(images))
    return tuple(out)


@cache
def _member_matrix(slice_: GroupSlice) -> np.ndarray:
    """(order, degree) uint8 array of 0-based images, rows in lexicographic order."""
    return np.array(_member_images(slice_), dtype=np.uint8) - 1


def symmetric_group(n: int) -> GroupSlice:
    return GroupSlice(degree=n)


def alternating_group(n: int) -> GroupSlice:
    return GroupSlice(degree=n, even_only=True)


def enumerate_class_cycles(n: int, m: int) -> list[Permutation]:
    """All m-cycles in Sym(n): support choice times (m-1)! cyclic arrangements."""
    if n > MAX_MATERIALIZED_DEGREE:
        raise SizeLimitError(
            f"class enumeration is capped at degree {MAX_MATERIALIZED_DEGREE}, got n = {n}"
        )
    if not 2 <= m <= n:
        raise ValueError(f"need 2 <= m <= n, got m = {m}, n = {n}")
    out = []
    for support in itertools.combinations(range(1, n + 1), m):
        anchor, rest = support[0], support[1:]
        for tail in itertools.permutations(rest):
            out.append(Permutation.from_cycles(n, [(anchor,) + tail]))
    return out


def t_filtration(class_members: list[Permutation], k: int) -> list[Permutation]:
    """Members whose support contains every point of {1..k} (the bottom points)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    required = set(range(1, k + 1))
    return [t for t in class_members if required <= t.support()]


def coset_count(
    class_members: list[Permutation],
    slice_: GroupSlice,
    fixes: int | None = None,
    maps: tuple[int, int] | None = None,
) -> int:
    """|T ∩ slice| refined by one coordinate constraint:
    ``fixes=p`` counts members fixing p, ``maps=(t, s)`` counts members sending t to s."""
    if (fixes is None) == (maps is None):
        raise ValueError("give exactly one of fixes= and maps=")
    count = 0
    for t in class_members:
        if not slice_.contains(t):
            continue
        if fixes is not None and not t.fixes(fixes):
            continue
        if maps is not None and t(maps[0]) != maps[1]:
            continue
        count += 1
    return count


class CayleyOperator:
    """Implicit adjacency operator of Cay(slice, connection).

    Matvecs accumulate x[index(t * g)] over the connection set; the per-t
    index arrays are built once with a radix encoding and a binary search into
    the sorted member table (lexicographic rank). 32-bit indices, so the
    densest degree-8 case costs about 108 MB.
    """

    def __init__(self, slice_: GroupSlice, connection: list[Permutation]):
        seen = set()
        for t in connection:
            if t.degree != slice_.degree:
                raise ValueError(f"connection degree {t.degree} != slice degree {slice_.degree}")
            if t.support() == frozenset():
                raise ValueError("the identity is not allowed in a connection set")
            if not slice_.contains(t):
                raise ValueError(f"connection element {t!r} lies outside the vertex group")
            if t.images in seen:
                raise ValueError(f"duplicate connection element {t!r}")
            seen.add(t.images)
        for t in connection:
            if t.inverse().images not in seen:
                raise ValueError(f"connection set is not inverse-closed: missing {t.inverse()!r}")
        self.slice = slice_
        self.connection = list(connection)
        self.dim = slice_.order
        self._rows: np.ndarray | None = None

    @property
    def valency(self) -> int:
        return len(self.connection)

    def one_norm(self) -> int:
        """Max absolute column sum; for a 0/1 adjacency this is the valency."""
        return self.valency

    def _neighbor_rows(self) -> np.ndarray:
        """(valency, dim) int32; row j holds index(t_j * g) for every vertex g."""
        if self._rows is None:
            members = _member_matrix(self.slice)
            radix = self.slice.degree ** np.arange(self.slice.degree - 1, -1, -1, dtype=np.int64)
            keys = members.astype(np.int64) @ radix  # ascending: rows are lex sorted
            rows = np.empty((len(self.connection), self.dim), dtype=np.int32)
            for j, t in enumerate(self.connection):
                t0 = np.array(t.images, dtype=np.int64) - 1
                composed_keys = t0[members].astype(np.int64) @ radix
                idx = np.searchsorted(keys, composed_keys)
                if not np.array_equal(keys[idx], composed_keys):
                    raise AssertionError("connection does not stabilize the vertex group")
                rows[j] = idx
            self._rows = rows
        return self._rows

    def matvec(self, x: np.ndarray) -> np.ndarray:
        rows = self._neighbor_rows()
        y = np.zeros(self.dim, dtype=np.float64)
        for row in rows:
            y += x[row]
        return y

    def neighbors(self, vertex: int) -> list[int]:
        rows = self._neighbor_rows()
        return sorted(int(row[vertex]) for row in rows)

    def dense(self) -> np.ndarray:
        if self.dim > DENSE_ORDER_LIMIT:
            raise SizeLimitError(
                f"dense adjacency is capped at order {DENSE_ORDER_LIMIT}, got {self.dim}"
            )
        a = np.zeros((self.dim, self.dim), dtype=np.int32)
        src = np.arange(self.dim)
        for row in self._neighbor_rows():
            a[src, row] += 1
        assert np.array_equal(a, a.T)
        return a

    def index_of(self, perm: Permutation) -> int:
        return self.slice.rank(perm)

    def vertex_at(self, index: int) -> Permutation:
        return self.slice.unrank(index)

    def images_of(self, point: int) -> np.ndarray:
        """sigma(point) for every vertex sigma, 1-based values."""
        if not 1 <= point <= self.slice.degree:
            raise ValueError(f"point {point} outside 1..{self.slice.degree}")
        return _member_matrix(self.slice)[:, point - 1].astype(np.int64) + 1


def cayley_adjacency(slice_: GroupSlice, connection: list[Permutation]) -> CayleyOperator:
    """Adjacency operator of Cay(slice, connection); validates that the
    connection is identity-free, duplicate-free, inverse-closed, and inside
    the vertex group."""
    return CayleyOperator(slice_, connection)
