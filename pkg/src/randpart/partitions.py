"""Exact combinatorics of partitions and plane partitions.

Partitions are weakly decreasing tuples of positive integers; plane
partitions are matrices of nonnegative integers nonincreasing along rows
and columns, stored as trimmed ragged rows (absent entries read as 0).
Half-integers are stored exactly by their double, so set membership never
touches floating point.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, MalformedInputError, SizeLimitError

DIM_ORACLE_CAP = 25
PARTITION_ENUM_CAP = 60
PLANE_ENUM_CAP = 25
GREENE_CAP = 9


@dataclass(frozen=True, order=True)
class HalfInt:
    """Element of Z + 1/2 stored as its (odd) double."""

    twice: int

    def __post_init__(self):
        if self.twice % 2 == 0:
            raise MalformedInputError(f"{self.twice}/2 is not a half-integer")

    @classmethod
    def plus_half(cls, n: int) -> "HalfInt":
        """The half-integer n + 1/2."""
        return cls(2 * n + 1)

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __add__(self, other):
        if isinstance(other, HalfInt):
            return (self.twice + other.twice) // 2
        return HalfInt(self.twice + 2 * other)

    def __sub__(self, other):
        if isinstance(other, HalfInt):
            return (self.twice - other.twice) // 2
        return HalfInt(self.twice - 2 * other)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __float__(self) -> float:
        return self.twice / 2.0

    def __str__(self) -> str:
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.twice}/2)"


class Partition:
    """Weakly decreasing finite sequence of positive integers."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        data = [int(p) for p in parts]
        while data and data[-1] == 0:
            data.pop()
        for a, b in zip(data, data[1:]):
            if a < b:
                raise MalformedInputError(f"parts not weakly decreasing: {data}")
        if data and data[-1] < 0:
            raise MalformedInputError(f"negative part in {data}")
        self._parts = tuple(data)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    def size(self) -> int:
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, i: int) -> int:
        """0-based part access; rows beyond the last part read as 0."""
        if isinstance(i, slice):
            return self._parts[i]
        return self._parts[i] if 0 <= i < len(self._parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition{self._parts}"

    def conjugate(self) -> "Partition":
        if not self._parts:
            return Partition()
        cols = [0] * self._parts[0]
        for p in self._parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def to_json(self) -> list[int]:
        return list(self._parts)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "Partition":
        return cls(data)


class PlanePartition:
    """Matrix of nonnegative integers, nonincreasing along rows and columns.

    Rows are stored trimmed: no trailing zeros inside a row, no empty
    trailing rows.  entry(i, j) uses the 1-based matrix convention and
    reads 0 outside the stored array.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]] = ()):
        trimmed: list[tuple[int, ...]] = []
        for row in rows:
            r = [int(v) for v in row]
            while r and r[-1] == 0:
                r.pop()
            trimmed.append(tuple(r))
        while trimmed and not trimmed[-1]:
            trimmed.pop()
        for r in trimmed:
            if any(v < 0 for v in r):
                raise MalformedInputError("negative entry in plane partition")
            if any(a < b for a, b in zip(r, r[1:])):
                raise MalformedInputError(f"row not weakly decreasing: {r}")
        for upper, lower in zip(trimmed, trimmed[1:]):
            if len(lower) > len(upper):
                raise MalformedInputError("row lengths must be weakly decreasing")
            if any(lower[j] > upper[j] for j in range(len(lower))):
                raise MalformedInputError("columns not weakly decreasing")
        self._rows = tuple(trimmed)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def volume(self) -> int:
        return sum(sum(r) for r in self._rows)

    def entry(self, i: int, j: int) -> int:
        """1-based entry, 0 outside the stored matrix."""
        if i < 1 or j < 1 or i > len(self._rows):
            return 0
        row = self._rows[i - 1]
        return row[j - 1] if j <= len(row) else 0

    def n_rows(self) -> int:
        return len(self._rows)

    def max_row_length(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, PlanePartition) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"PlanePartition{self._rows}"

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "PlanePartition":
        return cls(data)


@dataclass(frozen=True)
class FacePoint:
    """Projected center (t, h) of a horizontal face, h stored as 2h.

    The parity constraint 2h + t odd is forced by the projection of cube
    stacks: h = height - (i + j - 1)/2 on the diagonal t = j - i.
    """

    t: int
    h_twice: int

    def __post_init__(self):
        if (self.h_twice + self.t) % 2 == 0:
            raise MalformedInputError(
                f"face point parity violated: 2h + t = {self.h_twice + self.t} must be odd"
            )

    @property
    def h(self) -> Fraction:
        return Fraction(self.h_twice, 2)

    def __repr__(self) -> str:
        return f"FacePoint(t={self.t}, h={self.h_twice}/2)"


class Permutation:
    """Bijection of {1..n} in one-line notation."""

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(v) for v in images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise MalformedInputError(f"not a permutation of 1..{n}: {imgs}")
        self._images = imgs

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    def __len__(self) -> int:
        return len(self._images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation{self._images}"


@dataclass(frozen=True)
class MayaWindow:
    """Finite window [lo, hi] of a half-integer point configuration."""

    lo: HalfInt
    hi: HalfInt
    members: tuple[HalfInt, ...]

    def __post_init__(self):
        prev = None
        for m in self.members:
            if not (self.lo <= m <= self.hi):
                raise MalformedInputError(f"member {m} outside window [{self.lo}, {self.hi}]")
            if prev is not None and m <= prev:
                raise MalformedInputError("members must be strictly increasing")
            prev = m

    def member_set(self) -> frozenset[HalfInt]:
        return frozenset(self.members)

    def to_json(self) -> dict:
        return {
            "lo": self.lo.twice,
            "hi": self.hi.twice,
            "members": [m.twice for m in self.members],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MayaWindow":
        return cls(
            HalfInt(data["lo"]),
            HalfInt(data["hi"]),
            tuple(HalfInt(t) for t in data["members"]),
        )


def maya_set(lam: Partition, window: tuple[HalfInt, HalfInt]) -> MayaWindow:
    """Half-integer encoding {lam_i - i + 1/2} of the diagram boundary, windowed.

    Rows beyond the last part contribute -i + 1/2, so the configuration is
    eventually full to the left; the window intersection is always finite.
    """
    lo, hi = window
    members: list[HalfInt] = []
    i = 1
    while True:
        point = HalfInt.plus_half(lam[i - 1] - i)
        if point < lo:
            break
        if point <= hi:
            members.append(point)
        i += 1
    members.reverse()
    return MayaWindow(lo, hi, tuple(members))


def _negative_hole_count(m: MayaWindow) -> int:
    """Number of negative half-integers in the window that are not members."""
    top = min(m.hi.twice, -1)
    if m.lo.twice > top:
        return 0
    slots = (top - m.lo.twice) // 2 + 1
    occupied = sum(1 for x in m.members if x.twice <= top)
    return slots - occupied


def partition_from_maya(m: MayaWindow) -> Partition:
    """Inverse of maya_set for windows wide enough to pin the partition.

    Raises MalformedInputError when the balance invariant fails or the
    window content is not the trace of any partition.
    """
    positives = sum(1 for x in m.members if x.twice > 0)
    if positives != _negative_hole_count(m):
        raise MalformedInputError(
            "window violates the balance invariant: "
            f"{positives} positive members vs {_negative_hole_count(m)} negative holes"
        )
    parts = []
    for i, s in enumerate(reversed(m.members), start=1):
        lam_i = (s.twice + 2 * i - 1) // 2
        if lam_i < 0:
            raise MalformedInputError(f"member {s} at depth {i} implies a negative part")
        parts.append(lam_i)
    while parts and parts[-1] == 0:
        parts.pop()
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise MalformedInputError("window content is not weakly decreasing after decoding")
    lam = Partition(parts)
    if maya_set(lam, (m.lo, m.hi)).members != m.members:
        raise MalformedInputError("window content does not round-trip to a partition")
    return lam


def hook_dim(lam: Partition) -> int:
    """Number of standard tableaux of shape lam, by the hook length formula."""
    n = lam.size()
    if n == 0:
        return 1
    conj = lam.conjugate()
    dim = factorial(n)
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            hook = (row - j) + (conj[j - 1] - i) + 1
            dim //= hook
    return dim


@lru_cache(maxsize=None)
def _chain_count(parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    total = 0
    for i in range(len(parts)):
        nxt = parts[i + 1] if i + 1 < len(parts) else 0
        if parts[i] > nxt:
            reduced = parts[:i] + (parts[i] - 1,) + parts[i + 1 :]
            if reduced[-1] == 0:
                reduced = reduced[:-1]
            total += _chain_count(reduced)
    return total


def dim_oracle(lam: Partition, cap: int = DIM_ORACLE_CAP) -> int:
    """Count square-removal chains down to the empty partition.

    Independent of the hook formula; memoized recursion, so sizes are capped.
    """
    if lam.size() > cap:
        raise SizeLimitError(f"dim_oracle supports |lam| <= {cap}, got {lam.size()}")
    return _chain_count(lam.parts)


def _gen_partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _gen_partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    if n < 0:
        raise DomainError(f"cannot partition a negative integer: {n}")
    if n > PARTITION_ENUM_CAP:
        raise SizeLimitError(f"enumerate_partitions supports n <= {PARTITION_ENUM_CAP}")
    return [Partition(p) for p in _gen_partitions(n, n)]


def plane_partition_counts(v_max: int) -> list[int]:
    """Coefficients of prod_{n>0} (1 - q^n)^{-n} up to q^v_max.

    Series-expansion oracle for the number of plane partitions by volume.
    """
    if v_max < 0:
        raise DomainError("v_max must be nonnegative")
    coef = [0] * (v_max + 1)
    coef[0] = 1
    for n in range(1, v_max + 1):
        for _ in range(n):
            for k in range(n, v_max + 1):
                coef[k] += coef[k - n]
    return coef


def _rows_below(bound: tuple[int, ...] | None, cap: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Nonempty weakly decreasing rows with row[k] <= bound[k] and sum <= cap."""

    def rec(k: int, prev: int, rem: int) -> Iterator[tuple[tuple[int, ...], int]]:
        limit = prev if bound is None else min(prev, bound[k] if k < len(bound) else 0)
        limit = min(limit, rem)
        for v in range(limit, 0, -1):
            yield (v,), v
            for tail, s in rec(k + 1, v, rem - v):
                yield (v,) + tail, v + s

    yield from rec(0, cap, cap)


def _stacks(budget: int, bound: tuple[int, ...] | None) -> Iterator[tuple[tuple[int, ...], ...]]:
    yield ()
    for row, s in _rows_below(bound, budget):
        for rest in _stacks(budget - s, row):
            yield (row,) + rest


def iter_plane_partitions(max_volume: int) -> Iterator[PlanePartition]:
    """Stream every plane partition of volume <= max_volume exactly once."""
    if max_volume < 0:
        raise DomainError("max_volume must be nonnegative")
    for rows in _stacks(max_volume, None):
        yield PlanePartition(rows)


def enumerate_plane_partitions(v: int) -> list[PlanePartition]:
    """All plane partitions of volume exactly v."""
    if v < 0:
        raise DomainError(f"volume must be nonnegative: {v}")
    if v > PLANE_ENUM_CAP:
        raise SizeLimitError(f"enumerate_plane_partitions supports v <= {PLANE_ENUM_CAP}")
    out = []
    for rows in _stacks(v, None):
        if sum(sum(r) for r in rows) == v:
            out.append(PlanePartition(rows))
    return out


def diagonal_slices(pi: PlanePartition) -> dict[int, Partition]:
    """Diagonal slices t -> partition {pi_{ij} : j - i = t}, nonempty ones only."""
    slices: dict[int, Partition] = {}
    if pi.n_rows() == 0:
        return slices
    for t in range(-(pi.n_rows() - 1), pi.max_row_length()):
        vals = []
        i = max(1, 1 - t)
        while True:
            v = pi.entry(i, i + t)
            if v == 0:
                break
            vals.append(v)
            i += 1
        if vals:
            slices[t] = Partition(vals)
    return slices


def interlaces(lam: Partition, mu: Partition) -> bool:
    """True iff lam_1 >= mu_1 >= lam_2 >= mu_2 >= ... (lam/mu a horizontal strip)."""
    for i in range(max(len(lam), len(mu))):
        if lam[i] < mu[i]:
            return False
        if mu[i] < lam[i + 1]:
            return False
    return True


def face_points(
    pi: PlanePartition,
    window: tuple[int, int, float, float],
) -> tuple[FacePoint, ...]:
    """Projected face centers {(j-i, pi_ij - (i+j-1)/2)} inside a rectangle.

    The projection is applied to every cell (i, j) >= (1, 1), including the
    zero cells outside the stored matrix.  window = (t_min, t_max, h_min,
    h_max) with h bounds in ordinary (possibly half-integer) units.
    """
    t_min, t_max, h_min, h_max = window
    lo2 = 2 * h_min
    hi2 = 2 * h_max
    points: list[FacePoint] = []
    for t in range(int(t_min), int(t_max) + 1):
        i = max(1, 1 - t)
        while True:
            j = i + t
            h2 = 2 * pi.entry(i, j) - (i + j - 1)
            if h2 < lo2:
                break
            if h2 <= hi2:
                points.append(FacePoint(t, h2))
            i += 1
    return tuple(points)


def plane_contains(pi: PlanePartition, points: Iterable[FacePoint]) -> bool:
    """True iff every face point lies in the projected face set of pi."""
    for p in points:
        i = max(1, 1 - p.t)
        found = False
        while True:
            j = i + p.t
            h2 = 2 * pi.entry(i, j) - (i + j - 1)
            if h2 < p.h_twice:
                break
            if h2 == p.h_twice:
                found = True
                break
            i += 1
        if not found:
            return False
    return True


def rsk(g: Permutation) -> Partition:
    """Common shape of the insertion/recording tableaux under row insertion.

    Only the shape is kept; row 1 + ... + row k equals the maximal size of a
    union of k increasing subsequences.
    """
    rows: list[list[int]] = []
    for x in g.images:
        cur: int | None = x
        for row in rows:
            k = bisect.bisect_left(row, cur)
            if k == len(row):
                row.append(cur)
                cur = None
                break
            cur, row[k] = row[k], cur
        if cur is not None:
            rows.append([cur])
    return Partition(len(r) for r in rows)


def _longest_decreasing(sub: Sequence[int]) -> int:
    best = [0] * len(sub)
    out = 0
    for i, v in enumerate(sub):
        best[i] = 1 + max((best[j] for j in range(i) if sub[j] > v), default=0)
        out = max(out, best[i])
    return out


def greene_invariants(g: Permutation, k: int) -> int:
    """Exact maximum cardinality of a union of k increasing subsequences.

    Brute force over all position subsets (a subset is a union of k
    increasing subsequences iff its longest decreasing subsequence is <= k),
    so the permutation size is capped.
    """
    n = len(g)
    if n > GREENE_CAP:
        raise SizeLimitError(f"greene_invariants supports n <= {GREENE_CAP}, got {n}")
    if k < 0:
        raise DomainError("k must be nonnegative")
    seq = g.images
    best = 0
    for mask in range(1 << n):
        if mask.bit_count() <= best:
            continue
        sub = [seq[i] for i in range(n) if mask >> i & 1]
        if _longest_decreasing(sub) <= k:
            best = len(sub)
    return best


def partition_contains(lam: Partition, points: Iterable[HalfInt]) -> bool:
    """True iff every half-integer point lies in the boundary set of lam."""
    for x in points:
        # lam_i - i + 1/2 == x  <=>  lam_i - i == (x.twice - 1) / 2
        target = (x.twice - 1) // 2
        found = False
        i = 1
        while True:
            v = lam[i - 1] - i
            if v < target:
                break
            if v == target:
                found = True
                break
            i += 1
        if not found:
            return False
    return True
