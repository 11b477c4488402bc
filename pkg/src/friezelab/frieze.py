"""Periodic infinite frieze patterns generated from quiddity sequences.

Entries x[i][j] live on diagonals: x[i][i] = 0, x[i][i+1] = 1, and the
division-free recurrence x[i][j+1] = a[j+1]*x[i][j] - x[i][j-1] (quiddity
index mod n) fills everything below.  Integrality holds by construction and
the diamond relation bc - ad = 1 is checked afterwards as an invariant.

Row numbering follows the staggered layout: the row of 0's is row -1, the
row of 1's is row 0, the quiddity row is row 1.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Sequence

from .chebyshev import chebyshev_T
from .errors import InvalidFrieze, NonPositiveEntry


class Quiddity:
    """A cyclic sequence of positive integers, compared up to rotation."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[int]):
        ent = tuple(int(a) for a in entries)
        if not ent:
            raise ValueError("quiddity must have at least one entry")
        if any(a < 1 for a in ent):
            raise ValueError("quiddity entries must be positive integers")
        self.entries = ent

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i % len(self.entries)]

    def rotations(self) -> list[tuple[int, ...]]:
        n = len(self.entries)
        return [self.entries[i:] + self.entries[:i] for i in range(n)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quiddity):
            return NotImplemented
        return len(self) == len(other) and other.entries in self.rotations()

    def __hash__(self) -> int:
        return hash(min(self.rotations()))

    def __repr__(self) -> str:
        return "Quiddity(%s)" % (self.entries,)


class FriezePattern:
    """An n-periodic infinite frieze computed down to a fixed depth."""

    def __init__(self, quiddity: Quiddity, depth: int, diagonals: dict[int, list[int]]):
        self.quiddity = quiddity
        self.depth = depth
        self._diagonals = diagonals  # residue of i (mod n) -> [x[i][i+t] for t in 0..depth+1]

    @property
    def period(self) -> int:
        return len(self.quiddity)

    def entry(self, i: int, j: int) -> int:
        """The entry x[i][j]; defined for j - i in [0, depth + 1]."""
        t = j - i
        if t < 0 or t > self.depth + 1:
            raise IndexError("entry (%d, %d) lies outside the computed band" % (i, j))
        return self._diagonals[i % self.period][t]

    def row(self, r: int) -> list[int]:
        """One period of row r, aligned with the printed staggered layout."""
        if r < -1 or r > self.depth:
            raise IndexError("row %d not computed (depth %d)" % (r, self.depth))
        start = -2 - (r // 2) if r >= 0 else -2
        return [self.entry(start + t, start + t + r + 1) for t in range(self.period)]

    def rows(self) -> list[list[int]]:
        return [self.row(r) for r in range(1, self.depth + 1)]

    def __repr__(self) -> str:
        return "FriezePattern(quiddity=%s, depth=%d)" % (self.quiddity.entries, self.depth)


def generate(quiddity: Quiddity | Sequence[int], depth: int) -> FriezePattern:
    """Fill a frieze pattern from its quiddity row down to the given depth.

    Raises NonPositiveEntry as soon as a computed entry in rows >= 1 fails
    to be positive, which means the quiddity does not bound an infinite
    frieze.
    """
    if not isinstance(quiddity, Quiddity):
        quiddity = Quiddity(quiddity)
    if depth < 1:
        raise ValueError("depth must be at least 1")
    n = len(quiddity)
    diagonals: dict[int, list[int]] = {}
    for res in range(n):
        # the diagonal through (i, i) depends only on i mod n
        diag = [0, 1]
        for t in range(1, depth + 1):
            a = quiddity[(res + t + 1) % n]
            nxt = a * diag[t] - diag[t - 1]
            if nxt <= 0:
                raise NonPositiveEntry(
                    "entry in row %d is %d <= 0; quiddity %s does not bound an infinite frieze"
                    % (t, nxt, quiddity.entries))
            diag.append(nxt)
        diagonals[res] = diag
    pattern = FriezePattern(quiddity, depth, diagonals)
    _check_diamond(pattern)
    return pattern


def _check_diamond(pattern: FriezePattern) -> None:
    # x[i][j]*x[i+1][j+1] - x[i][j+1]*x[i+1][j] == 1 on every stored diamond.
    n = pattern.period
    for i in range(n):
        for t in range(1, pattern.depth + 1):
            left = pattern.entry(i, i + t)
            right = pattern.entry(i + 1, i + 1 + t)
            top = pattern.entry(i + 1, i + t)
            bottom = pattern.entry(i, i + 1 + t)
            if left * right - top * bottom != 1:
                raise InvalidFrieze("diamond relation fails at (%d, %d)" % (i, i + t))


def growth(pattern: FriezePattern, k: int) -> int:
    """The k-th growth coefficient s_k of the pattern.

    s_1 is read from the entries (row n minus row n-2, checked to be
    independent of the starting diagonal); higher k follow the recurrence
    s_{k+1} = s_1*s_k - s_{k-1} with s_0 = 2 and are cross-checked against
    the first-kind Chebyshev value.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = pattern.period
    if pattern.depth < n:
        raise ValueError("pattern depth %d too shallow to read s_1 (need >= %d)"
                         % (pattern.depth, n))
    diffs = {pattern.entry(i, i + n + 1) - pattern.entry(i + 1, i + n) for i in range(n)}
    if len(diffs) != 1:
        raise InvalidFrieze("growth difference depends on the diagonal: %s" % sorted(diffs))
    s1 = diffs.pop()
    prev, cur = 2, s1
    for _ in range(k - 1):
        prev, cur = cur, s1 * cur - prev
    assert cur == chebyshev_T(k, s1)
    return cur


def measured_growth(pattern: FriezePattern, k: int) -> int:
    """Read s_k directly from the entries (needs depth >= k*n)."""
    n = pattern.period
    if pattern.depth < k * n:
        raise ValueError("depth %d too shallow to measure s_%d" % (pattern.depth, k))
    diffs = {pattern.entry(i, i + k * n + 1) - pattern.entry(i + 1, i + k * n) for i in range(n)}
    if len(diffs) != 1:
        raise InvalidFrieze("growth difference depends on the diagonal: %s" % sorted(diffs))
    return diffs.pop()


class GrowthClass(Enum):
    AFFINE_FAST = "affine-fast"
    ARITHMETIC_LIKE = "arithmetic-like"


def classify_growth_value(s1: int) -> GrowthClass:
    if s1 == 2:
        return GrowthClass.ARITHMETIC_LIKE
    if s1 > 2:
        return GrowthClass.AFFINE_FAST
    raise InvalidFrieze("s_1 = %d < 2: not an infinite frieze" % s1)


def classify_growth(pattern: FriezePattern) -> GrowthClass:
    """Arithmetic-like growth (s_1 = 2) versus fast affine growth (s_1 > 2)."""
    return classify_growth_value(growth(pattern, 1))
