"""Quivers as skew-symmetric exchange matrices, with mutation, isomorphism
testing, canonical forms, and breadth-first search of a mutation class.

Vertices carry string labels; B[i][j] = (#arrows i -> j) - (#arrows j -> i).
Everything here is exact integer combinatorics on at most ~10 vertices, so
the isomorphism and canonical-form routines use color refinement followed by
brute force inside the refined classes.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Callable, Iterable, Sequence

from .errors import SearchNotFound

Matrix = tuple[tuple[int, ...], ...]


class Quiver:
    """A finite quiver without loops or 2-cycles, encoded by its B-matrix."""

    __slots__ = ("labels", "b", "frozen", "_key")

    def __init__(self, labels: Iterable[str], b: Sequence[Sequence[int]],
                 frozen: Iterable[str] = ()):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate vertex labels")
        m = len(labels)
        rows = tuple(tuple(int(x) for x in row) for row in b)
        if len(rows) != m or any(len(r) != m for r in rows):
            raise ValueError("B must be a %d x %d matrix" % (m, m))
        for i in range(m):
            if rows[i][i] != 0:
                raise ValueError("diagonal of B must vanish")
            for j in range(m):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError("B must be skew-symmetric")
        self.labels = labels
        self.b = rows
        self.frozen = frozenset(str(x) for x in frozen)
        self._key = None
        if not self.frozen <= set(labels):
            raise ValueError("frozen vertices must be existing labels")

    @classmethod
    def _raw(cls, labels: tuple[str, ...], b: Matrix, frozen: frozenset) -> "Quiver":
        # internal fast path: trusts the caller to pass a valid B-matrix
        quiver = object.__new__(cls)
        quiver.labels = labels
        quiver.b = b
        quiver.frozen = frozen
        quiver._key = None
        return quiver

    # -- basics --------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(str(label))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.labels == other.labels and self.b == other.b and self.frozen == other.frozen

    def __hash__(self) -> int:
        return hash((self.labels, self.b, self.frozen))

    def __repr__(self) -> str:
        return "Quiver(labels=%s)" % (self.labels,)

    def arrows(self) -> list[tuple[int, int]]:
        """Arrow list (tail, head) with multiplicity, in row-major order."""
        out = []
        for i in range(self.m):
            for j in range(self.m):
                if self.b[i][j] > 0:
                    out.extend([(i, j)] * self.b[i][j])
        return out

    def is_acyclic(self) -> bool:
        m = self.m
        indeg = [0] * m
        for i in range(m):
            for j in range(m):
                if self.b[i][j] > 0:
                    indeg[j] += 1
        queue = deque(i for i in range(m) if indeg[i] == 0)
        seen = 0
        while queue:
            i = queue.popleft()
            seen += 1
            for j in range(m):
                if self.b[i][j] > 0:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        queue.append(j)
        return seen == m

    def underlying_degrees(self) -> list[int]:
        return [sum(abs(x) for x in row) for row in self.b]

    # -- mutation --------------------------------------------------------------

    def mutate(self, k: int) -> "Quiver":
        """Standard matrix mutation at vertex index k."""
        m = self.m
        b = self.b
        rows = []
        for i in range(m):
            if i == k:
                rows.append(tuple(-x for x in b[i]))
                continue
            bik = b[i][k]
            row = list(b[i])
            row[k] = -row[k]
            if bik > 0:
                for j in range(m):
                    if j != k and b[k][j] > 0:
                        row[j] += bik * b[k][j]
            elif bik < 0:
                for j in range(m):
                    if j != k and b[k][j] < 0:
                        row[j] -= bik * b[k][j]
            rows.append(tuple(row))
        return Quiver._raw(self.labels, tuple(rows), self.frozen)

    def mutate_word(self, word: Sequence[int]) -> "Quiver":
        q = self
        for k in word:
            q = q.mutate(k)
        return q

    # -- structure queries -----------------------------------------------------

    def double_arrows(self) -> list[tuple[int, int]]:
        """Ordered pairs (u, v) with exactly two parallel arrows u -> v."""
        return [(u, v) for u in range(self.m) for v in range(self.m) if self.b[u][v] == 2]

    def permuted(self, perm: Sequence[int]) -> "Quiver":
        """Relabel: vertex i moves to slot perm[i] (labels move with it)."""
        m = self.m
        inv = [0] * m
        for i, p in enumerate(perm):
            inv[p] = i
        labels = tuple(self.labels[inv[s]] for s in range(m))
        b = tuple(tuple(self.b[inv[s]][inv[t]] for t in range(m)) for s in range(m))
        return Quiver(labels, b, self.frozen)

    # -- isomorphism -----------------------------------------------------------

    def _colors(self, rounds: int = 2) -> list[int]:
        # color refinement for a fixed number of rounds; any fixed round
        # count is isomorphism-invariant, and two rounds already split the
        # vertex classes of the small quivers handled here
        m = self.m
        b = self.b
        colors = _normalize([tuple(sorted(b[i])) for i in range(m)])
        for _ in range(rounds):
            sig = [(colors[i], tuple(sorted(zip(b[i], colors))))
                   for i in range(m)]
            new = _normalize(sig)
            if new == colors:
                break
            colors = new
        return colors

    def isomorphisms_to(self, other: "Quiver") -> list[tuple[int, ...]]:
        """All vertex bijections sigma with other.b[sigma(i)][sigma(j)] == self.b[i][j]."""
        if self.m != other.m:
            return []
        m = self.m
        mine, theirs = self._colors(), other._colors()
        if sorted(mine) != sorted(theirs):
            return []
        candidates = [[j for j in range(m) if theirs[j] == mine[i]] for i in range(m)]
        order = sorted(range(m), key=lambda i: len(candidates[i]))
        found: list[tuple[int, ...]] = []
        assignment: dict[int, int] = {}
        used = [False] * m

        def backtrack(pos: int) -> None:
            if pos == m:
                found.append(tuple(assignment[i] for i in range(m)))
                return
            i = order[pos]
            for j in candidates[i]:
                if used[j]:
                    continue
                ok = True
                for i2, j2 in assignment.items():
                    if self.b[i][i2] != other.b[j][j2] or self.b[i2][i] != other.b[j2][j]:
                        ok = False
                        break
                if ok:
                    assignment[i] = j
                    used[j] = True
                    backtrack(pos + 1)
                    used[j] = False
                    del assignment[i]

        backtrack(0)
        return found

    def automorphisms(self) -> list[tuple[int, ...]]:
        return self.isomorphisms_to(self)

    def canonical_key(self) -> tuple:
        """Isomorphism-invariant key: minimal row-major matrix over the
        permutations compatible with the refined color classes."""
        if self._key is not None:
            return self._key
        b = self.b
        colors = self._colors()
        classes: dict[int, list[int]] = {}
        for i, c in enumerate(colors):
            classes.setdefault(c, []).append(i)
        ordered = [classes[c] for c in sorted(classes)]
        best: tuple | None = None
        for arrangement in itertools.product(*(itertools.permutations(g) for g in ordered)):
            perm: list[int] = [v for group in arrangement for v in group]
            flat = tuple(tuple(b[s][t] for t in perm) for s in perm)
            if best is None or flat < best:
                best = flat
        self._key = best
        return best

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        return {"labels": list(self.labels),
                "b": [list(row) for row in self.b],
                "frozen": sorted(self.frozen)}

    @classmethod
    def from_json(cls, data) -> "Quiver":
        return cls(data["labels"],
                   [[int(x) for x in row] for row in data["b"]],
                   data.get("frozen", []))


def _normalize(values: list) -> list[int]:
    """Map arbitrary orderable signatures to dense ints, order-preserving."""
    ranking = {v: r for r, v in enumerate(sorted(set(values), key=repr))}
    return [ranking[v] for v in values]


class MutationWord:
    """A mutation sequence (vertex indices, applied left factor first) with
    an optional vertex permutation applied after the mutations."""

    __slots__ = ("sequence", "permutation")

    def __init__(self, sequence: Iterable[int], permutation: Sequence[int] | None = None):
        self.sequence = tuple(int(k) for k in sequence)
        self.permutation = tuple(permutation) if permutation is not None else None
        if self.permutation is not None and sorted(self.permutation) != list(range(len(self.permutation))):
            raise ValueError("permutation must be a bijection on vertex slots")

    def __repr__(self) -> str:
        if self.permutation is None:
            return "MutationWord(%s)" % (list(self.sequence),)
        return "MutationWord(%s, perm=%s)" % (list(self.sequence), list(self.permutation))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MutationWord):
            return NotImplemented
        return self.sequence == other.sequence and self.permutation == other.permutation


def mutation_class_search(start: Quiver,
                          predicate: Callable[[Quiver], bool],
                          max_nodes: int = 50_000) -> tuple[Quiver, MutationWord]:
    """Breadth-first search of the mutation class up to isomorphism.

    Returns the first quiver satisfying the predicate together with the
    mutation word reaching it; raises SearchNotFound once max_nodes distinct
    canonical quivers have been visited.
    """
    if predicate(start):
        return start, MutationWord([])
    visited = {start.canonical_key()}
    queue: deque[tuple[Quiver, tuple[int, ...]]] = deque([(start, ())])
    while queue:
        quiver, word = queue.popleft()
        for k in range(quiver.m):
            if quiver.labels[k] in quiver.frozen:
                continue
            nxt = quiver.mutate(k)
            key = nxt.canonical_key()
            if key in visited:
                continue
            if predicate(nxt):
                return nxt, MutationWord(word + (k,))
            visited.add(key)
            if len(visited) >= max_nodes:
                raise SearchNotFound("no quiver matching the predicate within %d canonical quivers"
                                     % max_nodes)
            queue.append((nxt, word + (k,)))
    raise SearchNotFound("mutation class exhausted (%d canonical quivers) without a match"
                         % len(visited))


def has_double_arrow(q: Quiver) -> bool:
    return bool(q.double_arrows())
