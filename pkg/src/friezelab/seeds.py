"""Seeds: a quiver plus cluster variables, with exchange-relation mutation.

Cluster variables are Laurent polynomials in the initial variables.  The
variable attached to vertex label L is named "xL" when L is purely numeric
and "x_L" otherwise, so the rank-2 seed prints as x0, x1 and the lettered
double-arrow base quivers as x_a, x_b, ...
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .laurent import LaurentPoly
from .quivers import MutationWord, Quiver


def variable_name(label: str) -> str:
    label = str(label)
    return "x%s" % label if label.isdigit() else "x_%s" % label


class Seed:
    """An exchange quiver together with one cluster variable per vertex."""

    __slots__ = ("quiver", "vars")

    def __init__(self, quiver: Quiver, variables: Sequence[LaurentPoly]):
        if len(variables) != quiver.m:
            raise ValueError("need exactly one variable per vertex")
        self.quiver = quiver
        self.vars = tuple(variables)

    @classmethod
    def initial(cls, quiver: Quiver) -> "Seed":
        """The seed whose variables are the generators x_v themselves.

        Frozen vertices get the constant 1 (their variables never mutate and
        are specialized away).
        """
        names = tuple(variable_name(l) for l in quiver.labels)
        variables = []
        for label, name in zip(quiver.labels, names):
            if label in quiver.frozen:
                variables.append(LaurentPoly.one(names))
            else:
                variables.append(LaurentPoly.variable(names, name))
        return cls(quiver, variables)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented
        return self.quiver == other.quiver and self.vars == other.vars

    def __hash__(self) -> int:
        return hash((self.quiver, self.vars))

    def __repr__(self) -> str:
        return "Seed(m=%d, labels=%s)" % (self.quiver.m, self.quiver.labels)

    def mutate(self, k: int) -> "Seed":
        """Exchange mutation at vertex index k (not allowed on frozen ones)."""
        quiver = self.quiver
        if quiver.labels[k] in quiver.frozen:
            raise ValueError("cannot mutate frozen vertex %r" % quiver.labels[k])
        b = quiver.b
        ring_vars = self.vars[k].vars
        inc = LaurentPoly.one(ring_vars)
        out = LaurentPoly.one(ring_vars)
        for j in range(quiver.m):
            if b[j][k] > 0:
                inc = inc * self.vars[j] ** b[j][k]
            if b[k][j] > 0:
                out = out * self.vars[j] ** b[k][j]
        new_var = (inc + out).div_exact(self.vars[k])
        variables = list(self.vars)
        variables[k] = new_var
        return Seed(quiver.mutate(k), variables)

    def mutate_word(self, word: Sequence[int] | MutationWord) -> "Seed":
        if isinstance(word, MutationWord):
            seed = self
            for k in word.sequence:
                seed = seed.mutate(k)
            if word.permutation is not None:
                seed = seed.permuted(word.permutation)
            return seed
        seed = self
        for k in word:
            seed = seed.mutate(k)
        return seed

    def permuted(self, perm: Sequence[int]) -> "Seed":
        """Move vertex i (with its variable) to slot perm[i]."""
        return Seed(self.quiver.permuted(perm),
                    _permute_tuple(self.vars, perm))

    def restored(self, perm: Sequence[int], base: Quiver) -> "Seed":
        """Permute the variables by perm and reattach them to the base quiver.

        perm must identify this seed's quiver with base, i.e. be an element
        of self.quiver.isomorphisms_to(base).
        """
        moved = self.quiver.permuted(perm)
        if moved.b != base.b:
            raise ValueError("permutation does not carry this quiver to the base quiver")
        return Seed(base, _permute_tuple(self.vars, perm))


def _permute_tuple(values: Sequence, perm: Sequence[int]) -> tuple:
    out = [None] * len(values)
    for i, p in enumerate(perm):
        out[p] = values[i]
    return tuple(out)
