"""Generators of the cluster modular group on the affine E double-arrow
base quivers.

A generator is a mutation word followed by the vertex permutation that
returns the quiver to its base labeling:

    ta = mu_a mu_0 mu_1
    tb = mu_b1 mu_b mu_0 mu_1
    tc = mu_ck ... mu_c1 mu_c mu_0 mu_1      (k = n - 5)
    gamma = the order-2 symmetry of the 7-vertex quiver (legs b and c swap)

The written composition order is ambiguous, so the word is first applied
rightmost factor first; if no restoring permutation exists the leftmost
factor is applied first instead and the convention that succeeded is
recorded (empirically always the leftmost-first one).  When several
restoring permutations exist, the one fixing every vertex outside the word
is preferred; if that does not single one out, the candidates must agree on
the variables or AmbiguousPermutation is raised.
"""

from __future__ import annotations

from .catalog import e_double_arrow
from .errors import AmbiguousPermutation, NoRestoringPermutation
from .quivers import MutationWord, Quiver
from .seeds import Seed

GENERATORS = ("ta", "tb", "tc", "gamma")

# (n, generator) -> (mutation sequence, candidate restoring perms, convention)
_CACHE: dict[tuple[int, str], tuple[tuple[int, ...], list[tuple[int, ...]], str]] = {}


def rank_of(quiver: Quiver) -> int:
    """The n with quiver isomorphic to the affine E_n double-arrow shape."""
    n = quiver.m - 1
    if n not in (6, 7, 8):
        raise ValueError("quiver has %d vertices; expected 7, 8 or 9" % quiver.m)
    return n


def generator_labels(n: int, generator: str) -> list[str]:
    """Mutation word of a generator, leftmost composition factor first."""
    k = n - 5
    if generator == "ta":
        return ["a", "0", "1"]
    if generator == "tb":
        return ["b1", "b", "0", "1"]
    if generator == "tc":
        return ["c%d" % i for i in range(k, 0, -1)] + ["c", "0", "1"]
    raise ValueError("unknown generator %r" % generator)


def gamma_permutation(n: int = 6) -> tuple[int, ...]:
    """The unique nontrivial symmetry of the E6 base quiver."""
    if n != 6:
        raise ValueError("the symmetry gamma exists only for n = 6")
    base = e_double_arrow(6)
    for perm in base.automorphisms():
        if perm != tuple(range(base.m)):
            return perm
    raise NoRestoringPermutation("base quiver unexpectedly has no symmetry")


def _resolve(n: int, generator: str) -> tuple[tuple[int, ...], list[tuple[int, ...]], str]:
    """Determine the mutation sequence, the restoring permutations, and the
    composition convention for a generator, on the quiver level only."""
    cached = _CACHE.get((n, generator))
    if cached is not None:
        return cached
    base = e_double_arrow(n)
    labels = generator_labels(n, generator)
    for convention, ordered in (("rightmost-first", labels[::-1]),
                                ("leftmost-first", labels)):
        word = tuple(base.index(l) for l in ordered)
        mutated = base.mutate_word(word)
        isos = mutated.isomorphisms_to(base)
        if not isos:
            continue
        touched = set(word)
        fixing = [s for s in isos
                  if all(s[i] == i for i in range(base.m) if i not in touched)]
        candidates = fixing if len(fixing) == 1 else isos
        result = (word, candidates, convention)
        _CACHE[(n, generator)] = result
        return result
    raise NoRestoringPermutation(
        "word %s returns to no relabeling of the base quiver under either convention" % labels)


def generator_word(n: int, generator: str) -> MutationWord:
    """The generator as a mutation word with its restoring permutation."""
    if generator == "gamma":
        return MutationWord([], gamma_permutation(n))
    word, candidates, _ = _resolve(n, generator)
    if len(candidates) != 1:
        raise AmbiguousPermutation(
            "generator %s on the E%d base quiver admits %d restoring permutations"
            % (generator, n, len(candidates)))
    return MutationWord(word, candidates[0])


def word_convention(n: int, generator: str) -> str:
    """Which composition order produced a restoring permutation."""
    if generator == "gamma":
        return "n/a"
    return _resolve(n, generator)[2]


def modular_generator(seed: Seed, generator: str) -> Seed:
    """Apply a modular-group generator to a seed whose quiver is isomorphic
    to an affine E double-arrow base quiver, returning a seed on the same
    quiver."""
    if generator not in GENERATORS:
        raise ValueError("generator must be one of %s" % (GENERATORS,))
    n = rank_of(seed.quiver)
    base = e_double_arrow(n)
    if seed.quiver == base:
        transport = None
        based = seed
    else:
        isos = seed.quiver.isomorphisms_to(base)
        if not isos:
            raise ValueError("seed quiver is not isomorphic to the E%d double-arrow shape" % n)
        transport = min(isos)
        based = seed.restored(transport, base)

    if generator == "gamma":
        result = based.restored(gamma_permutation(n), base)
    else:
        word, candidates, _ = _resolve(n, generator)
        mutated = based.mutate_word(word)
        if len(candidates) == 1:
            result = mutated.restored(candidates[0], base)
        else:
            restored = [mutated.restored(perm, base) for perm in candidates]
            if any(s != restored[0] for s in restored[1:]):
                raise AmbiguousPermutation(
                    "restoring permutations for %s disagree on the variables" % generator)
            result = restored[0]

    if transport is None:
        return result
    inverse = [0] * len(transport)
    for i, p in enumerate(transport):
        inverse[p] = i
    return result.restored(tuple(inverse), seed.quiver)


def apply_generator_word(seed: Seed, generators: list[str]) -> Seed:
    """Apply named generators left to right (e.g. ["ta", "ta"])."""
    for g in generators:
        seed = modular_generator(seed, g)
    return seed
