"""Exception hierarchy shared by all friezelab modules."""


class FriezelabError(Exception):
    """Base class for every error raised by this package."""


class NotDivisible(FriezelabError):
    """Exact Laurent division failed: the divisor is not a factor."""


class NonPositiveEntry(FriezelabError):
    """Frieze generation produced an entry <= 0 below the row of 1's."""


class InvalidFrieze(FriezelabError):
    """Growth-coefficient structure violated (i-dependence or s1 < 2)."""


class MissingDoubleArrow(FriezelabError):
    """An operation required a double arrow that the quiver lacks."""


class SearchNotFound(FriezelabError):
    """Mutation-class search exhausted its node budget without a hit."""


class NoRestoringPermutation(FriezelabError):
    """No vertex permutation returns a mutated quiver to its base labeling."""


class AmbiguousPermutation(FriezelabError):
    """Several restoring permutations exist and disagree on the variables."""


class NotAffine(FriezelabError):
    """The symmetrized Euler form does not have a one-dimensional positive radical."""


class InadmissiblePrime(FriezelabError):
    """A counting prime collides with a parameter value of the representation."""


class NonPolynomialCount(FriezelabError):
    """Held-out prime disagrees with the interpolated counting polynomial."""
