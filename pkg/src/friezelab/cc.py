"""The cluster character of quiver representations and the tube-to-frieze
pipeline built on it.

For a representation M of an acyclic quiver with dimension vector m, the
character is

    X_M = prod_i x_i^(-m_i) * sum_e chi(Gr_e(M)) prod_i x_i^(A_i(e))

with A_i(e) = sum over arrows j->i of e_j plus sum over arrows i->j of
(m_j - e_j).  Specializing every x_i to 1 turns the quasi-simples of a tube
into a quiddity row, and the diamond rule grows the frieze from there.

The exponent rule above is one of the two sign conventions compatible with
the abstract cluster-character axioms; it is the one locked by the golden
test on the displayed dimension-(1,1,2,1,1) character.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .chebyshev import chebyshev_S, chebyshev_T
from .frieze import FriezePattern, Quiddity, generate
from .laurent import LaurentPoly
from .rep import DEFAULT_PRIMES, QuiverRep, grassmannian_table
from .seeds import variable_name


@dataclass(frozen=True)
class CCValue:
    laurent: LaurentPoly
    at_ones: int


def cc_map(rep: QuiverRep, primes: Sequence[int] = DEFAULT_PRIMES) -> CCValue:
    """The cluster character of a representation, in the initial variables."""
    quiver = rep.quiver
    names = tuple(variable_name(l) for l in quiver.labels)
    table = grassmannian_table(rep, primes)
    arrows = quiver.arrows()
    total = LaurentPoly.zero(names)
    for e, chi in table:
        exps = [0] * quiver.m
        for t, h in arrows:
            exps[h] += e[t]
            exps[t] += rep.dims[h] - e[h]
        total = total + LaurentPoly.monomial(names, exps, chi)
    shift = LaurentPoly.monomial(names, tuple(-d for d in rep.dims))
    laurent = shift * total
    at_ones = laurent.at_ones()
    assert at_ones == table.chi_sum()
    return CCValue(laurent, at_ones)


def quiddity_from_tube(quiver, tube: Sequence[QuiverRep],
                       primes: Sequence[int] = DEFAULT_PRIMES) -> Quiddity:
    """Quiddity row of a tube: the all-ones characters of its quasi-simples."""
    for rep in tube:
        if rep.quiver != quiver:
            raise ValueError("tube representations must live on the given quiver")
    return Quiddity([cc_map(rep, primes).at_ones for rep in tube])


def frieze_from_tube(quiver, tube: Sequence[QuiverRep], depth: int,
                     primes: Sequence[int] = DEFAULT_PRIMES) -> FriezePattern:
    return generate(quiddity_from_tube(quiver, tube, primes), depth)


def homogeneous_powers(x1: int, kmax: int) -> list[int]:
    """Values u_0..u_kmax of the quasi-length recurrence
    u_{k+1} = x1*u_k - u_{k-1} with u_0 = 1, u_{-1} = 0 (and u_{-2} = -1)."""
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    values = []
    prev, cur = 0, 1
    for k in range(kmax + 1):
        values.append(cur)
        prev, cur = cur, x1 * cur - prev
    for k, u in enumerate(values):
        assert u == chebyshev_S(k, x1)
    return values


def growth_via_homogeneous(x1: int, k: int) -> int:
    """s_k = u_k - u_{k-2}, the growth coefficient from homogeneous data."""
    if k < 1:
        raise ValueError("k must be positive")
    u = homogeneous_powers(x1, k)
    u_km2 = u[k - 2] if k >= 2 else (0 if k == 1 else -1)
    sk = u[k] - u_km2
    assert sk == chebyshev_T(k, x1)
    return sk


def verify_degenerate_cc_identity(primes: Sequence[int] = DEFAULT_PRIMES) -> bool:
    """Check that the parameter-0 degeneration of the dimension-(1,1,2,1,1)
    fixture has character exactly one more than the generic one (its
    all-ones value is 15 = 14 + 1)."""
    from .catalog import d4_m_lambda

    generic = cc_map(d4_m_lambda(2), primes)
    degenerate = cc_map(d4_m_lambda(0), primes)
    return (degenerate.laurent == generic.laurent + 1
            and degenerate.at_ones == generic.at_ones + 1
            and degenerate.at_ones == 15)
