"""Built-in quivers and representation fixtures used by the tests, the CLI,
and the verification suite.

The affine D4 star, the affine E6 orientation, and the rank-2 tube
representations below are the standard desk examples; the double-arrow base
quivers are the unique shapes in the corresponding mutation classes whose
modular-group generator words admit restoring permutations satisfying the
tau relations (pendant and chain arrows point INTO the triangle vertices).
"""

from __future__ import annotations

from .quivers import Quiver
from .rep import QuiverRep


def _quiver_from_arrows(labels, arrows, frozen=()):
    idx = {l: i for i, l in enumerate(labels)}
    m = len(labels)
    b = [[0] * m for _ in range(m)]
    for t, h in arrows:
        b[idx[t]][idx[h]] += 1
        b[idx[h]][idx[t]] -= 1
    return Quiver(labels, b, frozen)


# -- acyclic affine quivers ---------------------------------------------------

def kronecker() -> Quiver:
    """Two vertices, two parallel arrows 0 -> 1."""
    return Quiver(["0", "1"], [[0, 2], [-2, 0]])


def affine_a(p: int, q: int) -> Quiver:
    """Cycle with p clockwise and q counterclockwise arrows (p, q >= 1)."""
    if p < 1 or q < 1:
        raise ValueError("need p, q >= 1")
    if p + q == 2:
        return kronecker()
    n = p + q
    labels = [str(i) for i in range(n)]
    arrows = []
    for i in range(n):
        j = (i + 1) % n
        if i < p:
            arrows.append((labels[i], labels[j]))
        else:
            arrows.append((labels[j], labels[i]))
    return _quiver_from_arrows(labels, arrows)


def d4_star() -> Quiver:
    """Affine D4: center 3 with arrows 3->1, 3->2, 4->3, 5->3."""
    return _quiver_from_arrows(
        ["1", "2", "3", "4", "5"],
        [("3", "1"), ("3", "2"), ("4", "3"), ("5", "3")])


def affine_d(rank: int) -> Quiver:
    """An orientation of the affine D_rank diagram (rank >= 4)."""
    if rank < 4:
        raise ValueError("affine D needs rank >= 4")
    if rank == 4:
        return d4_star()
    spine = ["s%d" % i for i in range(1, rank - 2)]
    labels = ["f1", "f2"] + spine + ["f3", "f4"]
    arrows = [("f1", spine[0]), ("f2", spine[0]),
              (spine[-1], "f3"), (spine[-1], "f4")]
    arrows += [(a, b) for a, b in zip(spine, spine[1:])]
    return _quiver_from_arrows(labels, arrows)


def e6_affine() -> Quiver:
    """Affine E6: center 1, legs 3->2->1, 5->4->1, 7->6->1."""
    return _quiver_from_arrows(
        ["1", "2", "3", "4", "5", "6", "7"],
        [("2", "1"), ("3", "2"), ("4", "1"), ("5", "4"), ("6", "1"), ("7", "6")])


def e7_affine() -> Quiver:
    """Affine E7: path 1..7 oriented downward with 8 attached to 4."""
    labels = [str(i) for i in range(1, 9)]
    arrows = [(str(i + 1), str(i)) for i in range(1, 7)] + [("8", "4")]
    return _quiver_from_arrows(labels, arrows)


def e8_affine() -> Quiver:
    """Affine E8: path 1..8 oriented downward with 9 attached to 6."""
    labels = [str(i) for i in range(1, 10)]
    arrows = [(str(i + 1), str(i)) for i in range(1, 8)] + [("9", "6")]
    return _quiver_from_arrows(labels, arrows)


def e_affine(n: int) -> Quiver:
    return {6: e6_affine, 7: e7_affine, 8: e8_affine}[n]()


# -- double-arrow base quivers ------------------------------------------------

def d4_double_arrow() -> Quiver:
    """The unique double-arrow quiver in the affine D4 class:
    0 => 1 with three directed triangles 1 -> w -> 0."""
    return _quiver_from_arrows(
        ["0", "1", "a", "b", "c"],
        [("0", "1"), ("0", "1"), ("1", "a"), ("a", "0"),
         ("1", "b"), ("b", "0"), ("1", "c"), ("c", "0")])


def d_double_arrow(rank: int) -> Quiver:
    """Double-arrow quiver of affine type D_rank: the D4 fan plus a chain
    c1 -> c (then c2 -> c1, ...) hanging off the triangle vertex c."""
    if rank < 4:
        raise ValueError("affine D needs rank >= 4")
    labels = ["0", "1", "a", "b", "c"] + ["c%d" % i for i in range(1, rank - 3)]
    arrows = [("0", "1"), ("0", "1")]
    for w in ("a", "b", "c"):
        arrows += [("1", w), (w, "0")]
    chain = ["c"] + ["c%d" % i for i in range(1, rank - 3)]
    arrows += [(b, a) for a, b in zip(chain, chain[1:])]
    return _quiver_from_arrows(labels, arrows)


def e_double_arrow(n: int) -> Quiver:
    """Double-arrow base quiver of affine type E_n (n = 6, 7, 8): the D4 fan
    plus a pendant b1 -> b and a chain ck -> ... -> c1 -> c."""
    if n not in (6, 7, 8):
        raise ValueError("n must be 6, 7 or 8")
    k = n - 5
    labels = ["0", "1", "a", "b", "b1", "c"] + ["c%d" % i for i in range(1, k + 1)]
    arrows = [("0", "1"), ("0", "1")]
    for w in ("a", "b", "c"):
        arrows += [("1", w), (w, "0")]
    arrows.append(("b1", "b"))
    chain = ["c"] + ["c%d" % i for i in range(1, k + 1)]
    arrows += [(b, a) for a, b in zip(chain, chain[1:])]
    return _quiver_from_arrows(labels, arrows)


# -- representation fixtures ---------------------------------------------------

def d4_m_lambda(lam: int = 2) -> QuiverRep:
    """The dimension-(1,1,2,1,1) representation of the D4 star with maps
    [1 1], [lam 1], [1 0]^T, [0 1]^T.  Generic parameter values (lam not 0
    or 1) give the quasi-simple of a homogeneous tube; lam = 0 degenerates
    into a non-homogeneous tube."""
    params = {"lambda": lam} if lam not in (0, 1) else {}
    return QuiverRep(
        d4_star(),
        dims=(1, 1, 2, 1, 1),
        maps=[
            [[1, 1]],        # 3 -> 1
            [[lam, 1]],      # 3 -> 2
            [[1], [0]],      # 4 -> 3
            [[0], [1]],      # 5 -> 3
        ],
        params=params)


def _d4_rep(dims, maps):
    return QuiverRep(d4_star(), dims, maps)


def d4_tubes() -> list[tuple[QuiverRep, QuiverRep]]:
    """Quasi-simple pairs at the mouths of the three rank-2 tubes of the
    D4 star, in the order (tube 1, tube 2, tube 3)."""
    one = [[1]]
    none_10 = [[]]            # 1 x 0 matrix
    none_01 = []              # 0 x 1 matrix
    r1_tube1 = _d4_rep((1, 1, 1, 1, 1), [one, one, one, one])
    r2_tube1 = _d4_rep((0, 0, 1, 0, 0), [none_01, none_01, none_10, none_10])
    r1_tube2 = _d4_rep((1, 0, 1, 0, 1), [one, none_01, none_10, one])
    r2_tube2 = _d4_rep((0, 1, 1, 1, 0), [none_01, one, one, none_10])
    r1_tube3 = _d4_rep((0, 1, 1, 0, 1), [none_01, one, none_10, one])
    r2_tube3 = _d4_rep((1, 0, 1, 1, 0), [one, none_01, one, none_10])
    return [(r1_tube1, r2_tube1), (r1_tube2, r2_tube2), (r1_tube3, r2_tube3)]


def kronecker_regular(nu: int = 2) -> QuiverRep:
    """A regular quasi-simple of the Kronecker quiver: maps (1) and (nu)."""
    params = {"nu": nu} if nu not in (0, 1) else {}
    return QuiverRep(kronecker(), (1, 1), [[[1]], [[nu]]], params)


def zero_rep(quiver: Quiver) -> QuiverRep:
    dims = (0,) * quiver.m
    return QuiverRep(quiver, dims, [[] for _ in quiver.arrows()])


def simple_rep(quiver: Quiver, vertex: int) -> QuiverRep:
    dims = tuple(1 if i == vertex else 0 for i in range(quiver.m))
    maps = []
    for t, h in quiver.arrows():
        if dims[h] == 0:
            maps.append([])
        else:
            maps.append([[]] if dims[t] == 0 else [[0]])
    return QuiverRep(quiver, dims, maps)


E6_TUBE_QUIDDITIES = ((9, 36), (7, 7, 7), (7, 7, 7))

# Dimension vectors of the quasi-simples at the mouths of the three
# non-homogeneous tubes of the affine E6 orientation above (ranks 2, 3, 3).
# Explicit matrices are not shipped; each vector is regular (defect 0) and
# each tube's vectors sum to the radical vector delta = (3,2,1,2,1,2,1).
E6_TUBE_DIMENSION_VECTORS = (
    ((1, 1, 0, 1, 0, 1, 0), (2, 1, 1, 1, 1, 1, 1)),
    ((1, 1, 1, 0, 0, 1, 0), (1, 0, 0, 1, 0, 1, 1), (1, 1, 0, 1, 1, 0, 0)),
    ((1, 1, 0, 0, 0, 1, 1), (1, 1, 1, 1, 0, 0, 0), (1, 0, 0, 1, 1, 1, 0)),
)
