import random

import pytest

from friezelab import catalog
from friezelab.errors import SearchNotFound
from friezelab.quivers import (MutationWord, Quiver, has_double_arrow,
                               mutation_class_search)


def test_validation():
    with pytest.raises(ValueError):
        Quiver(["0", "1"], [[0, 1], [1, 0]])  # not skew-symmetric
    with pytest.raises(ValueError):
        Quiver(["0", "1"], [[1, 0], [0, 0]])  # diagonal
    with pytest.raises(ValueError):
        Quiver(["0", "0"], [[0, 0], [0, 0]])  # duplicate labels


def test_kronecker_mutation_flips_double_arrow():
    q = catalog.kronecker()
    m = q.mutate(0)
    assert m.b[1][0] == 2 and m.b[0][1] == -2


def test_mutation_is_involution():
    rng = random.Random(5)
    q = catalog.e6_affine()
    for _ in range(30):
        k = rng.randrange(q.m)
        assert q.mutate(k).mutate(k) == q
        q = q.mutate(rng.randrange(q.m))


def test_d4_star_mutation_at_center():
    # Mutating the star at its center reverses all four arrows and adds the
    # composites of the length-2 paths 4->3->1, 4->3->2, 5->3->1, 5->3->2.
    q = catalog.d4_star()
    m = q.mutate(q.index("3"))
    idx = q.index
    expected = {(idx("1"), idx("3")): 1, (idx("2"), idx("3")): 1,
                (idx("3"), idx("4")): 1, (idx("3"), idx("5")): 1,
                (idx("4"), idx("1")): 1, (idx("4"), idx("2")): 1,
                (idx("5"), idx("1")): 1, (idx("5"), idx("2")): 1}
    for i in range(q.m):
        for j in range(q.m):
            want = expected.get((i, j), 0) - expected.get((j, i), 0)
            assert m.b[i][j] == want


def test_skew_symmetry_preserved_by_random_mutations():
    rng = random.Random(99)
    q = catalog.affine_d(5)
    for _ in range(50):
        q = q.mutate(rng.randrange(q.m))
        for i in range(q.m):
            assert q.b[i][i] == 0
            for j in range(q.m):
                assert q.b[i][j] == -q.b[j][i]


def test_double_arrows():
    assert catalog.kronecker().double_arrows() == [(0, 1)]
    assert catalog.d4_star().double_arrows() == []
    fan = catalog.d4_double_arrow()
    assert fan.double_arrows() == [(fan.index("0"), fan.index("1"))]


def test_isomorphisms_kronecker_self():
    q = catalog.kronecker()
    # the swap reverses the double arrow, so only the identity survives
    assert q.isomorphisms_to(q) == [(0, 1)]


def test_automorphisms_e6_base():
    base = catalog.e_double_arrow(6)
    autos = base.automorphisms()
    assert len(autos) == 2
    nontrivial = [p for p in autos if p != tuple(range(base.m))][0]
    # the symmetry swaps the b-leg and the c-leg and fixes 0, 1, a
    assert nontrivial[base.index("b")] == base.index("c")
    assert nontrivial[base.index("b1")] == base.index("c1")
    assert nontrivial[base.index("a")] == base.index("a")


def test_automorphisms_e7_e8_trivial():
    for n in (7, 8):
        assert catalog.e_double_arrow(n).automorphisms() == [tuple(range(n + 1))]


def test_isomorphism_after_double_mutation():
    q = catalog.d4_star()
    assert tuple(range(q.m)) in q.mutate(2).mutate(2).isomorphisms_to(q)


def test_canonical_key_invariant_under_relabeling():
    rng = random.Random(1)
    q = catalog.e6_affine()
    for _ in range(10):
        perm = list(range(q.m))
        rng.shuffle(perm)
        assert q.permuted(perm).canonical_key() == q.canonical_key()
    assert q.canonical_key() != q.mutate(0).canonical_key() or q.mutate(0) == q


def test_search_kronecker_trivial():
    q, word = mutation_class_search(catalog.kronecker(), has_double_arrow)
    assert word == MutationWord([])
    assert q == catalog.kronecker()


def test_search_d4_reaches_triangle_fan():
    found, word = mutation_class_search(catalog.d4_star(), has_double_arrow, max_nodes=1000)
    assert found.isomorphisms_to(catalog.d4_double_arrow())
    assert catalog.d4_star().mutate_word(word.sequence) == found


def test_search_e6_reaches_base_shape():
    found, _ = mutation_class_search(catalog.e6_affine(), has_double_arrow, max_nodes=5000)
    (u, v), = found.double_arrows()
    triangles = [w for w in range(found.m) if found.b[v][w] > 0 and found.b[w][u] > 0]
    assert len(triangles) == 3
    assert found.isomorphisms_to(catalog.e_double_arrow(6))


def test_search_not_found_budget():
    with pytest.raises(SearchNotFound):
        mutation_class_search(catalog.d4_star(), lambda q: False, max_nodes=5)


def test_bfs_reaches_double_arrow_from_affine_orientations():
    starts = [catalog.affine_a(2, 1), catalog.affine_a(2, 2),
              catalog.affine_d(4), catalog.affine_d(5), catalog.affine_d(6),
              catalog.e6_affine(), catalog.e7_affine(), catalog.e8_affine()]
    for q in starts:
        found, _ = mutation_class_search(q, has_double_arrow)
        assert found.double_arrows()


def test_quiver_json_roundtrip():
    for q in (catalog.kronecker(), catalog.d4_star(), catalog.e_double_arrow(7)):
        assert Quiver.from_json(q.to_json()) == q


def test_frozen_vertices_skipped_in_search():
    q = Quiver(["0", "1", "a"], [[0, 1, -1], [-1, 0, 1], [1, -1, 0]], frozen=["a"])
    with pytest.raises(SearchNotFound):
        # only vertices 0 and 1 may mutate; the predicate never fires
        mutation_class_search(q, lambda _: False, max_nodes=50)


def test_d5_double_arrow_shape_in_class():
    found, _ = mutation_class_search(catalog.affine_d(5), has_double_arrow, 2000)
    assert found.isomorphisms_to(catalog.d_double_arrow(5))


def test_e_base_quivers_lie_in_affine_classes():
    # from each double-arrow base quiver, BFS reaches an acyclic quiver whose
    # underlying graph is the affine E_n tree
    expected_degrees = {6: [1, 1, 1, 2, 2, 2, 3], 7: [1, 1, 1, 2, 2, 2, 2, 3],
                        8: [1, 1, 1, 2, 2, 2, 2, 2, 3]}
    for n in (6, 7):
        base = catalog.e_double_arrow(n)
        found, _ = mutation_class_search(base, lambda q: q.is_acyclic())
        assert all(abs(x) <= 1 for row in found.b for x in row)
        assert sorted(found.underlying_degrees()) == expected_degrees[n]
