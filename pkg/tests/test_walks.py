import random
from itertools import permutations

import pytest

from dicolor.digraph import CirculantSpec, circulant_tournament
from dicolor.coloring import Coloring, ColoringError, is_valid, permute_colors
from dicolor.reconfig import distance, neighbors
from dicolor.walks import (CFamilyColoring, RecoloringWalk,
                           WalkPreconditionError, c_family,
                           extend_class_to_interval, frozen_coloring,
                           validate_walk, walk_singleton_classes,
                           walk_singletons_plus_pair)

from conftest import transitive_tournament


def random_valid_coloring(d, k, rng):
    while True:
        c = Coloring(tuple(rng.randint(1, k)
                           for _ in range(d.num_vertices)), k)
        if is_valid(d, c):
            return c


# --- walk into all-singleton classes -----------------------------------------


def test_singletons_identical_endpoints_empty_walk():
    d = transitive_tournament(3)
    b = Coloring((1, 2, 3), 3)
    walk = walk_singleton_classes(d, b, b, (1, 2, 3))
    assert walk.length == 0
    assert validate_walk(d, walk) is None


def test_singletons_rotation_needs_full_chase():
    d = transitive_tournament(3)
    b = Coloring((1, 2, 3), 3)
    a = Coloring((2, 3, 1), 3)
    walk = walk_singleton_classes(d, a, b, (1, 2, 3))
    assert validate_walk(d, walk) is None
    assert walk.end.colors == b.colors
    assert walk.length == 3
    assert distance(d, 3, a, b) == 3


def test_singletons_transposition_on_seven_vertices(rev7):
    b = Coloring(tuple(range(1, 8)), 7)
    a = Coloring((2, 1, 3, 4, 5, 6, 7), 7)
    walk = walk_singleton_classes(rev7, a, b, tuple(range(1, 8)))
    assert validate_walk(rev7, walk) is None
    assert walk.end.colors == b.colors
    assert walk.length <= 3
    # A swap through the shared pair class costs exactly two moves.
    assert walk.length == distance(rev7, 7, a, b) == 2


def test_singletons_preconditions():
    d = transitive_tournament(3)
    b = Coloring((1, 2, 3), 3)
    with pytest.raises(WalkPreconditionError):
        walk_singleton_classes(d, b, b, (1,))
    with pytest.raises(WalkPreconditionError):
        walk_singleton_classes(d, b, Coloring((1, 1, 2), 3), (1, 2))
    # Differ outside the named classes.
    with pytest.raises(WalkPreconditionError):
        walk_singleton_classes(d, Coloring((1, 3, 2), 3), b, (1, 2))


def test_singletons_rejects_digons(digon_digraph):
    b = Coloring((1, 2, 1), 2)
    with pytest.raises(WalkPreconditionError) as err:
        walk_singleton_classes(digon_digraph, b, b, (1, 2))
    assert "digon" in str(err.value)


def test_singletons_multi_cycle_displacements():
    d = transitive_tournament(6)
    b = Coloring((1, 2, 3, 4, 5, 6), 6)
    classes = range(1, 7)
    # Two disjoint transpositions, then a 3-cycle plus a transposition.
    for a_cols, expect in (((2, 1, 4, 3, 5, 6), 4), ((2, 3, 1, 5, 4, 6), 5)):
        a = Coloring(a_cols, 6)
        walk = walk_singleton_classes(d, a, b, classes)
        assert validate_walk(d, walk) is None
        assert walk.end.colors == b.colors
        assert walk.length == expect == distance(d, 6, a, b)


def test_pair_walk_with_stray_colors():
    d = transitive_tournament(6)
    b = Coloring((1, 1, 2, 3, 4, 5), 5)
    # The pair vertices start on colors that are not named classes of the
    # walk shape (they sit inside other singleton classes).
    a = Coloring((5, 4, 2, 3, 4, 5), 5)
    walk = walk_singletons_plus_pair(d, a, b, 1, (2, 3, 4, 5))
    assert validate_walk(d, walk) is None
    assert walk.end.colors == b.colors
    assert walk.length == 2


def test_walks_on_random_tournaments():
    rng = random.Random(2024)

    def random_tournament(n):
        arcs = set()
        for u in range(n):
            for v in range(u + 1, n):
                arcs.add((u, v) if rng.random() < 0.5 else (v, u))
        from dicolor.digraph import Digraph
        return Digraph(n, frozenset(arcs))

    for _ in range(6):
        n = rng.randint(4, 6)
        d = random_tournament(n)
        k = n
        perm = list(range(1, k + 1))
        rng.shuffle(perm)
        b = Coloring(tuple(perm), k)
        for _ in range(25):
            a = random_valid_coloring(d, k, rng)
            walk = walk_singleton_classes(d, a, b, range(1, k + 1))
            assert validate_walk(d, walk) is None
            assert walk.end.colors == b.colors
            assert walk.length <= k


def test_singletons_random_instances_meet_bound_and_distance():
    rng = random.Random(11)
    d = transitive_tournament(5)
    k = 5
    b = Coloring((1, 2, 3, 4, 5), k)
    classes = (1, 2, 3, 4, 5)
    for _ in range(60):
        a = random_valid_coloring(d, k, rng)
        walk = walk_singleton_classes(d, a, b, classes)
        assert validate_walk(d, walk) is None
        assert walk.end.colors == b.colors
        assert walk.length <= len(classes)
        assert walk.length == distance(d, k, a, b)


# --- walk into one pair plus singletons --------------------------------------


def test_pair_walk_identity():
    d = transitive_tournament(4)
    b = Coloring((1, 1, 2, 3), 3)
    walk = walk_singletons_plus_pair(d, b, b, 1, (2, 3))
    assert walk.length == 0


def test_pair_walk_exhaustive_on_four_vertices():
    from dicolor.coloring import enumerate_backtrack
    d = transitive_tournament(4)
    b = Coloring((1, 1, 2, 3), 3)
    hardest = 0
    for a in enumerate_backtrack(d, 3):
        walk = walk_singletons_plus_pair(d, a, b, 1, (2, 3))
        assert validate_walk(d, walk) is None
        assert walk.end.colors == b.colors
        assert walk.length <= 4
        dd = distance(d, 3, a, b)
        assert walk.length >= dd
        hardest = max(hardest, dd)
    # The bound len(singles) + 2 is attained.
    assert hardest == 4


def test_pair_walk_preconditions():
    d = transitive_tournament(4)
    b = Coloring((1, 1, 2, 3), 3)
    with pytest.raises(WalkPreconditionError):
        walk_singletons_plus_pair(d, b, b, 2, (1, 3))  # class 2 not a pair
    with pytest.raises(WalkPreconditionError):
        walk_singletons_plus_pair(d, b, b, 1, (1, 2))  # pair among singles
    # Only classes 1 and 2 named, but vertex 3 (class 3) changed.
    with pytest.raises(WalkPreconditionError):
        walk_singletons_plus_pair(
            d, Coloring((1, 1, 2, 2), 3), b, 1, (2,))


def test_pair_walk_random_instances():
    rng = random.Random(23)
    d = transitive_tournament(6)
    k = 5
    b = Coloring((1, 1, 2, 3, 4, 5), k)
    singles = (2, 3, 4, 5)
    for _ in range(60):
        a = random_valid_coloring(d, k, rng)
        walk = walk_singletons_plus_pair(d, a, b, 1, singles)
        assert validate_walk(d, walk) is None
        assert walk.end.colors == b.colors
        assert walk.length <= len(singles) + 2


# --- extending a class to an interval ----------------------------------------


def test_extend_interval_noop_when_already_interval():
    spec = CirculantSpec(4, 4)
    a = Coloring((1, 1, 1, 1, 2, 2, 2, 2, 3), 3)
    walk = extend_class_to_interval(spec, a, 1)
    assert walk.length == 0
    assert sorted(walk.end.class_members(1)) == [0, 1, 2, 3]


def test_extend_interval_antipodal_pair_first_move():
    spec = CirculantSpec(4, 4)
    d = circulant_tournament(spec)
    a = Coloring((1, 2, 2, 2, 1, 3, 3, 3, 3), 3)
    assert sorted(a.class_members(1)) == [0, 4]
    walk = extend_class_to_interval(spec, a, 1)
    assert walk.moves[0] == (6, 1)
    assert walk.length <= 4
    assert validate_walk(d, walk) is None
    end = sorted(walk.end.class_members(1))
    assert len(end) == 4
    assert any(all((v - s) % 9 < 4 for v in end) for s in end)


def test_extend_interval_rejects_forbidden_triangle():
    spec = CirculantSpec(4, 4)
    frozen = frozen_coloring(1)
    with pytest.raises(WalkPreconditionError) as err:
        extend_class_to_interval(spec, frozen, 1)
    assert "forbidden triangle" in str(err.value)


def test_extend_interval_wrong_family():
    with pytest.raises(WalkPreconditionError):
        extend_class_to_interval(CirculantSpec(4, 2),
                                 Coloring((1,) * 9, 3), 1)


def test_extend_interval_random_instances_eleven_vertices():
    rng = random.Random(31)
    spec = CirculantSpec(5, 5)
    d = circulant_tournament(spec)
    n, m = 5, 11
    checked = 0
    while checked < 100:
        a = random_valid_coloring(d, 4, rng)
        cls = a.class_members(1)
        from dicolor.digraph import is_forbidden_triangle
        if len(cls) == 3 and is_forbidden_triangle(spec, cls):
            continue
        walk = extend_class_to_interval(spec, a, 1)
        bound = n - len(cls) if len(cls) <= 1 else n + 2 - len(cls)
        assert validate_walk(d, walk) is None
        assert walk.length <= bound
        end = sorted(walk.end.class_members(1))
        assert len(end) == n
        assert any(all((v - s) % m < n for v in end) for s in end)
        checked += 1


# --- frozen colorings ---------------------------------------------------------


def test_frozen_coloring_base_classes():
    c = frozen_coloring(1)
    assert c.k == 3
    assert sorted(c.class_members(1)) == [0, 4, 5]
    assert sorted(c.class_members(2)) == [1, 2, 6]
    assert sorted(c.class_members(3)) == [3, 7, 8]


def test_frozen_family_is_isolated_and_distinct(rev9):
    seen = set()
    for rot in (0, 1, 2):
        for p in permutations((1, 2, 3)):
            c = frozen_coloring(1, rot, p)
            assert is_valid(rev9, c)
            assert neighbors(rev9, c) == []
            seen.add(c.colors)
    assert len(seen) == 18


def test_frozen_classes_are_forbidden_triangles_n_prime_two():
    from dicolor.digraph import is_forbidden_triangle
    spec = CirculantSpec(7, 7)
    c = frozen_coloring(2)
    assert c.k == 5 and len(c.colors) == 15
    for cls in c.classes():
        assert is_forbidden_triangle(spec, cls)


def test_frozen_triangles_partition_the_vertices():
    for n_prime in (1, 2, 3):
        c = frozen_coloring(n_prime)
        cells = c.classes()
        assert all(len(cell) == 3 for cell in cells)
        union = set().union(*cells)
        assert union == set(range(6 * n_prime + 3))


def test_frozen_parameter_validation():
    with pytest.raises(ColoringError):
        frozen_coloring(0)
    with pytest.raises(ColoringError):
        frozen_coloring(1, rotation=3)
    with pytest.raises(ColoringError):
        frozen_coloring(1, perm=(1, 1, 2))


# --- the singleton-plus-blocks family ----------------------------------------


def test_c_family_example_coloring():
    spec = CirculantSpec(4, 4)
    c = c_family(spec, CFamilyColoring(0, (1, 2, 3)))
    assert c.colors == (1, 2, 2, 2, 2, 3, 3, 3, 3)


@pytest.mark.parametrize("n", range(3, 9))
def test_c_family_always_valid(n):
    spec = CirculantSpec(n, n)
    d = circulant_tournament(spec)
    for a in range(2 * n + 1):
        for cols in permutations((1, 2, 3)):
            assert is_valid(d, c_family(spec, CFamilyColoring(a, cols)))


def test_c_family_rejects_duplicate_colors():
    spec = CirculantSpec(4, 4)
    with pytest.raises(ColoringError):
        c_family(spec, CFamilyColoring(0, (1, 1, 2)))


def test_c_family_differently_colored_singletons_distance(rev9):
    spec = CirculantSpec(4, 4)
    a = c_family(spec, CFamilyColoring(0, (1, 2, 3)))
    b = c_family(spec, CFamilyColoring(2, (2, 3, 1)))
    dd = distance(rev9, 3, a, b)
    assert dd is not None and dd <= 2 * 4 + 1


# --- walk validation ----------------------------------------------------------


def test_validate_walk_empty_ok(rev7):
    w = RecoloringWalk(Coloring((1, 1, 1, 2, 2, 2, 3), 3), ())
    assert validate_walk(rev7, w) is None


def test_validate_walk_frozen_first_move_invalid(rev9):
    frozen = frozen_coloring(1)
    w = RecoloringWalk(frozen, ((0, 2),))
    assert validate_walk(rev9, w) == 0


def test_validate_walk_invalid_start(rev9):
    w = RecoloringWalk(Coloring((1,) * 9, 3), ())
    assert validate_walk(rev9, w) == -1


def test_validate_walk_flags_noop_move(rev7):
    c = Coloring((1, 1, 1, 2, 2, 2, 3), 3)
    w = RecoloringWalk(c, ((0, 1),))
    assert validate_walk(rev7, w) == 0


def test_walk_text_format():
    c = Coloring((1, 2), 2)
    w = RecoloringWalk(c, ((0, 2), (1, 1)))
    assert w.as_text() == "1,2\n0 -> 2\n1 -> 1\n"
    assert w.end.colors == (2, 1)
