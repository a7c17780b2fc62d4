import pytest

from catlog.catalan import count_ornaments, count_paths
from catlog.errors import ResourceCapError
from catlog.trees import (
    CycleRootedTree,
    PlaneTree,
    RootMinimalForest,
    canonical_cycle,
    enumerate_cycle_rooted,
    enumerate_trees,
    forest_to_tree,
    is_root_minimal,
    rightmost_branch,
    to_cycle_rooted,
    to_root_minimal,
    tree_to_forest,
)

GRID = [(2, n) for n in range(1, 6)] + [(3, n) for n in range(1, 5)] + [(4, n) for n in range(1, 4)]


def tree(k, root, slots):
    return PlaneTree(k, root, slots)


def leaf_row(k):
    return (None,) * k


class TestValidation:
    def test_row_length(self):
        with pytest.raises(ValueError):
            tree(2, 1, {1: (None,)})

    def test_child_in_two_slots(self):
        with pytest.raises(ValueError):
            tree(2, 1, {1: (2, 2), 2: leaf_row(2)})

    def test_root_cannot_be_a_child(self):
        with pytest.raises(ValueError):
            tree(2, 1, {1: (2, 1), 2: leaf_row(2)})

    def test_unreachable_vertices(self):
        with pytest.raises(ValueError):
            tree(2, 1, {1: leaf_row(2), 2: (3, None), 3: (2, None)})

    def test_cycle_tree_needs_vacant_rightmost(self):
        with pytest.raises(ValueError):
            CycleRootedTree(2, (1,), {1: (None, 2), 2: leaf_row(2)})

    def test_cycle_stored_canonically(self):
        with pytest.raises(ValueError):
            CycleRootedTree(2, (2, 1), {1: leaf_row(2), 2: leaf_row(2)})

    def test_canonical_cycle_helper(self):
        assert canonical_cycle((3, 1, 2)) == (1, 2, 3)
        assert canonical_cycle((1,)) == (1,)


class TestRightmostBranch:
    def test_single_vertex(self):
        assert rightmost_branch(tree(2, 1, {1: leaf_row(2)})) == [1]

    def test_follows_last_slot(self):
        t = tree(2, 1, {1: (None, 3), 3: leaf_row(2)})
        assert rightmost_branch(t) == [1, 3]

    def test_ignores_other_slots(self):
        t = tree(2, 2, {2: (1, None), 1: leaf_row(2)})
        assert rightmost_branch(t) == [2]


class TestRootMinimal:
    def test_single_vertex(self):
        assert is_root_minimal(tree(2, 1, {1: leaf_row(2)}))

    def test_bigger_vertex_below(self):
        assert is_root_minimal(tree(2, 1, {1: (None, 3), 3: leaf_row(2)}))

    def test_smaller_vertex_below(self):
        assert not is_root_minimal(tree(2, 2, {2: (None, 1), 1: leaf_row(2)}))

    def test_left_children_do_not_matter(self):
        assert is_root_minimal(tree(2, 2, {2: (1, None), 1: leaf_row(2)}))


class TestEnumerateTrees:
    def test_singleton(self):
        assert len(enumerate_trees(2, {1})) == 1

    def test_two_vertices_binary(self):
        got = enumerate_trees(2, {1, 2})
        assert len(got) == 4
        shapes = {(t.root, t.slot_map[t.root]) for t in got}
        assert shapes == {(1, (2, None)), (1, (None, 2)), (2, (1, None)), (2, (None, 1))}

    def test_two_vertices_ternary(self):
        assert len(enumerate_trees(3, {1, 2})) == 6

    def test_counts_on_grid(self):
        for k, n in GRID:
            assert len(enumerate_trees(k, range(1, n + 1))) == count_paths(k, n), (k, n)

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            enumerate_trees(2, range(1, 30))


class TestForestBijection:
    def test_minimal_tree_stays_whole(self):
        t = tree(2, 1, {1: (None, 2), 2: leaf_row(2)})
        assert tree_to_forest(t).parts == frozenset({t})

    def test_hand_cut(self):
        t = tree(2, 2, {2: (None, 1), 1: leaf_row(2)})
        forest = tree_to_forest(t)
        assert forest.parts == {
            tree(2, 2, {2: leaf_row(2)}),
            tree(2, 1, {1: leaf_row(2)}),
        }

    def test_cut_compares_with_piece_root(self):
        # 3 hangs below 2 on the rightmost branch of root 1: the branch is
        # cut nowhere at 3 (3 > 1 fails only against the piece root 1)
        t = tree(2, 1, {1: (None, 2), 2: (None, 3), 3: leaf_row(2)})
        assert tree_to_forest(t).parts == frozenset({t})

    def test_hand_glue(self):
        forest = RootMinimalForest(frozenset({
            tree(2, 2, {2: leaf_row(2)}),
            tree(2, 1, {1: leaf_row(2)}),
        }))
        assert forest_to_tree(forest) == tree(2, 2, {2: (None, 1), 1: leaf_row(2)})

    def test_roundtrip_exhaustive(self):
        for k, n in GRID:
            for t in enumerate_trees(k, range(1, n + 1)):
                assert forest_to_tree(tree_to_forest(t)) == t, (k, n)

    def test_parts_are_root_minimal(self):
        for t in enumerate_trees(2, range(1, 5)):
            assert all(is_root_minimal(part) for part in tree_to_forest(t).parts)

    def test_forest_validation(self):
        with pytest.raises(ValueError):
            RootMinimalForest(frozenset({tree(2, 2, {2: (None, 1), 1: leaf_row(2)})}))
        with pytest.raises(ValueError):
            RootMinimalForest(frozenset({
                tree(2, 1, {1: leaf_row(2)}),
                tree(2, 1, {1: (None, 2), 2: leaf_row(2)}),
            }))


class TestCycleBijection:
    def test_single_vertex(self):
        t = tree(2, 1, {1: leaf_row(2)})
        c = to_cycle_rooted(t)
        assert c.cycle == (1,)
        assert to_root_minimal(c) == t

    def test_hand_example(self):
        t = tree(2, 1, {1: (None, 3), 3: (2, None), 2: leaf_row(2)})
        c = to_cycle_rooted(t)
        assert c.cycle == (1, 3)
        assert c.slot_map[3] == (2, None)
        assert to_root_minimal(c) == t

    def test_requires_root_minimal(self):
        with pytest.raises(ValueError):
            to_cycle_rooted(tree(2, 2, {2: (None, 1), 1: leaf_row(2)}))

    def test_cycle_length_is_branch_length(self):
        for t in enumerate_trees(2, range(1, 5)):
            if is_root_minimal(t):
                assert len(to_cycle_rooted(t).cycle) == len(rightmost_branch(t))

    def test_roundtrip_exhaustive(self):
        for k, n in GRID:
            minimal = [t for t in enumerate_trees(k, range(1, n + 1)) if is_root_minimal(t)]
            for t in minimal:
                assert to_root_minimal(to_cycle_rooted(t)) == t
            for c in enumerate_cycle_rooted(k, n):
                assert to_cycle_rooted(to_root_minimal(c)) == c


class TestEnumerateCycleRooted:
    def test_singleton(self):
        got = enumerate_cycle_rooted(2, 1)
        assert len(got) == 1
        assert got[0].cycle == (1,)

    def test_three_structures(self):
        got = enumerate_cycle_rooted(2, 2)
        as_pairs = {(c.cycle, c.slot_map[c.cycle[0]][0]) for c in got}
        assert as_pairs == {((1,), 2), ((2,), 1), ((1, 2), None)}

    def test_ternary(self):
        assert len(enumerate_cycle_rooted(3, 2)) == count_ornaments(3, 2) == 5

    def test_counts_match_minimal_trees(self):
        for k, n in GRID:
            cycle_trees = enumerate_cycle_rooted(k, n)
            minimal = [
                t for t in enumerate_trees(k, range(1, n + 1)) if is_root_minimal(t)
            ]
            assert len(cycle_trees) == len(minimal) == count_ornaments(k, n), (k, n)

    def test_deterministic(self):
        assert enumerate_cycle_rooted(2, 3) == enumerate_cycle_rooted(2, 3)
