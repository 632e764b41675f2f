"""Di-sk trees: chain views, flips, shapes, conversions, serialization."""

import itertools

import pytest

from descpoly.families import catalan
from descpoly.permutations import identity, parse_permutation, separable_permutations
from descpoly.trees import (
    DiskTree,
    InvalidTreeError,
    TreeShape,
    enumerate_shapes,
    enumerate_trees,
    perm_to_tree,
    tree_to_word,
    word_to_tree,
)
from descpoly.words import SchroderWord, sweep

SCHRODER = [1, 2, 6, 22, 90, 394, 1806]

RUNNING_EXAMPLE = parse_permutation("984132756")


def test_alternation_validator():
    DiskTree.parse("(- (+ _ _) _)")
    DiskTree.parse("(+ _ (- _ (+ _ _)))")
    with pytest.raises(InvalidTreeError):
        DiskTree.parse("(+ _ (+ _ _))")
    with pytest.raises(InvalidTreeError):
        DiskTree.parse("(- (+ _ _) (- _ _))")


def test_validator_accepts_exactly_schroder_many():
    # brute force over all label assignments of all shapes
    for n in range(1, 8):
        accepted = 0
        for shape in enumerate_shapes(n):
            m = shape.size
            for labels in itertools.product("+-", repeat=m):
                it = iter(labels)

                def build(s):
                    if s is None:
                        return None
                    lab = next(it)
                    return (lab, build(s[0]), build(s[1]))

                candidate = build(shape.structure)
                try:
                    DiskTree(candidate)
                    accepted += 1
                except InvalidTreeError:
                    pass
        assert accepted == SCHRODER[n - 1]


def test_word_tree_correspondence():
    w = sweep(RUNNING_EXAMPLE)
    t = word_to_tree(w)
    assert t.labels() == ("-", "-", "-", "+", "-", "+", "-", "+")
    assert t.minus_positions() == RUNNING_EXAMPLE.descent_set()
    assert tree_to_word(t).expr == w.expr
    single = word_to_tree(SchroderWord.parse("(1+1)"))
    assert single.size == 1 and single.labels() == ("+",)


def test_word_tree_roundtrip_exhaustive():
    from descpoly.words import enumerate_words

    for n in range(1, 8):
        for w in enumerate_words(n):
            t = word_to_tree(w)
            assert tree_to_word(t).expr == w.expr
            assert word_to_tree(t.to_word()) == t


def test_perm_to_tree_statistic():
    t = perm_to_tree(RUNNING_EXAMPLE)
    assert t.n_minus() == RUNNING_EXAMPLE.des() == 5
    for n in range(1, 8):
        for p in separable_permutations(n):
            assert perm_to_tree(p).n_minus() == p.des()


def test_identity_gives_all_plus_left_comb():
    t = perm_to_tree(identity(6))
    assert t.n_minus() == 0
    view = t.right_chains()
    assert view.lengths() == (1,) * 5
    assert all(c.level == 0 for c in view.chains)
    assert [c.attachment for c in view.chains] == ["lock"] * 4 + ["root-group"]


def test_right_comb_single_chain():
    t = DiskTree.parse("(+ _ (- _ (+ _ (- _ _))))")
    view = t.right_chains()
    assert view.r == 1 and view.lengths() == (4,)


def test_running_example_chain_view():
    view = perm_to_tree(RUNNING_EXAMPLE).right_chains()
    assert view.lengths() == (1, 4, 3)
    assert view.r_odd == 2 and view.r_even == 1
    assert [c.level for c in view.chains] == [0, 0, 1]
    assert [c.attachment for c in view.chains] == ["lock", "root-group", "hang"]
    assert [c.group for c in view.chains] == [1, 1, 2]
    # the hanging group records its hang node (the chain-2 non-terminal 6)
    assert view.groups[1].hang_node == 6


def test_same_level_terminals_share_a_left_chain():
    # within every group, each terminal is the left child of the next
    for n in range(2, 8):
        for t in enumerate_trees(n):
            view = t.right_chains()
            _, _, parent = t._arrays()
            for g in view.groups:
                run = [view.chains[ci - 1] for ci in g.chains]
                for lower, upper in zip(run, run[1:]):
                    assert parent[lower.terminal] == upper.terminal
                    assert lower.level == upper.level == g.level


def test_flip_chain_involution_and_commutation():
    t = perm_to_tree(RUNNING_EXAMPLE)
    r = t.right_chains().r
    for i in range(1, r + 1):
        assert t.flip_chain(i).flip_chain(i) == t
    for i, j in itertools.combinations(range(1, r + 1), 2):
        assert t.flip_chain(i).flip_chain(j) == t.flip_chain(j).flip_chain(i)
    with pytest.raises(ValueError):
        t.flip_chain(r + 1)


def test_flip_commutation_exhaustive_small():
    for n in range(2, 7):
        for t in enumerate_trees(n):
            r = t.right_chains().r
            for i, j in itertools.combinations(range(1, r + 1), 2):
                assert t.flip_chain(i).flip_chain(j) == t.flip_chain(j).flip_chain(i)


def test_orbit_size_is_two_to_the_r():
    for n in range(2, 7):
        for t in enumerate_trees(n):
            r = t.right_chains().r
            orbit = {t}
            frontier = [t]
            while frontier:
                u = frontier.pop()
                for i in range(1, r + 1):
                    v = u.flip_chain(i)
                    if v not in orbit:
                        orbit.add(v)
                        frontier.append(v)
            assert len(orbit) == 2**r
            assert len({u.shape().key() for u in orbit}) == 1


def test_orbits_are_shape_classes():
    for n in range(1, 8):
        trees = list(enumerate_trees(n))
        by_shape = {}
        for t in trees:
            by_shape.setdefault(t.shape().key(), []).append(t)
        assert len(by_shape) == catalan(n - 1)
        for members in by_shape.values():
            r = members[0].right_chains().r
            assert len(members) == 2**r


def test_shape_chain_types_n4():
    types = sorted(s.chain_lengths() for s in enumerate_shapes(4))
    assert types == [(1, 1, 1), (1, 2), (2, 1), (2, 1), (3,)]


def test_shape_labelings_cover_all_trees():
    for n in range(1, 7):
        from_shapes = set()
        for s in enumerate_shapes(n):
            for t in s.labelings():
                from_shapes.add(t)
        assert from_shapes == set(enumerate_trees(n))


def test_counts():
    for n, count in enumerate(SCHRODER, start=1):
        assert sum(1 for _ in enumerate_trees(n)) == count
    for n in range(1, 11):
        assert sum(1 for _ in enumerate_shapes(n)) == catalan(n - 1)


def test_orbit_weight_sum_matches_tree_count():
    for n in range(1, 11):
        total = sum(2**s.r for s in enumerate_shapes(n))
        if n <= 7:
            assert total == SCHRODER[n - 1]
    assert sum(2**s.r for s in enumerate_shapes(10)) == 206098


def test_text_serialization_roundtrip():
    for n in range(1, 7):
        for t in enumerate_trees(n):
            assert DiskTree.parse(t.to_text()) == t
            assert DiskTree.from_json(t.to_json()) == t


def test_empty_tree():
    t = DiskTree(None)
    assert t.size == 0 and t.n == 1
    assert t.to_text() == "_"
    assert DiskTree.parse("_") == t
    assert t.right_chains().r == 0
