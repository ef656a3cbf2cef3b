import itertools
import json

import pytest

from pushall.bases import antichain_perm, many_sortings_perm
from pushall.enumeration import (
    ColoringSetProduct,
    NotIndecomposable,
    c_gr,
    c_rg,
    c_rooted,
    c_star,
    count_colorings,
    enumerate_colorings,
    enumerate_indecomposable,
    enumerate_indecomposable_naive,
    is_pushall_sortable,
    propagate_gr,
    propagate_rg,
)
from pushall.oracle import brute_colorings, brute_pushall
from pushall.permutations import delete, identity, minus_blocks

from conftest import perms_up_to


def minus_indecomposable_up_to(max_n, min_n=0):
    for p in perms_up_to(max_n, min_n=min_n):
        if len(minus_blocks(p)) == 1 or len(p) == 0:
            yield p


def colorings_with(p, constraints):
    """Brute-force valid colorings matching {position: color} (1-based)."""
    for coloring in brute_colorings(p):
        if all(coloring[pos - 1] == col for pos, col in constraints.items()):
            yield coloring


def ascents(p):
    return [
        (i + 1, j + 1)
        for i in range(len(p))
        for j in range(i + 1, len(p))
        if p[i] < p[j]
    ]


class TestPropagation:
    def test_tiny(self):
        assert propagate_rg((1, 2), (1, 2)) == ["R", "G"]
        assert propagate_gr((1, 2), (1, 2)) == ["G", "R"]

    def test_2413_example(self):
        got = propagate_rg((2, 4, 1, 3), (3, 4))
        assert got == ["R", "G", "R", "G"]
        assert "RGRG" in brute_colorings((2, 4, 1, 3))

    def test_gr_2413(self):
        got = propagate_gr((2, 4, 1, 3), (1, 2))
        assert got is not None
        assert got[0] == "G" and got[1] == "R"

    def test_not_an_ascent(self):
        with pytest.raises(ValueError):
            propagate_rg((2, 1), (1, 2))

    def test_determined_region_matches_brute_force(self):
        """Wherever the walk colors a point, every valid coloring with
        that ascent bicolored agrees; when the walk reports a conflict no
        such valid coloring exists.  Exhaustive over n <= 6."""
        conflicts = 0
        for p in minus_indecomposable_up_to(6, min_n=2):
            n = len(p)
            for i, j in ascents(p):
                for maker, ci, cj in (
                    (propagate_rg, "R", "G"),
                    (propagate_gr, "G", "R"),
                ):
                    partial = maker(p, (i, j))
                    matching = list(colorings_with(p, {i: ci, j: cj}))
                    if partial is None:
                        conflicts += 1
                        assert matching == [], (p, i, j)
                        continue
                    for full in matching:
                        for pos in range(n):
                            if partial[pos] is not None:
                                assert partial[pos] == full[pos], (p, i, j, full)
        assert conflicts > 0  # the conflict branch is actually exercised

    def test_propagation_covers_its_region(self):
        for p in minus_indecomposable_up_to(6, min_n=2):
            n = len(p)
            for i, j in ascents(p):
                partial = propagate_rg(p, (i, j))
                if partial is not None:
                    for pos in range(1, n + 1):
                        if pos < i or p[pos - 1] > p[j - 1]:
                            assert partial[pos - 1] is not None
                partial = propagate_gr(p, (i, j))
                if partial is not None:
                    for pos in range(1, n + 1):
                        if pos > j or p[pos - 1] < p[i - 1]:
                            assert partial[pos - 1] is not None


def extremal_rg(p, coloring):
    """Largest-i red-green ascent, ties by smallest green value."""
    best = None
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] < p[j] and coloring[i] == "R" and coloring[j] == "G":
                key = (-(i + 1), p[j])
                if best is None or key < best[0]:
                    best = (key, (i + 1, j + 1))
    return best and best[1]


def extremal_gr(p, coloring):
    """Largest green value green-red ascent, ties by smallest j."""
    best = None
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] < p[j] and coloring[i] == "G" and coloring[j] == "R":
                key = (-p[i], j + 1)
                if best is None or key < best[0]:
                    best = (key, (i + 1, j + 1))
    return best and best[1]


class TestShapes:
    def test_extremal_ascent_reproduces_coloring(self):
        """Every valid non-monochromatic coloring is rebuilt by the shape
        rooted at its extremal bicolored ascents (n <= 6)."""
        for p in minus_indecomposable_up_to(6, min_n=2):
            for coloring in brute_colorings(p):
                rg = extremal_rg(p, coloring)
                gr = extremal_gr(p, coloring)
                if rg is None and gr is None:
                    assert coloring in (len(p) * "R", len(p) * "G")
                    continue
                if rg is None:
                    built = c_gr(p, *gr)
                elif gr is None:
                    built = c_rg(p, *rg)
                else:
                    built = c_star(p, *rg, *gr)
                assert built is not None, (p, coloring)
                assert "".join(built) == coloring, (p, coloring, built)

    def test_c_star_no_match_is_uncolored(self):
        # two green-red-shaped ascents that fit none of the four layouts
        p = (1, 2, 3, 4)
        assert c_star(p, 1, 2, 3, 4) == [None] * 4

    def test_monochromatic_law(self):
        """A valid coloring of a skew-indecomposable permutation with no
        bicolored ascent is monochromatic (n <= 6)."""
        for p in minus_indecomposable_up_to(6, min_n=1):
            for coloring in brute_colorings(p):
                if extremal_rg(p, coloring) is None and extremal_gr(p, coloring) is None:
                    assert coloring in (len(p) * "R", len(p) * "G")

    def test_extremal_pair_two_definitions_agree(self):
        """Maximizing i then minimizing the green value picks the same
        red-green ascent as the other order (n <= 6)."""
        for p in minus_indecomposable_up_to(6, min_n=2):
            for coloring in brute_colorings(p):
                pairs = [
                    (i + 1, j + 1)
                    for i in range(len(p))
                    for j in range(i + 1, len(p))
                    if p[i] < p[j] and coloring[i] == "R" and coloring[j] == "G"
                ]
                if not pairs:
                    continue
                by_i = min(pairs, key=lambda ij: (-ij[0], p[ij[1] - 1]))
                by_val = min(pairs, key=lambda ij: (p[ij[1] - 1], -ij[0]))
                assert by_i == by_val, (p, coloring)


class TestRooted:
    def test_identity_examples(self):
        assert c_rooted((1, 2, 3), 1, 1) == "GRR"
        assert c_rooted((2, 1), 1, 1) is None

    def test_rooted_results_are_valid(self):
        for p in minus_indecomposable_up_to(6, min_n=1):
            valid = set(brute_colorings(p))
            for s in range(1, len(p) + 1):
                for m in range(1, 10):
                    got = c_rooted(p, s, m)
                    if got is not None:
                        assert got in valid, (p, s, m)


class TestEnumerate:
    def test_single_point(self):
        assert enumerate_indecomposable((1,)) == ["G", "R"]
        assert enumerate_indecomposable_naive((1,)) == ["G", "R"]

    def test_requires_indecomposable(self):
        with pytest.raises(NotIndecomposable):
            enumerate_indecomposable((3, 4, 1, 2))

    def test_2413_matches_brute(self):
        assert enumerate_indecomposable((2, 4, 1, 3)) == brute_colorings((2, 4, 1, 3))

    def test_plus_decomposable_but_minus_indecomposable_runs(self):
        got = enumerate_indecomposable_naive((2, 1, 3))
        assert got == brute_colorings((2, 1, 3))

    def test_antichain_member_has_no_colorings(self):
        assert enumerate_indecomposable((3, 5, 1, 6, 2, 4)) == []

    def test_many_sortings_family(self):
        for k in (3, 4, 5):
            p = many_sortings_perm(k)
            assert count_colorings(p) >= 2 * k - 3

    def test_naive_equals_optimal(self):
        for p in minus_indecomposable_up_to(6):
            assert enumerate_indecomposable(p) == enumerate_indecomposable_naive(p), p

    def test_cardinality_bound(self):
        for p in minus_indecomposable_up_to(7, min_n=1):
            assert len(enumerate_indecomposable(p)) <= 9 * len(p) + 2


class TestProduct:
    def test_decreasing(self):
        product = enumerate_colorings((3, 2, 1))
        assert [b for b, _ in product.blocks] == [(1,), (1,), (1,)]
        assert product.count == 8
        assert sorted(product.materialize()) == brute_colorings((3, 2, 1))

    def test_identity_five(self):
        product = enumerate_colorings(identity(5))
        assert len(product.blocks) == 1
        assert product.count == 10

    def test_b_plus_member(self):
        assert count_colorings((1, 3, 2, 4, 6, 5)) == 0
        assert not is_pushall_sortable((1, 3, 2, 4, 6, 5))

    def test_empty(self):
        product = enumerate_colorings(())
        assert product.count == 1 and list(product.materialize()) == [""]
        assert is_pushall_sortable(())

    def test_blockwise_is_cartesian_product(self):
        for p in perms_up_to(7):
            product = enumerate_colorings(p)
            sizes = [len(cols) for _, cols in product.blocks]
            total = 1
            for s in sizes:
                total *= s
            assert product.count == total
            assert sorted(product.materialize()) == brute_colorings(p), p

    def test_json_shape(self):
        data = enumerate_colorings((3, 2, 1)).to_json_dict()
        assert data["count"] == "8"
        assert json.loads(json.dumps(data)) == data
        assert data["blocks"][0] == {"perm": [1], "colorings": ["G", "R"]}


class TestDecide:
    def test_examples(self):
        assert is_pushall_sortable((2, 4, 3, 1))
        assert not is_pushall_sortable((1, 3, 2, 4, 6, 5))
        assert not is_pushall_sortable((3, 5, 1, 6, 2, 4))

    def test_identity_counts(self):
        for n in list(range(1, 13)) + [50]:
            assert count_colorings(identity(n)) == 2 * n

    def test_matches_brute(self):
        for p in perms_up_to(7):
            assert is_pushall_sortable(p) == brute_pushall(p), p
