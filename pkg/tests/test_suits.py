from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polybox import (
    Box,
    BoxSpace,
    PointSet,
    box_number,
    hat_cardinality,
    is_minimal_partition,
    is_polybox,
    proper_suit_for,
    simple_suit,
    strongly_disjoint,
    union_points,
    verify_suit,
)
from polybox.errors import (
    BudgetExceeded,
    NotAPartition,
    NotDichotomous,
    NotProper,
    UnionsOverlap,
)
from polybox.generate import random_proper_suit, random_suit_for_space

from conftest import spaces
from helpers import brute_hat


def bx(dims, *sets):
    return Box.from_sets(BoxSpace(tuple(dims)), [set(s) for s in sets])


S33 = BoxSpace((3, 3))
S3 = BoxSpace((3,))


class TestVerifySuit:
    def test_valid_proper_pair(self):
        suit = verify_suit([bx([3], {0}), bx([3], {1, 2})], require_proper=True)
        assert suit.is_proper and len(suit) == 2

    def test_simple_suit_is_valid(self):
        assert len(verify_suit(simple_suit(bx([3, 3], {0}, {1})))) == 4

    def test_rejects_non_dichotomous_pair(self):
        with pytest.raises(NotDichotomous) as err:
            verify_suit([bx([3, 3], {0}, {1}), bx([3, 3], {0}, {2})])
        assert (err.value.i, err.value.j) == (0, 1)

    def test_rejects_improper_member_when_required(self):
        boxes = simple_suit(bx([3, 3], {0}, {0, 1, 2}))
        verify_suit(boxes)
        with pytest.raises(NotProper):
            verify_suit(boxes, require_proper=True)

    def test_rejects_empty_list(self):
        with pytest.raises(ValueError):
            verify_suit([])


class TestUnionPoints:
    def test_one_dimensional_whole_space(self):
        suit = verify_suit([bx([3], {0}), bx([3], {1, 2})])
        assert union_points(suit).members == {(0,), (1,), (2,)}

    def test_simple_suit_covers_space(self):
        suit = verify_suit(simple_suit(bx([3, 3], {0}, {1})))
        assert union_points(suit).members == set(S33.points())

    def test_singleton(self):
        suit = verify_suit([bx([3, 3], {0}, {1})])
        assert union_points(suit).members == {(0, 1)}


class TestHatCardinality:
    def test_single_point(self):
        g = PointSet(S33, frozenset({(1, 2)}))
        assert hat_cardinality(g) == 2 ** (6 - 4) * 1

    def test_whole_space(self):
        assert hat_cardinality(PointSet.full(S33)) == 16

    def test_empty(self):
        assert hat_cardinality(PointSet(S33, frozenset())) == 0

    def test_budget(self):
        big = BoxSpace((20, 20))
        with pytest.raises(BudgetExceeded):
            hat_cardinality(PointSet(big, frozenset()), budget=24)

    @given(st.data())
    @settings(max_examples=40)
    def test_matches_literal_definition(self, data):
        space = data.draw(spaces(max_d=2, dims=(2, 3)))
        members = frozenset(
            p for p in space.points() if data.draw(st.booleans())
        )
        g = PointSet(space, members)
        assert hat_cardinality(g) == brute_hat(space, members)

    @given(st.data())
    @settings(max_examples=40)
    def test_box_route_matches_point_route(self, data):
        space = data.draw(spaces(max_d=2, dims=(2, 3, 4)))
        factors = tuple(
            data.draw(st.integers(min_value=1, max_value=space.full_mask(i)))
            for i in range(space.d)
        )
        box = Box(space, factors)
        as_points = PointSet(space, frozenset(box.points()))
        assert hat_cardinality(box) == hat_cardinality(as_points)


class TestBoxNumber:
    def test_proper_suit_union_counts_members(self, rng):
        for _ in range(10):
            suit = random_proper_suit(S33, rng)
            assert box_number(union_points(suit)) == len(suit)

    def test_whole_space(self):
        assert box_number(PointSet.full(S33)) == 4

    def test_single_point(self):
        g = PointSet(S33, frozenset({(0, 0)}))
        assert brute_hat(S33, g.members) == 4
        assert box_number(g) == Fraction(4, 4) == 1


class TestIsPolybox:
    def test_whole_space(self):
        assert is_polybox(PointSet.full(S33))

    def test_non_dichotomous_singleton_union_is_not(self):
        g = PointSet(S33, frozenset({(0, 0), (1, 1)}))
        assert not is_polybox(g)

    def test_any_suit_union_is(self, rng):
        for _ in range(10):
            suit = random_proper_suit(S33, rng)
            assert is_polybox(union_points(suit))

    @given(st.data())
    @settings(max_examples=30)
    def test_polybox_number_is_positive_integer(self, data):
        space = data.draw(spaces(max_d=2, dims=(2, 3)))
        members = frozenset(
            p for p in space.points() if data.draw(st.booleans())
        )
        g = PointSet(space, members)
        if is_polybox(g):
            b0 = box_number(g)
            assert b0.denominator == 1 and b0 > 0


class TestMinimalPartition:
    def test_two_part_partition_is_minimal(self):
        g = PointSet(S3, frozenset({(0,), (1,), (2,)}))
        assert is_minimal_partition([bx([3], {0}), bx([3], {1, 2})], g)

    def test_three_singletons_are_not_minimal(self):
        g = PointSet(S3, frozenset({(0,), (1,), (2,)}))
        parts = [bx([3], {0}), bx([3], {1}), bx([3], {2})]
        assert not is_minimal_partition(parts, g)

    def test_every_suit_is_minimal_for_its_union(self, rng):
        for _ in range(10):
            suit = random_proper_suit(S33, rng)
            assert is_minimal_partition(list(suit.boxes), union_points(suit))

    def test_rejects_non_partition(self):
        g = PointSet(S3, frozenset({(0,), (1,)}))
        with pytest.raises(NotAPartition):
            is_minimal_partition([bx([3], {0})], g)
        with pytest.raises(NotAPartition):
            is_minimal_partition([bx([3], {0, 1}), bx([3], {1})], g)


class TestStronglyDisjoint:
    def test_twin_singletons(self):
        f = verify_suit([bx([3, 3], {0}, {0})])
        g = verify_suit([bx([3, 3], {1, 2}, {0})])
        assert strongly_disjoint(f, g)

    def test_disjoint_but_not_dichotomous(self):
        f = verify_suit([bx([3, 3], {0}, {0})])
        g = verify_suit([bx([3, 3], {1}, {1})])
        assert not strongly_disjoint(f, g)

    def test_halves_of_a_simple_suit(self):
        boxes = simple_suit(bx([3, 3], {0}, {1}))
        f = verify_suit(boxes[:2])
        g = verify_suit(boxes[2:])
        assert verify_suit(boxes) is not None
        assert strongly_disjoint(f, g)

    def test_overlap_is_rejected(self):
        f = verify_suit([bx([3, 3], {0}, {0})])
        with pytest.raises(UnionsOverlap):
            strongly_disjoint(f, f)

    def test_representation_independent(self, rng):
        # the verdict must not depend on which suits represent the polyboxes
        for _ in range(20):
            boxes = random_suit_for_space(S33, rng).boxes
            k = rng.randint(1, 3)
            f = verify_suit(boxes[:k])
            g = verify_suit(boxes[k:])
            assert strongly_disjoint(f, g)
            from polybox.generate import mutate_suit

            f2 = mutate_suit(f, rng)
            g2 = mutate_suit(g, rng)
            assert strongly_disjoint(f2, g2)


class TestKrakow:
    def test_full_size_proper_suit_covers_space(self, rng):
        for _ in range(10):
            space = BoxSpace(tuple(rng.choice((2, 3)) for _ in range(rng.randint(1, 3))))
            suit = random_suit_for_space(space, rng)
            assert len(suit) == 1 << space.d
            assert union_points(suit).members == set(space.points())


class TestProperSuitFor:
    def test_roundtrip_union(self, rng):
        for _ in range(10):
            suit = random_proper_suit(S33, rng)
            g = union_points(suit)
            found = proper_suit_for(g)
            assert found is not None
            assert union_points(found).members == g.members

    def test_none_for_non_polybox(self):
        assert proper_suit_for(PointSet(S33, frozenset({(0, 0), (1, 1)}))) is None
