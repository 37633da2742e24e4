from __future__ import annotations

import pytest
from polybox import (
    Box,
    BoxSpace,
    canonical_form,
    is_twin_pair,
    polybox_equal_by_index,
    project_box,
    simple_suit,
    suits_equivalent,
    verify_suit,
)
from polybox.errors import SpaceMismatch
from polybox.generate import (
    distinct_suit_pair,
    random_proper_suit,
    random_space,
)
from polybox.oracle import points_equal


def bx(dims, *sets):
    return Box.from_sets(BoxSpace(tuple(dims)), [set(s) for s in sets])


S3 = BoxSpace((3,))
S33 = BoxSpace((3, 3))


class TestProjectBox:
    def test_subset_without_zero_becomes_difference(self):
        cf = project_box(bx([3], {1, 2}))
        assert cf.coeffs == {(0b111,): 1, (0b001,): -1}

    def test_basis_box_projects_to_itself(self):
        cf = project_box(bx([3], {0, 1}))
        assert cf.coeffs == {(0b011,): 1}

    def test_two_factor_distribution(self):
        # hand expansion: (X1 - {0}) x (X2 - {0,2})
        cf = project_box(bx([3, 3], {1, 2}, {1}))
        assert cf.coeffs == {
            (0b111, 0b111): 1,
            (0b111, 0b101): -1,
            (0b001, 0b111): -1,
            (0b001, 0b101): 1,
        }

    def test_rejects_improper_boxes(self):
        with pytest.raises(ValueError):
            project_box(bx([3], {0, 1, 2}))


class TestCanonicalForm:
    def test_twin_pair_cancels_to_full_factor(self):
        suit = verify_suit([bx([3], {0}), bx([3], {1, 2})])
        assert canonical_form(suit).coeffs == {(0b111,): 1}

    def test_every_suit_for_space_gives_the_space(self, rng):
        suit = verify_suit(simple_suit(bx([3, 3], {0}, {0})))
        assert canonical_form(suit).coeffs == {(0b111, 0b111): 1}
        for _ in range(10):
            from polybox.generate import random_suit_for_space

            suit = random_suit_for_space(S33, rng)
            assert canonical_form(suit).coeffs == {(0b111, 0b111): 1}

    def test_same_polybox_same_map(self, rng):
        for _ in range(10):
            pair = distinct_suit_pair(S33, rng)
            if pair is None:
                continue
            f, g = pair
            assert canonical_form(f) == canonical_form(g)

    def test_size_bound(self, rng):
        for _ in range(20):
            suit = random_proper_suit(S33, rng)
            cf = canonical_form(suit)
            assert len(cf.coeffs) <= len(suit) * (1 << S33.d)

    def test_sorted_items_are_sorted(self, rng):
        suit = random_proper_suit(S33, rng)
        items = canonical_form(suit).sorted_items()
        assert items == sorted(items)


class TestTwinKernel:
    def test_twin_pairs_with_equal_union_project_equally(self, rng):
        # all complementary splits of one unioned box give the same sum
        for _ in range(20):
            space = random_space(rng, max_d=2, dim_choices=(3, 4))
            i = rng.randrange(space.d)
            full = space.full_mask(i)
            rest = [
                rng.randrange(1, space.full_mask(j))
                for j in range(space.d)
                if j != i
            ]

            def pair_sum(split):
                fa = list(rest)
                fa.insert(i, split)
                fb = list(rest)
                fb.insert(i, full ^ split)
                a, b = Box(space, tuple(fa)), Box(space, tuple(fb))
                assert is_twin_pair(a, b)
                out: dict = {}
                for cf in (project_box(a), project_box(b)):
                    for k, v in cf.coeffs.items():
                        out[k] = out.get(k, 0) + v
                return {k: v for k, v in out.items() if v}

            splits = [m for m in range(1, full)]
            reference = pair_sum(splits[0])
            for split in splits[1:]:
                assert pair_sum(split) == reference


class TestSuitsEquivalent:
    def test_reflexive(self, rng):
        suit = random_proper_suit(S33, rng)
        assert suits_equivalent(suit, suit)

    def test_two_suits_for_space(self, rng):
        from polybox.generate import random_suit_for_space

        f = random_suit_for_space(S33, rng)
        g = random_suit_for_space(S33, rng)
        assert points_equal(f, g)
        assert suits_equivalent(f, g)

    def test_different_unions_differ(self, rng):
        for _ in range(20):
            f = random_proper_suit(S33, rng)
            g = random_proper_suit(S33, rng)
            assert suits_equivalent(f, g) == points_equal(f, g)

    def test_space_mismatch(self, rng):
        f = random_proper_suit(S33, rng)
        g = random_proper_suit(BoxSpace((3, 4)), rng)
        with pytest.raises(SpaceMismatch):
            suits_equivalent(f, g)


class TestAgreementWithIndexCriterion:
    def test_three_routes_agree_on_random_pairs(self, rng):
        for _ in range(50):
            space = random_space(rng, max_d=3, dim_choices=(2, 3, 4))
            f = random_proper_suit(space, rng, max_size=1 << space.d)
            g = random_proper_suit(space, rng, max_size=1 << space.d)
            canon = suits_equivalent(f, g)
            index = polybox_equal_by_index(f, g)
            oracle = points_equal(f, g)
            assert canon == index == oracle
