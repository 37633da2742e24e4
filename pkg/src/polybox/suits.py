"""Suits, polyboxes, the odd-intersection fingerprint, and box numbers.

The fingerprint of G inside X collects every d-tuple of odd-size factor
subsets whose product meets G in odd cardinality.  Its cardinality divided
by 2^(|X|_1 - 2d) is the box number |G|_0: for a polybox it equals the size
of every minimal partition into proper boxes, and a partition is minimal
exactly when it is a suit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

from .boxes import Box, BoxSpace, is_dichotomous
from .errors import (
    BudgetExceeded,
    NotAPartition,
    NotDichotomous,
    NotProper,
    SpaceMismatch,
    TheoremViolation,
    UnionsOverlap,
)

DEFAULT_BUDGET = 24

Point = tuple[int, ...]


def require_enumerable(space: BoxSpace, budget: int, what: str = "enumeration"):
    if space.size_sum > budget:
        raise BudgetExceeded(
            f"{what} needs |X|_1 = {space.size_sum} <= budget {budget}"
        )


@dataclass(frozen=True)
class PointSet:
    """An arbitrary subset of the points of a box space."""

    space: BoxSpace
    members: frozenset[Point]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for p in self.members:
            if len(p) != self.space.d or any(
                not 0 <= x < n for x, n in zip(p, self.space.dims)
            ):
                raise ValueError(f"point {p} outside the space {self.space.dims}")

    @classmethod
    def full(cls, space: BoxSpace) -> "PointSet":
        return cls(space, frozenset(space.points()))

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Suit:
    """A collection of pairwise dichotomous boxes; validated on construction."""

    space: BoxSpace
    boxes: tuple[Box, ...]

    def __post_init__(self):
        boxes = tuple(self.boxes)
        object.__setattr__(self, "boxes", boxes)
        if not boxes:
            raise ValueError("a suit needs at least one box")
        for b in boxes:
            if b.space != self.space:
                raise SpaceMismatch("suit members live in different spaces")
        for i in range(len(boxes)):
            for j in range(i + 1, len(boxes)):
                if not is_dichotomous(boxes[i], boxes[j]):
                    raise NotDichotomous(i, j)

    @classmethod
    def of(cls, boxes: Sequence[Box]) -> "Suit":
        if not boxes:
            raise ValueError("a suit needs at least one box")
        return cls(boxes[0].space, tuple(boxes))

    @property
    def is_proper(self) -> bool:
        return all(b.is_proper for b in self.boxes)

    def __len__(self) -> int:
        return len(self.boxes)

    def __iter__(self) -> Iterator[Box]:
        return iter(self.boxes)


def verify_suit(boxes: Sequence[Box], require_proper: bool = False) -> Suit:
    """Validate a box list as a suit; optionally insist on proper members."""
    suit = Suit.of(list(boxes))
    if require_proper:
        for i, b in enumerate(suit.boxes):
            if not b.is_proper:
                raise NotProper(i)
    return suit


def union_points(s: Suit) -> PointSet:
    """Exact union of the suit's boxes; dichotomous boxes never overlap."""
    pts: set[Point] = set()
    total = 0
    for b in s.boxes:
        pts.update(b.points())
        total += b.size()
    if total != len(pts):
        raise TheoremViolation("suit members overlap as point sets")
    return PointSet(s.space, frozenset(pts))


def _hat_of_box(b: Box) -> int:
    """Product formula: per factor, count odd subsets meeting it oddly."""
    total = 1
    for i, n in enumerate(b.space.dims):
        bm = b.factors[i]
        count = 0
        for a in range(1, 1 << n):
            if (a.bit_count() & 1) and ((a & bm).bit_count() & 1):
                count += 1
        total *= count
    return total


def _hat_of_points(g: PointSet) -> int:
    """Raw parity counting over all tuples of odd-size factor subsets.

    Each point of g gets one bit; a factor subset becomes the bit mask of
    points it keeps, and a tuple contributes when the AND of its masks has
    odd popcount.  Subtrees with an empty partial AND are skipped whole.
    """
    pts = sorted(g.members)
    if not pts:
        return 0
    per_factor: list[list[int]] = []
    for i, n in enumerate(g.space.dims):
        if n > 20:
            raise BudgetExceeded(f"factor {i} too large for point-parity counting")
        elem = [0] * n
        for k, x in enumerate(pts):
            elem[x[i]] |= 1 << k
        table = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            table[mask] = table[mask ^ low] | elem[low.bit_length() - 1]
        per_factor.append(
            [table[mask] for mask in range(1, 1 << n) if mask.bit_count() & 1]
        )

    d = g.space.d
    count = 0

    def rec(i: int, acc: int):
        nonlocal count
        if i == d:
            count += acc.bit_count() & 1
            return
        for pm in per_factor[i]:
            nacc = acc & pm
            if nacc:
                rec(i + 1, nacc)

    rec(0, (1 << len(pts)) - 1)
    return count


def hat_cardinality(g: Union[PointSet, Box], budget: int = DEFAULT_BUDGET) -> int:
    """Size of the odd-intersection fingerprint of g."""
    require_enumerable(g.space, budget, "fingerprint enumeration")
    if isinstance(g, Box):
        return _hat_of_box(g)
    return _hat_of_points(g)


def box_number(g: Union[PointSet, Box], budget: int = DEFAULT_BUDGET) -> Fraction:
    """|G|_0, exact; integral for every polybox but not in general."""
    space = g.space
    return Fraction(hat_cardinality(g, budget), 1 << (space.size_sum - 2 * space.d))


def _proper_boxes_at(
    space: BoxSpace, remaining: frozenset[Point], anchor: Point
) -> Iterator[Box]:
    """Proper boxes inside `remaining` containing `anchor`, mask-lexicographic."""
    per_factor: list[list[int]] = []
    for i, n in enumerate(space.dims):
        full = space.full_mask(i)
        bit = 1 << anchor[i]
        per_factor.append(
            [m for m in range(1, full) if m & bit]
        )
    for masks in itertools.product(*per_factor):
        box = Box(space, masks)
        if all(p in remaining for p in box.points()):
            yield box


def _exact_partition_exists(
    space: BoxSpace, remaining: frozenset[Point], parts_left: int, max_box: int
) -> bool:
    if not remaining:
        return True
    if parts_left <= 0 or len(remaining) > parts_left * max_box:
        return False
    anchor = min(remaining)
    for box in _proper_boxes_at(space, remaining, anchor):
        rest = remaining.difference(box.points())
        if _exact_partition_exists(space, rest, parts_left - 1, max_box):
            return True
    return False


def find_proper_partition(
    g: PointSet, size: int, budget: int = DEFAULT_BUDGET
) -> Optional[list[Box]]:
    """A partition of g into at most `size` proper boxes, or None.

    Branches on the lexicographically least uncovered point so results are
    deterministic; the first factor with a non-full candidate mask splits
    first.  With size = |g|_0 this decides polybox-ness, because no proper
    partition can be smaller than |g|_0.
    """
    require_enumerable(g.space, budget, "partition search")
    max_box = 1
    for n in g.space.dims:
        max_box *= n - 1

    out: list[Box] = []

    def rec(remaining: frozenset[Point], left: int) -> bool:
        if not remaining:
            return left >= 0
        if left <= 0 or len(remaining) > left * max_box:
            return False
        anchor = min(remaining)
        for box in _proper_boxes_at(g.space, remaining, anchor):
            out.append(box)
            if rec(remaining.difference(box.points()), left - 1):
                return True
            out.pop()
        return False

    if rec(g.members, size):
        return out
    return None


def is_polybox(g: PointSet, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff g admits a partition into proper boxes of size |g|_0."""
    if not g.members:
        return False
    b0 = box_number(g, budget)
    if b0.denominator != 1 or b0 <= 0:
        return False
    return find_proper_partition(g, int(b0), budget) is not None


def proper_suit_for(g: PointSet, budget: int = DEFAULT_BUDGET) -> Optional[Suit]:
    """Some proper suit with union g, or None when g is not a polybox.

    A proper partition of minimal size |g|_0 is necessarily a suit, so the
    suit validation here can only fail on an internal bug.
    """
    if not g.members:
        return None
    b0 = box_number(g, budget)
    if b0.denominator != 1 or b0 <= 0:
        return None
    parts = find_proper_partition(g, int(b0), budget)
    if parts is None:
        return None
    return verify_suit(parts, require_proper=True)


def is_minimal_partition(
    parts: Sequence[Box], g: PointSet, budget: int = DEFAULT_BUDGET
) -> bool:
    """Decide minimality of a proper-box partition of g by two routes.

    The counting route compares the size with |g|_0; the structural route
    checks pairwise dichotomy.  The two must agree for partitions, so any
    disagreement is reported as an internal fault.
    """
    if not parts:
        raise NotAPartition("no parts given")
    covered: set[Point] = set()
    total = 0
    for k, b in enumerate(parts):
        if b.space != g.space:
            raise SpaceMismatch("partition member outside the point set's space")
        if not b.is_proper:
            raise NotAPartition(f"part {k} is not a proper box")
        covered.update(b.points())
        total += b.size()
    if total != len(covered) or covered != set(g.members):
        raise NotAPartition("parts do not partition the point set")

    by_count = len(parts) == box_number(g, budget)
    try:
        verify_suit(parts)
        by_suit = True
    except NotDichotomous:
        by_suit = False
    if by_count != by_suit:
        raise TheoremViolation(
            "minimality by box number disagrees with the suit criterion"
        )
    return by_count


def strongly_disjoint(f: Suit, g: Suit) -> bool:
    """True iff the two proper suits concatenate into one suit.

    The verdict only depends on the polyboxes, not on the particular suits
    chosen to represent them.
    """
    if f.space != g.space:
        raise SpaceMismatch("suits live in different spaces")
    for s in (f, g):
        for i, b in enumerate(s.boxes):
            if not b.is_proper:
                raise NotProper(i)
    fp = union_points(f)
    gp = union_points(g)
    if fp.members & gp.members:
        raise UnionsOverlap("the suit unions share points")
    return all(is_dichotomous(a, b) for a in f.boxes for b in g.boxes)
