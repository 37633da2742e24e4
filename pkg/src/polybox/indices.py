"""Additive evaluators, indices, binary codes, and dyadic labellings.

Every function here is a polybox invariant: summed over any proper suit of
the same polybox it gives the same value.  The index relative to a box c is
the signed count of suit members falling in c's complement class, and
comparing indices over one representative per class decides polybox
equality.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Hashable, Iterator, Optional, Sequence

from .boxes import Box, BoxSpace, complement_action, same_space
from .errors import (
    BudgetExceeded,
    EvenFactor,
    NotProper,
    SpaceMismatch,
)
from .suits import DEFAULT_BUDGET, Suit, require_enumerable, verify_suit

EpsilonVector = Sequence[int]


def phi(c: Box, a: Box) -> int:
    """Signed membership of a in c's complement class, in {-1, 0, 1}.

    Per factor: a full factor of c contributes 1; otherwise +1 when the
    factors agree, -1 when they are complementary, else the product is 0.
    """
    space = same_space(c, a)
    if not a.is_proper:
        raise ValueError("phi is defined on proper boxes only")
    sign = 1
    for i, (cm, am) in enumerate(zip(c.factors, a.factors)):
        if cm == space.full_mask(i):
            continue
        if am == cm:
            continue
        if am == space.complement(i, cm):
            sign = -sign
        else:
            return 0
    return sign


def eta(b: Box, a: Box) -> int:
    """Parity of |a meet b| for a box b with all factors of odd size."""
    same_space(b, a)
    for i, bm in enumerate(b.factors):
        if bm.bit_count() % 2 == 0:
            raise EvenFactor(f"factor {i} of b has even cardinality")
    parity = 1
    for bm, am in zip(b.factors, a.factors):
        parity *= (bm & am).bit_count() & 1
    return parity


def suit_index(s: Suit, c: Box) -> int:
    """Sum of phi(c, .) over the suit; for c = X this is just |s|."""
    return sum(phi(c, a) for a in s.boxes)


def index_representatives(
    space: BoxSpace, budget: int = DEFAULT_BUDGET
) -> Iterator[Box]:
    """One box per complement class: factors full or containing element 0.

    Complementing flips the index sign factor-wise, so comparing indices on
    these representatives compares them on every box.
    """
    require_enumerable(space, budget, "index representative enumeration")
    per_factor = []
    for i, n in enumerate(space.dims):
        full = space.full_mask(i)
        masks = [m for m in range(1, full) if m & 1]
        masks.append(full)
        per_factor.append(masks)
    for factors in itertools.product(*per_factor):
        yield Box(space, factors)


def polybox_equal_by_index(f: Suit, g: Suit, budget: int = DEFAULT_BUDGET) -> bool:
    """Polybox equality via index agreement on all class representatives."""
    if f.space != g.space:
        raise SpaceMismatch("suits live in different spaces")
    return all(
        suit_index(f, c) == suit_index(g, c)
        for c in index_representatives(f.space, budget)
    )


def apply_epsilon(s: Suit, eps: EpsilonVector) -> Suit:
    """The suit of images a^eps; defined for every suit of proper boxes."""
    images = []
    for a in s.boxes:
        img = complement_action(a, eps)
        if img is None:
            raise NotProper(len(images))
        images.append(img)
    return verify_suit(images)


@dataclass(frozen=True)
class BinaryCode:
    """Per-factor 0/1 labels with complementary subsets summing to 1."""

    space: BoxSpace
    bit_fns: tuple[Callable[[int], int], ...]

    def __post_init__(self):
        if len(self.bit_fns) != self.space.d:
            raise ValueError("one bit function per factor required")

    def codeword(self, a: Box) -> tuple[int, ...]:
        if a.space != self.space:
            raise SpaceMismatch("box outside the code's space")
        if not a.is_proper:
            raise ValueError("binary codes label proper boxes only")
        return tuple(fn(m) for fn, m in zip(self.bit_fns, a.factors))

    def validate(self, budget: int = DEFAULT_BUDGET) -> bool:
        """Exhaustively check the complement-sum invariant on every factor."""
        require_enumerable(self.space, budget, "binary code validation")
        for i, n in enumerate(self.space.dims):
            full = self.space.full_mask(i)
            fn = self.bit_fns[i]
            for m in range(1, full):
                if fn(m) + fn(full ^ m) != 1:
                    return False
        return True


def even_odd_code(space: BoxSpace) -> BinaryCode:
    """Codeword bit i is |A_i| mod 2; needs every factor of odd cardinality."""
    for i, n in enumerate(space.dims):
        if n % 2 == 0:
            raise EvenFactor(f"factor {i} has even cardinality")
    return BinaryCode(space, tuple(lambda m: m.bit_count() & 1 for _ in space.dims))


def more_less_code(space: BoxSpace) -> BinaryCode:
    """Codeword bit i is [|A_i| > n_i/2]; half-size subsets would break the
    complement-sum invariant, so even factors are rejected."""
    for i, n in enumerate(space.dims):
        if n % 2 == 0:
            raise EvenFactor(f"factor {i} has even cardinality")
    return BinaryCode(
        space,
        tuple((lambda n: lambda m: int(2 * m.bit_count() > n))(n) for n in space.dims),
    )


@dataclass(frozen=True)
class CodeProfile:
    """Codeword multiset of a suit plus its histogram by codeword weight."""

    codewords: tuple[tuple[int, ...], ...]
    weight_histogram: tuple[int, ...]

    def multiset(self) -> Counter:
        return Counter(self.codewords)


def binary_code_profile(s: Suit, code: BinaryCode) -> CodeProfile:
    words = sorted(code.codeword(a) for a in s.boxes)
    hist = [0] * (s.space.d + 1)
    for w in words:
        hist[sum(w)] += 1
    return CodeProfile(tuple(words), tuple(hist))


@dataclass(frozen=True)
class DyadicLabelling:
    """A total labelling of proper boxes with a declared target label set."""

    space: BoxSpace
    label_fn: Callable[[Box], Hashable]
    labels: frozenset

    def __call__(self, a: Box) -> Hashable:
        return self.label_fn(a)


def equicomplementary_labelling(
    space: BoxSpace, transversals: Optional[Sequence[set[int]]] = None
) -> DyadicLabelling:
    """Labelling induced by an equicomplementary product partition.

    transversals[i] holds one proper mask from each complementary pair of
    factor i (default: masks containing element 0); a box is labelled by the
    vector saying on which side each factor falls.
    """
    if transversals is None:
        chosen = [
            {m for m in range(1, space.full_mask(i)) if m & 1}
            for i in range(space.d)
        ]
    else:
        chosen = [set(t) for t in transversals]
        for i, t in enumerate(chosen):
            full = space.full_mask(i)
            for m in range(1, full):
                if (m in t) == (full ^ m in t):
                    raise ValueError(
                        f"transversal {i} must contain exactly one of each pair"
                    )

    def label(a: Box) -> tuple[int, ...]:
        return tuple(0 if m in chosen[i] else 1 for i, m in enumerate(a.factors))

    labels = frozenset(itertools.product((0, 1), repeat=space.d))
    return DyadicLabelling(space, label, labels)


def _all_proper_boxes(space: BoxSpace, budget: int) -> Iterator[Box]:
    count = 1
    for n in space.dims:
        count *= (1 << n) - 2
    if count > 1 << budget:
        raise BudgetExceeded(f"{count} proper boxes exceed budget 2^{budget}")
    per_factor = [range(1, space.full_mask(i)) for i in range(space.d)]
    for factors in itertools.product(*per_factor):
        yield Box(space, factors)


def verify_dyadic(l: DyadicLabelling, budget: int = DEFAULT_BUDGET) -> bool:
    """Check surjectivity and the twin-pair exchange identity exhaustively.

    Two twin pairs share a union exactly when that union is a box with one
    full coordinate, so the check walks those unions and compares the label
    pairs of all complementary splits of the full coordinate.
    """
    space = l.space
    seen = set()
    for a in _all_proper_boxes(space, budget):
        seen.add(l(a))
    if seen != set(l.labels):
        return False

    for i in range(space.d):
        full = space.full_mask(i)
        others = [range(1, space.full_mask(j)) for j in range(space.d) if j != i]
        for rest in itertools.product(*others):
            label_pair = None
            for m in range(1, full):
                if m > full ^ m:
                    continue
                fa = list(rest)
                fa.insert(i, m)
                fb = list(rest)
                fb.insert(i, full ^ m)
                pair = frozenset(
                    (l(Box(space, tuple(fa))), l(Box(space, tuple(fb))))
                )
                if label_pair is None:
                    label_pair = pair
                elif pair != label_pair:
                    return False
    return True
