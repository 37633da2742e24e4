"""Independent little oracles shared by the test modules.

Everything here recomputes definitions from scratch (set algebra over
explicit member tuples, no bit tricks) so the library's fast paths are
checked against a second route, not against themselves.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from polybox import Box, BoxSpace, Suit
from polybox.boxes import members_of


def factor_sets(box: Box) -> list[set[int]]:
    return [set(members_of(m)) for m in box.factors]


def brute_dichotomous(a: Box, b: Box) -> bool:
    """Factor-by-factor complement test on explicit element sets."""
    out = False
    for i, (sa, sb) in enumerate(zip(factor_sets(a), factor_sets(b))):
        universe = set(range(a.space.dims[i]))
        if sa == universe - sb:
            out = True
    return out


def brute_points(box: Box) -> set[tuple[int, ...]]:
    pts = {()}
    for s in factor_sets(box):
        pts = {p + (x,) for p in pts for x in s}
    return pts


def suit_union_set(s: Suit) -> set[tuple[int, ...]]:
    out: set[tuple[int, ...]] = set()
    for b in s.boxes:
        out |= brute_points(b)
    return out


def brute_hat(space: BoxSpace, members: Iterable[tuple[int, ...]]) -> int:
    """Literal definition: count odd-size subset tuples with odd overlap."""
    member_set = set(members)

    def odd_subsets(n: int) -> list[frozenset[int]]:
        out = []
        for mask in range(1, 1 << n):
            if bin(mask).count("1") % 2 == 1:
                out.append(frozenset(i for i in range(n) if mask >> i & 1))
        return out

    tuples = [()]
    for n in space.dims:
        tuples = [t + (s,) for t in tuples for s in odd_subsets(n)]
    count = 0
    for t in tuples:
        overlap = sum(
            1 for p in member_set if all(x in s for x, s in zip(p, t))
        )
        count += overlap % 2
    return count


def brute_box_number(space: BoxSpace, members: Iterable[tuple[int, ...]]) -> Fraction:
    return Fraction(
        brute_hat(space, members), 2 ** (space.size_sum - 2 * space.d)
    )


def epsilon_weight(space: BoxSpace, a: Box, b: Box) -> Optional[int]:
    """Number of complemented coordinates between class members, else None."""
    weight = 0
    for i, (sa, sb) in enumerate(zip(factor_sets(a), factor_sets(b))):
        universe = set(range(space.dims[i]))
        if sa == sb:
            continue
        if sb == universe - sa:
            weight += 1
        else:
            return None
    return weight


def signed_class_sum(boxes: Sequence[Box], c: Box) -> int:
    """Sum of (-1)^|eps| over the members of c's complement class."""
    total = 0
    for b in boxes:
        w = epsilon_weight(c.space, c, b)
        if w is not None:
            total += (-1) ** w
    return total


def n_plus_minus(s: Suit, c: Box) -> tuple[int, int]:
    """Counts of suit members matching c's class on its support with even
    and odd complement pattern, recomputed from element sets."""
    support = c.support()
    n_plus = 0
    n_minus = 0
    for a in s.boxes:
        weight = 0
        ok = True
        for i in support:
            sa = set(members_of(a.factors[i]))
            sc = set(members_of(c.factors[i]))
            universe = set(range(s.space.dims[i]))
            if sa == sc:
                continue
            if sa == universe - sc:
                weight += 1
            else:
                ok = False
                break
        if not ok:
            continue
        if weight % 2 == 0:
            n_plus += 1
        else:
            n_minus += 1
    return n_plus, n_minus
