"""Canonical forms deciding polybox equality in |suit| * 2^d time.

Every proper box projects onto the basis of boxes whose factors are either
full or proper subsets containing element 0: a factor already of that shape
stays itself, any other factor A becomes X - (X \\ A).  Distributing the
product writes the box as at most 2^d signed basis boxes, and two proper
suits describe the same polybox exactly when their summed expansions agree
coefficient by coefficient.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from .boxes import Box, BoxSpace
from .errors import SpaceMismatch
from .suits import Suit

BasisKey = tuple[int, ...]


def in_basis(space: BoxSpace, i: int, mask: int) -> bool:
    """Basis factors are the full set or proper subsets containing 0."""
    return mask == space.full_mask(i) or bool(mask & 1)


@dataclass
class CanonicalForm:
    """Sparse integer combination of basis boxes, keyed by factor masks."""

    space: BoxSpace
    coeffs: dict[BasisKey, int]

    def __post_init__(self):
        for key, value in self.coeffs.items():
            if value == 0:
                raise ValueError("zero coefficients must not be stored")
            if len(key) != self.space.d or not all(
                0 < m <= self.space.full_mask(i) and in_basis(self.space, i, m)
                for i, m in enumerate(key)
            ):
                raise ValueError(f"{key} is not a basis box")

    def sorted_items(self) -> list[tuple[BasisKey, int]]:
        """Deterministic order: lexicographic by factor masks."""
        return sorted(self.coeffs.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.space == other.space and self.coeffs == other.coeffs


def project_box(a: Box) -> CanonicalForm:
    """Expand one proper box over the basis; at most 2^d signed terms."""
    if not a.is_proper:
        raise ValueError("only proper boxes are projected")
    space = a.space
    per_factor: list[list[tuple[int, int]]] = []
    for i, m in enumerate(a.factors):
        if m & 1:
            per_factor.append([(m, 1)])
        else:
            per_factor.append([(space.full_mask(i), 1), (space.complement(i, m), -1)])
    coeffs: dict[BasisKey, int] = defaultdict(int)
    for combo in itertools.product(*per_factor):
        key = tuple(t[0] for t in combo)
        sign = 1
        for t in combo:
            sign *= t[1]
        coeffs[key] += sign
    return CanonicalForm(space, {k: v for k, v in coeffs.items() if v})


def canonical_form(s: Suit) -> CanonicalForm:
    """Coefficient-wise sum of the member projections."""
    coeffs: dict[BasisKey, int] = defaultdict(int)
    for a in s.boxes:
        for key, value in project_box(a).coeffs.items():
            coeffs[key] += value
    return CanonicalForm(s.space, {k: v for k, v in coeffs.items() if v})


def suits_equivalent(f: Suit, g: Suit) -> bool:
    """True iff the suits define the same polybox."""
    if f.space != g.space:
        raise SpaceMismatch("suits live in different spaces")
    return canonical_form(f) == canonical_form(g)
