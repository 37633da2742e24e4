"""Seeded random generators for fuzzing every layer of the library.

All functions take an explicit random.Random so experiments and the
acceptance suite are reproducible.  Suits for a whole space come from a
random twin-splitting tree (always of size 2^d); suits and genomes for the
same polybox come from twin merge-and-resplit moves, which provably preserve
both the suit property and the union.
"""

from __future__ import annotations

import itertools
import random
import string
from typing import Optional

from .boxes import Box, BoxSpace
from .genomes import Alphabet, GenomeSet, Word
from .suits import PointSet, Suit, verify_suit


def random_space(
    rng: random.Random, max_d: int = 3, dim_choices: tuple[int, ...] = (2, 3, 4)
) -> BoxSpace:
    d = rng.randint(1, max_d)
    return BoxSpace(tuple(rng.choice(dim_choices) for _ in range(d)))


def random_proper_box(space: BoxSpace, rng: random.Random) -> Box:
    return Box(
        space,
        tuple(rng.randrange(1, space.full_mask(i)) for i in range(space.d)),
    )


def random_suit_for_space(space: BoxSpace, rng: random.Random) -> Suit:
    """A proper suit for the whole space via a random twin-splitting tree.

    Every branch splits each coordinate exactly once with a random proper
    subset, so the 2^d leaves are pairwise dichotomous and partition X.
    """

    def rec(factors: tuple[int, ...], remaining: tuple[int, ...]) -> list[Box]:
        if not remaining:
            return [Box(space, factors)]
        i = rng.choice(remaining)
        rest = tuple(c for c in remaining if c != i)
        t = rng.randrange(1, space.full_mask(i))
        left = list(factors)
        left[i] = t
        right = list(factors)
        right[i] = space.full_mask(i) ^ t
        return rec(tuple(left), rest) + rec(tuple(right), rest)

    boxes = rec(
        tuple(space.full_mask(i) for i in range(space.d)), tuple(range(space.d))
    )
    return verify_suit(boxes, require_proper=True)


def random_proper_suit(
    space: BoxSpace, rng: random.Random, max_size: Optional[int] = None
) -> Suit:
    """A random nonempty subset of a random suit for the space."""
    leaves = random_suit_for_space(space, rng).boxes
    cap = len(leaves) if max_size is None else min(max_size, len(leaves))
    k = rng.randint(1, cap)
    return verify_suit(rng.sample(leaves, k), require_proper=True)


def _twin_positions(boxes: list[Box]) -> list[tuple[int, int, int]]:
    out = []
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            space = boxes[i].space
            coord = None
            for c, (am, bm) in enumerate(zip(boxes[i].factors, boxes[j].factors)):
                if am == bm:
                    continue
                if am == space.complement(c, bm) and coord is None:
                    coord = c
                else:
                    coord = None
                    break
            if coord is not None:
                out.append((i, j, coord))
    return out


def mutate_suit(s: Suit, rng: random.Random, moves: int = 3) -> Suit:
    """Resplit random twin pairs on their own coordinate: union unchanged."""
    boxes = list(s.boxes)
    for _ in range(moves):
        twins = _twin_positions(boxes)
        if not twins:
            break
        i, j, c = rng.choice(twins)
        full = s.space.full_mask(c)
        t = rng.randrange(1, full)
        left = list(boxes[i].factors)
        left[c] = t
        right = list(boxes[j].factors)
        right[c] = full ^ t
        boxes[i] = Box(s.space, tuple(left))
        boxes[j] = Box(s.space, tuple(right))
    return verify_suit(boxes)


def distinct_suit_pair(
    space: BoxSpace, rng: random.Random, tries: int = 24
) -> Optional[tuple[Suit, Suit]]:
    """Two different proper suits of one polybox, or None when unlucky."""
    for _ in range(tries):
        first = random_proper_suit(space, rng)
        second = mutate_suit(first, rng, moves=4)
        if set(first.boxes) != set(second.boxes):
            return first, second
    return None


def random_pointset(
    space: BoxSpace, rng: random.Random, density: float = 0.5
) -> PointSet:
    members = frozenset(p for p in space.points() if rng.random() < density)
    return PointSet(space, members)


def letter_names(n_pairs: int) -> tuple[tuple[str, str], ...]:
    """Pairs a/a', b/b', ... falling back to s10/s10' past the alphabet."""
    names = []
    for k in range(n_pairs):
        base = string.ascii_lowercase[k] if k < 26 else f"s{k}"
        names.append((base, base + "'"))
    return tuple(names)


def random_alphabet(rng: random.Random, max_pairs: int = 4) -> Alphabet:
    return Alphabet(letter_names(rng.randint(1, max_pairs)))


def random_word(alphabet: Alphabet, d: int, rng: random.Random) -> Word:
    letters = alphabet.letters()
    return tuple(rng.choice(letters) for _ in range(d))


def random_genome(
    alphabet: Alphabet,
    d: int,
    rng: random.Random,
    size: Optional[int] = None,
    moves: int = 3,
) -> GenomeSet:
    """A genome sampled from a complement class and shuffled by twin moves."""
    base = random_word(alphabet, d, rng)
    cls = []
    for eps in itertools.product((0, 1), repeat=d):
        cls.append(
            tuple(
                alphabet.complement(s) if e else s for s, e in zip(base, eps)
            )
        )
    cap = len(cls) if size is None else min(size, len(cls))
    words = rng.sample(cls, cap)
    genome = GenomeSet(alphabet, d, tuple(words))
    return mutate_genome(genome, rng, moves)


def _twin_word_positions(
    alphabet: Alphabet, words: list[Word]
) -> list[tuple[int, int, int]]:
    out = []
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            coord = None
            for c, (a, b) in enumerate(zip(words[i], words[j])):
                if a == b:
                    continue
                if alphabet.complement(a) == b and coord is None:
                    coord = c
                else:
                    coord = None
                    break
            if coord is not None:
                out.append((i, j, coord))
    return out


def mutate_genome(g: GenomeSet, rng: random.Random, moves: int = 3) -> GenomeSet:
    """Substitute random twin word pairs with a fresh complementary pair."""
    words = list(g.words)
    letters = g.alphabet.letters()
    for _ in range(moves):
        twins = _twin_word_positions(g.alphabet, words)
        if not twins:
            break
        i, j, c = rng.choice(twins)
        t = rng.choice(letters)
        left = list(words[i])
        left[c] = t
        right = list(words[j])
        right[c] = g.alphabet.complement(t)
        words[i] = tuple(left)
        words[j] = tuple(right)
        if len(set(words)) < len(words):
            words[i] = tuple(g.words[i])
            words[j] = tuple(g.words[j])
    return GenomeSet(g.alphabet, g.d, tuple(words))


def distinct_genome_pair(
    alphabet: Alphabet, d: int, rng: random.Random, tries: int = 24
) -> Optional[tuple[GenomeSet, GenomeSet]]:
    """Two different genomes of one equivalence class, or None when unlucky."""
    for _ in range(tries):
        first = random_genome(alphabet, d, rng)
        second = mutate_genome(first, rng, moves=4)
        if set(first.words) != set(second.words):
            return first, second
    return None
