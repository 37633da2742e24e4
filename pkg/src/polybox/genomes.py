"""Word algebra over a complemented alphabet.

Words of length d over an alphabet with a fixed-point-free complementation
abstract proper boxes: two words are dichotomous when some position holds
complementary letters, and a genome (pairwise dichotomous word set) stands
for every proper suit realizing it.  Identifying each negative letter s with
* - s' embeds genomes into the free module over starred positive monomials,
where equality of expansions, equality of all word indices, and mutual
covering with equal cardinality all decide the same equivalence.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .errors import (
    CriteriaDisagree,
    GSumExceeds2d,
    Incomplete,
    InconsistentOrientation,
    NotDichotomous,
    NoWitness,
    NotUnique,
    SpaceMismatch,
)

STAR = "*"

Word = tuple[str, ...]


@dataclass(frozen=True)
class Alphabet:
    """Ordered letter pairs (s, s'); the first member of each pair is positive."""

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        pairs = tuple((str(a), str(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        seen = set()
        for a, b in pairs:
            for s in (a, b):
                if not s or s == STAR:
                    raise ValueError(f"invalid letter {s!r}")
                if s in seen:
                    raise ValueError(f"duplicate letter {s!r}")
                seen.add(s)
            if a == b:
                raise ValueError(f"complementation must not fix {a!r}")

    @cached_property
    def _lookup(self) -> dict[str, tuple[int, int]]:
        table: dict[str, tuple[int, int]] = {}
        for k, (a, b) in enumerate(self.pairs):
            table[a] = (k, 0)
            table[b] = (k, 1)
        return table

    def __contains__(self, letter: str) -> bool:
        return letter in self._lookup

    def letters(self) -> tuple[str, ...]:
        return tuple(s for pair in self.pairs for s in pair)

    def complement(self, letter: str) -> str:
        k, pol = self._lookup[letter]
        return self.pairs[k][1 - pol]

    def is_positive(self, letter: str) -> bool:
        return self._lookup[letter][1] == 0

    def positive(self, letter: str) -> str:
        """The positive representative of the letter's pair."""
        return self.pairs[self._lookup[letter][0]][0]

    def sort_key(self, letter: str) -> tuple[int, int]:
        return self._lookup[letter]

    def check_word(self, w: Sequence[str]) -> Word:
        word = tuple(w)
        for s in word:
            if s not in self._lookup:
                raise ValueError(f"letter {s!r} not in the alphabet")
        return word


def words_dichotomous(alphabet: Alphabet, v: Word, w: Word) -> bool:
    return any(alphabet.complement(a) == b for a, b in zip(v, w))


def epsilon_between(alphabet: Alphabet, v: Word, w: Word) -> Optional[tuple[int, ...]]:
    """Complement pattern turning v into w, or None when w is outside v's class."""
    eps = []
    for a, b in zip(v, w):
        if a == b:
            eps.append(0)
        elif alphabet.complement(a) == b:
            eps.append(1)
        else:
            return None
    return tuple(eps)


@dataclass(frozen=True)
class GenomeSet:
    """Pairwise dichotomous words of one length over one alphabet."""

    alphabet: Alphabet
    d: int
    words: tuple[Word, ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("word length must be at least 1")
        words = tuple(tuple(w) for w in self.words)
        object.__setattr__(self, "words", words)
        for w in words:
            if len(w) != self.d:
                raise ValueError(f"word {w} does not have length {self.d}")
            self.alphabet.check_word(w)
        for i in range(len(words)):
            for j in range(i + 1, len(words)):
                if not words_dichotomous(self.alphabet, words[i], words[j]):
                    raise NotDichotomous(i, j)

    def __len__(self) -> int:
        return len(self.words)

    def occurring_letters(self, position: int) -> list[str]:
        seen = sorted(
            {w[position] for w in self.words}, key=self.alphabet.sort_key
        )
        return seen


@dataclass
class WordCanonicalForm:
    """Sparse integer combination of monomials over starred positive letters."""

    d: int
    coeffs: dict[Word, int]

    def __post_init__(self):
        for key, value in self.coeffs.items():
            if value == 0:
                raise ValueError("zero coefficients must not be stored")
            if len(key) != self.d:
                raise ValueError(f"monomial {key} has wrong length")

    def sorted_items(self) -> list[tuple[Word, int]]:
        return sorted(self.coeffs.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordCanonicalForm):
            return NotImplemented
        return self.d == other.d and self.coeffs == other.coeffs


def word_expand(alphabet: Alphabet, v: Sequence[str]) -> WordCanonicalForm:
    """Expand a word by replacing each negative letter s with * - s'."""
    word = alphabet.check_word(v)
    per_pos: list[list[tuple[str, int]]] = []
    for s in word:
        if alphabet.is_positive(s):
            per_pos.append([(s, 1)])
        else:
            per_pos.append([(STAR, 1), (alphabet.complement(s), -1)])
    coeffs: dict[Word, int] = defaultdict(int)
    for combo in itertools.product(*per_pos):
        key = tuple(t[0] for t in combo)
        sign = 1
        for t in combo:
            sign *= t[1]
        coeffs[key] += sign
    return WordCanonicalForm(len(word), {k: c for k, c in coeffs.items() if c})


def genome_canonical(w: GenomeSet) -> WordCanonicalForm:
    coeffs: dict[Word, int] = defaultdict(int)
    for word in w.words:
        for key, value in word_expand(w.alphabet, word).coeffs.items():
            coeffs[key] += value
    return WordCanonicalForm(w.d, {k: c for k, c in coeffs.items() if c})


def word_index(w: GenomeSet, u: Sequence[str]) -> int:
    """Sum over members of the product of per-position (+1, -1, 0) scores.

    u ranges over words that may use the reserved star letter; a star
    position scores +1 against everything.
    """
    alphabet = w.alphabet
    u = tuple(u)
    if len(u) != w.d:
        raise ValueError("index word has wrong length")
    for s in u:
        if s != STAR and s not in alphabet:
            raise ValueError(f"letter {s!r} not in the alphabet")
    total = 0
    for member in w.words:
        term = 1
        for s, t in zip(u, member):
            if s == STAR or s == t:
                continue
            if alphabet.complement(s) == t:
                term = -term
            else:
                term = 0
                break
        total += term
    return total


class CoverResult(NamedTuple):
    covered: bool
    gap: int
    g_sum: int

    def __bool__(self) -> bool:
        return self.covered


def covers(v: Sequence[str], w: GenomeSet) -> CoverResult:
    """Decide v <= W by the overlap sum: covered exactly when it reaches 2^d.

    The per-member overlap g doubles for every agreeing position, vanishes
    on a complementary one, and ignores unrelated letters; for a genuine
    genome the sum can never exceed 2^d.
    """
    alphabet = w.alphabet
    v = alphabet.check_word(v)
    if len(v) != w.d:
        raise ValueError("word has wrong length")
    total = 0
    for member in w.words:
        g = 1
        for s, t in zip(v, member):
            if s == t:
                g *= 2
            elif alphabet.complement(s) == t:
                g = 0
                break
        total += g
    bound = 1 << w.d
    if total > bound:
        raise GSumExceeds2d(f"overlap sum {total} exceeds {bound}")
    return CoverResult(total == bound, bound - total, total)


def _index_word_universe(v: GenomeSet, w: GenomeSet) -> Iterable[Word]:
    """Starred positive index words restricted to letters occurring per position."""
    alphabet = v.alphabet
    per_pos = []
    for i in range(v.d):
        reps = {
            alphabet.positive(word[i]) for word in v.words + w.words
        }
        per_pos.append([STAR] + sorted(reps, key=alphabet.sort_key))
    return itertools.product(*per_pos)


def _check_comparable(v: GenomeSet, w: GenomeSet):
    if v.alphabet != w.alphabet:
        raise SpaceMismatch("genomes use different alphabets")
    if v.d != w.d:
        raise SpaceMismatch("genomes have different word lengths")


def equivalent_by_canon(v: GenomeSet, w: GenomeSet) -> bool:
    _check_comparable(v, w)
    return genome_canonical(v) == genome_canonical(w)


def equivalent_by_index(v: GenomeSet, w: GenomeSet) -> bool:
    _check_comparable(v, w)
    return all(
        word_index(v, u) == word_index(w, u) for u in _index_word_universe(v, w)
    )


def equivalent_by_cover(v: GenomeSet, w: GenomeSet) -> bool:
    _check_comparable(v, w)
    return (
        len(v) == len(w)
        and all(covers(x, w).covered for x in v.words)
        and all(covers(x, v).covered for x in w.words)
    )


def genomes_equivalent(v: GenomeSet, w: GenomeSet) -> bool:
    """Equivalence by three independent routes, which must agree.

    (a) equal canonical expansions; (b) equal indices over the restricted
    starred words; (c) mutual covering with equal cardinality.
    """
    by_canon = equivalent_by_canon(v, w)
    by_index = equivalent_by_index(v, w)
    by_cover = equivalent_by_cover(v, w)
    if not (by_canon == by_index == by_cover):
        raise CriteriaDisagree(
            f"canon={by_canon} index={by_index} cover={by_cover}"
        )
    return by_canon


def class_members_in(w: GenomeSet, u: Word) -> list[Word]:
    """Members of w lying in u's complement class."""
    return [
        x for x in w.words if epsilon_between(w.alphabet, u, x) is not None
    ]


def rigidity_witness(w: GenomeSet, v: Sequence[str]) -> Word:
    """A member u of w with |index(w, u)| < |class(u) meet w|.

    Exists whenever a word outside w is covered by w; failing to find one
    contradicts the uniqueness theorem, hence the dedicated error.
    """
    v = w.alphabet.check_word(v)
    if v in w.words:
        raise ValueError("the covered word must lie outside the genome")
    if not covers(v, w).covered:
        raise ValueError("witness search requires a covered word")
    for u in w.words:
        if abs(word_index(w, u)) < len(class_members_in(w, u)):
            return u
    raise NoWitness("no member violates the index bound")


def induced_decomposition(
    w: GenomeSet, orientation: Mapping[Word, int]
) -> tuple[GenomeSet, GenomeSet]:
    """Split w by per-word signs that must be constant on parity classes.

    Words in one complement class carry the same sign exactly when their
    complement pattern has even weight; any assignment breaking that rule is
    rejected.
    """
    signs = []
    for word in w.words:
        sign = orientation.get(word)
        if sign not in (1, -1):
            raise InconsistentOrientation(f"no sign for {word}")
        signs.append(sign)
    for i in range(len(w.words)):
        for j in range(i + 1, len(w.words)):
            eps = epsilon_between(w.alphabet, w.words[i], w.words[j])
            if eps is None:
                continue
            expected = signs[i] * (-1) ** sum(eps)
            if signs[j] != expected:
                raise InconsistentOrientation(
                    f"{w.words[i]} and {w.words[j]} break the parity rule"
                )
    plus = tuple(x for x, s in zip(w.words, signs) if s == 1)
    minus = tuple(x for x, s in zip(w.words, signs) if s == -1)
    return (
        GenomeSet(w.alphabet, w.d, plus),
        GenomeSet(w.alphabet, w.d, minus),
    )


def reconstruct_minus(
    w_plus: GenomeSet,
    expected_size: int,
    universe: Optional[Alphabet] = None,
) -> GenomeSet:
    """Recover the minus half of a full genome from its plus half.

    Searches all words over the universe, restricted per position to letters
    occurring there in the fragment and their complements, and keeps those
    dichotomous to every fragment member; for a genuine plus half of a
    2^d-element genome the survivors are exactly the missing words.  The
    restriction to occurring letters is a completeness assumption; it is
    exact for cube-tiling genomes.
    """
    d = w_plus.d
    if expected_size != 1 << d:
        raise ValueError("reconstruction is supported for genomes of size 2^d only")
    if len(w_plus) > expected_size:
        raise ValueError("fragment larger than the expected genome")
    alphabet = universe if universe is not None else w_plus.alphabet
    for word in w_plus.words:
        alphabet.check_word(word)

    members = list(w_plus.words)
    m = len(members)
    full_hit = (1 << m) - 1

    cand: list[list[tuple[str, int]]] = []
    for i in range(d):
        letters: set[str] = set()
        for word in members:
            letters.add(word[i])
            letters.add(alphabet.complement(word[i]))
        entries = []
        for s in sorted(letters, key=alphabet.sort_key):
            hit = 0
            comp = alphabet.complement(s)
            for k, word in enumerate(members):
                if word[i] == comp:
                    hit |= 1 << k
            entries.append((s, hit))
        cand.append(entries)

    suffix_or = [0] * (d + 1)
    for i in range(d - 1, -1, -1):
        pos_or = 0
        for _, hit in cand[i]:
            pos_or |= hit
        suffix_or[i] = suffix_or[i + 1] | pos_or

    found: list[Word] = []
    prefix: list[str] = []

    def rec(i: int, mask: int):
        if mask | suffix_or[i] != full_hit:
            return
        if i == d:
            if mask == full_hit:
                found.append(tuple(prefix))
            return
        for letter, hit in cand[i]:
            prefix.append(letter)
            rec(i + 1, mask | hit)
            prefix.pop()

    rec(0, 0)

    missing = expected_size - m
    if len(found) < missing:
        raise Incomplete(f"found {len(found)} of {missing} missing words")
    if len(found) > missing:
        raise NotUnique(f"found {len(found)} candidates for {missing} slots")
    try:
        GenomeSet(alphabet, d, tuple(members) + tuple(found))
    except NotDichotomous as exc:
        raise NotUnique("candidates do not extend the fragment to one genome") from exc
    found.sort(key=lambda word: tuple(alphabet.sort_key(s) for s in word))
    return GenomeSet(alphabet, d, tuple(found))
