"""Circular words (necklaces) and their exact Parikh data.

A circular word is the conjugacy class of a linear word under rotation.
It is stored canonically: the lexicographically least rotation (in the
alphabet's order), the class size, and the primitive root.

Two counting modes exist for a pattern v in a circular word [w]:

* direct_count -- sum, over the rotations of the *pattern*, of ordinary
  subword counts in one fixed representative of [w]; an integer.
* avg_count -- mean of the ordinary subword count of v over the members
  of [w]; an exact rational.

The circular Parikh matrix is the class average of the linear Parikh
matrices and is built from avg_count values.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .matrices import UnitriangularMatrix
from .words import Alphabet, _count, _parikh_rows, mirror


def cyclic_shift(word: str, i: int) -> str:
    """The i-th cyclic shift; i is reduced mod |word|, shift of λ is λ."""
    if not word:
        return word
    i %= len(word)
    return word[i:] + word[:i]


def conjugacy_class(word: str) -> list:
    """Distinct cyclic shifts, in shift order starting from `word` itself."""
    if not word:
        return [""]
    seen = set()
    members = []
    for i in range(len(word)):
        u = word[i:] + word[:i]
        if u not in seen:
            seen.add(u)
            members.append(u)
    return members


def primitive_root(word: str) -> str:
    """Shortest prefix v with word = v^k; the word itself when primitive."""
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word  # n == 0


def _least_rotation(seq) -> int:
    """Booth's algorithm: index at which the least rotation of seq starts."""
    n = len(seq)
    if n == 0:
        return 0
    doubled = seq + seq
    failure = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        item = doubled[j]
        i = failure[j - k - 1]
        while i != -1 and item != doubled[k + i + 1]:
            if item < doubled[k + i + 1]:
                k = j - i - 1
            i = failure[i]
        if item != doubled[k + i + 1]:
            if item < doubled[k]:
                k = j
            failure[j - k] = -1
        else:
            failure[j - k] = i + 1
    return k


@dataclass(frozen=True)
class CircularWord:
    """A conjugacy class, held by its canonical (least) rotation.

    `class_size` is the number of distinct rotations, which equals the
    length of the primitive root `period`; the empty circular word has
    class size 1.  Build instances with `canonicalize`.
    """

    alphabet: Alphabet
    canonical: str
    class_size: int
    period: str

    @property
    def length(self) -> int:
        return len(self.canonical)

    def __str__(self):
        return f"[{self.canonical}]"


def canonicalize(alphabet: Alphabet, word: str) -> CircularWord:
    """Canonical form of the circular word represented by `word`.

    Conjugate representatives map to the same CircularWord.
    """
    ranks = alphabet.ranks(word)
    if not word:
        return CircularWord(alphabet, "", 1, "")
    k = _least_rotation(ranks)
    canonical = word[k:] + word[:k]
    root = primitive_root(canonical)
    return CircularWord(alphabet, canonical, len(root), root)


def direct_count(cw: CircularWord, pattern: str) -> int:
    """Occurrences of the circular pattern [pattern] in a representative:
    the sum of |w|_u over the distinct rotations u of the pattern."""
    cw.alphabet.validate(pattern)
    w = cw.canonical
    return sum(_count(w, u) for u in conjugacy_class(pattern))


def avg_count(cw: CircularWord, pattern: str) -> Fraction:
    """Mean linear subword count of `pattern` over the conjugacy class.

    Computed as the mean over all |w| cyclic shifts of the canonical
    representative, which equals the class mean because each distinct
    conjugate occurs equally often among the shifts.
    """
    cw.alphabet.validate(pattern)
    w = cw.canonical
    n = len(w)
    if n == 0:
        return Fraction(_count("", pattern))
    doubled = w + w
    return Fraction(sum(_count(doubled[i : i + n], pattern) for i in range(n)), n)


def _circular_rows(alphabet: Alphabet, word: str):
    """Integer entry sums of the linear Parikh matrices over all cyclic
    shifts, plus the divisor |word| (1 for the empty word)."""
    n = len(word)
    d = alphabet.size + 1
    if n == 0:
        return [[1 if i == j else 0 for j in range(d)] for i in range(d)], 1
    doubled = word + word
    total = [[0] * d for _ in range(d)]
    for i in range(n):
        rows = _parikh_rows(alphabet, doubled[i : i + n])
        for r in range(d):
            trow = total[r]
            srow = rows[r]
            for c in range(r, d):
                trow[c] += srow[c]
    return total, n


def circular_parikh_matrix(cw: CircularWord) -> UnitriangularMatrix:
    """Class average of the linear Parikh matrices of the members of [w].

    Entry (i, j+1) equals avg_count of the ladder subword a_i ... a_j;
    entries are exact rationals.
    """
    rows, n = _circular_rows(cw.alphabet, cw.canonical)
    if n == 1:
        return UnitriangularMatrix(rows)
    return UnitriangularMatrix([[Fraction(e, n) for e in row] for row in rows])


def binary_closed_form(na: int, nb: int) -> UnitriangularMatrix:
    """The circular Parikh matrix of any binary circular word with letter
    counts (na, nb): top row (1, na, na*nb/2), middle row (0, 1, nb)."""
    if na < 0 or nb < 0:
        raise ValueError("letter counts must be non-negative")
    return UnitriangularMatrix(
        [[1, na, Fraction(na * nb, 2)], [0, 1, nb], [0, 0, 1]]
    )


def m_equivalent(cw1: CircularWord, cw2: CircularWord) -> bool:
    """Whether two circular words share the same circular Parikh matrix."""
    if cw1.alphabet != cw2.alphabet:
        raise ValueError(
            f"alphabet mismatch: {cw1.alphabet} vs {cw2.alphabet}"
        )
    return circular_parikh_matrix(cw1) == circular_parikh_matrix(cw2)


def mirror_class(cw: CircularWord) -> CircularWord:
    """The circular word of the reversed representative."""
    return canonicalize(cw.alphabet, mirror(cw.canonical))


def circular_inverse_alternate_check(cw: CircularWord) -> bool:
    """Check (alphabets of size <= 3 only) that the inverse of the circular
    Parikh matrix equals the alternate matrix of the mirrored class."""
    if cw.alphabet.size > 3:
        raise ValueError("holds only for alphabets of size at most 3")
    inv = circular_parikh_matrix(cw).inverse()
    alt = circular_parikh_matrix(mirror_class(cw)).alternate()
    return inv == alt


def circular_power_check(cw: CircularWord, p: int) -> bool:
    """Check (alphabets of size <= 3 only) that the matrix of [w^p] is the
    p-th power of the matrix of [w]."""
    if cw.alphabet.size > 3:
        raise ValueError("holds only for alphabets of size at most 3")
    if p < 1:
        raise ValueError("power must be a positive integer")
    powered = canonicalize(cw.alphabet, cw.canonical * p)
    return circular_parikh_matrix(powered) == circular_parikh_matrix(cw) ** p


def weak_ratio(alphabet: Alphabet, u: str, v: str) -> bool:
    """Binary weak ratio property: |u|_a |v|_b = |v|_a |u|_b."""
    if alphabet.size != 2:
        raise ValueError(f"requires a binary alphabet, got size {alphabet.size}")
    alphabet.validate(u)
    alphabet.validate(v)
    a, b = alphabet.symbols
    return u.count(a) * v.count(b) == v.count(a) * u.count(b)


def product_identity_check(cw: CircularWord) -> bool:
    """Check that the avg_count values of all s! full-alphabet permutation
    words sum to the product of the single-letter counts."""
    syms = cw.alphabet.symbols
    total = sum(avg_count(cw, "".join(p)) for p in itertools.permutations(syms))
    return total == math.prod(cw.canonical.count(s) for s in syms)


def slender_partition_check(cw: CircularWord) -> bool:
    """Check that direct_count over one representative per conjugacy class
    of the length-s slender words sums to the product of letter counts."""
    syms = cw.alphabet.symbols
    seen = set()
    reps = []
    for p in itertools.permutations(syms):
        u = "".join(p)
        canon = canonicalize(cw.alphabet, u).canonical
        if canon not in seen:
            seen.add(canon)
            reps.append(u)
    total = sum(direct_count(cw, rep) for rep in reps)
    return total == math.prod(cw.canonical.count(s) for s in syms)
