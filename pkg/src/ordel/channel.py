"""The corruption map: one deletion, then at most one erasure.

A pattern (d, e) with 1 <= d <= e <= n removes bit x_d (shifting the tail
left) and then erases what is now the e-th symbol of the shortened word,
i.e. the original bit x_{e+1}.  The boundary case e = n means the deletion
happened alone.  The deletion position is invisible to a receiver; the
erasure position is not.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import ReceivedWord, Word


@dataclass(frozen=True)
class CorruptionPattern:
    """Deletion position d and erasure parameter e, 1 <= d <= e."""

    d: int
    e: int

    def __post_init__(self) -> None:
        if not 1 <= self.d <= self.e:
            raise ValueError(f"pattern must satisfy 1 <= d <= e, got (d={self.d}, e={self.e})")


def corrupt(word: Word, pattern: CorruptionPattern) -> ReceivedWord:
    """Apply a deletion-erasure pattern to a word.

    Output symbols: y_i = x_i for i < d, y_i = x_{i+1} for d <= i <= n-1,
    and y_e erased when e <= n - 1.
    """
    n = word.n
    if pattern.e > n:
        raise ValueError(f"pattern (d={pattern.d}, e={pattern.e}) invalid for word length {n}")
    d, e = pattern.d, pattern.e
    shortened = word.bits[: d - 1] + word.bits[d:]
    if e == n:
        return ReceivedWord(shortened, None)
    return ReceivedWord(shortened[: e - 1] + (None,) + shortened[e:], e)


def all_patterns(n: int) -> list[CorruptionPattern]:
    """All n(n+1)/2 valid patterns for word length n, in (d, e) lexicographic order."""
    if n < 3:
        raise ValueError(f"word length must be >= 3, got {n}")
    return [CorruptionPattern(d, e) for d in range(1, n + 1) for e in range(d, n + 1)]


def random_pattern(n: int, seed: int) -> CorruptionPattern:
    """A uniformly random valid pattern, deterministic for a given seed.

    Uses Python's Mersenne Twister (`random.Random`) and rejection sampling:
    draw (d, e) uniformly on the full square and retry until d <= e, which
    leaves the accepted pair uniform over the n(n+1)/2 valid patterns.
    """
    if n < 3:
        raise ValueError(f"word length must be >= 3, got {n}")
    return draw_pattern(random.Random(seed), n)


def draw_pattern(rng: random.Random, n: int) -> CorruptionPattern:
    """Draw one uniform pattern from an existing generator (see random_pattern)."""
    while True:
        d = rng.randint(1, n)
        e = rng.randint(1, n)
        if d <= e:
            return CorruptionPattern(d, e)
