"""Redundancy bounds, run statistics, and the bounds table.

The constructive upper bound log2(3(n+1)) comes straight from the pigeonhole
class size; the converse lower bound log2(n - 1 - 2*sqrt((n-1) * log2 n))
holds for large n because any code correcting these corruptions also corrects
a lone deletion, and single-deletion balls of typical words are large (a
word's deletion ball has exactly one element per run).  All logarithms are
base two, including the one inside the square root.

Exhaustive run tallies share the integer word encoding of the enumeration
module (x_1 = most significant bit); adjacent-bit disagreements of word v are
the low n - 1 bits of v ^ (v >> 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Word
from .vt_code import DEFAULT_ENUM_CAP, _chunks

MIN_BOUND_ARGUMENT = 1.0


@dataclass(frozen=True)
class BoundsRow:
    """One table row; lower_bits/gap_bits are None below the bound's validity range."""

    n: int
    upper_bits: float
    lower_bits: float | None
    gap_bits: float | None


@dataclass(frozen=True)
class RunStats:
    """Exhaustive run-count statistics over all 2^n words."""

    n: int
    words: int
    total_runs: int
    mean_runs: float
    threshold: float
    high_run_count: int
    high_run_fraction: float


def redundancy_upper_bound(n: int) -> float:
    """log2(n+1) + log2(3): redundancy achieved by the best parameter class."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    return math.log2(n + 1) + math.log2(3)


def redundancy_lower_bound(n: int) -> float | None:
    """log2(n - 1 - 2*sqrt((n-1)*log2 n)) where defined, else None.

    The bound is asymptotic; below the point where the log argument exceeds 1
    it says nothing, and None is returned rather than an error.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    argument = n - 1 - 2.0 * math.sqrt((n - 1) * math.log2(n))
    if argument <= MIN_BOUND_ARGUMENT:
        return None
    return math.log2(argument)


def run_count(word: Word) -> int:
    """Number of maximal runs: 1 + #{i : x_i != x_{i+1}}."""
    bits = word.bits
    return 1 + sum(bits[i] != bits[i + 1] for i in range(len(bits) - 1))


def run_threshold(n: int) -> float:
    """(n-1)/2 - sqrt(2(n-1) * log2 n); words with at least this many runs are 'typical'.

    Negative for small n, in which case every word qualifies.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    return (n - 1) / 2.0 - math.sqrt(2.0 * (n - 1) * math.log2(n))


def run_stats(n: int, cap: int | None = None) -> RunStats:
    """Exact run-count tallies over all 2^n words (exhaustive, capped)."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    limit = DEFAULT_ENUM_CAP if cap is None else cap
    if n > limit:
        raise ValueError(
            f"exhaustive run statistics over 2^{n} words exceed the cap n <= {limit}"
        )
    threshold = run_threshold(n)
    mask = np.uint64((1 << (n - 1)) - 1)
    total_runs = 0
    high = 0
    for start, stop in _chunks(n):
        values = np.arange(start, stop, dtype=np.uint64)
        flips = (values ^ (values >> np.uint64(1))) & mask
        runs = np.ones(values.shape, dtype=np.int64)
        for j in range(n - 1):
            runs += ((flips >> np.uint64(j)) & np.uint64(1)).astype(np.int64)
        total_runs += int(runs.sum())
        high += int(np.count_nonzero(runs >= threshold))
    words = 1 << n
    return RunStats(
        n=n,
        words=words,
        total_runs=total_runs,
        mean_runs=total_runs / words,
        threshold=threshold,
        high_run_count=high,
        high_run_fraction=high / words,
    )


def high_run_fraction(n: int, cap: int | None = None) -> float:
    """Fraction of words whose run count meets the typicality threshold."""
    return run_stats(n, cap).high_run_fraction


def bounds_table(n_values: list[int]) -> list[BoundsRow]:
    """Upper/lower redundancy bounds and their gap for each requested n."""
    rows = []
    for n in n_values:
        upper = redundancy_upper_bound(n)
        lower = redundancy_lower_bound(n)
        gap = None if lower is None else upper - lower
        rows.append(BoundsRow(n, upper, lower, gap))
    return rows


def bounds_csv(rows: list[BoundsRow]) -> str:
    """CSV with header n,upper_bits,lower_bits,gap_bits; undefined fields empty."""

    def fmt(v: float | None) -> str:
        return "" if v is None else f"{v:.6f}"

    lines = ["n,upper_bits,lower_bits,gap_bits"]
    lines.extend(
        f"{r.n},{fmt(r.upper_bits)},{fmt(r.lower_bits)},{fmt(r.gap_bits)}" for r in rows
    )
    return "\n".join(lines)
