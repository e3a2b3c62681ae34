"""Membership, enumeration, and parameter selection for the two-checksum code.

A word x of length n belongs to the code with parameters (n, a1, a2) iff

    sum_{i=1..n} x_i == a1 (mod 3)    and    sum_{i=1..n} i * x_i == a2 (mod n+1).

The 3(n+1) parameter classes partition {0,1}^n, so some class always has at
least 2^n / (3(n+1)) members; ``best_params`` picks the largest one.

Exhaustive scans encode words as integers with x_1 in the most significant
bit, so increasing integer order is exactly lexicographic bit order.  The
scans are numpy-vectorized and chunked to bound memory; results are
deterministic and identical to a sequential scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import CodeParams, Word

DEFAULT_ENUM_CAP = 28
_CHUNK_BITS = 20


@dataclass(frozen=True)
class Codebook:
    """All member words of one parameter class, lexicographically sorted."""

    params: CodeParams
    words: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.words)


def is_member(word: Word, params: CodeParams) -> bool:
    """Check both congruences in one O(n) pass."""
    if word.n != params.n:
        raise ValueError(f"word length {word.n} != code length {params.n}")
    bit_sum = 0
    weighted_sum = 0
    for i, b in enumerate(word.bits, start=1):
        bit_sum += b
        weighted_sum += i * b
    return bit_sum % 3 == params.a1 and weighted_sum % (params.n + 1) == params.a2


def _check_cap(n: int, cap: int | None) -> None:
    limit = DEFAULT_ENUM_CAP if cap is None else cap
    if n > limit:
        raise ValueError(
            f"exhaustive enumeration of 2^{n} words exceeds the cap n <= {limit}; "
            f"raise the cap explicitly to force it"
        )


def _chunk_checksums(start: int, stop: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Residues (bit sum mod 3, weighted sum mod n+1) for words start..stop-1."""
    values = np.arange(start, stop, dtype=np.uint64)
    bit_sum = np.zeros(values.shape, dtype=np.int64)
    weighted = np.zeros(values.shape, dtype=np.int64)
    for i in range(1, n + 1):
        bit = ((values >> np.uint64(n - i)) & np.uint64(1)).astype(np.int64)
        bit_sum += bit
        weighted += i * bit
    return bit_sum % 3, weighted % (n + 1)


def _chunks(n: int):
    total = 1 << n
    step = 1 << min(n, _CHUNK_BITS)
    for start in range(0, total, step):
        yield start, min(start + step, total)


def class_sizes(n: int, cap: int | None = None) -> np.ndarray:
    """Sizes of all 3(n+1) parameter classes, indexed [a1, a2]."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    _check_cap(n, cap)
    bins = 3 * (n + 1)
    counts = np.zeros(bins, dtype=np.int64)
    for start, stop in _chunks(n):
        s1, s2 = _chunk_checksums(start, stop, n)
        counts += np.bincount(s1 * (n + 1) + s2, minlength=bins)
    return counts.reshape(3, n + 1)


def _word_from_int(value: int, n: int) -> Word:
    return Word(tuple((value >> (n - i)) & 1 for i in range(1, n + 1)))


def enumerate_codebook(params: CodeParams, cap: int | None = None) -> Codebook:
    """Scan all 2^n words and collect the members of one class."""
    n = params.n
    _check_cap(n, cap)
    members: list[Word] = []
    for start, stop in _chunks(n):
        s1, s2 = _chunk_checksums(start, stop, n)
        hits = np.nonzero((s1 == params.a1) & (s2 == params.a2))[0]
        members.extend(_word_from_int(start + int(v), n) for v in hits)
    return Codebook(params, tuple(members))


def best_params(n: int, cap: int | None = None) -> CodeParams:
    """Parameters of the largest class; ties broken by smallest (a1, a2).

    By pigeonhole the winner has at least 2^n / (3(n+1)) members.
    """
    sizes = class_sizes(n, cap)
    best: CodeParams | None = None
    best_size = -1
    for a1 in range(3):
        for a2 in range(n + 1):
            size = int(sizes[a1, a2])
            if size > best_size:
                best = CodeParams(n, a1, a2)
                best_size = size
    assert best is not None
    return best


def redundancy(codebook: Codebook) -> float:
    """Overhead in bits relative to unrestricted n-bit words: n - log2(#codebook)."""
    size = len(codebook.words)
    if size == 0:
        raise ValueError("redundancy undefined for an empty codebook")
    return codebook.params.n - math.log2(size)


def render_codebook(codebook: Codebook) -> str:
    """Text form: one header line `n=<n> a1=<a1> a2=<a2>`, then one word per line."""
    p = codebook.params
    lines = [f"n={p.n} a1={p.a1} a2={p.a2}"]
    lines.extend(w.render() for w in codebook.words)
    return "\n".join(lines)
