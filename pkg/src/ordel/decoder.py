"""Decoder for one deletion followed by at most one erasure.

The receiver sees y of length n - 1 and the erasure position e (e = n when
nothing was erased).  Recovery works in two steps:

1. The mod-3 discrepancy D = (a1 - sum of known symbols) mod 3 equals
   x_d + x_{e+1}, the sum of the two missing bits, so it pins their values:
   D = 0 means both were 0, D = 2 means both were 1, and D = 1 leaves two
   candidate assignments, (1, 0) and (0, 1), tried in that order.
   With no erasure the deleted bit is simply D (and D = 2 is impossible).

2. For a candidate insertion point k (1 <= k <= e) and hypothesized bits,
   ``hypothesis_checksum`` computes the weighted sum i * z_i of the word z
   built by inserting the deleted-bit guess before y_k and restoring the
   erased bit.  Scanning k upward, the first k where that sum matches a2
   mod (n + 1) identifies the run that lost a bit; if the word really is a
   member corrupted by a valid pattern, the synchronizing k always lies in
   the run containing the true deletion position, so rebuilding at k yields
   the transmitted word exactly.  A wrong bit assignment under D = 1 never
   synchronizes, which is what makes the second pass sound.

Consecutive checksums differ only by the guessed bit and one received
symbol, so each pass costs O(n) integer ops (``checksum_step``).  Checksums
peak near n^2 and are reduced only at comparison time; exact machine
integers therefore suffice up to n around 3 * 10^9.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import mul

from .core import CodeParams, ReceivedWord, Word, mod_reduce

NO_SYNC = "no synchronization"
INVALID_DISCREPANCY = "invalid discrepancy"


@dataclass(frozen=True)
class BitHypothesis:
    """Candidate values for the deleted bit and the erased bit."""

    deleted: int
    erased: int

    def __post_init__(self) -> None:
        if self.deleted not in (0, 1) or self.erased not in (0, 1):
            raise ValueError("hypothesis bits must be 0 or 1")


@dataclass(frozen=True)
class Recovered:
    """Successful decode: the word, where the bit was re-inserted, which pass found it."""

    word: Word
    insertion_index: int
    sync_pass: int


@dataclass(frozen=True)
class DecodeFailure:
    reason: str


DecodeOutcome = Recovered | DecodeFailure


def discrepancy(y: ReceivedWord, params: CodeParams) -> int:
    """(a1 - sum of non-erased symbols) mod 3; reveals the missing bits' sum."""
    e = y.erasure_pos
    if e is None:
        total = sum(y.symbols)
    else:
        total = sum(y.symbols[: e - 1]) + sum(y.symbols[e:])
    return mod_reduce(params.a1 - total, 3)


def hypothesis_checksum(y: ReceivedWord, k: int, hyp: BitHypothesis, params: CodeParams) -> int:
    """Weighted checksum of the reconstruction that inserts before position k.

    Exact integer value of

        sum_{i<k} i*y_i + k*deleted + sum_{i>=k, i != e} (i+1)*y_i + (e+1)*erased

    with erased symbols contributing nothing.  The caller reduces mod n + 1.
    For a deletion-only word e = n, and the final term must use erased = 0.
    """
    e = y.effective_erasure
    if not 1 <= k <= e:
        raise ValueError(f"insertion index {k} outside 1..{e}")
    n = y.n
    sym = y.symbols
    # symbols before the insertion point keep weight i, later ones weigh i+1;
    # slicing around the erased slot keeps None out of the products
    total = k * hyp.deleted + (e + 1) * hyp.erased
    total += sum(map(mul, range(1, k), sym[: k - 1]))
    if e == n:
        total += sum(map(mul, range(k + 1, n + 1), sym[k - 1 :]))
    else:
        total += sum(map(mul, range(k + 1, e + 1), sym[k - 1 : e - 1]))
        total += sum(map(mul, range(e + 2, n + 1), sym[e:]))
    return total


def checksum_step(fk: int, k: int, y_k: int | None, hyp: BitHypothesis) -> int:
    """Advance the checksum from insertion point k to k + 1 in O(1).

    Moving the insertion point past y_k drops one unit of its weight and adds
    one unit of the guessed bit; an erased y_k contributes nothing.
    """
    if y_k is None:
        return fk + hyp.deleted
    return fk + hyp.deleted - y_k


def _scan_sync(y: ReceivedWord, hyp: BitHypothesis, params: CodeParams, e: int) -> int | None:
    """Smallest k in 1..e whose checksum matches a2 mod n+1, or None."""
    modulus = params.n + 1
    target = mod_reduce(params.a2, modulus)
    symbols = y.symbols
    deleted = hyp.deleted
    fk = hypothesis_checksum(y, 1, hyp, params)
    k = 1
    while True:
        if fk % modulus == target:
            return k
        if k == e:
            return None
        s = symbols[k - 1]
        fk += deleted if s is None else deleted - s
        k += 1


def _rebuild(y: ReceivedWord, k: int, hyp: BitHypothesis) -> Word:
    """Insert the deleted-bit guess before y_k and fill the erasure."""
    s = y.symbols
    e = y.erasure_pos
    if e is None:
        return Word(s[: k - 1] + (hyp.deleted,) + s[k - 1 :])
    return Word(s[: k - 1] + (hyp.deleted,) + s[k - 1 : e - 1] + (hyp.erased,) + s[e:])


def decode(y: ReceivedWord, params: CodeParams) -> DecodeOutcome:
    """Recover the transmitted codeword from a deletion-erasure corrupted word.

    Guaranteed to return the transmitted word whenever y was produced by
    corrupting a member of the (n, a1, a2) class with a valid pattern.  On
    other inputs it returns either some member word or a failure, never an
    exception: "no synchronization" when no insertion point matches, and
    "invalid discrepancy" for a deletion-only word whose discrepancy is 2
    (one missing bit cannot change the bit sum by two).
    """
    if y.n != params.n:
        raise ValueError(f"received word implies n={y.n}, code has n={params.n}")
    e = y.effective_erasure
    disc = discrepancy(y, params)
    if y.erasure_pos is None:
        if disc == 2:
            return DecodeFailure(INVALID_DISCREPANCY)
        attempts = (BitHypothesis(disc, 0),)
    elif disc == 0:
        attempts = (BitHypothesis(0, 0),)
    elif disc == 2:
        attempts = (BitHypothesis(1, 1),)
    else:
        attempts = (BitHypothesis(1, 0), BitHypothesis(0, 1))
    for pass_no, hyp in enumerate(attempts, start=1):
        k = _scan_sync(y, hyp, params, e)
        if k is not None:
            return Recovered(_rebuild(y, k, hyp), k, pass_no)
    return DecodeFailure(NO_SYNC)
