"""Brute-force verification, kept independent of the decoder.

Everything here works by exhaustively applying the corruption map and
comparing outputs; none of it touches checksums or any decoding logic, so
agreement between this module and the decoder is genuine evidence.
Pairwise sweeps are guarded by a step cap because their cost grows like
(#codebook)^2 * n^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import run_count
from .channel import CorruptionPattern, all_patterns, corrupt
from .core import ReceivedWord, Word
from .decoder import Recovered, decode
from .vt_code import Codebook

DEFAULT_STEP_CAP = 10**9


@dataclass(frozen=True)
class PreimageSet:
    """Codeword/pattern pairs consistent with one received word."""

    received: ReceivedWord
    candidates: frozenset[tuple[Word, CorruptionPattern]]

    @property
    def words(self) -> tuple[Word, ...]:
        """Distinct candidate codewords, sorted."""
        return tuple(sorted({w for w, _ in self.candidates}, key=lambda w: w.bits))


@dataclass(frozen=True)
class VerificationReport:
    """PASS/FAIL outcome of one exhaustive sweep."""

    check: str
    checked: int
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def render(self) -> str:
        if self.failure is not None:
            return self.failure
        return f"PASS checked={self.checked}"


def _guard_pairwise(codebook: Codebook, step_cap: int) -> None:
    n = codebook.params.n
    steps = len(codebook.words) ** 2 * n**2
    if steps > step_cap:
        raise ValueError(
            f"pairwise sweep needs ~{steps} steps, above the cap {step_cap}; "
            f"raise the cap explicitly to force it"
        )


def brute_force_decode(y: ReceivedWord, codebook: Codebook) -> PreimageSet:
    """Every (codeword, pattern) pair that corrupts to y.

    Only patterns whose erasure parameter matches y are tried: the erasure
    position is visible to a receiver, the deletion position is not.
    """
    e = y.effective_erasure
    pairs = set()
    for x in codebook.words:
        if x.n != y.n:
            continue
        for d in range(1, e + 1):
            pattern = CorruptionPattern(d, e)
            if corrupt(x, pattern) == y:
                pairs.add((x, pattern))
    return PreimageSet(y, frozenset(pairs))


def verify_code(codebook: Codebook, step_cap: int = DEFAULT_STEP_CAP) -> VerificationReport:
    """Check that no two codewords collide under any one corruption pattern.

    Scans patterns in (d, e) order and codewords in codebook order, so the
    reported violation is deterministic.
    """
    _guard_pairwise(codebook, step_cap)
    n = codebook.params.n
    checked = 0
    for pattern in all_patterns(n):
        seen: dict[tuple[int | None, ...], Word] = {}
        for x in codebook.words:
            y = corrupt(x, pattern)
            checked += 1
            other = seen.get(y.symbols)
            if other is not None:
                return VerificationReport(
                    "code-capability",
                    checked,
                    f"FAIL x1={other.render()} x2={x.render()} d={pattern.d} e={pattern.e}",
                )
            seen[y.symbols] = x
    return VerificationReport("code-capability", checked)


def verify_decoder(codebook: Codebook, step_cap: int = DEFAULT_STEP_CAP) -> VerificationReport:
    """Round-trip every codeword through every pattern and the decoder."""
    _guard_pairwise(codebook, step_cap)
    params = codebook.params
    checked = 0
    for x in codebook.words:
        for pattern in all_patterns(params.n):
            outcome = decode(corrupt(x, pattern), params)
            checked += 1
            if not (isinstance(outcome, Recovered) and outcome.word == x):
                got = (
                    outcome.word.render()
                    if isinstance(outcome, Recovered)
                    else outcome.reason.replace(" ", "-")
                )
                return VerificationReport(
                    "decoder-round-trip",
                    checked,
                    f"FAIL x1={x.render()} x2={got} d={pattern.d} e={pattern.e}",
                )
    return VerificationReport("decoder-round-trip", checked)


def deletion_balls_disjoint(
    codebook: Codebook, step_cap: int = DEFAULT_STEP_CAP
) -> VerificationReport:
    """Check single-deletion neighborhoods are pairwise disjoint across the codebook.

    Also checks each neighborhood's size equals the codeword's run count:
    deleting anywhere inside one run gives the same shortened word, so every
    run contributes exactly one neighbor.
    """
    _guard_pairwise(codebook, step_cap)
    n = codebook.params.n
    seen: dict[tuple[int | None, ...], tuple[Word, int]] = {}
    checked = 0
    for x in codebook.words:
        ball: dict[tuple[int | None, ...], int] = {}
        for d in range(1, n + 1):
            ball.setdefault(corrupt(x, CorruptionPattern(d, n)).symbols, d)
            checked += 1
        if len(ball) != run_count(x):
            return VerificationReport(
                "deletion-balls",
                checked,
                f"FAIL x1={x.render()} x2={x.render()} d=1 e={n} "
                f"ball={len(ball)} runs={run_count(x)}",
            )
        for symbols, d in ball.items():
            if symbols in seen:
                other, other_d = seen[symbols]
                return VerificationReport(
                    "deletion-balls",
                    checked,
                    f"FAIL x1={other.render()} x2={x.render()} d={other_d} e={n}",
                )
            seen[symbols] = (x, d)
    return VerificationReport("deletion-balls", checked)
