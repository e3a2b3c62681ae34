"""Seeded Monte Carlo round trips through the channel and decoder.

One trial draws a codeword, corrupts it with a uniform random pattern,
decodes, and compares.  Two ways to draw the codeword:

* default: draw a uniform word and adopt the parameter class it already
  belongs to (a1 = bit sum mod 3, a2 = weighted sum mod n+1) — every word is
  a member of exactly one class, so this samples (class, member) pairs
  without any rejection and scales to large n;
* fixed class: with a1/a2 given, rejection-sample uniform words until one
  satisfies both congruences.  Acceptance is roughly 1/(3(n+1)), so this is
  for small n.

All randomness comes from one `random.Random(seed)` in a fixed draw order,
so reports are reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .channel import corrupt, draw_pattern
from .core import CodeParams, Word
from .decoder import Recovered, decode


@dataclass(frozen=True)
class TrialReport:
    n: int
    trials: int
    seed: int
    mode: str
    failures: int
    first_failure: str | None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def render(self) -> str:
        line = f"n={self.n} trials={self.trials} seed={self.seed} mode={self.mode} failures={self.failures}"
        if self.first_failure is not None:
            line += f"\nfirst_failure: {self.first_failure}"
        return line


def _draw_word(rng: random.Random, n: int, weights: np.ndarray) -> tuple[tuple[int, ...], int, int]:
    """Uniform word plus its class (bit sum mod 3, weighted sum mod n+1)."""
    text = format(rng.getrandbits(n), f"0{n}b")
    arr = np.frombuffer(text.encode(), dtype=np.uint8) - ord("0")
    s1 = int(arr.sum()) % 3
    s2 = int(weights @ arr) % (n + 1)
    return tuple(arr.tolist()), s1, s2


def run_trials(
    n: int,
    trials: int,
    seed: int,
    a1: int | None = None,
    a2: int | None = None,
) -> TrialReport:
    """Round-trip `trials` random corruptions at length n; count decode failures."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if (a1 is None) != (a2 is None):
        raise ValueError("a1 and a2 must be given together")
    fixed = a1 is not None
    if fixed:
        params = CodeParams(n, a1, a2)
        mode = f"rejection(a1={a1},a2={a2})"
    else:
        mode = "per-word-class"
    rng = random.Random(seed)
    weights = np.arange(1, n + 1, dtype=np.int64)
    failures = 0
    first_failure: str | None = None
    # rejection accepts ~1/(3(n+1)) of draws; far beyond that, the class is
    # empty (possible for small n) and the sampler would spin forever
    attempt_limit = 300 * (n + 1)
    for _ in range(trials):
        if fixed:
            for _ in range(attempt_limit):
                bits, s1, s2 = _draw_word(rng, n, weights)
                if s1 == a1 and s2 == a2:
                    break
            else:
                raise ValueError(
                    f"no member of class (a1={a1}, a2={a2}) found in "
                    f"{attempt_limit} draws; the class is empty or near-empty"
                )
        else:
            bits, s1, s2 = _draw_word(rng, n, weights)
            params = CodeParams(n, s1, s2)
        word = Word(bits)
        pattern = draw_pattern(rng, n)
        outcome = decode(corrupt(word, pattern), params)
        if not (isinstance(outcome, Recovered) and outcome.word == word):
            failures += 1
            if first_failure is None:
                got = outcome.word.render() if isinstance(outcome, Recovered) else outcome.reason
                first_failure = (
                    f"x={word.render()} d={pattern.d} e={pattern.e} "
                    f"a1={params.a1} a2={params.a2} got={got}"
                )
    return TrialReport(n, trials, seed, mode, failures, first_failure)
