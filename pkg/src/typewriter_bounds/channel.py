"""Monte Carlo lab for the 5-ary typewriter channel at crossover 1/2.

Each symbol is received either unchanged or shifted up by one (mod 5), with
probability 1/2 independently.  Every output is therefore equally likely
among the 2^n words reachable from the input, so maximum-likelihood
decoding is a uniform choice among the codewords that could have produced
the received word.  The simulator draws raw Philox words in a fixed
per-trial layout, which makes results independent of batch size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .construction import INF, word_distance

__all__ = [
    "channel_sample",
    "confusable",
    "confusion_prob",
    "plausible_codewords",
    "ml_decode",
    "SimResult",
    "monte_carlo_pe",
]

_WORDS_PER_TRIAL = 4  # message, noise bits, tie break, reserved


def channel_sample(word, rng: np.random.Generator):
    """One channel use: add an independent fair bit to each symbol mod 5."""
    arr = np.asarray(word, dtype=np.int64)
    return tuple((arr + rng.integers(0, 2, size=arr.size)) % 5)


def confusable(x, y) -> bool:
    """True when some common output has positive probability under x and y."""
    return word_distance(x, y) != INF


def confusion_prob(x, y) -> float:
    """Probability that independent transmissions of x and y coincide.

    Per coordinate this is 1/2 for equal symbols, 1/4 for cyclically
    adjacent ones, and 0 otherwise, so the product is 2^-(n + d(x, y)).
    """
    if tuple(x) == tuple(y):
        raise ValueError("confusion probability needs two distinct words")
    d = word_distance(x, y)
    if d == INF:
        return 0.0
    return 2.0 ** -(len(tuple(x)) + d)


def plausible_codewords(code, y) -> list:
    """Indices of codewords that can produce output y (shifts in {0, 1})."""
    out = []
    y = tuple(y)
    for i, c in enumerate(code):
        if all((yc - cc) % 5 <= 1 for yc, cc in zip(y, c)):
            out.append(i)
    return out


def ml_decode(code, y, tie: int = 0) -> int:
    """Maximum-likelihood decoder with deterministic tie index.

    All plausible codewords share the likelihood 2^-n, so ML reduces to
    picking among them; tie selects the (tie mod count)-th in code order.
    """
    cands = plausible_codewords(code, y)
    if not cands:
        raise ValueError("received word is not reachable from any codeword")
    return cands[tie % len(cands)]


@dataclass(frozen=True)
class SimResult:
    trials: int
    errors: int
    estimate: float
    ci95: float
    seed: int

    def csv(self) -> str:
        return (
            "trials,errors,estimate,ci95,seed\n"
            f"{self.trials},{self.errors},{format(self.estimate, '.17g')},"
            f"{format(self.ci95, '.17g')},{self.seed}\n"
        )

    @property
    def zero_error_upper(self) -> float:
        """Rule-of-three 95 percent upper bound, meaningful when errors = 0."""
        return 3.0 / self.trials


def monte_carlo_pe(code, trials: int, seed: int, batch: int = 1 << 16) -> SimResult:
    """Estimate block error probability of ML decoding with uniform messages.

    Trial t consumes raw words 4t..4t+3 of Philox(key=seed): message index,
    noise bits (one per coordinate), tie break, one reserved.  The layout is
    fixed, so any batch size gives the identical error count.
    """
    codearr = np.asarray(code, dtype=np.int64)
    if codearr.ndim != 2:
        raise ValueError("code must be a 2-d array of words")
    m, n = codearr.shape
    if n > 64:
        raise ValueError("noise layout supports at most 64 coordinates")
    if trials < 1:
        raise ValueError("need at least one trial")
    bitgen = np.random.Philox(key=seed)
    shifts = np.arange(n, dtype=np.uint64)
    errors = 0
    done = 0
    while done < trials:
        b = min(batch, trials - done)
        raw = bitgen.random_raw(_WORDS_PER_TRIAL * b).reshape(b, _WORDS_PER_TRIAL)
        msg = (raw[:, 0] % np.uint64(m)).astype(np.int64)
        noise = ((raw[:, 1, None] >> shifts) & np.uint64(1)).astype(np.int64)
        y = (codearr[msg] + noise) % 5
        diff = (y[:, None, :] - codearr[None, :, :]) % 5
        plaus = (diff <= 1).all(axis=2)
        counts = plaus.sum(axis=1)
        choose = (raw[:, 2] % counts.astype(np.uint64)).astype(np.int64)
        decoded = (plaus.cumsum(axis=1) > choose[:, None]).argmax(axis=1)
        errors += int((decoded != msg).sum())
        done += b
    p = errors / trials
    ci = 1.96 * math.sqrt(p * (1.0 - p) / trials)
    return SimResult(trials, errors, p, ci, seed)
