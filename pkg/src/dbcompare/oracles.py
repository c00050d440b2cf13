"""Independent recomputations used to validate the engine and the catalog.

The nondominated oracle is a deliberately naive O(N^2) double loop over
the scalar comparison functions; the engine's vectorized result must
agree with it exactly.  The Monte-Carlo simulators re-derive fast-phase
success probabilities from explicit adversary play, round by round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from .attributes import dominates
from .catalog import ProtocolInstance
from .pareto import SolutionSet

DEFAULT_ORACLE_CAP = 5000

RNG_ALGORITHM = "pcg64"


def naive_nondominated(instances: Sequence[ProtocolInstance],
                       cap: int = DEFAULT_ORACLE_CAP,
                       specs=None) -> SolutionSet:
    """Reference nondominated set: every pair checked with scalar relations."""
    if len(instances) > cap:
        raise ValueError(
            f"oracle input too large ({len(instances)} > cap {cap}); "
            "raise the cap explicitly or sample a subset")
    members: List[ProtocolInstance] = []
    for cand in instances:
        beaten = False
        for other in instances:
            if other is cand:
                continue
            if dominates(other.vector, cand.vector, specs=specs):
                beaten = True
                break
        if not beaten:
            members.append(cand)
    members.sort(key=lambda i: (i.protocol, i.param_values()))
    return SolutionSet(members=members, source=f"oracle over {len(instances)}")


@dataclass(frozen=True)
class McEstimate:
    mean: float
    trials: int
    stderr: float
    seed: int
    rng: str = RNG_ALGORITHM

    def within(self, expected: float, sigmas: float = 3.0) -> bool:
        return abs(self.mean - expected) <= sigmas * self.stderr


def _estimate(successes: int, trials: int, seed: int) -> McEstimate:
    mean = successes / trials
    stderr = math.sqrt(mean * (1.0 - mean) / trials)
    return McEstimate(mean=mean, trials=trials, stderr=stderr, seed=seed)


def _bits(rng, trials, n):
    return rng.integers(0, 2, size=(trials, n), dtype=np.uint8)


def simulate_random_answer(n: int, trials: int = 10**6,
                           seed: int = 20240901) -> McEstimate:
    """No-information adversary guessing every fast-phase response."""
    if n == 0:
        return McEstimate(mean=1.0, trials=trials, stderr=0.0, seed=seed)
    rng = np.random.default_rng(seed)
    challenges = _bits(rng, trials, n)
    answers = _bits(rng, trials, n)
    registers = _bits(rng, trials, n)  # correct answers per challenge bit
    correct = np.where(challenges == 0, registers, 1 - registers)
    wins = int(((answers == correct).all(axis=1)).sum())
    return _estimate(wins, trials, seed)


def simulate_hk_mafia(n: int, trials: int = 10**6,
                      seed: int = 20240902) -> McEstimate:
    """Pre-ask relay against a two-register fast phase.

    The adversary queries the prover in advance with guessed challenges
    and learns one register bit per round; facing the verifier it answers
    from that bit when the real challenge matches its guess, else guesses.
    """
    if n == 0:
        return McEstimate(mean=1.0, trials=trials, stderr=0.0, seed=seed)
    rng = np.random.default_rng(seed)
    r0 = _bits(rng, trials, n)
    r1 = _bits(rng, trials, n)
    guesses = _bits(rng, trials, n)
    challenges = _bits(rng, trials, n)
    blind = _bits(rng, trials, n)
    learned = np.where(guesses == 0, r0, r1)
    answers = np.where(challenges == guesses, learned, blind)
    correct = np.where(challenges == 0, r0, r1)
    wins = int(((answers == correct).all(axis=1)).sum())
    return _estimate(wins, trials, seed)


def simulate_hk_distance(n: int, trials: int = 10**6, seed: int = 20240903,
                         force_equal_registers: bool = False) -> McEstimate:
    """Early-reply dishonest prover against a two-register fast phase.

    The distant prover must commit each reply before the challenge
    arrives: when the round's two register bits coincide the reply is
    surely correct, otherwise it is a fair guess.
    """
    if n == 0:
        return McEstimate(mean=1.0, trials=trials, stderr=0.0, seed=seed)
    rng = np.random.default_rng(seed)
    r0 = _bits(rng, trials, n)
    r1 = r0.copy() if force_equal_registers else _bits(rng, trials, n)
    challenges = _bits(rng, trials, n)
    guesses = _bits(rng, trials, n)
    replies = np.where(r0 == r1, r0, guesses)
    correct = np.where(challenges == 0, r0, r1)
    wins = int(((replies == correct).all(axis=1)).sum())
    return _estimate(wins, trials, seed)
