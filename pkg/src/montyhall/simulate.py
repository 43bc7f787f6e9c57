"""Behavioral strategies and seedable Monte-Carlo play.

Behavioral randomization happens per decision point (pick distribution plus
one switch coin per information set) and converts exactly to mixed
strategies by multiplying branch probabilities.  Sampling draws integers
against exact rational thresholds, so the simulated process follows the
model distribution without float round-off; floats only appear in the
reported win rate.

Reproducibility contract: all randomness flows from ``random.Random``
streams.  ``simulate`` splits its work into fixed-size chunks, chunk ``i``
running on a fresh generator seeded with the string ``"{seed}:{i}"``, so
results are independent of how chunks are scheduled.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .game import (
    Action,
    ConiePureStrategy,
    InfoSet,
    PlayRecord,
    enumerate_info_sets,
    other_doors,
)
from .matrix import (
    CONIE_ORDER,
    MixedConie,
    MixedMonte,
    format_rational,
    parse_rational,
)
from .solvers import BehavioralHost, host_to_mixed

INFO_SETS: tuple[InfoSet, ...] = tuple(enumerate_info_sets())
_INFO_INDEX = {info: i for i, info in enumerate(INFO_SETS)}

CHUNK_ROUNDS = 10_000


@dataclass(frozen=True)
class BehavioralConie:
    """Contestant described by 8 parameters: a pick distribution and one
    switch probability per information set (canonical order *12..*32)."""

    pick_dist: tuple[Fraction, Fraction, Fraction]
    switch_prob: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        pick = tuple(Fraction(x) for x in self.pick_dist)
        switch = tuple(Fraction(x) for x in self.switch_prob)
        if len(pick) != 3 or any(x < 0 for x in pick) or sum(pick) != 1:
            raise ValueError(f"pick distribution invalid: {pick}")
        if len(switch) != 6 or any(not 0 <= x <= 1 for x in switch):
            raise ValueError("need 6 switch probabilities in [0, 1]")
        object.__setattr__(self, "pick_dist", pick)
        object.__setattr__(self, "switch_prob", switch)

    def switch_prob_at(self, info: InfoSet) -> Fraction:
        return self.switch_prob[_INFO_INDEX[info]]

    @classmethod
    def from_map(
        cls,
        pick_dist: Sequence[Fraction],
        switch_map: Mapping[InfoSet, Fraction],
    ) -> "BehavioralConie":
        return cls(tuple(pick_dist), tuple(switch_map[info] for info in INFO_SETS))

    @classmethod
    def from_pure(cls, strategy: ConiePureStrategy | str) -> "BehavioralConie":
        """Degenerate coins reproducing a pure strategy exactly."""
        if isinstance(strategy, str):
            strategy = ConiePureStrategy.from_code(strategy)
        pick = tuple(Fraction(int(d == strategy.pick)) for d in (1, 2, 3))
        switch = []
        for info in INFO_SETS:
            if info.pick == strategy.pick:
                action = strategy.action_for_offer(info.offer)
                switch.append(Fraction(int(action is Action.SWITCH)))
            else:
                switch.append(Fraction(0))  # unreachable after this pick
        return cls(pick, tuple(switch))

    @classmethod
    def always_switch(cls, pick_dist: Sequence[Fraction] | None = None) -> "BehavioralConie":
        pick = tuple(pick_dist) if pick_dist else (Fraction(1, 3),) * 3
        return cls(pick, (Fraction(1),) * 6)

    def to_dict(self) -> dict:
        return {
            "pickDist": [format_rational(x) for x in self.pick_dist],
            "switchProb": [format_rational(x) for x in self.switch_prob],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "BehavioralConie":
        return cls(
            tuple(parse_rational(str(x)) for x in doc["pickDist"]),
            tuple(parse_rational(str(x)) for x in doc["switchProb"]),
        )


def behavioral_to_mixed_conie(b: BehavioralConie) -> MixedConie:
    """Kuhn-style expansion: the weight of a pure plan is the product of the
    probabilities of its branch choices."""
    weights = []
    for strategy in CONIE_ORDER:
        smaller, larger = other_doors(strategy.pick)
        p_small = b.switch_prob_at(InfoSet(strategy.pick, smaller))
        p_large = b.switch_prob_at(InfoSet(strategy.pick, larger))
        w = b.pick_dist[strategy.pick - 1]
        w *= p_small if strategy.on_smaller_offer is Action.SWITCH else 1 - p_small
        w *= p_large if strategy.on_larger_offer is Action.SWITCH else 1 - p_large
        weights.append(w)
    return MixedConie(tuple(weights))


def behavioral_to_mixed_monte(h: BehavioralHost) -> MixedMonte:
    """Host-side conversion; same contract as :func:`solvers.host_to_mixed`
    (single shared implementation)."""
    return host_to_mixed(h)


class _ExactCategorical:
    """Draws an index with exact rational probabilities via integer
    thresholds over a common denominator."""

    __slots__ = ("den", "cumulative")

    def __init__(self, probs: Iterable[Fraction]):
        probs = list(probs)
        self.den = math.lcm(*(p.denominator for p in probs)) if probs else 1
        total = 0
        self.cumulative = []
        for p in probs:
            total += p.numerator * (self.den // p.denominator)
            self.cumulative.append(total)

    def draw(self, rng: random.Random) -> int:
        k = rng.randrange(self.den)
        for idx, bound in enumerate(self.cumulative):
            if k < bound:
                return idx
        raise AssertionError("thresholds must cover the whole range")


class _ExactCoin:
    __slots__ = ("num", "den")

    def __init__(self, p: Fraction):
        self.num, self.den = p.numerator, p.denominator

    def draw(self, rng: random.Random) -> bool:
        if self.num == self.den:
            return True
        if self.num == 0:
            return False
        return rng.randrange(self.den) < self.num


class _RoundSampler:
    """Precomputed samplers for one (host, contestant) behavioral pair."""

    def __init__(self, h: BehavioralHost, b: BehavioralConie):
        self.theta_draw = _ExactCategorical(h.pi)
        self.pick_draw = _ExactCategorical(b.pick_dist)
        self.smaller_coin = [_ExactCoin(l) for l in h.lam]
        self.switch_coin = [_ExactCoin(p) for p in b.switch_prob]

    def draw(self, rng: random.Random) -> PlayRecord:
        theta = self.theta_draw.draw(rng) + 1
        pick = self.pick_draw.draw(rng) + 1
        if pick == theta:
            smaller, larger = other_doors(theta)
            offer = smaller if self.smaller_coin[theta - 1].draw(rng) else larger
        else:
            offer = theta
        info_idx = _INFO_INDEX[InfoSet(pick, offer)]
        switch = self.switch_coin[info_idx].draw(rng)
        final = offer if switch else pick
        (revealed,) = (d for d in (1, 2, 3) if d not in (pick, offer))
        return PlayRecord(
            theta=theta,
            pick=pick,
            offer=offer,
            final=final,
            revealed=revealed,
            win=final == theta,
        )


def sample_play(rng: random.Random, h: BehavioralHost, b: BehavioralConie) -> PlayRecord:
    """Sample one round: theta ~ pi, pick ~ pick_dist, the match offer by the
    door's bias coin, the final action by the information set's switch coin."""
    return _RoundSampler(h, b).draw(rng)


def spawn_stream(seed: int, index: int) -> random.Random:
    """Deterministic substream ``index`` of the stream family ``seed``."""
    return random.Random(f"{seed}:{index}")


@dataclass(frozen=True)
class InfoSetTally:
    visits: int = 0
    switch_wins: int = 0
    hold_wins: int = 0


@dataclass(frozen=True)
class SimulationStats:
    """Aggregate results of seeded rounds, with per-information-set tallies
    of how often switching (resp. holding) would have won."""

    rounds: int
    wins: int
    seed: int
    per_info_set: tuple[tuple[InfoSet, InfoSetTally], ...]

    @property
    def win_rate(self) -> float:
        return self.wins / self.rounds

    def tally(self, info: InfoSet) -> InfoSetTally:
        for candidate, tally in self.per_info_set:
            if candidate == info:
                return tally
        raise KeyError(info.label)

    def to_dict(self) -> dict:
        return {
            "rounds": self.rounds,
            "wins": self.wins,
            "winRate": self.win_rate,
            "seed": self.seed,
            "perInfoSet": {
                info.label: {
                    "visits": tally.visits,
                    "switchWins": tally.switch_wins,
                    "holdWins": tally.hold_wins,
                }
                for info, tally in self.per_info_set
            },
        }


def simulate(
    h: BehavioralHost, b: BehavioralConie, rounds: int, seed: int
) -> SimulationStats:
    """Run seeded rounds and tally outcomes.

    The win rate is an unbiased estimate of the exact expected payoff of the
    corresponding mixed profile.  Chunked substreams make the aggregate
    independent of execution order, so chunks may be farmed out in parallel
    without changing results.
    """
    if rounds < 1:
        raise ValueError(f"rounds must be at least 1, got {rounds}")
    sampler = _RoundSampler(h, b)
    wins = 0
    visits = [0] * 6
    switch_wins = [0] * 6
    hold_wins = [0] * 6
    n_chunks = (rounds + CHUNK_ROUNDS - 1) // CHUNK_ROUNDS
    for chunk in range(n_chunks):
        rng = spawn_stream(seed, chunk)
        chunk_rounds = min(CHUNK_ROUNDS, rounds - chunk * CHUNK_ROUNDS)
        for _ in range(chunk_rounds):
            record = sampler.draw(rng)
            wins += record.win
            idx = _INFO_INDEX[record.info_set]
            visits[idx] += 1
            if record.theta == record.offer:
                switch_wins[idx] += 1
            else:
                hold_wins[idx] += 1
    per_info = tuple(
        (info, InfoSetTally(visits[i], switch_wins[i], hold_wins[i]))
        for i, info in enumerate(INFO_SETS)
    )
    return SimulationStats(rounds=rounds, wins=wins, seed=seed, per_info_set=per_info)
