"""Extensive-form model of the three-door hide / offer / switch game.

The host (Monte) hides a prize behind one of doors 1..3, the contestant
(Conie) picks a door, the host reveals a losing door and offers a switch
to the remaining unrevealed door, and the contestant holds or switches.
Everything here is small enough to enumerate outright: 6 host strategies,
12 contestant strategies, 24 leaves, 6 information sets.  The rest of the
package is built on top of these enumerations and the pure-profile
:func:`play` resolver.

Strategy text codes round-trip exactly:

* host: ``"12"`` hides behind door 1 and offers door 2 on a match;
* contestant: ``"2sm"`` picks door 2, switches when offered the
  smaller-numbered door, holds when offered the larger one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

Door = int

DOORS: tuple[Door, Door, Door] = (1, 2, 3)


def check_door(value: int) -> Door:
    """Validate a door number, returning it unchanged."""
    if value not in DOORS:
        raise ValueError(f"door must be 1, 2 or 3, got {value!r}")
    return value


def other_doors(door: Door) -> tuple[Door, Door]:
    """The two doors distinct from ``door``, smaller first."""
    check_door(door)
    a, b = (d for d in DOORS if d != door)
    return a, b


class Action(enum.Enum):
    """Contestant's final move: keep the pick (``m``) or take the offer (``s``)."""

    HOLD = "m"
    SWITCH = "s"

    @property
    def letter(self) -> str:
        return self.value

    @classmethod
    def from_letter(cls, letter: str) -> "Action":
        for action in cls:
            if action.value == letter:
                return action
        raise ValueError(f"action letter must be 's' or 'm', got {letter!r}")


@dataclass(frozen=True)
class MontePureStrategy:
    """Host plan: the prize door plus the door offered when the pick matches.

    On a mismatch the rules force the offer onto the prize door, so the
    pair (theta, offer_on_match) pins down the host's whole plan.
    """

    theta: Door
    offer_on_match: Door

    def __post_init__(self) -> None:
        check_door(self.theta)
        check_door(self.offer_on_match)
        if self.offer_on_match == self.theta:
            raise ValueError(
                f"offer on match must differ from the prize door, got {self.theta}"
            )

    @property
    def code(self) -> str:
        return f"{self.theta}{self.offer_on_match}"

    @classmethod
    def from_code(cls, code: str) -> "MontePureStrategy":
        if len(code) != 2 or not code.isdigit():
            raise ValueError(f"host strategy code must be two digits, got {code!r}")
        return cls(int(code[0]), int(code[1]))

    def __str__(self) -> str:
        return self.code


@dataclass(frozen=True)
class ConiePureStrategy:
    """Contestant plan: a pick plus one action per possible offered door.

    Actions are indexed by the offered door's rank among the two non-pick
    doors (numerically smaller vs larger), which is exactly the
    information available at the final move.
    """

    pick: Door
    on_smaller_offer: Action
    on_larger_offer: Action

    def __post_init__(self) -> None:
        check_door(self.pick)

    @property
    def code(self) -> str:
        return f"{self.pick}{self.on_smaller_offer.letter}{self.on_larger_offer.letter}"

    @classmethod
    def from_code(cls, code: str) -> "ConiePureStrategy":
        if len(code) != 3 or not code[0].isdigit():
            raise ValueError(
                f"contestant strategy code must be a digit plus two letters, got {code!r}"
            )
        return cls(int(code[0]), Action.from_letter(code[1]), Action.from_letter(code[2]))

    @property
    def always_switching(self) -> bool:
        return self.on_smaller_offer is Action.SWITCH and self.on_larger_offer is Action.SWITCH

    def action_for_offer(self, offer: Door) -> Action:
        """The action this plan takes when ``offer`` is the switch target."""
        smaller, larger = other_doors(self.pick)
        if offer == smaller:
            return self.on_smaller_offer
        if offer == larger:
            return self.on_larger_offer
        raise ValueError(f"door {offer} cannot be offered after picking {self.pick}")

    def __str__(self) -> str:
        return self.code


@dataclass(frozen=True)
class InfoSet:
    """What the contestant knows at the final move: her pick and the offer."""

    pick: Door
    offer: Door

    def __post_init__(self) -> None:
        check_door(self.pick)
        check_door(self.offer)
        if self.pick == self.offer:
            raise ValueError("offered door always differs from the picked door")

    @property
    def label(self) -> str:
        return f"*{self.pick}{self.offer}"

    @classmethod
    def from_label(cls, label: str) -> "InfoSet":
        if len(label) != 3 or label[0] != "*":
            raise ValueError(f"information set label looks like '*21', got {label!r}")
        return cls(int(label[1]), int(label[2]))

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class PlayRecord:
    """One resolved round; validates the game's structural rules on build."""

    theta: Door
    pick: Door
    offer: Door
    final: Door
    revealed: Door
    win: bool

    def __post_init__(self) -> None:
        for door in (self.theta, self.pick, self.offer, self.final, self.revealed):
            check_door(door)
        if self.revealed in (self.pick, self.offer):
            raise ValueError("revealed door must stay closed to neither pick nor offer")
        if self.revealed == self.theta:
            raise ValueError("the host never reveals the prize door")
        if self.final not in (self.pick, self.offer):
            raise ValueError("final choice must be the pick or the offer")
        if self.pick != self.theta and self.offer != self.theta:
            raise ValueError("on a mismatch the offer is forced onto the prize door")
        if self.win != (self.final == self.theta):
            raise ValueError("win flag must mean final == theta")

    @property
    def info_set(self) -> InfoSet:
        return InfoSet(self.pick, self.offer)

    @property
    def action(self) -> Action:
        return Action.HOLD if self.final == self.pick else Action.SWITCH


@dataclass(frozen=True)
class GameTree:
    """Layered positions of the full tree plus the information-set partition.

    Positions are tuples of the moves so far: ``(theta,)``, ``(theta, pick)``,
    ``(theta, pick, offer)`` and leaves ``(theta, pick, offer, final)``.
    """

    hide_positions: tuple[tuple[Door], ...]
    pick_positions: tuple[tuple[Door, Door], ...]
    offer_positions: tuple[tuple[Door, Door, Door], ...]
    leaves: tuple[tuple[Door, Door, Door, Door], ...]
    winning_leaves: frozenset[tuple[Door, Door, Door, Door]]
    info_partition: tuple[tuple[InfoSet, tuple[tuple[Door, Door, Door], ...]], ...]

    def info_set_of(self, position: tuple[Door, Door, Door]) -> InfoSet:
        """Information set containing an offer-layer position."""
        theta, pick, offer = position
        if position not in self.offer_positions:
            raise ValueError(f"{position} is not a reachable offer position")
        return InfoSet(pick, offer)

    def offers_from(self, theta: Door, pick: Door) -> tuple[Door, ...]:
        """Admissible offers after (theta, pick): both non-pick doors on a
        match, only the prize door on a mismatch."""
        return tuple(
            pos[2] for pos in self.offer_positions if pos[0] == theta and pos[1] == pick
        )

    def is_winning(self, leaf: tuple[Door, Door, Door, Door]) -> bool:
        return leaf in self.winning_leaves


def enumerate_monte() -> list[MontePureStrategy]:
    """All 6 host strategies in canonical column order 12,13,21,23,31,32."""
    return [
        MontePureStrategy(theta, offer)
        for theta in DOORS
        for offer in other_doors(theta)
    ]


_ACTION_PAIRS = (
    (Action.SWITCH, Action.SWITCH),
    (Action.HOLD, Action.SWITCH),
    (Action.SWITCH, Action.HOLD),
    (Action.HOLD, Action.HOLD),
)


def enumerate_conie() -> list[ConiePureStrategy]:
    """All 12 contestant strategies in canonical row order 1ss,1ms,1sm,1mm,2ss,..."""
    return [
        ConiePureStrategy(pick, smaller, larger)
        for pick in DOORS
        for smaller, larger in _ACTION_PAIRS
    ]


def enumerate_info_sets() -> list[InfoSet]:
    """The 6 information sets in order *12, *13, *21, *23, *31, *32."""
    return [InfoSet(pick, offer) for pick in DOORS for offer in other_doors(pick)]


def build_game_tree() -> GameTree:
    """Construct the full tree: 24 leaves, 12 of them winning."""
    hide = tuple((theta,) for theta in DOORS)
    picks = tuple((theta, pick) for theta in DOORS for pick in DOORS)
    offers = []
    for theta, pick in picks:
        if pick == theta:
            offers.extend((theta, pick, offer) for offer in other_doors(theta))
        else:
            offers.append((theta, pick, theta))
    leaves = tuple(
        (theta, pick, offer, final)
        for theta, pick, offer in offers
        for final in (pick, offer)
    )
    winning = frozenset(leaf for leaf in leaves if leaf[3] == leaf[0])
    partition = tuple(
        (
            info,
            tuple(
                pos for pos in offers if pos[1] == info.pick and pos[2] == info.offer
            ),
        )
        for info in enumerate_info_sets()
    )
    return GameTree(
        hide_positions=hide,
        pick_positions=picks,
        offer_positions=tuple(offers),
        leaves=leaves,
        winning_leaves=winning,
        info_partition=partition,
    )


def play(m: MontePureStrategy, c: ConiePureStrategy) -> PlayRecord:
    """Resolve a pure-strategy profile into the unique resulting round."""
    theta = m.theta
    pick = c.pick
    offer = m.offer_on_match if pick == theta else theta
    action = c.action_for_offer(offer)
    final = pick if action is Action.HOLD else offer
    (revealed,) = (d for d in DOORS if d not in (pick, offer))
    return PlayRecord(
        theta=theta,
        pick=pick,
        offer=offer,
        final=final,
        revealed=revealed,
        win=final == theta,
    )


def payoff(m: MontePureStrategy, c: ConiePureStrategy) -> int:
    """1 if the contestant wins the prize under this profile, else 0."""
    return int(play(m, c).win)
