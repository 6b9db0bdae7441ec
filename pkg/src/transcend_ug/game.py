"""The Ultimatum Game engine.

The allocator scans a discretized grid of splits and proposes the one
maximizing its own utility; the recipient accepts any offer whose
utility clears the acceptance threshold (0 by default). Everything is
deterministic: same specs, same outcome, bit for bit.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .identity import PARTNER_ID, FairnessKind, FairnessMode, SenseOfSelf, effective_tau
from .payoff import PayoffLens
from .utility import Split, baseline_ug_utility, fair_ug_utility

log = logging.getLogger(__name__)


class TieBreak(enum.Enum):
    CLOSEST_TO_EQUAL = "closest_to_equal"
    LOWEST_OWN_SHARE = "lowest_own_share"
    HIGHEST_OWN_SHARE = "highest_own_share"


class ConfigError(ValueError):
    """Raised on invalid game configuration."""


@dataclass(frozen=True)
class GameConfig:
    """Grid resolution, acceptance threshold, and numeric tolerances.

    ``own_tau_zero`` is the documented escape hatch for association-based
    play: when set, the agent's own payoff term is judged against tau=0
    (its distance to itself) instead of the partner-derived threshold.
    Default off: one tau for both terms.
    """

    grid_step: float = 0.01
    accept_threshold: float = 0.0
    tie_break: TieBreak = TieBreak.CLOSEST_TO_EQUAL
    tolerance: float = 1e-9
    own_tau_zero: bool = False

    def __post_init__(self) -> None:
        if not 0.0 < self.grid_step <= 0.5:
            raise ConfigError(f"grid_step must lie in (0, 0.5], got {self.grid_step}")
        if not self.tolerance > 0.0:
            raise ConfigError(f"tolerance must be > 0, got {self.tolerance}")
        cells = 1.0 / self.grid_step
        if abs(cells - round(cells)) > self.tolerance * round(cells):
            raise ConfigError(f"grid_step {self.grid_step} does not divide 1 evenly")

    @property
    def grid_cells(self) -> int:
        return round(1.0 / self.grid_step)

    def splits(self) -> List[float]:
        """The split grid {0, step, ..., 1}."""
        n = self.grid_cells
        return [i / n for i in range(n + 1)]

    def snap(self, share: float) -> float:
        """Round a share to the nearest grid point, warning when off-grid."""
        n = self.grid_cells
        snapped = round(share * n) / n
        if abs(snapped - share) > self.tolerance:
            log.warning("off-grid share %g snapped to %g", share, snapped)
        return snapped


@dataclass(frozen=True)
class PlayerSpec:
    """One player: identity, fairness mode, and perception lens."""

    sense: SenseOfSelf
    mode: FairnessMode
    lens: PayoffLens

    @classmethod
    def two_party(
        cls, gamma: float, partner_distance: float, mode: FairnessMode, lens: PayoffLens
    ) -> "PlayerSpec":
        return cls(SenseOfSelf.two_party(gamma, partner_distance), mode, lens)


@dataclass(frozen=True)
class Outcome:
    """Record of a single played game."""

    proposed_split: Split
    accepted: bool
    payoff_allocator: float
    payoff_recipient: float
    util_allocator: float
    util_recipient: float

    def to_record(self) -> dict:
        return {
            "proposed_split": self.proposed_split.own_share,
            "accepted": self.accepted,
            "payoff_allocator": self.payoff_allocator,
            "payoff_recipient": self.payoff_recipient,
            "util_allocator": self.util_allocator,
            "util_recipient": self.util_recipient,
        }


def realized_utility(player: PlayerSpec, cfg: GameConfig, own: float, partner: float) -> float:
    """Utility of a realized payoff pair through the player's own mode and lens."""
    gamma = player.sense.gamma
    d = player.sense.partner_distance
    if player.mode.kind is FairnessKind.BASELINE:
        return baseline_ug_utility(gamma, d, own, partner)
    tau = effective_tau(player.sense, player.mode, PARTNER_ID)
    own_tau = 0.0 if (cfg.own_tau_zero and player.mode.kind is FairnessKind.ASSOCIATION) else None
    return fair_ug_utility(gamma, d, tau, player.lens, own, partner, own_tau=own_tau)


def utility_of_split(player: PlayerSpec, cfg: GameConfig, own: float) -> float:
    """Utility the player derives from keeping ``own`` of the unit resource."""
    if not 0.0 <= own <= 1.0:
        raise ValueError(f"own share must lie in [0,1], got {own}")
    return realized_utility(player, cfg, own, 1.0 - own)


def _break_ties(candidates: List[float], rule: TieBreak) -> float:
    if rule is TieBreak.LOWEST_OWN_SHARE:
        return min(candidates)
    if rule is TieBreak.HIGHEST_OWN_SHARE:
        return max(candidates)
    return min(candidates, key=lambda s: (abs(s - 0.5), s))


def best_split(player: PlayerSpec, cfg: GameConfig) -> Tuple[Split, float]:
    """Utility-maximizing own share over the split grid, ties broken per config."""
    grid = cfg.splits()
    utilities = [utility_of_split(player, cfg, s) for s in grid]
    top = max(utilities)
    candidates = [s for s, u in zip(grid, utilities) if u >= top - cfg.tolerance]
    return Split(_break_ties(candidates, cfg.tie_break)), top


def accepts(player: PlayerSpec, cfg: GameConfig, offered: float) -> bool:
    """Whether the recipient accepts the offered share."""
    return utility_of_split(player, cfg, offered) >= cfg.accept_threshold - cfg.tolerance


def min_acceptable_split(player: PlayerSpec, cfg: GameConfig) -> Optional[Split]:
    """Smallest grid share the player would accept, if any.

    Acceptance is not guaranteed above this point (high-threshold curves
    are U-shaped); this is the locus where the utility first clears the
    acceptance threshold.
    """
    for s in cfg.splits():
        if accepts(player, cfg, s):
            return Split(s)
    return None


def play(allocator: PlayerSpec, recipient: PlayerSpec, cfg: GameConfig) -> Outcome:
    """One full game: proposal, response, and realized utilities."""
    proposal, _ = best_split(allocator, cfg)
    offered = proposal.partner_share
    accepted = accepts(recipient, cfg, offered)
    if accepted:
        pay_alloc, pay_recip = proposal.own_share, offered
    else:
        pay_alloc, pay_recip = 0.0, 0.0
    return Outcome(
        proposed_split=proposal,
        accepted=accepted,
        payoff_allocator=pay_alloc,
        payoff_recipient=pay_recip,
        util_allocator=realized_utility(allocator, cfg, pay_alloc, pay_recip),
        util_recipient=realized_utility(recipient, cfg, pay_recip, pay_alloc),
    )
