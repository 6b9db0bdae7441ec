"""Utility functions of transcended agents.

Three layers: the general identity-weighted utility over arbitrary
payoff vectors, its two-player closed form for the Ultimatum Game, and
the fairness-filtered variant that pushes both shares through the
perceived-payoff lens before weighting.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .identity import IdentityError, SenseOfSelf, attenuation
from .payoff import PayoffLens, perceived_payoff


@dataclass(frozen=True)
class Split:
    """Allocator-side view of a proposal: own share of the unit resource."""

    own_share: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.own_share <= 1.0:
            raise ValueError(f"own_share must lie in [0,1], got {self.own_share}")

    @property
    def partner_share(self) -> float:
        return 1.0 - self.own_share


def _weight(gamma: float, d: float) -> float:
    # gamma**0 == 1 for every gamma, including 0
    return 1.0 if d == 0.0 else gamma ** d


def ct_utility(sense: SenseOfSelf, payoffs: Mapping[str, float]) -> float:
    """Attenuation-weighted average of the payoffs of all identified aspects.

    ``payoffs`` must cover every aspect in the identity set; the result
    lies between the smallest and largest entry.
    """
    missing = [a.id for a in sense.aspects if a.id not in payoffs]
    if missing:
        raise IdentityError(f"payoff vector missing aspects: {missing}")
    num = 0.0
    den = 0.0
    for aspect in sense.aspects:
        w = attenuation(sense, aspect.id)
        num += w * payoffs[aspect.id]
        den += w
    return num / den


def baseline_ug_utility(gamma: float, d: float, own: float, partner: float) -> float:
    """Two-player utility without any fairness lens: (own + g^d*partner)/(1 + g^d)."""
    w = _weight(gamma, d)
    return (own + w * partner) / (1.0 + w)


def fair_ug_utility(
    gamma: float,
    d: float,
    tau: float,
    lens: PayoffLens,
    own: float,
    partner: float,
    own_tau: float | None = None,
) -> float:
    """Fairness-filtered two-player utility.

    Both shares are judged against the same threshold tau before the
    attenuation-weighted average: (f(own-tau) + g^d*f(partner-tau))/(1+g^d).
    ``own_tau`` optionally overrides the threshold applied to the agent's
    own share (off by default; the shipped behaviour uses one tau for
    both terms).
    """
    w = _weight(gamma, d)
    t_own = tau if own_tau is None else own_tau
    f_own = perceived_payoff(lens, own - t_own)
    f_partner = perceived_payoff(lens, partner - tau)
    return (f_own + w * f_partner) / (1.0 + w)
