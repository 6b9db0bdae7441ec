"""Loss-averse perceived-payoff lens.

An agent never reacts to a raw allocation directly; it reacts to the
disparity ``delta = payoff - tau`` between what it got and its fairness
threshold, transformed through an S-shaped value function. Shortfalls
below the threshold hurt more than equal-sized surpluses help.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class LensFamily(enum.Enum):
    LINEAR = "linear"
    EXP_VALUE = "exp_value"


class LensConfigError(ValueError):
    """Raised when lens parameters violate their constraints."""


# Defaults calibrated so that, with a fairness threshold of 0.2 and full
# identification (d=0), the accepted offers at 0.05 resolution are exactly
# those where both players get at least 0.2. k=16 gives the loss branch
# enough bite near zero: lambda*(1-exp(-0.05k)) must exceed the saturated
# gain 1-exp(-0.65k).
DEFAULT_STEEPNESS = 16.0
DEFAULT_LOSS_AVERSION = 2.0


@dataclass(frozen=True)
class PayoffLens:
    """Parameters of the perceived-payoff function family.

    ``loss_aversion`` (lambda) and ``steepness`` (k) only apply to the
    EXP_VALUE family; LINEAR ignores both and is an identity test mode.
    """

    family: LensFamily = LensFamily.EXP_VALUE
    loss_aversion: float = DEFAULT_LOSS_AVERSION
    steepness: float = DEFAULT_STEEPNESS

    def __post_init__(self) -> None:
        if self.family is LensFamily.EXP_VALUE:
            if not self.loss_aversion > 1.0:
                raise LensConfigError(
                    f"loss_aversion must be > 1 for exp_value lens, got {self.loss_aversion}"
                )
            if not self.steepness > 0.0:
                raise LensConfigError(
                    f"steepness must be > 0 for exp_value lens, got {self.steepness}"
                )


def perceived_payoff(lens: PayoffLens, delta: float) -> float:
    """Transform a disparity into a perceived payoff.

    LINEAR: f(delta) = delta.
    EXP_VALUE: f(delta) = 1 - exp(-k*delta) for gains and
    -lambda*(1 - exp(k*delta)) for losses. Strictly increasing, f(0)=0,
    bounded in (-lambda, 1), concave on gains and convex on losses.
    """
    if not math.isfinite(delta):
        raise ValueError(f"delta must be finite, got {delta}")
    if lens.family is LensFamily.LINEAR:
        return delta
    k = lens.steepness
    if delta >= 0.0:
        return 1.0 - math.exp(-k * delta)
    return -lens.loss_aversion * (1.0 - math.exp(k * delta))


def loss_aversion_gap(lens: PayoffLens, delta: float) -> float:
    """Excess of the perceived loss over the perceived gain at +/-delta.

    Returns |f(-delta)| - |f(delta)|; strictly positive for all delta > 0
    whenever lambda > 1.
    """
    if lens.family is LensFamily.LINEAR:
        raise LensConfigError("loss aversion undefined for symmetric family")
    if not delta > 0.0:
        raise ValueError(f"delta must be positive, got {delta}")
    return abs(perceived_payoff(lens, -delta)) - abs(perceived_payoff(lens, delta))
