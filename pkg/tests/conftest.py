"""Shared independent oracles for the test suite.

These reimplement the math directly from closed forms, on purpose not
reusing the package's own code paths, so they stay an independent check.
"""
from __future__ import annotations

import math
from typing import Optional, Tuple


def oracle_f(delta: float, k: float, lam: float) -> float:
    if delta >= 0:
        return 1.0 - math.exp(-k * delta)
    return -lam * (1.0 - math.exp(k * delta))


def oracle_fair_utility(
    gamma: float, d: float, tau: float, k: float, lam: float, own: float
) -> float:
    w = 1.0 if d == 0 else gamma ** d
    return (oracle_f(own - tau, k, lam) + w * oracle_f((1.0 - own) - tau, k, lam)) / (1.0 + w)


def oracle_baseline_utility(gamma: float, d: float, own: float) -> float:
    w = 1.0 if d == 0 else gamma ** d
    return (own + w * (1.0 - own)) / (1.0 + w)


def brute_force_scan(
    utility,
    cells: int,
    accept_threshold: float = 0.0,
    tolerance: float = 1e-9,
) -> Tuple[float, Optional[float]]:
    """Exhaustive argmax (closest-to-equal tie-break) and first acceptable split."""
    grid = [i / cells for i in range(cells + 1)]
    utils = [utility(s) for s in grid]
    top = max(utils)
    ties = [s for s, u in zip(grid, utils) if u >= top - tolerance]
    best = min(ties, key=lambda s: (abs(s - 0.5), s))
    min_acc = next((s for s, u in zip(grid, utils) if u >= accept_threshold - tolerance), None)
    return best, min_acc
