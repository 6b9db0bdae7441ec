"""Parameter sweeps over the game engine.

Regenerates the published curve families, acceptance matrices, threshold
curves, and settled-game grids as plain tabular data. Cells are
independent; evaluation may be parallel, but rows are always emitted in
ascending coordinate order so the output bytes never depend on the
thread count.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

from .game import GameConfig, PlayerSpec, _break_ties, utility_of_split
from .identity import PARTNER_ID, Aspect, FairnessKind, FairnessMode

T = TypeVar("T")
U = TypeVar("U")

THREADS_ENV = "TRANSCEND_UG_THREADS"

ENVELOPE_MIN = "envelope_min"
ENVELOPE_MAX = "envelope_max"


class SweepError(ValueError):
    """Raised on malformed sweep axes."""


def axis_values(lo: float, hi: float, step: float, tolerance: float = 1e-9) -> List[float]:
    """Inclusive arithmetic grid from lo to hi; step must divide the span."""
    if not (hi > lo and step > 0.0):
        raise SweepError(f"axis must satisfy min < max and step > 0, got [{lo}, {hi}] step {step}")
    span = (hi - lo) / step
    n = round(span)
    if abs(span - n) > tolerance * max(1, n):
        raise SweepError(f"step {step} does not divide the span [{lo}, {hi}] evenly")
    return [lo + (hi - lo) * i / n for i in range(n + 1)]


def _worker_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise SweepError(f"{THREADS_ENV} must be an integer, got {raw!r}")
    if n < 0:
        raise SweepError(f"{THREADS_ENV} must be >= 0, got {n}")
    return n or (os.cpu_count() or 1)


def _map(fn: Callable[[T], U], items: Sequence[T]) -> List[U]:
    """Order-preserving map, threaded when TRANSCEND_UG_THREADS allows."""
    workers = _worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def with_param(spec: PlayerSpec, name: str, value: float) -> PlayerSpec:
    """Copy of a player spec with one of {gamma, d, tau} replaced."""
    if name == "gamma":
        return replace(spec, sense=replace(spec.sense, gamma=value))
    if name == "d":
        aspects = tuple(
            Aspect(a.id, value, a.fixed_tau) if a.id == PARTNER_ID else a
            for a in spec.sense.aspects
        )
        return replace(spec, sense=replace(spec.sense, aspects=aspects))
    if name == "tau":
        if spec.mode.kind is not FairnessKind.AGENT_TAU:
            raise SweepError("tau axis requires agent_tau fairness mode")
        return replace(spec, mode=FairnessMode.agent_tau(value))
    raise SweepError(f"unknown player parameter {name!r}")


def utility_curves(
    base: PlayerSpec,
    cfg: GameConfig,
    curve_param: str,
    curve_values: Sequence[float],
    splits: Optional[Sequence[float]] = None,
) -> List[Dict[str, object]]:
    """One utility curve per value of the varied parameter.

    Each row holds (curve_param, curve_value, split, utility) plus marker
    flags for the utility-maximizing split (post tie-break) and the first
    split clearing the acceptance threshold. Two envelope pseudo-curves
    carry the pointwise min/max over the family.
    """
    if curve_param not in ("d", "gamma", "tau"):
        raise SweepError(f"curve parameter must be one of d, gamma, tau; got {curve_param!r}")
    grid = list(splits) if splits is not None else cfg.splits()
    if not grid:
        raise SweepError("empty split axis")

    def one_curve(value: float) -> List[Dict[str, object]]:
        player = with_param(base, curve_param, value)
        utilities = [utility_of_split(player, cfg, s) for s in grid]
        top = max(utilities)
        ties = [s for s, u in zip(grid, utilities) if u >= top - cfg.tolerance]
        best = _break_ties(ties, cfg.tie_break)
        min_acc = next(
            (s for s, u in zip(grid, utilities) if u >= cfg.accept_threshold - cfg.tolerance),
            None,
        )
        return [
            {
                "curve_param": curve_param,
                "curve_value": value,
                "split": s,
                "utility": u,
                "is_best_split": int(s == best),
                "is_min_acceptable": int(min_acc is not None and s == min_acc),
            }
            for s, u in zip(grid, utilities)
        ]

    curves = _map(one_curve, list(curve_values))
    rows = [row for curve in curves for row in curve]
    for name, agg in ((ENVELOPE_MIN, min), (ENVELOPE_MAX, max)):
        for i, s in enumerate(grid):
            rows.append(
                {
                    "curve_param": name,
                    "curve_value": None,
                    "split": s,
                    "utility": agg(curve[i]["utility"] for curve in curves),
                    "is_best_split": 0,
                    "is_min_acceptable": 0,
                }
            )
    return rows


def acceptance_matrix(
    recipient: PlayerSpec,
    cfg: GameConfig,
    d_values: Sequence[float],
    splits: Sequence[float],
) -> List[Dict[str, object]]:
    """Accept/reject flag for every (distance, offered split) cell."""
    if not d_values or not splits:
        raise SweepError("matrix axes must be non-empty")

    def one_row(d: float) -> List[Dict[str, object]]:
        player = with_param(recipient, "d", d)
        return [
            {
                "d": d,
                "split": s,
                "accepted": int(
                    utility_of_split(player, cfg, s) >= cfg.accept_threshold - cfg.tolerance
                ),
            }
            for s in sorted(splits)
        ]

    return [cell for row in _map(one_row, sorted(d_values)) for cell in row]


def tau_curves(gammas: Sequence[float], d_values: Sequence[float]) -> List[Dict[str, object]]:
    """Association-derived threshold 1 - gamma**d per (gamma, distance)."""
    if not gammas or not d_values:
        raise SweepError("tau-curve axes must be non-empty")
    return [
        {"gamma": g, "d": d, "tau": 1.0 - (1.0 if d == 0.0 else g ** d)}
        for g in sorted(gammas)
        for d in sorted(d_values)
    ]


def game_grid(
    allocator: PlayerSpec,
    recipient: PlayerSpec,
    cfg: GameConfig,
    axis1: Tuple[str, Sequence[float]],
    axis2: Tuple[str, Sequence[float]],
) -> List[Dict[str, object]]:
    """Settled game per cell of two varied player parameters.

    Axis names take the form ``allocator.gamma`` or ``recipient.d``.
    """
    from .game import play  # local import keeps module deps one-way

    def apply(alloc: PlayerSpec, recip: PlayerSpec, name: str, value: float):
        role, _, param = name.partition(".")
        if role == "allocator":
            return with_param(alloc, param, value), recip
        if role == "recipient":
            return alloc, with_param(recip, param, value)
        raise SweepError(f"axis {name!r} must start with allocator. or recipient.")

    name1, values1 = axis1
    name2, values2 = axis2
    if name1 == name2:
        raise SweepError("game-grid axes must differ")
    cells = [(v1, v2) for v1 in sorted(values1) for v2 in sorted(values2)]

    def one_cell(vv: Tuple[float, float]) -> Dict[str, object]:
        v1, v2 = vv
        alloc, recip = apply(allocator, recipient, name1, v1)
        alloc, recip = apply(alloc, recip, name2, v2)
        outcome = play(alloc, recip, cfg)
        return {
            "axis1": v1,
            "axis2": v2,
            "proposed_split": outcome.proposed_split.own_share,
            "accepted": int(outcome.accepted),
        }

    return _map(one_cell, cells)
