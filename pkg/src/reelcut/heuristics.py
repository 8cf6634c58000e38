"""Constructive solvers: wide/narrow coupling, first-fit and best-fit.

The coupling solver splits the pool at half the usable deckle width. Orders
strictly wider than half can never share a reel with each other, so each of
them seeds a pattern that is then topped up from the narrow orders. When
the wide orders run out, the remaining narrow orders seed patterns among
themselves. Every pattern is repeated as often as its members' remaining
counts allow, so a whole block of identical reels comes out of one step.

Selecting the narrow top-up is a bounded subset-sum problem: choose roll
counts of the candidate orders that fill the residual as tightly as
possible. Candidate lists are short, so a depth-first search with a
capacity bound settles it quickly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Sequence

from .model import (
    CutPattern,
    OrderPool,
    Schedule,
    ScheduleMetrics,
    patterns_from_slots,
    schedule_from_patterns,
    trim_loss,
)

logger = logging.getLogger(__name__)

ALGORITHMS = ("coupling", "first-fit", "best-fit", "exact")


@dataclass(frozen=True)
class ClassifiedPool:
    """Wide and narrow sub-pools as ``(order id, remaining count)`` pairs.

    Both lists run widest first; equal widths keep pool order.
    """

    wide: tuple[tuple[str, int], ...]
    narrow: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class SolveResult:
    patterns: tuple[CutPattern, ...]
    schedule: Schedule
    metrics: ScheduleMetrics
    algorithm: str
    trace: tuple[str, ...] | None = field(default=None, compare=False)
    # exact search only: False when the node budget ran out first
    proven: bool | None = None

    @property
    def used_reels(self) -> int:
        return self.metrics.used_reels

    @property
    def trim_loss(self) -> int:
        return self.metrics.trim_loss


def make_result(patterns: Sequence[CutPattern], pool: OrderPool, algorithm: str,
                trace: Sequence[str] | None = None, proven: bool | None = None) -> SolveResult:
    schedule = schedule_from_patterns(patterns, pool)
    return SolveResult(
        patterns=tuple(patterns),
        schedule=schedule,
        metrics=trim_loss(schedule, pool),
        algorithm=algorithm,
        trace=tuple(trace) if trace is not None else None,
        proven=proven,
    )


def _by_width(pool: OrderPool, ids) -> list[str]:
    return sorted(ids, key=lambda oid: (-pool[oid].width, pool.position(oid)))


def classify_pool(pool: OrderPool, strict: bool = True) -> ClassifiedPool:
    """Split the pool at half the effective width.

    Orders of exactly half width count as narrow unless ``strict`` is off.
    """
    def is_wide(order):
        doubled = 2 * order.width
        return doubled > pool.effective_width if strict else doubled >= pool.effective_width

    half_exceeded = [o.id for o in pool.orders if is_wide(o)]
    rest = [o.id for o in pool.orders if not is_wide(o)]
    return ClassifiedPool(
        wide=tuple((oid, pool[oid].count) for oid in _by_width(pool, half_exceeded)),
        narrow=tuple((oid, pool[oid].count) for oid in _by_width(pool, rest)),
    )


def best_fill(residual: int, candidates: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    """Roll counts per candidate that fill ``residual`` as tightly as possible.

    ``candidates`` are ``(width, available)`` pairs, already in preference
    order. Among equally tight fills the one taking the most of the earliest
    candidate wins, then the next, and so on.

    >>> best_fill(100, [(80, 11), (55, 18), (50, 6)])
    (0, 0, 2)
    >>> best_fill(65, [(55, 18), (50, 6)])
    (1, 0)
    """
    n = len(candidates)
    caps = [min(avail, residual // w) for w, avail in candidates]
    # most width the suffix starting at k could still add
    reach = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        reach[k] = reach[k + 1] + candidates[k][0] * caps[k]

    best = [0, (0,) * n]
    take = [0] * n

    def search(k: int, filled: int) -> bool:
        if filled > best[0]:
            best[0], best[1] = filled, tuple(take)
            if filled == residual:
                return True
        if k == n or filled + reach[k] <= best[0]:
            return False
        width = candidates[k][0]
        for m in range(min(caps[k], (residual - filled) // width), -1, -1):
            take[k] = m
            if search(k + 1, filled + m * width):
                return True
        take[k] = 0
        return False

    search(0, 0)
    return best[1]


def couple_orders(pool: OrderPool, strict: bool = True) -> SolveResult:
    """Solve with the wide/narrow coupling heuristic.

    ``strict`` is passed to :func:`classify_pool`.
    """
    pool.check_satisfiable()
    classes = classify_pool(pool, strict)
    remaining = {o.id: o.count for o in pool.orders}
    width = pool.effective_width
    patterns: list[CutPattern] = []
    trace: list[str] = [
        "wide: " + ", ".join(oid for oid, _ in classes.wide),
        "narrow: " + ", ".join(oid for oid, _ in classes.narrow),
    ]

    def alive(ids):
        return [oid for oid in ids if remaining[oid] > 0]

    wide = [oid for oid, _ in classes.wide]
    narrow = [oid for oid, _ in classes.narrow]

    def emit(seed: str, fill_from: list[str], phase: str):
        composition = {seed: 1}
        residual = width - pool[seed].width
        candidates = []
        for oid in fill_from:
            avail = remaining[oid] - composition.get(oid, 0)
            if avail > 0 and pool[oid].width <= residual:
                candidates.append(oid)
        counts = best_fill(residual, [(pool[oid].width, remaining[oid] - composition.get(oid, 0))
                                      for oid in candidates])
        for oid, m in zip(candidates, counts):
            if m:
                composition[oid] = composition.get(oid, 0) + m
        reels = min(remaining[oid] // m for oid, m in composition.items())
        for oid, m in composition.items():
            remaining[oid] -= m * reels
        pattern = CutPattern.build(composition, reels, pool)
        patterns.append(pattern)
        trace.append(f"{phase}: seed {seed} -> {pattern!r}")

    # wide seeds topped up from narrow orders, until either side runs dry
    while alive(wide) and alive(narrow):
        emit(alive(wide)[0], alive(narrow), "couple")
    # narrow side exhausted: wide orders fill among themselves or go alone
    while alive(wide):
        emit(alive(wide)[0], alive(wide), "wide-only")
    # wide side exhausted: narrow orders fill among themselves
    while alive(narrow):
        emit(alive(narrow)[0], alive(narrow), "narrow-only")

    result = make_result(patterns, pool, "coupling")
    trace.append(f"total: {result.used_reels} reels, trim loss {result.trim_loss}")
    logger.debug("coupling finished with %d reels", result.used_reels)
    return replace(result, trace=tuple(trace))


def _rolls(pool: OrderPool, decreasing: bool) -> list[str]:
    ids = _by_width(pool, pool.ids) if decreasing else pool.ids
    return [oid for oid in ids for _ in range(pool[oid].count)]


def _pack(pool: OrderPool, algorithm: str, decreasing: bool) -> SolveResult:
    pool.check_satisfiable()
    width = pool.effective_width
    reels: list[dict[str, int]] = []
    free: list[int] = []
    trace = []
    for oid in _rolls(pool, decreasing):
        w = pool[oid].width
        fits = [k for k, r in enumerate(free) if r >= w]
        if not fits:
            reels.append({})
            free.append(width)
            k = len(reels) - 1
        elif algorithm == "first-fit":
            k = fits[0]
        else:
            k = min(fits, key=lambda i: (free[i], i))
        reels[k][oid] = reels[k].get(oid, 0) + 1
        free[k] -= w
        trace.append(f"roll {oid} ({w}) -> reel {k}")
    return make_result(patterns_from_slots(reels, pool), pool, algorithm, trace)


def first_fit(pool: OrderPool, decreasing: bool = False) -> SolveResult:
    """Place rolls one by one into the lowest-indexed reel that still fits.

    Rolls are taken in pool order, order by order. With ``decreasing`` they
    are taken widest first instead (first-fit decreasing).
    """
    return _pack(pool, "first-fit", decreasing)


def best_fit(pool: OrderPool, decreasing: bool = False) -> SolveResult:
    """Like :func:`first_fit` but choose the reel with the least sufficient residual."""
    return _pack(pool, "best-fit", decreasing)


def solve(pool: OrderPool, algorithm: str = "coupling", **kwargs) -> SolveResult:
    if algorithm == "coupling":
        return couple_orders(pool, **kwargs)
    if algorithm == "first-fit":
        return first_fit(pool, **kwargs)
    if algorithm == "best-fit":
        return best_fit(pool, **kwargs)
    if algorithm == "exact":
        from .exact import exact_min_reels

        return exact_min_reels(pool, **kwargs)
    raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
