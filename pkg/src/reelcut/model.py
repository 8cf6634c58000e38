"""Orders, pools, cutting patterns and schedules for jumbo-reel slitting.

A schedule is a list of slots, one per jumbo-reel cut. Each slot maps order
ids to the number of rolls of that order slit from the reel. Presence of an
id in a slot is the binary "order is cut in this slot" decision; the value is
the integer roll count. All widths are integers in the pool's length unit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "Order",
    "DeckleSpec",
    "OrderPool",
    "CutPattern",
    "Schedule",
    "ScheduleMetrics",
    "Violation",
    "ValidationReport",
    "UnsatisfiableOrderError",
    "total_demand_width",
    "lower_bound_reels",
    "trim_loss",
    "validate_schedule",
    "schedule_from_patterns",
]

UNITS = ("cm", "mm")


class UnsatisfiableOrderError(ValueError):
    """An order is wider than the usable deckle width."""

    def __init__(self, order: "Order", effective_width: int):
        self.order = order
        self.effective_width = effective_width
        super().__init__(
            f"order {order.id!r} has width {order.width}, wider than the "
            f"effective deckle width {effective_width}"
        )


@dataclass(frozen=True)
class Order:
    id: str
    width: int
    count: int
    weight: float | None = None  # kg, carried but never used

    def __post_init__(self):
        if not isinstance(self.width, int) or self.width <= 0:
            raise ValueError(f"order {self.id!r}: width must be a positive integer, got {self.width!r}")
        if not isinstance(self.count, int) or self.count < 1:
            raise ValueError(f"order {self.id!r}: count must be an integer >= 1, got {self.count!r}")
        if self.weight is not None and self.weight < 0:
            raise ValueError(f"order {self.id!r}: weight must be non-negative, got {self.weight!r}")


@dataclass(frozen=True)
class DeckleSpec:
    nominal_width: int
    trim_allowance: int = 0
    unit: str = "cm"

    def __post_init__(self):
        if self.nominal_width <= 0:
            raise ValueError(f"nominal width must be positive, got {self.nominal_width}")
        if not 0 <= self.trim_allowance < self.nominal_width:
            raise ValueError(
                f"trim allowance must lie in [0, {self.nominal_width}), got {self.trim_allowance}"
            )
        if self.unit not in UNITS:
            raise ValueError(f"unit must be one of {UNITS}, got {self.unit!r}")

    @property
    def effective_width(self) -> int:
        return self.nominal_width - self.trim_allowance


@dataclass(frozen=True)
class OrderPool:
    """The demand pool: orders in a significant sequence plus the deckle.

    The sequence of ``orders`` is the tie-break basis for every solver, so
    two pools holding the same orders in different sequences are different
    pools.
    """

    orders: tuple[Order, ...]
    deckle: DeckleSpec

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(self.orders))
        seen = set()
        for order in self.orders:
            if order.id in seen:
                raise ValueError(f"duplicate order id {order.id!r}")
            seen.add(order.id)
        object.__setattr__(self, "_index", {o.id: i for i, o in enumerate(self.orders)})

    @property
    def effective_width(self) -> int:
        return self.deckle.effective_width

    def __len__(self) -> int:
        return len(self.orders)

    def __contains__(self, order_id) -> bool:
        return order_id in self._index

    def __getitem__(self, order_id: str) -> Order:
        return self.orders[self._index[order_id]]

    def position(self, order_id: str) -> int:
        return self._index[order_id]

    @property
    def ids(self) -> list[str]:
        return [o.id for o in self.orders]

    def total_rolls(self) -> int:
        return sum(o.count for o in self.orders)

    def check_satisfiable(self) -> None:
        """Raise :class:`UnsatisfiableOrderError` for the first order that cannot fit a reel."""
        for order in self.orders:
            if order.width > self.effective_width:
                raise UnsatisfiableOrderError(order, self.effective_width)


def _freeze(mapping: Mapping[str, int]) -> Mapping[str, int]:
    return MappingProxyType(dict(mapping))


@dataclass(frozen=True)
class CutPattern:
    """One reel layout repeated ``reels`` times.

    ``waste_per_reel`` is derived from the pool; use :meth:`build` to make
    a pattern rather than trusting a stored figure.
    """

    composition: Mapping[str, int]
    reels: int
    waste_per_reel: int

    def __post_init__(self):
        object.__setattr__(self, "composition", _freeze(self.composition))
        if not self.composition:
            raise ValueError("a cut pattern must contain at least one order")
        for oid, mult in self.composition.items():
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f"multiplicity of {oid!r} must be an integer >= 1, got {mult!r}")
        if not isinstance(self.reels, int) or self.reels < 1:
            raise ValueError(f"reels must be an integer >= 1, got {self.reels!r}")

    @classmethod
    def build(cls, composition: Mapping[str, int], reels: int, pool: OrderPool) -> "CutPattern":
        used = sum(pool[oid].width * m for oid, m in composition.items())
        return cls(composition, reels, pool.effective_width - used)

    def used_width(self, pool: OrderPool) -> int:
        return sum(pool[oid].width * m for oid, m in self.composition.items())

    def rolls(self) -> int:
        return sum(self.composition.values())

    @property
    def total_waste(self) -> int:
        return self.waste_per_reel * self.reels

    def __repr__(self):
        parts = " + ".join(f"{k}x{v}" if v > 1 else k for k, v in self.composition.items())
        return f"CutPattern({parts}, reels={self.reels}, waste={self.waste_per_reel})"


@dataclass(frozen=True)
class Schedule:
    """Ordered slots; each slot maps order id to rolls cut from that reel."""

    slots: tuple[Mapping[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(_freeze(s) for s in self.slots))

    def __len__(self) -> int:
        return len(self.slots)

    @property
    def used_reels(self) -> int:
        return len(self.slots)

    def rolls_of(self, order_id: str) -> int:
        return sum(slot.get(order_id, 0) for slot in self.slots)

    def as_matrices(self, pool: OrderPool) -> tuple[np.ndarray, np.ndarray]:
        """Return the (Y, R) decision matrices, shape ``(slots, orders)``.

        ``Y`` is 0/1 and ``R`` holds roll counts; columns follow pool order.
        Ids missing from the pool raise ``KeyError``.
        """
        y = np.zeros((len(self.slots), len(pool)), dtype=np.int8)
        r = np.zeros((len(self.slots), len(pool)), dtype=np.int64)
        for i, slot in enumerate(self.slots):
            for oid, n in slot.items():
                j = pool.position(oid)
                y[i, j] = 1
                r[i, j] = n
        return y, r


@dataclass(frozen=True)
class ScheduleMetrics:
    demand_width: int
    lower_bound_reels: int
    used_reels: int
    trim_loss: int
    per_slot_waste: tuple[int, ...]
    reusable_hint: int | None = None


@dataclass(frozen=True)
class Violation:
    constraint: str  # "capacity" | "non-empty-slot" | "demand-exact" | "unknown-order"
    where: int | str  # slot index or order id
    magnitude: int

    def __str__(self):
        loc = f"slot {self.where}" if isinstance(self.where, int) else f"order {self.where!r}"
        return f"{self.constraint}: {loc}, magnitude {self.magnitude}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid

    def of(self, constraint: str) -> list[Violation]:
        return [v for v in self.violations if v.constraint == constraint]


def total_demand_width(pool: OrderPool) -> int:
    """Total width to cut: sum of count * width over all orders."""
    return sum(o.count * o.width for o in pool.orders)


def lower_bound_reels(pool: OrderPool) -> int:
    """Fewest reels that could possibly hold the demand, ``ceil(W^d / W)``."""
    pool.check_satisfiable()
    return math.ceil(total_demand_width(pool) / pool.effective_width)


def trim_loss(schedule: Schedule, pool: OrderPool) -> ScheduleMetrics:
    """Per-slot residuals and their sum.

    Overfull slots give negative residuals; they are kept as they are and
    left for :func:`validate_schedule` to flag.
    """
    width = pool.effective_width
    waste = tuple(
        width - sum(pool[oid].width * n for oid, n in slot.items()) for slot in schedule.slots
    )
    demand = total_demand_width(pool)
    return ScheduleMetrics(
        demand_width=demand,
        lower_bound_reels=math.ceil(demand / width),
        used_reels=len(schedule.slots),
        trim_loss=sum(waste),
        per_slot_waste=waste,
        reusable_hint=max(waste) if waste else None,
    )


def validate_schedule(schedule: Schedule, pool: OrderPool) -> ValidationReport:
    """Check capacity, non-empty slots and exact demand; collect every violation."""
    violations = []
    width = pool.effective_width
    for i, slot in enumerate(schedule.slots):
        if not slot:
            violations.append(Violation("non-empty-slot", i, 1))
            continue
        used = 0
        for oid, n in slot.items():
            if oid not in pool:
                violations.append(Violation("unknown-order", oid, n))
                continue
            used += pool[oid].width * n
        if used > width:
            violations.append(Violation("capacity", i, used - width))
    for order in pool.orders:
        cut = schedule.rolls_of(order.id)
        if cut != order.count:
            violations.append(Violation("demand-exact", order.id, abs(cut - order.count)))
    return ValidationReport(tuple(violations))


def schedule_from_patterns(patterns: Iterable[CutPattern], pool: OrderPool) -> Schedule:
    """Expand patterns into one slot per reel, keeping pattern order."""
    slots = []
    for pattern in patterns:
        for oid in pattern.composition:
            if oid not in pool:
                raise KeyError(f"pattern references unknown order id {oid!r}")
        slots.extend([pattern.composition] * pattern.reels)
    return Schedule(tuple(slots))


def patterns_from_slots(slots: Sequence[Mapping[str, int]], pool: OrderPool) -> list[CutPattern]:
    """Group runs of identical consecutive slots into patterns."""
    patterns: list[CutPattern] = []
    for slot in slots:
        if patterns and dict(patterns[-1].composition) == dict(slot):
            last = patterns[-1]
            patterns[-1] = CutPattern(last.composition, last.reels + 1, last.waste_per_reel)
        else:
            patterns.append(CutPattern.build(slot, 1, pool))
    return patterns
