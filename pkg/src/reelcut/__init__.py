"""Cutting schedules for slitting jumbo paper reels into customer rolls."""

from .exact import InstanceTooLargeError, exact_min_reels
from .heuristics import (
    ALGORITHMS,
    ClassifiedPool,
    SolveResult,
    best_fill,
    best_fit,
    classify_pool,
    couple_orders,
    first_fit,
    solve,
)
from .model import (
    CutPattern,
    DeckleSpec,
    Order,
    OrderPool,
    Schedule,
    ScheduleMetrics,
    UnsatisfiableOrderError,
    ValidationReport,
    Violation,
    lower_bound_reels,
    schedule_from_patterns,
    total_demand_width,
    trim_loss,
    validate_schedule,
)

__version__ = "0.1.0"
