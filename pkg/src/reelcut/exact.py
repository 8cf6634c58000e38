"""Exhaustive minimum-reel search for small pools.

Used as a ground truth for the heuristics, not as a production solver: the
search is exponential and refuses pools with more than ``MAX_ROLLS`` rolls.
"""

from __future__ import annotations

from .heuristics import SolveResult, first_fit, make_result
from .model import OrderPool, patterns_from_slots

MAX_ROLLS = 12
DEFAULT_BUDGET = 2_000_000


class InstanceTooLargeError(ValueError):
    pass


def exact_min_reels(pool: OrderPool, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimise the number of reels by depth-first search over roll placements.

    Rolls go widest first. Each roll is placed in an open reel or opens the
    next one; open reels with equal free width are interchangeable, so only
    the first of them is tried. A branch is cut when the reels already open
    plus the reels needed for the overflow cannot beat the incumbent.

    For a demand-exact schedule the trim loss is ``reels * width - demand``,
    so the fewest reels is also the least trim loss.

    If ``budget`` nodes are visited before the search completes, the best
    schedule found so far is returned with ``proven=False``.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    pool.check_satisfiable()
    total = pool.total_rolls()
    if total > MAX_ROLLS:
        raise InstanceTooLargeError(
            f"exact search is limited to {MAX_ROLLS} rolls, pool has {total}"
        )

    width = pool.effective_width
    ids = sorted(pool.ids, key=lambda oid: (-pool[oid].width, pool.position(oid)))
    rolls = [oid for oid in ids for _ in range(pool[oid].count)]
    widths = [pool[oid].width for oid in rolls]
    # width still to place from roll k onwards
    tail = [0] * (len(rolls) + 1)
    for k in range(len(rolls) - 1, -1, -1):
        tail[k] = tail[k + 1] + widths[k]

    incumbent = first_fit(pool, decreasing=True)
    best_count = incumbent.used_reels
    best_slots = [dict(s) for s in incumbent.schedule.slots]

    reels: list[dict[str, int]] = []
    free: list[int] = []
    nodes = 0
    exhausted = False

    def search(k: int) -> None:
        nonlocal nodes, exhausted, best_count, best_slots
        if exhausted:
            return
        nodes += 1
        if nodes > budget:
            exhausted = True
            return
        if k == len(rolls):
            if len(reels) < best_count:
                best_count = len(reels)
                best_slots = [dict(r) for r in reels]
            return
        overflow = tail[k] - sum(free)
        need = len(reels) + (-(-overflow // width) if overflow > 0 else 0)
        if need >= best_count:
            return
        oid, w = rolls[k], widths[k]
        tried = set()
        for i in range(len(reels)):
            if free[i] < w or free[i] in tried:
                continue
            tried.add(free[i])
            reels[i][oid] = reels[i].get(oid, 0) + 1
            free[i] -= w
            search(k + 1)
            free[i] += w
            reels[i][oid] -= 1
            if not reels[i][oid]:
                del reels[i][oid]
        if len(reels) + 1 < best_count:
            reels.append({oid: 1})
            free.append(width - w)
            search(k + 1)
            reels.pop()
            free.pop()

    search(0)
    return make_result(
        patterns_from_slots(best_slots, pool),
        pool,
        "exact",
        trace=[f"nodes visited: {min(nodes, budget)}"],
        proven=not exhausted,
    )
