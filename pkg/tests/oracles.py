"""Independent reference computations for the test suite.

Nothing here imports the solvers; the enumerator works on bare widths.
"""

import numpy as np

from reelcut import DeckleSpec, Order, OrderPool


def brute_min_reels(widths, capacity):
    """Fewest bins for ``widths`` by enumerating every set partition.

    No pruning and no ordering tricks: each item joins an existing block or
    starts a new one, so all Bell(n) partitions are visited.
    """
    best = len(widths)
    blocks = []

    def walk(k):
        nonlocal best
        if k == len(widths):
            if all(sum(b) <= capacity for b in blocks):
                best = min(best, len(blocks))
            return
        for b in blocks:
            b.append(widths[k])
            walk(k + 1)
            b.pop()
        blocks.append([widths[k]])
        walk(k + 1)
        blocks.pop()

    walk(0)
    return best if widths else 0


def pool_widths(pool):
    return [o.width for o in pool.orders for _ in range(o.count)]


def random_pool(rng: np.random.Generator, width=200, max_rolls=10) -> OrderPool:
    """Orders with widths uniform in [0.1 W, W] and counts 1..3, at most ``max_rolls`` rolls."""
    orders = []
    total = 0
    while True:
        count = int(rng.integers(1, 4))
        if total + count > max_rolls:
            break
        w = int(rng.integers(int(np.ceil(0.1 * width)), width + 1))
        orders.append(Order(f"O{len(orders) + 1}", w, count))
        total += count
        if rng.random() < 0.2:
            break
    return OrderPool(orders, DeckleSpec(width, 0, "cm"))
