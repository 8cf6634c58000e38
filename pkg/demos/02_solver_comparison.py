"""
Coupling against first-fit, best-fit and the exhaustive search
==============================================================

On the reference pools, then on a batch of random small pools where the
exhaustive search gives the true minimum.
"""

import numpy as np

from reelcut import DeckleSpec, Order, OrderPool, best_fit, couple_orders, exact_min_reels, first_fit
from reelcut.instances import table1, table2

# %% reference pools
for name, pool in [("table 1", table1()), ("table 2", table2())]:
    for solver in (couple_orders, first_fit, best_fit):
        r = solver(pool)
        print(f"{name:8} {r.algorithm:10} {r.used_reels:4d} reels  trim loss {r.trim_loss}")
    # rolls taken widest first instead of in pool order
    r = first_fit(pool, decreasing=True)
    print(f"{name:8} {'ffd':10} {r.used_reels:4d} reels  trim loss {r.trim_loss}")

# %% random pools: widths uniform in [0.1 W, W], 1-3 rolls per order, at most 10 rolls
rng = np.random.default_rng(1)
W = 1000
gaps = {"coupling": [], "first-fit": [], "best-fit": []}
for _ in range(300):
    orders, total = [], 0
    while total < 10:
        n = int(rng.integers(1, 4))
        if total + n > 10:
            break
        orders.append(Order(f"O{len(orders)}", int(rng.integers(W // 10, W + 1)), n))
        total += n
    pool = OrderPool(orders, DeckleSpec(W, 0, "mm"))
    best = exact_min_reels(pool).used_reels
    for solver in (couple_orders, first_fit, best_fit):
        r = solver(pool)
        gaps[r.algorithm].append(r.used_reels - best)

# %% reels above the optimum, as a histogram per solver
for name, g in gaps.items():
    g = np.asarray(g)
    counts = np.bincount(g)
    print(f"{name:10} optimal on {np.mean(g == 0):.0%} of pools, extra reels histogram {counts.tolist()}")
