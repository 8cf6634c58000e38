"""
Coupling wide and narrow orders on the two reference pools
===========================================================

Splits each pool at half the deckle, builds the cutting sheet and compares
it with the lower bound ceil(demand / width).
"""

from reelcut import classify_pool, couple_orders, lower_bound_reels, total_demand_width
from reelcut.formats import render_report
from reelcut.instances import table1, table2

# %% 10 orders on a 201 cm deckle, 1 cm lost to edge trim -> 200 cm usable
pool = table1()
classes = classify_pool(pool)
print("wide  :", [oid for oid, _ in classes.wide])
print("narrow:", [oid for oid, _ in classes.narrow])  # D9 is exactly half width, so narrow

result = couple_orders(pool)
print(render_report(result, pool))

# demand of 6570 cm needs at least 33 reels; one reel more is spent
print("demand", total_demand_width(pool), "bound", lower_bound_reels(pool))

# %% the construction, step by step
for line in result.trace:
    print(line)

# %% 18 orders on a 2500 mm deckle
pool = table2()
result = couple_orders(pool)
print(render_report(result, pool))
# the last reel carries a single 1250 mm roll; that half reel is reusable stock
print("largest residual:", result.metrics.reusable_hint)
