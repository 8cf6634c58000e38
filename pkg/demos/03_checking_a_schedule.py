"""
Checking a hand-written schedule
================================

A planner's cutting sheet is checked for reel capacity, empty reels and
exact roll counts, and shown as the 0/1 assignment and roll-count matrices.
"""

import json

import numpy as np

from reelcut import validate_schedule
from reelcut.formats import parse_schedule
from reelcut.instances import table1

pool = table1()

sheet = {
    "algorithm": "planner",
    "patterns": [
        {"composition": {"D4": 1, "D3": 1}, "reels": 2},
        {"composition": {"D2": 1, "D1": 1}, "reels": 6},
        {"composition": {"D5": 1, "D10": 1}, "reels": 6},
        {"composition": {"D7": 1, "D8": 1}, "reels": 5},
        {"composition": {"D7": 1, "D6": 1}, "reels": 1},
        {"composition": {"D9": 2}, "reels": 2},
        {"composition": {"D9": 1, "D3": 2}, "reels": 1},
        {"composition": {"D6": 1, "D10": 2}, "reels": 9},
        # last reel swaps a D3 roll for a D6 roll: one reel overloaded, both counts off
        {"composition": {"D6": 1, "D3": 2}, "reels": 1},
        {"composition": {"D6": 2, "D3": 1}, "reels": 1},
    ],
}
doc = parse_schedule(json.dumps(sheet))

# %% every violation is listed, with its size
for v in validate_schedule(doc.schedule, pool).violations:
    print(v)

# %% the assignment matrices: one row per reel, one column per order
y, r = doc.schedule.as_matrices(pool)
widths = np.array([o.width for o in pool.orders])
print("orders per reel :", y.sum(axis=1))
print("width per reel  :", r @ widths)
print("rolls per order :", r.sum(axis=0))
print("ordered         :", np.array([o.count for o in pool.orders]))
