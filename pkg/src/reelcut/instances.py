"""The two reference order pools used throughout the tests and demos.

``table1`` is the 10-order pool on a 201 cm deckle of which 1 cm is lost to
edge trimming. ``table2`` is the 18-order pool on a 2500 mm deckle. Its
order D10 is sometimes listed at 11120 mm, which cannot fit the deckle;
every pairing that uses it implies 1120 mm, which is what is used here.
"""

from .model import DeckleSpec, Order, OrderPool

TABLE1_ROWS = [
    # id, width (cm), weight (kg), rolls
    ("D1", 55, 2035, 6),
    ("D2", 145, 5365, 6),
    ("D3", 50, 2267, 8),
    ("D4", 150, 1125, 2),
    ("D5", 135, 5108, 6),
    ("D6", 80, 5386, 12),
    ("D7", 105, 4030, 6),
    ("D8", 90, 2842, 5),
    ("D9", 100, 3158, 5),
    ("D10", 55, 8137, 24),
]

TABLE2_ROWS = [
    # id, width (mm), rolls
    ("D1", 1470, 7),
    ("D2", 1030, 20),
    ("D3", 1450, 24),
    ("D4", 1050, 12),
    ("D5", 1080, 11),
    ("D6", 1410, 11),
    ("D7", 1400, 12),
    ("D8", 1100, 11),
    ("D9", 1370, 7),
    ("D10", 1120, 21),
    ("D11", 1150, 9),
    ("D12", 1350, 9),
    ("D13", 1330, 14),
    ("D14", 1180, 9),
    ("D15", 1300, 9),
    ("D16", 1250, 27),
    ("D17", 950, 17),
    ("D18", 1550, 17),
]


def table1() -> OrderPool:
    orders = [Order(i, w, r, weight=float(kg)) for i, w, kg, r in TABLE1_ROWS]
    return OrderPool(orders, DeckleSpec(201, 1, "cm"))


def table2() -> OrderPool:
    orders = [Order(i, w, r) for i, w, r in TABLE2_ROWS]
    return OrderPool(orders, DeckleSpec(2500, 0, "mm"))
