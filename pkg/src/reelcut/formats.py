"""Reading order pools and writing/reading cutting schedules.

Pools come as CSV (``id,width,count[,weight]``, deckle given separately) or
as a JSON document carrying its own deckle block::

    {"deckle": {"nominal_width": 201, "trim_allowance": 1, "unit": "cm"},
     "orders": [{"id": "D1", "width": 55, "count": 6, "weight": 2035}, ...]}

Schedules are written as a plain-text table, as CSV, or as a JSON schedule
document that :func:`parse_schedule` reads back.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from typing import Any, Mapping

from .heuristics import SolveResult, make_result
from .model import (
    CutPattern,
    DeckleSpec,
    Order,
    OrderPool,
    Schedule,
    validate_schedule,
)

__all__ = [
    "PoolFormatError",
    "ScheduleFormatError",
    "ScheduleDocument",
    "parse_pool",
    "render_report",
    "render_pool",
    "parse_schedule",
]

POOL_FORMATS = ("csv", "structured")
REPORT_FORMATS = ("table", "structured", "csv")

_INTEGRAL = re.compile(r"^[+-]?\d+(\.0*)?$")
_NUMBER = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")


class PoolFormatError(ValueError):
    """Bad pool input; ``where`` names the line, record or field at fault."""

    def __init__(self, message: str, where: str | None = None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class ScheduleFormatError(ValueError):
    def __init__(self, message: str, path: str = "$"):
        self.path = path
        super().__init__(f"{path}: {message}")


def _decode(text: bytes | str) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise PoolFormatError(f"input is not UTF-8 ({exc.reason} at byte {exc.start})")
    return text


def _int_field(value: Any, name: str, where: str) -> int:
    if isinstance(value, bool):
        raise PoolFormatError(f"{name} must be an integer, got {value!r}", where)
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if value.is_integer():
            return int(value)
        raise PoolFormatError(f"{name} must be a whole number, got {value!r}", where)
    if isinstance(value, str) and _INTEGRAL.match(value.strip()):
        return int(value.strip().split(".")[0])
    raise PoolFormatError(f"{name} must be a whole number, got {value!r}", where)


def _weight_field(value: Any, where: str) -> float | None:
    if value is None or value == "":
        return None
    if isinstance(value, str):
        if not _NUMBER.match(value.strip()):
            raise PoolFormatError(f"weight must be a plain decimal number, got {value!r}", where)
        value = float(value)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise PoolFormatError(f"weight must be a number, got {value!r}", where)
    if value < 0:
        raise PoolFormatError(f"weight must be non-negative, got {value!r}", where)
    return float(value)


def _order(raw_id: Any, width: Any, count: Any, weight: Any, where: str) -> Order:
    if isinstance(raw_id, bool) or not isinstance(raw_id, (str, int)) or str(raw_id).strip() == "":
        raise PoolFormatError(f"id must be a non-empty string or integer, got {raw_id!r}", where)
    oid = str(raw_id).strip()
    w = _int_field(width, "width", where)
    if w <= 0:
        raise PoolFormatError(f"width must be positive, got {w}", where)
    n = _int_field(count, "count", where)
    if n < 1:
        raise PoolFormatError(f"count must be at least 1, got {n}", where)
    return Order(oid, w, n, _weight_field(weight, where))


def _build_pool(orders: list[Order], deckle: DeckleSpec, wheres: list[str]) -> OrderPool:
    if not orders:
        raise PoolFormatError("pool must contain at least one order")
    seen: dict[str, str] = {}
    for order, where in zip(orders, wheres):
        if order.id in seen:
            raise PoolFormatError(f"duplicate order id {order.id!r} (first seen at {seen[order.id]})", where)
        seen[order.id] = where
    return OrderPool(orders, deckle)


def _parse_csv(text: str, deckle: DeckleSpec | None) -> OrderPool:
    if deckle is None:
        raise PoolFormatError("CSV pools need the deckle width supplied separately")
    rows = list(csv.reader(io.StringIO(text, newline="")))
    if not rows:
        raise PoolFormatError("empty input, expected a header row", "line 1")
    header = [h.strip() for h in rows[0]]
    if header not in (["id", "width", "count"], ["id", "width", "count", "weight"]):
        raise PoolFormatError(
            f"header must be 'id,width,count' or 'id,width,count,weight', got {','.join(rows[0])!r}",
            "line 1",
        )
    orders, wheres = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        where = f"line {lineno}"
        if len(row) != len(header):
            raise PoolFormatError(f"expected {len(header)} fields, got {len(row)}", where)
        weight = row[3] if len(row) == 4 else None
        orders.append(_order(row[0], row[1], row[2], weight, where))
        wheres.append(where)
    return _build_pool(orders, deckle, wheres)


def _check_keys(obj: Mapping, allowed: set[str], required: set[str], where: str, error=PoolFormatError):
    unknown = set(obj) - allowed
    if unknown:
        raise error(f"unknown field(s) {sorted(unknown)}", where)
    missing = required - set(obj)
    if missing:
        raise error(f"missing field(s) {sorted(missing)}", where)


def _load_json(text: str, error):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        if error is PoolFormatError:
            raise PoolFormatError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
        raise ScheduleFormatError(f"{exc.msg} (line {exc.lineno} column {exc.colno})") from None


def _parse_structured(text: str) -> OrderPool:
    doc = _load_json(text, PoolFormatError)
    if not isinstance(doc, dict):
        raise PoolFormatError("pool document must be a JSON object")
    _check_keys(doc, {"deckle", "orders"}, {"deckle", "orders"}, "document")
    raw = doc["deckle"]
    if not isinstance(raw, dict):
        raise PoolFormatError("must be an object", "deckle")
    _check_keys(raw, {"nominal_width", "trim_allowance", "unit"}, {"nominal_width", "unit"}, "deckle")
    try:
        deckle = DeckleSpec(
            _int_field(raw["nominal_width"], "nominal_width", "deckle"),
            _int_field(raw.get("trim_allowance", 0), "trim_allowance", "deckle"),
            raw["unit"],
        )
    except ValueError as exc:
        if isinstance(exc, PoolFormatError):
            raise
        raise PoolFormatError(str(exc), "deckle") from None
    if not isinstance(doc["orders"], list):
        raise PoolFormatError("must be a list", "orders")
    orders, wheres = [], []
    for k, rec in enumerate(doc["orders"]):
        where = f"orders[{k}]"
        if not isinstance(rec, dict):
            raise PoolFormatError("order record must be an object", where)
        _check_keys(rec, {"id", "width", "count", "weight"}, {"id", "width", "count"}, where)
        orders.append(_order(rec["id"], rec["width"], rec["count"], rec.get("weight"), where))
        wheres.append(where)
    return _build_pool(orders, deckle, wheres)


def parse_pool(text: bytes | str, format: str = "structured", deckle: DeckleSpec | None = None) -> OrderPool:
    """Parse an order pool.

    ``format`` is ``"csv"`` or ``"structured"`` (JSON). CSV input needs
    ``deckle``; a JSON document brings its own and ``deckle`` must be None.
    Malformed input raises :class:`PoolFormatError` naming the line or record.
    """
    text = _decode(text)
    if format == "csv":
        return _parse_csv(text, deckle)
    if format == "structured":
        if deckle is not None:
            raise PoolFormatError("structured pools carry their own deckle")
        return _parse_structured(text)
    raise ValueError(f"unknown pool format {format!r}; choose from {POOL_FORMATS}")


def render_pool(pool: OrderPool, format: str = "structured") -> str:
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        has_weight = any(o.weight is not None for o in pool.orders)
        writer.writerow(["id", "width", "count"] + (["weight"] if has_weight else []))
        for o in pool.orders:
            row = [o.id, o.width, o.count]
            if has_weight:
                row.append("" if o.weight is None else f"{o.weight:g}")
            writer.writerow(row)
        return buf.getvalue()
    d = pool.deckle
    orders = []
    for o in pool.orders:
        rec = {"id": o.id, "width": o.width, "count": o.count}
        if o.weight is not None:
            rec["weight"] = o.weight
        orders.append(rec)
    doc = {
        "deckle": {"nominal_width": d.nominal_width, "trim_allowance": d.trim_allowance, "unit": d.unit},
        "orders": orders,
    }
    return json.dumps(doc, indent=2) + "\n"


# -- schedules ---------------------------------------------------------------


def pattern_label(pattern: CutPattern) -> str:
    """Name a pattern the way a cutting sheet does: ``D6 (9) + D10 (9) + D10 (9)``."""
    return " + ".join(
        f"{oid} ({pattern.reels})" for oid, m in pattern.composition.items() for _ in range(m)
    )


def _document(result: SolveResult) -> dict:
    m = result.metrics
    return {
        "algorithm": result.algorithm,
        "patterns": [
            {"composition": dict(p.composition), "reels": p.reels, "waste_per_reel": p.waste_per_reel}
            for p in result.patterns
        ],
        "totals": {
            "used_reels": m.used_reels,
            "trim_loss": m.trim_loss,
            "demand_width": m.demand_width,
            "lower_bound_reels": m.lower_bound_reels,
        },
    }


def _render_table(result: SolveResult, pool: OrderPool) -> str:
    headers = ("Paired Orders", "Rolls Required", "Waste per Roll", "Total Waste")
    rows = [
        (pattern_label(p), str(p.reels), str(p.waste_per_reel), str(p.total_waste))
        for p in result.patterns
    ]
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(headers)]

    def line(cells):
        first = cells[0].ljust(widths[0])
        rest = (c.rjust(w) for c, w in zip(cells[1:], widths[1:]))
        return "  ".join([first, *rest]).rstrip()

    m = result.metrics
    out = [line(headers), "  ".join("-" * w for w in widths)]
    out += [line(r) for r in rows]
    out.append("")
    out.append(f"{m.used_reels} reels, {m.trim_loss} waste ({pool.deckle.unit})")
    out.append(f"lower bound {m.lower_bound_reels} reels, demand width {m.demand_width}, "
               f"effective width {pool.effective_width}, algorithm {result.algorithm}")
    return "\n".join(out) + "\n"


def _render_csv(result: SolveResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["algorithm", "composition", "reels", "waste_per_reel", "total_waste"])
    for p in result.patterns:
        comp = ";".join(f"{oid}:{m}" for oid, m in p.composition.items())
        writer.writerow([result.algorithm, comp, p.reels, p.waste_per_reel, p.total_waste])
    return buf.getvalue()


def render_report(result: SolveResult, pool: OrderPool, format: str = "table") -> str:
    """Render a solver result as ``table``, ``structured`` (JSON) or ``csv`` text.

    The result must describe a valid, non-empty schedule for ``pool``.
    """
    if not result.patterns:
        raise ValueError("cannot render a result without patterns")
    report = validate_schedule(result.schedule, pool)
    if not report.valid:
        raise ValueError("cannot render an invalid schedule: " + "; ".join(map(str, report.violations)))
    if format == "table":
        return _render_table(result, pool)
    if format == "structured":
        return json.dumps(_document(result), indent=2) + "\n"
    if format == "csv":
        return _render_csv(result)
    raise ValueError(f"unknown report format {format!r}; choose from {REPORT_FORMATS}")


@dataclass(frozen=True)
class ScheduleDocument:
    """A parsed schedule document: algorithm tag and (composition, reels) rows.

    Stored totals and per-reel waste are dropped; they are recomputed from a
    pool by :meth:`patterns` and :meth:`to_result`.
    """

    algorithm: str
    rows: tuple[tuple[Mapping[str, int], int], ...]

    @property
    def schedule(self) -> Schedule:
        """Expand to slots without checking ids, for validation of foreign schedules."""
        return Schedule(tuple(comp for comp, reels in self.rows for _ in range(reels)))

    def patterns(self, pool: OrderPool) -> list[CutPattern]:
        return [CutPattern.build(comp, reels, pool) for comp, reels in self.rows]

    def to_result(self, pool: OrderPool) -> SolveResult:
        return make_result(self.patterns(pool), pool, self.algorithm)


def _positive_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ScheduleFormatError(f"must be an integer >= 1, got {value!r}", path)
    return value


def parse_schedule(text: bytes | str) -> ScheduleDocument:
    """Read a JSON schedule document as written by ``render_report(..., "structured")``."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ScheduleFormatError(f"input is not UTF-8 ({exc.reason})") from None
    doc = _load_json(text, ScheduleFormatError)
    if not isinstance(doc, dict):
        raise ScheduleFormatError("schedule document must be a JSON object")
    _check_keys(doc, {"algorithm", "patterns", "totals"}, {"algorithm", "patterns"}, "$",
                ScheduleFormatError)
    if not isinstance(doc["algorithm"], str):
        raise ScheduleFormatError("must be a string", "$.algorithm")
    if not isinstance(doc["patterns"], list):
        raise ScheduleFormatError("must be a list", "$.patterns")
    if "totals" in doc and not isinstance(doc["totals"], dict):
        raise ScheduleFormatError("must be an object", "$.totals")
    rows = []
    for k, pat in enumerate(doc["patterns"]):
        path = f"$.patterns[{k}]"
        if not isinstance(pat, dict):
            raise ScheduleFormatError("must be an object", path)
        _check_keys(pat, {"composition", "reels", "waste_per_reel"}, {"composition", "reels"}, path,
                    ScheduleFormatError)
        comp = pat["composition"]
        if not isinstance(comp, dict) or not comp:
            raise ScheduleFormatError("must be a non-empty object", path + ".composition")
        composition = {
            oid: _positive_int(m, f"{path}.composition.{oid}") for oid, m in comp.items()
        }
        rows.append((composition, _positive_int(pat["reels"], path + ".reels")))
    return ScheduleDocument(doc["algorithm"], tuple(rows))
