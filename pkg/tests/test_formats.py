import json

import pytest

from reelcut import DeckleSpec, couple_orders, first_fit, total_demand_width, validate_schedule
from reelcut.formats import (
    PoolFormatError,
    ScheduleFormatError,
    parse_pool,
    parse_schedule,
    render_pool,
    render_report,
)

CM200 = DeckleSpec(201, 1, "cm")


class TestParsePool:
    def test_table1_csv(self, data_dir, pool1):
        pool = parse_pool((data_dir / "table1.csv").read_bytes(), "csv", CM200)
        assert len(pool) == 10
        assert total_demand_width(pool) == 6570
        assert pool == pool1

    def test_table2_json(self, data_dir, pool2):
        assert parse_pool((data_dir / "table2.json").read_bytes()) == pool2

    def test_decimal_widths_and_crlf(self):
        pool = parse_pool(b"id,width,count\r\nD1,55.0,6\r\nD2,145.00,6\r\n", "csv", CM200)
        assert [o.width for o in pool.orders] == [55, 145]

    def test_fractional_width_rejected(self):
        with pytest.raises(PoolFormatError, match="line 2"):
            parse_pool(b"id,width,count\nD1,55.5,6\n", "csv", CM200)

    def test_zero_width_names_record(self):
        with pytest.raises(PoolFormatError) as exc:
            parse_pool(b"id,width,count\nD1,55,6\nD2,0,3\n", "csv", CM200)
        assert exc.value.where == "line 3"
        assert "width" in str(exc.value)

    def test_empty_orders(self):
        with pytest.raises(PoolFormatError, match="pool must contain at least one order"):
            parse_pool(b"id,width,count\n", "csv", CM200)
        doc = {"deckle": {"nominal_width": 200, "unit": "cm"}, "orders": []}
        with pytest.raises(PoolFormatError, match="pool must contain at least one order"):
            parse_pool(json.dumps(doc))

    @pytest.mark.parametrize("text", [
        b"id,width\nD1,55\n",
        b"ID,Width,Count\nD1,55,1\n",
        b"id,width,count\nD1,55\n",
        b"id,width,count\nD1,55,0\n",
        b"id,width,count\nD1,55,1\nD1,60,2\n",
        b"id,width,count,weight\nD1,55,1,-3\n",
        b"id,width,count\nD1,5 5,1\n",
        b"id,width,count\nD1,55,1e1\n",
        b"\xff\xfe",
    ])
    def test_bad_csv(self, text):
        with pytest.raises(PoolFormatError):
            parse_pool(text, "csv", CM200)

    def test_csv_needs_deckle(self):
        with pytest.raises(PoolFormatError):
            parse_pool(b"id,width,count\nD1,55,1\n", "csv")

    @pytest.mark.parametrize("doc", [
        {"deckle": {"nominal_width": 200, "unit": "cm"}, "orders": [{"id": "a", "width": 5, "count": 1}], "x": 1},
        {"deckle": {"nominal_width": 200, "unit": "cm", "colour": "white"}, "orders": [{"id": "a", "width": 5, "count": 1}]},
        {"deckle": {"nominal_width": 200, "unit": "cm"}, "orders": [{"id": "a", "width": 5, "count": 1, "gsm": 80}]},
        {"deckle": {"nominal_width": 200, "unit": "in"}, "orders": [{"id": "a", "width": 5, "count": 1}]},
        {"deckle": {"nominal_width": 200, "unit": "cm"}, "orders": [{"id": "a", "width": True, "count": 1}]},
        {"deckle": {"nominal_width": 200, "unit": "cm"}, "orders": [{"id": "a", "count": 1}]},
        [],
    ])
    def test_bad_structured(self, doc):
        with pytest.raises(PoolFormatError):
            parse_pool(json.dumps(doc))

    def test_json_syntax_error_has_position(self):
        with pytest.raises(PoolFormatError) as exc:
            parse_pool(b'{"deckle": {\n  "nominal_width": 2500,,}')
        assert exc.value.where.startswith("line 2 column")

    def test_integer_ids_become_strings(self):
        doc = {"deckle": {"nominal_width": 200, "trim_allowance": 0, "unit": "mm"},
               "orders": [{"id": 1, "width": 50, "count": 2}]}
        assert parse_pool(json.dumps(doc)).ids == ["1"]

    @pytest.mark.parametrize("fmt", ["csv", "structured"])
    def test_pool_round_trip(self, pool1, fmt):
        text = render_pool(pool1, fmt)
        deckle = pool1.deckle if fmt == "csv" else None
        assert parse_pool(text, fmt, deckle) == pool1


class TestRender:
    def test_table1_table(self, pool1):
        text = render_report(couple_orders(pool1), pool1, "table")
        lines = text.splitlines()
        assert lines[0].split("  ")[0] == "Paired Orders"
        data = lines[2:lines.index("")]
        assert len(data) == 9
        assert data[0].split() == ["D4", "(2)", "+", "D3", "(2)", "2", "0", "0"]
        assert "34 reels, 230 waste (cm)" in text
        assert "lower bound 33 reels" in text

    def test_table2_table(self, pool2):
        text = render_report(couple_orders(pool2), pool2, "table")
        data = text.splitlines()[2:text.splitlines().index("")]
        assert len(data) == 13
        assert data[-1].split() == ["D16", "(1)", "1", "1250", "1250"]
        assert "124 reels, 2620 waste (mm)" in text

    def test_structured_totals(self, pool1):
        doc = json.loads(render_report(couple_orders(pool1), pool1, "structured"))
        assert doc["totals"] == {"used_reels": 34, "trim_loss": 230, "demand_width": 6570, "lower_bound_reels": 33}
        assert doc["patterns"][7] == {"composition": {"D6": 1, "D10": 2}, "reels": 9, "waste_per_reel": 10}

    def test_csv(self, pool1):
        text = render_report(couple_orders(pool1), pool1, "csv")
        lines = text.splitlines()
        assert lines[0] == "algorithm,composition,reels,waste_per_reel,total_waste"
        assert lines[8] == "coupling,D6:1;D10:2,9,10,90"
        assert len(lines) == 10

    def test_formats_agree(self, pool2):
        result = couple_orders(pool2)
        doc = json.loads(render_report(result, pool2, "structured"))
        csv_rows = render_report(result, pool2, "csv").splitlines()[1:]
        assert len(csv_rows) == len(doc["patterns"])
        total = sum(int(r.split(",")[-1]) for r in csv_rows)
        assert total == doc["totals"]["trim_loss"] == 2620

    def test_rejects_empty_result(self, pool1):
        from reelcut.heuristics import make_result

        with pytest.raises(ValueError):
            render_report(make_result([], pool1, "coupling"), pool1)

    def test_unknown_format(self, pool1):
        with pytest.raises(ValueError):
            render_report(couple_orders(pool1), pool1, "xml")


class TestParseSchedule:
    @pytest.mark.parametrize("solver", [couple_orders, first_fit])
    def test_round_trip(self, pool1, pool2, solver):
        for pool in (pool1, pool2):
            result = solver(pool)
            doc = parse_schedule(render_report(result, pool, "structured").encode())
            back = doc.to_result(pool)
            assert back == result
            assert render_report(back, pool, "structured") == render_report(result, pool, "structured")

    def test_totals_are_ignored(self, pool1):
        doc = json.loads(render_report(couple_orders(pool1), pool1, "structured"))
        doc["totals"]["trim_loss"] = -1
        doc["patterns"][0]["waste_per_reel"] = 999
        back = parse_schedule(json.dumps(doc)).to_result(pool1)
        assert back.trim_loss == 230
        assert back.patterns[0].waste_per_reel == 0

    def test_zero_reels(self):
        doc = {"algorithm": "x", "patterns": [{"composition": {"D1": 1}, "reels": 0}]}
        with pytest.raises(ScheduleFormatError) as exc:
            parse_schedule(json.dumps(doc))
        assert exc.value.path == "$.patterns[0].reels"

    @pytest.mark.parametrize("doc", [
        {"algorithm": "x"},
        {"algorithm": "x", "patterns": [], "extra": 1},
        {"algorithm": "x", "patterns": [{"composition": {}, "reels": 1}]},
        {"algorithm": "x", "patterns": [{"composition": {"D1": 0}, "reels": 1}]},
        {"algorithm": "x", "patterns": [{"composition": {"D1": 1}, "reels": 1, "note": ""}]},
        {"algorithm": 3, "patterns": []},
    ])
    def test_structural_errors(self, doc):
        with pytest.raises(ScheduleFormatError):
            parse_schedule(json.dumps(doc))

    def test_hand_written_sheet1(self, pool1):
        text = json.dumps({
            "algorithm": "manual",
            "patterns": [
                {"composition": {"D4": 1, "D3": 1}, "reels": 2},
                {"composition": {"D2": 1, "D1": 1}, "reels": 6},
                {"composition": {"D5": 1, "D10": 1}, "reels": 6},
                {"composition": {"D7": 1, "D8": 1}, "reels": 5},
                {"composition": {"D7": 1, "D6": 1}, "reels": 1},
                {"composition": {"D9": 2}, "reels": 2},
                {"composition": {"D9": 1, "D3": 2}, "reels": 1},
                {"composition": {"D6": 1, "D10": 2}, "reels": 9},
                {"composition": {"D6": 1, "D3": 2}, "reels": 2},
            ],
        })
        doc = parse_schedule(text)
        assert validate_schedule(doc.schedule, pool1).violations == ()

    def test_unknown_ids_left_to_validation(self, pool1):
        doc = parse_schedule('{"algorithm": "x", "patterns": [{"composition": {"D99": 1}, "reels": 1}]}')
        report = validate_schedule(doc.schedule, pool1)
        assert "unknown-order" in {v.constraint for v in report.violations}
