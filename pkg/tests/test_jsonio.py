import json
from fractions import Fraction

import pytest

from tnormcat import InputError, RCat, interval_collapse, lukasiewicz, minimum
from tnormcat.jsonio import (
    bundle_to_dict,
    category_from_dict,
    category_to_dict,
    load_category,
    load_sequence,
    load_tnorm,
    power_to_dict,
    sequence_from_dict,
    tnorm_from_dict,
    tnorm_to_dict,
    to_jsonable,
)
from tnormcat import counterexample, exponential

F = Fraction


class TestTNormSchema:
    def test_round_trip_simple(self):
        t = tnorm_from_dict({"family": "minimum"})
        assert t == minimum()
        assert tnorm_to_dict(t) == {"family": "minimum"}

    def test_round_trip_intervals(self):
        data = {"family": "interval-collapse", "intervals": [["1/5", "1/2"]]}
        t = tnorm_from_dict(data)
        assert t == interval_collapse([(F(1, 5), F(1, 2))])
        assert tnorm_to_dict(t) == data

    def test_intervals_required_iff_collapse(self):
        with pytest.raises(InputError):
            tnorm_from_dict({"family": "interval-collapse"})
        with pytest.raises(InputError):
            tnorm_from_dict({"family": "minimum", "intervals": [["0", "1/2"]]})

    def test_bad_rational_diagnosed_with_position(self):
        with pytest.raises(InputError) as err:
            tnorm_from_dict(
                {"family": "interval-collapse", "intervals": [["1/5", "x/2"]]}
            )
        assert "intervals[0][1]" in str(err.value)

    def test_malformed_json_file_reports_position(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"family": "minimum",}')
        with pytest.raises(InputError) as err:
            load_tnorm(path)
        assert "line 1" in str(err.value)


class TestCategorySchema:
    def test_round_trip(self):
        data = {"elements": ["x", "y"], "hom": [["1", "1/2"], ["0", "1"]]}
        cat = category_from_dict(data)
        assert cat.hom_of("x", "y") == F(1, 2)
        assert category_to_dict(cat) == data

    def test_row_shape_checked(self):
        with pytest.raises(InputError):
            category_from_dict({"elements": ["x", "y"], "hom": [["1", "1/2"]]})

    def test_value_range_checked(self):
        with pytest.raises(InputError) as err:
            category_from_dict({"elements": ["x"], "hom": [["3/2"]]})
        assert "hom[0][0]" in str(err.value)

    def test_integer_values_accepted(self):
        cat = category_from_dict({"elements": ["x"], "hom": [[1]]})
        assert cat.hom_of("x", "x") == 1


class TestSequenceSchema:
    def test_inline_carrier(self):
        seq = sequence_from_dict(
            {
                "carrier": {"elements": ["a"], "hom": [["1"]]},
                "prefix": [],
                "cycle": ["a"],
            }
        )
        assert seq.cycle == ("a",)

    def test_carrier_path_relative_to_sequence_file(self, tmp_path):
        (tmp_path / "cat.json").write_text(
            json.dumps({"elements": ["a"], "hom": [["1"]]})
        )
        seq_path = tmp_path / "seq.json"
        seq_path.write_text(
            json.dumps({"carrier": "cat.json", "prefix": ["a"], "cycle": ["a"]})
        )
        seq = load_sequence(seq_path)
        assert seq.prefix == ("a",) and seq.carrier.elements == ("a",)

    def test_empty_cycle_rejected(self):
        with pytest.raises(InputError):
            sequence_from_dict(
                {"carrier": {"elements": ["a"], "hom": [["1"]]}, "cycle": []}
            )


class TestReportRendering:
    def test_power_serialization_lists_functors_in_source_order(self, two_chain):
        power = exponential(minimum(), two_chain, two_chain)
        data = power_to_dict(power)
        assert data["functors"][0] == ["x", "x"] or data["functors"][0] == ["x", "y"]
        for row, f in zip(data["functors"], power.functors):
            assert row == [str(v) for v in f.mapping]
        assert len(data["d"]) == len(power)

    def test_bundle_serialization_carries_everything(self):
        b = counterexample(lukasiewicz(), F(9, 10), F(9, 10), F(1, 2))
        data = bundle_to_dict(b)
        assert data["d_fg"] == "9/10" and data["d_fh"] == "2/5"
        assert data["violated"]["lhs"] == "1/2" and data["violated"]["rhs"] == "2/5"
        assert data["f"] == ["1", "1/2"]
        assert json.dumps(data)  # JSON-safe

    def test_to_jsonable_handles_fractions_and_tuples(self):
        out = to_jsonable({"v": F(1, 3), "t": (F(0), "x")})
        assert out == {"v": "1/3", "t": ["0", "x"]}
