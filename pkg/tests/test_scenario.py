"""Scenario documents: validation, bundled instances, random generation."""

import json

import pytest

from tourplan.errors import ScenarioError
from tourplan.model import parse_hhmm
from tourplan.oracle import exact_best_routes
from tourplan.scenario import (
    BUILTIN_NAMES,
    RandomInstanceSpec,
    builtin_scenario,
    builtin_synth20,
    builtin_table3,
    dumps,
    generate_random,
    load_scenario,
    loads,
    save_scenario,
)
from tourplan.scoring import value

from conftest import make_random

# The nine-spot demo value grid, frozen independently of the package copy.
DEMO_VALUES = {
    "A": [7, 3, 4, 5, 6, 7],
    "B": [4, 5, 3, 2, 4, 5],
    "C": [4, 5, 6, 7, 9, 6],
    "D": [4, 5, 4, 3, 2, 6],
    "E": [4, 3, 2, 1, 2, 3],
    "F": [7, 7, 6, 4, 3, 2],
    "G": [5, 4, 3, 2, 4, 7],
    "H": [4, 5, 4, 3, 2, 1],
    "I": [2, 1, 4, 5, 1, 6],
}


def minimal_doc(**overrides):
    """A small, valid decomposed scenario document to mutate in error tests."""
    doc = {
        "schema_version": 1,
        "name": "mini",
        "grid": {"start": "13:00", "end": "15:00", "slot_minutes": 30},
        "origin": "Start",
        "now": "13:00",
        "spots": [
            {"id": "X", "indoor": False, "stay_minutes": 30, "sv": 3},
            {"id": "Y", "indoor": True, "stay_minutes": 60, "sv": 4},
        ],
        "travel_minutes": [
            [0, 10, 10],
            [10, 0, 10],
            [10, 10, 0],
        ],
    }
    doc.update(overrides)
    return doc


def failing_path(doc):
    with pytest.raises(ScenarioError) as err:
        load_scenario(doc)
    return err.value.path


class TestLoadValidation:
    def test_minimal_document_loads(self):
        sc = load_scenario(minimal_doc())
        assert [s.name for s in sc.spots] == ["X", "Y"]
        assert sc.origin == 2  # non-spot start sits on the extra last index
        assert sc.origin_name == "Start"

    def test_origin_may_be_a_spot(self):
        doc = minimal_doc(
            origin="X",
            travel_minutes=[[0, 10], [10, 0]],
        )
        sc = load_scenario(doc)
        assert sc.origin == 0

    def test_missing_schema_version(self):
        doc = minimal_doc()
        del doc["schema_version"]
        assert failing_path(doc) == "schema_version"

    def test_unsupported_schema_version(self):
        assert failing_path(minimal_doc(schema_version=99)) == "schema_version"

    def test_missing_grid_field(self):
        doc = minimal_doc()
        del doc["grid"]["end"]
        assert failing_path(doc) == "grid.end"

    def test_bad_time_string(self):
        doc = minimal_doc()
        doc["grid"]["start"] = "13h00"
        assert failing_path(doc) == "grid.start"

    def test_window_not_slot_aligned(self):
        doc = minimal_doc()
        doc["grid"]["slot_minutes"] = 45
        assert failing_path(doc) == "grid"

    def test_empty_spot_list(self):
        assert failing_path(minimal_doc(spots=[])) == "spots"

    def test_duplicate_spot_id(self):
        doc = minimal_doc()
        doc["spots"][1]["id"] = "X"
        assert failing_path(doc) == "spots[1].id"

    def test_stay_must_be_slot_multiple(self):
        doc = minimal_doc()
        doc["spots"][0]["stay_minutes"] = 45
        assert failing_path(doc) == "spots[0].stay_minutes"

    def test_static_score_range_enforced(self):
        doc = minimal_doc()
        doc["spots"][0]["sv"] = 7
        assert failing_path(doc) == "spots[0].sv"

    def test_decomposed_spot_requires_static_score(self):
        doc = minimal_doc()
        del doc["spots"][0]["sv"]
        assert failing_path(doc) == "spots[0].sv"

    def test_timeliness_window_order(self):
        doc = minimal_doc()
        doc["spots"][0]["tv"] = [{"from": "14:00", "to": "13:30", "value": 1}]
        assert failing_path(doc) == "spots[0].tv[0]"

    def test_timeliness_value_range(self):
        doc = minimal_doc()
        doc["spots"][0]["tv"] = [{"from": "13:00", "to": "14:00", "value": 3}]
        assert failing_path(doc) == "spots[0].tv[0].value"

    def test_overlapping_windows_capped(self):
        doc = minimal_doc()
        doc["spots"][0]["tv"] = [
            {"from": "13:00", "to": "14:00", "value": 1.5},
            {"from": "13:30", "to": "14:30", "value": 1.5},
        ]
        assert failing_path(doc) == "spots[0].tv"

    def test_matrix_shape_must_cover_start_position(self):
        doc = minimal_doc(travel_minutes=[[0, 10], [10, 0]])
        assert failing_path(doc) == "travel_minutes"

    def test_matrix_cells_are_nonnegative_integers(self):
        doc = minimal_doc()
        doc["travel_minutes"][0][1] = -4
        assert failing_path(doc) == "travel_minutes[0][1]"
        doc = minimal_doc()
        doc["travel_minutes"][0][1] = "10"
        assert failing_path(doc) == "travel_minutes[0][1]"

    def test_now_must_not_pass_window_end(self):
        assert failing_path(minimal_doc(now="15:30")) == "now"

    def test_now_before_window_start_is_fine(self):
        assert load_scenario(minimal_doc(now="09:00")).now == parse_hhmm("09:00")

    def test_visited_ids_must_exist(self):
        assert failing_path(minimal_doc(visited=["Z"])) == "visited[0]"

    def test_weather_condition_names(self):
        assert failing_path(minimal_doc(weather="hail")) == "weather"

    def test_weather_list_length(self):
        assert failing_path(minimal_doc(weather=["sunny", "rain"])) == "weather"

    def test_weather_list_entry_names(self):
        doc = minimal_doc(weather=["sunny", "rain", "sunny", "fog", "sunny"])
        assert failing_path(doc) == "weather[3]"

    def test_congestion_rows_required_for_all_spots(self):
        doc = minimal_doc(congestion={"X": [1, 2]})
        assert failing_path(doc) == "congestion.Y"

    def test_congestion_unknown_spot_rejected(self):
        doc = minimal_doc(congestion={"X": [1], "Y": [1], "Z": [1]})
        assert failing_path(doc) == "congestion.Z"

    def test_direct_and_decomposed_are_exclusive(self):
        doc = minimal_doc(direct_eval={"X": [1] * 5, "Y": [1] * 5})
        assert failing_path(doc) == "direct_eval"

    def test_direct_rows_must_cover_labels(self):
        doc = minimal_doc(direct_eval={"X": [1] * 4, "Y": [1] * 5})
        for spot in doc["spots"]:
            del spot["sv"]
        assert failing_path(doc) == "direct_eval.X"

    def test_direct_missing_spot_row(self):
        doc = minimal_doc(direct_eval={"X": [1] * 5})
        for spot in doc["spots"]:
            del spot["sv"]
        assert failing_path(doc) == "direct_eval.Y"

    def test_loads_rejects_bad_json(self):
        with pytest.raises(ScenarioError, match="not valid JSON"):
            loads("{nope")

    def test_error_message_carries_path_prefix(self):
        with pytest.raises(ScenarioError) as err:
            load_scenario(minimal_doc(now="19:00"))
        assert str(err.value).startswith("now: ")


class TestRoundTrip:
    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_builtins_round_trip(self, name):
        sc = builtin_scenario(name)
        doc = save_scenario(sc)
        assert save_scenario(load_scenario(doc)) == doc

    def test_random_instances_round_trip(self):
        for seed in range(5):
            sc = make_random(seed)
            assert save_scenario(loads(dumps(sc))) == save_scenario(sc)

    def test_documents_are_plain_json(self):
        doc = save_scenario(builtin_table3())
        assert json.loads(json.dumps(doc)) == doc


class TestBuiltinTable3:
    def test_structure(self, table3):
        assert table3.name == "table3"
        assert len(table3.spots) == 9
        assert table3.grid.start == parse_hhmm("13:00")
        assert table3.grid.end == parse_hhmm("18:00")
        assert table3.grid.slot_width == 60
        assert table3.now == parse_hhmm("12:00")
        assert table3.origin_name == "I"
        assert table3.origin == table3.index_of("I")
        assert {table3.symbol(i) for i in table3.visited} == {"B", "H"}
        assert all(s.stay_minutes == 60 for s in table3.spots)
        assert all(
            table3.matrix[i, j] == (0 if i == j else 60)
            for i in range(9)
            for j in range(9)
        )

    def test_every_value_cell(self, table3):
        table = table3.score_table()
        for sym, row in DEMO_VALUES.items():
            spot = table3.index_of(sym)
            for k, expected in enumerate(row):
                t = table3.grid.start + 60 * k
                assert value(spot, t, table) == float(expected), (sym, k)


class TestBuiltinSynth20:
    def test_structure(self, synth20):
        assert synth20.name == "synth20"
        assert len(synth20.spots) == 20
        assert synth20.grid.slot_width == 10
        assert synth20.grid.n_slots == 30
        assert synth20.now == synth20.grid.start == parse_hhmm("13:00")
        assert synth20.origin_name == "Gion Station"
        assert synth20.origin == 20  # start is not a spot
        assert synth20.matrix.size == 21
        assert synth20.visited == frozenset()

    def test_spot_names_and_flags(self, synth20):
        names = [s.name for s in synth20.spots]
        assert names[0] == "IK"
        assert names[-1] == "SSD"
        assert len(set(names)) == 20
        indoor = {s.name for s in synth20.spots if s.indoor}
        assert indoor == {"KCM", "NM", "KM", "SSD"}

    def test_travel_matrix_is_metric(self, synth20):
        assert synth20.matrix.obeys_triangle_inequality()
        assert all(
            synth20.matrix[i, j] >= 3
            for i in range(21)
            for j in range(21)
            if i != j
        )

    def test_static_scores_in_range(self, synth20):
        assert all(1.0 <= v <= 5.0 for v in synth20.static_scores)
        assert all(s.stay_minutes % 10 == 0 for s in synth20.spots)

    def test_evening_bonus_slots(self, synth20):
        table = synth20.score_table()
        h1730 = parse_hhmm("17:30")
        h1720 = parse_hhmm("17:20")
        for sym, bonus in [
            ("KDT", 2.0),
            ("KYT", 2.0),
            ("CIT", 2.0),
            ("RD", 1.0),
            ("MP", 1.0),
            ("SGR", 1.0),
            ("TT", 1.0),
        ]:
            spot = synth20.index_of(sym)
            assert table.timeliness[spot][synth20.grid.label_index(h1730)] == bonus
            assert table.timeliness[spot][synth20.grid.label_index(h1720)] == 0.0

    def test_congestion_traces_present_and_deterministic(self, synth20):
        assert synth20.congestion is not None
        assert all(len(row) == 10 for row in synth20.congestion.samples)
        assert save_scenario(builtin_synth20()) == save_scenario(synth20)

    def test_unknown_builtin_name(self):
        with pytest.raises(ScenarioError):
            builtin_scenario("unknown")


class TestGenerateRandom:
    def test_same_seed_same_scenario(self):
        a = generate_random(RandomInstanceSpec(seed=7))
        b = generate_random(RandomInstanceSpec(seed=7))
        assert save_scenario(a) == save_scenario(b)

    def test_different_seeds_differ(self):
        a = generate_random(RandomInstanceSpec(seed=1))
        b = generate_random(RandomInstanceSpec(seed=2))
        assert save_scenario(a) != save_scenario(b)

    def test_triangle_inequality_enforced(self):
        for seed in range(10):
            sc = make_random(seed, triangle=True)
            assert sc.matrix.obeys_triangle_inequality()

    def test_values_are_half_step_exact(self):
        sc = make_random(3)
        for row in sc.direct_values:
            assert all(float(2 * v).is_integer() for v in row)

    def test_oracle_solvable_at_five_spots_six_slots(self):
        sc = make_random(11, n_spots=5, n_slots=6)
        ranked = exact_best_routes(sc.request(n_results=5))
        assert len(ranked) >= 1
