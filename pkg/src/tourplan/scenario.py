"""Scenario documents: the self-describing input format plus bundled instances.

A scenario is a single JSON document carrying everything a planning session
needs: the tour window grid, the spot roster with stays, the travel matrix,
where the tourist starts and when, and the scoring source.  Scoring comes in
exactly one of two forms:

* *decomposed* — per-spot static scores plus optional timeliness windows,
  raw congestion traces and a weather forecast; the score table is built from
  the pieces, or
* *direct* — a ready-made per-spot, per-arrival-label value matrix.

``schema_version`` is mandatory.  Spot ``id`` strings are the short symbols
used everywhere in output; an optional ``name`` may carry a longer label.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field

from .errors import ScenarioError
from .model import (
    PlannerState,
    Spot,
    TimeGrid,
    TimePoint,
    TravelMatrix,
    format_hhmm,
    parse_hhmm,
)
from .planner import PlanRequest
from .scoring import (
    CongestionTrace,
    ScoreTable,
    STATIC_RANGE,
    TIMELINESS_RANGE,
    Weather,
    WeatherPlan,
    congestion_to_ce,
    slots_to_labels,
    weather_effect,
    weather_to_we,
)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class TimelinessWindow:
    """Extra appeal during ``[start, end)``, e.g. evening illuminations."""

    start: TimePoint
    end: TimePoint
    value: float

    def covers(self, t: TimePoint) -> bool:
        return self.start <= t < self.end


@dataclass(frozen=True)
class Scenario:
    """A fully validated planning instance."""

    name: str
    grid: TimeGrid
    spots: tuple[Spot, ...]
    origin: int
    origin_name: str
    matrix: TravelMatrix
    visited: frozenset[int]
    now: TimePoint
    direct_values: tuple[tuple[float, ...], ...] | None = None
    static_scores: tuple[float, ...] | None = None
    timeliness: tuple[tuple[TimelinessWindow, ...], ...] | None = None
    congestion: CongestionTrace | None = None
    weather: WeatherPlan | None = None

    @property
    def is_direct(self) -> bool:
        return self.direct_values is not None

    def symbol(self, spot: int) -> str:
        return self.spots[spot].name

    def index_of(self, symbol: str) -> int:
        for s in self.spots:
            if s.name == symbol:
                return s.id
        raise KeyError(symbol)

    def initial_state(self) -> PlannerState:
        return PlannerState(
            all_spots=frozenset(s.id for s in self.spots),
            visited=self.visited,
            position=self.origin,
            now=self.now,
            grid=self.grid,
        )

    def base_weather(self) -> WeatherPlan:
        return self.weather or WeatherPlan.constant(self.grid, Weather.SUNNY)

    def score_table(
        self,
        weather_override: WeatherPlan | None = None,
        congestion_overrides: dict[int, tuple[float, ...]] | None = None,
    ) -> ScoreTable:
        """Build the score table, optionally under fresher context data.

        Direct scenarios have no congestion decomposition to replace, so a
        congestion override is rejected; a weather override shifts the stored
        values by the difference in weather effect against the (sunny)
        baseline the table was authored under.
        """
        n = len(self.spots)
        width = self.grid.n_labels
        indoor = tuple(s.indoor for s in self.spots)

        if self.is_direct:
            if congestion_overrides:
                raise ScenarioError(
                    "congestion",
                    f"scenario {self.name!r} uses direct values and has no "
                    "congestion traces to replace",
                )
            zeros = tuple((0.0,) * width for _ in range(n))
            weather_rows = zeros
            if weather_override is not None:
                base = self.base_weather()
                weather_rows = tuple(
                    tuple(
                        weather_effect(indoor[i], weather_override.conditions[l])
                        - weather_effect(indoor[i], base.conditions[l])
                        for l in range(width)
                    )
                    for i in range(n)
                )
            return ScoreTable(
                self.grid, (0.0,) * n, self.direct_values, zeros, weather_rows
            )

        assert self.static_scores is not None
        timeliness_rows = tuple(
            tuple(
                sum(w.value for w in (self.timeliness or ((),) * n)[i] if w.covers(t))
                for t in self.grid.labels()
            )
            for i in range(n)
        )
        if self.congestion is None and not congestion_overrides:
            crowding_rows = tuple((1.0,) * width for _ in range(n))
        else:
            rows = list(
                self.congestion.samples
                if self.congestion is not None
                else ((0.0,) for _ in range(n))
            )
            for spot_id, samples in (congestion_overrides or {}).items():
                rows[spot_id] = tuple(samples)
            per_slot = congestion_to_ce(CongestionTrace(tuple(rows)), self.grid)
            crowding_rows = tuple(slots_to_labels(row) for row in per_slot)
        plan = weather_override or self.base_weather()
        weather_rows = weather_to_we(indoor, plan)
        return ScoreTable(
            self.grid, self.static_scores, timeliness_rows, crowding_rows, weather_rows
        )

    def request(self, n_results: int = 3, width: int = 1, **table_kwargs) -> PlanRequest:
        return PlanRequest(
            state=self.initial_state(),
            spots=self.spots,
            table=self.score_table(**table_kwargs),
            matrix=self.matrix,
            n_results=n_results,
            width=width,
        )


# ---------------------------------------------------------------------------
# Document parsing
# ---------------------------------------------------------------------------


def _fail(path: str, message: str):
    raise ScenarioError(path, message)


def _need(doc: dict, key: str, path: str = ""):
    if key not in doc:
        _fail(f"{path}.{key}" if path else key, "missing required field")
    return doc[key]


def _time(raw, path: str) -> TimePoint:
    if not isinstance(raw, str):
        _fail(path, f"expected a HH:MM string, got {raw!r}")
    try:
        return parse_hhmm(raw)
    except ValueError as exc:
        _fail(path, str(exc))


def load_scenario(doc: dict) -> Scenario:
    """Validate a scenario document and build the instance it describes.

    Raises:
        ScenarioError: naming the offending field on the first violation.
    """
    if not isinstance(doc, dict):
        _fail("", f"scenario document must be an object, got {type(doc).__name__}")
    version = _need(doc, "schema_version")
    if version != SCHEMA_VERSION:
        _fail("schema_version", f"unsupported version {version!r}, expected {SCHEMA_VERSION}")

    name = doc.get("name", "unnamed")
    if not isinstance(name, str) or not name:
        _fail("name", "must be a non-empty string")

    grid_doc = _need(doc, "grid")
    if not isinstance(grid_doc, dict):
        _fail("grid", "must be an object")
    slot_width = _need(grid_doc, "slot_minutes", "grid")
    if not isinstance(slot_width, int) or isinstance(slot_width, bool):
        _fail("grid.slot_minutes", "must be an integer minute count")
    try:
        grid = TimeGrid(
            _time(_need(grid_doc, "start", "grid"), "grid.start"),
            _time(_need(grid_doc, "end", "grid"), "grid.end"),
            slot_width,
        )
    except ValueError as exc:
        _fail("grid", str(exc))

    spots_doc = _need(doc, "spots")
    if not isinstance(spots_doc, list) or not spots_doc:
        _fail("spots", "must be a non-empty list")

    direct_doc = doc.get("direct_eval")
    decomposed_keys = [
        k for k in ("congestion", "weather") if k in doc
    ] + [f"spots[{i}].{k}" for i, s in enumerate(spots_doc)
         if isinstance(s, dict) for k in ("sv", "tv") if k in s]
    if direct_doc is not None and decomposed_keys:
        _fail(
            "direct_eval",
            "a scenario is either direct or decomposed, not both "
            f"(also found {decomposed_keys[0]})",
        )

    spots: list[Spot] = []
    statics: list[float] = []
    timeliness: list[tuple[TimelinessWindow, ...]] = []
    seen_ids: set[str] = set()
    for i, entry in enumerate(spots_doc):
        path = f"spots[{i}]"
        if not isinstance(entry, dict):
            _fail(path, "must be an object")
        sym = _need(entry, "id", path)
        if not isinstance(sym, str) or not sym:
            _fail(f"{path}.id", "must be a non-empty string")
        if sym in seen_ids:
            _fail(f"{path}.id", f"duplicate spot id {sym!r}")
        seen_ids.add(sym)
        indoor = entry.get("indoor", False)
        if not isinstance(indoor, bool):
            _fail(f"{path}.indoor", "must be true or false")
        stay = _need(entry, "stay_minutes", path)
        if not isinstance(stay, int) or isinstance(stay, bool) or stay <= 0:
            _fail(f"{path}.stay_minutes", "must be a positive integer")
        if stay % grid.slot_width:
            _fail(
                f"{path}.stay_minutes",
                f"{stay} is not a multiple of the {grid.slot_width}-minute slot width",
            )
        label = entry.get("name", "")
        if not isinstance(label, str):
            _fail(f"{path}.name", "must be a string")
        spots.append(Spot(i, sym, indoor, stay, label))

        if direct_doc is None:
            sv = _need(entry, "sv", path)
            if not isinstance(sv, (int, float)) or isinstance(sv, bool):
                _fail(f"{path}.sv", "must be a number")
            if not STATIC_RANGE[0] <= sv <= STATIC_RANGE[1]:
                _fail(f"{path}.sv", f"{sv} outside {STATIC_RANGE[0]}..{STATIC_RANGE[1]}")
            statics.append(float(sv))
            windows = []
            for j, w in enumerate(entry.get("tv", [])):
                wpath = f"{path}.tv[{j}]"
                if not isinstance(w, dict):
                    _fail(wpath, "must be an object")
                lo = _time(_need(w, "from", wpath), f"{wpath}.from")
                hi = _time(_need(w, "to", wpath), f"{wpath}.to")
                if lo >= hi:
                    _fail(wpath, "window 'from' must precede 'to'")
                v = _need(w, "value", wpath)
                if not isinstance(v, (int, float)) or isinstance(v, bool):
                    _fail(f"{wpath}.value", "must be a number")
                if not TIMELINESS_RANGE[0] <= v <= TIMELINESS_RANGE[1]:
                    _fail(
                        f"{wpath}.value",
                        f"{v} outside {TIMELINESS_RANGE[0]}..{TIMELINESS_RANGE[1]}",
                    )
                windows.append(TimelinessWindow(lo, hi, float(v)))
            timeliness.append(tuple(windows))
            for t in grid.labels():
                total = sum(w.value for w in windows if w.covers(t))
                if total > TIMELINESS_RANGE[1]:
                    _fail(
                        f"{path}.tv",
                        f"windows overlap to {total} at {format_hhmm(t)}, "
                        f"cap is {TIMELINESS_RANGE[1]}",
                    )

    index_of = {s.name: s.id for s in spots}
    n = len(spots)

    origin_name = _need(doc, "origin")
    if not isinstance(origin_name, str) or not origin_name:
        _fail("origin", "must be a non-empty string")
    origin_is_spot = origin_name in index_of
    matrix_size = n if origin_is_spot else n + 1

    travel_doc = _need(doc, "travel_minutes")
    if not isinstance(travel_doc, list) or len(travel_doc) != matrix_size:
        kind = "spot" if origin_is_spot else "spot-plus-start"
        _fail(
            "travel_minutes",
            f"must be a {matrix_size}x{matrix_size} matrix over the {kind} "
            f"indices (start position last when it is not a spot)",
        )
    for i, row in enumerate(travel_doc):
        if not isinstance(row, list) or len(row) != matrix_size:
            _fail(f"travel_minutes[{i}]", f"must be a list of {matrix_size} integers")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                _fail(f"travel_minutes[{i}][{j}]", "must be a non-negative integer")
    try:
        matrix = TravelMatrix(tuple(tuple(row) for row in travel_doc))
    except ValueError as exc:
        _fail("travel_minutes", str(exc))
    origin = index_of[origin_name] if origin_is_spot else n

    now = _time(_need(doc, "now"), "now")
    if now > grid.end:
        _fail("now", f"{format_hhmm(now)} lies past the window end {format_hhmm(grid.end)}")

    visited: set[int] = set()
    for i, sym in enumerate(doc.get("visited", [])):
        if not isinstance(sym, str) or sym not in index_of:
            _fail(f"visited[{i}]", f"unknown spot id {sym!r}")
        visited.add(index_of[sym])

    direct_values = None
    congestion = None
    weather = None
    if direct_doc is not None:
        if not isinstance(direct_doc, dict):
            _fail("direct_eval", "must map spot ids to per-arrival value lists")
        rows = []
        for s in spots:
            if s.name not in direct_doc:
                _fail(f"direct_eval.{s.name}", "missing value row")
            row = direct_doc[s.name]
            if (
                not isinstance(row, list)
                or len(row) != grid.n_labels
                or any(
                    not isinstance(v, (int, float)) or isinstance(v, bool) for v in row
                )
            ):
                _fail(
                    f"direct_eval.{s.name}",
                    f"must be a list of {grid.n_labels} numbers "
                    "(one per slot start, window end included)",
                )
            rows.append(tuple(float(v) for v in row))
        extra = set(direct_doc) - seen_ids
        if extra:
            _fail(f"direct_eval.{sorted(extra)[0]}", "not a declared spot id")
        direct_values = tuple(rows)
    else:
        cong_doc = doc.get("congestion")
        if cong_doc is not None:
            if not isinstance(cong_doc, dict):
                _fail("congestion", "must map spot ids to half-hour sample lists")
            rows = []
            for s in spots:
                if s.name not in cong_doc:
                    _fail(f"congestion.{s.name}", "missing trace")
                row = cong_doc[s.name]
                if (
                    not isinstance(row, list)
                    or not row
                    or any(
                        not isinstance(v, (int, float)) or isinstance(v, bool) or v < 0
                        for v in row
                    )
                ):
                    _fail(
                        f"congestion.{s.name}",
                        "must be a non-empty list of non-negative numbers",
                    )
                rows.append(tuple(float(v) for v in row))
            extra = set(cong_doc) - seen_ids
            if extra:
                _fail(f"congestion.{sorted(extra)[0]}", "not a declared spot id")
            congestion = CongestionTrace(tuple(rows))
        weather_doc = doc.get("weather")
        if weather_doc is not None:
            weather = _parse_weather(weather_doc, grid)

    return Scenario(
        name=name,
        grid=grid,
        spots=tuple(spots),
        origin=origin,
        origin_name=origin_name,
        matrix=matrix,
        visited=frozenset(visited),
        now=now,
        direct_values=direct_values,
        static_scores=tuple(statics) if direct_doc is None else None,
        timeliness=tuple(timeliness) if direct_doc is None else None,
        congestion=congestion,
        weather=weather,
    )


def _parse_weather(raw, grid: TimeGrid, path: str = "weather") -> WeatherPlan:
    """Accept a constant condition string or one condition per arrival label."""
    if isinstance(raw, str):
        try:
            return WeatherPlan.constant(grid, Weather(raw))
        except ValueError:
            _fail(path, f"unknown condition {raw!r} (want 'sunny' or 'rain')")
    if not isinstance(raw, list) or len(raw) != grid.n_labels:
        _fail(
            path,
            f"must be a condition string or a list of {grid.n_labels} conditions "
            "(one per slot start, window end included)",
        )
    conditions = []
    for i, c in enumerate(raw):
        try:
            conditions.append(Weather(c))
        except ValueError:
            _fail(f"{path}[{i}]", f"unknown condition {c!r} (want 'sunny' or 'rain')")
    return WeatherPlan(tuple(conditions))


def loads(text: str) -> Scenario:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError("", f"not valid JSON: {exc}") from None
    return load_scenario(doc)


def _num(v: float):
    return int(v) if float(v).is_integer() else v


def save_scenario(sc: Scenario) -> dict:
    """Serialize back to the document form; ``load_scenario`` round-trips it."""
    doc: dict = {
        "schema_version": SCHEMA_VERSION,
        "name": sc.name,
        "grid": {
            "start": format_hhmm(sc.grid.start),
            "end": format_hhmm(sc.grid.end),
            "slot_minutes": sc.grid.slot_width,
        },
        "origin": sc.origin_name,
        "now": format_hhmm(sc.now),
        "visited": sorted(sc.symbol(i) for i in sc.visited),
        "spots": [],
        "travel_minutes": [list(row) for row in sc.matrix.minutes],
    }
    for s in sc.spots:
        entry: dict = {
            "id": s.name,
            "indoor": s.indoor,
            "stay_minutes": s.stay_minutes,
        }
        if s.label:
            entry["name"] = s.label
        if not sc.is_direct:
            entry["sv"] = _num(sc.static_scores[s.id])
            windows = (sc.timeliness or ())[s.id]
            if windows:
                entry["tv"] = [
                    {
                        "from": format_hhmm(w.start),
                        "to": format_hhmm(w.end),
                        "value": _num(w.value),
                    }
                    for w in windows
                ]
        doc["spots"].append(entry)
    if sc.is_direct:
        doc["direct_eval"] = {
            sc.symbol(i): [_num(v) for v in row]
            for i, row in enumerate(sc.direct_values)
        }
    else:
        if sc.congestion is not None:
            doc["congestion"] = {
                sc.symbol(i): [_num(v) for v in row]
                for i, row in enumerate(sc.congestion.samples)
            }
        if sc.weather is not None:
            conditions = sc.weather.conditions
            if all(c == conditions[0] for c in conditions):
                doc["weather"] = conditions[0].value
            else:
                doc["weather"] = [c.value for c in conditions]
    return doc


def dumps(sc: Scenario) -> str:
    return json.dumps(save_scenario(sc), indent=2)


# ---------------------------------------------------------------------------
# Bundled instances
# ---------------------------------------------------------------------------

_DEMO_VALUES = {
    # 9 spots, hourly values 13:00 through 18:00 inclusive.
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


def builtin_table3() -> Scenario:
    """Nine-spot demo with a direct value table and uniform 60-minute legs.

    The tourist stands at spot I at 12:00 with B and H already seen and the
    13:00-18:00 window ahead; every stay and every travel leg is 60 minutes.
    """
    n = len(_DEMO_VALUES)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "name": "table3",
        "grid": {"start": "13:00", "end": "18:00", "slot_minutes": 60},
        "origin": "I",
        "now": "12:00",
        "visited": ["B", "H"],
        "spots": [
            {"id": sym, "indoor": False, "stay_minutes": 60} for sym in _DEMO_VALUES
        ],
        "travel_minutes": [
            [0 if i == j else 60 for j in range(n)] for i in range(n)
        ],
        "direct_eval": {sym: list(vals) for sym, vals in _DEMO_VALUES.items()},
    }
    return load_scenario(doc)


# Symbol, indoor flag, stay minutes, static score, and map position (in
# walking-minute units around the start) for the synthetic 20-spot district.
_SYNTH20_SPOTS = [
    # sym     indoor  stay  static  (x, y)
    ("IK",    False,  20,   3.4,   (3, -2)),
    ("RNT",   False,  30,   3.1,   (-1, -7)),
    ("KCM",   True,   40,   3.0,   (-7, 6)),
    ("CIT",   False,  40,   4.4,   (4, 5)),
    ("YK",    False,  20,   3.0,   (2, -3)),
    ("NM",    True,   40,   3.8,   (-6, 2)),
    ("KRGS",  False,  30,   2.4,   (5, -5)),
    ("RD",    False,  20,   3.2,   (-8, 4)),
    ("HS",    False,  20,   3.9,   (-1, -1)),
    ("KDT",   False,  40,   4.5,   (4, -1)),
    ("SGR",   False,  20,   2.2,   (3, 6)),
    ("KM",    True,   30,   2.8,   (-3, -2)),
    ("KYT",   False,  60,   5.0,   (7, -6)),
    ("CHT",   False,  30,   2.6,   (5, 4)),
    ("MP",    False,  30,   3.6,   (3, 3)),
    ("KNT",   False,  40,   4.0,   (0, -4)),
    ("YS",    False,  30,   4.2,   (2, 1)),
    ("TT",    False,  50,   4.1,   (-1, -15)),
    ("NZ",    False,  20,   3.7,   (5, -3)),
    ("SSD",   True,   40,   4.3,   (1, -11)),
]
_SYNTH20_ORIGIN_XY = (0, 0)
_SYNTH20_EVENING_BONUS = {  # illumination window 17:30 onward
    "KDT": 2, "KYT": 2, "CIT": 2, "RD": 1, "MP": 1, "SGR": 1, "TT": 1,
}
_WALK_PACE = 1.6  # minutes per map unit
_MIN_WALK = 3


def _walk_minutes(a: tuple[int, int], b: tuple[int, int]) -> int:
    if a == b:
        return 0
    return max(_MIN_WALK, math.ceil(_WALK_PACE * math.hypot(a[0] - b[0], a[1] - b[1])))


def builtin_synth20() -> Scenario:
    """Synthetic 20-spot district over a 13:00-18:00 window with 10-minute slots.

    Everything here is fabricated but deterministic: static scores and stays
    are hand-picked, walking times come from fixed map coordinates, and the
    half-hour congestion traces are generated from a fixed seed with one
    afternoon peak per spot.
    """
    rng = random.Random(20251)
    congestion = {}
    for sym, _, _, static, _ in _SYNTH20_SPOTS:
        base = 20.0 + 12.0 * static + rng.uniform(0.0, 20.0)
        peak = rng.randint(2, 7)  # which half-hour the crowd peaks in
        width = rng.uniform(1.8, 3.2)
        congestion[sym] = [
            round(base * (0.35 + 0.65 * math.exp(-(((k - peak) / width) ** 2))), 1)
            for k in range(10)
        ]

    coords = [xy for _, _, _, _, xy in _SYNTH20_SPOTS] + [_SYNTH20_ORIGIN_XY]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "name": "synth20",
        "grid": {"start": "13:00", "end": "18:00", "slot_minutes": 10},
        "origin": "Gion Station",
        "now": "13:00",
        "visited": [],
        "spots": [
            {
                "id": sym,
                "indoor": indoor,
                "stay_minutes": stay,
                "sv": static,
                **(
                    {
                        "tv": [
                            {
                                "from": "17:30",
                                "to": "21:00",
                                "value": _SYNTH20_EVENING_BONUS[sym],
                            }
                        ]
                    }
                    if sym in _SYNTH20_EVENING_BONUS
                    else {}
                ),
            }
            for sym, indoor, stay, static, _ in _SYNTH20_SPOTS
        ],
        "travel_minutes": [
            [_walk_minutes(a, b) for b in coords] for a in coords
        ],
        "congestion": congestion,
        "weather": "sunny",
    }
    return load_scenario(doc)


_BUILTINS = {"table3": builtin_table3, "synth20": builtin_synth20}
BUILTIN_NAMES = tuple(sorted(_BUILTINS))


def builtin_scenario(name: str) -> Scenario:
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise ScenarioError(
            "name", f"unknown builtin scenario {name!r} (have {', '.join(BUILTIN_NAMES)})"
        ) from None


# ---------------------------------------------------------------------------
# Random instances for testing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RandomInstanceSpec:
    """Knobs for :func:`generate_random`.

    Values are drawn on a half-point lattice so that any sum of them is exact
    in floating point; travel times are whole minutes, optionally closed under
    shortest-path so the triangle inequality holds.
    """

    n_spots: int = 4
    n_slots: int = 5
    slot_width: int = 30
    value_range: tuple[float, float] = (0.0, 9.0)
    travel_range: tuple[int, int] = (10, 45)
    triangle: bool = True
    seed: int = 0


def generate_random(spec: RandomInstanceSpec) -> Scenario:
    """Deterministic random instance with a direct value table."""
    rng = random.Random(spec.seed)
    grid = TimeGrid(
        13 * 60, 13 * 60 + spec.n_slots * spec.slot_width, spec.slot_width
    )
    lo, hi = spec.value_range
    steps = int((hi - lo) * 2)

    spots = tuple(
        Spot(
            id=i,
            name=f"S{i}",
            indoor=bool(rng.getrandbits(1)),
            stay_minutes=spec.slot_width * rng.randint(1, 2),
        )
        for i in range(spec.n_spots)
    )
    values = tuple(
        tuple(lo + 0.5 * rng.randint(0, steps) for _ in range(grid.n_labels))
        for _ in range(spec.n_spots)
    )

    size = spec.n_spots + 1  # separate start position, last index
    minutes = [
        [0 if i == j else rng.randint(*spec.travel_range) for j in range(size)]
        for i in range(size)
    ]
    if spec.triangle:
        for k in range(size):
            for i in range(size):
                for j in range(size):
                    through = minutes[i][k] + minutes[k][j]
                    if i != j and through < minutes[i][j]:
                        minutes[i][j] = through

    return Scenario(
        name=f"random-{spec.seed}",
        grid=grid,
        spots=spots,
        origin=spec.n_spots,
        origin_name="start",
        matrix=TravelMatrix(tuple(tuple(row) for row in minutes)),
        visited=frozenset(),
        now=grid.start,
        direct_values=values,
    )
