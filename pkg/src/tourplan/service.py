"""Planning sessions over HTTP: a small /v1 JSON API.

A session pairs a scenario with the tourist's progress through it: committed
visits, current position and clock, and any context updates (fresh weather or
congestion) received along the way.  Committed visits keep the score they
were given when committed; context changes only affect what gets planned from
now on.

Times on the wire are ``"HH:MM"`` strings and scores are decimal strings with
one fractional digit.  Every number a client may display is present verbatim
in the payload; clients are not expected to compute anything.

Concurrency: mutations on one session are serialized behind its lock, while
planner runs happen on a snapshot outside the lock, so a slow wide search on
one session never blocks requests for another (endpoints are sync functions,
which the framework dispatches to a worker thread pool).
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from .errors import ScenarioError
from .model import (
    Itinerary,
    PlannerState,
    VisitEntry,
    format_hhmm,
    free_time,
    insertion_conflict,
    parse_hhmm,
)
from .planner import (
    PlanRequest,
    RankedRoutes,
    plan_time_series,
    plan_whole_greedy,
)
from .scenario import (
    BUILTIN_NAMES,
    Scenario,
    _parse_weather,
    builtin_scenario,
    load_scenario,
    save_scenario,
)
from .scoring import WeatherPlan, value

DEFAULT_WIDTH_C = 3


def fmt_score(x: float) -> str:
    """Scores travel as strings with exactly one fractional digit."""
    return f"{x:.1f}"


@dataclass
class Session:
    id: str
    scenario: Scenario
    visited: set[int]
    position: int
    now: int
    committed: list[VisitEntry] = field(default_factory=list)
    weather_override: WeatherPlan | None = None
    congestion_overrides: dict[int, tuple[float, ...]] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def score_table(self):
        return self.scenario.score_table(
            weather_override=self.weather_override,
            congestion_overrides=self.congestion_overrides or None,
        )

    def planner_state(self) -> PlannerState:
        sc = self.scenario
        return PlannerState(
            all_spots=frozenset(s.id for s in sc.spots),
            visited=frozenset(self.visited),
            position=self.position,
            now=self.now,
            grid=sc.grid,
        )

    def committed_itinerary(self) -> Itinerary:
        z = Itinerary(self.scenario.origin, self.scenario.now)
        for e in self.committed:
            z = z.with_entry(e)
        return z

    @property
    def tour_over(self) -> bool:
        return self.now >= self.scenario.grid.end

    def position_symbol(self) -> str:
        sc = self.scenario
        if 0 <= self.position < len(sc.spots):
            return sc.symbol(self.position)
        return sc.origin_name

    def snapshot(self) -> dict:
        sc = self.scenario
        return {
            "session_id": self.id,
            "scenario": sc.name,
            "window": {
                "start": format_hhmm(sc.grid.start),
                "end": format_hhmm(sc.grid.end),
                "slot_minutes": sc.grid.slot_width,
            },
            "position": self.position_symbol(),
            "now": format_hhmm(self.now),
            "remaining_minutes": max(0, sc.grid.end - max(self.now, sc.grid.start)),
            "tour_over": self.tour_over,
            "visited": sorted(sc.symbol(i) for i in self.visited),
            "committed": [
                {
                    "arrival": format_hhmm(e.arrival),
                    "spot": sc.symbol(e.spot),
                    "score": fmt_score(e.score),
                }
                for e in self.committed
            ],
            "running_score": fmt_score(sum(e.score for e in self.committed)),
        }


def _bad(status: int, code: str, message: str):
    raise HTTPException(status, detail={"code": code, "message": message})


def _routes_payload(sc: Scenario, req: PlanRequest, ranked: RankedRoutes) -> list[dict]:
    out = []
    for rank, route in enumerate(ranked, start=1):
        z = route.itinerary
        out.append(
            {
                "rank": rank,
                "visits": [
                    {
                        "arrival": format_hhmm(e.arrival),
                        "spot": sc.symbol(e.spot),
                        "score": fmt_score(e.score),
                    }
                    for e in z.entries
                ],
                "tour_score": fmt_score(route.score),
                "spot_count": len(z),
                "free_time_minutes": free_time(z, req.spots, req.matrix),
            }
        )
    return out


def create_app() -> FastAPI:
    app = FastAPI(title="tourplan", version="1")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    def get_session(sid: str) -> Session:
        s = sessions.get(sid)
        if s is None:
            _bad(404, "not_found", f"no session {sid!r}")
        return s

    @app.post("/v1/sessions", status_code=201)
    def create_session(body: dict):
        if not isinstance(body, dict):
            _bad(400, "invalid_request", "body must be a JSON object")
        has_builtin = "builtin" in body
        has_doc = "scenario" in body
        if has_builtin == has_doc:
            _bad(
                400,
                "invalid_request",
                "provide exactly one of 'builtin' or 'scenario'",
            )
        try:
            if has_builtin:
                sc = builtin_scenario(body["builtin"])
            else:
                sc = load_scenario(body["scenario"])
        except ScenarioError as exc:
            _bad(400, "scenario_invalid", str(exc))
        session = Session(
            id=uuid.uuid4().hex[:12],
            scenario=sc,
            visited=set(sc.visited),
            position=sc.origin,
            now=sc.now,
        )
        with registry_lock:
            sessions[session.id] = session
        return {"session_id": session.id, "state": session.snapshot()}

    @app.get("/v1/sessions/{sid}")
    def get_state(sid: str):
        return get_session(sid).snapshot()

    @app.post("/v1/sessions/{sid}/recommend")
    def recommend(sid: str, body: dict | None = None):
        session = get_session(sid)
        body = body or {}
        algorithm = body.get("algorithm", "B")
        if algorithm not in ("A", "B", "C"):
            _bad(400, "invalid_request", f"unknown algorithm {algorithm!r} (want A, B or C)")
        width = body.get("width")
        if width is not None and algorithm != "C":
            _bad(400, "invalid_request", "width only applies to algorithm C")
        if width is None:
            width = DEFAULT_WIDTH_C if algorithm == "C" else 1
        if not isinstance(width, int) or isinstance(width, bool) or width < 1:
            _bad(400, "invalid_request", "width must be a positive integer")
        n_results = body.get("n_results", 3)
        if not isinstance(n_results, int) or isinstance(n_results, bool) or n_results < 1:
            _bad(400, "invalid_request", "n_results must be a positive integer")

        with session.lock:  # snapshot; the search itself runs unlocked
            if session.tour_over:
                _bad(409, "tour_over", "the tour window is already over")
            req = PlanRequest(
                state=session.planner_state(),
                spots=session.scenario.spots,
                table=session.score_table(),
                matrix=session.scenario.matrix,
                n_results=n_results,
                width=width,
            )
        ranked = plan_time_series(req) if algorithm == "A" else plan_whole_greedy(req)
        routes = _routes_payload(session.scenario, req, ranked)
        mean = (
            sum(r.score for r in ranked) / len(ranked) if len(ranked) else 0.0
        )
        return {
            "algorithm": algorithm,
            "width": width if algorithm != "A" else None,
            "routes": routes,
            "mean_tour_score": fmt_score(mean),
        }

    @app.post("/v1/sessions/{sid}/visits")
    def commit_visit(sid: str, body: dict):
        session = get_session(sid)
        sc = session.scenario
        symbol = body.get("spot")
        if not isinstance(symbol, str):
            _bad(400, "invalid_request", "'spot' must be a spot id string")
        try:
            spot = sc.index_of(symbol)
        except KeyError:
            _bad(400, "invalid_request", f"unknown spot {symbol!r}")
        raw_arrival = body.get("arrival")
        if not isinstance(raw_arrival, str):
            _bad(400, "invalid_request", "'arrival' must be a HH:MM string")
        try:
            arrival = parse_hhmm(raw_arrival)
        except ValueError as exc:
            _bad(400, "invalid_request", str(exc))

        with session.lock:
            if session.tour_over:
                _bad(409, "tour_over", "the tour window is already over")
            if spot in session.visited:
                _bad(409, "infeasible_visit", f"{symbol} was already visited")
            # Freeze the score under the current table; a misaligned arrival
            # never reaches scoring because the conflict check rejects it.
            score = (
                value(spot, arrival, session.score_table())
                if sc.grid.is_aligned(arrival)
                else 0.0
            )
            entry = VisitEntry(arrival, spot, score)
            conflict = insertion_conflict(
                session.committed_itinerary(), entry, sc.spots, sc.matrix, sc.grid
            )
            if conflict is not None:
                _bad(409, "infeasible_visit", conflict)
            session.committed.append(entry)
            session.visited.add(spot)
            session.position = spot
            session.now = arrival + sc.spots[spot].stay_minutes
            return session.snapshot()

    @app.put("/v1/sessions/{sid}/context")
    def set_context(sid: str, body: dict):
        session = get_session(sid)
        sc = session.scenario
        if not isinstance(body, dict) or not body:
            _bad(400, "invalid_request", "provide 'weather' and/or 'congestion'")
        weather = session.weather_override
        if "weather" in body:
            try:
                weather = _parse_weather(body["weather"], sc.grid)
            except ScenarioError as exc:
                _bad(400, "invalid_request", str(exc))
        congestion = dict(session.congestion_overrides)
        if "congestion" in body:
            raw = body["congestion"]
            if not isinstance(raw, dict):
                _bad(400, "invalid_request", "'congestion' must map spot ids to sample lists")
            for symbol, samples in raw.items():
                try:
                    spot = sc.index_of(symbol)
                except KeyError:
                    _bad(400, "invalid_request", f"unknown spot {symbol!r}")
                if (
                    not isinstance(samples, list)
                    or not samples
                    or any(
                        not isinstance(v, (int, float)) or isinstance(v, bool) or v < 0
                        for v in samples
                    )
                ):
                    _bad(
                        400,
                        "invalid_request",
                        f"congestion.{symbol} must be a non-empty list of non-negative numbers",
                    )
                congestion[spot] = tuple(float(v) for v in samples)
        with session.lock:
            try:
                # Build once up front so bad context is rejected, not stored.
                sc.score_table(
                    weather_override=weather,
                    congestion_overrides=congestion or None,
                )
            except ScenarioError as exc:
                _bad(400, "invalid_request", str(exc))
            session.weather_override = weather
            session.congestion_overrides = congestion
        return {
            "ok": True,
            "weather_override": (
                [c.value for c in weather.conditions] if weather else None
            ),
            "congestion_overrides": sorted(sc.symbol(i) for i in congestion),
        }

    @app.get("/v1/scenarios/builtin/{name}")
    def get_builtin(name: str):
        if name not in BUILTIN_NAMES:
            _bad(404, "not_found", f"no builtin scenario {name!r}")
        return save_scenario(builtin_scenario(name))

    return app


app = create_app()
