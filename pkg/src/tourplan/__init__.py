"""Plan sightseeing tours whose spot values change over the day.

A tour is an ordered list of visits inside a slotted time window.  Each visit
earns the spot's value at its arrival slot: a static preference score plus
time-dependent terms for timeliness, crowding and weather.  Three planners
build routes (forward chaining, whole-route greedy, width-k tree search), an
exhaustive oracle referees them on small instances, and a scenario format plus
HTTP service and CLI wrap the whole thing.
"""

from .errors import (
    InfeasibleRouteError,
    OracleLimitError,
    OutOfWindowError,
    ScenarioError,
    SessionError,
    TourPlanError,
)
from .model import (
    Itinerary,
    PlannerState,
    Spot,
    TimeGrid,
    TimePoint,
    TravelMatrix,
    VisitEntry,
    align_up,
    check_insert,
    earliest_arrival,
    format_hhmm,
    free_time,
    free_time_legs,
    insertion_conflict,
    parse_hhmm,
    tour_score,
    validate_itinerary,
)
from .oracle import OracleLimits, exact_best_routes, exact_ev
from .planner import (
    CandidatePair,
    PlanRequest,
    RankedRoutes,
    ScoredRoute,
    candidate_pairs,
    plan_time_series,
    plan_whole_greedy,
    rank_and_present,
)
from .scenario import (
    BUILTIN_NAMES,
    RandomInstanceSpec,
    Scenario,
    builtin_scenario,
    builtin_synth20,
    builtin_table3,
    dumps,
    generate_random,
    load_scenario,
    loads,
    save_scenario,
)
from .scoring import (
    CongestionTrace,
    ScoreTable,
    Weather,
    WeatherPlan,
    congestion_to_ce,
    slots_to_labels,
    time_value,
    value,
    weather_effect,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES",
    "CandidatePair",
    "CongestionTrace",
    "InfeasibleRouteError",
    "Itinerary",
    "OracleLimitError",
    "OracleLimits",
    "OutOfWindowError",
    "PlanRequest",
    "PlannerState",
    "RandomInstanceSpec",
    "RankedRoutes",
    "Scenario",
    "ScenarioError",
    "ScoreTable",
    "ScoredRoute",
    "SessionError",
    "Spot",
    "TimeGrid",
    "TimePoint",
    "TourPlanError",
    "TravelMatrix",
    "VisitEntry",
    "Weather",
    "WeatherPlan",
    "align_up",
    "builtin_scenario",
    "builtin_synth20",
    "builtin_table3",
    "candidate_pairs",
    "check_insert",
    "congestion_to_ce",
    "dumps",
    "earliest_arrival",
    "exact_best_routes",
    "exact_ev",
    "format_hhmm",
    "free_time",
    "free_time_legs",
    "generate_random",
    "insertion_conflict",
    "load_scenario",
    "loads",
    "parse_hhmm",
    "plan_time_series",
    "plan_whole_greedy",
    "rank_and_present",
    "save_scenario",
    "slots_to_labels",
    "time_value",
    "tour_score",
    "validate_itinerary",
    "value",
    "weather_effect",
]
