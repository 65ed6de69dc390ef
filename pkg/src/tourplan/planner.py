"""Route search over slotted visit schedules.

Three strategies share one vocabulary: a *candidate pair* is an (arrival
label, spot) combination, and an itinerary grows by inserting pairs that keep
every travel/stay leg feasible.

``plan_time_series``
    Chain greedily forward from each possible first spot: always move to the
    reachable spot whose value at its own earliest arrival is highest.  The
    returned routes are ordered by the value of that first move (the "what
    should I do next" ranking), not by the whole-route score.

``plan_whole_greedy``
    For each possible first spot, repeatedly insert candidate pairs anywhere
    in the schedule in descending value order.  ``width=1`` commits to the
    single best feasible pair at every step; ``width=k`` branches over the
    top ``k`` feasible pairs and keeps the best completed route per branch,
    stopping a level once ``k`` branch results are collected.  Routes are
    ranked by tour score.

All tie-breaking is fixed: higher value first, then earlier arrival, then
lower spot index, so identical requests always return identical results.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import (
    Itinerary,
    PlannerState,
    Spot,
    TravelMatrix,
    VisitEntry,
    earliest_arrival,
    tour_score,
)
from .scoring import ScoreTable, value


@dataclass(frozen=True)
class CandidatePair:
    """A possible visit: aligned arrival, spot index, value at that arrival."""

    arrival: int
    spot: int
    value: float


@dataclass(frozen=True)
class PlanRequest:
    """Everything a planner needs for one search."""

    state: PlannerState
    spots: tuple[Spot, ...]
    table: ScoreTable
    matrix: TravelMatrix
    n_results: int = 3
    width: int = 1

    def __post_init__(self):
        if self.n_results < 1:
            raise ValueError("n_results must be at least 1")
        if self.width < 1:
            raise ValueError("width must be at least 1")


@dataclass(frozen=True)
class ScoredRoute:
    itinerary: Itinerary
    score: float


@dataclass(frozen=True)
class RankedRoutes:
    routes: tuple[ScoredRoute, ...] = ()

    @property
    def best(self) -> ScoredRoute | None:
        return self.routes[0] if self.routes else None

    def __len__(self) -> int:
        return len(self.routes)

    def __iter__(self):
        return iter(self.routes)


def candidate_pairs(
    state: PlannerState, table: ScoreTable, z: Itinerary
) -> list[CandidatePair]:
    """Every (arrival label, unvisited spot) pair open to ``z``, best first.

    Spots already in ``z`` are dropped; feasibility of the remaining pairs is
    *not* judged here — pairs at the window end, say, are listed even though
    no stay fits after them.  Order: value descending, then earlier arrival,
    then lower spot index.
    """
    taken = z.spot_ids()
    pairs = [
        CandidatePair(a, s, value(s, a, table))
        for s in state.candidate_ids() - taken
        for a in state.grid.labels()
    ]
    pairs.sort(key=lambda p: (-p.value, p.arrival, p.spot))
    return pairs


def rank_and_present(routes: list[Itinerary], n_results: int) -> RankedRoutes:
    """Order routes by tour score and keep the best few, one per first spot.

    Stable sort, score descending; ties broken by the first visit's arrival,
    then its spot index.  If several routes open with the same spot only the
    best of them survives.
    """
    best_by_first: dict[int, tuple[Itinerary, float]] = {}
    for z in routes:
        if not z.entries:
            continue
        score = tour_score(z)
        first = z.entries[0].spot
        held = best_by_first.get(first)
        if held is None or score > held[1]:
            best_by_first[first] = (z, score)
    ordered = sorted(
        best_by_first.values(),
        key=lambda pair: (-pair[1], pair[0].entries[0].arrival, pair[0].entries[0].spot),
    )
    return RankedRoutes(
        tuple(ScoredRoute(z, score) for z, score in ordered[:n_results])
    )


def _first_moves(req: PlanRequest) -> list[tuple[int, int]]:
    """Feasible opening visits as (spot, aligned arrival), spot index order."""
    state = req.state
    moves = []
    for s in sorted(state.candidate_ids()):
        arr = earliest_arrival(state.position, state.now, s, req.matrix, state.grid)
        if arr is None or arr + req.spots[s].stay_minutes > state.grid.end:
            continue
        moves.append((s, arr))
    return moves


def plan_time_series(req: PlanRequest) -> RankedRoutes:
    """Forward-chaining greedy search; see module docstring for the ranking."""
    state, spots, table, matrix, grid = (
        req.state,
        req.spots,
        req.table,
        req.matrix,
        req.state.grid,
    )
    candidates = state.candidate_ids()

    built: list[tuple[float, int, int, Itinerary]] = []
    for first, arr in _first_moves(req):
        z = Itinerary(state.position, state.now).with_entry(
            VisitEntry(arr, first, value(first, arr, table))
        )
        used = {first}
        while True:
            last = z.entries[-1]
            depart = last.arrival + spots[last.spot].stay_minutes
            step_best = None
            for s in candidates:
                if s in used:
                    continue
                a = earliest_arrival(last.spot, depart, s, matrix, grid)
                if a is None or a + spots[s].stay_minutes > grid.end:
                    continue
                v = value(s, a, table)
                key = (-v, a, s)
                if step_best is None or key < step_best[0]:
                    step_best = (key, VisitEntry(a, s, v))
            if step_best is None:
                break
            z = z.with_entry(step_best[1])
            used.add(step_best[1].spot)
        first_entry = z.entries[0]
        built.append((first_entry.score, first_entry.arrival, first_entry.spot, z))

    # Rank by the opening move's value — the "best next spot" ordering — not by
    # whole-route score.  The whole-route planners rank by score instead.
    built.sort(key=lambda item: (-item[0], item[1], item[2]))
    return RankedRoutes(
        tuple(
            ScoredRoute(z, tour_score(z)) for _, _, _, z in built[: req.n_results]
        )
    )


def plan_whole_greedy(req: PlanRequest) -> RankedRoutes:
    """Insertion search over candidate pairs with a branching width.

    Identical chains reached through different insertion orders are searched
    once (pure memoisation; the subtree outcome depends only on the chain).
    """
    state, spots, matrix, grid = req.state, req.spots, req.matrix, req.state.grid
    width = req.width
    end = grid.end
    depart = state.now
    origin = state.position
    travel = [list(row) for row in matrix.minutes]
    stay = [s.stay_minutes for s in spots]

    # Candidate pairs in search order, trimmed to those whose stay can ever
    # complete — the dropped ones could never pass the insertion check and by
    # construction never count against the width.
    ts: list[tuple[int, int, float]] = []
    pair_value: dict[tuple[int, int], float] = {}
    for p in candidate_pairs(req.state, req.table, Itinerary(origin, depart)):
        pair_value[(p.arrival, p.spot)] = p.value
        if p.arrival + stay[p.spot] <= end:
            ts.append((p.arrival, p.spot, p.value))

    def chain_score(chain: tuple[tuple[int, int], ...]) -> float:
        return sum(pair_value[p] for p in chain)

    memo: dict[tuple, list[tuple[float, tuple]]] = {}

    def search(chain: tuple[tuple[int, int], ...], mask: int) -> list[tuple[float, tuple]]:
        held = memo.get(chain)
        if held is not None:
            return held
        results: list[tuple[float, tuple]] = []
        for a, s, _v in ts:
            if mask & (1 << s):
                continue
            # Feasibility against the chain: the same leg inequalities as
            # model.check_insert, specialised to aligned, stay-trimmed pairs.
            pos = 0
            pred = None
            succ = None
            for e in chain:
                if e[0] <= a:
                    pred = e
                    pos += 1
                else:
                    succ = e
                    break
            if pred is None:
                if depart + travel[origin][s] > a:
                    continue
            elif pred[0] + stay[pred[1]] + travel[pred[1]][s] > a:
                continue
            if succ is not None and a + stay[s] + travel[s][succ[1]] > succ[0]:
                continue
            grown = chain[:pos] + ((a, s),) + chain[pos:]
            sub = search(grown, mask | (1 << s))
            results.append(max(sub, key=lambda r: r[0]))
            if len(results) >= width:
                break
        if not results:
            results = [(chain_score(chain), chain)]
        memo[chain] = results
        return results

    routes: list[Itinerary] = []
    for first, arr in _first_moves(req):
        outcomes = search(((arr, first),), 1 << first)
        _, best_chain = max(outcomes, key=lambda r: r[0])
        z = Itinerary(origin, depart)
        for a, s in best_chain:
            z = z.with_entry(VisitEntry(a, s, pair_value[(a, s)]))
        routes.append(z)
    return rank_and_present(routes, req.n_results)
