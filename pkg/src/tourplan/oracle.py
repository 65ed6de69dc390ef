"""Exact reference search: exponential, memoised, and limited to small instances.

The planners are heuristics; this module answers "what was actually optimal"
for instances small enough to enumerate.  A schedule here is any feasible
chain of (arrival label, spot) visits — waiting before a visit is allowed —
with each per-first-spot result pinning that spot at its earliest arrival,
exactly the opening move the planners commit to.

Being a reference, this code favours clarity over speed and refuses instances
beyond its configured limits rather than silently truncating the search.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OracleLimitError
from .model import Itinerary, Spot, TravelMatrix, VisitEntry, align_up, earliest_arrival
from .planner import PlanRequest, RankedRoutes, rank_and_present
from .scoring import ScoreTable, value


@dataclass(frozen=True)
class OracleLimits:
    """Hard caps keeping the exhaustive search tractable."""

    max_spots: int = 12
    max_slots: int = 48
    node_budget: int = 5_000_000


class _Budget:
    def __init__(self, nodes: int):
        self.left = nodes

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise OracleLimitError("exact search exceeded its node budget")


def _check_limits(n_candidates: int, n_slots: int, limits: OracleLimits) -> None:
    if n_candidates > limits.max_spots:
        raise OracleLimitError(
            f"{n_candidates} candidate spots exceed the exact-search cap of "
            f"{limits.max_spots}"
        )
    if n_slots > limits.max_slots:
        raise OracleLimitError(
            f"{n_slots} slots exceed the exact-search cap of {limits.max_slots}"
        )


def exact_ev(
    spot: int,
    remaining: frozenset[int],
    t_after: int,
    spots: tuple[Spot, ...],
    table: ScoreTable,
    matrix: TravelMatrix,
    limits: OracleLimits = OracleLimits(),
) -> float:
    """Best achievable remaining score after finishing ``spot`` at ``t_after``.

    Considers every still-unvisited successor at every aligned arrival it can
    make (waiting allowed) and recurses; 0 when the window is spent or nobody
    is reachable with a full stay.
    """
    grid = table.grid
    _check_limits(len(remaining), grid.n_slots, limits)
    budget = _Budget(limits.node_budget)
    labels = grid.labels()
    stay = [s.stay_minutes for s in spots]
    memo: dict[tuple[int, frozenset[int], int], float] = {}

    def rec(prev: int, left: frozenset[int], t: int) -> float:
        if t >= grid.end:
            return 0.0
        key = (prev, left, t)
        held = memo.get(key)
        if held is not None:
            return held
        budget.spend()
        best = 0.0
        for s in left:
            amin = earliest_arrival(prev, t, s, matrix, grid)
            if amin is None:
                continue
            for a in labels:
                if a < amin:
                    continue
                if a + stay[s] > grid.end:
                    break
                v = value(s, a, table) + rec(s, left - {s}, a + stay[s])
                if v > best:
                    best = v
        memo[key] = best
        return best

    return rec(spot, remaining, t_after)


def exact_best_routes(
    req: PlanRequest, limits: OracleLimits = OracleLimits()
) -> RankedRoutes:
    """Optimal routes per first spot, ranked by tour score.

    For each feasible opening spot, pins it at its earliest arrival and
    maximises over every feasible chain containing that pinned visit — later
    visits at any aligned arrival they can make, and (for matrices without
    the triangle property) even earlier fill-in visits squeezed before it.
    """
    state, spots, table, matrix = req.state, req.spots, req.table, req.matrix
    grid = state.grid
    candidates = sorted(state.candidate_ids())
    _check_limits(len(candidates), grid.n_slots, limits)
    budget = _Budget(limits.node_budget)
    labels = grid.labels()
    stay = [s.stay_minutes for s in spots]

    def best_with_pin(pin_spot: int, pin_arr: int):
        """Max score and witness chain over chains containing the pinned pair."""
        memo: dict[tuple[int, int, int, bool], tuple[float, tuple] | None] = {}

        def rec(prev: int, t: int, mask: int, pin_done: bool):
            key = (prev, t, mask, pin_done)
            if key in memo:
                return memo[key]
            budget.spend()
            # None means no valid completion (the pinned visit never fits).
            best: tuple[float, tuple] | None = (0.0, ()) if pin_done else None
            for s in candidates:
                bit = 1 << s
                if mask & bit:
                    continue
                amin = earliest_arrival(prev, t, s, matrix, grid)
                if amin is None:
                    continue
                if s == pin_spot:
                    arrivals = [pin_arr] if amin <= pin_arr else []
                else:
                    arrivals = [a for a in labels if a >= amin]
                for a in arrivals:
                    if a + stay[s] > grid.end:
                        continue
                    # While the pin is pending, only earlier pairs can precede it.
                    if not pin_done and s != pin_spot and a >= pin_arr:
                        continue
                    sub = rec(s, a + stay[s], mask | bit, pin_done or s == pin_spot)
                    if sub is None:
                        continue
                    cand = (value(s, a, table) + sub[0], ((a, s),) + sub[1])
                    if best is None or cand[0] > best[0]:
                        best = cand
            memo[key] = best
            return best

        return rec(state.position, state.now, 0, False)

    routes: list[Itinerary] = []
    for s in candidates:
        e = earliest_arrival(state.position, state.now, s, matrix, grid)
        if e is None or e + stay[s] > grid.end:
            continue
        outcome = best_with_pin(s, e)
        if outcome is None:
            continue
        z = Itinerary(state.position, state.now)
        for a, sp in outcome[1]:
            z = z.with_entry(VisitEntry(a, sp, value(sp, a, table)))
        routes.append(z)
    return rank_and_present(routes, req.n_results)
