"""Independent brute-force referees for the planner and oracle tests.

Deliberately naive: enumerate every feasible schedule outright and take
maxima.  No memoisation, no pruning beyond raw feasibility, and no code
shared with the planners or the exact search beyond the basic time/score
arithmetic.  Only usable on small instances.
"""

from __future__ import annotations

from tourplan.model import align_up, earliest_arrival
from tourplan.planner import PlanRequest
from tourplan.scoring import ScoreTable, value

Chain = tuple[tuple[int, int], ...]  # ((arrival, spot), ...) in visit order


def chain_value(chain: Chain, table: ScoreTable) -> float:
    return sum(value(s, a, table) for a, s in chain)


def iter_chains(req: PlanRequest):
    """Yield every feasible chain (including the empty one), chronologically built.

    A chain is feasible when consecutive visits leave enough time for the full
    stay plus travel, arrivals sit on slot boundaries, and every stay ends by
    the window end.  Waiting is allowed: each visit may start at any aligned
    time at or after the earliest reachable one.
    """
    state, spots, matrix = req.state, req.spots, req.matrix
    grid = state.grid
    end = grid.end

    def rec(pos: int, t: int, left: frozenset[int], chain: Chain):
        yield chain
        for s in sorted(left):
            physical = t + matrix[pos, s]
            if physical > end:
                continue
            for a in range(align_up(physical, grid), end + 1, grid.slot_width):
                if a + spots[s].stay_minutes > end:
                    break
                yield from rec(
                    s, a + spots[s].stay_minutes, left - {s}, chain + ((a, s),)
                )

    yield from rec(state.position, state.now, frozenset(state.candidate_ids()), ())


def best_per_first(req: PlanRequest) -> dict[int, tuple[float, Chain]]:
    """Best score per opening spot pinned at its earliest reachable arrival.

    A chain counts for opening spot ``s`` when it contains the visit
    ``(earliest_arrival(s), s)`` anywhere — other visits may even precede it
    when a detour-free matrix makes that possible.
    """
    state, spots, matrix = req.state, req.spots, req.matrix
    grid = state.grid
    pins = {}
    for s in sorted(state.candidate_ids()):
        arr = earliest_arrival(state.position, state.now, s, matrix, grid)
        if arr is not None and arr + spots[s].stay_minutes <= grid.end:
            pins[s] = arr

    best: dict[int, tuple[float, Chain]] = {}
    for chain in iter_chains(req):
        score = chain_value(chain, req.table)
        for a, s in chain:
            if pins.get(s) == a:
                held = best.get(s)
                if held is None or score > held[0]:
                    best[s] = (score, chain)
    return best


def overall_best(req: PlanRequest) -> float:
    """Highest tour score over every feasible chain (0 when none exists)."""
    return max((chain_value(c, req.table) for c in iter_chains(req)), default=0.0)


def brute_ev(
    spot: int,
    remaining: frozenset[int],
    t_after: int,
    req: PlanRequest,
) -> float:
    """Best remaining score after finishing ``spot`` at ``t_after`` (may stop: ≥ 0)."""
    spots, matrix = req.spots, req.matrix
    grid = req.state.grid
    end = grid.end

    def rec(pos: int, t: int, left: frozenset[int]):
        yield 0.0
        for s in sorted(left):
            physical = t + matrix[pos, s]
            if physical > end:
                continue
            for a in range(align_up(physical, grid), end + 1, grid.slot_width):
                if a + spots[s].stay_minutes > end:
                    break
                v = value(s, a, req.table)
                for rest in rec(s, a + spots[s].stay_minutes, left - {s}):
                    yield v + rest

    return max(rec(spot, t_after, remaining))
