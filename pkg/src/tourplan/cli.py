"""Command-line front door: batch planning, width sweeps, route scoring, benchmarks.

Exit codes: 0 success, 2 usage error, 3 scenario load/validation error,
4 infeasible route.
"""

from __future__ import annotations

import json
import statistics
import sys
import time
from pathlib import Path

import click

from .errors import InfeasibleRouteError, ScenarioError
from .model import (
    Itinerary,
    VisitEntry,
    format_hhmm,
    free_time,
    free_time_legs,
    parse_hhmm,
    validate_itinerary,
)
from .planner import PlanRequest, RankedRoutes, plan_time_series, plan_whole_greedy
from .scenario import BUILTIN_NAMES, Scenario, builtin_scenario, loads
from .scoring import value

EXIT_LOAD = 3
EXIT_INFEASIBLE = 4

DEFAULT_WIDTH = 3


def _load(scenario: str) -> Scenario:
    """Resolve --scenario as a builtin name first, then as a file path."""
    if scenario in BUILTIN_NAMES:
        return builtin_scenario(scenario)
    path = Path(scenario)
    if not path.exists():
        raise ScenarioError(
            "scenario",
            f"{scenario!r} is neither a builtin ({', '.join(sorted(BUILTIN_NAMES))}) "
            "nor an existing file",
        )
    try:
        return loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ScenarioError("scenario", f"{scenario}: not valid JSON ({exc})") from None


def _request(sc: Scenario, width: int, top: int) -> PlanRequest:
    return sc.request(n_results=top, width=width)


def _run(algorithm: str, req: PlanRequest) -> RankedRoutes:
    return plan_time_series(req) if algorithm == "A" else plan_whole_greedy(req)


def _fmt(x: float) -> str:
    return f"{x:.1f}"


def _route_doc(sc: Scenario, req: PlanRequest, rank: int, route) -> dict:
    z = route.itinerary
    return {
        "rank": rank,
        "visits": [
            {
                "arrival": format_hhmm(e.arrival),
                "spot": sc.symbol(e.spot),
                "score": _fmt(e.score),
            }
            for e in z.entries
        ],
        "tour_score": _fmt(route.score),
        "spot_count": len(z),
        "free_time_minutes": free_time(z, req.spots, req.matrix),
    }


def _print_routes(sc: Scenario, req: PlanRequest, ranked: RankedRoutes) -> None:
    for rank, route in enumerate(ranked, start=1):
        z = route.itinerary
        visits = " ".join(
            f"[{format_hhmm(e.arrival)}, {sc.symbol(e.spot)}, {_fmt(e.score)}]"
            for e in z.entries
        )
        click.echo(f"{rank}) {visits}  score {_fmt(route.score)}, spots {len(z)}")
        legs = free_time_legs(z, req.spots, req.matrix)
        breakdown = ", ".join(f"{name} +{slack}" for name, slack in legs)
        click.echo(
            f"   free time {free_time(z, req.spots, req.matrix)} min"
            + (f" ({breakdown})" if breakdown else "")
        )
    if len(ranked):
        mean = sum(r.score for r in ranked) / len(ranked)
        click.echo(f"mean tour score: {_fmt(mean)}")


class _Failure(click.ClickException):
    """ClickException with a configurable exit code."""

    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.exit_code = code


def _guard(fn):
    """Map domain errors to the documented exit codes."""

    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ScenarioError as exc:
            raise _Failure(str(exc), EXIT_LOAD) from None
        except InfeasibleRouteError as exc:
            raise _Failure(str(exc), EXIT_INFEASIBLE) from None

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


scenario_option = click.option(
    "--scenario",
    required=True,
    help=f"Builtin name ({', '.join(sorted(BUILTIN_NAMES))}) or scenario file path.",
)
format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "machine"]),
    default="table",
    show_default=True,
    help="Human-readable table or machine-readable JSON.",
)


@click.group()
def main():
    """Plan sightseeing tours whose spot values change over the day."""


@main.command()
@scenario_option
@click.option(
    "--algorithm",
    type=click.Choice(["A", "B", "C"]),
    default="B",
    show_default=True,
    help="A: forward chaining; B: whole-route greedy; C: width-k tree search.",
)
@click.option(
    "--width",
    type=click.IntRange(min=1),
    default=DEFAULT_WIDTH,
    show_default=True,
    help="Search width for algorithm C (ignored by A and B).",
)
@click.option("--top", type=click.IntRange(min=1), default=3, show_default=True)
@format_option
@_guard
def plan(scenario, algorithm, width, top, fmt):
    """Print the top ranked routes for one scenario and algorithm."""
    sc = _load(scenario)
    effective_width = width if algorithm == "C" else 1
    req = _request(sc, effective_width, top)
    ranked = _run(algorithm, req)
    if fmt == "machine":
        doc = {
            "scenario": sc.name,
            "algorithm": algorithm,
            "width": effective_width,
            "routes": [
                _route_doc(sc, req, rank, r) for rank, r in enumerate(ranked, start=1)
            ],
            "mean_tour_score": _fmt(
                sum(r.score for r in ranked) / len(ranked) if len(ranked) else 0.0
            ),
        }
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo(f"scenario {sc.name} | algorithm {algorithm} | top {top}")
        _print_routes(sc, req, ranked)


@main.command("sweep-width")
@scenario_option
@click.argument("k_min", type=click.IntRange(min=1), default=1, required=False)
@click.argument("k_max", type=click.IntRange(min=1), default=5, required=False)
@click.option("--top", type=click.IntRange(min=1), default=3, show_default=True)
@click.option(
    "--repeat",
    type=click.IntRange(min=1),
    default=1,
    show_default=True,
    help="Timing repetitions per width.",
)
@format_option
@_guard
def sweep_width(scenario, k_min, k_max, top, repeat, fmt):
    """Run the width-k tree search for each k in K_MIN..K_MAX and tabulate."""
    if k_min > k_max:
        raise click.UsageError(f"k_min {k_min} exceeds k_max {k_max}")
    sc = _load(scenario)
    rows = []
    for k in range(k_min, k_max + 1):
        req = _request(sc, k, top)
        times = []
        ranked = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            ranked = plan_whole_greedy(req)
            times.append(time.perf_counter() - t0)
        best = ranked.best
        rows.append(
            {
                "width": k,
                "best_score": _fmt(best.score) if best else _fmt(0.0),
                "best_route": _route_doc(sc, req, 1, best)["visits"] if best else [],
                "mean_seconds": round(sum(times) / len(times), 6),
            }
        )
    if fmt == "machine":
        click.echo(json.dumps({"scenario": sc.name, "rows": rows}, indent=2))
    else:
        click.echo(f"scenario {sc.name} | width sweep {k_min}..{k_max}")
        click.echo("width  best score  mean seconds")
        for row in rows:
            click.echo(
                f"{row['width']:>5}  {row['best_score']:>10}  {row['mean_seconds']:.3f}"
            )


@main.command("score-route")
@scenario_option
@click.argument("route_file", type=click.Path(exists=True, dir_okay=False))
@format_option
@_guard
def score_route(scenario, route_file, fmt):
    """Evaluate fixed routes from ROUTE_FILE under the scenario's score tables.

    ROUTE_FILE is JSON: either {"visits": [{"arrival": "HH:MM", "spot": ID},
    ...]} for one route, or the machine output of `plan` (its "routes" list is
    scored row by row).
    """
    sc = _load(scenario)
    try:
        doc = json.loads(Path(route_file).read_text())
    except json.JSONDecodeError as exc:
        raise ScenarioError("route", f"{route_file}: not valid JSON ({exc})") from None
    if isinstance(doc, dict) and "visits" in doc:
        route_docs = [doc]
    elif isinstance(doc, dict) and isinstance(doc.get("routes"), list):
        route_docs = doc["routes"]
    else:
        raise ScenarioError("route", "expected a 'visits' list or a 'routes' list")

    table = sc.score_table()
    req = _request(sc, 1, 1)
    reports = []
    for route_doc in route_docs:
        visits = route_doc.get("visits")
        if not isinstance(visits, list):
            raise ScenarioError("route.visits", "must be a list of visits")
        z = Itinerary(sc.origin, sc.now)
        for i, raw in enumerate(visits):
            where = f"route.visits[{i}]"
            if not isinstance(raw, dict):
                raise ScenarioError(where, "must be an object")
            try:
                spot = sc.index_of(raw["spot"])
            except (KeyError, TypeError):
                raise ScenarioError(
                    where, f"unknown spot {raw.get('spot')!r}"
                ) from None
            try:
                arrival = parse_hhmm(raw["arrival"])
            except (KeyError, TypeError, ValueError):
                raise ScenarioError(
                    where, f"bad arrival {raw.get('arrival')!r}"
                ) from None
            if not sc.grid.is_aligned(arrival):
                raise InfeasibleRouteError(
                    f"arrival {format_hhmm(arrival)} is not on a slot boundary"
                )
            z = z.with_entry(VisitEntry(arrival, spot, value(spot, arrival, table)))
        validate_itinerary(z, sc.spots, sc.matrix, sc.grid)
        reports.append(
            {
                "visits": [
                    {
                        "arrival": format_hhmm(e.arrival),
                        "spot": sc.symbol(e.spot),
                        "score": _fmt(e.score),
                    }
                    for e in z.entries
                ],
                "tour_score": _fmt(sum(e.score for e in z.entries)),
                "spot_count": len(z),
                "free_time_minutes": free_time(z, sc.spots, sc.matrix),
                "free_time_legs": [
                    {"leg": name, "slack_minutes": slack}
                    for name, slack in free_time_legs(z, sc.spots, sc.matrix)
                ],
            }
        )
    if fmt == "machine":
        click.echo(json.dumps({"scenario": sc.name, "routes": reports}, indent=2))
    else:
        for n, rep in enumerate(reports, start=1):
            visits = " ".join(
                f"[{v['arrival']}, {v['spot']}, {v['score']}]" for v in rep["visits"]
            )
            click.echo(
                f"{n}) {visits}  score {rep['tour_score']}, spots {rep['spot_count']}"
            )
            breakdown = ", ".join(
                f"{leg['leg']} +{leg['slack_minutes']}" for leg in rep["free_time_legs"]
            )
            click.echo(
                f"   free time {rep['free_time_minutes']} min"
                + (f" ({breakdown})" if breakdown else "")
            )


@main.command()
@scenario_option
@click.option("--width", type=click.IntRange(min=1), default=DEFAULT_WIDTH, show_default=True)
@click.option("--top", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--repeat", type=click.IntRange(min=1), default=5, show_default=True)
@format_option
@_guard
def bench(scenario, width, top, repeat, fmt):
    """Time each algorithm over repeated runs (mean and standard deviation)."""
    sc = _load(scenario)
    rows = []
    for algorithm in ("A", "B", "C"):
        req = _request(sc, width if algorithm == "C" else 1, top)
        times = []
        ranked = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            ranked = _run(algorithm, req)
            times.append(time.perf_counter() - t0)
        mean = sum(times) / len(times)
        sd = statistics.stdev(times) if len(times) > 1 else 0.0
        best = ranked.best
        rows.append(
            {
                "algorithm": algorithm,
                "width": req.width,
                "repeat": repeat,
                "mean_seconds": round(mean, 6),
                "stddev_seconds": round(sd, 6),
                "best_score": _fmt(best.score) if best else _fmt(0.0),
            }
        )
    if fmt == "machine":
        click.echo(json.dumps({"scenario": sc.name, "rows": rows}, indent=2))
    else:
        click.echo(f"scenario {sc.name} | {repeat} runs per algorithm")
        click.echo("algorithm  width  mean±sd seconds  best score")
        for row in rows:
            click.echo(
                f"{row['algorithm']:>9}  {row['width']:>5}  "
                f"{row['mean_seconds']:.3f}±{row['stddev_seconds']:.3f}  "
                f"{row['best_score']:>10}"
            )


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP planning service."""
    import uvicorn

    uvicorn.run("tourplan.service:app", host=host, port=port)


if __name__ == "__main__":
    sys.exit(main())
