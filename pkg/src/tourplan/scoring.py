"""Per-spot, per-time scoring: static appeal plus time-dependent adjustments.

A spot's value at an aligned arrival time decomposes as

    value = static + (timeliness + crowding + weather)

where the bracketed part is the time-dependent portion.  Score tables hold one
row per spot and one column per arrival label (slot starts plus the window
end), so a value exists for every time a candidate visit could nominally start.

Tables can also be loaded verbatim from a fully specified value matrix; such
direct tables keep the same decomposition shape with the whole value carried
in the timeliness component and zeros elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import TimeGrid, TimePoint

CONGESTION_SAMPLE_MINUTES = 30

# Component ranges for decomposed tables (direct tables are exempt).
STATIC_RANGE = (1.0, 5.0)
TIMELINESS_RANGE = (0.0, 2.0)
CROWDING_RANGE = (0.0, 2.0)


class Weather(str, Enum):
    SUNNY = "sunny"
    RAIN = "rain"


def weather_effect(indoor: bool, condition: Weather) -> float:
    """Score adjustment for visiting an indoor/outdoor spot in given weather.

    Outdoor spots gain +1 in sunshine and lose 1 in rain; indoor spots gain +1
    in rain (a dry refuge) and are indifferent to sunshine.
    """
    if indoor:
        return 1.0 if condition is Weather.RAIN else 0.0
    return -1.0 if condition is Weather.RAIN else 1.0


@dataclass(frozen=True)
class WeatherPlan:
    """Forecast condition for every arrival label of the grid."""

    conditions: tuple[Weather, ...]

    @classmethod
    def constant(cls, grid: TimeGrid, condition: Weather) -> "WeatherPlan":
        return cls((condition,) * grid.n_labels)

    def __len__(self) -> int:
        return len(self.conditions)


@dataclass(frozen=True)
class CongestionTrace:
    """Raw congestion samples per spot, one value per 30-minute interval.

    ``samples[spot][k]`` covers the half hour starting ``grid.start + 30*k``.
    A trace may be shorter than the window; the final sample then holds for the
    remainder (a forecast that simply stops updating).  At least one sample per
    spot is required.
    """

    samples: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        for i, row in enumerate(self.samples):
            if not row:
                raise ValueError(f"congestion trace for spot {i} is empty")
            if any(v < 0 for v in row):
                raise ValueError(f"congestion trace for spot {i} has negative samples")


def congestion_to_ce(trace: CongestionTrace, grid: TimeGrid) -> tuple[tuple[float, ...], ...]:
    """Turn raw congestion into a 0..2 crowding score, one value per slot.

    Each 30-minute sample is spread over the slots it covers (slot widths that
    divide 30) or averaged into the slot that spans it (multiples of 30), then
    rescaled per spot so that the spot's own busiest slot scores 0 and its
    quietest scores 2.  A spot with a flat trace scores the neutral 1.0
    everywhere.  Less congestion means a higher score, never the reverse.
    """
    if CONGESTION_SAMPLE_MINUTES % grid.slot_width and grid.slot_width % CONGESTION_SAMPLE_MINUTES:
        raise ValueError(
            f"slot width {grid.slot_width} must divide or be a multiple of "
            f"{CONGESTION_SAMPLE_MINUTES} minutes"
        )
    out = []
    for row in trace.samples:
        per_slot = []
        for slot in range(grid.n_slots):
            t_off = slot * grid.slot_width
            if grid.slot_width <= CONGESTION_SAMPLE_MINUTES:
                per_slot.append(row[min(t_off // CONGESTION_SAMPLE_MINUTES, len(row) - 1)])
            else:
                per_sample = grid.slot_width // CONGESTION_SAMPLE_MINUTES
                first = t_off // CONGESTION_SAMPLE_MINUTES
                covered = [
                    row[min(first + k, len(row) - 1)] for k in range(per_sample)
                ]
                per_slot.append(sum(covered) / len(covered))
        lo, hi = min(per_slot), max(per_slot)
        if hi == lo:
            out.append(tuple(1.0 for _ in per_slot))
        else:
            out.append(tuple(2.0 * (hi - v) / (hi - lo) for v in per_slot))
    return tuple(out)


def weather_to_we(
    indoor_flags: tuple[bool, ...], plan: WeatherPlan
) -> tuple[tuple[float, ...], ...]:
    """Per-spot, per-label weather adjustment rows for a forecast plan."""
    return tuple(
        tuple(weather_effect(indoor, c) for c in plan.conditions)
        for indoor in indoor_flags
    )


def slots_to_labels(per_slot: tuple[float, ...]) -> tuple[float, ...]:
    """Extend a per-slot row to arrival labels; the window end reuses the last slot."""
    return per_slot + (per_slot[-1],)


@dataclass(frozen=True)
class ScoreTable:
    """Frozen score components: one row per spot, one column per arrival label.

    ``static`` is per spot; ``timeliness``, ``crowding`` and ``weather`` are
    per spot and label.  ``value()`` is always exactly the sum of the four.
    """

    grid: TimeGrid
    static: tuple[float, ...]
    timeliness: tuple[tuple[float, ...], ...]
    crowding: tuple[tuple[float, ...], ...]
    weather: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        n = len(self.static)
        width = self.grid.n_labels
        for name, rows in (
            ("timeliness", self.timeliness),
            ("crowding", self.crowding),
            ("weather", self.weather),
        ):
            if len(rows) != n:
                raise ValueError(f"{name} has {len(rows)} rows, want {n}")
            for i, row in enumerate(rows):
                if len(row) != width:
                    raise ValueError(
                        f"{name}[{i}] has {len(row)} labels, want {width}"
                    )

    @property
    def n_spots(self) -> int:
        return len(self.static)

    @classmethod
    def from_components(
        cls,
        grid: TimeGrid,
        static: tuple[float, ...],
        timeliness: tuple[tuple[float, ...], ...],
        crowding: tuple[tuple[float, ...], ...],
        weather: tuple[tuple[float, ...], ...],
    ) -> "ScoreTable":
        return cls(grid, static, timeliness, crowding, weather)

    @classmethod
    def from_direct(
        cls, grid: TimeGrid, values: tuple[tuple[float, ...], ...]
    ) -> "ScoreTable":
        """Wrap a ready-made value matrix (no meaningful decomposition)."""
        n = len(values)
        width = grid.n_labels
        zeros = tuple((0.0,) * width for _ in range(n))
        return cls(grid, (0.0,) * n, values, zeros, zeros)


def time_value(spot: int, t: TimePoint, table: ScoreTable) -> float:
    """The time-dependent portion of a spot's value at an aligned time."""
    i = table.grid.label_index(t)
    return table.timeliness[spot][i] + table.crowding[spot][i] + table.weather[spot][i]


def value(spot: int, t: TimePoint, table: ScoreTable) -> float:
    """Full value of visiting ``spot`` with arrival ``t``: static plus timed parts."""
    return table.static[spot] + time_value(spot, t, table)
