"""Time grid, spots, itineraries and the feasibility arithmetic they share.

All clock values are plain ``int`` minutes since midnight (see ``TimePoint``).
A tour happens inside a half-open window ``[start, end]`` cut into equal slots;
visits may only *start* on a slot boundary, so arrivals get rounded up.  The
window end itself is a valid arrival label (it shows up in candidate
enumeration) even though no visit starting there can ever finish in time.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .errors import InfeasibleRouteError, OutOfWindowError

# Minutes since midnight, 0..1440.  Kept as a plain int on purpose: times are
# added and compared constantly and wrapping them in a class buys nothing.
TimePoint = int

DAY_MINUTES = 24 * 60


def parse_hhmm(text: str) -> TimePoint:
    """Parse ``"HH:MM"`` into minutes since midnight (``"24:00"`` allowed)."""
    try:
        hh, mm = text.split(":")
        t = int(hh) * 60 + int(mm)
    except (ValueError, AttributeError):
        raise ValueError(f"not a HH:MM time: {text!r}") from None
    if not 0 <= t <= DAY_MINUTES or not 0 <= int(mm) < 60:
        raise ValueError(f"time out of range: {text!r}")
    return t


def format_hhmm(t: TimePoint) -> str:
    """Render minutes since midnight as ``"HH:MM"``."""
    if not 0 <= t <= DAY_MINUTES:
        raise ValueError(f"time out of range: {t}")
    return f"{t // 60:02d}:{t % 60:02d}"


@dataclass(frozen=True)
class TimeGrid:
    """The tour window ``[start, end]`` divided into ``slot_width``-minute slots."""

    start: TimePoint
    end: TimePoint
    slot_width: int

    def __post_init__(self):
        if not 0 <= self.start < self.end <= DAY_MINUTES:
            raise ValueError(f"invalid tour window {self.start}..{self.end}")
        if self.slot_width <= 0:
            raise ValueError(f"slot width must be positive, got {self.slot_width}")
        if (self.end - self.start) % self.slot_width:
            raise ValueError(
                f"window length {self.end - self.start} is not a multiple of "
                f"slot width {self.slot_width}"
            )

    @property
    def n_slots(self) -> int:
        return (self.end - self.start) // self.slot_width

    @property
    def n_labels(self) -> int:
        """Number of aligned arrival times, slot starts plus the window end."""
        return self.n_slots + 1

    def labels(self) -> list[TimePoint]:
        """All aligned arrival times, ``start`` through ``end`` inclusive."""
        return list(range(self.start, self.end + 1, self.slot_width))

    def is_aligned(self, t: TimePoint) -> bool:
        return self.start <= t <= self.end and (t - self.start) % self.slot_width == 0

    def label_index(self, t: TimePoint) -> int:
        """Index of an aligned arrival time into per-label score rows.

        Raises:
            OutOfWindowError: for times before the window start or past its end.
            ValueError: for times inside the window but off the slot boundaries.
        """
        if not self.start <= t <= self.end:
            raise OutOfWindowError(
                f"{format_hhmm(t)} lies outside the tour window {self}"
            )
        if (t - self.start) % self.slot_width:
            raise ValueError(f"{format_hhmm(t)} is not an aligned time of {self}")
        return (t - self.start) // self.slot_width

    def __str__(self) -> str:  # used in error messages
        return (
            f"{format_hhmm(self.start)}-{format_hhmm(self.end)}"
            f"/{self.slot_width}min"
        )


def align_up(t: TimePoint, grid: TimeGrid) -> TimePoint:
    """Round ``t`` up to the next slot boundary, never earlier than the window start.

    Raises:
        OutOfWindowError: if ``t`` already lies past the window end.
    """
    if t > grid.end:
        raise OutOfWindowError(
            f"{format_hhmm(t)} is past the tour window end {format_hhmm(grid.end)}"
        )
    if t <= grid.start:
        return grid.start
    offset = (t - grid.start) % grid.slot_width
    return t if offset == 0 else t + (grid.slot_width - offset)


@dataclass(frozen=True)
class Spot:
    """A visitable point of interest.

    ``name`` is the short symbol used in routes and reports; ``label`` an
    optional longer description.  ``stay_minutes`` is the full, mandatory
    visit duration (a multiple of the slot width after scenario validation).
    """

    id: int
    name: str
    indoor: bool
    stay_minutes: int
    label: str = ""

    def __post_init__(self):
        if self.stay_minutes <= 0:
            raise ValueError(f"spot {self.name!r}: stay must be positive")


@dataclass(frozen=True)
class TravelMatrix:
    """Square minute-valued travel times over spot indices (plus a start index)."""

    minutes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.minutes)
        for i, row in enumerate(self.minutes):
            if len(row) != n:
                raise ValueError(f"travel matrix row {i} has {len(row)} entries, want {n}")
            if row[i] != 0:
                raise ValueError(f"travel matrix diagonal [{i}][{i}] must be 0")
            for j, v in enumerate(row):
                if v < 0:
                    raise ValueError(f"travel matrix [{i}][{j}] is negative")

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        return self.minutes[i][j]

    @property
    def size(self) -> int:
        return len(self.minutes)

    def obeys_triangle_inequality(self) -> bool:
        m = self.minutes
        n = len(m)
        return all(
            m[i][k] <= m[i][j] + m[j][k]
            for i in range(n)
            for j in range(n)
            for k in range(n)
        )


@dataclass(frozen=True)
class VisitEntry:
    """One planned visit: aligned arrival time, spot index, score at that time."""

    arrival: TimePoint
    spot: int
    score: float


@dataclass(frozen=True)
class Itinerary:
    """An ordered visit schedule anchored at a start position and departure time.

    ``entries`` are kept sorted by strictly increasing arrival.  The start
    position has no stay and no score; it only anchors the first travel leg.
    """

    origin: int
    departure: TimePoint
    entries: tuple[VisitEntry, ...] = ()

    def spot_ids(self) -> frozenset[int]:
        return frozenset(e.spot for e in self.entries)

    def with_entry(self, entry: VisitEntry) -> "Itinerary":
        """Return a copy with ``entry`` merged in at its arrival-ordered place."""
        pos = bisect_right([e.arrival for e in self.entries], entry.arrival)
        entries = self.entries[:pos] + (entry,) + self.entries[pos:]
        return Itinerary(self.origin, self.departure, entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class PlannerState:
    """Where the tourist stands right now, and what is left to visit."""

    all_spots: frozenset[int]
    visited: frozenset[int]
    position: int
    now: TimePoint
    grid: TimeGrid

    def __post_init__(self):
        if self.now > self.grid.end:
            raise ValueError(
                f"now={format_hhmm(self.now)} lies past the window end "
                f"{format_hhmm(self.grid.end)}"
            )
        if not self.visited <= self.all_spots:
            raise ValueError("visited spots must be a subset of all spots")

    def candidate_ids(self) -> frozenset[int]:
        """Spots still worth planning: unvisited, and not where we stand."""
        return self.all_spots - self.visited - {self.position}


def earliest_arrival(
    from_index: int,
    depart: TimePoint,
    to_spot: int,
    matrix: TravelMatrix,
    grid: TimeGrid,
) -> TimePoint | None:
    """Aligned arrival at ``to_spot`` when leaving ``from_index`` at ``depart``.

    Returns ``None`` when the physical arrival would fall past the window end
    (the spot is unreachable on this tour).
    """
    physical = depart + matrix[from_index, to_spot]
    if physical > grid.end:
        return None
    return align_up(physical, grid)


def insertion_conflict(
    z: Itinerary,
    entry: VisitEntry,
    spots: tuple[Spot, ...],
    matrix: TravelMatrix,
    grid: TimeGrid,
) -> str | None:
    """Explain why ``entry`` cannot be inserted into ``z``, or ``None`` if it can.

    The candidate must be a new spot, start on a slot boundary, finish its full
    stay by the window end, and leave both neighbouring travel legs enough
    time.  Waiting before a visit is allowed, so the leg checks are
    inequalities, not equalities.
    """
    spot = spots[entry.spot]
    if entry.spot in z.spot_ids():
        return f"spot {spot.name} is already in the itinerary"
    if not grid.is_aligned(entry.arrival):
        return f"arrival {format_hhmm(entry.arrival)} is not on a slot boundary"
    if entry.arrival + spot.stay_minutes > grid.end:
        return (
            f"{spot.name}@{format_hhmm(entry.arrival)}: stay of {spot.stay_minutes} min "
            f"runs past the window end {format_hhmm(grid.end)}"
        )

    pred = None
    succ = None
    for e in z.entries:  # entries are arrival-sorted
        if e.arrival <= entry.arrival:
            pred = e
        else:
            succ = e
            break

    if pred is None:
        ready = z.departure + matrix[z.origin, entry.spot]
        if ready > entry.arrival:
            return (
                f"start->{spot.name}: departing {format_hhmm(z.departure)} plus "
                f"{matrix[z.origin, entry.spot]} min travel misses the "
                f"{format_hhmm(entry.arrival)} arrival"
            )
    else:
        pred_spot = spots[pred.spot]
        ready = pred.arrival + pred_spot.stay_minutes + matrix[pred.spot, entry.spot]
        if ready > entry.arrival:
            return (
                f"{pred_spot.name}->{spot.name}: earliest hand-off "
                f"{format_hhmm(ready)} misses the {format_hhmm(entry.arrival)} arrival"
            )
    if succ is not None:
        succ_spot = spots[succ.spot]
        ready = entry.arrival + spot.stay_minutes + matrix[entry.spot, succ.spot]
        if ready > succ.arrival:
            return (
                f"{spot.name}->{succ_spot.name}: earliest hand-off "
                f"{format_hhmm(ready)} misses the {format_hhmm(succ.arrival)} arrival"
            )
    return None


def check_insert(
    z: Itinerary,
    entry: VisitEntry,
    spots: tuple[Spot, ...],
    matrix: TravelMatrix,
    grid: TimeGrid,
) -> bool:
    """True when ``entry`` can join ``z`` without breaking any travel/stay leg."""
    return insertion_conflict(z, entry, spots, matrix, grid) is None


def validate_itinerary(
    z: Itinerary,
    spots: tuple[Spot, ...],
    matrix: TravelMatrix,
    grid: TimeGrid,
) -> None:
    """Re-validate a full itinerary from scratch.

    Raises:
        InfeasibleRouteError: naming the first violated leg or entry.
    """
    seen: set[int] = set()
    prev_arrival = None
    for e in z.entries:
        if e.spot in seen:
            raise InfeasibleRouteError(f"spot {spots[e.spot].name} appears twice")
        if prev_arrival is not None and e.arrival <= prev_arrival:
            raise InfeasibleRouteError(
                f"arrivals not strictly increasing at {format_hhmm(e.arrival)}"
            )
        stripped = Itinerary(
            z.origin,
            z.departure,
            tuple(x for x in z.entries if x is not e),
        )
        conflict = insertion_conflict(stripped, e, spots, matrix, grid)
        if conflict is not None:
            raise InfeasibleRouteError(conflict)
        seen.add(e.spot)
        prev_arrival = e.arrival


def tour_score(z: Itinerary) -> float:
    """Sum of the per-visit scores frozen into the itinerary."""
    return sum(e.score for e in z.entries)


def free_time(z: Itinerary, spots: tuple[Spot, ...], matrix: TravelMatrix) -> int:
    """Total waiting built into the schedule, in minutes.

    Counts, for every leg including the initial one from the start position,
    the gap between the earliest possible hand-off and the planned arrival.
    Cross-checked against elapsed-minus-stay-minus-travel accounting; the two
    must agree exactly for a well-formed itinerary.
    """
    legs = free_time_legs(z, spots, matrix)
    total = sum(slack for _, slack in legs)

    if z.entries:
        last = z.entries[-1]
        elapsed = (last.arrival + spots[last.spot].stay_minutes) - z.departure
        stays = sum(spots[e.spot].stay_minutes for e in z.entries)
        travels = matrix[z.origin, z.entries[0].spot] + sum(
            matrix[a.spot, b.spot] for a, b in zip(z.entries, z.entries[1:])
        )
        if total != elapsed - stays - travels:
            raise InfeasibleRouteError(
                "free-time accounting mismatch: "
                f"leg sum {total} != elapsed {elapsed} - stays {stays} - travels {travels}"
            )
    return total


def free_time_legs(
    z: Itinerary, spots: tuple[Spot, ...], matrix: TravelMatrix
) -> list[tuple[str, int]]:
    """Per-leg waiting breakdown as ``(leg description, slack minutes)`` pairs."""
    if not z.entries:
        return []
    legs = []
    first = z.entries[0]
    ready = z.departure + matrix[z.origin, first.spot]
    legs.append((f"start->{spots[first.spot].name}", first.arrival - ready))
    for a, b in zip(z.entries, z.entries[1:]):
        ready = a.arrival + spots[a.spot].stay_minutes + matrix[a.spot, b.spot]
        legs.append((f"{spots[a.spot].name}->{spots[b.spot].name}", b.arrival - ready))
    return legs
