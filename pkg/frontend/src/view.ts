/** Pure HTML rendering. Every number shown comes straight from a service
 * payload field — this module never computes a score, only formats what the
 * service sent (score-change chips subtract two service-sent values and say
 * so on screen).
 */

import type {
  RecommendResponse,
  RoutePayload,
  Snapshot,
  VisitPayload,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

/** Per-spot score change between two recommendation payloads.
 *
 * Uses each spot's first-listed visit score on both sides; spots missing on
 * either side are omitted. Deltas are differences of two service numbers,
 * rendered as chips so a context toggle visibly moves the scores.
 */
export function scoreChangesBySpot(
  before: RecommendResponse,
  after: RecommendResponse,
): Map<string, number> {
  const firstScore = (resp: RecommendResponse): Map<string, number> => {
    const seen = new Map<string, number>();
    for (const route of resp.routes) {
      for (const visit of route.visits) {
        if (!seen.has(visit.spot)) {
          seen.set(visit.spot, Number(visit.score));
        }
      }
    }
    return seen;
  };
  const prev = firstScore(before);
  const next = firstScore(after);
  const changes = new Map<string, number>();
  for (const [spot, score] of next) {
    const old = prev.get(spot);
    if (old !== undefined && score !== old) {
      changes.set(spot, score - old);
    }
  }
  return changes;
}

function deltaChip(delta: number | undefined): string {
  if (delta === undefined) {
    return "";
  }
  const arrow = delta > 0 ? "▲" : "▼";
  const signed = `${delta > 0 ? "+" : ""}${delta.toFixed(1)}`;
  const cls = delta > 0 ? "delta up" : "delta down";
  return ` <span class="${cls}">${arrow} ${signed}</span>`;
}

function renderVisit(visit: VisitPayload, delta: number | undefined): string {
  return (
    `<li>${escapeHtml(visit.arrival)} ${escapeHtml(visit.spot)} ` +
    `(${escapeHtml(visit.score)})${deltaChip(delta)}</li>`
  );
}

function renderCard(
  route: RoutePayload,
  changes: Map<string, number>,
  inlineError: string | undefined,
): string {
  const head = route.visits[0];
  const commit = head
    ? `<button class="commit" data-rank="${route.rank}" ` +
      `data-spot="${escapeHtml(head.spot)}" data-arrival="${escapeHtml(head.arrival)}">` +
      `Go to ${escapeHtml(head.spot)} for ${escapeHtml(head.arrival)}</button>`
    : "";
  const error = inlineError
    ? `<p class="card-error">${escapeHtml(inlineError)}</p>`
    : "";
  return `
    <article class="route-card" data-rank="${route.rank}">
      <header>
        <span class="rank">#${route.rank}</span>
        <span class="total">score ${escapeHtml(route.tour_score)}</span>
      </header>
      <ol class="timeline">
        ${route.visits.map((v) => renderVisit(v, changes.get(v.spot))).join("\n")}
      </ol>
      <footer>
        <span>${route.spot_count} spots</span>
        <span>free ${route.free_time_minutes} min</span>
      </footer>
      ${commit}
      ${error}
    </article>`;
}

/** The recommendation panel: cards in service order, best first. */
export function renderRecommendations(
  resp: RecommendResponse,
  changes: Map<string, number> = new Map(),
  cardErrors: Map<number, string> = new Map(),
): string {
  if (resp.routes.length === 0) {
    return `<p class="empty">No feasible route from here.</p>`;
  }
  const cards = resp.routes
    .map((route) => renderCard(route, changes, cardErrors.get(route.rank)))
    .join("\n");
  const label =
    resp.width === null
      ? `algorithm ${resp.algorithm}`
      : `algorithm ${resp.algorithm}, width ${resp.width}`;
  return `
    <div class="cards">${cards}</div>
    <p class="panel-footer">${escapeHtml(label)} ·
      mean tour score ${escapeHtml(resp.mean_tour_score)}</p>`;
}

/** Status strip: where you are, what time it is, what you scored so far. */
export function renderStatus(snapshot: Snapshot): string {
  const committed = snapshot.committed.length
    ? snapshot.committed
        .map((v) => `${escapeHtml(v.arrival)} ${escapeHtml(v.spot)} (${escapeHtml(v.score)})`)
        .join(" → ")
    : "nothing committed yet";
  return `
    <dl class="status">
      <div><dt>At</dt><dd>${escapeHtml(snapshot.position)}</dd></div>
      <div><dt>Clock</dt><dd>${escapeHtml(snapshot.now)}</dd></div>
      <div><dt>Window</dt><dd>${escapeHtml(snapshot.window.start)}–${escapeHtml(snapshot.window.end)}</dd></div>
      <div><dt>Left</dt><dd>${snapshot.remaining_minutes} min</dd></div>
      <div><dt>Running score</dt><dd>${escapeHtml(snapshot.running_score)}</dd></div>
    </dl>
    <p class="committed">${committed}</p>`;
}

/** Replaces the cards once the tour window is exhausted. */
export function renderTourSummary(snapshot: Snapshot): string {
  const items = snapshot.committed
    .map(
      (v) =>
        `<li>${escapeHtml(v.arrival)} ${escapeHtml(v.spot)} (${escapeHtml(v.score)})</li>`,
    )
    .join("\n");
  return `
    <article class="route-card summary">
      <header>
        <span class="rank">Tour complete</span>
        <span class="total">score ${escapeHtml(snapshot.running_score)}</span>
      </header>
      <ol class="timeline">${items}</ol>
      <footer><span>${snapshot.committed.length} spots visited</span></footer>
    </article>`;
}

/** Non-blocking error banner with a retry hook. */
export function renderBanner(message: string): string {
  return `
    <div class="banner" role="alert">
      <span>${escapeHtml(message)}</span>
      <button class="retry">Retry</button>
    </div>`;
}
