/** Payload shapes of the /v1 planning service, mirrored field for field.
 *
 * Scores arrive as fixed one-decimal strings ("7.0") and are rendered
 * verbatim; the client never parses them back into numbers for display.
 */

export type Algorithm = "A" | "B" | "C";

export type WeatherCondition = "sunny" | "rain";

export interface VisitPayload {
  arrival: string;
  spot: string;
  score: string;
}

export interface RoutePayload {
  rank: number;
  visits: VisitPayload[];
  tour_score: string;
  spot_count: number;
  free_time_minutes: number;
}

export interface RecommendResponse {
  algorithm: Algorithm;
  width: number | null;
  routes: RoutePayload[];
  mean_tour_score: string;
}

export interface SnapshotWindow {
  start: string;
  end: string;
  slot_minutes: number;
}

export interface Snapshot {
  session_id: string;
  scenario: string;
  window: SnapshotWindow;
  position: string;
  now: string;
  remaining_minutes: number;
  tour_over: boolean;
  visited: string[];
  committed: VisitPayload[];
  running_score: string;
}

export interface SessionCreateResponse {
  session_id: string;
  state: Snapshot;
}

export interface ContextUpdateResponse {
  ok: boolean;
  weather_override: string[] | null;
  congestion_overrides: string[];
}

export type SessionSource =
  | { builtin: string }
  | { scenario: Record<string, unknown> };

export interface RecommendRequest {
  algorithm?: Algorithm;
  width?: number;
  n_results?: number;
}

export interface ContextUpdateRequest {
  weather?: WeatherCondition | WeatherCondition[];
  congestion?: Record<string, number[]>;
}
