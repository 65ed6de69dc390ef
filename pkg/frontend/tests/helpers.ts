/** Canned payloads and a scriptable fake service for controller tests. */

import { ApiError, type ServiceClient } from "../src/api.js";
import type {
  RecommendRequest,
  RecommendResponse,
  RoutePayload,
  Snapshot,
  VisitPayload,
} from "../src/types.js";

export function visit(arrival: string, spot: string, score: string): VisitPayload {
  return { arrival, spot, score };
}

export function route(
  rank: number,
  visits: VisitPayload[],
  tourScore: string,
  freeMinutes = 0,
): RoutePayload {
  return {
    rank,
    visits,
    tour_score: tourScore,
    spot_count: visits.length,
    free_time_minutes: freeMinutes,
  };
}

export function recommendation(
  routes: RoutePayload[],
  overrides: Partial<RecommendResponse> = {},
): RecommendResponse {
  return {
    algorithm: "B",
    width: 1,
    routes,
    mean_tour_score: "0.0",
    ...overrides,
  };
}

export function snapshot(overrides: Partial<Snapshot> = {}): Snapshot {
  return {
    session_id: "s-1",
    scenario: "table3",
    window: { start: "13:00", end: "18:00", slot_minutes: 60 },
    position: "I",
    now: "12:00",
    remaining_minutes: 360,
    tour_over: false,
    visited: ["B", "H"],
    committed: [],
    running_score: "0.0",
    ...overrides,
  };
}

/** In-memory stand-in for the service; records calls, can be scripted. */
export class FakeService implements ServiceClient {
  recommendCalls: RecommendRequest[] = [];
  commitCalls: Array<{ spot: string; arrival: string }> = [];
  contextCalls: unknown[] = [];

  nextRecommend: RecommendResponse = recommendation([]);
  nextCommitSnapshot: Snapshot = snapshot();
  recommendError: ApiError | null = null;
  commitError: ApiError | null = null;

  async createSession() {
    return { session_id: "s-1", state: snapshot() };
  }

  async getState() {
    return snapshot();
  }

  async recommend(_sid: string, body: RecommendRequest) {
    this.recommendCalls.push(body);
    if (this.recommendError) {
      const err = this.recommendError;
      this.recommendError = null;
      throw err;
    }
    return this.nextRecommend;
  }

  async commitVisit(_sid: string, spot: string, arrival: string) {
    this.commitCalls.push({ spot, arrival });
    if (this.commitError) {
      throw this.commitError;
    }
    return this.nextCommitSnapshot;
  }

  async setContext(_sid: string, body: unknown) {
    this.contextCalls.push(body);
    return { ok: true, weather_override: null, congestion_overrides: [] };
  }

  async getBuiltinScenario() {
    return {};
  }
}
