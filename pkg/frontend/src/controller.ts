/** Session state machine behind the page: owns the snapshot, the latest
 * recommendations, and the context toggles, and guarantees the service
 * contract — recommendations always come from the latest response, each
 * mutation triggers exactly one refresh, and requests never overlap.
 */

import { ApiError, type ServiceClient } from "./api.js";
import { RequestQueue } from "./queue.js";
import type {
  Algorithm,
  RecommendResponse,
  SessionSource,
  Snapshot,
  WeatherCondition,
} from "./types.js";

export interface ViewState {
  sessionId: string | null;
  snapshot: Snapshot | null;
  /** Latest recommendations; null before the first refresh or when over. */
  routes: RecommendResponse | null;
  /** Recommendations from before the last context toggle, for score diffs. */
  routesBeforeToggle: RecommendResponse | null;
  algorithm: Algorithm;
  width: number;
  weather: WeatherCondition | null;
  banner: string | null;
  /** rank -> message for commit conflicts shown inline on a card. */
  cardErrors: Map<number, string>;
}

export type StateListener = (state: ViewState) => void;

const DEFAULT_ALGORITHM: Algorithm = "C";
const DEFAULT_WIDTH = 3;

export class TourController {
  private readonly api: ServiceClient;
  private readonly queue = new RequestQueue();
  private readonly listeners: StateListener[] = [];
  private lastCommitKey: string | null = null;
  private readonly state: ViewState = {
    sessionId: null,
    snapshot: null,
    routes: null,
    routesBeforeToggle: null,
    algorithm: DEFAULT_ALGORITHM,
    width: DEFAULT_WIDTH,
    weather: null,
    banner: null,
    cardErrors: new Map(),
  };

  constructor(api: ServiceClient) {
    this.api = api;
  }

  get view(): ViewState {
    return this.state;
  }

  onChange(listener: StateListener): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  /** Create the session and fetch the first recommendations. */
  start(source: SessionSource): Promise<void> {
    return this.queue.run(async () => {
      const created = await this.api.createSession(source);
      this.state.sessionId = created.session_id;
      this.state.snapshot = created.state;
      this.lastCommitKey = null;
      await this.refresh();
      this.notify();
    });
  }

  /** One recommendation request; the single refresh every mutation gets. */
  private async refresh(): Promise<void> {
    const sid = this.state.sessionId;
    if (sid === null) {
      return;
    }
    if (this.state.snapshot?.tour_over) {
      this.state.routes = null;
      return;
    }
    try {
      const body =
        this.state.algorithm === "C"
          ? { algorithm: this.state.algorithm, width: this.state.width }
          : { algorithm: this.state.algorithm };
      this.state.routes = await this.api.recommend(sid, body);
      this.state.banner = null;
    } catch (err) {
      this.state.banner = err instanceof Error ? err.message : String(err);
    }
  }

  /** Re-run the refresh after a banner error. */
  retry(): Promise<void> {
    return this.queue.run(async () => {
      await this.refresh();
      this.notify();
    });
  }

  /** Commit a visit, then re-plan from the new position and time.
   *
   * A second identical commit is a no-op (double-click protection); a
   * conflict reported by the service lands on the originating card and
   * changes nothing else.
   */
  commitNext(spot: string, arrival: string, rank = 1): Promise<void> {
    return this.queue.run(async () => {
      const sid = this.state.sessionId;
      if (sid === null) {
        return;
      }
      const key = `${spot}@${arrival}`;
      if (key === this.lastCommitKey) {
        return;
      }
      try {
        this.state.snapshot = await this.api.commitVisit(sid, spot, arrival);
        this.lastCommitKey = key;
        this.state.cardErrors = new Map();
        this.state.routesBeforeToggle = null;
        await this.refresh();
      } catch (err) {
        if (err instanceof ApiError) {
          this.state.cardErrors = new Map([[rank, err.message]]);
        } else {
          this.state.banner = String(err);
        }
      }
      this.notify();
    });
  }

  /** Swap the forecast; keeps the old cards around so the diff can render. */
  setWeather(condition: WeatherCondition): Promise<void> {
    return this.applyContext({ weather: condition }, () => {
      this.state.weather = condition;
    });
  }

  /** Replace one spot's congestion trace with fresher samples. */
  setCongestion(spot: string, samples: number[]): Promise<void> {
    return this.applyContext({ congestion: { [spot]: samples } });
  }

  private applyContext(
    body: Parameters<ServiceClient["setContext"]>[1],
    after?: () => void,
  ): Promise<void> {
    return this.queue.run(async () => {
      const sid = this.state.sessionId;
      if (sid === null) {
        return;
      }
      try {
        await this.api.setContext(sid, body);
        after?.();
        this.state.routesBeforeToggle = this.state.routes;
        await this.refresh();
      } catch (err) {
        this.state.banner = err instanceof Error ? err.message : String(err);
      }
      this.notify();
    });
  }

  /** Pick the planner; advanced panel control. */
  selectAlgorithm(algorithm: Algorithm, width?: number): Promise<void> {
    return this.queue.run(async () => {
      this.state.algorithm = algorithm;
      if (width !== undefined) {
        this.state.width = width;
      }
      this.state.routesBeforeToggle = null;
      await this.refresh();
      this.notify();
    });
  }
}
