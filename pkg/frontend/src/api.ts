/** Typed fetch client for the /v1 planning service. */

import type {
  ContextUpdateRequest,
  ContextUpdateResponse,
  RecommendRequest,
  RecommendResponse,
  SessionCreateResponse,
  SessionSource,
  Snapshot,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.code = code;
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url, {
      ...init,
      headers: { "content-type": "application/json", ...init?.headers },
    });
  } catch (err) {
    throw new ApiError(0, "network", `cannot reach ${url}: ${err}`);
  }
  if (!response.ok) {
    let code = "error";
    let message = `${response.status} ${response.statusText}`;
    try {
      const body = (await response.json()) as {
        detail?: { code?: string; message?: string } | string;
      };
      if (typeof body.detail === "object" && body.detail !== null) {
        code = body.detail.code ?? code;
        message = body.detail.message ?? message;
      } else if (typeof body.detail === "string") {
        message = body.detail;
      }
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, code, message);
  }
  return (await response.json()) as T;
}

export interface ServiceClient {
  createSession(source: SessionSource): Promise<SessionCreateResponse>;
  getState(sessionId: string): Promise<Snapshot>;
  recommend(sessionId: string, body: RecommendRequest): Promise<RecommendResponse>;
  commitVisit(sessionId: string, spot: string, arrival: string): Promise<Snapshot>;
  setContext(
    sessionId: string,
    body: ContextUpdateRequest,
  ): Promise<ContextUpdateResponse>;
  getBuiltinScenario(name: string): Promise<Record<string, unknown>>;
}

export function createClient(baseUrl: string): ServiceClient {
  const base = baseUrl.replace(/\/+$/, "");
  return {
    createSession(source) {
      return request<SessionCreateResponse>(`${base}/v1/sessions`, {
        method: "POST",
        body: JSON.stringify(source),
      });
    },
    getState(sessionId) {
      return request<Snapshot>(`${base}/v1/sessions/${sessionId}`);
    },
    recommend(sessionId, body) {
      return request<RecommendResponse>(
        `${base}/v1/sessions/${sessionId}/recommend`,
        { method: "POST", body: JSON.stringify(body) },
      );
    },
    commitVisit(sessionId, spot, arrival) {
      return request<Snapshot>(`${base}/v1/sessions/${sessionId}/visits`, {
        method: "POST",
        body: JSON.stringify({ spot, arrival }),
      });
    },
    setContext(sessionId, body) {
      return request<ContextUpdateResponse>(
        `${base}/v1/sessions/${sessionId}/context`,
        { method: "PUT", body: JSON.stringify(body) },
      );
    },
    getBuiltinScenario(name) {
      return request<Record<string, unknown>>(`${base}/v1/scenarios/builtin/${name}`);
    },
  };
}
