/** Thin fetch-based client for the pairrank session service. */

import type {
  ComparisonOverride,
  CreatedSessionDto,
  MethodView,
  ResultsPayload,
  SessionStateDto,
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

async function raiseFor(response: Response): Promise<never> {
  let code = "unknown";
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = (await response.json()) as { code?: string; message?: string };
    if (typeof body.code === "string") code = body.code;
    if (typeof body.message === "string") message = body.message;
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ApiError(response.status, code, message);
}

export class PairrankClient {
  readonly baseUrl: string;
  private readonly fetchImpl: typeof fetch;

  constructor(baseUrl: string, fetchImpl: typeof fetch = fetch) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl;
  }

  private async request<T>(
    path: string,
    init: RequestInit = {},
  ): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (!response.ok) await raiseFor(response);
    if (response.status === 204) return undefined as T;
    return (await response.json()) as T;
  }

  createSession(labels: string[]): Promise<CreatedSessionDto> {
    return this.request("/sessions", {
      method: "POST",
      body: JSON.stringify({ labels }),
    });
  }

  getSession(id: string): Promise<SessionStateDto> {
    return this.request(`/sessions/${id}`);
  }

  deleteSession(id: string): Promise<void> {
    return this.request(`/sessions/${id}`, { method: "DELETE" });
  }

  setComparison(
    id: string,
    i: number,
    k: number,
    value: number,
  ): Promise<ResultsPayload> {
    return this.request(`/sessions/${id}/comparisons`, {
      method: "PUT",
      body: JSON.stringify({ i, k, value }),
    });
  }

  /** Preview results with temporary overrides; never mutates the session.
   * Pass an AbortSignal so a superseded slider position can cancel the
   * request that is no longer wanted. */
  whatIf(
    id: string,
    overrides: ComparisonOverride[],
    signal?: AbortSignal,
  ): Promise<ResultsPayload> {
    return this.request(`/sessions/${id}/what-if`, {
      method: "POST",
      body: JSON.stringify({ overrides }),
      signal,
    });
  }

  getResults(id: string, method: MethodView = "both"): Promise<ResultsPayload> {
    return this.request(`/sessions/${id}/results?method=${method}`);
  }
}
