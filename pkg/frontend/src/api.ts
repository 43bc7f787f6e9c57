/** Typed HTTP client; the single place game truth enters the UI. */

import type {
  AdviceResponse,
  BayesDoc,
  FinalResponse,
  HostConfig,
  HostSpec,
  MatrixDoc,
  NashDoc,
  PickResponse,
  ReducedDoc,
  SessionCreated,
  StatsResponse,
  TranscriptResponse,
  ZeroSumDoc,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Called with every successfully parsed response body (used by the
 * no-leak tests to intercept client-visible payloads). */
export type ResponseObserver = (path: string, body: unknown) => void;

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
    private readonly onResponse?: ResponseObserver,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: {} };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const payload: unknown = await response.json();
    if (!response.ok) {
      const detail = (payload as { error?: { code?: string; message?: string } }).error;
      throw new ApiError(
        response.status,
        detail?.code ?? "unknown",
        detail?.message ?? `request failed with ${response.status}`,
      );
    }
    this.onResponse?.(path, payload);
    return payload as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("GET", "/health");
  }

  createSession(host: HostSpec, seed?: number): Promise<SessionCreated> {
    const body: Record<string, unknown> = { host };
    if (seed !== undefined) body.seed = seed;
    return this.request("POST", "/sessions", body);
  }

  pick(sessionId: string, door: number): Promise<PickResponse> {
    return this.request("POST", `/sessions/${sessionId}/pick`, { door });
  }

  advice(sessionId: string): Promise<AdviceResponse> {
    return this.request("GET", `/sessions/${sessionId}/advice`);
  }

  final(sessionId: string, action: "hold" | "switch"): Promise<FinalResponse> {
    return this.request("POST", `/sessions/${sessionId}/final`, { action });
  }

  stats(sessionId: string): Promise<StatsResponse> {
    return this.request("GET", `/sessions/${sessionId}/stats`);
  }

  transcript(sessionId: string): Promise<TranscriptResponse> {
    return this.request("GET", `/sessions/${sessionId}/transcript`);
  }

  solveZerosum(): Promise<ZeroSumDoc> {
    return this.request("POST", "/solve/zerosum", {});
  }

  solveBayes(host: HostConfig): Promise<BayesDoc> {
    return this.request("POST", "/solve/bayes", host);
  }

  solveNash(body: Record<string, unknown>): Promise<NashDoc> {
    return this.request("POST", "/solve/nash", body);
  }

  matrix(): Promise<MatrixDoc> {
    return this.request("GET", "/matrix");
  }

  matrixReduced(): Promise<ReducedDoc> {
    return this.request("GET", "/matrix/reduced");
  }
}
