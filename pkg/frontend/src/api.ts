/** Typed client for the assistant's /api/v1 endpoints. */

export type TileColor = "B" | "Y" | "G";

export interface SessionInfo {
  id: string;
  remaining_count: number;
  seed: number;
}

export interface Candidate {
  word: string;
  theta_degrees: number;
}

export interface SuggestionInfo {
  word: string;
  theta_degrees: number;
  remaining_count: number;
  tied_count: number;
  top: Candidate[];
}

export interface FeedbackResult {
  remaining_count: number;
  solved: boolean;
  empty_pool: boolean;
}

export interface SessionOptions {
  encoding?: "positional" | "frequency";
  pool?: "solutions" | "guesses";
  seed?: number;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = (await response.json()) as { detail?: string };
        if (body.detail) detail = body.detail;
      } catch {
        /* non-JSON error body; keep statusText */
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  createSession(options: SessionOptions = {}): Promise<SessionInfo> {
    return this.request<SessionInfo>("/api/v1/sessions", {
      method: "POST",
      body: JSON.stringify(options),
    });
  }

  getSuggestion(sessionId: string): Promise<SuggestionInfo> {
    return this.request<SuggestionInfo>(`/api/v1/sessions/${sessionId}/suggestion`);
  }

  postFeedback(
    sessionId: string,
    guess: string,
    feedback: string,
  ): Promise<FeedbackResult> {
    return this.request<FeedbackResult>(`/api/v1/sessions/${sessionId}/feedback`, {
      method: "POST",
      body: JSON.stringify({ guess, feedback }),
    });
  }

  async deleteSession(sessionId: string): Promise<void> {
    const response = await this.fetchImpl(
      `${this.baseUrl}/api/v1/sessions/${sessionId}`,
      { method: "DELETE" },
    );
    if (!response.ok && response.status !== 404) {
      throw new ApiError(response.status, response.statusText);
    }
  }
}
