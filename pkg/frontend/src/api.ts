// Typed client for the exploration session API. The UI talks to the
// service exclusively through this module and never derives exploration
// results on its own.

export interface ImplicationDto {
  premise: string[];
  conclusion: string[];
}

export interface DescriptionDto {
  positive: string[];
  negative: string[];
}

export interface ProgressDto {
  confirmed: number;
  counterexamples: number;
  questions_asked: number;
}

export interface QuestionDto {
  premise: string[];
  conclusion: string[];
  seq: number;
  progress: ProgressDto;
}

export interface FinishedSummaryDto {
  finished: boolean;
  confirmed: ImplicationDto[];
  counterexamples: DescriptionDto[];
  questions_asked: number;
}

export type QuestionOrFinished =
  | QuestionDto
  | { finished: true; summary: FinishedSummaryDto };

export interface SessionStateDto {
  id: string;
  label: string;
  mode: "classical" | "general";
  strategy: string;
  status: "awaiting-answer" | "awaiting-question" | "finished";
  attributes: string[];
  progress: ProgressDto;
  question: QuestionDto | null;
  confirmed: ImplicationDto[];
  counterexamples: DescriptionDto[];
}

export interface SessionCreateDto {
  attributes: string[];
  mode?: "classical" | "general";
  strategy?: "minimal" | "max-conclusion";
  background?: ImplicationDto[];
  examples_cxt?: string;
  label?: string;
}

export interface AnswerDto {
  confirm?: boolean;
  positive?: string[];
  negative?: string[];
  seq?: number;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    public readonly detail: unknown,
  ) {
    super(`${code}: ${typeof detail === "string" ? detail : JSON.stringify(detail)}`);
  }

  /** Human-readable reason for rejected answers. */
  get reason(): string {
    if (this.detail && typeof this.detail === "object" && "reason" in this.detail) {
      return String((this.detail as { reason: unknown }).reason);
    }
    return this.code;
  }

  get message_text(): string {
    if (this.detail && typeof this.detail === "object" && "message" in this.detail) {
      return String((this.detail as { message: unknown }).message);
    }
    return typeof this.detail === "string" ? this.detail : this.message;
  }
}

export class SessionApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (!response.ok) {
      let code = `http-${response.status}`;
      let detail: unknown = await response.text();
      try {
        const body = JSON.parse(detail as string);
        code = body.error ?? code;
        detail = body.detail ?? detail;
      } catch {
        // non-JSON error body; keep the raw text
      }
      throw new ApiError(response.status, code, detail);
    }
    return (await response.json()) as T;
  }

  createSession(payload: SessionCreateDto): Promise<SessionStateDto> {
    return this.request("/sessions", {
      method: "POST",
      body: JSON.stringify(payload),
    });
  }

  listSessions(): Promise<SessionStateDto[]> {
    return this.request("/sessions");
  }

  getState(id: string): Promise<SessionStateDto> {
    return this.request(`/sessions/${id}/state`);
  }

  getQuestion(id: string): Promise<QuestionOrFinished> {
    return this.request(`/sessions/${id}/question`);
  }

  postAnswer(id: string, answer: AnswerDto): Promise<SessionStateDto> {
    return this.request(`/sessions/${id}/answer`, {
      method: "POST",
      body: JSON.stringify(answer),
    });
  }

  /** Raw export body, byte-identical to what the service serves. */
  async exportRaw(id: string, format: string): Promise<string> {
    const response = await this.fetchImpl(
      `${this.baseUrl}/sessions/${id}/export?format=${encodeURIComponent(format)}`,
    );
    if (!response.ok) {
      throw new ApiError(response.status, `http-${response.status}`, await response.text());
    }
    return response.text();
  }
}
