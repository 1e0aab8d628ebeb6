// Session controller: loads server state, owns the answer form for the
// pending question, and funnels every mutation through the HTTP API. A
// rejected answer keeps the form contents and surfaces the server's
// violated condition; a conflict reloads the session.

import { ApiError, SessionApi, SessionStateDto } from "./api.js";
import { AnswerFormModel } from "./form.js";

export type ControllerPhase = "loading" | "question" | "finished" | "error";

export class SessionController {
  state: SessionStateDto | null = null;
  form: AnswerFormModel | null = null;
  phase: ControllerPhase = "loading";
  /** Inline error shown next to the form; cleared on success. */
  inlineError: string | null = null;
  /** Fatal error (session unreachable). */
  fatalError: string | null = null;
  private listeners: Array<() => void> = [];

  constructor(
    private readonly api: SessionApi,
    readonly sessionId: string,
  ) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  async refresh(): Promise<void> {
    try {
      const state = await this.api.getState(this.sessionId);
      this.state = state;
      if (state.question) {
        this.form = new AnswerFormModel(
          state.attributes,
          state.question.premise,
          state.question.conclusion,
          state.mode === "classical",
        );
        this.phase = "question";
      } else {
        this.form = null;
        this.phase = state.status === "finished" ? "finished" : "loading";
      }
      this.inlineError = null;
      this.fatalError = null;
    } catch (error) {
      this.phase = "error";
      this.fatalError = error instanceof Error ? error.message : String(error);
    }
    this.notify();
  }

  async confirm(): Promise<void> {
    await this.submitAnswer({ confirm: true, seq: this.state?.question?.seq });
  }

  async submitCounterexample(): Promise<void> {
    if (!this.form) return;
    const local = this.form.validationError();
    if (local) {
      this.inlineError = local;
      this.notify();
      return;
    }
    await this.submitAnswer({
      ...this.form.toPayload(),
      seq: this.state?.question?.seq,
    });
  }

  private async submitAnswer(payload: {
    confirm?: boolean;
    positive?: string[];
    negative?: string[];
    seq?: number;
  }): Promise<void> {
    try {
      const state = await this.api.postAnswer(this.sessionId, payload);
      this.state = state;
      if (state.question) {
        this.form = new AnswerFormModel(
          state.attributes,
          state.question.premise,
          state.question.conclusion,
          state.mode === "classical",
        );
        this.phase = "question";
      } else {
        this.form = null;
        this.phase = "finished";
      }
      this.inlineError = null;
    } catch (error) {
      if (error instanceof ApiError && error.status === 422) {
        // keep the form exactly as the expert filled it
        this.inlineError = error.message_text;
      } else if (error instanceof ApiError && error.status === 409) {
        await this.refresh();
        this.inlineError = "the session moved on; question reloaded";
      } else {
        this.inlineError = "network problem — please retry";
      }
    }
    this.notify();
  }

  exportImplications(): Promise<string> {
    return this.api.exportRaw(this.sessionId, "implications");
  }

  exportTrace(): Promise<string> {
    return this.api.exportRaw(this.sessionId, "json");
  }
}
