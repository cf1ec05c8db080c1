/** UI state machine. All game knowledge lives server-side; this module only
 * tracks rows, tile colors, and which screen to show. */

import {
  ApiClient,
  ApiError,
  Candidate,
  SessionOptions,
  SuggestionInfo,
  TileColor,
} from "./api.js";

export const MAX_ROWS = 6;
export const WORD_LENGTH = 5;

export type Phase = "loading" | "playing" | "won" | "lost" | "impossible" | "error";

export interface Row {
  guess: string;
  feedback: string;
}

const CYCLE: Record<TileColor, TileColor> = { B: "Y", Y: "G", G: "B" };

export class AssistantState {
  phase: Phase = "loading";
  rows: Row[] = [];
  currentGuess = "";
  currentColors: TileColor[] = Array(WORD_LENGTH).fill("B");
  suggestion: SuggestionInfo | null = null;
  remainingCount = 0;
  errorMessage = "";

  private sessionId = "";
  private seed: number | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly options: SessionOptions = {},
  ) {}

  get topCandidates(): Candidate[] {
    return this.suggestion?.top ?? [];
  }

  /** Start a fresh session and fetch the opening suggestion. */
  async start(): Promise<void> {
    this.phase = "loading";
    this.rows = [];
    this.errorMessage = "";
    try {
      const session = await this.api.createSession({
        ...this.options,
        ...(this.seed !== null ? { seed: this.seed } : {}),
      });
      this.sessionId = session.id;
      this.seed = session.seed;
      this.remainingCount = session.remaining_count;
      await this.refreshSuggestion();
      this.phase = "playing";
    } catch (error) {
      this.fail(error);
    }
  }

  /** Cycle one tile of the current row: gray -> yellow -> green -> gray. */
  cycleTile(index: number): void {
    if (this.phase !== "playing") return;
    const color = this.currentColors[index];
    if (color === undefined) return;
    this.currentColors[index] = CYCLE[color];
  }

  setGuess(word: string): void {
    if (this.phase !== "playing") return;
    this.currentGuess = word.toUpperCase();
  }

  /** Submit the current row's colors to the server and advance. */
  async submitRow(): Promise<void> {
    if (this.phase !== "playing") return;
    const guess = this.currentGuess;
    const feedback = this.currentColors.join("");
    try {
      const result = await this.api.postFeedback(this.sessionId, guess, feedback);
      this.errorMessage = "";
      this.rows.push({ guess, feedback });
      this.remainingCount = result.remaining_count;
      if (result.solved) {
        this.phase = "won";
      } else if (result.empty_pool) {
        this.phase = "impossible";
      } else if (this.rows.length >= MAX_ROWS) {
        this.phase = "lost";
      } else {
        await this.refreshSuggestion();
      }
      this.currentColors = Array(WORD_LENGTH).fill("B");
    } catch (error) {
      if (error instanceof ApiError && (error.status === 422 || error.status === 409)) {
        // a rejected row (malformed word, busy session) is recoverable:
        // surface the message and let the player edit and resubmit
        this.errorMessage = error.detail;
        return;
      }
      this.fail(error);
    }
  }

  /** Drop the last row by replaying every earlier row into a new session.
   * The seed is reused so suggestions and tie-breaks are identical. */
  async undo(): Promise<void> {
    if (this.rows.length === 0) return;
    const keep = this.rows.slice(0, -1);
    const sessionId = this.sessionId;
    try {
      const session = await this.api.createSession({
        ...this.options,
        ...(this.seed !== null ? { seed: this.seed } : {}),
      });
      this.sessionId = session.id;
      this.remainingCount = session.remaining_count;
      for (const row of keep) {
        const result = await this.api.postFeedback(
          this.sessionId,
          row.guess,
          row.feedback,
        );
        this.remainingCount = result.remaining_count;
      }
      this.rows = keep;
      this.currentColors = Array(WORD_LENGTH).fill("B");
      this.phase = "playing";
      await this.refreshSuggestion();
      void this.api.deleteSession(sessionId).catch(() => undefined);
    } catch (error) {
      this.fail(error);
    }
  }

  async newGame(): Promise<void> {
    this.seed = null;
    await this.start();
  }

  private async refreshSuggestion(): Promise<void> {
    this.suggestion = await this.api.getSuggestion(this.sessionId);
    this.currentGuess = this.suggestion.word;
  }

  private fail(error: unknown): void {
    this.phase = "error";
    this.errorMessage = error instanceof Error ? error.message : String(error);
  }
}
