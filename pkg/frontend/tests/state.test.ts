import { describe, expect, it } from "vitest";

import {
  ApiClient,
  ApiError,
  FeedbackResult,
  SessionInfo,
  SessionOptions,
  SuggestionInfo,
} from "../src/api.js";
import { AssistantState, MAX_ROWS } from "../src/state.js";

/** In-memory stand-in for the ApiClient that scripts server responses. */
class FakeApi {
  sessionsCreated: SessionOptions[] = [];
  feedbackLog: { guess: string; feedback: string }[] = [];
  deleted: string[] = [];
  suggestions: string[] = ["SLATE"];
  feedbackResults: FeedbackResult[] = [];
  private nextId = 0;

  async createSession(options: SessionOptions): Promise<SessionInfo> {
    this.sessionsCreated.push(options);
    this.nextId += 1;
    return { id: `s${this.nextId}`, remaining_count: 2315, seed: options.seed ?? 42 };
  }

  async getSuggestion(_sessionId: string): Promise<SuggestionInfo> {
    const word = this.suggestions[0] ?? "SLATE";
    if (this.suggestions.length > 1) this.suggestions.shift();
    return {
      word,
      theta_degrees: 59.0,
      remaining_count: 2315,
      tied_count: 1,
      top: [{ word, theta_degrees: 59.0 }],
    };
  }

  async postFeedback(
    _sessionId: string,
    guess: string,
    feedback: string,
  ): Promise<FeedbackResult> {
    this.feedbackLog.push({ guess, feedback });
    const scripted = this.feedbackResults.shift();
    if (scripted instanceof Error) throw scripted;
    return scripted ?? { remaining_count: 100, solved: false, empty_pool: false };
  }

  async deleteSession(sessionId: string): Promise<void> {
    this.deleted.push(sessionId);
  }

  asClient(): ApiClient {
    return this as unknown as ApiClient;
  }
}

async function started(api: FakeApi): Promise<AssistantState> {
  const state = new AssistantState(api.asClient());
  await state.start();
  return state;
}

describe("AssistantState", () => {
  it("starts in playing phase with the opening suggestion prefilled", async () => {
    const api = new FakeApi();
    const state = await started(api);
    expect(state.phase).toBe("playing");
    expect(state.currentGuess).toBe("SLATE");
    expect(state.currentColors).toEqual(["B", "B", "B", "B", "B"]);
  });

  it("cycles tiles gray -> yellow -> green -> gray", async () => {
    const state = await started(new FakeApi());
    state.cycleTile(2);
    expect(state.currentColors[2]).toBe("Y");
    state.cycleTile(2);
    expect(state.currentColors[2]).toBe("G");
    state.cycleTile(2);
    expect(state.currentColors[2]).toBe("B");
  });

  it("reaches the victory state on a solved row", async () => {
    const api = new FakeApi();
    api.feedbackResults = [{ remaining_count: 1, solved: true, empty_pool: false }];
    const state = await started(api);
    for (let i = 0; i < 5; i++) {
      state.cycleTile(i);
      state.cycleTile(i); // B -> Y -> G
    }
    await state.submitRow();
    expect(state.phase).toBe("won");
    expect(api.feedbackLog).toEqual([{ guess: "SLATE", feedback: "GGGGG" }]);
  });

  it("reaches the impossible state when the pool empties", async () => {
    const api = new FakeApi();
    api.feedbackResults = [{ remaining_count: 0, solved: false, empty_pool: true }];
    const state = await started(api);
    await state.submitRow();
    expect(state.phase).toBe("impossible");
  });

  it("undo replays all but the last row into a fresh session", async () => {
    const api = new FakeApi();
    api.feedbackResults = [
      { remaining_count: 40, solved: false, empty_pool: false },
      { remaining_count: 0, solved: false, empty_pool: true },
    ];
    const state = await started(api);
    await state.submitRow(); // row 1 ok
    await state.submitRow(); // row 2 contradicts
    expect(state.phase).toBe("impossible");

    await state.undo();
    expect(state.phase).toBe("playing");
    expect(state.rows.length).toBe(1);
    // second session created with the same seed, row 1 replayed
    expect(api.sessionsCreated.length).toBe(2);
    expect(api.sessionsCreated[1]?.seed).toBe(42);
    expect(api.feedbackLog.length).toBe(3);
    expect(api.feedbackLog[2]?.guess).toBe(api.feedbackLog[0]?.guess);
    expect(api.deleted).toEqual(["s1"]);
  });

  it("loses after six unsolved rows", async () => {
    const api = new FakeApi();
    const state = await started(api);
    for (let i = 0; i < MAX_ROWS; i++) {
      await state.submitRow();
    }
    expect(state.phase).toBe("lost");
    expect(state.rows.length).toBe(MAX_ROWS);
  });

  it("keeps playing on a recoverable rejection and surfaces the message", async () => {
    const api = new FakeApi();
    api.feedbackResults = [new ApiError(422, "bad guess") as never];
    const state = await started(api);
    state.setGuess("sl@te");
    await state.submitRow();
    expect(state.phase).toBe("playing");
    expect(state.errorMessage).toBe("bad guess");
    expect(state.rows.length).toBe(0);
  });
});
