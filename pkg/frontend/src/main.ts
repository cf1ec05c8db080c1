/** Thin DOM layer: renders AssistantState and forwards events to it. */

import { ApiClient, TileColor } from "./api.js";
import { AssistantState, MAX_ROWS, WORD_LENGTH } from "./state.js";

const COLOR_CLASS: Record<TileColor, string> = {
  B: "tile-gray",
  Y: "tile-yellow",
  G: "tile-green",
};

const PHASE_BANNER: Record<string, string> = {
  loading: "Starting session…",
  playing: "",
  won: "Solved! 🟩 Start a new game to play again.",
  lost: "Out of guesses — better luck tomorrow.",
  impossible:
    "No word matches that feedback. A row is probably mis-colored — undo and fix it.",
  error: "Something went wrong.",
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className = "",
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

export function render(state: AssistantState, root: HTMLElement): void {
  root.replaceChildren();

  const banner = PHASE_BANNER[state.phase] ?? "";
  if (banner || state.errorMessage) {
    const note = el("div", `banner banner-${state.phase}`);
    note.textContent = state.phase === "error" ? state.errorMessage : banner;
    if (state.phase === "playing" && state.errorMessage) {
      note.textContent = state.errorMessage;
      note.className = "banner banner-warn";
    }
    root.append(note);
  }

  const grid = el("div", "grid");
  for (const row of state.rows) {
    const rowNode = el("div", "row row-committed");
    for (let i = 0; i < WORD_LENGTH; i++) {
      const color = (row.feedback[i] ?? "B") as TileColor;
      rowNode.append(el("div", `tile ${COLOR_CLASS[color]}`, row.guess[i] ?? ""));
    }
    grid.append(rowNode);
  }

  if (state.phase === "playing") {
    const rowNode = el("div", "row row-current");
    for (let i = 0; i < WORD_LENGTH; i++) {
      const color = state.currentColors[i] ?? "B";
      const tile = el(
        "button",
        `tile tile-button ${COLOR_CLASS[color]}`,
        state.currentGuess[i] ?? "",
      );
      tile.addEventListener("click", () => {
        state.cycleTile(i);
        render(state, root);
      });
      rowNode.append(tile);
    }
    grid.append(rowNode);
  }

  for (let r = grid.children.length; r < MAX_ROWS; r++) {
    const rowNode = el("div", "row row-empty");
    for (let i = 0; i < WORD_LENGTH; i++) rowNode.append(el("div", "tile"));
    grid.append(rowNode);
  }
  root.append(grid);

  if (state.phase === "playing") {
    const controls = el("div", "controls");
    const input = el("input", "guess-input") as HTMLInputElement;
    input.maxLength = WORD_LENGTH;
    input.value = state.currentGuess;
    input.addEventListener("change", () => {
      state.setGuess(input.value);
      render(state, root);
    });
    const submit = el("button", "submit", "Record row");
    submit.addEventListener("click", () => {
      void state.submitRow().then(() => render(state, root));
    });
    controls.append(input, submit);
    root.append(controls);

    const hint = el(
      "p",
      "hint",
      "Play the suggested word in Wordle, then tap each tile to match the colors you got.",
    );
    root.append(hint);

    if (state.suggestion) {
      const panel = el("div", "panel");
      panel.append(
        el(
          "h2",
          "",
          `Suggestion: ${state.suggestion.word} (${state.remainingCount} candidates left)`,
        ),
      );
      const list = el("ol", "candidates");
      for (const candidate of state.topCandidates) {
        list.append(
          el("li", "", `${candidate.word} — ${candidate.theta_degrees.toFixed(1)}°`),
        );
      }
      panel.append(list);
      root.append(panel);
    }
  }

  const actions = el("div", "actions");
  if (state.rows.length > 0 && state.phase !== "loading") {
    const undo = el("button", "undo", "Undo last row");
    undo.addEventListener("click", () => {
      void state.undo().then(() => render(state, root));
    });
    actions.append(undo);
  }
  if (state.phase !== "loading") {
    const restart = el("button", "new-game", "New game");
    restart.addEventListener("click", () => {
      void state.newGame().then(() => render(state, root));
    });
    actions.append(restart);
  }
  root.append(actions);
}

export async function boot(root: HTMLElement): Promise<void> {
  const state = new AssistantState(new ApiClient());
  render(state, root);
  await state.start();
  render(state, root);
}

const rootNode = typeof document !== "undefined" ? document.getElementById("app") : null;
if (rootNode) {
  void boot(rootNode);
}
