// DOM rendering. Everything shown is taken verbatim from the controller's
// server-mirrored state; no exploration logic lives here.

import { SessionController } from "./controller.js";
import { TriState } from "./form.js";

const STATE_GLYPH: Record<TriState, string> = {
  has: "✓",
  lacks: "✗",
  unknown: "?",
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function chipRow(names: readonly string[], className: string): HTMLElement {
  const row = el("span", "chips");
  if (names.length === 0) row.appendChild(el("span", `${className} chip empty`, "∅"));
  for (const name of names) row.appendChild(el("span", `${className} chip`, name));
  return row;
}

function renderQuestion(controller: SessionController, root: HTMLElement): void {
  const state = controller.state!;
  const question = state.question!;
  const form = controller.form!;
  const panel = el("section", "question-panel");
  const heading = el("h2");
  heading.append(
    "Does ",
    chipRow(question.premise, "premise"),
    " imply ",
    chipRow(question.conclusion, "conclusion"),
    " ?",
  );
  panel.appendChild(heading);

  const confirmBtn = el("button", "confirm", "Yes, this always holds");
  confirmBtn.onclick = () => void controller.confirm();
  panel.appendChild(confirmBtn);

  panel.appendChild(
    el("p", "hint", "… or describe one counterexample (tap to cycle ✓ / ✗ / ?):"),
  );

  const grid = el("div", "tristate-grid");
  for (const attr of state.attributes) {
    const cell = el("button", "tristate");
    const tristate = form.stateOf(attr);
    cell.dataset.attr = attr;
    cell.dataset.state = tristate;
    cell.textContent = `${attr} ${STATE_GLYPH[tristate]}`;
    if (form.isLocked(attr)) {
      cell.disabled = true;
      cell.title = "premise attributes are part of the counterexample";
    }
    if (form.isProposed(attr)) cell.classList.add("proposed");
    cell.onclick = () => {
      form.cycle(attr);
      renderApp(controller, root);
    };
    grid.appendChild(cell);
  }
  panel.appendChild(grid);

  const submit = el("button", "submit", "Submit counterexample");
  submit.onclick = () => void controller.submitCounterexample();
  panel.appendChild(submit);

  if (controller.inlineError) {
    panel.appendChild(el("p", "inline-error", controller.inlineError));
  }
  root.appendChild(panel);
}

function renderDashboard(controller: SessionController, root: HTMLElement): void {
  const state = controller.state!;
  const panel = el("section", "dashboard");
  panel.appendChild(
    el(
      "p",
      "progress",
      `${state.progress.questions_asked} questions · ` +
        `${state.progress.confirmed} confirmed · ` +
        `${state.progress.counterexamples} counterexamples`,
    ),
  );

  const confirmed = el("div", "confirmed");
  confirmed.appendChild(el("h3", undefined, "Confirmed implications"));
  const list = el("ul");
  for (const imp of state.confirmed) {
    const item = el("li");
    item.append(chipRow(imp.premise, "premise"), " → ", chipRow(imp.conclusion, "conclusion"));
    list.appendChild(item);
  }
  if (state.confirmed.length === 0) list.appendChild(el("li", "empty", "none yet"));
  confirmed.appendChild(list);
  panel.appendChild(confirmed);

  const table = el("table", "counterexamples");
  const head = el("tr");
  head.append(el("th", undefined, "#"), el("th", undefined, "has"), el("th", undefined, "lacks"));
  table.appendChild(head);
  state.counterexamples.forEach((pod, index) => {
    const row = el("tr");
    row.append(
      el("td", undefined, String(index + 1)),
      el("td", undefined, pod.positive.join(", ") || "—"),
      el("td", undefined, pod.negative.join(", ") || "—"),
    );
    table.appendChild(row);
  });
  panel.appendChild(el("h3", undefined, "Counterexamples"));
  panel.appendChild(table);

  if (state.status === "finished") {
    const actions = el("div", "downloads");
    const baseBtn = el("button", undefined, "Download implication base");
    baseBtn.onclick = async () => {
      download("implications.json", await controller.exportImplications());
    };
    const traceBtn = el("button", undefined, "Download session trace");
    traceBtn.onclick = async () => {
      download("session.json", await controller.exportTrace());
    };
    actions.append(baseBtn, traceBtn);
    panel.appendChild(actions);
  }
  root.appendChild(panel);
}

function download(filename: string, content: string): void {
  const blob = new Blob([content], { type: "application/json" });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
}

export function renderApp(controller: SessionController, root: HTMLElement): void {
  root.replaceChildren();
  const state = controller.state;
  if (controller.phase === "error" || !state) {
    root.appendChild(el("p", "fatal", controller.fatalError ?? "loading failed"));
    return;
  }
  root.appendChild(
    el("h1", undefined, state.label ? `Exploring: ${state.label}` : "Attribute exploration"),
  );
  if (controller.phase === "question") {
    renderQuestion(controller, root);
  } else if (controller.phase === "finished") {
    root.appendChild(el("p", "done", "All implications are decided — thank you!"));
  }
  renderDashboard(controller, root);
}
