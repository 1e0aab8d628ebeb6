// Bootstrap: join an existing session (?session=<id>) or create one from
// the setup form, then keep the view in sync with the controller.

import { SessionApi } from "./api.js";
import { SessionController } from "./controller.js";
import { renderApp } from "./view.js";

const params = new URLSearchParams(window.location.search);
const apiBase = params.get("api") ?? "http://127.0.0.1:8000";
const api = new SessionApi(apiBase);
const root = document.getElementById("app")!;

async function runSession(id: string): Promise<void> {
  const controller = new SessionController(api, id);
  controller.onChange(() => renderApp(controller, root));
  await controller.refresh();
}

function renderSetup(): void {
  root.replaceChildren();
  const heading = document.createElement("h1");
  heading.textContent = "Start an exploration";
  const form = document.createElement("form");
  form.innerHTML = `
    <label>Attributes (comma-separated)
      <input name="attributes" placeholder="warm,cold,wet" required />
    </label>
    <label>Label <input name="label" placeholder="my domain" /></label>
    <label>Mode
      <select name="mode">
        <option value="general" selected>general (partial counterexamples)</option>
        <option value="classical">classical (full counterexamples)</option>
      </select>
    </label>
    <label>Strategy
      <select name="strategy">
        <option value="minimal" selected>minimal premises</option>
        <option value="max-conclusion">any undecided, largest conclusion</option>
      </select>
    </label>
    <button type="submit">Create session</button>
    <p class="inline-error" hidden></p>
  `;
  form.onsubmit = async (event) => {
    event.preventDefault();
    const data = new FormData(form);
    const attributes = String(data.get("attributes") ?? "")
      .split(",")
      .map((s) => s.trim())
      .filter(Boolean);
    try {
      const created = await api.createSession({
        attributes,
        label: String(data.get("label") ?? ""),
        mode: data.get("mode") === "classical" ? "classical" : "general",
        strategy:
          data.get("strategy") === "max-conclusion" ? "max-conclusion" : "minimal",
      });
      const url = new URL(window.location.href);
      url.searchParams.set("session", created.id);
      window.history.replaceState(null, "", url.toString());
      await runSession(created.id);
    } catch (error) {
      const box = form.querySelector<HTMLParagraphElement>(".inline-error")!;
      box.hidden = false;
      box.textContent = error instanceof Error ? error.message : String(error);
    }
  };
  root.append(heading, form);
}

const sessionId = params.get("session");
if (sessionId) {
  void runSession(sessionId);
} else {
  renderSetup();
}
