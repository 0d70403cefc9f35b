// Browser bootstrap: wires session state to the DOM.  Click a vertex to
// mutate there (service call); shift-click to drop it (local factoring);
// undo/redo buttons walk the history; save/load roundtrips the session file.

import { createHttpClient, createRequestGate, debounce, type ServiceClient } from "./api.js";
import { renderQuiver, renderRelationsPanel, verdictBadge } from "./render.js";
import {
  applyAction,
  canRedo,
  canUndo,
  createSession,
  currentQuiver,
  loadSession,
  redo,
  serializeSession,
  undo,
  withPanels,
  type Session,
} from "./session.js";
import type { QuiverJson } from "./types.js";

const DEFAULT_QUIVER: QuiverJson = {
  vertices: ["1", "2", "3"],
  arrows: [
    { from: "1", to: "2", mult: 1 },
    { from: "2", to: "3", mult: 1 },
  ],
};

export function mount(root: HTMLElement, client: ServiceClient): void {
  let session: Session = createSession(DEFAULT_QUIVER);
  const gate = createRequestGate();

  const refreshPanels = debounce(async () => {
    const token = gate.next();
    const q = currentQuiver(session);
    try {
      const [verdict, relations] = await Promise.all([
        client.typecheck(q),
        client.relations(q),
      ]);
      if (!gate.isCurrent(token)) return; // a newer action superseded us
      session = withPanels(session, { verdict, relations });
      paint();
    } catch {
      /* leave panels empty; the next action retries */
    }
  }, 150);

  const paint = (): void => {
    const q = currentQuiver(session);
    const verdict = session.cache.verdict;
    root.innerHTML = `
      <div class="toolbar">
        <button id="undo" ${canUndo(session) ? "" : "disabled"}>undo</button>
        <button id="redo" ${canRedo(session) ? "" : "disabled"}>redo</button>
        <button id="save">save</button>
        <label class="load">load<input id="load" type="file" hidden></label>
        <span class="badge">${verdictBadge(verdict)}</span>
      </div>
      <div class="diagram">${renderQuiver(q, { verdict })}</div>
      <div class="panel">${renderRelationsPanel(
        session.cache.relations && "relations" in session.cache.relations
          ? session.cache.relations.relations
          : undefined,
      )}</div>`;
    wire();
  };

  const act = async (kind: "mutate" | "drop", vertex: string): Promise<void> => {
    try {
      session = await applyAction(session, { kind, vertex }, client);
      gate.invalidate();
      paint();
      refreshPanels.call();
    } catch (exc) {
      console.error("action rejected:", exc); // session unchanged; retry by clicking again
    }
  };

  const wire = (): void => {
    root.querySelectorAll<SVGGElement>("g.vertex").forEach((node) => {
      node.addEventListener("click", (event) => {
        const vertex = node.dataset.vertex!;
        void act(event.shiftKey ? "drop" : "mutate", vertex);
      });
    });
    root.querySelector("#undo")?.addEventListener("click", () => {
      session = undo(session);
      gate.invalidate();
      paint();
      refreshPanels.call();
    });
    root.querySelector("#redo")?.addEventListener("click", () => {
      session = redo(session);
      gate.invalidate();
      paint();
      refreshPanels.call();
    });
    root.querySelector("#save")?.addEventListener("click", () => {
      const blob = new Blob([serializeSession(session)], { type: "application/json" });
      const link = document.createElement("a");
      link.href = URL.createObjectURL(blob);
      link.download = "session.json";
      link.click();
      URL.revokeObjectURL(link.href);
    });
    root.querySelector<HTMLInputElement>("#load")?.addEventListener("change", async (event) => {
      const file = (event.target as HTMLInputElement).files?.[0];
      if (!file) return;
      try {
        session = await loadSession(await file.text(), client);
        gate.invalidate();
        paint();
        refreshPanels.call();
      } catch (exc) {
        console.error("load rejected:", exc); // session untouched
      }
    });
  };

  paint();
  refreshPanels.call();
}

if (typeof document !== "undefined") {
  const root = document.getElementById("app");
  if (root) {
    mount(root, createHttpClient(""));
  }
}
