// Explorer session: current quiver, a replayable history of actions, and
// cached verdict/relations panels that are invalidated on every action.
//
// Sessions are immutable values; applyAction/undo/redo return new sessions,
// so a failed service call leaves the caller's session untouched.

import type { ServiceClient } from "./api.js";
import { factorQuiver, hasVertex, quiversEqual } from "./quiver.js";
import {
  SESSION_FILE_VERSION,
  isAction,
  isQuiverJson,
  type Action,
  type ErrorEnvelope,
  type QuiverJson,
  type RelationsResponse,
  type SessionFile,
  type TypeVerdictJson,
} from "./types.js";

export interface PanelCache {
  verdict?: TypeVerdictJson;
  relations?: RelationsResponse | ErrorEnvelope;
}

export interface HistoryEntry {
  action: Action;
  /** quiver after the action was applied */
  quiver: QuiverJson;
}

export interface Session {
  initial: QuiverJson;
  /** applied actions, oldest first; the last entry's quiver is current */
  undoStack: HistoryEntry[];
  /** undone actions, most recently undone last */
  redoStack: HistoryEntry[];
  cache: PanelCache;
}

export function createSession(initial: QuiverJson): Session {
  return { initial, undoStack: [], redoStack: [], cache: {} };
}

export function currentQuiver(session: Session): QuiverJson {
  const top = session.undoStack[session.undoStack.length - 1];
  return top ? top.quiver : session.initial;
}

export function historyActions(session: Session): Action[] {
  return session.undoStack.map((e) => e.action);
}

export async function applyAction(
  session: Session,
  action: Action,
  client: ServiceClient,
): Promise<Session> {
  const q = currentQuiver(session);
  if (!hasVertex(q, action.vertex)) {
    throw new Error(`unknown vertex ${action.vertex}`);
  }
  const next =
    action.kind === "mutate"
      ? await client.mutate(q, action.vertex)
      : factorQuiver(q, action.vertex);
  return {
    initial: session.initial,
    undoStack: [...session.undoStack, { action, quiver: next }],
    redoStack: [],
    cache: {},
  };
}

export function canUndo(session: Session): boolean {
  return session.undoStack.length > 0;
}

export function canRedo(session: Session): boolean {
  return session.redoStack.length > 0;
}

export function undo(session: Session): Session {
  const entry = session.undoStack[session.undoStack.length - 1];
  if (!entry) return session;
  return {
    initial: session.initial,
    undoStack: session.undoStack.slice(0, -1),
    redoStack: [...session.redoStack, entry],
    cache: {},
  };
}

export function redo(session: Session): Session {
  const entry = session.redoStack[session.redoStack.length - 1];
  if (!entry) return session;
  return {
    initial: session.initial,
    undoStack: [...session.undoStack, entry],
    redoStack: session.redoStack.slice(0, -1),
    cache: {},
  };
}

export function withPanels(session: Session, cache: PanelCache): Session {
  return { ...session, cache };
}

/** Replaying the recorded history from the initial quiver must land exactly
 * on the current quiver; used as an internal consistency check. */
export async function replayConsistent(
  session: Session,
  client: ServiceClient,
): Promise<boolean> {
  let probe = createSession(session.initial);
  for (const action of historyActions(session)) {
    probe = await applyAction(probe, action, client);
  }
  return quiversEqual(currentQuiver(probe), currentQuiver(session));
}

export function saveSession(session: Session): SessionFile {
  return {
    version: SESSION_FILE_VERSION,
    initial: session.initial,
    actions: historyActions(session),
  };
}

export function serializeSession(session: Session): string {
  return JSON.stringify(saveSession(session), null, 2);
}

/** Load a saved session, replaying every action through the same code path
 * as live use.  Rejects version mismatches and malformed files. */
export async function loadSession(
  data: unknown,
  client: ServiceClient,
): Promise<Session> {
  if (typeof data === "string") {
    try {
      data = JSON.parse(data);
    } catch (exc) {
      throw new Error(`session file is not valid JSON: ${String(exc)}`);
    }
  }
  const file = data as SessionFile;
  if (typeof file !== "object" || file === null) {
    throw new Error("session file must be a JSON object");
  }
  if (file.version !== SESSION_FILE_VERSION) {
    throw new Error(
      `unsupported session file version ${String(file.version)} (expected ${SESSION_FILE_VERSION})`,
    );
  }
  if (!isQuiverJson(file.initial)) {
    throw new Error("session file has a malformed initial quiver");
  }
  if (!Array.isArray(file.actions) || !file.actions.every(isAction)) {
    throw new Error("session file has a malformed action list");
  }
  let session = createSession(file.initial);
  for (const action of file.actions) {
    session = await applyAction(session, action, client);
  }
  return session;
}
