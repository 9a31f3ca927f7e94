/** Review-flow state machine: fetch next -> render card -> capture decision
 * -> submit -> advance.
 *
 * All state of record lives server-side; this class only tracks the current
 * card, the in-progress draft, and a retry queue for submits that failed on
 * the network. A duplicate submit for the same record id is a no-op.
 */

import {
  AnnotationApi,
  ApiError,
  DecisionPayload,
  Progress,
  ReviewRecord,
} from "./api.js";

export const REMOVE_MARKER = "!remove";

export interface DecisionDraft {
  semanticallyCorrect: boolean | null;
  contextuallyCorrect: boolean | null;
  replacement: string;
  remove: boolean;
  additions: string[];
}

export function emptyDraft(): DecisionDraft {
  return {
    semanticallyCorrect: null,
    contextuallyCorrect: null,
    replacement: "",
    remove: false,
    additions: [],
  };
}

/** Mirrors the server-side decision invariants: submit only becomes
 * available when the draft would be accepted. */
export function canSubmit(d: DecisionDraft): boolean {
  if (d.semanticallyCorrect === null || d.contextuallyCorrect === null) {
    return false;
  }
  const correct = d.semanticallyCorrect && d.contextuallyCorrect;
  const hasReplacement = d.replacement.trim() !== "";
  if (correct) {
    return !hasReplacement && !d.remove;
  }
  // incorrect: exactly one of replacement / removal
  return hasReplacement !== d.remove;
}

export function draftToPayload(
  draft: DecisionDraft,
  batchId: string,
  annotator: string,
  recordId: string,
): DecisionPayload {
  if (!canSubmit(draft)) {
    throw new Error("draft does not satisfy the decision invariants");
  }
  return {
    batch_id: batchId,
    annotator,
    id: recordId,
    semantically_correct: draft.semanticallyCorrect as boolean,
    contextually_correct: draft.contextuallyCorrect as boolean,
    replacement: draft.remove ? REMOVE_MARKER : draft.replacement.trim(),
    additions: draft.additions.map((a) => a.trim()).filter((a) => a !== ""),
  };
}

export type FlowState =
  | { kind: "loading" }
  | { kind: "card"; record: ReviewRecord }
  | { kind: "done" }
  | { kind: "error"; message: string };

export class ReviewFlow {
  state: FlowState = { kind: "loading" };
  progress: Progress | null = null;
  /** Submits that failed on the network, retried before the next card. */
  readonly pending: DecisionPayload[] = [];
  private submitted = new Set<string>();

  constructor(
    private readonly api: AnnotationApi,
    readonly batchId: string,
    readonly annotator: string,
  ) {}

  /** Refreshing mid-session lands here too: the server cursor decides
   * which card is next, so nothing is lost or duplicated. */
  async start(): Promise<FlowState> {
    return this.advance();
  }

  async advance(): Promise<FlowState> {
    try {
      await this.flushPending();
      const next = await this.api.next(this.batchId, this.annotator);
      this.progress = await this.api.progress(this.batchId);
      this.state = next.done
        ? { kind: "done" }
        : { kind: "card", record: next.record as ReviewRecord };
    } catch (err) {
      this.state = { kind: "error", message: String(err) };
    }
    return this.state;
  }

  /** Submit the draft for the current card and advance. Network failures
   * keep the decision locally and surface on the next advance. */
  async submit(draft: DecisionDraft): Promise<FlowState> {
    if (this.state.kind !== "card") {
      throw new Error("no card to submit");
    }
    const record = this.state.record;
    if (this.submitted.has(record.id)) {
      return this.advance();
    }
    const payload = draftToPayload(
      draft,
      this.batchId,
      this.annotator,
      record.id,
    );
    try {
      await this.api.submit(payload);
      this.submitted.add(record.id);
    } catch (err) {
      if (err instanceof ApiError) {
        // the server rejected it; the draft is wrong, not the network
        this.state = { kind: "error", message: err.message };
        return this.state;
      }
      this.pending.push(payload);
    }
    return this.advance();
  }

  private async flushPending(): Promise<void> {
    while (this.pending.length > 0) {
      const payload = this.pending[0];
      await this.api.submit(payload);
      this.submitted.add(payload.id);
      this.pending.shift();
    }
  }

  completed(): number {
    return this.progress?.by_annotator[this.annotator] ?? 0;
  }

  total(): number {
    return this.progress?.total ?? 0;
  }
}

export type ShortcutAction =
  | "accept"
  | "flag-incorrect"
  | "add-alternative"
  | null;

/** Keyboard shortcuts for throughput: a = accept, f = flag incorrect,
 * n = add an alternative translation. */
export function shortcutFor(key: string): ShortcutAction {
  switch (key.toLowerCase()) {
    case "a":
      return "accept";
    case "f":
      return "flag-incorrect";
    case "n":
      return "add-alternative";
    default:
      return null;
  }
}

export function applyShortcut(
  draft: DecisionDraft,
  action: ShortcutAction,
): DecisionDraft {
  switch (action) {
    case "accept":
      return {
        ...draft,
        semanticallyCorrect: true,
        contextuallyCorrect: true,
        replacement: "",
        remove: false,
      };
    case "flag-incorrect":
      return { ...draft, semanticallyCorrect: false };
    default:
      return draft;
  }
}
