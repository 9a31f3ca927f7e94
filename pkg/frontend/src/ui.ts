/** DOM rendering for the single-card review flow.
 *
 * Rendering is split into pure HTML-string builders (testable without a
 * browser) and a thin wiring layer that attaches them to the document.
 */

import { ReviewRecord } from "./api.js";
import {
  DecisionDraft,
  FlowState,
  ReviewFlow,
  applyShortcut,
  canSubmit,
  emptyDraft,
  shortcutFor,
} from "./flow.js";
import { glossFor } from "./glosses.js";

function esc(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function boolGroup(
  name: string,
  label: string,
  value: boolean | null,
): string {
  const yes = value === true ? " checked" : "";
  const no = value === false ? " checked" : "";
  return `
  <fieldset class="criterion" data-criterion="${name}">
    <legend>${esc(label)}</legend>
    <label><input type="radio" name="${name}" value="yes"${yes}> yes</label>
    <label><input type="radio" name="${name}" value="no"${no}> no</label>
  </fieldset>`;
}

export function renderCard(record: ReviewRecord, draft: DecisionDraft): string {
  const incorrect =
    draft.semanticallyCorrect === false || draft.contextuallyCorrect === false;
  return `
<div class="card" data-record-id="${esc(record.id)}">
  <div class="category">
    <span class="category-name">${esc(record.category)}</span>
    <span class="category-gloss">${esc(glossFor(record.category))}</span>
  </div>
  <div class="term">
    <span class="source">${esc(record.source)}</span>
    <span class="arrow">&rarr;</span>
    <span class="candidate">${esc(record.candidate)}</span>
  </div>
  ${boolGroup("semantic", "Is the translation semantically correct?", draft.semanticallyCorrect)}
  ${boolGroup("contextual", "Is the translation correct for this category?", draft.contextuallyCorrect)}
  <div class="correction${incorrect ? "" : " hidden"}">
    <label>Replacement
      <input type="text" name="replacement" value="${esc(draft.replacement)}">
    </label>
    <label><input type="checkbox" name="remove"${draft.remove ? " checked" : ""}>
      delete this term</label>
  </div>
  <label class="additions">Additional translations (separate with ;)
    <input type="text" name="additions" value="${esc(draft.additions.join(";"))}">
  </label>
  <button name="submit" ${canSubmit(draft) ? "" : "disabled"}>Submit</button>
  <p class="hint">shortcuts: a = accept, f = flag incorrect, n = add alternative</p>
</div>`;
}

export function renderProgress(completed: number, total: number): string {
  const pct = total > 0 ? Math.round((100 * completed) / total) : 0;
  return `
<div class="progress">
  <div class="progress-fill" style="width: ${pct}%"></div>
  <span class="progress-text">${completed} / ${total}</span>
</div>`;
}

export function renderDone(
  batchId: string,
  annotator: string,
  total: number,
): string {
  const href = `/api/export/${encodeURIComponent(batchId)}?annotator=${encodeURIComponent(annotator)}`;
  return `
<div class="done">
  <h2>Batch complete</h2>
  <p>All ${total} cards reviewed. Thank you.</p>
  <a class="export-link" href="${href}" download="annotations.csv">Download your sheet</a>
</div>`;
}

export function renderError(message: string): string {
  return `<div class="error"><p>${esc(message)}</p>
<button name="retry">Retry</button></div>`;
}

function readDraft(root: HTMLElement): DecisionDraft {
  const radio = (name: string): boolean | null => {
    const el = root.querySelector<HTMLInputElement>(
      `input[name="${name}"]:checked`,
    );
    return el === null ? null : el.value === "yes";
  };
  const text = (name: string): string =>
    root.querySelector<HTMLInputElement>(`input[name="${name}"]`)?.value ?? "";
  return {
    semanticallyCorrect: radio("semantic"),
    contextuallyCorrect: radio("contextual"),
    replacement: text("replacement"),
    remove:
      root.querySelector<HTMLInputElement>('input[name="remove"]')?.checked ??
      false,
    additions: text("additions")
      .split(";")
      .map((a) => a.trim())
      .filter((a) => a !== ""),
  };
}

export function mount(root: HTMLElement, flow: ReviewFlow): void {
  let draft = emptyDraft();

  const redraw = () => {
    const state: FlowState = flow.state;
    let body: string;
    switch (state.kind) {
      case "loading":
        body = "<p>Loading…</p>";
        break;
      case "card":
        body =
          renderProgress(flow.completed(), flow.total()) +
          renderCard(state.record, draft);
        break;
      case "done":
        body =
          renderProgress(flow.completed(), flow.total()) +
          renderDone(flow.batchId, flow.annotator, flow.total());
        break;
      case "error":
        body = renderError(state.message);
        break;
    }
    root.innerHTML = body;
  };

  root.addEventListener("change", () => {
    if (flow.state.kind !== "card") return;
    draft = readDraft(root);
    redraw();
  });

  root.addEventListener("click", async (ev) => {
    const target = ev.target as HTMLElement;
    if (target.matches('button[name="submit"]')) {
      draft = readDraft(root);
      await flow.submit(draft);
      draft = emptyDraft();
      redraw();
    } else if (target.matches('button[name="retry"]')) {
      await flow.advance();
      redraw();
    }
  });

  document.addEventListener("keydown", async (ev) => {
    if (flow.state.kind !== "card") return;
    const active = document.activeElement;
    if (active instanceof HTMLInputElement && active.type === "text") return;
    const action = shortcutFor(ev.key);
    if (action === null) return;
    if (action === "add-alternative") {
      root
        .querySelector<HTMLInputElement>('input[name="additions"]')
        ?.focus();
      return;
    }
    draft = applyShortcut(readDraft(root), action);
    if (action === "accept" && canSubmit(draft)) {
      await flow.submit(draft);
      draft = emptyDraft();
    }
    redraw();
  });

  flow.start().then(redraw);
}
