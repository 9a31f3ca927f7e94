import { AnnotationApi } from "./api.js";
import { ReviewFlow } from "./flow.js";
import { mount } from "./ui.js";

function annotatorId(): string {
  const params = new URLSearchParams(window.location.search);
  const fromUrl = params.get("annotator");
  if (fromUrl) {
    window.localStorage.setItem("annotator", fromUrl);
    return fromUrl;
  }
  const stored = window.localStorage.getItem("annotator");
  if (stored) return stored;
  const entered = window.prompt("Annotator id:") || "anonymous";
  window.localStorage.setItem("annotator", entered);
  return entered;
}

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app element");
  const api = new AnnotationApi("");
  const batches = await api.batches();
  if (batches.length === 0) {
    root.innerHTML = "<p>No batch loaded on the server.</p>";
    return;
  }
  const flow = new ReviewFlow(api, batches[0].id, annotatorId());
  mount(root, flow);
}

boot().catch((err) => {
  const root = document.getElementById("app");
  if (root) root.textContent = `Failed to start: ${err}`;
});
