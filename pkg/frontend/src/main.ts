import { ApiError, Client } from "./api.js";
import { download, modelExport, pumlExport } from "./exporting.js";
import { renderModel } from "./render.js";
import { clamp, initialState, type Hyperparameters } from "./state.js";

const state = initialState();
const client = new Client();

const $ = (id: string) => document.getElementById(id)!;

const PARAM_IDS: (keyof Hyperparameters)[] = [
  "sigma_tfidf",
  "sigma_relationship",
  "sigma_p",
  "sigma_rel_difference",
  "l_phrase",
];

async function loadDocuments(): Promise<void> {
  const list = $("documents");
  list.replaceChildren();
  const docs = await client.listDocuments(state.corpusId);
  for (const doc of docs) {
    const item = document.createElement("li");
    item.textContent = `${doc.name} (${doc.word_count} words)`;
    item.dataset.id = doc.id;
    item.addEventListener("click", () => {
      state.documentId = doc.id;
      for (const other of list.children) other.classList.remove("selected");
      item.classList.add("selected");
      void regenerate();
    });
    list.appendChild(item);
  }
  if (docs.length && state.documentId === null) {
    (list.firstElementChild as HTMLElement).click();
  }
}

function readControls(): void {
  for (const name of PARAM_IDS) {
    const input = $(name) as HTMLInputElement;
    const value = clamp(name, Number(input.value));
    input.value = String(value);
    state.params[name] = value;
  }
  state.diagramType = ($("diagram_type") as HTMLSelectElement).value as typeof state.diagramType;
  state.parentPhrase = ($("parent") as HTMLInputElement).value.trim();
}

export async function regenerate(): Promise<void> {
  if (state.documentId === null) return;
  readControls();
  const errors = $("errors");
  errors.replaceChildren();
  try {
    const response = await client.generateDiagram({
      corpus_id: state.corpusId,
      document_id: state.documentId,
      diagram_type: state.diagramType,
      parent_phrase: state.parentPhrase || null,
      hyperparameters: state.params,
    });
    state.lastModel = response.model;
    state.lastPuml = response.puml;
    state.warnings = response.warnings;
    renderModel(response.model, $("diagram") as unknown as SVGSVGElement);
    const warnings = $("warnings");
    warnings.replaceChildren();
    for (const text of response.warnings) {
      const li = document.createElement("li");
      li.textContent = text;
      warnings.appendChild(li);
    }
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") return;
    if (err instanceof ApiError) {
      const message = document.createElement("p");
      message.textContent = `${err.status}: ${err.message}`;
      errors.appendChild(message);
      for (const candidate of err.candidates) {
        const button = document.createElement("button");
        button.textContent = candidate;
        button.addEventListener("click", () => {
          ($("parent") as HTMLInputElement).value = candidate;
          void regenerate();
        });
        errors.appendChild(button);
      }
      return;
    }
    throw err;
  }
}

function exportPuml(): void {
  const text = pumlExport(state.lastPuml);
  if (text === null) return;
  download(exportName("puml"), text, "text/plain");
}

function exportJson(): void {
  const text = modelExport(state.lastModel);
  if (text === null) return;
  download(exportName("json"), text, "application/json");
}

function exportName(extension: string): string {
  const parent = state.parentPhrase ? `_${state.parentPhrase.replace(/\s+/g, "_")}` : "";
  return `${state.documentId}_${state.diagramType}${parent}.${extension}`;
}

export function mount(): void {
  $("generate").addEventListener("click", () => void regenerate());
  $("export_puml").addEventListener("click", exportPuml);
  $("export_json").addEventListener("click", exportJson);
  void loadDocuments();
}

if (typeof document !== "undefined" && document.getElementById("generate")) {
  mount();
}
