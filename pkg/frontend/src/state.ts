import type { DiagramModel } from "./model.js";

export interface Hyperparameters {
  sigma_tfidf: number;
  sigma_relationship: number;
  sigma_p: number;
  sigma_rel_difference: number;
  l_phrase: number;
}

export const DEFAULTS: Hyperparameters = {
  sigma_tfidf: 0,
  sigma_relationship: 0.5,
  sigma_p: 0.6,
  sigma_rel_difference: 0.5,
  l_phrase: 3,
};

// closed ranges enforced by the service; the controls clamp to them
export const RANGES: Record<keyof Hyperparameters, [number, number]> = {
  sigma_tfidf: [0, 1],
  sigma_relationship: [0, 1],
  sigma_p: [0, 3],
  sigma_rel_difference: [0, 3],
  l_phrase: [1, 10],
};

export function clamp(name: keyof Hyperparameters, value: number): number {
  const [lo, hi] = RANGES[name];
  if (Number.isNaN(value)) return DEFAULTS[name];
  let v = Math.min(hi, Math.max(lo, value));
  if (name === "l_phrase") v = Math.round(v);
  return v;
}

export interface UiState {
  corpusId: string;
  documentId: string | null;
  diagramType: "bdd" | "ibd" | "req";
  parentPhrase: string;
  params: Hyperparameters;
  lastModel: DiagramModel | null;
  lastPuml: string | null;
  warnings: string[];
}

export function initialState(): UiState {
  return {
    corpusId: "default",
    documentId: null,
    diagramType: "bdd",
    parentPhrase: "",
    params: { ...DEFAULTS },
    lastModel: null,
    lastPuml: null,
    warnings: [],
  };
}
