import type { DiagramResponse, DocumentInfo } from "./model.js";
import type { Hyperparameters } from "./state.js";

export interface DiagramRequest {
  corpus_id: string;
  document_id: string;
  diagram_type: string;
  parent_phrase: string | null;
  hyperparameters: Hyperparameters;
}

export class ApiError extends Error {
  status: number;
  candidates: string[];

  constructor(status: number, message: string, candidates: string[] = []) {
    super(message);
    this.status = status;
    this.candidates = candidates;
  }
}

/** Service client; at most one diagram request in flight (latest wins). */
export class Client {
  private baseUrl: string;
  private inflight: AbortController | null = null;

  constructor(baseUrl = "") {
    this.baseUrl = baseUrl.replace(/\/$/, "");
  }

  async listDocuments(corpusId: string): Promise<DocumentInfo[]> {
    const res = await fetch(`${this.baseUrl}/corpora/${corpusId}/documents`);
    if (!res.ok) throw new ApiError(res.status, await res.text());
    return res.json();
  }

  async generateDiagram(request: DiagramRequest): Promise<DiagramResponse> {
    if (this.inflight) this.inflight.abort();
    const controller = new AbortController();
    this.inflight = controller;
    try {
      const res = await fetch(`${this.baseUrl}/diagrams`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(request),
        signal: controller.signal,
      });
      if (!res.ok) {
        const body = await res.json().catch(() => ({ detail: res.statusText }));
        const detail = body.detail ?? body;
        if (typeof detail === "object" && detail !== null && "candidates" in detail) {
          throw new ApiError(res.status, String(detail.message ?? "request failed"), detail.candidates);
        }
        throw new ApiError(res.status, typeof detail === "string" ? detail : JSON.stringify(detail));
      }
      return (await res.json()) as DiagramResponse;
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
  }
}
