import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiError, Client, type DiagramRequest } from "../src/api.js";

function request(overrides: Partial<DiagramRequest> = {}): DiagramRequest {
  return {
    corpus_id: "default",
    document_id: "devices",
    diagram_type: "bdd",
    parent_phrase: null,
    hyperparameters: {
      sigma_tfidf: 0,
      sigma_relationship: 0.5,
      sigma_p: 0.6,
      sigma_rel_difference: 0.5,
      l_phrase: 3,
    },
    ...overrides,
  };
}

const okBody = { model: { type: "BDD", blocks: [] }, puml: "@startuml\n@enduml\n", warnings: [] };

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("diagram client", () => {
  it("one regenerate issues exactly one /diagrams call", async () => {
    const fetchMock = vi.fn(async () => new Response(JSON.stringify(okBody), { status: 200 }));
    vi.stubGlobal("fetch", fetchMock);
    const client = new Client();
    await client.generateDiagram(request());
    expect(fetchMock).toHaveBeenCalledTimes(1);
    const [url, init] = fetchMock.mock.calls[0] as unknown as [string, RequestInit];
    expect(url).toBe("/diagrams");
    expect(init.method).toBe("POST");
    expect(JSON.parse(init.body as string).document_id).toBe("devices");
  });

  it("a newer request aborts the one in flight (latest wins)", async () => {
    const seenSignals: AbortSignal[] = [];
    const fetchMock = vi.fn((_url: string, init: RequestInit) => {
      const signal = init.signal as AbortSignal;
      seenSignals.push(signal);
      return new Promise<Response>((resolve, reject) => {
        signal.addEventListener("abort", () =>
          reject(new DOMException("aborted", "AbortError")),
        );
        setTimeout(() => resolve(new Response(JSON.stringify(okBody), { status: 200 })), 20);
      });
    });
    vi.stubGlobal("fetch", fetchMock);
    const client = new Client();
    const first = client.generateDiagram(request());
    const second = client.generateDiagram(request({ diagram_type: "req" }));
    await expect(first).rejects.toThrow("aborted");
    await expect(second).resolves.toEqual(okBody);
    expect(seenSignals[0].aborted).toBe(true);
    expect(seenSignals[1].aborted).toBe(false);
  });

  it("surfaces 422 parent errors with the candidate list", async () => {
    const body = {
      detail: { message: "unknown parent phrase 'displai'", candidates: ["display", "display option"] },
    };
    vi.stubGlobal("fetch", vi.fn(async () => new Response(JSON.stringify(body), { status: 422 })));
    const client = new Client();
    const failure = client.generateDiagram(request({ parent_phrase: "displai" }));
    await expect(failure).rejects.toMatchObject({
      status: 422,
      candidates: ["display", "display option"],
    });
  });

  it("surfaces 400 range errors as plain messages", async () => {
    const body = { detail: "sigma_p=5.0 outside [0.0, 3.0]" };
    vi.stubGlobal("fetch", vi.fn(async () => new Response(JSON.stringify(body), { status: 400 })));
    const client = new Client();
    await expect(client.generateDiagram(request())).rejects.toThrow("sigma_p");
    await expect(client.generateDiagram(request())).rejects.toBeInstanceOf(ApiError);
  });
});
