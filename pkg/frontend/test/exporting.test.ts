import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import type { DiagramResponse } from "../src/model.js";
import { modelExport, pumlExport } from "../src/exporting.js";

const response = JSON.parse(
  readFileSync(join(dirname(fileURLToPath(import.meta.url)), "fixtures", "req_display_response.json"), "utf-8"),
) as DiagramResponse;

describe("export passthrough", () => {
  it("exported .puml bytes equal the service response", () => {
    const exported = pumlExport(response.puml);
    expect(exported).toBe(response.puml);
    expect(new TextEncoder().encode(exported!)).toEqual(
      new TextEncoder().encode(response.puml),
    );
  });

  it("nothing loaded exports nothing", () => {
    expect(pumlExport(null)).toBeNull();
    expect(modelExport(null)).toBeNull();
  });

  it("two exports of the same state are identical", () => {
    expect(pumlExport(response.puml)).toBe(pumlExport(response.puml));
    expect(modelExport(response.model)).toBe(modelExport(response.model));
  });

  it("model export round-trips without content changes", () => {
    const exported = modelExport(response.model)!;
    expect(JSON.parse(exported)).toEqual(response.model);
  });
});
