import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import type { DiagramModel, DiagramResponse } from "../src/model.js";
import { renderModel } from "../src/render.js";

const here = dirname(fileURLToPath(import.meta.url));

function fixture(name: string): DiagramResponse {
  const raw = readFileSync(join(here, "fixtures", name), "utf-8");
  return JSON.parse(raw) as DiagramResponse;
}

function renderToSvg(model: DiagramModel): SVGSVGElement {
  const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  document.body.appendChild(svg);
  renderModel(model, svg);
  return svg;
}

describe("diagram rendering", () => {
  const bdd = fixture("bdd_devices_response.json");

  it("draws one node per block with operations in the body", () => {
    const svg = renderToSvg(bdd.model);
    const nodes = svg.querySelectorAll("g.block");
    expect(nodes.length).toBe(bdd.model.blocks.length);
    const withOps = bdd.model.blocks.find((b) => b.operations.length > 0)!;
    const rendered = svg.querySelector(`g.block[data-id="${withOps.id}"]`)!;
    const bodyLines = [...rendered.querySelectorAll("text.operation")].map((t) => t.textContent);
    expect(bodyLines).toEqual(withOps.operations.map((op) => `${op}()`));
  });

  it("renders dotted strokes exactly for augmented elements", () => {
    const svg = renderToSvg(bdd.model);
    for (const block of bdd.model.blocks) {
      const rect = svg.querySelector(`g.block[data-id="${block.id}"] rect`)!;
      expect(rect.hasAttribute("stroke-dasharray")).toBe(block.origin === "augmented");
    }
    const edges = svg.querySelectorAll("line.edge:not(.kind-trace):not(.kind-satisfy)");
    expect(edges.length).toBe(bdd.model.relations.length);
    edges.forEach((line, i) => {
      const augmented = bdd.model.relations[i].origin === "augmented";
      expect(line.hasAttribute("stroke-dasharray")).toBe(augmented);
    });
  });

  it("shows a placeholder for an empty model", () => {
    const svg = renderToSvg({
      type: "BDD",
      parent: null,
      blocks: [],
      relations: [],
      requirements: [],
      req_relations: [],
      metadata: {},
    });
    expect(svg.textContent).toContain("no blocks above thresholds");
  });

  it("requirement notes expand on click", () => {
    const req = fixture("req_display_response.json");
    const svg = renderToSvg(req.model);
    const first = svg.querySelector("g.requirement")!;
    const note = first.querySelector("g.note")!;
    expect(note.classList.contains("hidden")).toBe(true);
    first.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    expect(note.classList.contains("hidden")).toBe(false);
    expect(note.querySelectorAll("text.note-line").length).toBeGreaterThan(0);
  });
});

describe("requirement view for a selected parent (demo corpus fixture)", () => {
  // captured verbatim from POST /diagrams on the bundled demo corpus with
  // diagram_type=req and parent_phrase=display
  const response = fixture("req_display_response.json");

  it("every displayed requirement contains the selected phrase", () => {
    const svg = renderToSvg(response.model);
    const labels = [...svg.querySelectorAll("g.requirement text.name")].map(
      (t) => t.textContent ?? "",
    );
    expect(labels.length).toBeGreaterThan(0);
    for (const label of labels) {
      expect(label).toContain("display");
    }
  });

  it("displays exactly the requirements of the model (thin client)", () => {
    const svg = renderToSvg(response.model);
    const rendered = new Set(
      [...svg.querySelectorAll("g.requirement")].map((g) => g.getAttribute("data-id")),
    );
    expect(rendered).toEqual(new Set(response.model.requirements.map((r) => r.id)));
  });
});
