// SVG rendering of a diagram model: blocks with their operations,
// requirements with expandable texts, edge markers per relation kind,
// dotted strokes for every augmented element.

import type { BlockEdge, DiagramModel, ReqEdge } from "./model.js";
import { layeredLayout, type LayoutEdge, type LayoutNode, type Placed } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const CHAR_W = 7.4;
const LINE_H = 16;

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

function blockSize(name: string, operations: string[]): { width: number; height: number } {
  const longest = Math.max(name.length, ...operations.map((op) => op.length + 2), 6);
  return {
    width: longest * CHAR_W + 20,
    height: LINE_H + 12 + operations.length * LINE_H,
  };
}

export function renderModel(model: DiagramModel, svg: SVGSVGElement): void {
  svg.replaceChildren();
  const defs = el("defs");
  defs.innerHTML = `
    <marker id="m-diamond" markerWidth="14" markerHeight="10" refX="13" refY="5" orient="auto">
      <path d="M1,5 L7,1 L13,5 L7,9 Z" fill="white" stroke="black"/>
    </marker>
    <marker id="m-triangle" markerWidth="14" markerHeight="12" refX="13" refY="6" orient="auto">
      <path d="M1,1 L13,6 L1,11 Z" fill="white" stroke="black"/>
    </marker>
    <marker id="m-arrow" markerWidth="10" markerHeight="8" refX="9" refY="4" orient="auto">
      <path d="M1,1 L9,4 L1,7" fill="none" stroke="black"/>
    </marker>`;
  svg.appendChild(defs);

  if (!model.blocks.length && !model.requirements.length) {
    const empty = el("text", { x: "0", y: "20", class: "placeholder" });
    empty.textContent = "no blocks above thresholds";
    svg.appendChild(empty);
    svg.setAttribute("viewBox", "-160 0 320 50");
    return;
  }

  const nodes: LayoutNode[] = [];
  for (const block of model.blocks) {
    nodes.push({ id: block.id, ...blockSize(block.name, block.operations) });
  }
  for (const req of model.requirements) {
    nodes.push({ id: req.id, ...blockSize(`<<requirement>> ${req.name}`, []) });
  }
  const edges: LayoutEdge[] = [];
  for (const edge of model.relations) {
    edges.push({
      from: edge.from,
      to: edge.to,
      ranked: edge.kind === "composite" || edge.kind === "generalization",
    });
  }
  for (const link of model.req_relations) {
    edges.push({ from: link.from, to: link.to, ranked: link.kind === "satisfy" });
  }
  const placed = layeredLayout(nodes, edges);

  const edgeLayer = el("g", { class: "edges" });
  svg.appendChild(edgeLayer);
  for (const edge of model.relations) {
    drawBlockEdge(edgeLayer, edge, placed);
  }
  for (const link of model.req_relations) {
    drawReqEdge(edgeLayer, link, placed);
  }

  const nodeLayer = el("g", { class: "nodes" });
  svg.appendChild(nodeLayer);
  for (const block of model.blocks) {
    const p = placed.get(block.id);
    if (!p) continue;
    const g = el("g", {
      class: `block origin-${block.origin}`,
      "data-id": block.id,
      transform: `translate(${p.x - p.width / 2},${p.y - p.height / 2})`,
    });
    const rect = el("rect", {
      width: String(p.width),
      height: String(p.height),
      rx: "4",
    });
    if (block.origin === "augmented") rect.setAttribute("stroke-dasharray", "5,4");
    g.appendChild(rect);
    const title = el("text", { x: String(p.width / 2), y: "16", "text-anchor": "middle", class: "name" });
    title.textContent = block.name;
    g.appendChild(title);
    block.operations.forEach((op, i) => {
      const line = el("text", { x: "8", y: String(30 + i * LINE_H), class: "operation" });
      line.textContent = `${op}()`;
      g.appendChild(line);
    });
    nodeLayer.appendChild(g);
  }

  for (const req of model.requirements) {
    const p = placed.get(req.id);
    if (!p) continue;
    const g = el("g", {
      class: "requirement",
      "data-id": req.id,
      transform: `translate(${p.x - p.width / 2},${p.y - p.height / 2})`,
    });
    g.appendChild(el("rect", { width: String(p.width), height: String(p.height), rx: "4" }));
    const title = el("text", { x: String(p.width / 2), y: "16", "text-anchor": "middle", class: "name" });
    title.textContent = `<<requirement>> ${req.name}`;
    g.appendChild(title);
    const note = el("g", { class: "note hidden" });
    req.texts.forEach((text, i) => {
      const line = el("text", { x: "4", y: String(p.height + 14 + i * LINE_H), class: "note-line" });
      line.textContent = text;
      note.appendChild(line);
    });
    g.appendChild(note);
    g.addEventListener("click", () => note.classList.toggle("hidden"));
    nodeLayer.appendChild(g);
  }

  fitViewBox(svg, [...placed.values()]);
}

function anchor(p: Placed, toward: Placed): { x: number; y: number } {
  if (toward.y > p.y) return { x: p.x, y: p.y + p.height / 2 };
  if (toward.y < p.y) return { x: p.x, y: p.y - p.height / 2 };
  return { x: p.x + (toward.x > p.x ? p.width / 2 : -p.width / 2), y: p.y };
}

function drawBlockEdge(layer: SVGGElement, edge: BlockEdge, placed: Map<string, Placed>): void {
  const from = placed.get(edge.from);
  const to = placed.get(edge.to);
  if (!from || !to) return;
  const a = anchor(from, to);
  const b = anchor(to, from);
  const line = el("line", {
    x1: String(b.x),
    y1: String(b.y),
    x2: String(a.x),
    y2: String(a.y),
    class: `edge kind-${edge.kind} origin-${edge.origin}`,
  });
  if (edge.origin === "augmented") line.setAttribute("stroke-dasharray", "5,4");
  if (edge.kind === "composite") line.setAttribute("marker-end", "url(#m-diamond)");
  if (edge.kind === "generalization") line.setAttribute("marker-end", "url(#m-triangle)");
  layer.appendChild(line);
  if (edge.kind === "port_connection" && edge.label) {
    const label = el("text", {
      x: String((a.x + b.x) / 2),
      y: String((a.y + b.y) / 2 - 4),
      "text-anchor": "middle",
      class: "edge-label",
    });
    label.textContent = edge.label;
    layer.appendChild(label);
  }
}

function drawReqEdge(layer: SVGGElement, link: ReqEdge, placed: Map<string, Placed>): void {
  const from = placed.get(link.from);
  const to = placed.get(link.to);
  if (!from || !to) return;
  const a = anchor(from, to);
  const b = anchor(to, from);
  const line = el("line", {
    x1: String(a.x),
    y1: String(a.y),
    x2: String(b.x),
    y2: String(b.y),
    class: `edge kind-${link.kind} origin-${link.origin}`,
    "stroke-dasharray": "5,4",
    "marker-end": "url(#m-arrow)",
  });
  layer.appendChild(line);
  const label = el("text", {
    x: String((a.x + b.x) / 2),
    y: String((a.y + b.y) / 2 - 4),
    "text-anchor": "middle",
    class: "edge-label",
  });
  label.textContent = `<<${link.kind}>>`;
  layer.appendChild(label);
}

function fitViewBox(svg: SVGSVGElement, placed: Placed[]): void {
  const xs = placed.flatMap((p) => [p.x - p.width / 2, p.x + p.width / 2]);
  const ys = placed.flatMap((p) => [p.y - p.height / 2, p.y + p.height / 2]);
  const minX = Math.min(...xs) - 30;
  const minY = Math.min(...ys) - 20;
  const width = Math.max(...xs) - minX + 30;
  const height = Math.max(...ys) - minY + 120;
  svg.setAttribute("viewBox", `${minX} ${minY} ${width} ${height}`);
}
