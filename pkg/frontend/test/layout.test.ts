import { describe, expect, it } from "vitest";

import { layeredLayout, type LayoutEdge, type LayoutNode } from "../src/layout.js";

function node(id: string): LayoutNode {
  return { id, width: 100, height: 40 };
}

function edge(from: string, to: string, ranked = true): LayoutEdge {
  return { from, to, ranked };
}

describe("layered layout", () => {
  it("places children strictly below their parents", () => {
    const placed = layeredLayout(
      [node("root"), node("a"), node("b"), node("leaf")],
      [edge("root", "a"), edge("root", "b"), edge("a", "leaf")],
    );
    expect(placed.get("a")!.y).toBeGreaterThan(placed.get("root")!.y);
    expect(placed.get("b")!.y).toBeGreaterThan(placed.get("root")!.y);
    expect(placed.get("leaf")!.y).toBeGreaterThan(placed.get("a")!.y);
  });

  it("uses the longest path when a node has parents on different levels", () => {
    const placed = layeredLayout(
      [node("top"), node("mid"), node("deep")],
      [edge("top", "mid"), edge("mid", "deep"), edge("top", "deep")],
    );
    expect(placed.get("deep")!.y).toBeGreaterThan(placed.get("mid")!.y);
  });

  it("ignores unranked edges for layering", () => {
    const placed = layeredLayout(
      [node("a"), node("b")],
      [edge("a", "b", false)],
    );
    expect(placed.get("a")!.y).toBe(placed.get("b")!.y);
  });

  it("never overlaps nodes within a layer", () => {
    const nodes = ["a", "b", "c", "d", "e"].map(node);
    const placed = layeredLayout(nodes, []);
    const spans = [...placed.values()]
      .map((p) => [p.x - p.width / 2, p.x + p.width / 2])
      .sort((u, v) => u[0] - v[0]);
    for (let i = 1; i < spans.length; i++) {
      expect(spans[i][0]).toBeGreaterThanOrEqual(spans[i - 1][1]);
    }
  });

  it("is deterministic and finite", () => {
    const nodes = ["n1", "n2", "n3", "n4"].map(node);
    const edges = [edge("n1", "n2"), edge("n1", "n3"), edge("n3", "n4"), edge("n2", "n4", false)];
    const one = layeredLayout(nodes, edges);
    const two = layeredLayout(nodes, edges);
    for (const id of one.keys()) {
      expect(one.get(id)).toEqual(two.get(id));
      expect(Number.isFinite(one.get(id)!.x)).toBe(true);
      expect(Number.isFinite(one.get(id)!.y)).toBe(true);
    }
  });

  it("survives self references and unknown endpoints", () => {
    const placed = layeredLayout([node("a")], [edge("a", "a"), edge("a", "ghost")]);
    expect(placed.get("a")).toBeDefined();
  });
});
