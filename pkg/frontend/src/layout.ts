// Layered layout for the diagram graph: hierarchy edges rank the nodes
// (parents above children), barycenter sweeps order each layer, and
// variable-width nodes pack around the vertical center line.

export interface LayoutNode {
  id: string;
  width: number;
  height: number;
}

export interface LayoutEdge {
  from: string;
  to: string;
  ranked: boolean; // contributes to layering (hierarchy/satisfy edges)
}

export interface Placed {
  id: string;
  x: number; // center
  y: number; // center
  width: number;
  height: number;
}

const ROW_GAP = 70;
const COL_GAP = 28;

export function layeredLayout(nodes: LayoutNode[], edges: LayoutEdge[]): Map<string, Placed> {
  const ids = nodes.map((n) => n.id);
  const byId = new Map(nodes.map((n) => [n.id, n]));
  const parents = new Map<string, string[]>();
  const children = new Map<string, string[]>();
  for (const id of ids) {
    parents.set(id, []);
    children.set(id, []);
  }
  for (const e of edges) {
    if (!e.ranked || !byId.has(e.from) || !byId.has(e.to) || e.from === e.to) continue;
    parents.get(e.to)!.push(e.from);
    children.get(e.from)!.push(e.to);
  }

  // longest-path ranks; the hierarchy is acyclic by construction but a
  // visit guard keeps malformed input from looping
  const rank = new Map<string, number>();
  const rankOf = (id: string, trail: Set<string>): number => {
    const known = rank.get(id);
    if (known !== undefined) return known;
    if (trail.has(id)) return 0;
    trail.add(id);
    const above = parents.get(id)!.filter((p) => !trail.has(p) || rank.has(p));
    const value = above.length
      ? 1 + Math.max(...above.map((p) => rankOf(p, trail)))
      : 0;
    trail.delete(id);
    rank.set(id, value);
    return value;
  };
  for (const id of ids) rankOf(id, new Set());

  const layers: string[][] = [];
  for (const id of ids) {
    const r = rank.get(id)!;
    while (layers.length <= r) layers.push([]);
    layers[r].push(id);
  }

  // barycenter ordering against the neighbouring layers
  const neighbours = new Map<string, string[]>();
  for (const id of ids) neighbours.set(id, []);
  for (const e of edges) {
    if (!byId.has(e.from) || !byId.has(e.to) || e.from === e.to) continue;
    neighbours.get(e.from)!.push(e.to);
    neighbours.get(e.to)!.push(e.from);
  }
  const position = new Map<string, number>();
  layers.forEach((layer) => layer.forEach((id, i) => position.set(id, i)));
  for (let sweep = 0; sweep < 4; sweep++) {
    for (const layer of layers) {
      layer.sort((a, b) => {
        const center = (id: string) => {
          const near = neighbours.get(id)!;
          if (!near.length) return position.get(id)!;
          return near.reduce((sum, n) => sum + position.get(n)!, 0) / near.length;
        };
        return center(a) - center(b) || a.localeCompare(b);
      });
      layer.forEach((id, i) => position.set(id, i));
    }
  }

  const placed = new Map<string, Placed>();
  let y = 0;
  for (const layer of layers) {
    const rowHeight = Math.max(...layer.map((id) => byId.get(id)!.height), 0);
    const total = layer.reduce((sum, id) => sum + byId.get(id)!.width, 0) + COL_GAP * (layer.length - 1);
    let x = -total / 2;
    for (const id of layer) {
      const node = byId.get(id)!;
      placed.set(id, {
        id,
        x: x + node.width / 2,
        y: y + rowHeight / 2,
        width: node.width,
        height: node.height,
      });
      x += node.width + COL_GAP;
    }
    y += rowHeight + ROW_GAP;
  }
  return placed;
}
