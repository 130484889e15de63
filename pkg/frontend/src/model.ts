// Shapes of the diagram model JSON served by the pipeline. The UI never
// derives pipeline results itself; everything displayed comes from these.

export type Origin = "extracted" | "augmented";

export interface BlockNode {
  id: string;
  name: string;
  operations: string[];
  origin: Origin;
}

export interface BlockEdge {
  kind: "composite" | "generalization" | "reference" | "port_connection";
  from: string;
  to: string;
  origin: Origin;
  label: string | null;
  source: number | null;
}

export interface RequirementNode {
  id: string;
  name: string;
  texts: string[];
  satisfied_by: string;
}

export interface ReqEdge {
  kind: "trace" | "satisfy";
  from: string;
  to: string;
  origin: Origin;
}

export interface DiagramModel {
  type: "BDD" | "IBD" | "REQ";
  parent: string | null;
  blocks: BlockNode[];
  relations: BlockEdge[];
  requirements: RequirementNode[];
  req_relations: ReqEdge[];
  metadata: Record<string, unknown>;
}

export interface DiagramResponse {
  model: DiagramModel;
  puml: string;
  warnings: string[];
}

export interface DocumentInfo {
  id: string;
  name: string;
  word_count: number;
}
