"""Serialization of diagram models: PlantUML source and canonical JSON.

The PlantUML grammar is frozen so golden-file tests stay stable:

* block declaration: ``class "<name>" as <id> <<block>>`` (operations one
  per line inside braces); requirements use ``<<requirement>>`` with their
  texts in an attached note
* edges: composite ``A *-- B``, generalization ``A <|-- B``, reference
  ``A -- B``, port connection ``A -- B : label``, satisfy
  ``B ..> R : <<satisfy>>``, trace ``R1 ..> R2 : <<trace>>``; augmented
  block relations swap ``--`` for the dotted ``..``

JSON output is canonical: keys sorted, arrays in model order, floats at
nine significant digits; identical models serialize byte-identically.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .sysml import (
    COMPOSITE,
    GENERALIZATION,
    PORT_CONNECTION,
    REFERENCE,
    Block,
    BlockRelation,
    DiagramModel,
    ORIGIN_AUGMENTED,
    Requirement,
    ReqRelation,
)


@dataclass(frozen=True)
class PumlDocument:
    diagram_type: str
    lines: tuple[str, ...]

    @property
    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


_EDGE_TOKENS = {
    (COMPOSITE, False): "*--",
    (COMPOSITE, True): "*..",
    (GENERALIZATION, False): "<|--",
    (GENERALIZATION, True): "<|..",
    (REFERENCE, False): "--",
    (REFERENCE, True): "..",
    (PORT_CONNECTION, False): "--",
    (PORT_CONNECTION, True): "..",
}


def emit_plantuml(model: DiagramModel) -> PumlDocument:
    """Render a diagram model as PlantUML class-diagram source."""
    lines: list[str] = ["@startuml"]
    for block in sorted(model.blocks, key=lambda b: (b.name, b.id)):
        decl = f'class "{block.name}" as {block.id} <<block>>'
        if block.operations:
            lines.append(decl + " {")
            lines.extend(f"  {op}()" for op in block.operations)
            lines.append("}")
        else:
            lines.append(decl)
    for req in sorted(model.requirements, key=lambda r: (r.name, r.id)):
        lines.append(f'class "{req.name}" as {req.id} <<requirement>>')
        lines.append(f"note right of {req.id}")
        lines.extend(f"  {text}" for text in req.texts)
        lines.append("end note")

    edge_lines: list[str] = []
    for edge in model.relations:
        token = _EDGE_TOKENS[(edge.kind, edge.origin == ORIGIN_AUGMENTED)]
        line = f"{edge.whole_or_general} {token} {edge.part_or_special}"
        if edge.kind == PORT_CONNECTION and edge.label:
            line += f" : {edge.label}"
        edge_lines.append(line)
    for link in model.req_relations:
        edge_lines.append(f"{link.from_id} ..> {link.to_id} : <<{link.kind}>>")
    lines.extend(sorted(edge_lines))
    lines.append("@enduml")
    return PumlDocument(diagram_type=model.diagram_type, lines=tuple(lines))


# -- canonical JSON -----------------------------------------------------------


def format_float(value: float) -> str:
    """Fixed-point text with nine significant digits (1.8 -> 1.80000000)."""
    if value == 0:
        return "0.00000000"
    magnitude = math.floor(math.log10(abs(value)))
    decimals = max(8 - magnitude, 0)
    return f"{value:.{decimals}f}"


def _canonical(obj, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = ",\n".join(f"{inner}{_canonical(v, indent + 1)}" for v in obj)
        return f"[\n{items}\n{pad}]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f"{inner}{json.dumps(str(k))}: {_canonical(obj[k], indent + 1)}" for k in sorted(obj)
        )
        return f"{{\n{items}\n{pad}}}"
    raise TypeError(f"cannot canonicalize {type(obj).__name__}")


def canonical_json(obj) -> str:
    return _canonical(obj, 0) + "\n"


def model_to_dict(model: DiagramModel) -> dict:
    return {
        "type": model.diagram_type,
        "parent": model.parent,
        "blocks": [
            {
                "id": b.id,
                "name": b.name,
                "operations": list(b.operations),
                "origin": b.origin,
            }
            for b in model.blocks
        ],
        "relations": [
            {
                "kind": e.kind,
                "from": e.whole_or_general,
                "to": e.part_or_special,
                "origin": e.origin,
                "label": e.label,
                "source": e.source_index,
            }
            for e in model.relations
        ],
        "requirements": [
            {
                "id": r.id,
                "name": r.name,
                "texts": list(r.texts),
                "satisfied_by": r.satisfied_by,
            }
            for r in model.requirements
        ],
        "req_relations": [
            {"kind": l.kind, "from": l.from_id, "to": l.to_id, "origin": l.origin}
            for l in model.req_relations
        ],
        "metadata": model.metadata,
    }


def emit_model_json(model: DiagramModel) -> str:
    """Canonical JSON text of the model; byte-identical across runs."""
    return canonical_json(model_to_dict(model))


def model_from_dict(data: dict) -> DiagramModel:
    return DiagramModel(
        diagram_type=data["type"],
        blocks=tuple(
            Block(
                id=b["id"],
                name=b["name"],
                operations=tuple(b["operations"]),
                origin=b["origin"],
            )
            for b in data["blocks"]
        ),
        relations=tuple(
            BlockRelation(
                kind=e["kind"],
                whole_or_general=e["from"],
                part_or_special=e["to"],
                origin=e["origin"],
                label=e["label"],
                source_index=e["source"],
            )
            for e in data["relations"]
        ),
        requirements=tuple(
            Requirement(
                id=r["id"],
                name=r["name"],
                texts=tuple(r["texts"]),
                satisfied_by=r["satisfied_by"],
            )
            for r in data["requirements"]
        ),
        req_relations=tuple(
            ReqRelation(kind=l["kind"], from_id=l["from"], to_id=l["to"], origin=l["origin"])
            for l in data["req_relations"]
        ),
        parent=data["parent"],
        metadata=data["metadata"],
    )


def parse_model_json(text: str) -> DiagramModel:
    return model_from_dict(json.loads(text))
