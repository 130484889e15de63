"""HTTP facade over the pipeline for the interactive UI.

The server holds an immutable snapshot per corpus (the startup corpus plus
any uploaded ones) and reuses each snapshot's extraction cache, so a
diagram request with new thresholds only redoes selection and mapping.
Identical request bodies against an unchanged corpus return identical
responses.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from fastapi import FastAPI, HTTPException, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from .corpus import Hyperparameters, corpus_advisory, demo_corpus_dir, load_corpus, load_corpus_dir
from .errors import SysmlForgeError, UnknownDocumentError, UnknownParentError
from .pipeline import Pipeline
from .render import emit_plantuml, model_to_dict
from .wordnet import WordNetDB

DEFAULT_CORPUS_ID = "default"


class HyperparametersIn(BaseModel):
    sigma_tfidf: float = 0.0
    sigma_relationship: float = 0.5
    sigma_p: float = 0.6
    sigma_rel_difference: float = 0.5
    l_phrase: int = 3


class DiagramRequest(BaseModel):
    corpus_id: str = DEFAULT_CORPUS_ID
    document_id: str
    diagram_type: str
    parent_phrase: str | None = None
    hyperparameters: HyperparametersIn = HyperparametersIn()


def _validated(params: HyperparametersIn) -> Hyperparameters:
    try:
        return Hyperparameters(**params.model_dump())
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def create_app(
    corpus_dir: str | Path | None = None,
    wordnet_dir: str | Path | None = None,
    cache_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="sysmlforge", version="0.1.0", openapi_url="/openapi.json")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    db = WordNetDB(wordnet_dir)
    corpus = load_corpus_dir(corpus_dir if corpus_dir else demo_corpus_dir())
    pipelines: dict[str, Pipeline] = {
        DEFAULT_CORPUS_ID: Pipeline(corpus, db, cache_dir=cache_dir)
    }
    app.state.pipelines = pipelines

    def pipeline_of(corpus_id: str) -> Pipeline:
        pipeline = pipelines.get(corpus_id)
        if pipeline is None:
            raise HTTPException(status_code=404, detail=f"unknown corpus {corpus_id!r}")
        return pipeline

    @app.get("/health", response_class=PlainTextResponse)
    def health() -> str:
        return "ok"

    @app.get("/spec")
    def spec() -> JSONResponse:
        return JSONResponse(app.openapi())

    @app.get("/corpora")
    def list_corpora() -> list[dict]:
        return [
            {"corpus_id": cid, "documents": len(p.corpus.documents)}
            for cid, p in sorted(pipelines.items())
        ]

    @app.post("/corpora")
    async def upload_corpus(files: list[UploadFile]) -> dict:
        pairs = []
        for upload in files:
            text = (await upload.read()).decode("utf-8", errors="replace")
            name = Path(upload.filename or "document").stem
            pairs.append((name, text))
        try:
            uploaded = load_corpus(pairs)
        except SysmlForgeError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        digest = hashlib.sha256(
            "\x00".join(f"{d.id}\x01{d.text}" for d in uploaded.documents).encode("utf-8")
        ).hexdigest()
        corpus_id = f"c{digest[:12]}"
        pipelines.setdefault(corpus_id, Pipeline(uploaded, db, cache_dir=cache_dir))
        return {
            "corpus_id": corpus_id,
            "documents": uploaded.manifest(),
            "warnings": corpus_advisory(uploaded),
        }

    @app.get("/corpora/{corpus_id}/documents")
    def documents(corpus_id: str) -> list[dict]:
        return pipeline_of(corpus_id).corpus.manifest()

    @app.get("/corpora/{corpus_id}/documents/{document_id}/phrases")
    def phrases(
        corpus_id: str,
        document_id: str,
        sigma_tfidf: float = 0.0,
        sigma_relationship: float = 0.5,
        sigma_p: float = 0.6,
        sigma_rel_difference: float = 0.5,
        l_phrase: int = 3,
    ) -> dict:
        pipeline = pipeline_of(corpus_id)
        hp = _validated(
            HyperparametersIn(
                sigma_tfidf=sigma_tfidf,
                sigma_relationship=sigma_relationship,
                sigma_p=sigma_p,
                sigma_rel_difference=sigma_rel_difference,
                l_phrase=l_phrase,
            )
        )
        try:
            result = pipeline.run_document(document_id, hp, ())
        except UnknownDocumentError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        return {
            "document_id": document_id,
            "phrases": [
                {
                    "phrase": sp.phrase.name,
                    "lemmas": list(sp.phrase.lemmas),
                    "avg_w": sp.avg_w,
                    "avg_h": sp.avg_h,
                    "count_norm": sp.count_norm,
                    "lambda": sp.score,
                    "is_key": sp.phrase in result.key_phrases,
                }
                for sp in result.scored_phrases
            ],
        }

    @app.post("/diagrams")
    def diagrams(request: DiagramRequest) -> dict:
        pipeline = pipeline_of(request.corpus_id)
        hp = _validated(request.hyperparameters)
        diagram_type = request.diagram_type.lower()
        if diagram_type not in ("bdd", "ibd", "req"):
            raise HTTPException(status_code=400, detail=f"unknown diagram type {request.diagram_type!r}")
        try:
            result = pipeline.run_document(
                request.document_id, hp, (diagram_type,), parent_phrase=request.parent_phrase
            )
        except UnknownDocumentError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except UnknownParentError as exc:
            raise HTTPException(
                status_code=422,
                detail={"message": str(exc), "candidates": exc.candidates},
            )
        model = result.models[diagram_type]
        return {
            "model": model_to_dict(model),
            "puml": emit_plantuml(model).text,
            "warnings": result.warnings,
        }

    return app
