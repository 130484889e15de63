"""Exception types shared across the pipeline."""

from __future__ import annotations


class SysmlForgeError(Exception):
    """Base class for all pipeline errors."""


class CorpusError(SysmlForgeError):
    """Raised when a corpus cannot be assembled from the given inputs."""


class UnknownDocumentError(SysmlForgeError):
    """Raised when a document id does not exist in the corpus."""

    def __init__(self, document_id: str, known: list[str]):
        self.document_id = document_id
        self.known = known
        super().__init__(f"unknown document {document_id!r}; corpus has: {', '.join(known) or '(none)'}")


class UnknownParentError(SysmlForgeError):
    """Raised when a parent phrase does not name any block in the model."""

    def __init__(self, parent: str, candidates: list[str]):
        self.parent = parent
        self.candidates = candidates
        hint = f"; closest matches: {', '.join(candidates)}" if candidates else ""
        super().__init__(f"unknown parent phrase {parent!r}{hint}")


class WordNetError(SysmlForgeError):
    """Raised when the lexical database cannot be located or parsed."""
