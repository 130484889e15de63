"""sysmlforge: compile plain-text corpora into SysML diagrams.

The pipeline turns a corpus of unstructured text documents into Block
Definition, Internal Block and Requirement diagrams.  It extracts noun
phrases and relation tuples from each document, scores them against the
corpus, maps the survivors onto SysML model elements and serialises the
result as PlantUML source plus a canonical JSON model.
"""

__version__ = "0.1.0"
