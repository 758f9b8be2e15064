"""Extractive summarizer scoring sentences against average lexical and topic vectors.

Each document becomes a sentence-by-term frequency matrix over content terms.
Sentence i is scored by (1/(N*P)) * (row_i . VL) * VT_i where VL_j is the
column average (informativeness of term j across the document) and VT_i the
row average (how much of the vocabulary sentence i touches). The summary
keeps the top-scoring sentences in source order at compression ratio rho.

Scoring uses plain left-to-right summation so that results are bit-for-bit
reproducible across runs and platforms.
"""

import math
from dataclasses import dataclass

from .errors import ZeroContent
from .text import Document

DEFAULT_RATIO = 0.35


@dataclass(frozen=True)
class SentenceTermMatrix:
    """P x N term-frequency matrix over the document's distinct content terms."""

    weights: tuple[tuple[float, ...], ...]
    terms: tuple[str, ...]
    empty_rows: frozenset[int]

    @property
    def sentence_count(self) -> int:
        return len(self.weights)

    @property
    def vocabulary_size(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class ArtexScores:
    lexical: tuple[float, ...]
    topic: tuple[float, ...]
    sentence_scores: tuple[float, ...]


@dataclass(frozen=True)
class SummaryResult:
    selected: tuple[int, ...]
    scores: ArtexScores
    rho: float

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.selected, self.selected[1:])):
            raise ValueError("selected indices must be strictly ascending")


def build_matrix(doc: Document) -> SentenceTermMatrix:
    """Per-sentence term frequencies over distinct content terms.

    Terms are ordered by first occurrence. Sentences left empty by stopword
    filtering keep an all-zero row (and are flagged) so row indices stay
    aligned with the document.

    Raises ZeroContent when the document has no content terms at all.
    """
    term_index: dict[str, int] = {}
    rows_as_counts: list[dict[int, int]] = []
    empty_rows = []
    for i, sentence in enumerate(doc.sentences):
        row: dict[int, int] = {}
        for token in sentence.tokens:
            if token.is_stopword:
                continue
            j = term_index.setdefault(token.normalized, len(term_index))
            row[j] = row.get(j, 0) + 1
        if not row:
            empty_rows.append(i)
        rows_as_counts.append(row)
    if not term_index:
        raise ZeroContent(f"document {doc.id!r} ({doc.system}) has no content terms")

    n = len(term_index)
    weights = tuple(
        tuple(float(row.get(j, 0)) for j in range(n)) for row in rows_as_counts
    )
    terms = tuple(sorted(term_index, key=term_index.get))
    return SentenceTermMatrix(weights=weights, terms=terms, empty_rows=frozenset(empty_rows))


def score_sentences(matrix: SentenceTermMatrix) -> ArtexScores:
    """Evaluate the lexical vector, topic vector and per-sentence scores."""
    weights = matrix.weights
    p = matrix.sentence_count
    n = matrix.vocabulary_size
    if p < 1 or n < 1:
        raise ValueError("matrix must have at least one sentence and one term")

    lexical = []
    for j in range(n):
        column_sum = 0.0
        for i in range(p):
            column_sum += weights[i][j]
        lexical.append(column_sum / p)

    topic = []
    for i in range(p):
        row_sum = 0.0
        for j in range(n):
            row_sum += weights[i][j]
        topic.append(row_sum / n)

    scores = []
    for i in range(p):
        dot = 0.0
        for j in range(n):
            dot += weights[i][j] * lexical[j]
        scores.append(dot * topic[i] / (n * p))

    return ArtexScores(
        lexical=tuple(lexical), topic=tuple(topic), sentence_scores=tuple(scores)
    )


def summary_size(rho: float, sentence_count: int) -> int:
    """Number of sentences kept at compression ratio rho: max(1, ceil(rho*P))."""
    if not 0.0 < rho <= 1.0:
        raise ValueError(f"rho must be in (0, 1], got {rho}")
    if sentence_count < 1:
        raise ValueError(f"sentence_count must be positive, got {sentence_count}")
    return max(1, math.ceil(rho * sentence_count))


def summarize(doc: Document, rho: float = DEFAULT_RATIO) -> SummaryResult:
    """Select the max(1, ceil(rho*P)) best-scoring sentences in source order.

    Ties go to the earlier sentence. The rendered summary is the
    concatenation of the original, unfiltered sentences.
    """
    matrix = build_matrix(doc)
    scores = score_sentences(matrix)
    k = summary_size(rho, matrix.sentence_count)
    ranked = sorted(
        range(matrix.sentence_count), key=lambda i: (-scores.sentence_scores[i], i)
    )
    selected = tuple(sorted(ranked[:k]))
    return SummaryResult(selected=selected, scores=scores, rho=rho)


def summary_document(doc: Document, result: SummaryResult) -> Document:
    """The selected sentences as a Document, preprocessing preserved."""
    sentences = tuple(doc.sentences[i] for i in result.selected)
    return Document(
        id=doc.id, language=doc.language, system=doc.system, sentences=sentences
    )


def render_summary(doc: Document, result: SummaryResult) -> str:
    """Original surface text of the selected sentences, one per line."""
    return "\n".join(doc.sentences[i].surface_text() for i in result.selected)
