"""Informativeness evaluation of transcripts via summarization and n-gram divergence."""

from .artex import (
    ArtexScores,
    SentenceTermMatrix,
    SummaryResult,
    build_matrix,
    render_summary,
    score_sentences,
    summarize,
    summary_document,
    summary_size,
)
from .config import RunConfig
from .errors import (
    BoundaryOutOfRange,
    EmptyDocument,
    EmptyList,
    EmptyReference,
    EmptySource,
    InvalidSpec,
    ManifestError,
    MismatchedTokenCount,
    NonPositiveReference,
    TransinformError,
    ZeroContent,
)
from .fresa import (
    DivergenceMode,
    FresaScore,
    SmoothingConfig,
    fresa_score,
    js_divergence,
    kl_modified,
    score_dump,
    smoothed_prob,
)
from .protocol import (
    Aggregate,
    Aggregate,
    CorpusManifest,
    Exclusion,
    LossRow,
    ScenarioReport,
    VideoEntry,
    aggregate,
    compute_losses,
    corpus_stats,
    diff_reports,
    emit_report,
    format_loss_table,
    info_loss,
    load_corpus,
    load_manifest,
    run_protocol,
    run_scenario1,
    run_scenario2,
    validate_manifest,
)
from .segment import (
    BoundaryEval,
    BoundarySet,
    apply_boundaries,
    evaluate_boundaries,
    read_boundary_file,
    segment_by_punctuation,
    segment_fixed_window,
    write_boundary_file,
)
from .text import (
    Document,
    Language,
    NgramDistribution,
    NgramKind,
    Sentence,
    Token,
    content_tokens,
    document_from_words,
    extract_ngrams,
    stopwords,
    tokenize,
)
from .wer import AlignmentResult, NoiseSpec, align, inject_noise

__version__ = "0.1.0"

__all__ = [
    "AlignmentResult",
    "Aggregate",
    "ArtexScores",
    "BoundaryEval",
    "BoundaryOutOfRange",
    "BoundarySet",
    "CorpusManifest",
    "DivergenceMode",
    "Document",
    "EmptyDocument",
    "EmptyList",
    "EmptyReference",
    "EmptySource",
    "Exclusion",
    "FresaScore",
    "InvalidSpec",
    "Language",
    "LossRow",
    "ManifestError",
    "MismatchedTokenCount",
    "NgramDistribution",
    "NgramKind",
    "NoiseSpec",
    "NonPositiveReference",
    "RunConfig",
    "ScenarioReport",
    "Sentence",
    "SentenceTermMatrix",
    "SmoothingConfig",
    "SummaryResult",
    "Token",
    "TransinformError",
    "VideoEntry",
    "ZeroContent",
    "aggregate",
    "align",
    "apply_boundaries",
    "build_matrix",
    "compute_losses",
    "content_tokens",
    "corpus_stats",
    "diff_reports",
    "document_from_words",
    "emit_report",
    "evaluate_boundaries",
    "extract_ngrams",
    "format_loss_table",
    "fresa_score",
    "info_loss",
    "inject_noise",
    "js_divergence",
    "kl_modified",
    "load_corpus",
    "load_manifest",
    "read_boundary_file",
    "render_summary",
    "run_protocol",
    "run_scenario1",
    "run_scenario2",
    "score_dump",
    "score_sentences",
    "segment_by_punctuation",
    "segment_fixed_window",
    "smoothed_prob",
    "stopwords",
    "summarize",
    "summary_document",
    "summary_size",
    "tokenize",
    "validate_manifest",
    "write_boundary_file",
]
