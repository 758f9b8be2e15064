"""Sentence segmentation of transcripts and boundary-hypothesis scoring.

ASR output is an unpunctuated token stream, so sentence boundaries must be
hypothesized before summarization. Three interchangeable strategies feed the
pipeline: punctuation splitting (for human references), fixed-size token
windows, and externally produced boundary files (e.g. from a neural
segmenter). Hypothesized boundaries are scored against reference boundaries
with precision/recall/F1 over exact positions; the mandatory final boundary
participates in the counts.
"""

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import BoundaryOutOfRange, EmptyDocument, MismatchedTokenCount
from .text import Document, Language, Sentence, Token, tokenize

_TERMINAL_RE = re.compile(r"[.?!…]+$")

DEFAULT_WINDOW = 20


@dataclass(frozen=True)
class BoundarySet:
    """Sentence-end positions in a token stream of known length.

    A boundary after token index i closes the sentence that contains it. The
    final position token_count - 1 is always present: a document ends a
    sentence. Construction normalizes it in.
    """

    positions: frozenset[int]
    token_count: int

    def __post_init__(self):
        if self.token_count < 1:
            raise BoundaryOutOfRange("token_count must be at least 1")
        for pos in self.positions:
            if not 0 <= pos <= self.token_count - 1:
                raise BoundaryOutOfRange(
                    f"boundary {pos} outside [0, {self.token_count - 1}]"
                )
        object.__setattr__(
            self, "positions", frozenset(self.positions) | {self.token_count - 1}
        )

    def sorted_positions(self) -> list[int]:
        return sorted(self.positions)


@dataclass(frozen=True)
class BoundaryEval:
    precision: float
    recall: float
    f1: float


# ---------------------------------------------------------------------------
# Abbreviation guard
# ---------------------------------------------------------------------------

_abbrev_cache: dict[str, frozenset[str]] = {}


def _abbreviations(language: Language) -> frozenset[str]:
    key = language.value
    if key not in _abbrev_cache:
        with resources.as_file(
            resources.files("transinform").joinpath(f"data/abbrev/{key}.txt")
        ) as path:
            words = []
            for line in path.read_text(encoding="utf-8").splitlines():
                line = line.strip()
                if line and not line.startswith("#"):
                    words.append(line.lower())
        _abbrev_cache[key] = frozenset(words)
    return _abbrev_cache[key]


# ---------------------------------------------------------------------------
# Segmenters
# ---------------------------------------------------------------------------


def segment_by_punctuation(
    raw: str,
    language: Language,
    *,
    doc_id: str = "doc",
    system: str = "reference",
    stemming: bool = False,
) -> Document:
    """Split punctuated text into sentences at ., ?, ! or ellipsis.

    A period does not close a sentence when the word carrying it is on the
    abbreviation list for the language ("M. Dupont" stays together).

    Raises EmptyDocument if no tokens survive.
    """
    language = Language(language)
    abbrevs = _abbreviations(language)

    chunks = raw.split()
    sentences: list[Sentence] = []
    current: list[str] = []
    for chunk in chunks:
        current.append(chunk)
        mark = _TERMINAL_RE.search(chunk)
        if mark is None:
            continue
        if mark.group().startswith(".") and chunk.lower() in abbrevs:
            continue
        tokens = tokenize(" ".join(current), language, stemming=stemming)
        if tokens:
            sentences.append(Sentence(tokens=tuple(tokens)))
        current = []
    if current:
        tokens = tokenize(" ".join(current), language, stemming=stemming)
        if tokens:
            sentences.append(Sentence(tokens=tuple(tokens)))
    if not sentences:
        raise EmptyDocument("no tokens survived punctuation segmentation")
    return Document(id=doc_id, language=language, system=system, sentences=tuple(sentences))


def segment_fixed_window(
    tokens: list[Token],
    window_w: int = DEFAULT_WINDOW,
    *,
    doc_id: str = "doc",
    language: Language = Language.FR,
    system: str = "unknown",
) -> Document:
    """Chop a token stream into sentences of window_w tokens (last may be shorter)."""
    if not tokens:
        raise EmptyDocument("cannot segment an empty token stream")
    if window_w < 1:
        raise ValueError("window_w must be at least 1")
    sentences = tuple(
        Sentence(tokens=tuple(tokens[i : i + window_w]))
        for i in range(0, len(tokens), window_w)
    )
    return Document(id=doc_id, language=Language(language), system=system, sentences=sentences)


def apply_boundaries(
    tokens: list[Token],
    boundaries: BoundarySet,
    *,
    doc_id: str = "doc",
    language: Language = Language.FR,
    system: str = "unknown",
) -> Document:
    """Split a token stream into sentences exactly after each boundary position."""
    if boundaries.token_count != len(tokens):
        raise BoundaryOutOfRange(
            f"boundary set describes {boundaries.token_count} tokens, got {len(tokens)}"
        )
    sentences = []
    start = 0
    for pos in boundaries.sorted_positions():
        sentences.append(Sentence(tokens=tuple(tokens[start : pos + 1])))
        start = pos + 1
    return Document(
        id=doc_id, language=Language(language), system=system, sentences=tuple(sentences)
    )


def evaluate_boundaries(reference: BoundarySet, hypothesis: BoundarySet) -> BoundaryEval:
    """Precision/recall/F1 of hypothesized sentence ends against the reference."""
    if reference.token_count != hypothesis.token_count:
        raise MismatchedTokenCount(
            f"reference covers {reference.token_count} tokens, "
            f"hypothesis {hypothesis.token_count}"
        )
    shared = len(reference.positions & hypothesis.positions)
    precision = shared / len(hypothesis.positions)
    recall = shared / len(reference.positions)
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    return BoundaryEval(precision=precision, recall=recall, f1=f1)


# ---------------------------------------------------------------------------
# Boundary files: "#tokens=<N>" header, then ascending token indices
# ---------------------------------------------------------------------------


def read_boundary_file(path: Path) -> BoundarySet:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].startswith("#tokens="):
        raise BoundaryOutOfRange(f"{path}: missing '#tokens=<N>' header")
    try:
        token_count = int(lines[0].split("=", 1)[1])
    except ValueError:
        raise BoundaryOutOfRange(f"{path}: bad token count in header") from None
    positions = []
    for line in lines[1:]:
        line = line.strip()
        if not line:
            continue
        pos = int(line)
        if positions and pos <= positions[-1]:
            raise BoundaryOutOfRange(f"{path}: positions must be ascending")
        positions.append(pos)
    return BoundarySet(positions=frozenset(positions), token_count=token_count)


def write_boundary_file(path: Path, boundaries: BoundarySet) -> None:
    lines = [f"#tokens={boundaries.token_count}"]
    lines += [str(p) for p in boundaries.sorted_positions()]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
