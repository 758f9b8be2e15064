"""Tokenization, stopword filtering and n-gram extraction for French and English.

The preprocessing contract is deliberately small and reproducible: split on
Unicode whitespace, strip punctuation from chunk edges, split French clitic
apostrophes, lowercase and NFC-normalize. Informativeness scores are only
comparable between runs that used the same stopword list version (see
``data/stopwords``).
"""

import os
import unicodedata
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import EmptyDocument, ZeroContent

# Environment override for the stopword list directory.
STOPWORDS_DIR_ENV = "TRANSINFORM_STOPWORDS_DIR"

# Sentence-start marker used when unigrams are folded into the SU4
# distribution. Contains a space, so it can never collide with a real token
# (tokens are whitespace-split).
SU4_START = "<s >"

# Maximum number of intervening tokens in a skip-bigram pair.
SU4_MAX_GAP = 4


class Language(str, Enum):
    FR = "fr"
    EN = "en"


class NgramKind(Enum):
    UNIGRAM = "unigram"
    BIGRAM = "bigram"
    SKIP_BIGRAM_SU4 = "su4"


@dataclass(frozen=True)
class Token:
    """One surface token with its normalized form and stopword flag."""

    surface: str
    normalized: str
    is_stopword: bool

    def __post_init__(self):
        if not self.normalized or any(c.isspace() for c in self.normalized):
            raise ValueError(f"invalid normalized form {self.normalized!r}")


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]

    def __post_init__(self):
        if not self.tokens:
            raise ValueError("a sentence needs at least one token")

    def surface_text(self) -> str:
        return " ".join(t.surface for t in self.tokens)


@dataclass(frozen=True)
class Document:
    """A sentence-segmented transcript with provenance metadata."""

    id: str
    language: Language
    system: str
    sentences: tuple[Sentence, ...]

    def __post_init__(self):
        if not self.sentences:
            raise ValueError("a document needs at least one sentence")

    @property
    def token_count(self) -> int:
        return sum(len(s.tokens) for s in self.sentences)

    def all_tokens(self) -> list[Token]:
        return [t for s in self.sentences for t in s.tokens]


@dataclass(frozen=True)
class NgramDistribution:
    """Counts over content-token n-grams of one kind."""

    kind: NgramKind
    counts: dict[tuple[str, ...], int]
    total: int

    def __post_init__(self):
        if self.total != sum(self.counts.values()):
            raise ValueError("total does not match the sum of counts")
        arity = 1 if self.kind is NgramKind.UNIGRAM else 2
        for key, count in self.counts.items():
            if len(key) != arity:
                raise ValueError(f"key {key!r} has wrong arity for {self.kind}")
            if count < 0:
                raise ValueError(f"negative count for {key!r}")

    @classmethod
    def from_counts(cls, kind: NgramKind, counts: dict[tuple[str, ...], int]) -> "NgramDistribution":
        return cls(kind=kind, counts=dict(counts), total=sum(counts.values()))

    def support_size(self) -> int:
        return len(self.counts)


# ---------------------------------------------------------------------------
# Stopword and tokenizer machinery
# ---------------------------------------------------------------------------

# French elided clitics, apostrophe stripped ("l'avion" -> "l'" + "avion").
_FR_CLITICS = frozenset(
    ["l", "d", "c", "j", "m", "n", "s", "t", "qu", "jusqu", "lorsqu", "puisqu", "quoiqu"]
)

_APOSTROPHES = {"’": "'", "ʼ": "'"}


def _read_word_list(path: Path) -> frozenset[str]:
    words = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.append(line.lower())
    return frozenset(words)


@lru_cache(maxsize=None)
def _stopwords_from(path_str: str) -> frozenset[str]:
    return _read_word_list(Path(path_str))


def stopwords(language: Language) -> frozenset[str]:
    """Stopword set for a language, honoring STOPWORDS_DIR_ENV if set."""
    override = os.environ.get(STOPWORDS_DIR_ENV)
    if override:
        return _stopwords_from(str(Path(override) / f"{language.value}.txt"))
    with resources.as_file(
        resources.files("transinform").joinpath(f"data/stopwords/{language.value}.txt")
    ) as path:
        return _stopwords_from(str(path))


def _normalize_word(word: str) -> str:
    word = unicodedata.normalize("NFC", word.lower())
    for curly, straight in _APOSTROPHES.items():
        word = word.replace(curly, straight)
    return word.strip("'")


def _strip_edge_punctuation(chunk: str) -> str:
    start, end = 0, len(chunk)
    while start < end and unicodedata.category(chunk[start]).startswith("P"):
        start += 1
    while end > start and unicodedata.category(chunk[end - 1]).startswith("P"):
        end -= 1
    return chunk[start:end]


def _split_clitics(chunk: str) -> list[str]:
    """Split leading French elisions: "l'avion" -> ["l'", "avion"]."""
    parts = []
    rest = chunk
    while True:
        normalized = rest
        for curly, straight in _APOSTROPHES.items():
            normalized = normalized.replace(curly, straight)
        cut = normalized.find("'")
        if 0 < cut <= 6 and normalized[:cut].lower() in _FR_CLITICS and cut + 1 < len(rest):
            parts.append(rest[: cut + 1])
            rest = rest[cut + 1 :]
        else:
            break
    parts.append(rest)
    return parts


def _stem(word: str, language: Language) -> str:
    """Very light suffix stripper. Off by default; changes absolute scores."""
    if language is Language.EN:
        suffixes = ("ations", "ation", "ingly", "ness", "ment", "ing", "edly", "ely", "ed", "ly", "ies", "es", "s")
    else:
        suffixes = ("issements", "issement", "ements", "ement", "ations", "ation", "euses", "euse", "eurs", "eur", "ives", "ive", "aux", "es", "s")
    for suffix in suffixes:
        if word.endswith(suffix) and len(word) - len(suffix) >= 3:
            return word[: -len(suffix)]
    return word


def tokenize(raw: str, language: Language, *, stemming: bool = False) -> list[Token]:
    """Turn raw UTF-8 text into tokens in source order.

    Punctuation never becomes a content token; French apostrophe clitics are
    split from their host word. Empty input yields an empty list. When
    ``stemming`` is on, the stopword flag is decided on the unstemmed form and
    ``normalized`` carries the stemmed one.
    """
    language = Language(language)
    stop = stopwords(language)
    tokens = []
    for chunk in raw.split():
        chunk = _strip_edge_punctuation(chunk)
        if not chunk:
            continue
        parts = _split_clitics(chunk) if language is Language.FR else [chunk]
        for part in parts:
            normalized = _normalize_word(part)
            if not normalized:
                continue
            is_stop = normalized in stop
            if stemming:
                normalized = _stem(normalized, language)
            tokens.append(Token(surface=part, normalized=normalized, is_stopword=is_stop))
    return tokens


def content_tokens(doc: Document) -> list[str]:
    """Normalized tokens with stopwords removed; sentence boundaries erased."""
    return [t.normalized for s in doc.sentences for t in s.tokens if not t.is_stopword]


def _content_per_sentence(doc: Document) -> list[list[str]]:
    return [[t.normalized for t in s.tokens if not t.is_stopword] for s in doc.sentences]


def extract_ngrams(
    doc: Document,
    kind: NgramKind,
    cross_sentences: bool = False,
    *,
    su4_include_unigrams: bool = False,
) -> NgramDistribution:
    """Count n-grams of one kind over the document's content tokens.

    With ``cross_sentences`` false (the default), bigrams and skip-bigrams
    never straddle a sentence boundary; ASR segmentation errors should not
    fabricate cross-boundary pairs. SU4 pairs are ordered (t_i, t_j) with at
    most SU4_MAX_GAP intervening tokens. ``su4_include_unigrams`` folds each
    token into the SU4 distribution as a (SU4_START, token) pair, keeping all
    keys binary.

    Raises ZeroContent if stopword filtering leaves nothing to count.
    """
    groups = _content_per_sentence(doc)
    if cross_sentences:
        groups = [[tok for group in groups for tok in group]]
    if not any(groups):
        raise ZeroContent(f"document {doc.id!r} ({doc.system}) has no content tokens")

    counts: Counter[tuple[str, ...]] = Counter()
    if kind is NgramKind.UNIGRAM:
        for group in groups:
            for tok in group:
                counts[(tok,)] += 1
    elif kind is NgramKind.BIGRAM:
        for group in groups:
            for i in range(len(group) - 1):
                counts[(group[i], group[i + 1])] += 1
    elif kind is NgramKind.SKIP_BIGRAM_SU4:
        for group in groups:
            for i in range(len(group)):
                for j in range(i + 1, min(len(group), i + SU4_MAX_GAP + 2)):
                    counts[(group[i], group[j])] += 1
                if su4_include_unigrams:
                    counts[(SU4_START, group[i])] += 1
    else:
        raise ValueError(f"unknown n-gram kind {kind!r}")
    return NgramDistribution(kind=kind, counts=dict(counts), total=sum(counts.values()))


def document_from_words(
    sentences_of_words: list[list[str]],
    language: Language,
    *,
    doc_id: str = "doc",
    system: str = "unknown",
    stemming: bool = False,
) -> Document:
    """Build a Document from plain word lists via the standard tokenizer."""
    language = Language(language)
    sentences = []
    for words in sentences_of_words:
        toks = tokenize(" ".join(words), language, stemming=stemming)
        if toks:
            sentences.append(Sentence(tokens=tuple(toks)))
    if not sentences:
        raise EmptyDocument("no tokens survived in any sentence")
    return Document(id=doc_id, language=language, system=system, sentences=tuple(sentences))
