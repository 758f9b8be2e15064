"""Reference-free informativeness scoring of a candidate text against a source.

A candidate is scored by how little its n-gram probability distributions
diverge from the source's, over unigrams, bigrams and skip-bigrams (gap up
to 4). Two divergences are available: Jensen-Shannon (bounded, symmetric,
the default) and a modified Kullback-Leibler summed over the source support
against additively smoothed candidate estimates. Each divergence d_k maps
to an informativeness value f_k, and the mean of the three is the headline
score.

All summations run in sorted n-gram order so repeated runs are bit-identical.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .errors import EmptySource
from .text import Document, NgramDistribution, NgramKind, extract_ngrams

DEFAULT_DELTA = 0.005
DEFAULT_B_FACTOR = 1.5

Ngram = tuple[str, ...]


class DivergenceMode(Enum):
    JENSEN_SHANNON = "js"
    KL_MODIFIED = "kl"


@dataclass(frozen=True)
class SmoothingConfig:
    """Additive smoothing: p(g) = (count(g) + delta) / (total + delta * B).

    B is b_factor times a vocabulary size, budgeting mass for unseen events.
    b_factor must stay >= 1 so smoothed estimates never sum above 1 over the
    vocabulary they were budgeted for; the divergence bounds rely on that.
    """

    delta: float = DEFAULT_DELTA
    b_factor: float = DEFAULT_B_FACTOR

    def __post_init__(self):
        if not self.delta > 0:
            raise ValueError(f"delta must be positive, got {self.delta}")
        if not self.b_factor >= 1:
            raise ValueError(f"b_factor must be >= 1, got {self.b_factor}")


@dataclass(frozen=True)
class FresaScore:
    """Informativeness over unigrams (f1), bigrams (f2), skip-bigrams (f4)."""

    f1: float
    f2: float
    f4: float
    mean: float

    @classmethod
    def from_components(cls, f1: float, f2: float, f4: float) -> "FresaScore":
        return cls(f1=f1, f2=f2, f4=f4, mean=(f1 + f2 + f4) / 3)

    def to_dict(self) -> dict:
        return {"f1": self.f1, "f2": self.f2, "f4": self.f4, "mean": self.mean}


def smoothed_prob(
    dist: NgramDistribution, vocab_size_of_source: int, cfg: SmoothingConfig
) -> Callable[[Ngram], float]:
    """Probability function over n-grams with additive smoothing.

    The unseen-event budget is B = b_factor * vocab_size_of_source slots;
    seen events plus B - |seen| unseen slots sum to 1.
    """
    if vocab_size_of_source < 1:
        raise ValueError("vocab_size_of_source must be >= 1")
    b = cfg.b_factor * vocab_size_of_source
    denominator = dist.total + cfg.delta * b
    counts = dist.counts

    def p(gram: Ngram) -> float:
        return (counts.get(gram, 0) + cfg.delta) / denominator

    return p


def kl_modified(
    source_dist: NgramDistribution,
    candidate_dist: NgramDistribution,
    cfg: SmoothingConfig = SmoothingConfig(),
) -> float:
    """Divergence of the candidate from the source, summed over source support.

    D = sum over source n-grams of P_T(g) * log2(P_T(g) / P_S(g)), with P_T
    the maximum-likelihood source estimate and P_S the smoothed candidate
    estimate budgeted by the source vocabulary size. Not symmetric. D >= 0,
    and D(x, x) is a small positive smoothing residual rather than zero.
    """
    if source_dist.total < 1:
        raise EmptySource("source distribution has no mass")
    p_s = smoothed_prob(candidate_dist, source_dist.support_size(), cfg)
    total = 0.0
    for gram in sorted(source_dist.counts):
        p_t = source_dist.counts[gram] / source_dist.total
        total += p_t * math.log2(p_t / p_s(gram))
    return max(0.0, total)


def js_divergence(
    source_dist: NgramDistribution,
    candidate_dist: NgramDistribution,
    cfg: SmoothingConfig = SmoothingConfig(),
) -> float:
    """Jensen-Shannon divergence between the two smoothed distributions.

    JS(P,Q) = 1/2 KL(P||M) + 1/2 KL(Q||M) with M = (P+Q)/2, log base 2,
    summed over the union support. Both sides are smoothed against the same
    budget, B = b_factor * |union support|, which keeps the value symmetric
    and inside [0, 1]. Identical inputs give exactly 0.
    """
    if source_dist.total < 1 or candidate_dist.total < 1:
        raise EmptySource("both distributions need mass")
    union = sorted(set(source_dist.counts) | set(candidate_dist.counts))
    p = smoothed_prob(source_dist, len(union), cfg)
    q = smoothed_prob(candidate_dist, len(union), cfg)
    total = 0.0
    for gram in union:
        p_g = p(gram)
        q_g = q(gram)
        m_g = (p_g + q_g) / 2
        total += 0.5 * p_g * math.log2(p_g / m_g) + 0.5 * q_g * math.log2(q_g / m_g)
    return min(1.0, max(0.0, total))


_KINDS = (NgramKind.UNIGRAM, NgramKind.BIGRAM, NgramKind.SKIP_BIGRAM_SU4)


def fresa_score(
    source: Document,
    candidate: Document,
    mode: DivergenceMode = DivergenceMode.JENSEN_SHANNON,
    cfg: SmoothingConfig = SmoothingConfig(),
    *,
    su4_include_unigrams: bool = False,
) -> FresaScore:
    """Score the candidate against the source over all three n-gram kinds.

    Per kind, the divergence d becomes informativeness 1 - d in
    Jensen-Shannon mode (both bounded by 1) or 1 / (1 + d) in modified-KL
    mode (unbounded d squashed into (0, 1]).
    """
    components = []
    for kind in _KINDS:
        source_dist = extract_ngrams(
            source, kind, su4_include_unigrams=su4_include_unigrams
        )
        candidate_dist = extract_ngrams(
            candidate, kind, su4_include_unigrams=su4_include_unigrams
        )
        if mode is DivergenceMode.JENSEN_SHANNON:
            d = js_divergence(source_dist, candidate_dist, cfg)
            components.append(1.0 - d)
        else:
            d = kl_modified(source_dist, candidate_dist, cfg)
            components.append(1.0 / (1.0 + d))
    return FresaScore.from_components(*components)


def score_dump(score: FresaScore, mode: DivergenceMode, cfg: SmoothingConfig) -> dict:
    """JSON-ready record of a score and the settings that produced it."""
    record = score.to_dict()
    record["mode"] = mode.value
    record["delta"] = cfg.delta
    record["b_factor"] = cfg.b_factor
    return record
