"""Shared test utilities: independent oracles and synthetic data builders.

The oracles deliberately reimplement the target formulas with naive loops
and no shared code, so agreement is evidence rather than tautology.
"""

import math
import random
from functools import lru_cache

from transinform import Language, document_from_words

# Filled by the acceptance tests, printed by the conftest terminal summary.
ACCEPTANCE_RESULTS = []


def record_acceptance(number: int, name: str, ok: bool, elapsed: float) -> None:
    verdict = "PASS" if ok else "FAIL"
    ACCEPTANCE_RESULTS.append(f"ACCEPTANCE #{number} {name}: {verdict} ({elapsed:.2f}s)")


_CONSONANTS = "bdfgklmnprstvz"
_VOWELS = "aeiou"


def nonsense_word(rng: random.Random, syllables: int = 2) -> str:
    return "".join(
        rng.choice(_CONSONANTS) + rng.choice(_VOWELS) for _ in range(syllables)
    )


def nonsense_vocab(rng: random.Random, size: int) -> list:
    vocab = set()
    while len(vocab) < size:
        vocab.add(nonsense_word(rng, rng.choice([2, 2, 3])))
    return sorted(vocab)


def synthetic_document(
    rng: random.Random,
    sentences: int = 8,
    words_per_sentence: int = 10,
    vocab: list = None,
    language: Language = Language.EN,
    doc_id: str = "synthetic",
):
    if vocab is None:
        vocab = nonsense_vocab(rng, 40)
    grid = [
        [rng.choice(vocab) for _ in range(words_per_sentence)] for _ in range(sentences)
    ]
    return document_from_words(grid, language, doc_id=doc_id)


# ---------------------------------------------------------------------------
# Edit distance oracle (plain recursion with memoization)
# ---------------------------------------------------------------------------


def oracle_edit_distance(reference: tuple, hypothesis: tuple) -> int:
    @lru_cache(maxsize=None)
    def dist(i: int, j: int) -> int:
        if i == 0:
            return j
        if j == 0:
            return i
        return min(
            dist(i - 1, j - 1) + (0 if reference[i - 1] == hypothesis[j - 1] else 1),
            dist(i - 1, j) + 1,
            dist(i, j - 1) + 1,
        )

    return dist(len(reference), len(hypothesis))


# ---------------------------------------------------------------------------
# Divergence oracles over explicit union supports
# ---------------------------------------------------------------------------


def oracle_js(p_counts: dict, q_counts: dict, delta: float, b_factor: float) -> float:
    union = set(p_counts) | set(q_counts)
    budget = b_factor * len(union)
    p_total = sum(p_counts.values())
    q_total = sum(q_counts.values())
    total = 0.0
    for gram in union:
        p = (p_counts.get(gram, 0) + delta) / (p_total + delta * budget)
        q = (q_counts.get(gram, 0) + delta) / (q_total + delta * budget)
        m = (p + q) / 2
        total += 0.5 * p * math.log2(p / m) + 0.5 * q * math.log2(q / m)
    return min(1.0, max(0.0, total))


def oracle_kl(source_counts: dict, candidate_counts: dict, delta: float, b_factor: float) -> float:
    budget = b_factor * len(source_counts)
    source_total = sum(source_counts.values())
    candidate_total = sum(candidate_counts.values())
    total = 0.0
    for gram in source_counts:
        p_t = source_counts[gram] / source_total
        p_s = (candidate_counts.get(gram, 0) + delta) / (candidate_total + delta * budget)
        total += p_t * math.log2(p_t / p_s)
    return max(0.0, total)


def random_counts(rng: random.Random, alphabet: str, max_events: int = 10) -> dict:
    size = rng.randint(1, min(max_events, len(alphabet)))
    grams = rng.sample(list(alphabet), size)
    return {(gram,): rng.randint(1, 9) for gram in grams}


# ---------------------------------------------------------------------------
# Summarizer oracle (naive loop evaluation of the scoring formulas)
# ---------------------------------------------------------------------------


def oracle_summarize(doc, rho: float):
    terms = []
    for sentence in doc.sentences:
        for token in sentence.tokens:
            if not token.is_stopword and token.normalized not in terms:
                terms.append(token.normalized)
    p = len(doc.sentences)
    n = len(terms)
    weights = []
    for sentence in doc.sentences:
        row = []
        for term in terms:
            row.append(
                float(
                    sum(
                        1
                        for token in sentence.tokens
                        if not token.is_stopword and token.normalized == term
                    )
                )
            )
        weights.append(row)
    lexical = [sum(weights[i][j] for i in range(p)) / p for j in range(n)]
    topic = [sum(weights[i][j] for j in range(n)) / n for i in range(p)]
    scores = [
        sum(weights[i][j] * lexical[j] for j in range(n)) * topic[i] / (n * p)
        for i in range(p)
    ]
    k = max(1, math.ceil(rho * p))
    ranked = sorted(range(p), key=lambda i: (-scores[i], i))
    return sorted(ranked[:k]), scores


# ---------------------------------------------------------------------------
# Rank correlation
# ---------------------------------------------------------------------------


def _ranks(values: list) -> list:
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        shared = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[order[k]] = shared
        i = j + 1
    return ranks


def spearman(xs: list, ys: list) -> float:
    rx, ry = _ranks(xs), _ranks(ys)
    mean_x = sum(rx) / len(rx)
    mean_y = sum(ry) / len(ry)
    cov = sum((a - mean_x) * (b - mean_y) for a, b in zip(rx, ry))
    var_x = sum((a - mean_x) ** 2 for a in rx)
    var_y = sum((b - mean_y) ** 2 for b in ry)
    if var_x == 0 or var_y == 0:
        return 0.0
    return cov / math.sqrt(var_x * var_y)
