import math
import random

import pytest

import helpers
from transinform import (
    DivergenceMode,
    EmptySource,
    FresaScore,
    ZeroContent,
    Language,
    NgramDistribution,
    NgramKind,
    SmoothingConfig,
    extract_ngrams,
    fresa_score,
    js_divergence,
    kl_modified,
    score_dump,
    segment_by_punctuation,
    smoothed_prob,
)


def dist(counts, kind=NgramKind.UNIGRAM):
    shaped = {(g,) if isinstance(g, str) else g: c for g, c in counts.items()}
    return NgramDistribution(kind=kind, counts=shaped, total=sum(shaped.values()))


class TestSmoothedProb:
    def test_single_seen_gram(self):
        p = smoothed_prob(dist({"a": 1}), 1, SmoothingConfig())
        assert p(("a",)) == pytest.approx(1.005 / 1.0075, abs=1e-12)

    def test_tiny_delta_approaches_ml(self):
        p = smoothed_prob(dist({"a": 3, "b": 1}), 2, SmoothingConfig(delta=1e-12))
        assert p(("a",)) == pytest.approx(0.75, abs=1e-9)
        assert p(("b",)) == pytest.approx(0.25, abs=1e-9)

    def test_unseen_grams_share_one_mass(self):
        p = smoothed_prob(dist({"a": 2}), 4, SmoothingConfig())
        assert p(("x",)) == p(("y",))
        assert 0.0 < p(("x",)) < p(("a",))

    def test_total_mass_identity(self):
        rng = random.Random(21)
        for _ in range(40):
            counts = helpers.random_counts(rng, "abcdef")
            vocab = len(counts) + rng.randint(0, 5)
            cfg = SmoothingConfig(delta=rng.choice([0.005, 0.1, 1.0]), b_factor=rng.choice([1.0, 1.5, 3.0]))
            p = smoothed_prob(dist(counts), vocab, cfg)
            budget = cfg.b_factor * vocab
            seen = sum(p((g,)) for (g,) in [k for k in counts])
            mass = seen + (budget - len(counts)) * p(("unseen",))
            assert mass == pytest.approx(1.0, abs=1e-9)

    def test_rejects_empty_vocab(self):
        with pytest.raises(ValueError):
            smoothed_prob(dist({"a": 1}), 0, SmoothingConfig())


class TestKlModified:
    def test_identical_near_zero_with_tiny_delta(self):
        d = dist({"a": 3, "b": 2})
        assert kl_modified(d, d, SmoothingConfig(delta=1e-9)) < 1e-6

    def test_disjoint_singletons(self):
        d = kl_modified(dist({"a": 1}), dist({"b": 1}), SmoothingConfig())
        assert d == pytest.approx(math.log2(1.0075 / 0.005), abs=1e-12)

    def test_overlap_smaller_than_disjoint(self):
        source = dist({"a": 2, "b": 1})
        near = dist({"a": 2, "b": 1, "c": 1})
        far = dist({"x": 3, "y": 1})
        cfg = SmoothingConfig()
        assert kl_modified(source, near, cfg) < kl_modified(source, far, cfg)

    def test_asymmetric(self):
        a = dist({"a": 5, "b": 1})
        b = dist({"a": 1, "b": 5})
        cfg = SmoothingConfig()
        left = kl_modified(a, b, cfg)
        right = kl_modified(b, a, cfg)
        assert left == pytest.approx(right)  # symmetric counts here
        c = dist({"a": 1})
        assert kl_modified(a, c, cfg) != pytest.approx(kl_modified(c, a, cfg))

    def test_nonnegative_random(self):
        rng = random.Random(22)
        for _ in range(80):
            s = dist(helpers.random_counts(rng, "abcd"))
            c = dist(helpers.random_counts(rng, "cdef"))
            assert kl_modified(s, c, SmoothingConfig()) >= 0.0

    def test_matches_naive_oracle(self):
        rng = random.Random(23)
        cfg = SmoothingConfig()
        for _ in range(60):
            s = helpers.random_counts(rng, "abcde")
            c = helpers.random_counts(rng, "cdefg")
            got = kl_modified(dist(s), dist(c), cfg)
            want = helpers.oracle_kl(s, c, cfg.delta, cfg.b_factor)
            assert got == pytest.approx(want, abs=1e-9)

    def test_empty_source_raises(self):
        empty = NgramDistribution(kind=NgramKind.UNIGRAM, counts={}, total=0)
        with pytest.raises(EmptySource):
            kl_modified(empty, dist({"a": 1}), SmoothingConfig())

    def test_empty_candidate_allowed(self):
        # a candidate with no grams is maximally unlike the source, not an error
        empty = NgramDistribution(kind=NgramKind.UNIGRAM, counts={}, total=0)
        d = kl_modified(dist({"a": 1}), empty, SmoothingConfig())
        assert d > 0.0


class TestJsDivergence:
    def test_identical_is_exactly_zero(self):
        d = dist({"a": 3, "b": 2})
        assert js_divergence(d, d, SmoothingConfig()) == 0.0

    def test_disjoint_approaches_one(self):
        cfg = SmoothingConfig(delta=1e-12)
        d = js_divergence(dist({"a": 5}), dist({"b": 5}), cfg)
        assert d == pytest.approx(1.0, abs=1e-6)

    def test_bounded_and_symmetric(self):
        rng = random.Random(24)
        cfg = SmoothingConfig()
        for _ in range(80):
            p = dist(helpers.random_counts(rng, "abcd"))
            q = dist(helpers.random_counts(rng, "cdef"))
            left = js_divergence(p, q, cfg)
            right = js_divergence(q, p, cfg)
            assert left == right
            assert 0.0 <= left <= 1.0

    def test_matches_naive_oracle(self):
        rng = random.Random(25)
        cfg = SmoothingConfig()
        for _ in range(60):
            a = helpers.random_counts(rng, "abcde")
            b = helpers.random_counts(rng, "cdefg")
            got = js_divergence(dist(a), dist(b), cfg)
            want = helpers.oracle_js(a, b, cfg.delta, cfg.b_factor)
            assert got == pytest.approx(want, abs=1e-9)

    def test_empty_side_raises(self):
        empty = NgramDistribution(kind=NgramKind.UNIGRAM, counts={}, total=0)
        with pytest.raises(EmptySource):
            js_divergence(empty, dist({"a": 1}), SmoothingConfig())
        with pytest.raises(EmptySource):
            js_divergence(dist({"a": 1}), empty, SmoothingConfig())


class TestFresaScore:
    def test_self_score_is_all_ones(self):
        doc = segment_by_punctuation(
            "Le chat dort sur le tapis rouge. Un chien mange dans la cuisine.",
            Language.FR,
        )
        score = fresa_score(doc, doc)
        assert (score.f1, score.f2, score.f4, score.mean) == (1.0, 1.0, 1.0, 1.0)

    def test_mean_identity(self):
        rng = random.Random(26)
        for _ in range(40):
            a = helpers.synthetic_document(rng, sentences=4)
            b = helpers.synthetic_document(rng, sentences=4)
            score = fresa_score(a, b)
            assert score.mean == pytest.approx((score.f1 + score.f2 + score.f4) / 3, abs=1e-12)
            for part in (score.f1, score.f2, score.f4):
                assert 0.0 <= part <= 1.0

    def test_from_components_rounds_to_published_means(self):
        cases = [
            ((0.835, 0.697, 0.683), 0.738),
            ((0.795, 0.664, 0.659), 0.706),
            ((0.395, 0.266, 0.248), 0.303),
        ]
        for (f1, f2, f4), mean in cases:
            score = FresaScore.from_components(f1, f2, f4)
            assert score.mean == pytest.approx(mean, abs=0.0005)

    def test_kl_mode_components_in_unit_interval(self):
        rng = random.Random(27)
        a = helpers.synthetic_document(rng, sentences=5)
        b = helpers.synthetic_document(rng, sentences=5)
        score = fresa_score(a, b, mode=DivergenceMode.KL_MODIFIED)
        for part in (score.f1, score.f2, score.f4):
            assert 0.0 < part <= 1.0

    def test_kl_mode_self_near_one_with_tiny_delta(self):
        rng = random.Random(28)
        doc = helpers.synthetic_document(rng, sentences=5)
        score = fresa_score(doc, doc, mode=DivergenceMode.KL_MODIFIED, cfg=SmoothingConfig(delta=1e-9))
        assert score.mean > 0.999

    def test_degradation_lowers_score(self):
        # replacing half the content words with out-of-vocabulary noise
        rng = random.Random(29)
        vocab = helpers.nonsense_vocab(rng, 30)
        doc = helpers.synthetic_document(rng, sentences=8, words_per_sentence=10, vocab=vocab)
        words = [t.surface for s in doc.sentences for t in s.tokens]
        corrupted = [
            w if rng.random() > 0.5 else "zzq" + w
            for w in words
        ]
        from transinform import segment_fixed_window, tokenize

        noisy = segment_fixed_window(tokenize(" ".join(corrupted), Language.EN), 10)
        clean = fresa_score(doc, doc).mean
        degraded = fresa_score(doc, noisy).mean
        assert degraded < clean

    def test_su4_unigram_inclusion_changes_f4_only(self):
        rng = random.Random(30)
        a = helpers.synthetic_document(rng, sentences=4)
        b = helpers.synthetic_document(rng, sentences=4)
        plain = fresa_score(a, b)
        merged = fresa_score(a, b, su4_include_unigrams=True)
        assert plain.f1 == merged.f1
        assert plain.f2 == merged.f2
        assert plain.f4 != merged.f4

    def test_zero_content_candidate_raises(self):
        doc = segment_by_punctuation("chat dort.", Language.FR)
        with pytest.raises(ZeroContent):
            fresa_score(doc, segment_by_punctuation("le la de.", Language.FR))


class TestScoreDump:
    def test_fields(self):
        doc = segment_by_punctuation("chat dort. chien mange.", Language.FR)
        score = fresa_score(doc, doc)
        payload = score_dump(score, DivergenceMode.JENSEN_SHANNON, SmoothingConfig())
        assert payload == {
            "f1": 1.0,
            "f2": 1.0,
            "f4": 1.0,
            "mean": 1.0,
            "mode": "js",
            "delta": 0.005,
            "b_factor": 1.5,
        }


class TestSmoothingConfig:
    def test_defaults(self):
        cfg = SmoothingConfig()
        assert cfg.delta == 0.005
        assert cfg.b_factor == 1.5

    def test_validation(self):
        with pytest.raises(ValueError):
            SmoothingConfig(delta=0.0)
        with pytest.raises(ValueError):
            SmoothingConfig(delta=-1.0)
        with pytest.raises(ValueError):
            SmoothingConfig(b_factor=0.5)


class TestNgramPlumbing:
    def test_unigram_distribution_from_example(self):
        doc = segment_by_punctuation("Le chat dort.", Language.FR)
        d = extract_ngrams(doc, NgramKind.UNIGRAM)
        assert d.counts == {("chat",): 1, ("dort",): 1}
