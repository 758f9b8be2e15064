"""Corpus evaluation protocol over a manifest of reference and system transcripts.

Scenario 1 scores every system transcript against its reference. Scenario 2
summarizes every transcript, the reference included, and scores each summary
against the full reference; the reference's own summary is the
expected-maximum row. Scenario 3 converts the aggregated headline means
into information-loss percentages per system and the difference between the
two scenarios' losses.

Videos are processed in id order and all emitted artifacts iterate sorted
keys, so a rerun with the same manifest and config is byte-identical.
"""

import csv
import io
import json
import statistics
from dataclasses import dataclass
from pathlib import Path

from .artex import summarize, summary_document
from .config import RunConfig
from .errors import (
    BoundaryOutOfRange,
    EmptyList,
    ManifestError,
    NonPositiveReference,
    TransinformError,
)
from .fresa import FresaScore, fresa_score
from .segment import (
    apply_boundaries,
    read_boundary_file,
    segment_by_punctuation,
    segment_fixed_window,
)
from .text import Document, Language, tokenize

REFERENCE_SYSTEM = "reference"
SCENARIOS = ("sc1", "sc2")
COMPONENTS = ("f1", "f2", "f4", "mean")

_ENTRY_FIELDS = {
    "id",
    "language",
    "theme",
    "reference_path",
    "hypothesis_paths",
    "boundary_paths",
}


@dataclass(frozen=True)
class VideoEntry:
    id: str
    language: Language
    theme: str
    reference_path: str
    hypothesis_paths: dict
    boundary_paths: dict


@dataclass(frozen=True)
class CorpusManifest:
    videos: tuple
    base_dir: str

    def resolve(self, relative: str) -> Path:
        return Path(self.base_dir) / relative

    def systems(self) -> list:
        names = set()
        for video in self.videos:
            names.update(video.hypothesis_paths)
        return sorted(names)


def _parse_manifest(path: Path):
    try:
        raw = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        return None, [f"{path}: unreadable: {exc}"]
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        return None, [f"{path}: invalid JSON: {exc}"]
    if not isinstance(data, dict):
        return None, [f"{path}: manifest must be a JSON object"]
    diagnostics = []
    for key in sorted(set(data) - {"videos"}):
        diagnostics.append(f"{path}: unknown top-level field {key!r}")
    videos_raw = data.get("videos")
    if not isinstance(videos_raw, list) or not videos_raw:
        diagnostics.append(f"{path}: 'videos' must be a non-empty list")
        return None, diagnostics

    videos = []
    seen_ids = set()
    for i, entry in enumerate(videos_raw):
        where = f"videos[{i}]"
        if not isinstance(entry, dict):
            diagnostics.append(f"{where}: must be an object")
            continue
        for key in sorted(set(entry) - _ENTRY_FIELDS):
            diagnostics.append(f"{where}: unknown field {key!r}")
        problems = len(diagnostics)

        video_id = entry.get("id")
        if not isinstance(video_id, str) or not video_id:
            diagnostics.append(f"{where}.id: must be a non-empty string")
        elif video_id in seen_ids:
            diagnostics.append(f"{where}.id: duplicate id {video_id!r}")
        else:
            seen_ids.add(video_id)

        language = None
        try:
            language = Language(entry.get("language"))
        except ValueError:
            allowed = sorted(lang.value for lang in Language)
            diagnostics.append(f"{where}.language: must be one of {allowed}")

        theme = entry.get("theme")
        if not isinstance(theme, str):
            diagnostics.append(f"{where}.theme: must be a string")

        reference_path = entry.get("reference_path")
        if not isinstance(reference_path, str) or not reference_path:
            diagnostics.append(f"{where}.reference_path: must be a non-empty path")

        hypothesis_paths = entry.get("hypothesis_paths")
        if not isinstance(hypothesis_paths, dict) or not hypothesis_paths:
            diagnostics.append(f"{where}.hypothesis_paths: must map >= 1 system to a path")
            hypothesis_paths = {}
        else:
            for system in sorted(hypothesis_paths):
                target = hypothesis_paths[system]
                if not isinstance(system, str) or not system:
                    diagnostics.append(f"{where}.hypothesis_paths: empty system name")
                elif system == REFERENCE_SYSTEM:
                    diagnostics.append(
                        f"{where}.hypothesis_paths: system name {REFERENCE_SYSTEM!r} is reserved"
                    )
                if not isinstance(target, str) or not target:
                    diagnostics.append(
                        f"{where}.hypothesis_paths[{system!r}]: must be a non-empty path"
                    )

        boundary_paths = entry.get("boundary_paths", {})
        if not isinstance(boundary_paths, dict):
            diagnostics.append(f"{where}.boundary_paths: must map system to a path")
            boundary_paths = {}
        else:
            allowed = set(hypothesis_paths) | {REFERENCE_SYSTEM}
            for system in sorted(boundary_paths):
                if system not in allowed:
                    diagnostics.append(
                        f"{where}.boundary_paths: unknown system {system!r}"
                    )
                elif not isinstance(boundary_paths[system], str) or not boundary_paths[system]:
                    diagnostics.append(
                        f"{where}.boundary_paths[{system!r}]: must be a non-empty path"
                    )

        if len(diagnostics) == problems:
            videos.append(
                VideoEntry(
                    id=video_id,
                    language=language,
                    theme=theme,
                    reference_path=reference_path,
                    hypothesis_paths=dict(hypothesis_paths),
                    boundary_paths=dict(boundary_paths),
                )
            )

    if diagnostics:
        return None, diagnostics
    return CorpusManifest(videos=tuple(videos), base_dir=str(path.parent)), []


def load_manifest(path) -> CorpusManifest:
    """Parse and schema-check a manifest file. Raises ManifestError when dirty."""
    manifest, diagnostics = _parse_manifest(Path(path))
    if manifest is None:
        raise ManifestError("\n".join(diagnostics))
    return manifest


def _check_transcript(manifest, video_id, label, relative, diagnostics):
    path = manifest.resolve(relative)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        diagnostics.append(f"{video_id}/{label}: unreadable: {exc}")
        return None
    except UnicodeDecodeError as exc:
        diagnostics.append(f"{video_id}/{label}: not UTF-8: {exc}")
        return None
    if not raw.split():
        diagnostics.append(f"{video_id}/{label}: ZeroContent: transcript has no words ({path})")
        return None
    return raw


def validate_manifest(path) -> list:
    """Schema, file readability and content diagnostics; empty list means clean."""
    manifest, diagnostics = _parse_manifest(Path(path))
    if manifest is None:
        return diagnostics
    for video in manifest.videos:
        raws = {}
        raws[REFERENCE_SYSTEM] = _check_transcript(
            manifest, video.id, REFERENCE_SYSTEM, video.reference_path, diagnostics
        )
        for system in sorted(video.hypothesis_paths):
            raws[system] = _check_transcript(
                manifest, video.id, system, video.hypothesis_paths[system], diagnostics
            )
        for system in sorted(video.boundary_paths):
            label = f"boundary[{system}]"
            boundary_path = manifest.resolve(video.boundary_paths[system])
            try:
                boundaries = read_boundary_file(boundary_path)
            except OSError as exc:
                diagnostics.append(f"{video.id}/{label}: unreadable: {exc}")
                continue
            except BoundaryOutOfRange as exc:
                diagnostics.append(f"{video.id}/{label}: {exc}")
                continue
            raw = raws.get(system)
            if raw is None:
                continue
            token_count = len(tokenize(raw, video.language))
            if boundaries.token_count != token_count:
                diagnostics.append(
                    f"{video.id}/{label}: {boundary_path} declares"
                    f" {boundaries.token_count} tokens but the transcript"
                    f" tokenizes to {token_count}"
                )
    return diagnostics


@dataclass(frozen=True)
class LoadedTranscript:
    document: Document | None
    segmenter: str
    failure: str


@dataclass(frozen=True)
class LoadedVideo:
    entry: VideoEntry
    reference: LoadedTranscript
    hypotheses: dict


def _load_transcript(manifest, video, system, relative, config) -> LoadedTranscript:
    raw = manifest.resolve(relative).read_text(encoding="utf-8")
    boundary_relative = video.boundary_paths.get(system)
    try:
        if boundary_relative is not None:
            tokens = tokenize(raw, video.language, stemming=config.stemming)
            boundaries = read_boundary_file(manifest.resolve(boundary_relative))
            document = apply_boundaries(
                tokens,
                boundaries,
                doc_id=video.id,
                language=video.language,
                system=system,
            )
            segmenter = "boundary"
        elif system == REFERENCE_SYSTEM:
            document = segment_by_punctuation(
                raw,
                video.language,
                doc_id=video.id,
                system=system,
                stemming=config.stemming,
            )
            segmenter = "punctuation"
        else:
            tokens = tokenize(raw, video.language, stemming=config.stemming)
            document = segment_fixed_window(
                tokens,
                config.window_w,
                doc_id=video.id,
                language=video.language,
                system=system,
            )
            segmenter = "window"
    except TransinformError as exc:
        return LoadedTranscript(
            document=None, segmenter="", failure=f"{type(exc).__name__}: {exc}"
        )
    return LoadedTranscript(document=document, segmenter=segmenter, failure="")


def load_corpus(manifest: CorpusManifest, config: RunConfig) -> list:
    """Segment every transcript into a Document, in video-id order.

    Transcripts that cannot produce a usable Document carry a failure note
    instead; scoring later turns those into per-system exclusions.
    """
    loaded = []
    for video in sorted(manifest.videos, key=lambda v: v.id):
        reference = _load_transcript(
            manifest, video, REFERENCE_SYSTEM, video.reference_path, config
        )
        hypotheses = {
            system: _load_transcript(
                manifest, video, system, video.hypothesis_paths[system], config
            )
            for system in sorted(video.hypothesis_paths)
        }
        loaded.append(LoadedVideo(entry=video, reference=reference, hypotheses=hypotheses))
    return loaded


@dataclass(frozen=True)
class Exclusion:
    video: str
    system: str
    scenario: str
    reason: str

    def to_dict(self) -> dict:
        return {
            "video": self.video,
            "system": self.system,
            "scenario": self.scenario,
            "reason": self.reason,
        }


def _score_pair(reference_doc, candidate_doc, config) -> FresaScore:
    return fresa_score(
        reference_doc,
        candidate_doc,
        config.mode,
        config.smoothing(),
        su4_include_unigrams=config.su4_include_unigrams,
    )


def run_scenario1(videos: list, config: RunConfig):
    """Score each system transcript against the reference transcript.

    Returns ((video_id, system) -> FresaScore, exclusions).
    """
    scores = {}
    excluded = []
    for video in videos:
        for system in sorted(video.hypotheses):
            hypothesis = video.hypotheses[system]
            if video.reference.document is None:
                excluded.append(
                    Exclusion(video.entry.id, system, "sc1", f"reference: {video.reference.failure}")
                )
                continue
            if hypothesis.document is None:
                excluded.append(
                    Exclusion(video.entry.id, system, "sc1", f"hypothesis: {hypothesis.failure}")
                )
                continue
            try:
                score = _score_pair(video.reference.document, hypothesis.document, config)
            except TransinformError as exc:
                excluded.append(
                    Exclusion(
                        video.entry.id, system, "sc1", f"scoring: {type(exc).__name__}: {exc}"
                    )
                )
                continue
            scores[(video.entry.id, system)] = score
    return scores, excluded


def run_scenario2(videos: list, config: RunConfig):
    """Score the summary of every transcript, reference included, against the reference.

    The reference's own summary appears under the system name 'reference':
    the best score a compression at this ratio can be expected to reach.
    """
    scores = {}
    excluded = []
    for video in videos:
        if video.reference.document is None:
            reason = f"reference: {video.reference.failure}"
            for system in [REFERENCE_SYSTEM] + sorted(video.hypotheses):
                excluded.append(Exclusion(video.entry.id, system, "sc2", reason))
            continue
        rows = [(REFERENCE_SYSTEM, video.reference)]
        rows.extend((system, video.hypotheses[system]) for system in sorted(video.hypotheses))
        for system, transcript in rows:
            if transcript.document is None:
                excluded.append(
                    Exclusion(video.entry.id, system, "sc2", f"hypothesis: {transcript.failure}")
                )
                continue
            try:
                summary = summary_document(
                    transcript.document, summarize(transcript.document, config.ratio)
                )
                score = _score_pair(video.reference.document, summary, config)
            except TransinformError as exc:
                excluded.append(
                    Exclusion(
                        video.entry.id, system, "sc2", f"scoring: {type(exc).__name__}: {exc}"
                    )
                )
                continue
            scores[(video.entry.id, system)] = score
    return scores, excluded


def info_loss(system_score: float, reference_score: float = 1.0) -> float:
    """Percentage of informativeness lost relative to a reference score.

    100 * (1 - system / reference). The reference score is 1 when scoring
    full transcripts (a perfect candidate ties the reference) and the
    reference summary's own score when scoring summaries.
    """
    if reference_score <= 0:
        raise NonPositiveReference(f"reference score must be positive, got {reference_score}")
    return 100.0 * (1.0 - system_score / reference_score)


@dataclass(frozen=True)
class Aggregate:
    mean: float
    stddev: float
    n: int

    def to_dict(self) -> dict:
        return {"mean": self.mean, "stddev": self.stddev, "n": self.n}


def aggregate(values: list) -> Aggregate:
    """Arithmetic mean and sample standard deviation (0 when n = 1)."""
    if not values:
        raise EmptyList("nothing to aggregate")
    mean = statistics.fmean(values)
    stddev = statistics.stdev(values) if len(values) > 1 else 0.0
    return Aggregate(mean=mean, stddev=stddev, n=len(values))


def corpus_stats(manifest: CorpusManifest) -> dict:
    """Whitespace word-count aggregates keyed by (language, system).

    Counts raw words before any normalization; empty files count 0 words
    and stay included. The reference transcript appears as its own system.
    """
    counts = {}
    for video in manifest.videos:
        rows = [(REFERENCE_SYSTEM, video.reference_path)]
        rows.extend(sorted(video.hypothesis_paths.items()))
        for system, relative in rows:
            raw = manifest.resolve(relative).read_text(encoding="utf-8")
            key = (video.language.value, system)
            counts.setdefault(key, []).append(float(len(raw.split())))
    return {key: aggregate(counts[key]) for key in sorted(counts)}


@dataclass(frozen=True)
class LossRow:
    loss_sc1: float
    loss_sc2: float
    delta: float

    def to_dict(self) -> dict:
        return {"loss_sc1": self.loss_sc1, "loss_sc2": self.loss_sc2, "delta": self.delta}


@dataclass
class ScenarioReport:
    config: RunConfig
    scenario1: dict
    scenario2: dict
    aggregates: dict
    losses: dict
    excluded: tuple
    corpus: dict
    warnings: tuple

    def to_dict(self) -> dict:
        scenario1 = {}
        for (video, system), score in sorted(self.scenario1.items()):
            scenario1.setdefault(video, {})[system] = score.to_dict()
        scenario2 = {}
        for (video, system), score in sorted(self.scenario2.items()):
            scenario2.setdefault(video, {})[system] = score.to_dict()
        aggregates = {}
        for (scenario, system, component), agg in sorted(self.aggregates.items()):
            aggregates.setdefault(scenario, {}).setdefault(system, {})[component] = agg.to_dict()
        corpus = {}
        for (language, system), agg in sorted(self.corpus.items()):
            corpus.setdefault(language, {})[system] = agg.to_dict()
        return {
            "config": self.config.to_dict(),
            "stddev_estimator": "sample",
            "scenario1": scenario1,
            "scenario2": scenario2,
            "aggregates": aggregates,
            "losses": {system: row.to_dict() for system, row in sorted(self.losses.items())},
            "excluded": [exclusion.to_dict() for exclusion in self.excluded],
            "corpus_stats": corpus,
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "ScenarioReport":
        scenario1 = {
            (video, system): FresaScore(**score)
            for video, row in raw["scenario1"].items()
            for system, score in row.items()
        }
        scenario2 = {
            (video, system): FresaScore(**score)
            for video, row in raw["scenario2"].items()
            for system, score in row.items()
        }
        aggregates = {
            (scenario, system, component): Aggregate(**agg)
            for scenario, by_system in raw["aggregates"].items()
            for system, by_component in by_system.items()
            for component, agg in by_component.items()
        }
        corpus = {
            (language, system): Aggregate(**agg)
            for language, row in raw["corpus_stats"].items()
            for system, agg in row.items()
        }
        return cls(
            config=RunConfig.from_dict(raw["config"]),
            scenario1=scenario1,
            scenario2=scenario2,
            aggregates=aggregates,
            losses={
                system: LossRow(**row) for system, row in raw["losses"].items()
            },
            excluded=tuple(Exclusion(**entry) for entry in raw["excluded"]),
            corpus=corpus,
            warnings=tuple(raw["warnings"]),
        )


def _aggregate_scores(scenario: str, scores: dict) -> dict:
    by_system = {}
    for (_video, system), score in sorted(scores.items()):
        by_system.setdefault(system, []).append(score)
    aggregates = {}
    for system, rows in by_system.items():
        record = {c: [getattr(score, c) for score in rows] for c in COMPONENTS}
        for component in COMPONENTS:
            aggregates[(scenario, system, component)] = aggregate(record[component])
    return aggregates


def compute_losses(aggregates: dict, systems: list) -> dict:
    """Per-system loss of both scenarios and their difference.

    Scenario 1 losses are against a fixed reference score of 1; scenario 2
    losses are against the reference summary's aggregated headline mean.
    """
    reference_row = aggregates.get(("sc2", REFERENCE_SYSTEM, "mean"))
    losses = {}
    for system in systems:
        sc1 = aggregates.get(("sc1", system, "mean"))
        sc2 = aggregates.get(("sc2", system, "mean"))
        if sc1 is None or sc2 is None:
            continue
        if reference_row is None:
            raise NonPositiveReference("no reference summary scores to compare against")
        loss_sc1 = info_loss(sc1.mean)
        loss_sc2 = info_loss(sc2.mean, reference_row.mean)
        losses[system] = LossRow(
            loss_sc1=loss_sc1, loss_sc2=loss_sc2, delta=loss_sc1 - loss_sc2
        )
    return losses


def _segmentation_warnings(videos: list) -> tuple:
    warnings = []
    for video in videos:
        if video.reference.document is None:
            continue
        for system in sorted(video.hypotheses):
            transcript = video.hypotheses[system]
            if transcript.document is None:
                continue
            if transcript.segmenter != video.reference.segmenter:
                warnings.append(
                    f"video {video.entry.id}: reference segmented by"
                    f" {video.reference.segmenter} but {system} by {transcript.segmenter}"
                )
    return tuple(warnings)


def run_protocol(manifest: CorpusManifest, config: RunConfig) -> ScenarioReport:
    """Execute both scoring scenarios, aggregate, and derive per-system losses."""
    videos = load_corpus(manifest, config)
    scenario1, excluded1 = run_scenario1(videos, config)
    scenario2, excluded2 = run_scenario2(videos, config)
    aggregates = _aggregate_scores("sc1", scenario1)
    aggregates.update(_aggregate_scores("sc2", scenario2))
    losses = compute_losses(aggregates, manifest.systems())
    return ScenarioReport(
        config=config,
        scenario1=scenario1,
        scenario2=scenario2,
        aggregates=aggregates,
        losses=losses,
        excluded=tuple(excluded1 + excluded2),
        corpus=corpus_stats(manifest),
        warnings=_segmentation_warnings(videos),
    )


def _scenario_systems(report: ScenarioReport, scenario: str) -> list:
    systems = {
        system for (s, system, _component) in report.aggregates if s == scenario
    }
    ordered = sorted(systems - {REFERENCE_SYSTEM})
    if REFERENCE_SYSTEM in systems:
        ordered.insert(0, REFERENCE_SYSTEM)
    return ordered


def _scenario_csv(report: ScenarioReport, scenario: str) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = ["system"]
    for component in COMPONENTS:
        header.extend([component, f"{component}_stddev"])
    header.append("n")
    writer.writerow(header)
    for system in _scenario_systems(report, scenario):
        row = [system]
        for component in COMPONENTS:
            agg = report.aggregates[(scenario, system, component)]
            row.extend([repr(agg.mean), repr(agg.stddev)])
        row.append(str(report.aggregates[(scenario, system, "mean")].n))
        writer.writerow(row)
    return buffer.getvalue()


def _loss_csv(report: ScenarioReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["system", "loss_sc1", "loss_sc2", "delta"])
    for system in sorted(report.losses):
        row = report.losses[system]
        writer.writerow([system, repr(row.loss_sc1), repr(row.loss_sc2), repr(row.delta)])
    return buffer.getvalue()


_BAR_FILLS = ("#4c78a8", "#f58518")


def _render_loss_svg(losses: dict) -> str:
    """Grouped bar chart of per-system losses, built as a plain string.

    No plotting library: layout arithmetic is fixed-format so the bytes only
    depend on the loss values.
    """
    systems = sorted(losses)
    left, right, top, bottom = 80.0, 30.0, 50.0, 70.0
    group_width = 150.0
    width = left + right + group_width * max(1, len(systems))
    height = 400.0
    plot_height = height - top - bottom

    values = [0.0]
    for system in systems:
        values.extend([losses[system].loss_sc1, losses[system].loss_sc2])
    low, high = min(values), max(values)
    if high == low:
        high = low + 1.0
    span = high - low
    low -= 0.08 * span
    high += 0.08 * span

    def y(value: float) -> float:
        return top + (high - value) * plot_height / (high - low)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}"'
        f' viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect x="0" y="0" width="{width:.0f}" height="{height:.0f}" fill="#ffffff"/>',
        f'<text x="{width / 2:.2f}" y="24" font-family="sans-serif" font-size="16"'
        ' text-anchor="middle">Information loss (%)</text>',
    ]
    for i, label in enumerate(("scenario 1 (full transcripts)", "scenario 2 (summaries)")):
        swatch_x = left + 180.0 * i
        parts.append(
            f'<rect x="{swatch_x:.2f}" y="32" width="12" height="12" fill="{_BAR_FILLS[i]}"/>'
        )
        parts.append(
            f'<text x="{swatch_x + 16:.2f}" y="42" font-family="sans-serif"'
            f' font-size="11">{label}</text>'
        )
    axis_x = left - 10.0
    for tick in (low, 0.0, high):
        tick_y = y(tick)
        parts.append(
            f'<line x1="{axis_x:.2f}" y1="{tick_y:.2f}" x2="{width - right:.2f}"'
            f' y2="{tick_y:.2f}" stroke="#cccccc" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{axis_x - 4:.2f}" y="{tick_y + 4:.2f}" font-family="sans-serif"'
            f' font-size="11" text-anchor="end">{tick:.1f}</text>'
        )
    zero_y = y(0.0)
    for i, system in enumerate(systems):
        group_x = left + i * group_width
        for j, value in enumerate((losses[system].loss_sc1, losses[system].loss_sc2)):
            bar_x = group_x + 15.0 + j * 62.0
            bar_y = min(y(value), zero_y)
            bar_height = abs(y(value) - zero_y)
            parts.append(
                f'<rect x="{bar_x:.2f}" y="{bar_y:.2f}" width="50"'
                f' height="{bar_height:.2f}" fill="{_BAR_FILLS[j]}"/>'
            )
            label_y = bar_y - 4 if value >= 0 else bar_y + bar_height + 12
            parts.append(
                f'<text x="{bar_x + 25:.2f}" y="{label_y:.2f}" font-family="sans-serif"'
                f' font-size="11" text-anchor="middle">{value:.2f}</text>'
            )
        parts.append(
            f'<text x="{group_x + group_width / 2:.2f}" y="{height - bottom + 20:.2f}"'
            f' font-family="sans-serif" font-size="12" text-anchor="middle">{system}</text>'
        )
    parts.append(
        f'<line x1="{axis_x:.2f}" y1="{zero_y:.2f}" x2="{width - right:.2f}"'
        f' y2="{zero_y:.2f}" stroke="#333333" stroke-width="1"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_report(report: ScenarioReport, out_dir) -> list:
    """Write the score tables, loss table, JSON dump and loss chart.

    Returns the written paths: sc1.csv, sc2.csv, loss.csv, report.json,
    loss.svg under out_dir.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = {
        "sc1.csv": _scenario_csv(report, "sc1"),
        "sc2.csv": _scenario_csv(report, "sc2"),
        "loss.csv": _loss_csv(report),
        "report.json": json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n",
        "loss.svg": _render_loss_svg(report.losses),
    }
    written = []
    for name in sorted(files):
        path = out / name
        path.write_text(files[name], encoding="utf-8", newline="\n")
        written.append(path)
    return written


def format_loss_table(report: ScenarioReport) -> str:
    """Fixed-width loss table for terminal output."""
    lines = [f"{'system':<16} {'loss_sc1':>10} {'loss_sc2':>10} {'delta':>10}"]
    for system in sorted(report.losses):
        row = report.losses[system]
        lines.append(
            f"{system:<16} {row.loss_sc1:>10.2f} {row.loss_sc2:>10.2f} {row.delta:>10.2f}"
        )
    return "\n".join(lines)


def diff_reports(a: ScenarioReport, b: ScenarioReport) -> list:
    """Human-readable differences, flagging incomparable configs first."""
    lines = []
    if a.config != b.config:
        lines.append("warning: embedded configs differ; scores are not directly comparable")
    dict_a, dict_b = a.to_dict(), b.to_dict()
    for key in sorted(set(dict_a) | set(dict_b)):
        if key != "config" and dict_a.get(key) != dict_b.get(key):
            lines.append(f"section {key!r} differs")
    return lines
