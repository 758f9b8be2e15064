"""Command-line front end.

`validate` and `run` operate on a corpus manifest; the remaining
subcommands expose one operation each on plain text files and print JSON.
Exit codes: 0 success, 1 usage error, 2 validation failure, 3 I/O failure.

Configuration precedence is CLI flag over config file over built-in
default; the effective values are embedded in every report.
"""

import argparse
import json
import sys
from pathlib import Path

from .artex import summarize
from .config import RunConfig
from .errors import ManifestError, TransinformError
from .fresa import fresa_score, score_dump
from .protocol import (
    corpus_stats,
    emit_report,
    format_loss_table,
    load_manifest,
    run_protocol,
    validate_manifest,
)
from .segment import (
    BoundarySet,
    segment_by_punctuation,
    segment_fixed_window,
    write_boundary_file,
)
from .text import Language, tokenize
from .wer import NoiseSpec, align, inject_noise

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_IO = 3

_CONFIG_FIELDS = (
    "ratio",
    "mode",
    "delta",
    "b_factor",
    "su4_include_unigrams",
    "stemming",
    "window_w",
    "out_dir",
    "seed",
)


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here reserves 2 for validation."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ratio_arg(text: str) -> float:
    value = _float_arg(text)
    if not 0.0 < value <= 1.0:
        raise argparse.ArgumentTypeError(f"must be in (0, 1], got {text}")
    return value


def _float_arg(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text}") from None


def _delta_arg(text: str) -> float:
    value = _float_arg(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _b_factor_arg(text: str) -> float:
    value = _float_arg(text)
    if not value >= 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _window_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _seed_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None


def _target_wer_arg(text: str) -> float:
    value = _float_arg(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must be in [0, 1], got {text}")
    return value


def _mix_arg(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected p_sub,p_del,p_ins")
    mix = tuple(_float_arg(part) for part in parts)
    if any(p < 0 for p in mix) or abs(sum(mix) - 1.0) > 1e-9:
        raise argparse.ArgumentTypeError("probabilities must be >= 0 and sum to 1")
    return mix


def _config_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", metavar="FILE", help="JSON config file")
    parent.add_argument("--ratio", type=_ratio_arg, help="summary compression ratio")
    parent.add_argument("--mode", choices=["js", "kl"], help="divergence mode")
    parent.add_argument("--delta", type=_delta_arg, help="additive smoothing mass")
    parent.add_argument(
        "--b-factor", type=_b_factor_arg, dest="b_factor", help="unseen-event budget multiplier"
    )
    parent.add_argument(
        "--su4-include-unigrams",
        action="store_true",
        default=None,
        dest="su4_include_unigrams",
        help="count start-marked unigrams inside the skip-bigram distribution",
    )
    parent.add_argument(
        "--stemming", action="store_true", default=None, help="strip frequent suffixes"
    )
    parent.add_argument(
        "--window", type=_window_arg, dest="window_w", help="fixed-window segment length"
    )
    parent.add_argument("--out", dest="out_dir", metavar="DIR", help="report output directory")
    parent.add_argument("--seed", type=_seed_arg, help="seed for noise generation")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = _config_parent()
    parser = _Parser(prog="transinform", description=__doc__.strip().splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    validate = commands.add_parser("validate", help="check a corpus manifest")
    validate.add_argument("--manifest", required=True, help="manifest JSON path")
    validate.set_defaults(handler=cmd_validate)

    run = commands.add_parser("run", parents=[parent], help="run the full evaluation")
    run.add_argument("--manifest", required=True, help="manifest JSON path")
    run.set_defaults(handler=cmd_run)

    summarize_cmd = commands.add_parser("summarize", parents=[parent], help="summarize one file")
    summarize_cmd.add_argument("input", help="text file")
    _add_tool_args(summarize_cmd)
    summarize_cmd.set_defaults(handler=cmd_summarize)

    fresa_cmd = commands.add_parser("fresa", parents=[parent], help="score candidate vs source")
    fresa_cmd.add_argument("source", help="source text file")
    fresa_cmd.add_argument("candidate", help="candidate text file")
    _add_tool_args(fresa_cmd)
    fresa_cmd.set_defaults(handler=cmd_fresa)

    wer_cmd = commands.add_parser("wer", help="align two token files and report error rate")
    wer_cmd.add_argument("reference", help="reference text file")
    wer_cmd.add_argument("hypothesis", help="hypothesis text file")
    wer_cmd.set_defaults(handler=cmd_wer)

    segment_cmd = commands.add_parser("segment", parents=[parent], help="split a file into sentences")
    segment_cmd.add_argument("input", help="text file")
    segment_cmd.add_argument("--language", choices=["fr", "en"], default="fr")
    segment_cmd.add_argument(
        "--write-boundaries", metavar="FILE", help="also write a boundary file"
    )
    segment_cmd.set_defaults(handler=cmd_segment)

    noise_cmd = commands.add_parser("noise", parents=[parent], help="corrupt tokens to a target error rate")
    noise_cmd.add_argument("input", help="text file")
    noise_cmd.add_argument("--target-wer", type=_target_wer_arg, required=True, dest="target_wer")
    noise_cmd.add_argument(
        "--mix", type=_mix_arg, default=None, help="p_sub,p_del,p_ins (default equal thirds)"
    )
    noise_cmd.add_argument(
        "--confusion-vocab",
        metavar="FILE",
        dest="confusion_vocab",
        help="token pool for substitutions and insertions (default: input tokens)",
    )
    noise_cmd.set_defaults(handler=cmd_noise)

    stats_cmd = commands.add_parser("stats", help="word-count statistics per language and system")
    stats_cmd.add_argument("--manifest", required=True, help="manifest JSON path")
    stats_cmd.set_defaults(handler=cmd_stats)

    return parser


def _add_tool_args(subparser):
    subparser.add_argument("--language", choices=["fr", "en"], default="fr")
    subparser.add_argument(
        "--segmenter",
        choices=["punctuation", "window"],
        default="punctuation",
        help="how to split the input into sentences",
    )


def _resolve_config(args) -> RunConfig:
    merged = {}
    config_path = getattr(args, "config", None)
    if config_path:
        raw = json.loads(Path(config_path).read_text(encoding="utf-8"))
        if not isinstance(raw, dict):
            raise ValueError(f"{config_path}: config file must hold a JSON object")
        merged.update(raw)
    for field in _CONFIG_FIELDS:
        value = getattr(args, field, None)
        if value is not None:
            merged[field] = value
    return RunConfig.from_dict(merged)


def _print_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _document_from_file(path, language, config, segmenter):
    raw = Path(path).read_text(encoding="utf-8")
    doc_id = Path(path).stem
    if segmenter == "window":
        tokens = tokenize(raw, language, stemming=config.stemming)
        return segment_fixed_window(
            tokens, config.window_w, doc_id=doc_id, language=language, system="input"
        )
    return segment_by_punctuation(
        raw, language, doc_id=doc_id, system="input", stemming=config.stemming
    )


def cmd_validate(args) -> int:
    diagnostics = validate_manifest(args.manifest)
    for line in diagnostics:
        print(line, file=sys.stderr)
    if diagnostics:
        return EXIT_VALIDATION
    manifest = load_manifest(args.manifest)
    systems = ", ".join(manifest.systems())
    print(f"manifest clean: {len(manifest.videos)} videos, systems: {systems}")
    return EXIT_OK


def cmd_run(args) -> int:
    diagnostics = validate_manifest(args.manifest)
    if diagnostics:
        for line in diagnostics:
            print(line, file=sys.stderr)
        return EXIT_VALIDATION
    manifest = load_manifest(args.manifest)
    config = _resolve_config(args)
    report = run_protocol(manifest, config)
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    for exclusion in report.excluded:
        print(
            f"excluded: {exclusion.video}/{exclusion.system} ({exclusion.scenario}):"
            f" {exclusion.reason}",
            file=sys.stderr,
        )
    written = emit_report(report, config.out_dir)
    print(format_loss_table(report))
    print(f"report written to {Path(config.out_dir)} ({len(written)} files)")
    return EXIT_OK


def cmd_summarize(args) -> int:
    config = _resolve_config(args)
    document = _document_from_file(args.input, Language(args.language), config, args.segmenter)
    result = summarize(document, config.ratio)
    _print_json(
        {
            "sentence_count": len(document.sentences),
            "selected": list(result.selected),
            "sentences": [document.sentences[i].surface_text() for i in result.selected],
            "scores": [result.scores.sentence_scores[i] for i in result.selected],
            "ratio": result.rho,
        }
    )
    return EXIT_OK


def cmd_fresa(args) -> int:
    config = _resolve_config(args)
    language = Language(args.language)
    source = _document_from_file(args.source, language, config, args.segmenter)
    candidate = _document_from_file(args.candidate, language, config, args.segmenter)
    score = fresa_score(
        source,
        candidate,
        config.mode,
        config.smoothing(),
        su4_include_unigrams=config.su4_include_unigrams,
    )
    _print_json(score_dump(score, config.mode, config.smoothing()))
    return EXIT_OK


def cmd_wer(args) -> int:
    reference = Path(args.reference).read_text(encoding="utf-8").split()
    hypothesis = Path(args.hypothesis).read_text(encoding="utf-8").split()
    _print_json(align(reference, hypothesis).to_dict())
    return EXIT_OK


def cmd_segment(args) -> int:
    config = _resolve_config(args)
    raw = Path(args.input).read_text(encoding="utf-8")
    document = segment_by_punctuation(
        raw,
        Language(args.language),
        doc_id=Path(args.input).stem,
        stemming=config.stemming,
    )
    positions = []
    offset = 0
    for sentence in document.sentences:
        offset += len(sentence.tokens)
        positions.append(offset - 1)
    boundaries = BoundarySet(
        positions=frozenset(positions), token_count=document.token_count
    )
    if args.write_boundaries:
        write_boundary_file(args.write_boundaries, boundaries)
    _print_json(
        {
            "token_count": document.token_count,
            "boundaries": boundaries.sorted_positions(),
            "sentences": [sentence.surface_text() for sentence in document.sentences],
        }
    )
    return EXIT_OK


def cmd_noise(args) -> int:
    config = _resolve_config(args)
    tokens = Path(args.input).read_text(encoding="utf-8").split()
    if args.confusion_vocab:
        vocab = tuple(Path(args.confusion_vocab).read_text(encoding="utf-8").split())
    else:
        vocab = tuple(sorted(set(tokens)))
    spec = NoiseSpec(
        target_wer=args.target_wer,
        mix=args.mix if args.mix is not None else (1 / 3, 1 / 3, 1 / 3),
        seed=config.seed,
        confusion_vocab=vocab,
    )
    noisy = inject_noise(tokens, spec)
    realized = align(tokens, noisy).wer if tokens else 0.0
    _print_json({"tokens": noisy, "realized_wer": realized})
    return EXIT_OK


def cmd_stats(args) -> int:
    manifest = load_manifest(args.manifest)
    stats = corpus_stats(manifest)
    payload = {}
    for (language, system), agg in sorted(stats.items()):
        payload.setdefault(language, {})[system] = agg.to_dict()
    _print_json(payload)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ManifestError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_VALIDATION
    except TransinformError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (OSError, UnicodeDecodeError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
