"""Command-line entry points.

Every command is a thin orchestration of library operations; exit code 0 on
success, 1 with a structured error otherwise. Config validation reports
every problem it finds, not just the first.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import yaml

from . import annotate as ann
from . import reports
from .corpus import Corpus, load_corpus
from .errors import ConfigError, DegenerateDataError, LexiportError
from .lexicon import (filter_by_goodness, parse_dictionary,
                      serialize_dictionary)
from .matcher import build_matcher
from .matrixio import save_matrix
from .session import SessionStore, sheet_from_csv
from .stats import (average_alpha, correlate_dictionaries, cronbach_alpha,
                    agreement_report)
from .scoring import score_corpus, word_occurrence_matrix
from .translate import (HttpProvider, OfflineFixtureProvider, ResponseCache,
                        translate_terms, translations_from_json,
                        translations_to_json)

CORPUS_FORMATS = ("csv", "jsonl", "dir-of-txt")
DICT_FORMATS = ("grievance-csv", "liwc-dic")


def load_config(path: str | Path) -> dict:
    with open(path, encoding="utf-8") as fh:
        cfg = yaml.safe_load(fh) or {}
    problems = []
    if not isinstance(cfg, dict):
        raise ConfigError(["config root must be a mapping"])
    lang = cfg.get("language")
    if not lang:
        problems.append("missing key: language")
    for key in ("dictionary", "source_dictionary", "companion_dictionary"):
        p = cfg.get(key)
        if p and not Path(p).exists():
            problems.append(f"{key}: file not found: {p}")
    for key in ("dictionary_format", "companion_format"):
        f = cfg.get(key)
        if f and f not in DICT_FORMATS:
            problems.append(f"{key}: unknown format {f!r} "
                            f"(expected one of {DICT_FORMATS})")
    corpora = cfg.get("corpora", [])
    if not isinstance(corpora, list):
        problems.append("corpora must be a list")
        corpora = []
    for i, spec in enumerate(corpora):
        if not isinstance(spec, dict):
            problems.append(f"corpora[{i}] must be a mapping")
            continue
        if "path" not in spec:
            problems.append(f"corpora[{i}]: missing path")
        elif not Path(spec["path"]).exists():
            problems.append(f"corpora[{i}]: path not found: {spec['path']}")
        if spec.get("format") not in CORPUS_FORMATS:
            problems.append(f"corpora[{i}]: format must be one of "
                            f"{CORPUS_FORMATS}")
    provider = cfg.get("provider", {})
    if provider:
        kind = provider.get("kind")
        if kind not in ("offline", "http"):
            problems.append("provider.kind must be 'offline' or 'http'")
        elif kind == "offline":
            if not provider.get("fixture"):
                problems.append("provider.fixture required for offline kind")
            elif not Path(provider["fixture"]).exists():
                problems.append(f"provider.fixture not found: "
                                f"{provider['fixture']}")
        elif kind == "http" and not provider.get("endpoint"):
            problems.append("provider.endpoint required for http kind")
    if problems:
        raise ConfigError(problems)
    return cfg


def _load_dictionary(cfg, key="dictionary", fmt_key="dictionary_format"):
    path = cfg.get(key)
    if not path:
        raise ConfigError([f"config key {key!r} required for this command"])
    fmt = cfg.get(fmt_key, "grievance-csv")
    text = Path(path).read_text(encoding="utf-8")
    return parse_dictionary(text, fmt, language=cfg["language"],
                            stemmed=bool(cfg.get("stemmed", False)))


def _load_corpora(cfg) -> list[Corpus]:
    out = []
    for spec in cfg.get("corpora", []):
        out.append(load_corpus(spec["path"], spec["format"],
                               text_field=spec.get("text_field", "text"),
                               language=cfg["language"],
                               corpus_id=spec.get("id"),
                               id_field=spec.get("id_field")))
    if not out:
        raise ConfigError(["no corpora configured"])
    return out


def _make_provider(cfg):
    spec = cfg.get("provider") or {}
    if spec.get("kind") == "offline":
        return OfflineFixtureProvider(spec["fixture"])
    if spec.get("kind") == "http":
        return HttpProvider(spec["endpoint"],
                            api_key_env=spec.get("api_key_env",
                                                 "TRANSLATE_API_KEY"))
    raise ConfigError(["provider configuration required for this command"])


def _out_dir(cfg) -> Path:
    out = Path(cfg.get("output_dir", "out"))
    out.mkdir(parents=True, exist_ok=True)
    return out


@click.group()
def main():
    """Dictionary translation, annotation, and psychometric evaluation."""


def _cfg_option(f):
    return click.option("--config", "config_path", required=True,
                        type=click.Path(exists=True),
                        help="YAML config file.")(f)


@main.command()
@_cfg_option
@click.option("--goodness-threshold", type=float, default=None,
              help="Override the config goodness inclusion threshold.")
def translate(config_path, goodness_threshold):
    """Machine-translate the source dictionary's terms."""
    cfg = load_config(config_path)
    d = _load_dictionary(cfg, key="source_dictionary")
    threshold = goodness_threshold
    if threshold is None:
        threshold = cfg.get("goodness_threshold")
    if threshold is not None:
        d = filter_by_goodness(d, float(threshold))
    provider = _make_provider(cfg)
    cache = ResponseCache(cfg["cache_dir"]) if cfg.get("cache_dir") else None
    ts = translate_terms(d, provider, cfg["language"], cache=cache,
                         batch_size=int(cfg.get("provider", {})
                                        .get("batch_size", 128)))
    out = _out_dir(cfg) / f"translations_{cfg['language']}.json"
    out.write_text(translations_to_json(ts), encoding="utf-8")
    click.echo(f"translated {len(ts)} terms -> {out}")


@main.command()
@click.option("--translations", "translations_path", required=True,
              type=click.Path(exists=True))
@click.option("--per-category", default=25, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path())
def sample(translations_path, per_category, seed, out_path):
    """Stratified-sample a second-annotator batch to a blank sheet CSV."""
    ts = translations_from_json(
        Path(translations_path).read_text(encoding="utf-8"))
    sheet = ann.sample_annotation_batch(ts, per_category=per_category,
                                        seed=seed)
    Path(out_path).write_text(ann.export_sheet(sheet.records),
                              encoding="utf-8")
    click.echo(f"sampled {len(sheet)} records -> {out_path}")


def _store_with_batch(batch_path, batch_id, log_path) -> SessionStore:
    store = SessionStore(log_path)
    text = Path(batch_path).read_text(encoding="utf-8")
    store.add_batch(sheet_from_csv(text, batch_id))
    return store


@main.command("annotate-serve")
@click.option("--batch", "batch_path", required=True,
              type=click.Path(exists=True), help="Sheet CSV to annotate.")
@click.option("--batch-id", default="batch-1", show_default=True)
@click.option("--log", "log_path", default="decisions.jsonl",
              show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True,
              help="Bind address; non-loopback requires --allow-external.")
@click.option("--port", default=8710, show_default=True)
@click.option("--allow-external", is_flag=True)
@click.option("--ui", "ui_dir", type=click.Path(), default=None,
              help="Directory of built UI assets to serve at /.")
def annotate_serve(batch_path, batch_id, log_path, host, port,
                   allow_external, ui_dir):
    """Serve the annotation HTTP API (and UI, if built)."""
    if host not in ("127.0.0.1", "localhost", "::1") and not allow_external:
        raise click.ClickException(
            "refusing non-loopback bind without --allow-external")
    from .server import serve
    store = _store_with_batch(batch_path, batch_id, log_path)
    serve(store, host=host, port=port, ui_dir=ui_dir)


@main.command("annotate-export")
@click.option("--batch", "batch_path", required=True,
              type=click.Path(exists=True))
@click.option("--batch-id", default="batch-1", show_default=True)
@click.option("--log", "log_path", required=True, type=click.Path())
@click.option("--annotator", required=True)
@click.option("--out", "out_path", required=True, type=click.Path())
def annotate_export(batch_path, batch_id, log_path, annotator, out_path):
    """Export one annotator's latest decisions as a sheet CSV."""
    store = _store_with_batch(batch_path, batch_id, log_path)
    Path(out_path).write_text(store.export_csv(batch_id, annotator),
                              encoding="utf-8")
    click.echo(f"exported {batch_id} for {annotator} -> {out_path}")


@main.command("annotate-import")
@click.option("--sheet", "sheet_path", required=True,
              type=click.Path(exists=True), help="Filled sheet CSV.")
@click.option("--annotator", required=True)
@click.option("--out", "out_path", required=True, type=click.Path(),
              help="Validated decisions JSON.")
def annotate_import(sheet_path, annotator, out_path):
    """Validate a filled sheet and write normalized decisions JSON."""
    decisions = ann.import_annotations(
        Path(sheet_path).read_text(encoding="utf-8"), annotator)
    payload = [{
        "record_id": d.record_id, "annotator": d.annotator,
        "category": d.category,
        "semantically_correct": d.semantically_correct,
        "contextually_correct": d.contextually_correct,
        "replacement": d.replacement, "remove": d.remove,
        "additions": d.additions,
    } for d in decisions]
    Path(out_path).write_text(json.dumps(payload, ensure_ascii=False,
                                         indent=1), encoding="utf-8")
    click.echo(f"imported {len(decisions)} decisions -> {out_path}")


@main.command()
@click.option("--sheet-a", required=True, type=click.Path(exists=True),
              help="First annotator's filled sheet.")
@click.option("--sheet-b", required=True, type=click.Path(exists=True),
              help="Second annotator's filled sheet.")
@click.option("--out-csv", type=click.Path(), default=None)
def agreement(sheet_a, sheet_b, out_csv):
    """Inter-annotator AC1 table from two filled sheets."""
    da = ann.import_annotations(Path(sheet_a).read_text(encoding="utf-8"),
                                "annotator-1")
    db = ann.import_annotations(Path(sheet_b).read_text(encoding="utf-8"),
                                "annotator-2")
    results = agreement_report(ann.agreement_table(da, db))
    click.echo(reports.agreement_markdown(results), nl=False)
    if out_csv:
        Path(out_csv).write_text(reports.agreement_csv(results),
                                 encoding="utf-8")


@main.command()
@_cfg_option
@click.option("--format", "out_format", default="csv", show_default=True,
              type=click.Choice(["csv", "binary"]))
def score(config_path, out_format):
    """Score every configured corpus with the configured dictionary."""
    cfg = load_config(config_path)
    d = _load_dictionary(cfg)
    m = build_matcher(d)
    out = _out_dir(cfg)
    for corpus in _load_corpora(cfg):
        sm = score_corpus(m, corpus, stemmed_mode=d.stemmed)
        suffix = "csv" if out_format == "csv" else "lxmx"
        path = out / f"scores_{corpus.id}.{suffix}"
        save_matrix(sm, path, format=out_format)
        click.echo(f"{corpus.id}: {len(sm.doc_ids)} docs x "
                   f"{len(sm.columns)} categories -> {path}")


def _reliability_results(cfg):
    d = _load_dictionary(cfg)
    m = build_matcher(d)
    corpora = _load_corpora(cfg)
    results = []
    for cat in d.categories:
        alphas = []
        for corpus in corpora:
            im = word_occurrence_matrix(m, corpus, cat,
                                        stemmed_mode=d.stemmed)
            try:
                alphas.append(cronbach_alpha(im))
            except DegenerateDataError:
                alphas.append(float("nan"))
        results.append(average_alpha(cat, alphas))
    return results, [c.id for c in corpora]


@main.command()
@_cfg_option
@click.option("--out-csv", type=click.Path(), default=None)
def reliability(config_path, out_csv):
    """Per-category internal-consistency alphas, averaged over corpora."""
    cfg = load_config(config_path)
    results, corpus_ids = _reliability_results(cfg)
    click.echo(reports.reliability_markdown(results, corpus_ids), nl=False)
    if out_csv:
        Path(out_csv).write_text(reports.reliability_csv(results, corpus_ids),
                                 encoding="utf-8")


def _correlation_results(cfg, alpha_level):
    d = _load_dictionary(cfg)
    comp = _load_dictionary(cfg, key="companion_dictionary",
                            fmt_key="companion_format")
    md, mc = build_matcher(d), build_matcher(comp)
    a_mats, b_mats = [], []
    for corpus in _load_corpora(cfg):
        a_mats.append(score_corpus(md, corpus, stemmed_mode=d.stemmed))
        b_mats.append(score_corpus(mc, corpus, stemmed_mode=comp.stemmed))
    m = len(d.categories)
    results = correlate_dictionaries(a_mats, b_mats,
                                     alpha_level=alpha_level, m=m)
    return results, d.categories, m


@main.command()
@_cfg_option
@click.option("--alpha", "alpha_level", default=0.05, show_default=True)
@click.option("--out-csv", type=click.Path(), default=None)
def correlate(config_path, alpha_level, out_csv):
    """Cross-dictionary Pearson correlations with Bonferroni control."""
    cfg = load_config(config_path)
    results, categories, m = _correlation_results(cfg, alpha_level)
    click.echo("Significance threshold (Bonferroni): "
               + reports.render_threshold(alpha_level, m))
    click.echo(reports.top_correlations_markdown(
        results, categories, alpha_level=alpha_level, m=m), nl=False)
    if out_csv:
        Path(out_csv).write_text(reports.correlations_csv(results),
                                 encoding="utf-8")


@main.command()
@_cfg_option
@click.option("--alpha", "alpha_level", default=0.05, show_default=True)
def report(config_path, alpha_level):
    """Emit every applicable Markdown table plus its CSV twin."""
    cfg = load_config(config_path)
    out = _out_dir(cfg)
    emitted = []

    annotation = cfg.get("annotation") or {}
    if annotation.get("sheet_a") and annotation.get("sheet_b"):
        da = ann.import_annotations(
            Path(annotation["sheet_a"]).read_text(encoding="utf-8"),
            "annotator-1")
        db = ann.import_annotations(
            Path(annotation["sheet_b"]).read_text(encoding="utf-8"),
            "annotator-2")
        results = agreement_report(ann.agreement_table(da, db))
        (out / "agreement.md").write_text(
            reports.agreement_markdown(results), encoding="utf-8")
        (out / "agreement.csv").write_text(
            reports.agreement_csv(results), encoding="utf-8")
        emitted.append("agreement")

    translations = annotation.get("translations")
    decisions_file = annotation.get("decisions")
    if translations and decisions_file:
        ts = translations_from_json(
            Path(translations).read_text(encoding="utf-8"))
        raw = json.loads(Path(decisions_file).read_text(encoding="utf-8"))
        decisions = [ann.AnnotationDecision(**{k: v for k, v in d.items()})
                     for d in raw]
        merged, stats = ann.merge_decisions(ts, decisions)
        stemmed = ann.stem_dictionary(merged, cfg["language"])
        stats.stemmed_size = len(stemmed)
        (out / "corrections.md").write_text(
            reports.corrections_markdown(cfg["language"], stats),
            encoding="utf-8")
        (out / "corrections.csv").write_text(
            reports.corrections_csv(cfg["language"], stats),
            encoding="utf-8")
        (out / f"dictionary_{cfg['language']}_unstemmed.csv").write_text(
            serialize_dictionary(merged, "grievance-csv"), encoding="utf-8")
        (out / f"dictionary_{cfg['language']}_stemmed.csv").write_text(
            serialize_dictionary(stemmed, "grievance-csv"), encoding="utf-8")
        emitted.append("corrections")

    if cfg.get("dictionary") and cfg.get("corpora"):
        results, corpus_ids = _reliability_results(cfg)
        (out / "reliability.md").write_text(
            reports.reliability_markdown(results, corpus_ids),
            encoding="utf-8")
        (out / "reliability.csv").write_text(
            reports.reliability_csv(results, corpus_ids), encoding="utf-8")
        emitted.append("reliability")

    if cfg.get("companion_dictionary") and cfg.get("corpora"):
        results, categories, m = _correlation_results(cfg, alpha_level)
        md_text = ("Significance threshold (Bonferroni): "
                   + reports.render_threshold(alpha_level, m) + "\n\n"
                   + reports.top_correlations_markdown(
                       results, categories, alpha_level=alpha_level, m=m))
        (out / "correlations.md").write_text(md_text, encoding="utf-8")
        (out / "correlations.csv").write_text(
            reports.correlations_csv(results), encoding="utf-8")
        emitted.append("correlations")

    click.echo(f"reports written to {out}: {', '.join(emitted) or 'none'}")


def _entrypoint():
    try:
        main(standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(exc.exit_code)
    except click.Abort:
        sys.exit(1)
    except (LexiportError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    _entrypoint()
