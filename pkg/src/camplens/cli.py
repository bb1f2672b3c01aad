"""Command-line pipeline: ingest -> seed-label -> propagate -> preprocess ->
train -> query/compare, plus synthetic data subcommands.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path

from . import __version__
from .errors import CamplensError
from .workspace import Workspace, write_json, write_meta

USAGE_EXIT = 1
DATA_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _workspace(args) -> Workspace:
    root = args.workspace or os.environ.get("CAMPLENS_WORKSPACE")
    if not root:
        raise CamplensError("no workspace: pass --workspace or set CAMPLENS_WORKSPACE")
    return Workspace(Path(root)).ensure()


def _pipeline_config(args):
    from .compat import tomllib
    from .textprep import PipelineConfig, Stage

    path = getattr(args, "pipeline_config", None)
    if not path:
        return PipelineConfig()
    with Path(path).open("rb") as fh:
        data = tomllib.load(fh)
    section = data.get("textprep", data)
    stages = tuple(Stage(s) for s in section.get("stages", [s.value for s in PipelineConfig().stages]))
    return PipelineConfig(stages=stages, number_token=section.get("number_token", "number"))


# --- subcommands -----------------------------------------------------------

def cmd_ingest(args) -> int:
    from .ingest import ingest_to_store

    ws = _workspace(args)
    inputs = [Path(p) for p in args.inputs]
    langs = set(args.lang) if args.lang else None
    stats = ingest_to_store(inputs, ws.corpus, langs)
    print(json.dumps(stats.as_dict(), sort_keys=True))
    return 0


def cmd_seed_label(args) -> int:
    from .ingest import read_users
    from .stance import (apply_seed_rules, default_seed_rules, load_seed_rules,
                         write_labeling_tsv, write_review_tsv)

    ws = _workspace(args)
    rules = load_seed_rules(Path(args.rules)) if args.rules else default_seed_rules()
    labeling = apply_seed_rules(read_users(ws.corpus), rules)
    out = ws.labels / "seed_labels.tsv"
    write_labeling_tsv(labeling, out)
    write_review_tsv(labeling, ws.labels / "review.tsv")
    write_meta(out, {"rules": [r.rule_id for r in rules]},
               [ws.corpus / "users.jsonl"])
    print(json.dumps({"labeled": len(labeling.labels),
                      "conflicts": len(labeling.conflicts)} | labeling.counts(),
                     sort_keys=True))
    return 0


def cmd_propagate(args) -> int:
    from .ingest import read_tweets
    from .records import build_retweet_index
    from .stance import (PropagationConfig, propagate_to_fixpoint,
                         read_labeling_tsv, write_labeling_tsv)

    ws = _workspace(args)
    cfg = PropagationConfig(threshold=args.threshold, max_iterations=args.max_iter)
    seeds = read_labeling_tsv(ws.labels / "seed_labels.tsv")
    index = build_retweet_index(read_tweets(ws.corpus))
    result = propagate_to_fixpoint(index, seeds, cfg)
    out = ws.labels / "labeling.tsv"
    write_labeling_tsv(result.labeling, out)
    write_json(ws.labels / "iterations.json", {
        "iteration_counts": result.iteration_counts,
        "converged": result.converged,
        "threshold": cfg.threshold,
        "max_iterations": cfg.max_iterations,
    })
    write_meta(out, {"threshold": cfg.threshold, "max_iterations": cfg.max_iterations},
               [ws.labels / "seed_labels.tsv", ws.corpus / "tweets.jsonl"])
    summary = result.labeling.counts()
    summary["iterations"] = len(result.iteration_counts)
    summary["converged"] = result.converged
    print(json.dumps(summary, sort_keys=True))
    return 0


def cmd_preprocess(args) -> int:
    from .ingest import read_tweets
    from .stance import Stance, read_labeling_tsv
    from .textprep import preprocess_tweet

    ws = _workspace(args)
    cfg = _pipeline_config(args)
    labeling = read_labeling_tsv(ws.labels / "labeling.tsv")
    groups = [Stance(g) for g in args.group]
    handles = {g: (ws.tokens / f"{g.value}.txt").open("w", encoding="utf-8")
               for g in groups}
    counts = {g.value: 0 for g in groups}
    try:
        for tweet in read_tweets(ws.corpus):
            stance = labeling.stance_of(tweet.author_id)
            if stance in handles:
                tokens = preprocess_tweet(tweet.text, cfg)
                if tokens:
                    handles[stance].write(" ".join(tokens) + "\n")
                    counts[stance.value] += 1
    finally:
        for fh in handles.values():
            fh.close()
    for g in groups:
        write_meta(ws.tokens / f"{g.value}.txt",
                   {"stages": [s.value for s in cfg.stages],
                    "number_token": cfg.number_token, "group": g.value},
                   [ws.corpus / "tweets.jsonl", ws.labels / "labeling.tsv"])
    print(json.dumps(counts, sort_keys=True))
    return 0


def cmd_train(args) -> int:
    from .model import export_text
    from .subword import SubwordConfig
    from .train import TrainConfig, train
    from .vocab import build_vocab

    ws = _workspace(args)
    token_path = ws.tokens / f"{args.group}.txt"
    cfg = TrainConfig(dim=args.dim, lr=args.lr, epochs=args.epochs,
                      window=args.window, negatives=args.negatives,
                      seed=args.seed, workers=args.workers)
    sub_cfg = SubwordConfig(n_min=args.n_min, n_max=args.n_max,
                            bucket_count=args.buckets)
    with token_path.open("r", encoding="utf-8") as fh:
        vocab = build_vocab(fh, min_count=args.min_count, subsample_t=args.subsample_t)
    with token_path.open("r", encoding="utf-8") as fh:
        model = train(fh, vocab, cfg, sub_cfg,
                      provenance={"group": args.group, "tokens": token_path.name},
                      progress_path=ws.models / f"{args.group}.progress.jsonl")
    out = ws.models / f"{args.group}.bin"
    model.save(out)
    if args.export_text:
        export_text(model, ws.models / f"{args.group}.vec")
    write_meta(out, {
        "dim": cfg.dim, "lr": cfg.lr, "epochs": cfg.epochs, "window": cfg.window,
        "negatives": cfg.negatives, "seed": cfg.seed, "workers": cfg.workers,
        "min_count": args.min_count, "subsample_t": args.subsample_t,
        "n_min": sub_cfg.n_min, "n_max": sub_cfg.n_max,
        "bucket_count": sub_cfg.bucket_count,
    }, [token_path])
    print(json.dumps({"group": args.group, "vocab": len(vocab),
                      "model": str(out)}, sort_keys=True))
    return 0


def cmd_query(args) -> int:
    from .model import load

    ws = _workspace(args)
    model = load(ws.models / f"{args.model}.bin")
    results = model.nearest_neighbors(args.term, args.k)
    lines = [f"{r.rank}\t{r.term}\t{r.cosine:.6f}" for r in results]
    body = "\n".join(lines) + ("\n" if lines else "")
    if args.out:
        Path(args.out).write_text(body, encoding="utf-8")
    else:
        sys.stdout.write(body)
    return 0


def cmd_compare(args) -> int:
    from .compare import compare_spaces, load_entity_spec, render_report
    from .lexicon import load_lexicon
    from .model import load

    ws = _workspace(args)
    cfg = _pipeline_config(args)
    entity = load_entity_spec(Path(args.entity), cfg)
    lexicon = load_lexicon(Path(args.lexicon), cfg)
    spaces = args.models or list(entity.spaces)
    if not spaces:
        raise CamplensError("no spaces: pass --models or list them in the entity file")
    models = [(name, load(ws.models / f"{name}.bin")) for name in spaces]
    report = compare_spaces(entity, models, lexicon, k=args.k, max_edit=args.max_edit)
    stem = args.out_name or f"{entity.canonical}"
    json_path = ws.reports / f"{stem}.json"
    md_path = ws.reports / f"{stem}.md"
    json_path.write_bytes(render_report(report, "json"))
    md_path.write_bytes(render_report(report, "markdown"))
    write_meta(json_path, {"k": args.k, "max_edit": args.max_edit,
                           "spaces": spaces, "entity": entity.canonical},
               [Path(args.entity), Path(args.lexicon)] +
               [ws.models / f"{name}.bin" for name in spaces])
    print(json.dumps({"report": str(json_path)}, sort_keys=True))
    return 0


def cmd_eval(args) -> int:
    from .stance import evaluate_against, read_gold_tsv, read_labeling_tsv

    ws = _workspace(args)
    labeling = read_labeling_tsv(ws.labels / "labeling.tsv")
    gold = read_gold_tsv(Path(args.gold))
    report = evaluate_against(labeling, gold)
    write_json(ws.labels / "eval.json", report.as_dict())
    print(json.dumps(report.as_dict(), sort_keys=True))
    return 0


def cmd_synth_net(args) -> int:
    from .synth import NetworkParams, emit_network_archive, gen_polarized_network

    ws = _workspace(args)
    params = NetworkParams(
        users_per_camp=args.users_per_camp, seeds_per_camp=args.seeds_per_camp,
        tweets_per_camp=args.tweets_per_camp,
        retweets_per_user=args.retweets_per_user,
        cross_camp_retweet_prob=args.cross_prob, rng_seed=args.seed,
    )
    net = gen_polarized_network(params)
    tweets_path = ws.synth / "net_tweets.jsonl"
    emit_network_archive(net, tweets_path, ws.synth / "net_gold.tsv")
    write_meta(tweets_path, dataclasses.asdict(params), [])
    print(json.dumps({"users": len(net.users), "tweets": len(net.tweets),
                      "archive": str(tweets_path)}, sort_keys=True))
    return 0


def cmd_synth_corpus(args) -> int:
    from .synth import CorpusParams, emit_corpus_archive, gen_polarized_corpus

    ws = _workspace(args)
    params = CorpusParams(
        vocab_size=args.vocab_size, sentences=args.sentences,
        entity_token=args.entity, positive_ratio_camp_a=args.positive_ratio_a,
        window_cooccurrence=args.window, rng_seed=args.seed,
    )
    corpus = gen_polarized_corpus(params)
    tweets_path = ws.synth / "corpus_tweets.jsonl"
    emit_corpus_archive(corpus, tweets_path, ws.synth / "corpus_gold.tsv",
                        ws.synth / "planted_lexicon.tsv")
    print(json.dumps({"sentences_per_camp": params.sentences,
                      "entity": params.entity_token,
                      "archive": str(tweets_path)}, sort_keys=True))
    return 0


# --- parser ----------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="camplens",
                     description="stance-split tweet corpora and per-camp "
                                 "subword embedding comparison")
    parser.add_argument("--version", action="version", version=f"camplens {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--workspace", help="workspace root (or CAMPLENS_WORKSPACE)")
        return p

    p = add("ingest", cmd_ingest, "parse archive JSONL into the corpus store")
    p.add_argument("--input", dest="inputs", nargs="+", required=True)
    p.add_argument("--lang", nargs="*", default=None,
                   help="keep only these language codes (omit to keep all)")

    p = add("seed-label", cmd_seed_label, "label users from profile seed rules")
    p.add_argument("--rules", help="seed rules TOML (default: bundled rules)")

    p = add("propagate", cmd_propagate, "retweet label propagation to fixpoint")
    p.add_argument("--threshold", type=int, default=10)
    p.add_argument("--max-iter", dest="max_iter", type=int, default=50)

    p = add("preprocess", cmd_preprocess, "tokenize labeled users' tweets per camp")
    p.add_argument("--group", nargs="+", default=["pro", "anti"])
    p.add_argument("--pipeline-config", dest="pipeline_config")

    p = add("train", cmd_train, "train one camp's embedding model")
    p.add_argument("--group", required=True)
    p.add_argument("--dim", type=int, default=100)
    p.add_argument("--lr", type=float, default=0.05)
    p.add_argument("--epochs", type=int, default=5)
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--negatives", type=int, default=5)
    p.add_argument("--min-count", dest="min_count", type=int, default=5)
    p.add_argument("--subsample-t", dest="subsample_t", type=float, default=1e-4)
    p.add_argument("--n-min", dest="n_min", type=int, default=3)
    p.add_argument("--n-max", dest="n_max", type=int, default=6)
    p.add_argument("--buckets", type=int, default=2_000_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--export-text", action="store_true")

    p = add("query", cmd_query, "nearest neighbors of a term in one model")
    p.add_argument("--model", required=True)
    p.add_argument("--term", required=True)
    p.add_argument("--k", type=int, default=2000)
    p.add_argument("--out")

    p = add("compare", cmd_compare, "rank-based cross-space entity report")
    p.add_argument("--entity", required=True, help="entity spec TOML")
    p.add_argument("--lexicon", required=True, help="sentiment lexicon TSV")
    p.add_argument("--models", nargs="*", help="model names (default: entity spaces)")
    p.add_argument("--k", type=int, default=2000)
    p.add_argument("--max-edit", dest="max_edit", type=int, default=1)
    p.add_argument("--out-name", dest="out_name")
    p.add_argument("--pipeline-config", dest="pipeline_config")

    p = add("eval", cmd_eval, "compare the labeling against gold labels")
    p.add_argument("--gold", required=True)

    p = add("synth-net", cmd_synth_net, "generate a planted retweet network")
    p.add_argument("--users-per-camp", type=int, default=500)
    p.add_argument("--seeds-per-camp", type=int, default=20)
    p.add_argument("--tweets-per-camp", type=int, default=200)
    p.add_argument("--retweets-per-user", type=int, default=12)
    p.add_argument("--cross-prob", dest="cross_prob", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=42)

    p = add("synth-corpus", cmd_synth_corpus, "generate planted polarized corpora")
    p.add_argument("--vocab-size", type=int, default=2000)
    p.add_argument("--sentences", type=int, default=10000)
    p.add_argument("--entity", default="zmrgdln")
    p.add_argument("--positive-ratio-a", dest="positive_ratio_a",
                   type=float, default=0.9)
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--seed", type=int, default=42)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CamplensError as exc:
        print(f"camplens: {exc}", file=sys.stderr)
        return DATA_EXIT
    except FileNotFoundError as exc:
        print(f"camplens: missing file: {exc}", file=sys.stderr)
        return DATA_EXIT


if __name__ == "__main__":
    sys.exit(main())
