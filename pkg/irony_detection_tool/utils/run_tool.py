"""
This script is the command line front end of IDT: it resolves the configuration, validates
every input and runs one of the pipelines, writing its artifacts to the output directory.

Example usage:
    The code works from the terminal or called as a module.

    Terminal
        $ idt_run_tool train --data SemEval2018-T3-train-taskA.txt --embeddings glove.twitter.27B.100d.txt
                             --dim 100 --hidden 150 --dropout 0.1 --lr 0.0001 --ensemble 4 --seed 1
                             --output_dir run1

        Subcommands:
        prep      clean and tokenize the dataset, writes tokens.jsonl
        train     train the ensemble, writes model/, history.json, metrics.json, member_metrics.json
        eval      evaluate a trained ensemble (--checkpoint run1/model) on a dataset, writes metrics.json
        predict   label a dataset with a trained ensemble, writes predictions.tsv
        ablate    binary feature ablation, writes ablation.json and ablation.txt
        baseline  TF-IDF + linear SVM, writes metrics.json

        Every run writes run.json, the fully resolved configuration. Passing it back with
        --config replays the run. A .cfg file (see idt_mk_idtconfig_file) works the same way.
        Precedence: command line > configuration file > defaults.

    As a module
        import irony_detection_tool as idt
        exit_status = idt.utils.run_tool.run(["eval", "--checkpoint", "run1/model", "--data", "test.txt"])
"""

import os
import sys
import time
import logging
import argparse
import configparser

from irony_detection_tool import baseline
from irony_detection_tool import core_utils
from irony_detection_tool import corpus
from irony_detection_tool import embed
from irony_detection_tool import feats
from irony_detection_tool import metrics
from irony_detection_tool import train

# HEADER
__author__ = "IDT team"
__version__ = "1.4"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed
# Apr 2026 - Version 1.1: added eval and predict subcommands
# Jul 2026 - Version 1.2: added ablate subcommand and run.json replay
# Sep 2026 - Version 1.3: training curves with --save_plots
# Oct 2026 - Version 1.4: Adam options on the command line, stricter configuration checks

log = logging.getLogger(__name__)

SUBCOMMANDS = ("prep", "train", "eval", "predict", "ablate", "baseline")
EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3

# configuration file layout: section -> option -> (group, key, type)
CONFIG_KEYS = {
    "data": {"data_file": ("paths", "data", str),
             "has_header": ("options", "has_header", bool),
             "remove_not": ("options", "remove_not", bool),
             "split_ratio": ("train", "split_ratio", float),
             "stratified": ("train", "stratified", bool)},
    "embeddings": {"embeddings_file": ("paths", "embeddings", str),
                   "embed_dim": ("train", "embed_dim", int),
                   "min_freq": ("train", "min_freq", int)},
    "model": {"hidden": ("train", "hidden", int),
              "dropout_p": ("train", "dropout_p", float),
              "checkpoint_dir": ("paths", "checkpoint", str)},
    "training": {"lr": ("train", "lr", float),
                 "seed": ("train", "seed", int),
                 "ensemble_size": ("train", "ensemble_size", int),
                 "batch_size": ("train", "batch_size", int),
                 "patience": ("train", "patience", int),
                 "max_epochs": ("train", "max_epochs", int),
                 "fine_tune": ("train", "fine_tune", bool),
                 "combine": ("train", "combine", str),
                 "cores": ("train", "cores", int),
                 "beta1": ("train", "beta1", float),
                 "beta2": ("train", "beta2", float),
                 "eps": ("train", "eps", float)},
    "features": {"use_token_feats": ("train", "use_token_feats", bool),
                 "use_sentence_feats": ("train", "use_sentence_feats", bool)},
    "baseline": {"c": ("options", "c", float),
                 "stopwords_file": ("paths", "stopwords", str)},
    "output": {"output_dir": ("paths", "output_dir", str),
               "save_plots": ("options", "save_plots", bool)},
}

# command line destination -> (group, key)
CLI_KEYS = {
    "data": ("paths", "data"), "embeddings": ("paths", "embeddings"), "checkpoint": ("paths", "checkpoint"),
    "stopwords": ("paths", "stopwords"), "output_dir": ("paths", "output_dir"),
    "no_header": ("options", "has_header"), "keep_not": ("options", "remove_not"), "c": ("options", "c"),
    "save_plots": ("options", "save_plots"),
    "dim": ("train", "embed_dim"), "hidden": ("train", "hidden"), "dropout": ("train", "dropout_p"),
    "lr": ("train", "lr"), "ensemble": ("train", "ensemble_size"), "seed": ("train", "seed"),
    "batch_size": ("train", "batch_size"), "patience": ("train", "patience"),
    "max_epochs": ("train", "max_epochs"), "min_freq": ("train", "min_freq"),
    "fine_tune": ("train", "fine_tune"), "combine": ("train", "combine"),
    "split_ratio": ("train", "split_ratio"), "stratified": ("train", "stratified"), "cores": ("train", "cores"),
    "beta1": ("train", "beta1"), "beta2": ("train", "beta2"), "eps": ("train", "eps"),
}


def default_config():
    return {"train": train.TrainConfig().to_dict(),
            "paths": {"data": None, "embeddings": None, "checkpoint": None, "stopwords": None, "output_dir": "."},
            "options": {"has_header": True, "remove_not": True, "c": 1.0, "save_plots": False}}


def _check_replayed(config_path, found):
    """Type checks of the paths and options of a run.json; TrainConfig checks its own values."""
    kinds = {(group, key): kind for options in CONFIG_KEYS.values() for group, key, kind in options.values()}
    for group in ("paths", "options"):
        for key, value in found[group].items():
            kind = kinds.get((group, key))
            if kind is None:
                raise ValueError("{}: unknown {} key '{}'".format(config_path, group, key))
            if value is None and group == "paths":
                continue
            if kind is float:
                ok = isinstance(value, (int, float)) and not isinstance(value, bool)
            else:
                ok = isinstance(value, kind)
            if not ok:
                raise ValueError("{}: {} '{}' must be of type {}, got {!r}".format(
                    config_path, group, key, kind.__name__, value))


def read_config(config_path):
    """
    Read a .cfg configuration file or a run.json into the groups of default_config.
    Args:
        config_path: str
    Returns:
        dict of group -> {key: value}, only the values actually set
    """
    found = {"train": {}, "paths": {}, "options": {}}
    if config_path.endswith(".json"):
        doc = core_utils.read_json(config_path)
        groups = {"train": "config", "paths": "paths", "options": "options"}
        for group, name in groups.items():
            values = doc.get(name, {}) if isinstance(doc, dict) else None
            if not isinstance(values, dict):
                raise ValueError("{}: '{}' must be a JSON object".format(config_path, name))
            found[group].update(values)
        _check_replayed(config_path, found)
        return found
    config = core_utils.read_config_file(config_path)
    try:
        for section in config.sections():
            if section not in CONFIG_KEYS:
                raise ValueError("{}: unknown section [{}]".format(config_path, section))
            for option, value in config.items(section):
                if option not in CONFIG_KEYS[section]:
                    raise ValueError("{}: unknown option '{}' in section [{}]".format(config_path, option, section))
                if not value.strip():
                    continue
                group, key, kind = CONFIG_KEYS[section][option]
                if kind is bool:
                    value = config.getboolean(section, option)
                else:
                    try:
                        value = kind(value.strip())
                    except ValueError:
                        raise ValueError("{}: [{}] {} = '{}' is not a valid {}".format(
                            config_path, section, option, value, kind.__name__))
                found[group][key] = value
    except configparser.Error as e:
        raise ValueError("{}: {}".format(config_path, e))
    return found


def resolve_config(args):
    """Merge defaults, configuration file and command line, in increasing precedence."""
    resolved = default_config()
    if args.config:
        for group, values in read_config(args.config).items():
            resolved[group].update(values)
    for dest, (group, key) in CLI_KEYS.items():
        value = getattr(args, dest, None)
        if value is None:
            continue
        if dest in ("no_header", "keep_not"):
            value = not value
        resolved[group][key] = value
    features = getattr(args, "features", None)
    if features is not None:
        names = [] if features.strip().lower() == "none" else core_utils.getlist(features)
        feature_cfg = feats.FeatureConfig.from_names(names)
        resolved["train"]["use_token_feats"] = feature_cfg.use_token_feats
        resolved["train"]["use_sentence_feats"] = feature_cfg.use_sentence_feats
    return resolved


def _flag(parser, *names, **kwargs):
    """Store-true flag whose absence stays None so it does not override the configuration file."""
    parser.add_argument(*names, action="store_const", const=True, default=None, **kwargs)


def build_parser():
    parser = argparse.ArgumentParser(prog="idt_run_tool",
                                     description="Irony detection in tweets: BiLSTM ensemble and TF-IDF/SVM baseline.")
    subparsers = parser.add_subparsers(dest="subcommand", metavar="subcommand")
    subparsers.required = True
    for name in SUBCOMMANDS:
        sub = subparsers.add_parser(name)
        sub.add_argument("--config", default=None, help="Configuration file (.cfg) or a run.json to replay.")
        sub.add_argument("--data", default=None, help="Dataset TSV file (index, label, tweet).")
        sub.add_argument("--output_dir", default=None, help="Directory for all the output (default: current).")
        _flag(sub, "--no_header", help="The dataset file has no header line.")
        _flag(sub, "--keep_not", help="Do not remove the bare word 'not' in preprocessing.")
        if name in ("train", "ablate", "eval", "predict"):
            sub.add_argument("--embeddings", default=None, help="GloVe text file.")
        if name in ("train", "ablate"):
            sub.add_argument("--dim", type=int, default=None, help="Embedding size: 25, 50 or 100.")
            sub.add_argument("--hidden", type=int, default=None, help="LSTM hidden units.")
            sub.add_argument("--dropout", type=float, default=None, help="Dropout probability.")
            sub.add_argument("--lr", type=float, default=None, help="Adam learning rate.")
            sub.add_argument("--ensemble", type=int, default=None, help="Number of ensemble members.")
            sub.add_argument("--patience", type=int, default=None, help="Early stopping patience in epochs.")
            sub.add_argument("--max-epochs", "--max_epochs", dest="max_epochs", type=int, default=None)
            sub.add_argument("--batch_size", type=int, default=None)
            sub.add_argument("--min_freq", type=int, default=None,
                             help="Minimum count for an OOV token to get its own vector.")
            sub.add_argument("--features", default=None,
                             help="Comma separated binary feature groups: token, sentence, or none.")
            sub.add_argument("--combine", choices=train.COMBINE_RULES, default=None)
            sub.add_argument("--cores", type=int, default=None, help="Members trained in parallel.")
            _flag(sub, "--fine_tune", help="Update the embeddings while training.")
            sub.add_argument("--beta1", type=float, default=None, help="Adam first moment decay.")
            sub.add_argument("--beta2", type=float, default=None, help="Adam second moment decay.")
            sub.add_argument("--eps", type=float, default=None, help="Adam epsilon.")
        if name in ("train", "ablate", "baseline"):
            sub.add_argument("--seed", type=int, default=None)
            sub.add_argument("--split_ratio", type=float, default=None, help="Train fraction of the split.")
            _flag(sub, "--stratified", help="Keep the label ratio in both halves of the split.")
        if name == "train":
            _flag(sub, "--save_plots", help="Save learning curve plots of every member.")
        if name in ("eval", "predict"):
            sub.add_argument("--checkpoint", default=None, help="Model directory written by train.")
        if name == "baseline":
            sub.add_argument("--c", type=float, default=None, help="SVM regularization constant.")
            sub.add_argument("--stopwords", default=None, help="Stopword list, one word per line.")
    return parser


def _require_file(path, what):
    if path is None:
        raise ValueError("no {} given".format(what))
    if not os.path.isfile(path):
        raise FileNotFoundError(path)


def glove_dim(path):
    """Dimension of a GloVe file, read from its first line."""
    with open(path, "r", encoding="utf-8") as gf:
        return len(gf.readline().rstrip().split(" ")) - 1


def validate(subcommand, resolved):
    """
    Check every input before any work starts.
    Args:
        subcommand: str
        resolved: dict from resolve_config
    Returns:
        cfg: train.TrainConfig
    """
    cfg = train.TrainConfig.from_dict(resolved["train"])
    paths = resolved["paths"]
    _require_file(paths["data"], "dataset file (--data)")
    if subcommand in ("train", "ablate"):
        _require_file(paths["embeddings"], "embeddings file (--embeddings)")
        found = glove_dim(paths["embeddings"])
        if found != cfg.embed_dim:
            raise ValueError("{} holds {}-dimensional vectors but --dim is {}".format(
                paths["embeddings"], found, cfg.embed_dim))
    if subcommand in ("eval", "predict"):
        if paths["checkpoint"] is None:
            raise ValueError("no model directory given (--checkpoint)")
        _require_file(os.path.join(paths["checkpoint"], "ensemble.json"), "ensemble description")
        if paths["embeddings"] is not None:
            _require_file(paths["embeddings"], "embeddings file (--embeddings)")
    if subcommand == "baseline":
        if paths["stopwords"] is not None:
            _require_file(paths["stopwords"], "stopword list (--stopwords)")
        if resolved["options"]["c"] <= 0:
            raise ValueError("the SVM constant C must be positive, got {}".format(resolved["options"]["c"]))
    return cfg


def _say(msg):
    print(msg)
    log.info(msg)


def _load_split(cfg, resolved):
    tweets = corpus.load_dataset(resolved["paths"]["data"], has_header=resolved["options"]["has_header"])
    return tweets, corpus.split(tweets, ratio=cfg.split_ratio, seed=cfg.seed, stratified=cfg.stratified)


def _encoded_split(cfg, resolved, feature_cfg):
    """Load, split and encode the dataset; the vocabulary covers the whole dataset."""
    tweets, data = _load_split(cfg, resolved)
    seqs = train.tokenize_tweets(tweets, resolved["options"]["remove_not"])
    tokens = {t for seq in seqs for t in seq}
    table = embed.load_glove(resolved["paths"]["embeddings"], cfg.embed_dim, restrict_to=tokens)
    vocab = embed.build_vocab(seqs, table, min_freq=cfg.min_freq, seed=cfg.seed)
    return train.encode_split(data, vocab, feature_cfg, resolved["options"]["remove_not"]), vocab, tokens


def run_prep(cfg, resolved, output_dir):
    tweets = corpus.load_dataset(resolved["paths"]["data"], has_header=resolved["options"]["has_header"])
    seqs = train.tokenize_tweets(tweets, resolved["options"]["remove_not"])
    with open(os.path.join(output_dir, "tokens.jsonl"), "w", encoding="utf-8") as tf:
        for tweet, seq in zip(tweets, seqs):
            tf.write(seq.to_json(label=tweet.label) + "\n")
    empty = sum(1 for seq in seqs if len(seq) == 0)
    _say(" * Tokenized {} tweets ({} left empty by preprocessing)".format(len(seqs), empty))


def run_train(cfg, resolved, output_dir):
    data, vocab, tokens = _encoded_split(cfg, resolved, cfg.feature_config)
    _say(" * Training {} members on {} tweets, {} for development".format(
        cfg.ensemble_size, len(data.train), len(data.dev)))
    ens = train.train_ensemble(cfg, data)
    train.save_ensemble(ens, vocab, os.path.join(output_dir, "model"), tokens)
    history = {"member_{}".format(i): {"seed": m.seed, "best_epoch": m.best_epoch, "epochs": m.history}
               for i, m in enumerate(ens.members)}
    core_utils.write_json(history, os.path.join(output_dir, "history.json"))
    member_reports = [dict(seed=m.seed, **train.evaluate(m, data.dev, cfg.batch_size).to_dict())
                      for m in ens.members]
    core_utils.write_json(member_reports, os.path.join(output_dir, "member_metrics.json"))
    report = train.evaluate(ens, data.dev, batch_size=cfg.batch_size)
    metrics.write_metrics(report, os.path.join(output_dir, "metrics.json"))
    _say(" * Ensemble on the development set: " + metrics.format_report(report))
    if resolved["options"]["save_plots"]:
        from irony_detection_tool.utils import plot_history
        for plt_name in plot_history.plot_histories(history, output_dir):
            _say(" * Learning curves saved in " + plt_name)


def _load_model_and_data(resolved):
    paths, options = resolved["paths"], resolved["options"]
    tweets = corpus.load_dataset(paths["data"], has_header=options["has_header"])
    table = None
    if paths["embeddings"] is not None:
        saved = core_utils.read_json(os.path.join(paths["checkpoint"], "ensemble.json"))
        if not saved.get("config"):
            raise ValueError("{} does not record the training configuration".format(paths["checkpoint"]))
        tokens = {t for seq in train.tokenize_tweets(tweets, options["remove_not"]) for t in seq}
        table = embed.load_glove(paths["embeddings"], saved["config"]["embed_dim"], restrict_to=tokens)
    ens, vocab = train.load_ensemble(paths["checkpoint"], table=table)
    if ens.cfg is None:
        raise ValueError("{} does not record the training configuration".format(paths["checkpoint"]))
    examples = train.encode_tweets(tweets, vocab, ens.cfg.feature_config, options["remove_not"])
    return ens, examples


def run_eval(cfg, resolved, output_dir):
    ens, examples = _load_model_and_data(resolved)
    report = train.evaluate(ens, examples, batch_size=ens.cfg.batch_size)
    metrics.write_metrics(report, os.path.join(output_dir, "metrics.json"))
    _say(" * Evaluation on {} tweets: {}".format(len(examples), metrics.format_report(report)))


def run_predict(cfg, resolved, output_dir):
    ens, examples = _load_model_and_data(resolved)
    predictions = ens.predict_all(examples, batch_size=ens.cfg.batch_size)
    with open(os.path.join(output_dir, "predictions.tsv"), "w", encoding="utf-8") as pf:
        pf.write("id\tlabel\tprobability\n")
        for example, (label, probability) in zip(examples, predictions):
            pf.write("{}\t{}\t{:.6f}\n".format(example.source_id, label, probability))
    _say(" * Wrote predictions for {} tweets".format(len(examples)))


def run_ablate(cfg, resolved, output_dir):
    full = feats.FeatureConfig(use_token_feats=True, use_sentence_feats=True)
    data, _, _ = _encoded_split(cfg, resolved, full)
    table = train.ablate(cfg, data)
    core_utils.write_json(table, os.path.join(output_dir, "ablation.json"))
    text = train.format_ablation_table(table)
    with open(os.path.join(output_dir, "ablation.txt"), "w", encoding="utf-8") as af:
        af.write(text)
    _say(" * Ablation of the binary features (development F1):\n" + text)


def run_baseline(cfg, resolved, output_dir):
    _, data = _load_split(cfg, resolved)
    stopwords = baseline.load_stopwords(resolved["paths"]["stopwords"])
    report = baseline.baseline_run(data.train, data.dev, C=resolved["options"]["c"], stopwords=stopwords,
                                   remove_not=resolved["options"]["remove_not"])
    metrics.write_metrics(report, os.path.join(output_dir, "metrics.json"))
    _say(" * Baseline on the development set: " + metrics.format_report(report))


PIPELINES = {"prep": run_prep, "train": run_train, "eval": run_eval, "predict": run_predict,
             "ablate": run_ablate, "baseline": run_baseline}


def run(argv):
    """
    Run one subcommand.
    Args:
        argv: list of str, command line arguments without the program name
    Returns:
        exit status: 0 on success, 2 on usage or validation errors, 3 on numerical failures
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    start_time = time.time()
    try:
        resolved = resolve_config(args)
        cfg = validate(args.subcommand, resolved)
        output_dir = resolved["paths"]["output_dir"]
        os.makedirs(output_dir, exist_ok=True)
    except (ValueError, FileNotFoundError) as e:
        print("idt_run_tool {}: error: {}".format(args.subcommand, e), file=sys.stderr)
        return EXIT_USAGE

    core_utils.mk_idt_log(os.path.join(output_dir, "IDT_{}.log".format(args.subcommand)))
    core_utils.write_json({"subcommand": args.subcommand, "config": cfg.to_dict(),
                           "paths": resolved["paths"], "options": resolved["options"]},
                          os.path.join(output_dir, "run.json"))
    status = EXIT_OK
    try:
        _say(" * Running IDT {} ...".format(args.subcommand))
        PIPELINES[args.subcommand](cfg, resolved, output_dir)
        _, end_time = core_utils.calc_run_time(start_time)
        _say(" * IDT {} finished in {}".format(args.subcommand, end_time))
    except (ValueError, FileNotFoundError) as e:
        log.error(str(e))
        print("idt_run_tool {}: error: {}".format(args.subcommand, e), file=sys.stderr)
        status = EXIT_USAGE
    except FloatingPointError as e:
        log.error(str(e))
        print("idt_run_tool {}: numerical failure: {}".format(args.subcommand, e), file=sys.stderr)
        status = EXIT_NUMERIC
    finally:
        core_utils.close_idt_log()
    return status


def main():
    return run(sys.argv[1:])


if __name__ == '__main__':
    sys.exit(main())
