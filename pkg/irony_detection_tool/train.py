"""
Training of the BiLSTM classifier, the ensemble of randomly restarted models, prediction
and the binary feature ablation.

Every random choice is keyed by the member seed: parameter initialization, the per epoch
shuffle of the training set and the dropout masks each use their own generator, so the
same configuration, data and seed reproduce every number bit for bit, whatever the
number of cores used.

Example usage:
    from irony_detection_tool import corpus, embed, train
    cfg = train.TrainConfig(embed_dim=100, hidden=150, ensemble_size=4, seed=1)
    tweets = corpus.load_dataset("SemEval2018-T3-train-taskA.txt")
    seqs = train.tokenize_tweets(tweets)
    table = embed.load_glove("glove.twitter.27B.100d.txt", 100, restrict_to={t for s in seqs for t in s})
    vocab = embed.build_vocab(seqs, table, min_freq=cfg.min_freq, seed=cfg.seed)
    data = train.encode_split(corpus.split(tweets, cfg.split_ratio, cfg.seed), vocab, cfg.feature_config)
    ens = train.train_ensemble(cfg, data)
    report = train.evaluate(ens, data.dev)
"""

import os
import math
import logging
import multiprocessing
from dataclasses import dataclass, asdict, fields, replace
from typing import Dict, List, Optional

import numpy as np

from irony_detection_tool import core_utils
from irony_detection_tool import corpus
from irony_detection_tool import embed
from irony_detection_tool import feats
from irony_detection_tool import metrics
from irony_detection_tool import neural
from irony_detection_tool import optim
from irony_detection_tool import textprep

# HEADER
__author__ = "IDT team"
__version__ = "1.6"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed
# Mar 2026 - Version 1.1: ensemble members trained in parallel with multiprocessing
# Apr 2026 - Version 1.2: minibatches and padded batch evaluation
# Jun 2026 - Version 1.3: ensembles saved and loaded as JSON
# Jul 2026 - Version 1.4: ablation grid and majority vote
# Sep 2026 - Version 1.5: embedding fine-tuning option
# Oct 2026 - Version 1.6: TrainConfig checks the type of every field

log = logging.getLogger(__name__)

SHUFFLE_STREAM = 1
DROPOUT_STREAM = 2
COMBINE_RULES = ("mean", "vote")
THRESHOLD = 0.5


def _type_problem(name, kind, value):
    """Message for a value of the wrong type (bool is not accepted as a number), or None."""
    if kind is float:
        ok = isinstance(value, (int, float)) and not isinstance(value, bool)
    elif kind is int:
        ok = isinstance(value, int) and not isinstance(value, bool)
    else:
        ok = isinstance(value, kind)
    if ok:
        return None
    return "{} must be of type {}, got {!r}".format(name, kind.__name__, value)


@dataclass(frozen=True)
class TrainConfig:
    embed_dim: int = 100
    hidden: int = 150
    dropout_p: float = 0.1
    lr: float = 0.0001
    use_token_feats: bool = True
    use_sentence_feats: bool = True
    seed: int = 1
    ensemble_size: int = 4
    batch_size: int = 1
    patience: int = 5
    max_epochs: int = 100
    min_freq: int = 2
    fine_tune: bool = False
    combine: str = "mean"
    split_ratio: float = 0.8
    stratified: bool = False
    cores: int = 1
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8

    def __post_init__(self):
        problems = [_type_problem(f.name, f.type, getattr(self, f.name)) for f in fields(self)]
        problems = [p for p in problems if p]
        if problems:
            raise ValueError("invalid training configuration: " + "; ".join(problems))
        if self.embed_dim not in embed.ALLOWED_DIMS:
            problems.append("embed_dim must be one of {}, got {}".format(embed.ALLOWED_DIMS, self.embed_dim))
        if self.hidden < 1:
            problems.append("hidden must be positive, got {}".format(self.hidden))
        if not 0.0 <= self.dropout_p < 1.0:
            problems.append("dropout_p must be in [0, 1), got {}".format(self.dropout_p))
        if self.lr <= 0:
            problems.append("lr must be positive, got {}".format(self.lr))
        if self.seed < 0:
            problems.append("seed must be non-negative, got {}".format(self.seed))
        for name in ("ensemble_size", "batch_size", "patience", "max_epochs", "min_freq", "cores"):
            if getattr(self, name) < 1:
                problems.append("{} must be at least 1, got {}".format(name, getattr(self, name)))
        if self.combine not in COMBINE_RULES:
            problems.append("combine must be one of {}, got '{}'".format(COMBINE_RULES, self.combine))
        if not 0.0 < self.split_ratio < 1.0:
            problems.append("split_ratio must be in (0, 1), got {}".format(self.split_ratio))
        for name in ("beta1", "beta2"):
            if not 0.0 <= getattr(self, name) < 1.0:
                problems.append("{} must be in [0, 1), got {}".format(name, getattr(self, name)))
        if self.eps <= 0:
            problems.append("eps must be positive, got {}".format(self.eps))
        if problems:
            raise ValueError("invalid training configuration: " + "; ".join(problems))

    @property
    def feature_config(self):
        return feats.FeatureConfig(use_token_feats=self.use_token_feats, use_sentence_feats=self.use_sentence_feats)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, values):
        known = {f.name for f in fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise ValueError("unknown training configuration key(s): " + ", ".join(sorted(unknown)))
        return cls(**values)


class Member:
    """One trained model of the ensemble, with its own fine-tuned embedding rows if any."""

    def __init__(self, params, seed, best_epoch=0, history=None, embeddings=None):
        self.params = params
        self.seed = seed
        self.best_epoch = best_epoch
        self.history = history or []
        self.embeddings = embeddings

    def inputs(self, example):
        """Input matrix of an example, with the tuned embedding rows swapped in."""
        if not self.embeddings:
            return example.x
        x = np.array(example.x)
        for row, token in enumerate(example.tokens):
            vec = self.embeddings.get(token)
            if vec is not None:
                x[row, :example.dim] = vec
        return x

    def probability(self, example):
        return neural.forward(self.params, self.inputs(example), mode="eval")

    def probabilities(self, examples, batch_size=1):
        """
        Eval-mode probabilities of a list of examples.
        Args:
            examples: list of EncodedExample
            batch_size: int, above 1 the padded batch encoder is used
        Returns:
            list of float
        """
        if batch_size <= 1:
            return [self.probability(e) for e in examples]
        probs = []
        for start in range(0, len(examples), batch_size):
            chunk = examples[start:start + batch_size]
            steps = max(e.length for e in chunk)
            X = np.zeros((len(chunk), steps, self.params.input_dim))
            for b, e in enumerate(chunk):
                X[b, :e.length] = self.inputs(e)
            r = neural.bilstm_encode_batch(self.params, X, [e.length for e in chunk])
            probs += [float(p) for p in neural.output_probability(self.params, r)]
        return probs


@dataclass
class Ensemble:
    members: List
    combine: str = "mean"
    threshold: float = THRESHOLD
    cfg: Optional[TrainConfig] = None

    def predict_all(self, examples, batch_size=1):
        """(label, probability) for every example."""
        if not self.members:
            raise ValueError("the ensemble has no members")
        per_member = [m.probabilities(examples, batch_size) for m in self.members]
        return [combine_probabilities(probs, self.combine, self.threshold) for probs in zip(*per_member)]


def combine_probabilities(probs, combine="mean", threshold=THRESHOLD):
    """
    Combine member probabilities.
    Args:
        probs: sequence of float, one per member
        combine: "mean" (label from the mean probability) or "vote" (label 1 when at least
                 half of the members vote 1)
        threshold: float, decision threshold, ties go to the ironic class
    Returns:
        label: int
        probability: float, mean of the member probabilities
    """
    # fsum is exact, so the mean does not depend on the member order
    probability = math.fsum(probs) / len(probs)
    if combine == "mean":
        label = int(probability >= threshold)
    elif combine == "vote":
        label = int(2 * sum(1 for p in probs if p >= threshold) >= len(probs))
    else:
        raise ValueError("unknown combination rule '{}'".format(combine))
    return label, probability


def predict(ens, example):
    """
    Label and probability of one example.
    Args:
        ens: Ensemble
        example: EncodedExample
    Returns:
        label: int, 1 iff the combined probability is at least 0.5
        probability: float
    """
    return ens.predict_all([example])[0]


def evaluate(model, examples, batch_size=1):
    """
    Metrics of a Member or an Ensemble on labeled examples.
    Args:
        model: Member or Ensemble
        examples: list of EncodedExample with labels
        batch_size: int, evaluation batch size
    Returns:
        metrics.MetricsReport
    """
    if isinstance(model, Member):
        model = Ensemble(members=[model])
    predictions = model.predict_all(examples, batch_size)
    return metrics.compute_metrics([label for label, _ in predictions], [e.y for e in examples])


def tokenize_tweets(tweets, remove_not=True):
    return [textprep.clean_and_tokenize(t, remove_not=remove_not) for t in tweets]


def encode_tweets(tweets, vocab, feature_cfg, remove_not=True):
    """
    Clean, tokenize and encode tweets; tweets left empty by preprocessing are dropped.
    Args:
        tweets: list of corpus.Tweet
        vocab: embed.Vocabulary
        feature_cfg: feats.FeatureConfig
        remove_not: boolean, see textprep.preprocess
    Returns:
        list of EncodedExample
    """
    examples, dropped = [], []
    for tweet, seq in zip(tweets, tokenize_tweets(tweets, remove_not)):
        if len(seq) == 0:
            dropped.append(tweet.id)
            continue
        examples.append(feats.encode(seq, vocab, feature_cfg, label=tweet.label))
    if dropped:
        log.info("Dropped %d tweets left empty by preprocessing: %s", len(dropped), dropped)
    return examples


def encode_split(split, vocab, feature_cfg, remove_not=True):
    """encode_tweets on both halves of a Split of Tweets."""
    return corpus.Split(train=encode_tweets(split.train, vocab, feature_cfg, remove_not),
                        dev=encode_tweets(split.dev, vocab, feature_cfg, remove_not), seed=split.seed)


def _check_examples(train, dev):
    if not train or not dev:
        raise ValueError("training needs non-empty train and dev sets (got {} and {})".format(len(train), len(dev)))
    widths = {e.x.shape[1] for e in train} | {e.x.shape[1] for e in dev}
    if len(widths) != 1:
        raise ValueError("examples have inconsistent input widths: {}".format(sorted(widths)))
    if any(e.y not in (0, 1) for e in train) or any(e.y not in (0, 1) for e in dev):
        raise ValueError("every training and development example needs a 0/1 label")
    return widths.pop()


def _snapshot(embeddings):
    if embeddings is None:
        return None
    return {token: vec.copy() for token, vec in embeddings.items()}


def train_model(cfg, train, dev, seed):
    """
    Train one model with Adam and early stopping on the development F1.
    Args:
        cfg: TrainConfig
        train: list of EncodedExample, the only examples gradients are computed on
        dev: list of EncodedExample, used for model selection
        seed: int, member seed
    Returns:
        member: Member holding the parameters of the best epoch
        history: list of dict, one per epoch
    """
    input_dim = _check_examples(train, dev)
    params = neural.init_params(input_dim, cfg.hidden, cfg.dropout_p, seed=seed)
    shuffle_rng = np.random.default_rng([seed, SHUFFLE_STREAM])
    dropout_rng = np.random.default_rng([seed, DROPOUT_STREAM])
    adam = optim.AdamState.for_params(params, lr=cfg.lr, beta1=cfg.beta1, beta2=cfg.beta2, eps=cfg.eps)
    stopper = optim.EarlyStopState(patience=cfg.patience)

    embeddings, embedding_adam = None, None
    if cfg.fine_tune:
        embeddings = {}
        for e in train:
            for row, token in enumerate(e.tokens):
                if token not in embeddings:
                    embeddings[token] = np.array(e.x[row, :e.dim])
        embedding_adam = optim.AdamState.for_params(embeddings, lr=cfg.lr, beta1=cfg.beta1, beta2=cfg.beta2,
                                                    eps=cfg.eps)
    member = Member(params, seed, embeddings=embeddings)
    best = Member(params.copy(), seed, embeddings=_snapshot(embeddings))
    history = []

    for epoch in range(1, cfg.max_epochs + 1):
        order = shuffle_rng.permutation(len(train))
        total_loss = 0.0
        for start in range(0, len(order), cfg.batch_size):
            batch = [train[i] for i in order[start:start + cfg.batch_size]]
            batch_grads, embedding_grads = None, {}
            for e in batch:
                mask = neural.draw_dropout_mask(params, dropout_rng)
                loss, grads = neural.backward(params, member.inputs(e), e.y, dropout_mask=mask)
                if not math.isfinite(loss):
                    raise FloatingPointError("non-finite loss on tweet {} (seed {}, epoch {})".format(
                        e.source_id, seed, epoch))
                total_loss += loss
                batch_grads = grads if batch_grads is None else batch_grads.add(grads)
                if embeddings is not None:
                    for row, token in enumerate(e.tokens):
                        g = grads.inputs[row, :e.dim]
                        embedding_grads[token] = embedding_grads[token] + g if token in embedding_grads else g.copy()
            if len(batch) > 1:
                batch_grads = batch_grads.scale(1.0 / len(batch))
                embedding_grads = {t: g / len(batch) for t, g in embedding_grads.items()}
            optim.adam_step(adam, params, batch_grads)
            if embeddings is not None:
                optim.adam_step(embedding_adam, embeddings, embedding_grads)

        dev_report = evaluate(member, dev, batch_size=cfg.batch_size)
        decision = optim.early_stop_update(stopper, epoch, dev_report.f1)
        history.append({"epoch": epoch, "train_loss": total_loss / len(train),
                        "dev_accuracy": dev_report.accuracy, "dev_precision": dev_report.precision,
                        "dev_recall": dev_report.recall, "dev_f1": dev_report.f1,
                        "improved": decision.improved})
        log.info("Seed %d epoch %d: train loss %.6f, dev F1 %.4f%s", seed, epoch, total_loss / len(train),
                 dev_report.f1, " (best so far)" if decision.improved else "")
        if decision.improved:
            best = Member(params.copy(), seed, embeddings=_snapshot(embeddings))
        if decision.action == "stop":
            break

    best.best_epoch = stopper.best_epoch
    best.history = history
    log.info("Seed %d finished after %d epochs, best epoch %d (dev F1 %.4f)",
             seed, len(history), stopper.best_epoch, stopper.best_metric)
    return best, history


def train_ensemble(cfg, data, seeds=None):
    """
    Train cfg.ensemble_size models that differ only in their seed.
    Args:
        cfg: TrainConfig
        data: corpus.Split of EncodedExample
        seeds: list of int or None, defaults to cfg.seed + i for member i
    Returns:
        Ensemble
    """
    if seeds is None:
        seeds = [cfg.seed + i for i in range(cfg.ensemble_size)]
    seeds = list(seeds)
    if len(seeds) != cfg.ensemble_size:
        raise ValueError("{} seeds given for an ensemble of {}".format(len(seeds), cfg.ensemble_size))
    jobs = [(cfg, data.train, data.dev, seed) for seed in seeds]
    if cfg.cores > 1 and len(seeds) > 1:
        cores2use = min(cfg.cores, len(seeds))
        log.info("Training %d members on %d cores", len(seeds), cores2use)
        p = multiprocessing.Pool(cores2use)
        results = p.starmap(train_model, jobs)
        p.close()
        p.join()
    else:
        results = [train_model(*job) for job in jobs]
    return Ensemble(members=[member for member, _ in results], combine=cfg.combine, cfg=cfg)


ABLATION_GRID = ((True, True), (False, True), (True, False), (False, False))


def ablate(cfg, data, train_fn=None):
    """
    Train and evaluate the four token/sentence feature combinations.
    Args:
        cfg: TrainConfig
        data: corpus.Split of EncodedExample encoded with both feature groups
        train_fn: callable(cfg, data) -> Ensemble, defaults to train_ensemble
    Returns:
        table: dict with the per configuration results ("grid") and the yes/no cells per
               feature group ("table"), the other group held on
    """
    if train_fn is None:
        train_fn = train_ensemble
    grid = []
    for use_token, use_sentence in ABLATION_GRID:
        feature_cfg = feats.FeatureConfig(use_token_feats=use_token, use_sentence_feats=use_sentence)
        sub = corpus.Split(train=[feats.select_features(e, feature_cfg) for e in data.train],
                           dev=[feats.select_features(e, feature_cfg) for e in data.dev], seed=data.seed)
        sub_cfg = replace(cfg, use_token_feats=use_token, use_sentence_feats=use_sentence)
        report = evaluate(train_fn(sub_cfg, sub), sub.dev, batch_size=cfg.batch_size)
        log.info("Ablation token=%s sentence=%s: dev F1 %.4f", use_token, use_sentence, report.f1)
        grid.append({"token": use_token, "sentence": use_sentence, "f1": report.f1,
                     "accuracy": report.accuracy, "precision": report.precision, "recall": report.recall})
    f1 = {(g["token"], g["sentence"]): g["f1"] for g in grid}
    return {"grid": grid,
            "table": {"token": {"yes": f1[(True, True)], "no": f1[(False, True)]},
                      "sentence": {"yes": f1[(True, True)], "no": f1[(True, False)]}}}


def format_ablation_table(table):
    """Plain-text F1 table, one row per feature group."""
    rows = [("Binary features", "yes", "no")]
    for group, label in (("token", "Token-level"), ("sentence", "Sentence-level")):
        cells = table["table"][group]
        rows.append((label, "{:.4f}".format(cells["yes"]), "{:.4f}".format(cells["no"])))
    width = max(len(r[0]) for r in rows)
    return "\n".join("{:<{w}}  {:>6}  {:>6}".format(*r, w=width) for r in rows) + "\n"


def save_ensemble(ens, vocab, model_dir, tokens):
    """
    Write model/ensemble.json, model/vocab.json and one model/member_<i>.json per member.
    Args:
        ens: Ensemble
        vocab: embed.Vocabulary
        model_dir: str, output directory, created if needed
        tokens: iterable of str, tokens whose pre-trained vectors are kept in vocab.json
    Returns:
        nothing
    """
    os.makedirs(model_dir, exist_ok=True)
    entries = []
    for i, member in enumerate(ens.members):
        name = "member_{}.json".format(i)
        extra = {"best_epoch": member.best_epoch}
        if member.embeddings:
            extra["embeddings"] = {t: v.tolist() for t, v in member.embeddings.items()}
        neural.save_checkpoint(member.params, os.path.join(model_dir, name), member.seed, extra=extra)
        entries.append({"file": name, "seed": member.seed, "best_epoch": member.best_epoch})
    core_utils.write_json({"combine": ens.combine, "threshold": ens.threshold,
                           "config": ens.cfg.to_dict() if ens.cfg else None, "members": entries},
                          os.path.join(model_dir, "ensemble.json"))
    embed.save_vocab(vocab, os.path.join(model_dir, "vocab.json"), tokens)


def load_ensemble(model_dir, table=None):
    """
    Read an ensemble written by save_ensemble.
    Args:
        model_dir: str
        table: embed.EmbeddingTable or None, pre-trained vectors for tokens unseen at training time
    Returns:
        ens: Ensemble
        vocab: embed.Vocabulary
    """
    doc = core_utils.read_json(os.path.join(model_dir, "ensemble.json"))
    members = []
    for entry in doc["members"]:
        params, seed, extra = neural.load_checkpoint(os.path.join(model_dir, entry["file"]))
        embeddings = None
        if "embeddings" in extra:
            embeddings = {t: np.array(v, dtype=np.float64) for t, v in extra["embeddings"].items()}
        members.append(Member(params, seed, best_epoch=extra.get("best_epoch", 0), embeddings=embeddings))
    cfg = TrainConfig.from_dict(doc["config"]) if doc.get("config") else None
    vocab = embed.load_vocab(os.path.join(model_dir, "vocab.json"), table=table)
    return Ensemble(members=members, combine=doc["combine"], threshold=doc["threshold"], cfg=cfg), vocab


def member_histories(ens) -> Dict[int, list]:
    """Training history of every member, keyed by seed."""
    return {member.seed: member.history for member in ens.members}
