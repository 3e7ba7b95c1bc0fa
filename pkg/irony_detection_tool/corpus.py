"""
Loading of the irony shared-task dataset and the deterministic train/development split.

The dataset is a UTF-8 TSV file, optionally headed, with one record per line:
    index<TAB>label<TAB>tweet text
where label is 1 (ironic) or 0 (non-ironic).

Example usage:
    from irony_detection_tool import corpus
    tweets = corpus.load_dataset("SemEval2018-T3-train-taskA.txt", has_header=True)
    data = corpus.split(tweets, ratio=0.8, seed=1)
"""

import os
import math
import logging
from dataclasses import dataclass
from typing import Generic, List, Sequence, TypeVar

import numpy as np

# HEADER
__author__ = "IDT team"
__version__ = "1.1"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed
# Apr 2026 - Version 1.1: added stratified option to split

log = logging.getLogger(__name__)

HEADER_LINE = "Tweet index\tLabel\tTweet text"

T = TypeVar("T")


@dataclass(frozen=True)
class Tweet:
    id: int
    label: int
    raw: str


@dataclass(frozen=True)
class Split(Generic[T]):
    """Train and development halves; holds Tweets or, once encoded, EncodedExamples."""
    train: List[T]
    dev: List[T]
    seed: int


def _parse_record(line, line_number, path):
    fields = line.split("\t")
    if len(fields) != 3:
        raise ValueError("{}: line {}: expected 3 tab-separated fields, found {}".format(
            path, line_number, len(fields)))
    idx, label, raw = fields
    try:
        idx = int(idx)
    except ValueError:
        raise ValueError("{}: line {}: tweet index '{}' is not an integer".format(path, line_number, idx))
    if label not in ("0", "1"):
        raise ValueError("{}: line {}: label '{}' is not binary".format(path, line_number, label))
    if not raw.strip():
        raise ValueError("{}: line {}: empty tweet text".format(path, line_number))
    return Tweet(id=idx, label=int(label), raw=raw)


def load_dataset(path, has_header=True):
    """
    Read the shared-task TSV file.
    Args:
        path: str, dataset file
        has_header: boolean, the first line is a header and is skipped
    Returns:
        tweets: list of Tweet, in file order
    """
    if not os.path.isfile(path):
        raise FileNotFoundError(path)
    tweets = []
    with open(path, "r", encoding="utf-8", newline="") as tf:
        for line_number, line in enumerate(tf, start=1):
            line = line.rstrip("\r\n")
            if line_number == 1 and has_header:
                continue
            if not line:
                # trailing blank lines are not records
                continue
            tweets.append(_parse_record(line, line_number, path))
    stats = corpus_stats(tweets)
    log.info("Loaded %d tweets from %s (%d ironic, %d non-ironic)",
             stats["total"], path, stats["ironic"], stats["non_ironic"])
    return tweets


def save_dataset(tweets, path, header=HEADER_LINE):
    """
    Write tweets back in the dataset TSV format.
    Args:
        tweets: list of Tweet
        path: str, output file
        header: str or None, header line written first
    Returns:
        nothing
    """
    with open(path, "w", encoding="utf-8", newline="") as tf:
        if header is not None:
            tf.write(header + "\n")
        for tweet in tweets:
            tf.write("{}\t{}\t{}\n".format(tweet.id, tweet.label, tweet.raw))


def corpus_stats(tweets):
    """Counts of ironic and non-ironic tweets."""
    ironic = sum(1 for t in tweets if t.label == 1)
    return {"total": len(tweets), "ironic": ironic, "non_ironic": len(tweets) - ironic}


def split(tweets: Sequence[T], ratio=0.8, seed=1, stratified=False) -> Split:
    """
    Deterministic shuffle keyed by seed; the first floor(ratio*N) items are the train half.
    Args:
        tweets: list of Tweet (anything with a label attribute when stratified)
        ratio: float, fraction of the data used for training, 0 < ratio < 1
        seed: int, non-negative shuffle seed
        stratified: boolean, keep the label ratio in both halves
    Returns:
        Split
    """
    if not 0.0 < ratio < 1.0:
        raise ValueError("split ratio must be in (0, 1), got {}".format(ratio))
    if len(tweets) == 0:
        raise ValueError("cannot split an empty dataset")
    if seed < 0:
        raise ValueError("split seed must be non-negative, got {}".format(seed))
    rng = np.random.default_rng(seed)
    if not stratified:
        order = rng.permutation(len(tweets))
        n_train = math.floor(ratio * len(tweets))
        train = [tweets[i] for i in order[:n_train]]
        dev = [tweets[i] for i in order[n_train:]]
    else:
        train, dev = [], []
        for label in sorted({t.label for t in tweets}):
            members = [t for t in tweets if t.label == label]
            order = rng.permutation(len(members))
            n_train = math.floor(ratio * len(members))
            train += [members[i] for i in order[:n_train]]
            dev += [members[i] for i in order[n_train:]]
        # interleave the classes again
        train = [train[i] for i in rng.permutation(len(train))]
        dev = [dev[i] for i in rng.permutation(len(dev))]
    log.info("Split %d items into %d train / %d dev (seed=%d, stratified=%s)",
             len(tweets), len(train), len(dev), seed, stratified)
    return Split(train=train, dev=dev, seed=seed)
