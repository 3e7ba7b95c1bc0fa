"""
Pre-trained embedding handling: GloVe text files, the task vocabulary and the
initialization of out-of-vocabulary vectors.

Frequent out-of-vocabulary tokens get their own vector, sampled uniformly on the surface
of a sphere centered in the centroid of the least frequent 10% of the GloVe vocabulary
(the last 10% of the file lines, as GloVe files are sorted by descending frequency), with
radius the mean distance of those vectors to the centroid. Rare ones share the UNK vector,
itself sampled once on the same sphere.

Example usage:
    from irony_detection_tool import embed
    table = embed.load_glove("glove.twitter.27B.100d.txt", dim=100)
    vocab = embed.build_vocab(token_seqs, table, min_freq=2, seed=1)
    vec = embed.lookup(vocab, "#blessed")
"""

import os
import hashlib
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from irony_detection_tool import core_utils

# HEADER
__author__ = "IDT team"
__version__ = "1.2"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed
# Mar 2026 - Version 1.1: restrict_to option, the full 1.2M token table does not need to sit in memory
# Jun 2026 - Version 1.2: vocabulary can be saved next to the checkpoints

log = logging.getLogger(__name__)

ALLOWED_DIMS = (25, 50, 100)
LOW_FREQ_FRACTION_DENOMINATOR = 10
# token hashes are 64-bit, so this stream can never collide with a token
UNK_STREAM = 2 ** 64


@dataclass(frozen=True)
class EmbeddingTable:
    dim: int
    entries: Dict[str, np.ndarray]
    centroid: np.ndarray
    radius: float
    size: int
    low_freq: np.ndarray = field(repr=False)

    def __contains__(self, token):
        return token in self.entries


@dataclass(frozen=True)
class Vocabulary:
    dim: int
    known: Dict[str, np.ndarray] = field(repr=False)
    oov: Dict[str, np.ndarray] = field(repr=False)
    unk: np.ndarray
    min_freq: int
    centroid: np.ndarray
    radius: float
    seed: int


def _read_only(vec):
    vec.flags.writeable = False
    return vec


def _glove_records(path, dim):
    """Yield (line_number, token, values) for every line, checking the dimension."""
    with open(path, "r", encoding="utf-8", errors="strict") as gf:
        for line_number, line in enumerate(gf, start=1):
            parts = line.rstrip().split(" ")
            if len(parts) == 1 and not parts[0]:
                continue
            if len(parts) - 1 != dim:
                raise ValueError("{}: line {}: expected {} values, found {}".format(
                    path, line_number, dim, len(parts) - 1))
            yield line_number, parts[0], parts[1:]


def _to_vector(values, path, line_number):
    try:
        return np.array(values, dtype=np.float64)
    except ValueError:
        raise ValueError("{}: line {}: non-numeric vector component".format(path, line_number))


def low_freq_prior(vectors):
    """
    Centroid and radius of a set of vectors.
    Args:
        vectors: numpy array (n, d)
    Returns:
        centroid: numpy array (d,), mean of the vectors
        radius: float, mean Euclidean distance of the vectors to the centroid
    """
    centroid = vectors.mean(axis=0)
    radius = float(np.linalg.norm(vectors - centroid, axis=1).mean())
    return centroid, radius


def load_glove(path, dim, restrict_to=None):
    """
    Parse a GloVe text file.
    Args:
        path: str, GloVe file, one "token f1 ... fd" entry per line
        dim: int, expected dimensionality
        restrict_to: set of str or None, if given only these tokens are kept in entries;
                     the low frequency prior always uses the whole file
    Returns:
        EmbeddingTable
    """
    if not os.path.isfile(path):
        raise FileNotFoundError(path)
    if dim < 1:
        raise ValueError("embedding dimension must be positive, got {}".format(dim))

    # first pass: dimension checks, duplicates and vocabulary size
    seen = set()
    for line_number, token, _ in _glove_records(path, dim):
        if token in seen:
            log.warning("%s: line %d: duplicate token '%s', keeping the first vector", path, line_number, token)
            continue
        seen.add(token)
    size = len(seen)
    del seen
    if size == 0:
        raise ValueError("{}: no embedding entries found".format(path))
    n_low = -(-size // LOW_FREQ_FRACTION_DENOMINATOR)

    # second pass: keep the requested entries and the low frequency tail
    entries, low_freq = {}, []
    kept = set()
    position = 0
    for line_number, token, values in _glove_records(path, dim):
        if token in kept:
            continue
        kept.add(token)
        keep = restrict_to is None or token in restrict_to
        in_low = position >= size - n_low
        if keep or in_low:
            vec = _read_only(_to_vector(values, path, line_number))
            if keep:
                entries[token] = vec
            if in_low:
                low_freq.append(vec)
        position += 1

    low_freq = np.vstack(low_freq)
    centroid, radius = low_freq_prior(low_freq)
    log.info("Loaded %d GloVe entries (dim=%d, %d kept), low frequency set of %d: radius=%.6f",
             size, dim, len(entries), n_low, radius)
    return EmbeddingTable(dim=dim, entries=entries, centroid=_read_only(centroid), radius=radius,
                          size=size, low_freq=_read_only(low_freq))


def sample_oov_vector(centroid, radius, rng_seed):
    """
    Sample a point uniformly on the sphere of the given center and radius.
    Args:
        centroid: numpy array (d,)
        radius: float, non-negative
        rng_seed: int or sequence of int, seed of the generator
    Returns:
        numpy array (d,)
    """
    if radius < 0:
        raise ValueError("sphere radius must be non-negative, got {}".format(radius))
    centroid = np.asarray(centroid, dtype=np.float64)
    rng = np.random.default_rng(rng_seed)
    direction = rng.standard_normal(centroid.shape[0])
    norm = np.linalg.norm(direction)
    while norm == 0.0:
        direction = rng.standard_normal(centroid.shape[0])
        norm = np.linalg.norm(direction)
    return centroid + radius * (direction / norm)


def token_hash(token):
    """Stable 64-bit hash of a token, independent of the interpreter hash seed."""
    return int.from_bytes(hashlib.blake2b(token.encode("utf-8"), digest_size=8).digest(), "big")


def build_vocab(corpus, table, min_freq=2, seed=1):
    """
    Assign a vector to every token type of the corpus.
    Args:
        corpus: iterable of TokenSeq
        table: EmbeddingTable
        min_freq: int, OOV tokens at least this frequent get their own vector
        seed: int, global seed, non-negative
    Returns:
        Vocabulary
    """
    if min_freq < 1:
        raise ValueError("min_freq must be at least 1, got {}".format(min_freq))
    if seed < 0:
        raise ValueError("vocabulary seed must be non-negative, got {}".format(seed))
    counts = Counter(token for seq in corpus for token in seq)
    oov = {}
    for token in sorted(counts):
        if token not in table.entries and counts[token] >= min_freq:
            oov[token] = _read_only(sample_oov_vector(table.centroid, table.radius, [seed, token_hash(token)]))
    unk = _read_only(sample_oov_vector(table.centroid, table.radius, [seed, UNK_STREAM]))
    vocab = Vocabulary(dim=table.dim, known=table.entries, oov=oov, unk=unk, min_freq=min_freq,
                       centroid=table.centroid, radius=table.radius, seed=seed)
    stats = oov_stats(vocab, counts)
    log.info("Vocabulary: %d known, %d sphere-sampled OOV, %d UNK token types",
             stats["known"], stats["oov"], stats["unk"])
    return vocab


def lookup(vocab, token):
    """Vector of a token: pre-trained, else its own OOV vector, else UNK."""
    vec = vocab.known.get(token)
    if vec is not None:
        return vec
    vec = vocab.oov.get(token)
    if vec is not None:
        return vec
    return vocab.unk


def oov_stats(vocab, corpus):
    """
    Count token types by how they are looked up.
    Args:
        vocab: Vocabulary
        corpus: iterable of TokenSeq, or a Counter of tokens
    Returns:
        dict with keys known, oov, unk
    """
    if isinstance(corpus, Counter):
        types = set(corpus)
    else:
        types = {token for seq in corpus for token in seq}
    known = sum(1 for t in types if t in vocab.known)
    oov = sum(1 for t in types if t not in vocab.known and t in vocab.oov)
    return {"known": known, "oov": oov, "unk": len(types) - known - oov}


def save_vocab(vocab, path, tokens):
    """
    Save the vectors a trained model needs.
    Args:
        vocab: Vocabulary
        path: str, output JSON file
        tokens: iterable of str, tokens whose pre-trained vectors are stored
    Returns:
        nothing
    """
    known = {t: vocab.known[t].tolist() for t in sorted(set(tokens)) if t in vocab.known}
    core_utils.write_json({"dim": vocab.dim, "min_freq": vocab.min_freq, "seed": vocab.seed,
                           "centroid": vocab.centroid.tolist(), "radius": vocab.radius,
                           "unk": vocab.unk.tolist(), "known": known,
                           "oov": {t: v.tolist() for t, v in vocab.oov.items()}}, path)


def load_vocab(path, table: Optional[EmbeddingTable] = None):
    """
    Read a saved vocabulary.
    Args:
        path: str, JSON file written by save_vocab
        table: EmbeddingTable or None, pre-trained vectors for tokens unseen at training time
    Returns:
        Vocabulary
    """
    doc = core_utils.read_json(path)
    def as_vec(values):
        return _read_only(np.array(values, dtype=np.float64))

    known = {t: as_vec(v) for t, v in doc["known"].items()}
    oov = {t: as_vec(v) for t, v in doc["oov"].items()}
    if table is not None:
        if table.dim != doc["dim"]:
            raise ValueError("embedding table has dim {} but the vocabulary has dim {}".format(
                table.dim, doc["dim"]))
        for token, vec in table.entries.items():
            if token not in known and token not in oov:
                known[token] = vec
    return Vocabulary(dim=doc["dim"], known=known, oov=oov, unk=as_vec(doc["unk"]), min_freq=doc["min_freq"],
                      centroid=as_vec(doc["centroid"]), radius=doc["radius"], seed=doc["seed"])
