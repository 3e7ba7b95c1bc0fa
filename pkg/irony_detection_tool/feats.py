"""
Binary linguistic features and their fusion with the token embeddings.

Word-level bits (per token):
    1. fully lowercased   2. fully uppercased   3. only the first letter capitalized
    4. contains a digit
Sentence-level bits (per tweet, repeated on every token row):
    1. some token fully lowercased   2. some token fully uppercased
    3. some token appears more than once
"Fully" cased is judged over the cased characters only and needs at least one of them.

Row layout of an encoded example: [embedding (d) | word bits (4) | sentence bits (3)],
absent groups are simply left out.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from irony_detection_tool import embed

# HEADER
__author__ = "IDT team"
__version__ = "1.1"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed
# Jul 2026 - Version 1.1: added select_features for the ablation grid

N_WORD_FEATS = 4
N_SENTENCE_FEATS = 3


@dataclass(frozen=True)
class FeatureConfig:
    use_token_feats: bool = True
    use_sentence_feats: bool = True

    def width(self, dim):
        """Fused row width for embeddings of size dim."""
        return dim + N_WORD_FEATS * self.use_token_feats + N_SENTENCE_FEATS * self.use_sentence_feats

    @classmethod
    def from_names(cls, names):
        """Build from a list like ["token", "sentence"] (any subset)."""
        names = [n.strip().lower() for n in names if n.strip()]
        unknown = set(names) - {"token", "sentence"}
        if unknown:
            raise ValueError("unknown feature group(s): " + ", ".join(sorted(unknown)))
        return cls(use_token_feats="token" in names, use_sentence_feats="sentence" in names)

    def names(self):
        return [n for n, on in (("token", self.use_token_feats), ("sentence", self.use_sentence_feats)) if on]


@dataclass(frozen=True)
class EncodedExample:
    x: np.ndarray
    y: Optional[int]
    length: int
    tokens: Tuple[str, ...]
    source_id: Optional[int]
    dim: int
    features: FeatureConfig


def _cased(token):
    return [c for c in token if c.islower() or c.isupper()]


def _is_lower(token):
    cased = _cased(token)
    return bool(cased) and all(c.islower() for c in cased)


def _is_upper(token):
    cased = _cased(token)
    return bool(cased) and all(c.isupper() for c in cased)


def word_features(token):
    """
    The four word-level bits of a token.
    Args:
        token: str, non-empty
    Returns:
        numpy array of 4 floats in {0, 1}
    """
    if not token:
        raise ValueError("word_features needs a non-empty token")
    first_cap = token[0].isupper() and all(c.islower() for c in _cased(token[1:]))
    has_digit = any(c.isdigit() for c in token)
    return np.array([_is_lower(token), _is_upper(token), first_cap, has_digit], dtype=np.float64)


def sentence_features(tokens):
    """
    The three sentence-level bits of a token sequence.
    Args:
        tokens: TokenSeq or sequence of str
    Returns:
        numpy array of 3 floats in {0, 1}
    """
    tokens = list(tokens)
    repeated = any(n >= 2 for n in Counter(tokens).values())
    return np.array([any(_is_lower(t) for t in tokens), any(_is_upper(t) for t in tokens), repeated],
                    dtype=np.float64)


def encode(tokens, vocab, cfg, label=None):
    """
    Build the fused input matrix of one tweet.
    Args:
        tokens: TokenSeq, non-empty
        vocab: embed.Vocabulary
        cfg: FeatureConfig
        label: int or None, gold label carried along
    Returns:
        EncodedExample with x of shape (L, cfg.width(vocab.dim))
    """
    token_list = tuple(tokens)
    if not token_list:
        raise ValueError("cannot encode an empty token sequence (tweet {})".format(getattr(tokens, "source_id", None)))
    rows = [[embed.lookup(vocab, t)] for t in token_list]
    if cfg.use_token_feats:
        for row, t in zip(rows, token_list):
            row.append(word_features(t))
    if cfg.use_sentence_feats:
        sent = sentence_features(token_list)
        for row in rows:
            row.append(sent)
    x = np.vstack([np.concatenate(row) for row in rows])
    x.flags.writeable = False
    return EncodedExample(x=x, y=label, length=len(token_list), tokens=token_list,
                          source_id=getattr(tokens, "source_id", None), dim=vocab.dim, features=cfg)


def select_features(example, cfg):
    """
    Derive the example a narrower feature configuration would have produced.
    Args:
        example: EncodedExample
        cfg: FeatureConfig, must not enable a group the example lacks
    Returns:
        EncodedExample
    """
    have = example.features
    if (cfg.use_token_feats and not have.use_token_feats) or (cfg.use_sentence_feats and not have.use_sentence_feats):
        raise ValueError("cannot add feature groups by slicing: {} -> {}".format(have.names(), cfg.names()))
    columns = list(range(example.dim))
    offset = example.dim
    if have.use_token_feats:
        if cfg.use_token_feats:
            columns += range(offset, offset + N_WORD_FEATS)
        offset += N_WORD_FEATS
    if have.use_sentence_feats and cfg.use_sentence_feats:
        columns += range(offset, offset + N_SENTENCE_FEATS)
    x = np.ascontiguousarray(example.x[:, columns])
    x.flags.writeable = False
    return EncodedExample(x=x, y=example.y, length=example.length, tokens=example.tokens,
                          source_id=example.source_id, dim=example.dim, features=cfg)
