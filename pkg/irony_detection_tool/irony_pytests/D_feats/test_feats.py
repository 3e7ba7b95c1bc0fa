"""
py.test module for unit testing the feats module: binary features and the input encoding.
"""

import numpy as np
import pytest

from . import feats_utils
from irony_detection_tool import embed
from irony_detection_tool import feats
from irony_detection_tool import textprep
from irony_detection_tool.irony_pytests.auxiliary_code import synthetic_data

# HEADER
__author__ = "IDT team"
__version__ = "1.1"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed
# Jul 2026 - Version 1.1: select_features tests

BOTH = feats.FeatureConfig(use_token_feats=True, use_sentence_feats=True)
NONE = feats.FeatureConfig(use_token_feats=False, use_sentence_feats=False)


@pytest.fixture(scope="module")
def vocab(tmp_path_factory):
    path = str(tmp_path_factory.mktemp("glove") / "g25.txt")
    rows = synthetic_data.glove_rows(["i", "love", "mondays", "the"], dim=25, seed=2)
    table = embed.load_glove(synthetic_data.write_glove(path, rows), dim=25)
    return embed.build_vocab([textprep.TokenSeq(("I", "love", "love", "Mondays", "#not2day"))], table, seed=1)


@pytest.mark.parametrize("token, expected", [
    ("Hello", [0, 0, 1, 0]),
    ("ABC3", [0, 1, 0, 1]),
    ("hello", [1, 0, 0, 0]),
    ("I", [0, 1, 1, 0]),
    ("...", [0, 0, 0, 0]),
    ("2day", [1, 0, 0, 1]),
    ("McDonald", [0, 0, 0, 0]),
    (":D", [0, 1, 0, 0]),
])
def test_word_features(token, expected):
    assert feats.word_features(token).tolist() == expected


def test_word_features_empty_token():
    with pytest.raises(ValueError):
        feats.word_features("")


@pytest.mark.parametrize("tokens, expected", [
    (["I", "love", "love"], [1, 1, 1]),
    (["Hello", "World"], [0, 0, 0]),
    (["LOL", "LOL"], [0, 1, 1]),
    ([], [0, 0, 0]),
])
def test_sentence_features(tokens, expected):
    assert feats.sentence_features(tokens).tolist() == expected


def test_widths():
    assert BOTH.width(25) == 32
    assert feats.FeatureConfig(True, False).width(25) == 29
    assert feats.FeatureConfig(False, True).width(50) == 53
    assert NONE.width(100) == 100


def test_feature_config_names():
    assert feats.FeatureConfig.from_names(["token", " Sentence "]) == BOTH
    assert feats.FeatureConfig.from_names([]) == NONE
    assert feats.FeatureConfig.from_names(["sentence"]).names() == ["sentence"]
    with pytest.raises(ValueError):
        feats.FeatureConfig.from_names(["emoji"])


def test_encode_layout(vocab):
    seq = textprep.TokenSeq(("I", "love", "love"), source_id=5)
    ex = feats.encode(seq, vocab, BOTH, label=1)
    assert ex.x.shape == (3, 32) and ex.length == 3 and ex.y == 1 and ex.source_id == 5
    assert np.array_equal(ex.x[1, :25], embed.lookup(vocab, "love"))
    assert ex.x[0, 25:29].tolist() == [0, 1, 1, 0]
    assert ex.x[0, 29:].tolist() == [1, 1, 1]
    assert feats_utils.is_binary(ex.x[:, 25:])
    assert feats_utils.rows_are_identical(ex.x[:, 29:])


def test_encode_without_features_is_lookup(vocab):
    ex = feats.encode(textprep.TokenSeq(("Mondays", "zzz")), vocab, NONE)
    assert ex.x.shape == (2, 25)
    assert np.array_equal(ex.x, np.vstack([embed.lookup(vocab, "Mondays"), vocab.unk]))


def test_encode_empty_sequence(vocab):
    with pytest.raises(ValueError):
        feats.encode(textprep.TokenSeq(()), vocab, BOTH)


def test_encoded_input_is_read_only(vocab):
    ex = feats.encode(textprep.TokenSeq(("love",)), vocab, BOTH)
    with pytest.raises(ValueError):
        ex.x[0, 0] = 1.0


@pytest.mark.parametrize("narrow", [
    feats.FeatureConfig(True, False), feats.FeatureConfig(False, True), NONE,
])
def test_select_features_matches_encode(vocab, narrow):
    seq = textprep.TokenSeq(("I", "love", "love", "Mondays"))
    full = feats.encode(seq, vocab, BOTH, label=0)
    assert np.array_equal(feats.select_features(full, narrow).x, feats.encode(seq, vocab, narrow, label=0).x)
    assert feats.select_features(full, narrow).features == narrow


def test_select_features_cannot_widen(vocab):
    ex = feats.encode(textprep.TokenSeq(("love",)), vocab, NONE)
    with pytest.raises(ValueError):
        feats.select_features(ex, BOTH)
