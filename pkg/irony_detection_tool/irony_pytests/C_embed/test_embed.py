"""
py.test module for unit testing the embed module: GloVe loading, the low frequency sphere
and the vocabulary.
"""

import logging
import warnings

import numpy as np
import pytest

from . import embed_utils
from irony_detection_tool import embed
from irony_detection_tool import textprep
from irony_detection_tool.irony_pytests.auxiliary_code import synthetic_data

# HEADER
__author__ = "IDT team"
__version__ = "1.1"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed
# Jun 2026 - Version 1.1: vocabulary save and load tests


@pytest.fixture
def glove_20(tmp_path):
    """20 entries, the last two (0,0) and (2,0): centroid (1,0), radius 1."""
    rows = [("w{}".format(i), [float(i), float(-i)]) for i in range(18)]
    rows += [("w18", [0.0, 0.0]), ("w19", [2.0, 0.0])]
    return synthetic_data.write_glove(str(tmp_path / "glove20.txt"), rows)


@pytest.fixture
def small_table(tmp_path):
    rows = synthetic_data.glove_rows(["the", "love", "mondays"], dim=5, seed=3, n_filler=27)
    return embed.load_glove(synthetic_data.write_glove(str(tmp_path / "g.txt"), rows), dim=5)


def seqs(*token_lists):
    return [textprep.TokenSeq(tokens=tuple(t)) for t in token_lists]


def test_low_freq_prior(glove_20):
    table = embed.load_glove(glove_20, dim=2)
    assert table.size == 20 and len(table.entries) == 20
    assert np.allclose(table.centroid, [1.0, 0.0], atol=1e-12)
    assert abs(table.radius - 1.0) < 1e-12
    assert table.low_freq.shape == (2, 2)


def test_single_low_freq_vector(tmp_path):
    rows = [("w{}".format(i), [float(i), 1.0, 2.0]) for i in range(10)]
    table = embed.load_glove(synthetic_data.write_glove(str(tmp_path / "g.txt"), rows), dim=3)
    assert np.array_equal(table.centroid, [9.0, 1.0, 2.0]) and table.radius == 0.0
    assert np.array_equal(embed.sample_oov_vector(table.centroid, table.radius, 5), table.centroid)


def test_restrict_to_keeps_the_prior(glove_20):
    full = embed.load_glove(glove_20, dim=2)
    small = embed.load_glove(glove_20, dim=2, restrict_to={"w3"})
    assert list(small.entries) == ["w3"]
    assert np.array_equal(small.centroid, full.centroid) and small.radius == full.radius
    assert small.size == full.size


def test_wrong_dimension(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("the 0.1 0.2\n", encoding="utf-8")
    with pytest.raises(ValueError) as e:
        embed.load_glove(str(path), dim=3)
    assert "line 1" in str(e.value)


def test_non_numeric_component(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("the 0.1 0.2\nlove 0.3 abc\n", encoding="utf-8")
    with pytest.raises(ValueError) as e:
        embed.load_glove(str(path), dim=2)
    assert "line 2" in str(e.value)


def test_missing_and_empty_files(tmp_path):
    with pytest.raises(FileNotFoundError):
        embed.load_glove(str(tmp_path / "none.txt"), dim=2)
    (tmp_path / "empty.txt").write_text("", encoding="utf-8")
    with pytest.raises(ValueError):
        embed.load_glove(str(tmp_path / "empty.txt"), dim=2)


def test_duplicate_token_keeps_first(tmp_path, caplog):
    rows = [("a", [1.0, 1.0]), ("b", [2.0, 2.0]), ("a", [3.0, 3.0])]
    path = synthetic_data.write_glove(str(tmp_path / "g.txt"), rows)
    with caplog.at_level(logging.WARNING, logger="irony_detection_tool.embed"):
        table = embed.load_glove(path, dim=2)
    assert np.array_equal(table.entries["a"], [1.0, 1.0])
    assert table.size == 2
    assert any("duplicate token 'a'" in r.getMessage() for r in caplog.records)


def test_sample_on_unit_sphere():
    vec = embed.sample_oov_vector(np.zeros(25), 1.0, 0)
    assert abs(np.linalg.norm(vec) - 1.0) < 1e-9


def test_samples_stay_on_sphere():
    rng = np.random.default_rng(11)
    for s in range(1000):
        centroid = rng.normal(size=8)
        radius = float(rng.uniform(0.0, 5.0))
        assert embed_utils.on_sphere(embed.sample_oov_vector(centroid, radius, s), centroid, radius)


def test_sample_directions_are_uniform():
    centroid = np.full(25, 0.3)
    vectors = [embed.sample_oov_vector(centroid, 2.0, [7, s]) for s in range(1000)]
    assert embed_utils.mean_direction_norm(vectors, centroid) < 0.1


def test_sample_negative_radius():
    with pytest.raises(ValueError):
        embed.sample_oov_vector(np.zeros(3), -1.0, 0)


def test_build_vocab_lookup(small_table):
    corpus = seqs(["the", "#blessed", "xq9z"], ["#blessed", "the"], ["#blessed"])
    vocab = embed.build_vocab(corpus, small_table, min_freq=2, seed=1)
    assert embed.lookup(vocab, "the") is small_table.entries["the"]
    blessed = embed.lookup(vocab, "#blessed")
    assert "#blessed" in vocab.oov and "xq9z" not in vocab.oov
    assert embed_utils.on_sphere(blessed, small_table.centroid, small_table.radius)
    assert embed.lookup(vocab, "xq9z") is vocab.unk
    assert embed.lookup(vocab, "never-seen") is vocab.unk
    assert not np.array_equal(blessed, vocab.unk)
    assert embed.oov_stats(vocab, corpus) == {"known": 1, "oov": 1, "unk": 1}


def test_build_vocab_is_deterministic(small_table):
    corpus = seqs(["#blessed", "yay"], ["#blessed", "yay"])
    a = embed.build_vocab(corpus, small_table, min_freq=2, seed=4)
    b = embed.build_vocab(list(reversed(corpus)), small_table, min_freq=2, seed=4)
    c = embed.build_vocab(corpus, small_table, min_freq=2, seed=5)
    assert np.array_equal(a.oov["#blessed"], b.oov["#blessed"]) and np.array_equal(a.unk, b.unk)
    assert not np.array_equal(a.oov["#blessed"], c.oov["#blessed"])
    # every token draws from its own stream
    assert not np.array_equal(a.oov["#blessed"], a.oov["yay"])


def test_lookup_is_stable(small_table):
    vocab = embed.build_vocab(seqs(["a", "a"]), small_table, min_freq=2, seed=1)
    assert embed.lookup(vocab, "a") is embed.lookup(vocab, "a")
    assert embed.token_hash("a") == embed.token_hash("a") != embed.token_hash("b")


def test_build_vocab_arguments(small_table):
    with pytest.raises(ValueError):
        embed.build_vocab(seqs(["a"]), small_table, min_freq=0)
    with pytest.raises(ValueError):
        embed.build_vocab(seqs(["a"]), small_table, seed=-2)


def test_min_freq_one_gives_every_oov_a_vector(small_table):
    vocab = embed.build_vocab(seqs(["once", "the"]), small_table, min_freq=1, seed=1)
    assert "once" in vocab.oov


def test_save_and_load_vocab(tmp_path, small_table):
    corpus = seqs(["the", "#blessed", "xq9z"], ["#blessed"])
    vocab = embed.build_vocab(corpus, small_table, min_freq=2, seed=1)
    path = str(tmp_path / "vocab.json")
    embed.save_vocab(vocab, path, tokens=["the", "#blessed", "xq9z"])
    loaded = embed.load_vocab(path)
    assert list(loaded.known) == ["the"]
    for token in ("the", "#blessed", "xq9z"):
        assert np.array_equal(embed.lookup(loaded, token), embed.lookup(vocab, token))
    assert loaded.radius == vocab.radius and loaded.seed == 1
    with_table = embed.load_vocab(path, table=small_table)
    assert np.array_equal(embed.lookup(with_table, "love"), small_table.entries["love"])


def test_load_vocab_dimension_mismatch(tmp_path, small_table, glove_20):
    vocab = embed.build_vocab(seqs(["the"]), small_table, seed=1)
    path = str(tmp_path / "vocab.json")
    embed.save_vocab(vocab, path, tokens=["the"])
    with pytest.raises(ValueError):
        embed.load_vocab(path, table=embed.load_glove(glove_20, dim=2))


def test_real_glove_file(glove_file):
    """Soft check on the GloVe Twitter file: 100-dimensional, positive low frequency radius."""
    table = embed.load_glove(glove_file, dim=100, restrict_to={"the", "love", "#not"})
    msg = " * GloVe: {} entries, low frequency radius {:.4f}".format(table.size, table.radius)
    print(msg)
    if not table.radius > 0:
        warnings.warn("low frequency radius is not positive: " + msg)
