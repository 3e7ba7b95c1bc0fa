"""
py.test module for unit testing the textprep module: cleaning and tokenization of tweets.
"""

import json
import pytest

from . import textprep_utils
from irony_detection_tool import corpus
from irony_detection_tool import textprep

# HEADER
__author__ = "IDT team"
__version__ = "1.1"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed
# Aug 2026 - Version 1.1: tests for the remove_not switch

GOLDEN_CASES = textprep_utils.read_golden_cases()


@pytest.mark.parametrize("case", GOLDEN_CASES, ids=[c["raw"] for c in GOLDEN_CASES])
def test_golden_preprocess(case):
    cleaned = textprep.preprocess(case["raw"])
    assert cleaned == case["cleaned"], "preprocess({!r}) gave {!r}".format(case["raw"], cleaned)


@pytest.mark.parametrize("case", GOLDEN_CASES, ids=[c["raw"] for c in GOLDEN_CASES])
def test_golden_tokenize(case):
    seq = textprep.tokenize(textprep.preprocess(case["raw"]))
    assert list(seq.tokens) == case["tokens"], "tokenize({!r}) gave {}".format(case["raw"], seq.tokens)


@pytest.mark.parametrize("case", GOLDEN_CASES, ids=[c["raw"] for c in GOLDEN_CASES])
def test_token_invariants(case):
    cleaned = textprep.preprocess(case["raw"])
    tokens = textprep.tokenize(cleaned).tokens
    assert textprep_utils.is_whitespace_normalized(cleaned)
    assert textprep_utils.has_no_trigger_token(tokens)
    assert textprep_utils.has_no_user_or_url(tokens)
    assert textprep_utils.case_is_preserved(case["raw"], tokens)
    assert all(t and not any(c.isspace() for c in t) for t in tokens)


def test_preprocess_is_idempotent():
    for case in GOLDEN_CASES:
        once = textprep.preprocess(case["raw"])
        assert textprep.preprocess(once) == once


def test_exposed_matches_are_removed():
    # once "not" is gone the username is no longer glued to a word
    assert textprep.preprocess("so not@john funny") == "so funny"


def test_keep_not():
    assert textprep.preprocess("this is not #not funny", remove_not=False) == "this is not funny"
    assert textprep.preprocess("this is not #not funny", remove_not=True) == "this is funny"
    tokens = textprep.tokenize(textprep.preprocess("not my irony", remove_not=False)).tokens
    assert tokens == ("not", "my")
    assert textprep_utils.has_no_trigger_token(tokens, remove_not=False)


def test_empty_after_preprocess():
    assert textprep.preprocess("#not @someone http://t.co/x") == ""
    seq = textprep.tokenize("", source_id=9)
    assert len(seq) == 0 and seq.source_id == 9


def test_clean_and_tokenize_keeps_source_id():
    seq = textprep.clean_and_tokenize(corpus.Tweet(id=42, label=1, raw="Love it #sarcasm"))
    assert seq.source_id == 42 and seq.tokens == ("Love", "it")


def test_token_seq_json_line():
    seq = textprep.TokenSeq(tokens=("café", ":)"), source_id=3)
    assert json.loads(seq.to_json(label=1)) == {"id": 3, "label": 1, "tokens": ["café", ":)"]}
    assert "café" in seq.to_json()


def test_emoticon_inventory():
    emoticons = textprep.load_emoticons()
    assert ":)" in emoticons and "<3" in emoticons
    assert [len(e) for e in emoticons] == sorted((len(e) for e in emoticons), reverse=True)


def test_custom_emoticons(tmp_path):
    path = tmp_path / "emo.txt"
    path.write_text("# comment\n:)\n", encoding="utf-8")
    emoticons = textprep.load_emoticons(str(path))
    assert emoticons == (":)",)
    # without "<3" in the inventory the heart falls apart
    assert textprep.tokenize("love <3", emoticons=emoticons).tokens == ("love", "<", "3")
