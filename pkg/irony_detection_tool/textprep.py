"""
Tweet cleaning and tokenization.

preprocess removes the topic trigger words (and their hashtag forms), usernames and
urls, and normalizes whitespace. tokenize splits the cleaned text into tokens while
preserving case: punctuation is split from word cores, emoticons from the bundled
inventory stay whole, the hashtag marker stays attached and runs of one punctuation
character ("!!!", "...") form a single token.

Example usage:
    from irony_detection_tool import textprep
    seq = textprep.tokenize(textprep.preprocess("@john this is #not funny... :)"))
    seq.tokens   # ('this', 'is', 'funny', '...', ':)')
"""

import os
import re
import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from irony_detection_tool.data import DATADIR

# HEADER
__author__ = "IDT team"
__version__ = "1.4"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed
# Feb 2026 - Version 1.1: preprocess iterates until nothing else can be removed
# May 2026 - Version 1.2: emoticon inventory moved to a bundled data file
# Aug 2026 - Version 1.3: added remove_not switch
# Oct 2026 - Version 1.4: runs of "@" in usernames, emoticons attached to words

log = logging.getLogger(__name__)

TRIGGER_WORDS = ("not", "sarc", "sarcasm", "irony", "ironic", "sarcastic", "sarcast")

URL_RE = re.compile(r"https?://\S*|(?<!\w)www\.\S*", re.IGNORECASE)
MENTION_RE = re.compile(r"(?<!\w)@+\w\S*")


def _trigger_re(words, hashtag):
    alternation = "|".join(sorted(words, key=len, reverse=True))
    marker = "#" if hashtag else ""
    return re.compile(r"(?<!\w)" + marker + r"(?:" + alternation + r")(?!\w)", re.IGNORECASE)


HASHTAG_TRIGGER_RE = _trigger_re(TRIGGER_WORDS, hashtag=True)
BARE_TRIGGER_RE = _trigger_re(TRIGGER_WORDS, hashtag=False)
BARE_TRIGGER_KEEP_NOT_RE = _trigger_re([w for w in TRIGGER_WORDS if w != "not"], hashtag=False)


@dataclass(frozen=True)
class TokenSeq:
    tokens: Tuple[str, ...]
    source_id: Optional[int] = None

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, item):
        return self.tokens[item]

    def to_json(self, label=None):
        """One line of the prep output."""
        return json.dumps({"id": self.source_id, "label": label, "tokens": list(self.tokens)},
                          ensure_ascii=False)


@lru_cache(maxsize=None)
def load_emoticons(path=None):
    """
    Read the emoticon inventory.
    Args:
        path: str or None, defaults to the bundled data/emoticons.txt
    Returns:
        tuple of emoticons sorted longest first
    """
    if path is None:
        path = os.path.join(DATADIR, "emoticons.txt")
    if not os.path.isfile(path):
        raise FileNotFoundError(path)
    with open(path, "r", encoding="utf-8") as ef:
        emoticons = {line.strip() for line in ef if line.strip() and not line.startswith("#")}
    return tuple(sorted(emoticons, key=lambda e: (-len(e), e)))


def _remove_once(text, remove_not):
    text = URL_RE.sub(" ", text)
    text = MENTION_RE.sub(" ", text)
    text = HASHTAG_TRIGGER_RE.sub("", text)
    if remove_not:
        text = BARE_TRIGGER_RE.sub("", text)
    else:
        text = BARE_TRIGGER_KEEP_NOT_RE.sub("", text)
    return " ".join(text.split())


def preprocess(raw, remove_not=True):
    """
    Remove trigger words and hashtags, usernames and urls; collapse whitespace.
    Args:
        raw: str, tweet text
        remove_not: boolean, also remove the bare word "not"
    Returns:
        cleaned: str, possibly empty
    """
    cleaned = " ".join(raw.split())
    # a removal can expose a new match (e.g. "not@john"), so repeat to a fixed point
    while True:
        reduced = _remove_once(cleaned, remove_not)
        if reduced == cleaned:
            return cleaned
        cleaned = reduced


def _is_word_char(c):
    return c.isalnum() or c == "_"


def _split_punct(segment, emoticons):
    """Split a run of non-word characters into emoticons and same-character runs."""
    tokens = []
    i = 0
    while i < len(segment):
        for emo in emoticons:
            if segment.startswith(emo, i):
                tokens.append(emo)
                i += len(emo)
                break
        else:
            j = i
            while j < len(segment) and segment[j] == segment[i]:
                j += 1
            tokens.append(segment[i:j])
            i = j
    return tokens


def _peel_emoticons(chunk, emoticons, emoticon_set):
    """
    Split emoticons that hold word characters ("<3", ":D") off the end of a chunk, e.g. "love<3".
    Only emoticons starting with a non-word character are split, so "AND:" stays one word.
    Returns:
        (rest of the chunk, list of emoticons in text order)
    """
    trailing = []
    while chunk and chunk not in emoticon_set:
        for emo in emoticons:
            if (len(emo) < len(chunk) and chunk.endswith(emo) and not _is_word_char(emo[0])
                    and any(_is_word_char(c) for c in emo)):
                trailing.insert(0, emo)
                chunk = chunk[:-len(emo)]
                break
        else:
            break
    return chunk, trailing


def _chunk_tokens(chunk, emoticons, emoticon_set):
    if chunk in emoticon_set:
        return [chunk]
    word_positions = [i for i, c in enumerate(chunk) if _is_word_char(c)]
    if not word_positions:
        return _split_punct(chunk, emoticons)
    start, end = word_positions[0], word_positions[-1] + 1
    if start > 0 and chunk[start - 1] == "#":
        start -= 1
    return _split_punct(chunk[:start], emoticons) + [chunk[start:end]] + _split_punct(chunk[end:], emoticons)


def tokenize(cleaned, source_id=None, emoticons=None):
    """
    Tokenize a cleaned tweet.
    Args:
        cleaned: str, output of preprocess
        source_id: int or None, id of the tweet the tokens come from
        emoticons: tuple or None, emoticon inventory (defaults to the bundled one)
    Returns:
        TokenSeq
    """
    if emoticons is None:
        emoticons = load_emoticons()
    emoticon_set = set(emoticons)
    tokens = []
    for chunk in cleaned.split():
        chunk, trailing = _peel_emoticons(chunk, emoticons, emoticon_set)
        tokens += _chunk_tokens(chunk, emoticons, emoticon_set) + trailing
    # a lone "@" is what is left of a username
    tokens = [t for t in tokens if t.strip("@")]
    return TokenSeq(tokens=tuple(tokens), source_id=source_id)


def clean_and_tokenize(tweet, remove_not=True):
    """
    preprocess then tokenize one Tweet.
    Args:
        tweet: corpus.Tweet
        remove_not: boolean, see preprocess
    Returns:
        TokenSeq with source_id set to the tweet id
    """
    return tokenize(preprocess(tweet.raw, remove_not=remove_not), source_id=tweet.id)
