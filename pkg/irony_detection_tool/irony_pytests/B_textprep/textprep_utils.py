"""
Verification functions for the textprep module.
"""

import os
import json

from irony_detection_tool import textprep

# HEADER
__author__ = "IDT team"
__version__ = "1.0"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed

GOLDEN_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden_tokenization.json")


def read_golden_cases():
    with open(GOLDEN_FILE, "r", encoding="utf-8") as gf:
        return json.load(gf)


# VERIFICATION FUNCTIONS

def has_no_trigger_token(tokens, remove_not=True):
    """
    Check that no token is a trigger word or its hashtag form, in any case.
    Args:
        tokens: sequence of str
        remove_not: boolean, whether the bare word not counts as a trigger
    Returns:
        result: boolean
    """
    triggers = {w for w in textprep.TRIGGER_WORDS if remove_not or w != "not"}
    hashtags = {"#" + w for w in textprep.TRIGGER_WORDS}
    return not any(t.lower() in triggers or t.lower() in hashtags for t in tokens)


def has_no_user_or_url(tokens):
    """True if no token looks like a username or a url."""
    return not any(t.startswith("@") or t.lower().startswith(("http", "www.")) for t in tokens)


def case_is_preserved(raw, tokens):
    """Every token occurs verbatim (same case) in the raw text."""
    return all(t in raw for t in tokens)


def is_whitespace_normalized(cleaned):
    return cleaned == cleaned.strip() and "  " not in cleaned and "\t" not in cleaned and "\n" not in cleaned
