"""
Verification functions for the corpus module.
"""

# HEADER
__author__ = "IDT team"
__version__ = "1.0"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed


# VERIFICATION FUNCTIONS

def is_partition(tweets, data):
    """
    Check that the train and development halves hold every tweet exactly once.
    Args:
        tweets: list of Tweet
        data: Split
    Returns:
        result: boolean
    """
    ids = sorted(t.id for t in tweets)
    split_ids = sorted(t.id for t in data.train + data.dev)
    return ids == split_ids and not {t.id for t in data.train} & {t.id for t in data.dev}


def same_split(a, b):
    """True if both splits have the same tweets in the same order."""
    return [t.id for t in a.train] == [t.id for t in b.train] and [t.id for t in a.dev] == [t.id for t in b.dev]


def label_ratio(tweets):
    return sum(t.label for t in tweets) / len(tweets)
