"""
Small synthetic inputs shared by the tests: GloVe-like files, dataset files and separable
encoded examples. Everything is seeded, so the same call always writes the same bytes.
"""

import numpy as np

from irony_detection_tool import corpus
from irony_detection_tool import feats

# HEADER
__author__ = "IDT team"
__version__ = "1.1"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed
# Jul 2026 - Version 1.1: separable sequences for the overfit and ablation tests


IRONIC_TEMPLATES = [
    "I just love {a} on a {b} #not",
    "Great, {a} again... #sarcasm",
    "So happy about the {b} :) #irony",
    "Wow, {a} is EXACTLY what I needed #sarcastic",
    "Nothing beats {a} at 6am #not",
]
NON_IRONIC_TEMPLATES = [
    "Enjoying {a} with friends today",
    "The {b} was really nice this morning",
    "Looking forward to {a} tomorrow",
    "Had a great {b} with the family :)",
    "New photos of the {b} are up",
]
FILLERS_A = ["traffic", "homework", "rain", "meetings", "coffee", "music", "pizza", "football"]
FILLERS_B = ["monday", "weekend", "holiday", "beach", "concert", "trip", "party", "sunset"]


def write_glove(path, rows):
    """
    Write a GloVe text file.
    Args:
        path: str
        rows: list of (token, sequence of float)
    Returns:
        path
    """
    with open(path, "w", encoding="utf-8") as gf:
        for token, values in rows:
            gf.write(token + " " + " ".join(repr(float(v)) for v in values) + "\n")
    return path


def glove_rows(tokens, dim, seed=0, n_filler=30):
    """Random vectors for the given tokens followed by n_filler rare filler entries."""
    rng = np.random.default_rng(seed)
    rows = [(t, rng.normal(0.0, 0.5, dim)) for t in tokens]
    rows += [("filler{}".format(i), rng.normal(0.0, 0.5, dim)) for i in range(n_filler)]
    return rows


def tweets(n=20, seed=0):
    """Balanced list of corpus.Tweet built from the templates, ids 1..n."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(n):
        label = i % 2
        templates = IRONIC_TEMPLATES if label == 1 else NON_IRONIC_TEMPLATES
        text = templates[int(rng.integers(len(templates)))].format(
            a=FILLERS_A[int(rng.integers(len(FILLERS_A)))], b=FILLERS_B[int(rng.integers(len(FILLERS_B)))])
        out.append(corpus.Tweet(id=i + 1, label=label, raw=text))
    return out


def write_dataset(path, n=20, seed=0, header=True):
    """Write a synthetic dataset file and return its tweets."""
    data = tweets(n, seed)
    corpus.save_dataset(data, path, header=corpus.HEADER_LINE if header else None)
    return data


def corpus_glove(path, dim, seed=0):
    """GloVe file covering most of the tokens of the synthetic tweets."""
    words = set(FILLERS_A) | set(FILLERS_B)
    for template in IRONIC_TEMPLATES + NON_IRONIC_TEMPLATES:
        words |= {w.strip(".,:)") for w in template.replace("{a}", " ").replace("{b}", " ").split()}
    words = sorted(w for w in words if w and not w.startswith("#"))
    return write_glove(path, glove_rows(words, dim, seed))


def separable_sequences(n=20, k=4, seed=0, noise=0.3):
    """
    Class conditional random sequences: every row is +1 (ironic) or -1 (non-ironic) on all
    components, plus gaussian noise. Lengths are 3 to 5.
    Returns:
        list of feats.EncodedExample
    """
    rng = np.random.default_rng(seed)
    cfg = feats.FeatureConfig(use_token_feats=False, use_sentence_feats=False)
    examples = []
    for i in range(n):
        label = i % 2
        length = int(rng.integers(3, 6))
        x = (1.0 if label else -1.0) + noise * rng.standard_normal((length, k))
        tokens = tuple("t{}_{}".format(i, j) for j in range(length))
        examples.append(feats.EncodedExample(x=x, y=label, length=length, tokens=tokens, source_id=i + 1,
                                             dim=k, features=cfg))
    return examples


def random_sequence(length, k, seed=0, scale=1.0):
    return scale * np.random.default_rng(seed).standard_normal((length, k))
