"""
Helpers and verification functions for the command line tests.
"""

import os
import json

# HEADER
__author__ = "IDT team"
__version__ = "1.0"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed

TRAIN_OUTPUT = ("run.json", "IDT_train.log", "history.json", "metrics.json", "member_metrics.json",
                os.path.join("model", "ensemble.json"), os.path.join("model", "vocab.json"))


def tiny_train_args(data, embeddings, output_dir, *extra):
    """A train command small enough for a unit test."""
    return ["train", "--data", data, "--embeddings", embeddings, "--dim", "25", "--hidden", "3",
            "--ensemble", "2", "--max-epochs", "2", "--patience", "1", "--lr", "0.01",
            "--output_dir", output_dir] + list(extra)


def read_bytes(path):
    with open(path, "rb") as f:
        return f.read()


def read_json(path):
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


# VERIFICATION FUNCTIONS

def missing_files(output_dir, names):
    """
    List the expected output files that were not written.
    Args:
        output_dir: str
        names: iterable of str, paths relative to output_dir
    Returns:
        list of str
    """
    return [name for name in names if not os.path.isfile(os.path.join(output_dir, name))]


def same_bytes(path_a, path_b):
    return read_bytes(path_a) == read_bytes(path_b)
