"""
Helpers and verification functions for the train module tests.
"""

import numpy as np

from irony_detection_tool import train

# HEADER
__author__ = "IDT team"
__version__ = "1.1"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed
# Jul 2026 - Version 1.1: constant members for the ablation tests


class ConstantMember:
    """Stand-in ensemble member that gives every example the same probability."""

    def __init__(self, probability, seed=0):
        self.probability = probability
        self.seed = seed

    def probabilities(self, examples, batch_size=1):
        return [self.probability] * len(examples)


def constant_ensemble(*probabilities, combine="mean"):
    return train.Ensemble(members=[ConstantMember(p) for p in probabilities], combine=combine)


# VERIFICATION FUNCTIONS

def same_params(a, b):
    """True if two ModelParams hold bit-identical tensors."""
    return list(a.tensors) == list(b.tensors) and all(np.array_equal(t, b.tensors[n]) for n, t in a.tensors.items())


def history_is_consistent(history, patience):
    """
    Check the per epoch records of one training run.
    Args:
        history: list of dict
        patience: int
    Returns:
        result: boolean, epochs are 1..n, metrics are in [0, 1] and the run did not go on
                more than patience epochs after its best one
    """
    if [h["epoch"] for h in history] != list(range(1, len(history) + 1)):
        return False
    if not all(0.0 <= h[key] <= 1.0 for h in history for key in ("dev_accuracy", "dev_precision", "dev_recall",
                                                                   "dev_f1")):
        return False
    f1 = [h["dev_f1"] for h in history]
    best_epoch = f1.index(max(f1)) + 1
    return len(history) - best_epoch <= patience
