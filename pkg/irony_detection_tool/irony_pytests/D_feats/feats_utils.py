"""
Verification functions for the feats module.
"""

import numpy as np

# HEADER
__author__ = "IDT team"
__version__ = "1.0"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed


# VERIFICATION FUNCTIONS

def is_binary(values):
    """True if every value is 0 or 1."""
    return bool(np.all((np.asarray(values) == 0.0) | (np.asarray(values) == 1.0)))


def rows_are_identical(block):
    """True if all the rows of a 2D block are equal, e.g. the sentence-level columns."""
    return bool(np.all(block == block[0]))
