"""
Verification functions for the metrics module.
"""

# HEADER
__author__ = "IDT team"
__version__ = "1.0"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed


# VERIFICATION FUNCTIONS

def counts_add_up(report, n):
    """True if the confusion counts sum to the number of examples."""
    return report.tp + report.fp + report.fn + report.tn == n == report.n


def scores_in_range(report):
    return all(0.0 <= v <= 1.0 for v in (report.accuracy, report.precision, report.recall, report.f1))


def f1_between_precision_and_recall(report):
    """The harmonic mean never leaves the [min, max] interval of its arguments."""
    if report.precision == 0 or report.recall == 0:
        return report.f1 == 0.0
    return min(report.precision, report.recall) - 1e-15 <= report.f1 <= max(report.precision, report.recall) + 1e-15
