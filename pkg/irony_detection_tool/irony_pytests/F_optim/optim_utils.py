"""
Verification functions for the optim module.
"""

from irony_detection_tool import optim

# HEADER
__author__ = "IDT team"
__version__ = "1.0"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed


def run_early_stopping(f1_values, patience=5):
    """
    Feed a sequence of development F1 values to a fresh controller.
    Args:
        f1_values: sequence of float, one per epoch
        patience: int
    Returns:
        stop_epoch: int or None, epoch at which the controller said stop
        decisions: list of StopDecision up to the stop
    """
    state = optim.EarlyStopState(patience=patience)
    decisions = []
    for epoch, f1 in enumerate(f1_values, start=1):
        decision = optim.early_stop_update(state, epoch, f1)
        decisions.append(decision)
        if decision.action == "stop":
            return epoch, decisions
    return None, decisions


# VERIFICATION FUNCTIONS

def selects_maximum(f1_values, best_epoch):
    """True if best_epoch is the first epoch reaching the maximum of f1_values."""
    return f1_values[best_epoch - 1] == max(f1_values) and max(f1_values) not in f1_values[:best_epoch - 1]
