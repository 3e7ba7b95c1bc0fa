"""
Verification functions for the neural module, including a slow element-by-element LSTM
used as an independent reference for the vectorized code.
"""

import math

import numpy as np

# HEADER
__author__ = "IDT team"
__version__ = "1.0"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed


def _sigmoid(z):
    return 1.0 / (1.0 + math.exp(-z))


def reference_lstm_step(p, x_t, h_prev, c_prev):
    """
    Gate equations written out one unit at a time, with python floats.
    Args:
        p: dict of direction tensors keyed W_i, U_i, b_i, ...
        x_t, h_prev, c_prev: sequences of float
    Returns:
        h_t, c_t: lists of float
    """
    hidden, k = p["W_i"].shape
    pre = {}
    for gate in ("i", "f", "o", "g"):
        pre[gate] = [sum(p["W_" + gate][u, j] * x_t[j] for j in range(k))
                     + sum(p["U_" + gate][u, j] * h_prev[j] for j in range(hidden))
                     + p["b_" + gate][u] for u in range(hidden)]
    h_t, c_t = [], []
    for u in range(hidden):
        i, f, o = _sigmoid(pre["i"][u]), _sigmoid(pre["f"][u]), _sigmoid(pre["o"][u])
        g = math.tanh(pre["g"][u])
        c = f * c_prev[u] + i * g
        c_t.append(c)
        h_t.append(o * math.tanh(c))
    return h_t, c_t


def reference_encode(params, x):
    """Last forward state followed by the last backward state."""
    hidden = params.hidden_dim
    states = []
    for d, rows in (("fwd", list(x)), ("bwd", list(x)[::-1])):
        p = params.direction(d)
        h, c = [0.0] * hidden, [0.0] * hidden
        for x_t in rows:
            h, c = reference_lstm_step(p, x_t, h, c)
        states += h
    return np.array(states)


def with_tied_directions(params):
    """Copy of params whose backward direction uses the forward weights."""
    tied = params.copy()
    for name in list(tied.tensors):
        if name.startswith("bwd."):
            tied.tensors[name] = tied.tensors["fwd." + name[4:]].copy()
    return tied


# VERIFICATION FUNCTIONS

def max_abs_diff(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def all_gradients_below(grads, bound):
    """True if every gradient component is smaller than bound in absolute value."""
    return all(float(np.max(np.abs(g))) < bound for _, g in grads.items())
