"""
Adam optimizer, finite-difference gradient check and the early-stopping controller.

Example usage:
    from irony_detection_tool import neural, optim
    params = neural.init_params(106, 150)
    adam = optim.AdamState.for_params(params, lr=0.0001)
    loss, grads = neural.backward(params, example.x, example.y)
    optim.adam_step(adam, params, grads)

    stopper = optim.EarlyStopState(patience=5)
    decision = optim.early_stop_update(stopper, epoch=1, dev_f1=0.61)
"""

import math
import logging
from collections import namedtuple
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

# HEADER
__author__ = "IDT team"
__version__ = "1.2"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed
# Feb 2026 - Version 1.1: adam_step accepts plain dictionaries of arrays
# Jul 2026 - Version 1.2: grads may cover a subset of the parameters (fine-tuned embedding rows)

log = logging.getLogger(__name__)

IMPROVEMENT_MARGIN = 1e-9
RELATIVE_ERROR_FLOOR = 1e-8

StopDecision = namedtuple("StopDecision", ["action", "best_epoch", "improved"])


def _tensors(obj):
    """Named arrays of a model, gradient object or plain mapping."""
    return obj.tensors if hasattr(obj, "tensors") else obj


@dataclass
class AdamState:
    m: Dict[str, np.ndarray]
    v: Dict[str, np.ndarray]
    t: int = 0
    lr: float = 0.0001
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("Adam step counter must be non-negative, got {}".format(self.t))
        if self.lr <= 0 or self.eps <= 0 or not 0 < self.beta1 < 1 or not 0 < self.beta2 < 1:
            raise ValueError("invalid Adam hyperparameters: lr={}, beta1={}, beta2={}, eps={}".format(
                self.lr, self.beta1, self.beta2, self.eps))

    @classmethod
    def for_params(cls, params, lr=0.0001, beta1=0.9, beta2=0.999, eps=1e-8):
        """Zero moments congruent with params (ModelParams or a mapping of arrays)."""
        tensors = _tensors(params)
        return cls(m={n: np.zeros_like(a, dtype=np.float64) for n, a in tensors.items()},
                   v={n: np.zeros_like(a, dtype=np.float64) for n, a in tensors.items()},
                   lr=lr, beta1=beta1, beta2=beta2, eps=eps)


def adam_step(state, params, grads):
    """
    One Adam update, in place.
    Args:
        state: AdamState
        params: ModelParams or dict of writable numpy arrays
        grads: Gradients or dict of numpy arrays; parameters with no gradient are left untouched
    Returns:
        params, state (the same objects, updated)
    """
    param_tensors = _tensors(params)
    grad_tensors = _tensors(grads)
    for name, g in grad_tensors.items():
        if name not in param_tensors or name not in state.m:
            raise ValueError("gradient for unknown parameter '{}'".format(name))
        if np.shape(g) != np.shape(param_tensors[name]) or np.shape(g) != state.m[name].shape:
            raise ValueError("gradient of '{}' has shape {}, parameter has {}".format(
                name, np.shape(g), np.shape(param_tensors[name])))
        if not np.all(np.isfinite(g)):
            raise FloatingPointError("non-finite gradient for '{}'".format(name))

    state.t += 1
    correction1 = 1.0 - state.beta1 ** state.t
    correction2 = 1.0 - state.beta2 ** state.t
    for name, g in grad_tensors.items():
        state.m[name] = state.beta1 * state.m[name] + (1.0 - state.beta1) * g
        state.v[name] = state.beta2 * state.v[name] + (1.0 - state.beta2) * g * g
        m_hat = state.m[name] / correction1
        v_hat = state.v[name] / correction2
        param_tensors[name] -= state.lr * m_hat / (np.sqrt(v_hat) + state.eps)
    return params, state


def grad_check(model, example, step=1e-5):
    """
    Compare analytic gradients with central finite differences over every parameter slot.
    Args:
        model: object with .tensors, loss(x, y) and loss_and_gradients(x, y)
               (neural.ModelParams, whose loss runs without dropout, or neural.LinearProbe)
        example: EncodedExample, or anything with x and y attributes
        step: float, finite-difference step h
    Returns:
        max_err: float, maximum of |a - n| / max(|a|, |n|, 1e-8)
    """
    if step <= 0:
        raise ValueError("finite-difference step must be positive, got {}".format(step))
    x, y = example.x, example.y
    _, grads = model.loss_and_gradients(x, y)
    grads = _tensors(grads)
    max_err = 0.0
    for name, arr in model.tensors.items():
        for idx in np.ndindex(arr.shape):
            original = arr[idx]
            arr[idx] = original + step
            loss_plus = model.loss(x, y)
            arr[idx] = original - step
            loss_minus = model.loss(x, y)
            arr[idx] = original
            numeric = (loss_plus - loss_minus) / (2.0 * step)
            analytic = float(grads[name][idx])
            err = abs(analytic - numeric) / max(abs(analytic), abs(numeric), RELATIVE_ERROR_FLOOR)
            if err > max_err:
                max_err = err
    log.debug("Gradient check with step %g: max relative error %.3e", step, max_err)
    return max_err


@dataclass
class EarlyStopState:
    patience: int = 5
    best_metric: float = -math.inf
    best_epoch: int = 0
    epochs_since_best: int = 0
    history: list = field(default_factory=list)

    def __post_init__(self):
        if self.patience < 1:
            raise ValueError("patience must be at least 1, got {}".format(self.patience))


def early_stop_update(state, epoch, dev_f1):
    """
    Record the development F1 of an epoch and decide whether to keep training.
    Args:
        state: EarlyStopState, updated in place
        epoch: int, 1-based epoch number
        dev_f1: float in [0, 1]
    Returns:
        StopDecision(action="continue" or "stop", best_epoch, improved)
    """
    if not 0.0 <= dev_f1 <= 1.0:
        raise ValueError("development F1 must be in [0, 1], got {}".format(dev_f1))
    state.history.append(dev_f1)
    improved = dev_f1 > state.best_metric + IMPROVEMENT_MARGIN
    if improved:
        state.best_metric = dev_f1
        state.best_epoch = epoch
        state.epochs_since_best = 0
    else:
        state.epochs_since_best += 1
    if state.epochs_since_best >= state.patience:
        log.info("Early stop at epoch %d: no improvement for %d epochs, best epoch %d (F1=%.4f)",
                 epoch, state.epochs_since_best, state.best_epoch, state.best_metric)
        return StopDecision("stop", state.best_epoch, improved)
    return StopDecision("continue", state.best_epoch, improved)
