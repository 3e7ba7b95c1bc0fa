"""
Bidirectional LSTM classifier written directly on numpy, in double precision.

    i = s(W_i x + U_i h + b_i)    f = s(W_f x + U_f h + b_f)    o = s(W_o x + U_o h + b_o)
    g = tanh(W_g x + U_g h + b_g)  c_t = f * c_prev + i * g      h_t = o * tanh(c_t)

The tweet representation is r = h_fwd(L) ++ h_bwd(1); in training r is masked by inverted
dropout, and p = s(w_out . r + b_out) is scored with binary cross-entropy. backward returns
the exact gradients of that computation (backpropagation through time).

Tensor names used in checkpoints and gradients:
    fwd.W_i ... fwd.W_g  (H x k)   fwd.U_i ... fwd.U_g  (H x H)   fwd.b_i ... fwd.b_g  (H)
    bwd.*                (same)    w_out (2H)                     b_out (scalar)
"""

import math
import logging
from collections import OrderedDict

import numpy as np
from scipy.special import expit

from irony_detection_tool import core_utils

# HEADER
__author__ = "IDT team"
__version__ = "1.5"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed
# Feb 2026 - Version 1.1: gradients of the inputs are returned too (embedding fine-tuning)
# Apr 2026 - Version 1.2: padded batch encoder for evaluation
# Jun 2026 - Version 1.3: JSON checkpoints
# Sep 2026 - Version 1.4: sigmoid through scipy expit, no more overflow warnings on saturated gates
# Oct 2026 - Version 1.5: loss clamped on the gold class probability, summed gradients keep the inputs

log = logging.getLogger(__name__)

GATES = ("i", "f", "o", "g")
DIRECTIONS = ("fwd", "bwd")
EPS = 1e-12
FORGET_BIAS = 1.0
CHECKPOINT_FORMAT = "idt-bilstm-checkpoint"


def tensor_names():
    """Names of all the tensors of a model, in checkpoint order."""
    names = []
    for d in DIRECTIONS:
        for kind in ("W", "U", "b"):
            names += ["{}.{}_{}".format(d, kind, g) for g in GATES]
    return names + ["w_out", "b_out"]


def expected_shapes(input_dim, hidden_dim):
    shapes = OrderedDict()
    for d in DIRECTIONS:
        for g in GATES:
            shapes["{}.W_{}".format(d, g)] = (hidden_dim, input_dim)
        for g in GATES:
            shapes["{}.U_{}".format(d, g)] = (hidden_dim, hidden_dim)
        for g in GATES:
            shapes["{}.b_{}".format(d, g)] = (hidden_dim,)
    shapes["w_out"] = (2 * hidden_dim,)
    shapes["b_out"] = ()
    return shapes


class ModelParams:
    """All the weights of the classifier."""

    def __init__(self, input_dim, hidden_dim, dropout_p, tensors):
        if input_dim < 1 or hidden_dim < 1:
            raise ValueError("input_dim and hidden_dim must be positive, got {} and {}".format(input_dim, hidden_dim))
        if not 0.0 <= dropout_p < 1.0:
            raise ValueError("dropout_p must be in [0, 1), got {}".format(dropout_p))
        shapes = expected_shapes(input_dim, hidden_dim)
        if set(tensors) != set(shapes):
            raise ValueError("tensor names do not match the architecture: missing {}, unexpected {}".format(
                sorted(set(shapes) - set(tensors)), sorted(set(tensors) - set(shapes))))
        self.input_dim = input_dim
        self.hidden_dim = hidden_dim
        self.dropout_p = float(dropout_p)
        self.tensors = OrderedDict()
        for name, shape in shapes.items():
            arr = np.array(tensors[name], dtype=np.float64)
            if arr.shape != shape:
                raise ValueError("tensor {} has shape {}, expected {}".format(name, arr.shape, shape))
            if not np.all(np.isfinite(arr)):
                raise ValueError("tensor {} has non-finite values".format(name))
            self.tensors[name] = arr

    def direction(self, d):
        """Dict of the gate tensors of one direction, keyed W_i, U_i, b_i, ..."""
        prefix = d + "."
        return {name[len(prefix):]: arr for name, arr in self.tensors.items() if name.startswith(prefix)}

    def copy(self):
        return ModelParams(self.input_dim, self.hidden_dim, self.dropout_p,
                           {name: arr.copy() for name, arr in self.tensors.items()})

    def loss(self, x, y):
        """Eval-mode loss, the function grad_check differentiates numerically."""
        return bce_loss(forward(self, x, mode="eval"), y)

    def loss_and_gradients(self, x, y):
        return backward(self, x, y)


class Gradients:
    """Shape tree congruent with ModelParams.tensors, plus the gradient of the inputs."""

    def __init__(self, tensors, inputs=None):
        self.tensors = tensors
        self.inputs = inputs

    def __getitem__(self, name):
        return self.tensors[name]

    def items(self):
        return self.tensors.items()

    def scale(self, factor):
        return Gradients(OrderedDict((n, g * factor) for n, g in self.tensors.items()),
                         None if self.inputs is None else self.inputs * factor)

    def add(self, other):
        """
        Sum of two gradients. The input gradients are summed when both carry one of the same
        shape; gradients of sequences with different lengths have no sum, so inputs is None.
        """
        inputs = None
        if self.inputs is not None and other.inputs is not None and self.inputs.shape == other.inputs.shape:
            inputs = self.inputs + other.inputs
        return Gradients(OrderedDict((n, g + other.tensors[n]) for n, g in self.tensors.items()), inputs)


def init_params(input_dim, hidden_dim, dropout_p=0.1, seed=1):
    """
    Random initialization: weights uniform in [-1/sqrt(H), 1/sqrt(H)], biases 0, forget-gate bias 1.
    Args:
        input_dim: int, k
        hidden_dim: int, H
        dropout_p: float, dropout probability on the representation
        seed: int, non-negative
    Returns:
        ModelParams
    """
    rng = np.random.default_rng(seed)
    s = 1.0 / math.sqrt(hidden_dim)
    tensors = {}
    for name, shape in expected_shapes(input_dim, hidden_dim).items():
        if name.endswith("b_f"):
            tensors[name] = np.full(shape, FORGET_BIAS)
        elif ".b_" in name or name == "b_out":
            tensors[name] = np.zeros(shape)
        else:
            tensors[name] = rng.uniform(-s, s, size=shape)
    return ModelParams(input_dim, hidden_dim, dropout_p, tensors)


def _check_finite(name, value):
    if not np.all(np.isfinite(value)):
        raise FloatingPointError("non-finite values in " + name)


def _gates(p, x_t, h_prev):
    i = expit(p["W_i"] @ x_t + p["U_i"] @ h_prev + p["b_i"])
    f = expit(p["W_f"] @ x_t + p["U_f"] @ h_prev + p["b_f"])
    o = expit(p["W_o"] @ x_t + p["U_o"] @ h_prev + p["b_o"])
    g = np.tanh(p["W_g"] @ x_t + p["U_g"] @ h_prev + p["b_g"])
    return i, f, o, g


def lstm_step(p, x_t, h_prev, c_prev):
    """
    One LSTM time step.
    Args:
        p: dict of direction tensors (ModelParams.direction)
        x_t: numpy array (k,)
        h_prev, c_prev: numpy arrays (H,)
    Returns:
        h_t, c_t: numpy arrays (H,)
    """
    hidden_dim, input_dim = p["W_i"].shape
    if np.shape(x_t) != (input_dim,) or np.shape(h_prev) != (hidden_dim,) or np.shape(c_prev) != (hidden_dim,):
        raise ValueError("lstm_step shape mismatch: x {}, h {}, c {} for k={}, H={}".format(
            np.shape(x_t), np.shape(h_prev), np.shape(c_prev), input_dim, hidden_dim))
    i, f, o, g = _gates(p, x_t, h_prev)
    c_t = f * c_prev + i * g
    h_t = o * np.tanh(c_t)
    return h_t, c_t


def _run_direction(p, xs):
    """Run one direction over the rows of xs from a zero state, keeping what backward needs."""
    hidden_dim = p["W_i"].shape[0]
    h = np.zeros(hidden_dim)
    c = np.zeros(hidden_dim)
    cache = []
    for x_t in xs:
        i, f, o, g = _gates(p, x_t, h)
        c_new = f * c + i * g
        tc = np.tanh(c_new)
        h_new = o * tc
        cache.append((x_t, h, c, i, f, o, g, tc))
        h, c = h_new, c_new
    return h, cache


def _check_input(params, x):
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2 or x.shape[1] != params.input_dim:
        raise ValueError("expected an (L, {}) input matrix, got shape {}".format(params.input_dim, x.shape))
    if x.shape[0] == 0:
        raise ValueError("cannot encode an empty sequence (L = 0)")
    return x


def _encode(params, x):
    x = _check_input(params, x)
    h_fwd, cache_fwd = _run_direction(params.direction("fwd"), x)
    h_bwd, cache_bwd = _run_direction(params.direction("bwd"), x[::-1])
    return np.concatenate([h_fwd, h_bwd]), cache_fwd, cache_bwd


def bilstm_encode(params, x):
    """
    Tweet representation: last forward state ++ last backward state (the one at t=1).
    Args:
        params: ModelParams
        x: numpy array (L, k), L >= 1
    Returns:
        numpy array (2H,)
    """
    r, _, _ = _encode(params, x)
    return r


def bilstm_encode_batch(params, X, lengths):
    """
    Padded and masked batch version of bilstm_encode.
    Args:
        params: ModelParams
        X: numpy array (B, T, k), rows past each length are padding
        lengths: sequence of int, true lengths, 1 <= length <= T
    Returns:
        numpy array (B, 2H)
    """
    X = np.asarray(X, dtype=np.float64)
    lengths = np.asarray(lengths)
    if X.ndim != 3 or X.shape[2] != params.input_dim or lengths.shape != (X.shape[0],):
        raise ValueError("expected (B, T, {}) inputs with B lengths, got {} and {}".format(
            params.input_dim, X.shape, lengths.shape))
    if np.any(lengths < 1) or np.any(lengths > X.shape[1]):
        raise ValueError("sequence lengths must be in [1, {}]".format(X.shape[1]))
    batch, steps = X.shape[0], X.shape[1]
    states = []
    for d, order in (("fwd", range(steps)), ("bwd", reversed(range(steps)))):
        p = params.direction(d)
        h = np.zeros((batch, params.hidden_dim))
        c = np.zeros((batch, params.hidden_dim))
        for t in order:
            x_t = X[:, t, :]
            i = expit(x_t @ p["W_i"].T + h @ p["U_i"].T + p["b_i"])
            f = expit(x_t @ p["W_f"].T + h @ p["U_f"].T + p["b_f"])
            o = expit(x_t @ p["W_o"].T + h @ p["U_o"].T + p["b_o"])
            g = np.tanh(x_t @ p["W_g"].T + h @ p["U_g"].T + p["b_g"])
            c_new = f * c + i * g
            h_new = o * np.tanh(c_new)
            # padded steps leave the state untouched
            live = (t < lengths)[:, None]
            h = np.where(live, h_new, h)
            c = np.where(live, c_new, c)
        states.append(h)
    return np.concatenate(states, axis=1)


def draw_dropout_mask(params, rng):
    """
    Inverted dropout mask for the 2H representation.
    Args:
        params: ModelParams
        rng: numpy Generator
    Returns:
        numpy array (2H,) of 0 and 1/(1-p)
    """
    size = 2 * params.hidden_dim
    if params.dropout_p == 0.0:
        return np.ones(size)
    keep = rng.random(size) >= params.dropout_p
    return keep / (1.0 - params.dropout_p)


def _check_mask(params, mask):
    if mask is None:
        return np.ones(2 * params.hidden_dim)
    mask = np.asarray(mask, dtype=np.float64)
    if mask.shape != (2 * params.hidden_dim,):
        raise ValueError("dropout mask has shape {}, expected ({},)".format(mask.shape, 2 * params.hidden_dim))
    return mask


def output_probability(params, r):
    """s(w_out . r + b_out) for an already encoded (and possibly masked) representation."""
    return expit(r @ params.tensors["w_out"] + params.tensors["b_out"])


def forward(params, x, mode="eval", rng=None, mask=None):
    """
    Probability that the tweet is ironic.
    Args:
        params: ModelParams
        x: numpy array (L, k)
        mode: "train" (dropout on the representation) or "eval"
        rng: numpy Generator, draws the dropout mask in train mode when mask is None
        mask: numpy array (2H,) or None, explicit dropout mask for train mode
    Returns:
        p: float
    """
    r = bilstm_encode(params, x)
    if mode == "train":
        if mask is None:
            if rng is None:
                raise ValueError("train mode needs a random generator or an explicit dropout mask")
            mask = draw_dropout_mask(params, rng)
        r = r * _check_mask(params, mask)
    elif mode != "eval":
        raise ValueError("mode must be 'train' or 'eval', got '{}'".format(mode))
    p = float(output_probability(params, r))
    _check_finite("output probability", p)
    return p


def bce_loss(p, y):
    """
    Binary cross-entropy with the probability of the gold class clamped to at least EPS.
    Args:
        p: float, predicted probability
        y: int, gold label in {0, 1}
    Returns:
        float, non-negative
    """
    if y == 1:
        return -math.log(max(float(p), EPS))
    return -math.log(max(1.0 - float(p), EPS))


def _output_delta(p, y):
    """dloss/dz of the output logit; zero where the clamp of bce_loss is active."""
    gold = p if y == 1 else 1.0 - p
    return p - y if gold > EPS else 0.0


def _direction_backward(p, cache, dh_last):
    """BPTT through one direction, from the gradient of its last hidden state."""
    grads = {name: np.zeros_like(arr) for name, arr in p.items()}
    dxs = np.zeros((len(cache), p["W_i"].shape[1]))
    dh = dh_last
    dc = np.zeros_like(dh_last)
    for t in reversed(range(len(cache))):
        x_t, h_prev, c_prev, i, f, o, g, tc = cache[t]
        do = dh * tc
        dc = dc + dh * o * (1.0 - tc ** 2)
        da = {"i": dc * g * i * (1.0 - i),
              "f": dc * c_prev * f * (1.0 - f),
              "o": do * o * (1.0 - o),
              "g": dc * i * (1.0 - g ** 2)}
        dh = np.zeros_like(dh)
        for gate, da_gate in da.items():
            grads["W_" + gate] += np.outer(da_gate, x_t)
            grads["U_" + gate] += np.outer(da_gate, h_prev)
            grads["b_" + gate] += da_gate
            dh += p["U_" + gate].T @ da_gate
            dxs[t] += p["W_" + gate].T @ da_gate
        dc = dc * f
    return grads, dxs


def backward(params, x, y, dropout_mask=None):
    """
    Loss and exact gradients for one example.
    Args:
        params: ModelParams
        x: numpy array (L, k)
        y: int, gold label
        dropout_mask: numpy array (2H,) or None (no dropout), the mask of the matching train-mode forward
    Returns:
        loss: float
        grads: Gradients
    """
    mask = _check_mask(params, dropout_mask)
    r, cache_fwd, cache_bwd = _encode(params, x)
    r_masked = r * mask
    p = float(output_probability(params, r_masked))
    loss = bce_loss(p, y)
    dz = _output_delta(p, y)

    hidden = params.hidden_dim
    dr = dz * params.tensors["w_out"] * mask
    grads_fwd, dx_fwd = _direction_backward(params.direction("fwd"), cache_fwd, dr[:hidden])
    grads_bwd, dx_bwd = _direction_backward(params.direction("bwd"), cache_bwd, dr[hidden:])

    tensors = OrderedDict()
    for name in params.tensors:
        d, _, short = name.partition(".")
        if d == "fwd":
            tensors[name] = grads_fwd[short]
        elif d == "bwd":
            tensors[name] = grads_bwd[short]
    tensors["w_out"] = dz * r_masked
    tensors["b_out"] = np.array(dz)
    inputs = dx_fwd + dx_bwd[::-1]

    _check_finite("loss", loss)
    for name, grad in tensors.items():
        _check_finite("gradient of " + name, grad)
    return loss, Gradients(tensors, inputs)


class LinearProbe:
    """Logistic regression on the mean token vector; the linear harness for gradient checks."""

    def __init__(self, input_dim, seed=0):
        rng = np.random.default_rng(seed)
        self.input_dim = input_dim
        self.tensors = OrderedDict([("w", rng.uniform(-1.0, 1.0, size=input_dim)), ("b", np.array(0.0))])

    def probability(self, x):
        return float(expit(np.mean(x, axis=0) @ self.tensors["w"] + self.tensors["b"]))

    def loss(self, x, y):
        return bce_loss(self.probability(x), y)

    def loss_and_gradients(self, x, y):
        mean = np.mean(x, axis=0)
        p = self.probability(x)
        dz = _output_delta(p, y)
        return bce_loss(p, y), Gradients(OrderedDict([("w", dz * mean), ("b", np.array(dz))]))


def save_checkpoint(params, path, seed, extra=None):
    """
    Write a model as JSON.
    Args:
        params: ModelParams
        path: str, output file
        seed: int, seed the model was trained with
        extra: dict or None, additional JSON content (e.g. best epoch, tuned embeddings)
    Returns:
        nothing
    """
    doc = {"format": CHECKPOINT_FORMAT, "version": 1,
           "input_dim": params.input_dim, "hidden_dim": params.hidden_dim,
           "dropout_p": params.dropout_p, "seed": seed,
           "tensors": {name: arr.tolist() for name, arr in params.tensors.items()}}
    if extra:
        doc["extra"] = extra
    core_utils.write_json(doc, path)


def load_checkpoint(path):
    """
    Read a JSON checkpoint.
    Args:
        path: str
    Returns:
        params: ModelParams
        seed: int
        extra: dict
    """
    doc = core_utils.read_json(path)
    if doc.get("format") != CHECKPOINT_FORMAT:
        raise ValueError("{} is not a model checkpoint".format(path))
    params = ModelParams(doc["input_dim"], doc["hidden_dim"], doc["dropout_p"], doc["tensors"])
    return params, doc["seed"], doc.get("extra", {})
