"""
py.test module for unit testing the neural module: LSTM cell, bidirectional encoder, output
layer, exact backpropagation through time and checkpoints.
"""

import math
from types import SimpleNamespace

import numpy as np
import pytest

from . import neural_utils
from irony_detection_tool import neural
from irony_detection_tool import optim
from irony_detection_tool.irony_pytests.auxiliary_code import synthetic_data

# HEADER
__author__ = "IDT team"
__version__ = "1.3"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed
# Apr 2026 - Version 1.1: padded batch encoder test
# Jun 2026 - Version 1.2: checkpoint tests
# Oct 2026 - Version 1.3: saturated wrong predictions, summed input gradients


def example(length, k, y, seed=0):
    return SimpleNamespace(x=synthetic_data.random_sequence(length, k, seed=seed), y=y)


def zero_direction(k, hidden):
    p = {}
    for gate in neural.GATES:
        p["W_" + gate] = np.zeros((hidden, k))
        p["U_" + gate] = np.zeros((hidden, hidden))
        p["b_" + gate] = np.zeros(hidden)
    return p


def test_tensor_names_and_shapes():
    shapes = neural.expected_shapes(6, 4)
    assert list(shapes) == neural.tensor_names()
    assert shapes["fwd.W_i"] == (4, 6) and shapes["bwd.U_g"] == (4, 4)
    assert shapes["w_out"] == (8,) and shapes["b_out"] == ()


def test_init_params():
    params = neural.init_params(6, 4, seed=3)
    bound = 1.0 / math.sqrt(4)
    assert np.all(params.tensors["fwd.b_f"] == 1.0) and np.all(params.tensors["bwd.b_f"] == 1.0)
    assert np.all(params.tensors["fwd.b_i"] == 0.0) and float(params.tensors["b_out"]) == 0.0
    assert np.all(np.abs(params.tensors["fwd.W_g"]) <= bound)
    again = neural.init_params(6, 4, seed=3)
    assert all(np.array_equal(a, again.tensors[n]) for n, a in params.tensors.items())


def test_model_params_validation():
    params = neural.init_params(3, 2)
    tensors = dict(params.tensors)
    tensors["fwd.W_i"] = np.full((2, 3), np.nan)
    with pytest.raises(ValueError):
        neural.ModelParams(3, 2, 0.1, tensors)
    del tensors["fwd.W_i"]
    with pytest.raises(ValueError):
        neural.ModelParams(3, 2, 0.1, tensors)
    with pytest.raises(ValueError):
        neural.ModelParams(3, 2, 1.0, params.tensors)


def test_lstm_step_zero_params():
    p = zero_direction(3, 2)
    h, c = neural.lstm_step(p, np.ones(3), np.zeros(2), np.zeros(2))
    assert np.array_equal(h, [0.0, 0.0]) and np.array_equal(c, [0.0, 0.0])
    c_prev = np.array([0.8, -2.0])
    h, c = neural.lstm_step(p, np.ones(3), np.zeros(2), c_prev)
    assert np.allclose(c, 0.5 * c_prev, rtol=0, atol=1e-15)
    assert np.allclose(h, 0.5 * np.tanh(0.5 * c_prev), rtol=0, atol=1e-15)


def test_lstm_step_matches_reference():
    rng = np.random.default_rng(5)
    params = neural.init_params(4, 3, seed=0)
    p = params.direction("fwd")
    x_t, h_prev, c_prev = rng.normal(size=4), rng.normal(size=3), rng.normal(size=3)
    h, c = neural.lstm_step(p, x_t, h_prev, c_prev)
    h_ref, c_ref = neural_utils.reference_lstm_step(p, x_t, h_prev, c_prev)
    assert neural_utils.max_abs_diff(h, h_ref) < 1e-12
    assert neural_utils.max_abs_diff(c, c_ref) < 1e-12


def test_lstm_step_shape_mismatch():
    p = zero_direction(3, 2)
    with pytest.raises(ValueError):
        neural.lstm_step(p, np.ones(4), np.zeros(2), np.zeros(2))
    with pytest.raises(ValueError):
        neural.lstm_step(p, np.ones(3), np.zeros(3), np.zeros(2))


def test_encode_matches_reference():
    params = neural.init_params(5, 3, seed=2)
    x = synthetic_data.random_sequence(4, 5, seed=1)
    assert neural_utils.max_abs_diff(neural.bilstm_encode(params, x), neural_utils.reference_encode(params, x)) < 1e-12


def test_encode_single_token():
    params = neural.init_params(5, 3, seed=2)
    x = synthetic_data.random_sequence(1, 5, seed=1)
    zeros = np.zeros(3)
    h_fwd, _ = neural.lstm_step(params.direction("fwd"), x[0], zeros, zeros)
    h_bwd, _ = neural.lstm_step(params.direction("bwd"), x[0], zeros, zeros)
    assert np.array_equal(neural.bilstm_encode(params, x), np.concatenate([h_fwd, h_bwd]))


def test_encode_empty_sequence():
    params = neural.init_params(5, 3)
    with pytest.raises(ValueError):
        neural.bilstm_encode(params, np.zeros((0, 5)))
    with pytest.raises(ValueError):
        neural.bilstm_encode(params, np.zeros((2, 4)))


def test_tied_directions_swap_under_reversal():
    params = neural_utils.with_tied_directions(neural.init_params(4, 3, seed=9))
    x = synthetic_data.random_sequence(6, 4, seed=4)
    r = neural.bilstm_encode(params, x)
    r_rev = neural.bilstm_encode(params, x[::-1])
    assert np.array_equal(r_rev[:3], r[3:]) and np.array_equal(r_rev[3:], r[:3])


def test_batch_encoder_matches_single():
    params = neural.init_params(4, 3, seed=1)
    lengths = [2, 5, 3]
    seqs = [synthetic_data.random_sequence(n, 4, seed=n) for n in lengths]
    # padding holds garbage on purpose, it must never be read
    X = np.full((3, 5, 4), 7.0)
    for b, s in enumerate(seqs):
        X[b, :len(s)] = s
    batch = neural.bilstm_encode_batch(params, X, lengths)
    for b, s in enumerate(seqs):
        assert neural_utils.max_abs_diff(batch[b], neural.bilstm_encode(params, s)) < 1e-12


def test_batch_encoder_bad_lengths():
    params = neural.init_params(4, 3)
    with pytest.raises(ValueError):
        neural.bilstm_encode_batch(params, np.zeros((2, 3, 4)), [0, 3])
    with pytest.raises(ValueError):
        neural.bilstm_encode_batch(params, np.zeros((2, 3, 4)), [4, 3])


def test_forward_eval_is_deterministic():
    params = neural.init_params(4, 3, dropout_p=0.5, seed=1)
    x = synthetic_data.random_sequence(3, 4)
    assert neural.forward(params, x) == neural.forward(params, x)


def test_forward_without_dropout():
    params = neural.init_params(4, 3, dropout_p=0.0, seed=1)
    x = synthetic_data.random_sequence(3, 4)
    rng = np.random.default_rng(0)
    assert neural.forward(params, x, mode="train", rng=rng) == neural.forward(params, x, mode="eval")


def test_forward_zero_output_layer():
    params = neural.init_params(4, 3, seed=1)
    params.tensors["w_out"][:] = 0.0
    assert neural.forward(params, synthetic_data.random_sequence(3, 4)) == 0.5


def test_forward_arguments():
    params = neural.init_params(4, 3, seed=1)
    x = synthetic_data.random_sequence(3, 4)
    with pytest.raises(ValueError):
        neural.forward(params, x, mode="train")
    with pytest.raises(ValueError):
        neural.forward(params, x, mode="test")
    with pytest.raises(ValueError):
        neural.forward(params, x, mode="train", mask=np.ones(5))


def test_forward_non_finite_input():
    params = neural.init_params(4, 3, seed=1)
    x = np.full((2, 4), np.nan)
    with pytest.raises(FloatingPointError):
        neural.forward(params, x)
    with pytest.raises(FloatingPointError):
        neural.backward(params, x, 1)


def test_bce_loss():
    assert abs(neural.bce_loss(0.5, 1) - math.log(2.0)) < 1e-15
    assert abs(neural.bce_loss(0.0, 1) - (-math.log(neural.EPS))) < 1e-9
    assert abs(neural.bce_loss(1.0, 0) - (-math.log(neural.EPS))) < 1e-9
    assert 0.0 <= neural.bce_loss(1.0, 1) < 1e-11
    assert neural.bce_loss(0.3, 0) == pytest.approx(-math.log(0.7))
    # gold class probability below EPS is clamped exactly
    assert neural.bce_loss(1.0 - 1e-13, 0) == -math.log(neural.EPS)
    assert neural.bce_loss(1e-13, 1) == -math.log(neural.EPS)


@pytest.mark.parametrize("k, hidden, length, y", [
    (6, 4, 3, 1),
    (6, 4, 1, 0),
    (6, 8, 5, 1),
    (12, 4, 5, 0),
    (12, 8, 2, 1),
    (3, 2, 4, 0),
])
def test_backward_matches_finite_differences(k, hidden, length, y):
    params = neural.init_params(k, hidden, seed=k + hidden + length)
    ex = example(length, k, y, seed=length)
    assert optim.grad_check(params, ex, step=1e-5) < 1e-4


def test_backward_with_dropout_mask():
    params = neural.init_params(6, 4, dropout_p=0.5, seed=0)
    ex = example(3, 6, 1)
    mask = neural.draw_dropout_mask(params, np.random.default_rng(1))
    loss, grads = neural.backward(params, ex.x, ex.y, dropout_mask=mask)
    assert loss == pytest.approx(neural.bce_loss(neural.forward(params, ex.x, mode="train", mask=mask), 1), abs=1e-14)
    r = neural.bilstm_encode(params, ex.x) * mask
    p = float(neural.output_probability(params, r))
    assert np.allclose(grads["w_out"], (p - 1) * r, rtol=0, atol=1e-15)
    assert np.all(grads["w_out"][mask == 0.0] == 0.0)


def test_input_gradients_match_finite_differences():
    params = neural.init_params(4, 3, seed=7)
    ex = example(3, 4, 1, seed=2)
    _, grads = neural.backward(params, ex.x, ex.y)
    step = 1e-5
    for idx in np.ndindex(ex.x.shape):
        plus, minus = ex.x.copy(), ex.x.copy()
        plus[idx] += step
        minus[idx] -= step
        numeric = (params.loss(plus, 1) - params.loss(minus, 1)) / (2 * step)
        analytic = grads.inputs[idx]
        assert abs(analytic - numeric) / max(abs(analytic), abs(numeric), 1e-8) < 1e-4


def test_zero_output_weights_gradient():
    params = neural.init_params(6, 4, seed=0)
    params.tensors["w_out"][:] = 0.0
    ex = example(3, 6, 1)
    _, grads = neural.backward(params, ex.x, ex.y)
    r = neural.bilstm_encode(params, ex.x)
    assert np.allclose(grads["w_out"], (0.5 - 1.0) * r, rtol=0, atol=1e-15)
    assert float(grads["b_out"]) == -0.5
    assert float(np.max(np.abs(grads["fwd.W_i"]))) == 0.0


def test_saturated_output_has_zero_gradient():
    params = neural.init_params(6, 4, seed=0)
    params.tensors["b_out"][()] = 40.0
    ex = example(3, 6, 1)
    loss, grads = neural.backward(params, ex.x, ex.y)
    assert loss < 1e-11
    assert neural_utils.all_gradients_below(grads, 1e-9)


def test_saturated_wrong_output_has_zero_gradient():
    params = neural.init_params(6, 4, seed=0)
    params.tensors["b_out"][()] = 40.0
    ex = example(3, 6, 0)
    loss, grads = neural.backward(params, ex.x, ex.y)
    assert loss == pytest.approx(-math.log(neural.EPS))
    assert neural_utils.all_gradients_below(grads, 1e-9)


def test_linear_probe_gradients():
    rng = np.random.default_rng(0)
    probe = neural.LinearProbe(5, seed=0)
    x = rng.uniform(0.5, 1.5, size=(3, 5))
    # label away from the prediction so the gradient is not tiny
    y = 0 if probe.probability(x) > 0.5 else 1
    assert optim.grad_check(probe, SimpleNamespace(x=x, y=y), step=1e-5) < 1e-8


def test_dropout_mask_values():
    params = neural.init_params(4, 3, dropout_p=0.25, seed=0)
    mask = neural.draw_dropout_mask(params, np.random.default_rng(0))
    assert mask.shape == (6,)
    assert set(np.unique(mask).tolist()) <= {0.0, 1.0 / 0.75}
    no_dropout = neural.init_params(4, 3, dropout_p=0.0)
    assert np.array_equal(neural.draw_dropout_mask(no_dropout, np.random.default_rng(0)), np.ones(6))


def test_dropout_is_unbiased():
    params = neural.init_params(4, 4, dropout_p=0.5, seed=0)
    r = neural.bilstm_encode(params, synthetic_data.random_sequence(3, 4, seed=8))
    rng = np.random.default_rng(123)
    n_masks = 100000
    total = np.zeros(8)
    for _ in range(n_masks):
        total += neural.draw_dropout_mask(params, rng)
    mean_masked = (total / n_masks) * r
    large = np.abs(r) > 0.1
    assert large.any()
    assert np.all(np.abs(mean_masked[large] - r[large]) <= 0.02 * np.abs(r[large]))


def test_gradients_scale_and_add():
    params = neural.init_params(3, 2, seed=0)
    ex = example(2, 3, 1)
    _, g = neural.backward(params, ex.x, ex.y)
    doubled = g.add(g)
    halved = doubled.scale(0.5)
    assert all(np.allclose(halved[n], g[n], rtol=0, atol=1e-15) for n, _ in g.items())
    assert np.allclose(halved.inputs, g.inputs, rtol=0, atol=1e-15)


def test_gradients_add_input_gradients():
    params = neural.init_params(3, 2, seed=0)
    _, g2 = neural.backward(params, example(2, 3, 1, seed=1).x, 1)
    _, h2 = neural.backward(params, example(2, 3, 0, seed=2).x, 0)
    _, g4 = neural.backward(params, example(4, 3, 1, seed=3).x, 1)
    assert np.array_equal(g2.add(h2).inputs, g2.inputs + h2.inputs)
    # different lengths have no summed input gradient
    assert g2.add(g4).inputs is None
    assert g2.add(neural.Gradients(h2.tensors)).inputs is None


def test_checkpoint_round_trip(tmp_path):
    params = neural.init_params(5, 3, dropout_p=0.2, seed=4)
    path = str(tmp_path / "member.json")
    neural.save_checkpoint(params, path, seed=4, extra={"best_epoch": 7})
    loaded, seed, extra = neural.load_checkpoint(path)
    assert seed == 4 and extra == {"best_epoch": 7} and loaded.dropout_p == 0.2
    assert all(np.array_equal(a, loaded.tensors[n]) for n, a in params.tensors.items())
    again = str(tmp_path / "again.json")
    neural.save_checkpoint(loaded, again, seed=seed, extra=extra)
    with open(path, "rb") as a, open(again, "rb") as b:
        assert a.read() == b.read()


def test_checkpoint_wrong_format(tmp_path):
    path = tmp_path / "other.json"
    path.write_text('{"format": "something-else"}', encoding="utf-8")
    with pytest.raises(ValueError):
        neural.load_checkpoint(str(path))
