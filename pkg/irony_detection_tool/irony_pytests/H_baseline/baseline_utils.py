"""
Verification functions for the baseline module, with a reference solver for the linear SVM
that works on the primal quadratic program directly.
"""

import numpy as np
from scipy.optimize import minimize

# HEADER
__author__ = "IDT team"
__version__ = "1.1"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed, subgradient reference
# May 2026 - Version 1.1: reference replaced by the primal quadratic program (SLSQP)


def reference_svm(X, y, C=1.0):
    """
    Solve min 1/2 |w|^2 + C sum xi  s.t.  y_i (w . x_i + b) >= 1 - xi_i, xi_i >= 0.
    Args:
        X: numpy array (n, d), dense
        y: numpy array (n,) of -1/+1
        C: float
    Returns:
        w: numpy array (d,)
        b: float
        objective: float
    """
    n, d = X.shape
    yX = y[:, None] * X

    def objective(z):
        return 0.5 * z[:d] @ z[:d] + C * z[d + 1:].sum()

    def objective_grad(z):
        return np.concatenate([z[:d], [0.0], np.full(n, C)])

    def margins(z):
        return yX @ z[:d] + y * z[d] - 1.0 + z[d + 1:]

    margins_jac = np.hstack([yX, y[:, None], np.eye(n)])
    z0 = np.concatenate([np.zeros(d + 1), np.ones(n)])
    bounds = [(None, None)] * (d + 1) + [(0.0, None)] * n
    result = minimize(objective, z0, jac=objective_grad, method="SLSQP", bounds=bounds,
                      constraints=[{"type": "ineq", "fun": margins, "jac": lambda z: margins_jac}],
                      options={"maxiter": 1000, "ftol": 1e-12})
    w, b = result.x[:d], float(result.x[d])
    # the primal objective of (w, b) with the optimal slacks
    hinge = np.maximum(0.0, 1.0 - y * (X @ w + b))
    return w, b, 0.5 * float(w @ w) + C * float(hinge.sum())


def noisy_2d_problem(n=200, seed=0):
    """Gaussian points labeled by sign(x1 - x2 + 0.1) away from the boundary, 5% of the labels flipped."""
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(4 * n, 2))
    score = X @ np.array([1.0, -1.0]) + 0.1
    keep = np.abs(score) > 0.5
    X, score = X[keep][:n], score[keep][:n]
    y = np.where(score > 0, 1.0, -1.0)
    y[::20] *= -1.0
    return X, y


# VERIFICATION FUNCTIONS

def rows_have_unit_norm(X):
    """True if every non-empty row of the sparse matrix has Euclidean norm 1."""
    norms = np.sqrt(np.asarray(X.multiply(X).sum(axis=1)).ravel())
    return bool(np.all((np.abs(norms - 1.0) < 1e-12) | (norms == 0.0)))


def relative_difference(a, b):
    return abs(a - b) / max(abs(a), abs(b))
