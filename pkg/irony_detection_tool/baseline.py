"""
Comparison system: TF-IDF bag of words and a linear-kernel SVM.

Tweets go through the same cleaning as the neural system, are lowercased, tokenized and
stripped of English stopwords. Documents are the rows of a scipy CSR matrix, weighted
    tf * (ln((1 + N) / (1 + df)) + 1)
and L2-normalized. The SVM minimizes
    1/2 |w|^2 + C sum_i max(0, 1 - y_i (w . x_i + b))
through its dual, with an SMO-type decomposition (second order working set selection,
w kept explicitly for the linear kernel); b comes from the KKT conditions.

Example usage:
    from irony_detection_tool import baseline, corpus
    data = corpus.split(corpus.load_dataset("SemEval2018-T3-train-taskA.txt"), 0.8, 1)
    report = baseline.baseline_run(data.train, data.dev, C=1.0)
"""

import os
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict

import numpy as np
import scipy.sparse as sp

from irony_detection_tool import metrics
from irony_detection_tool import textprep
from irony_detection_tool.data import DATADIR

# HEADER
__author__ = "IDT team"
__version__ = "1.2"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed, projected subgradient solver
# May 2026 - Version 1.1: replaced the solver with SMO, converges to the exact optimum
# Aug 2026 - Version 1.2: stopword list read from the bundled data file

log = logging.getLogger(__name__)

TAU = 1e-12


@dataclass(frozen=True)
class TfidfVocabulary:
    index: Dict[str, int]
    idf: np.ndarray
    n_docs: int

    def __len__(self):
        return len(self.index)


@dataclass(frozen=True)
class LinearSvmModel:
    w: np.ndarray
    b: float
    C: float
    n_iter: int = 0
    n_support: int = 0


@lru_cache(maxsize=None)
def load_stopwords(path=None):
    """
    Read a stopword list, one word per line.
    Args:
        path: str or None, defaults to the bundled data/stopwords_en.txt (179 English words)
    Returns:
        frozenset of str
    """
    if path is None:
        path = os.path.join(DATADIR, "stopwords_en.txt")
    if not os.path.isfile(path):
        raise FileNotFoundError(path)
    with open(path, "r", encoding="utf-8") as sf:
        return frozenset(line.strip() for line in sf if line.strip())


def baseline_tokens(raw, stopwords, remove_not=True):
    """Cleaned, lowercased tokens of a tweet without stopwords."""
    cleaned = textprep.preprocess(raw, remove_not=remove_not).lower()
    return [t for t in textprep.tokenize(cleaned) if t not in stopwords]


def _weigh(vocab, docs):
    rows, cols, vals = [], [], []
    for r, doc in enumerate(docs):
        counts = {}
        for token in doc:
            col = vocab.index.get(token)
            if col is not None:
                counts[col] = counts.get(col, 0) + 1
        for col, tf in sorted(counts.items()):
            rows.append(r)
            cols.append(col)
            vals.append(tf * vocab.idf[col])
    X = sp.csr_matrix((vals, (rows, cols)), shape=(len(docs), len(vocab)), dtype=np.float64)
    norms = np.sqrt(np.asarray(X.multiply(X).sum(axis=1)).ravel())
    # empty documents stay zero vectors
    scale = np.divide(1.0, norms, out=np.zeros_like(norms), where=norms > 0)
    return sp.csr_matrix(sp.diags(scale) @ X)


def tfidf_fit_transform(docs):
    """
    Fit the vocabulary and idf weights on training documents and weigh them.
    Args:
        docs: list of token lists
    Returns:
        vocab: TfidfVocabulary, columns in sorted token order
        X: scipy.sparse CSR matrix (len(docs), len(vocab)), one L2-normalized row per document
    """
    n_docs = len(docs)
    df = {}
    for doc in docs:
        for token in set(doc):
            df[token] = df.get(token, 0) + 1
    tokens = sorted(df)
    idf = np.array([np.log((1.0 + n_docs) / (1.0 + df[t])) + 1.0 for t in tokens])
    vocab = TfidfVocabulary(index={t: i for i, t in enumerate(tokens)}, idf=idf, n_docs=n_docs)
    return vocab, _weigh(vocab, docs)


def tfidf_transform(vocab, docs):
    """Weigh documents with a fitted vocabulary; unseen tokens are ignored."""
    return _weigh(vocab, docs)


def _as_csr(X):
    return X.tocsr().astype(np.float64) if sp.issparse(X) else sp.csr_matrix(np.asarray(X, dtype=np.float64))


def _signed_labels(y):
    y = np.asarray(y)
    labels = set(np.unique(y).tolist())
    if labels <= {0, 1}:
        y = np.where(y == 1, 1.0, -1.0)
    elif not labels <= {-1, 1}:
        raise ValueError("SVM labels must be 0/1 or -1/+1, got {}".format(sorted(labels)))
    if len(np.unique(y)) < 2:
        raise ValueError("SVM training needs examples of both classes")
    return y.astype(np.float64)


def svm_train(X, y, C=1.0, tol=1e-3, max_iter=100000):
    """
    Train a linear SVM.
    Args:
        X: scipy.sparse matrix or 2D array, one row per example
        y: sequence of labels, 0/1 or -1/+1
        C: float, regularization constant
        tol: float, stopping tolerance on the maximal KKT violation
        max_iter: int, iteration limit, a warning is logged when reached
    Returns:
        LinearSvmModel
    """
    if C <= 0:
        raise ValueError("C must be positive, got {}".format(C))
    X = _as_csr(X)
    y = _signed_labels(y)
    if X.shape[0] != y.shape[0]:
        raise ValueError("{} examples for {} labels".format(X.shape[0], y.shape[0]))
    n = X.shape[0]
    diag = np.asarray(X.multiply(X).sum(axis=1)).ravel()
    alpha = np.zeros(n)
    w = np.zeros(X.shape[1])
    grad = -np.ones(n)

    n_iter = 0
    while n_iter < max_iter:
        score = -y * grad
        up = ((y > 0) & (alpha < C)) | ((y < 0) & (alpha > 0))
        low = ((y > 0) & (alpha > 0)) | ((y < 0) & (alpha < C))
        if not up.any() or not low.any():
            break
        i = int(np.argmax(np.where(up, score, -np.inf)))
        g_max = score[i]
        if g_max - np.min(score[low]) < tol:
            break
        k_i = np.asarray(X @ X[i].T.toarray()).ravel()
        b_diff = g_max - score
        quad = diag[i] + diag - 2.0 * k_i
        quad[quad <= 0] = TAU
        candidates = low & (b_diff > 0)
        if not candidates.any():
            break
        j = int(np.argmin(np.where(candidates, -(b_diff ** 2) / quad, np.inf)))

        old_i, old_j = alpha[i], alpha[j]
        q_ij = y[i] * y[j] * k_i[j]
        if y[i] != y[j]:
            quad_coef = diag[i] + diag[j] + 2.0 * q_ij
            delta = (-grad[i] - grad[j]) / (quad_coef if quad_coef > 0 else TAU)
            diff = alpha[i] - alpha[j]
            alpha[i] += delta
            alpha[j] += delta
            if diff > 0:
                if alpha[j] < 0:
                    alpha[j] = 0.0
                    alpha[i] = diff
            elif alpha[i] < 0:
                alpha[i] = 0.0
                alpha[j] = -diff
            if diff > 0:
                if alpha[i] > C:
                    alpha[i] = C
                    alpha[j] = C - diff
            elif alpha[j] > C:
                alpha[j] = C
                alpha[i] = C + diff
        else:
            quad_coef = diag[i] + diag[j] - 2.0 * q_ij
            delta = (grad[i] - grad[j]) / (quad_coef if quad_coef > 0 else TAU)
            total = alpha[i] + alpha[j]
            alpha[i] -= delta
            alpha[j] += delta
            if total > C:
                if alpha[i] > C:
                    alpha[i] = C
                    alpha[j] = total - C
                if alpha[j] > C:
                    alpha[j] = C
                    alpha[i] = total - C
            else:
                if alpha[j] < 0:
                    alpha[j] = 0.0
                    alpha[i] = total
                if alpha[i] < 0:
                    alpha[i] = 0.0
                    alpha[j] = total

        for idx, change in ((i, alpha[i] - old_i), (j, alpha[j] - old_j)):
            if change != 0.0:
                row = X[idx]
                w[row.indices] += change * y[idx] * row.data
        grad = y * (X @ w) - 1.0
        n_iter += 1
    else:
        log.warning("SVM solver reached the iteration limit (%d) before meeting tol=%g", max_iter, tol)

    b = -_rho(alpha, y, grad, C)
    if not np.all(np.isfinite(w)) or not np.isfinite(b):
        raise FloatingPointError("SVM solver produced non-finite weights")
    n_support = int(np.count_nonzero(alpha > 0))
    log.info("SVM trained on %d examples in %d iterations, %d support vectors", n, n_iter, n_support)
    return LinearSvmModel(w=w, b=float(b), C=C, n_iter=n_iter, n_support=n_support)


def _rho(alpha, y, grad, C):
    """Offset from the free support vectors, or the middle of the feasible interval."""
    y_grad = y * grad
    free = (alpha > 0) & (alpha < C)
    if free.any():
        return float(np.mean(y_grad[free]))
    at_upper = alpha >= C
    upper_side = (at_upper & (y < 0)) | (~at_upper & (y > 0))
    lower_side = ~upper_side
    ub = np.min(y_grad[upper_side]) if upper_side.any() else np.inf
    lb = np.max(y_grad[lower_side]) if lower_side.any() else -np.inf
    return float((ub + lb) / 2.0)


def svm_decision(model, X):
    """Decision values w . x + b, one per row of X."""
    return np.asarray(_as_csr(X) @ model.w).ravel() + model.b


def svm_predict(model, X):
    """0/1 labels, 1 where the decision value is non-negative."""
    return (svm_decision(model, X) >= 0).astype(int)


def svm_objective(model, X, y):
    """Primal objective 1/2 |w|^2 + C sum of hinge losses."""
    y = _signed_labels(y)
    hinge = np.maximum(0.0, 1.0 - y * svm_decision(model, X))
    return 0.5 * float(model.w @ model.w) + model.C * float(hinge.sum())


def baseline_run(train, dev, C=1.0, stopwords=None, remove_not=True):
    """
    Train the TF-IDF + SVM baseline and evaluate it on the development tweets.
    Args:
        train: list of corpus.Tweet
        dev: list of corpus.Tweet, non-empty
        C: float, SVM regularization constant
        stopwords: frozenset or None, defaults to the bundled list
        remove_not: boolean, see textprep.preprocess
    Returns:
        metrics.MetricsReport
    """
    if not dev:
        raise ValueError("the baseline needs a non-empty development set")
    if not train:
        raise ValueError("the baseline needs a non-empty training set")
    if stopwords is None:
        stopwords = load_stopwords()
    train_docs = [baseline_tokens(t.raw, stopwords, remove_not) for t in train]
    dev_docs = [baseline_tokens(t.raw, stopwords, remove_not) for t in dev]
    vocab, X_train = tfidf_fit_transform(train_docs)
    log.info("TF-IDF vocabulary of %d terms from %d training tweets", len(vocab), len(train))
    model = svm_train(X_train, [t.label for t in train], C=C)
    preds = svm_predict(model, tfidf_transform(vocab, dev_docs))
    return metrics.compute_metrics(preds.tolist(), [t.label for t in dev])
