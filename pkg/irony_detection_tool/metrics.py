"""
Evaluation of binary irony predictions: accuracy, and precision, recall and F1 of the
ironic (positive, label 1) class. Zero denominators give 0.

Example usage:
    from irony_detection_tool import metrics
    report = metrics.compute_metrics(preds=[1, 1, 1, 0, 0], golds=[1, 1, 0, 1, 0])
    print(metrics.format_report(report))
    metrics.write_metrics(report, "metrics.json")
"""

from dataclasses import dataclass, asdict

from irony_detection_tool import core_utils

# HEADER
__author__ = "IDT team"
__version__ = "1.1"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed
# Jun 2026 - Version 1.1: added format_report and write_metrics


@dataclass(frozen=True)
class MetricsReport:
    tp: int
    fp: int
    fn: int
    tn: int
    accuracy: float
    precision: float
    recall: float
    f1: float

    @property
    def n(self):
        return self.tp + self.fp + self.fn + self.tn

    def to_dict(self):
        return asdict(self)


def _ratio(num, den):
    return num / den if den > 0 else 0.0


def f1_from_pr(precision, recall):
    """Harmonic mean of precision and recall, 0 when both are 0."""
    if not (0.0 <= precision <= 1.0 and 0.0 <= recall <= 1.0):
        raise ValueError("precision and recall must be in [0, 1], got {} and {}".format(precision, recall))
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def compute_metrics(preds, golds):
    """
    Confusion counts and scores for the ironic class.
    Args:
        preds: sequence of int in {0, 1}
        golds: sequence of int in {0, 1}, same length
    Returns:
        MetricsReport
    """
    preds, golds = list(preds), list(golds)
    if len(preds) != len(golds):
        raise ValueError("{} predictions for {} gold labels".format(len(preds), len(golds)))
    if not golds:
        raise ValueError("cannot compute metrics on an empty set")
    if not set(preds) | set(golds) <= {0, 1}:
        raise ValueError("labels must be 0 or 1")
    tp = sum(1 for p, g in zip(preds, golds) if p == 1 and g == 1)
    fp = sum(1 for p, g in zip(preds, golds) if p == 1 and g == 0)
    fn = sum(1 for p, g in zip(preds, golds) if p == 0 and g == 1)
    tn = len(golds) - tp - fp - fn
    precision = _ratio(tp, tp + fp)
    recall = _ratio(tp, tp + fn)
    return MetricsReport(tp=tp, fp=fp, fn=fn, tn=tn, accuracy=(tp + tn) / len(golds),
                         precision=precision, recall=recall, f1=f1_from_pr(precision, recall))


def format_report(report):
    """One line with the four scores at 4 decimals, and the counts."""
    return ("accuracy={:.4f} precision={:.4f} recall={:.4f} f1={:.4f} "
            "(tp={} fp={} fn={} tn={})".format(report.accuracy, report.precision, report.recall, report.f1,
                                                report.tp, report.fp, report.fn, report.tn))


def write_metrics(report, path):
    """Write metrics.json, full precision."""
    core_utils.write_json(report.to_dict(), path)
