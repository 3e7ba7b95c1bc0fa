"""
This script plots the learning curves (train loss and development F1 per epoch) of every
ensemble member recorded in a history.json written by the train subcommand.

Example usage:
    The code works from the terminal or called as a module.

    Terminal
        $ idt_plot_history run1/history.json
        Optional arguments:
        -o=plots_dir  directory for the png files (default: the directory of history.json)

    As a module
        import irony_detection_tool as idt
        history = idt.core_utils.read_json("run1/history.json")
        plot_names = idt.utils.plot_history.plot_histories(history, "run1")
"""

import os
import sys
import argparse

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib.ticker import MaxNLocator

from irony_detection_tool import core_utils

# HEADER
__author__ = "IDT team"
__version__ = "1.0"

# HISTORY
# Sep 2026 - Version 1.0: initial version completed


def plot_member_history(member_history, plt_name, title=None):
    """
    Plot train loss and development F1 of one member, marking the best epoch.
    Args:
        member_history: dict with keys seed, best_epoch and epochs (list of per epoch dicts)
        plt_name: str, path and name of the png file
        title: str or None
    Returns:
        plt_name: str
    """
    epochs = [h["epoch"] for h in member_history["epochs"]]
    fig, axs = plt.subplots(2, 1, figsize=(8, 7), sharex=True)
    axs[0].plot(epochs, [h["train_loss"] for h in member_history["epochs"]], "b.-")
    axs[0].set_ylabel("train loss")
    axs[1].plot(epochs, [h["dev_f1"] for h in member_history["epochs"]], "g.-", label="F1")
    axs[1].plot(epochs, [h["dev_precision"] for h in member_history["epochs"]], "c:", label="precision")
    axs[1].plot(epochs, [h["dev_recall"] for h in member_history["epochs"]], "m:", label="recall")
    best_epoch = member_history.get("best_epoch")
    if best_epoch:
        for ax in axs:
            ax.axvline(best_epoch, color="r", linestyle="--", linewidth=0.8)
    axs[1].set_ylabel("development")
    axs[1].set_xlabel("epoch")
    axs[1].xaxis.set_major_locator(MaxNLocator(integer=True))
    axs[1].legend(loc="lower right")
    if title is None:
        title = "seed {}".format(member_history.get("seed"))
    fig.suptitle(title)
    plt.savefig(plt_name)
    plt.close(fig)
    return plt_name


def plot_histories(history, output_dir):
    """
    Plot every member of a history.json document.
    Args:
        history: dict, member name -> member history
        output_dir: str
    Returns:
        list of the png files written
    """
    plot_names = []
    for name in sorted(history):
        plt_name = os.path.join(output_dir, "history_{}.png".format(name))
        plot_names.append(plot_member_history(history[name], plt_name, title="{} (seed {})".format(
            name, history[name].get("seed"))))
    return plot_names


def main():
    parser = argparse.ArgumentParser(description='Plot the learning curves recorded in a history.json file.')
    parser.add_argument("history_file",
                        action='store',
                        default=None,
                        help='Path and name of the history.json file, e.g. run1/history.json')
    parser.add_argument("-o",
                        dest="output_dir",
                        action='store',
                        default=None,
                        help='Directory for the plots; default is the directory of the history file.')
    args = parser.parse_args()

    output_dir = args.output_dir
    if output_dir is None:
        output_dir = os.path.dirname(os.path.abspath(args.history_file))
    history = core_utils.read_json(args.history_file)
    for plt_name in plot_histories(history, output_dir):
        print(" * Plot saved in ", plt_name)


if __name__ == '__main__':
    sys.exit(main())
