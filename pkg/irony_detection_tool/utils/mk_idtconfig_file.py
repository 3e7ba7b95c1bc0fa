"""
This script creates the IDT input configuration file, filled with the default values
(embeddings of size 100, 150 hidden units, dropout 0.1, learning rate 0.0001, ensemble of 4).

Example usage:
    The code works from the terminal or called as a module.

    Terminal
        To create the IDT configuration file go to the output directory, then type:
        $ idt_mk_idtconfig_file output_directory data_file embeddings_file

        This will create the file IDT_config.cfg in the output directory. Please open it and make
        sure that all variables are properly set. There are several optional parameters, please
        see the help.

    As a module
        import irony_detection_tool as idt
        idt.utils.mk_idtconfig_file.mk_idt_cfg("run1", "SemEval2018-T3-train-taskA.txt",
                                               "glove.twitter.27B.100d.txt", embed_dim=100)
"""

import os
import sys
import argparse
import configparser

from irony_detection_tool import train

# HEADER
__author__ = "IDT team"
__version__ = "1.1"

# HISTORY
# Feb 2026 - Version 1.0: initial version completed
# Jul 2026 - Version 1.1: added the [features] and [baseline] sections


def write_idt_cfg(config_path, data_file, embeddings_file, output_dir, cfg, checkpoint_dir="",
                  stopwords_file="", c=1.0, save_plots=False):
    """
    Write the configuration file.
    Args:
        config_path: str, path and name of the file to write
        data_file: str, dataset TSV file
        embeddings_file: str, GloVe text file
        output_dir: str, where IDT places all its output
        cfg: train.TrainConfig, values of the model and training sections
        checkpoint_dir: str, model directory for eval and predict
        stopwords_file: str, stopword list of the baseline, empty for the bundled one
        c: float, SVM regularization constant
        save_plots: boolean
    Returns:
        nothing
    """
    config = configparser.ConfigParser(allow_no_value=True)
    config.add_section("data")
    config.set("data", "data_file", data_file)
    config.set("data", "has_header", "True")
    config.set("data", "# remove the bare word 'not' along with the other trigger words", None)
    config.set("data", "remove_not", "True")
    config.set("data", "split_ratio", str(cfg.split_ratio))
    config.set("data", "stratified", str(cfg.stratified))

    config.add_section("embeddings")
    config.set("embeddings", "embeddings_file", embeddings_file)
    config.set("embeddings", "# allowed sizes: 25, 50, 100", None)
    config.set("embeddings", "embed_dim", str(cfg.embed_dim))
    config.set("embeddings", "# OOV tokens seen at least min_freq times get their own vector", None)
    config.set("embeddings", "min_freq", str(cfg.min_freq))

    config.add_section("model")
    config.set("model", "hidden", str(cfg.hidden))
    config.set("model", "dropout_p", str(cfg.dropout_p))
    config.set("model", "# model directory used by eval and predict", None)
    config.set("model", "checkpoint_dir", checkpoint_dir)

    config.add_section("training")
    for option in ("lr", "seed", "ensemble_size", "batch_size", "patience", "max_epochs", "fine_tune"):
        config.set("training", option, str(getattr(cfg, option)))
    config.set("training", "# mean or vote", None)
    config.set("training", "combine", cfg.combine)
    config.set("training", "cores", str(cfg.cores))
    for option in ("beta1", "beta2", "eps"):
        config.set("training", option, str(getattr(cfg, option)))

    config.add_section("features")
    config.set("features", "use_token_feats", str(cfg.use_token_feats))
    config.set("features", "use_sentence_feats", str(cfg.use_sentence_feats))

    config.add_section("baseline")
    config.set("baseline", "c", str(c))
    config.set("baseline", "stopwords_file", stopwords_file)

    config.add_section("output")
    config.set("output", "output_dir", output_dir)
    config.set("output", "save_plots", str(save_plots))

    with open(config_path, "w") as cf:
        config.write(cf)


def mk_idt_cfg(output_dir, data_file, embeddings_file, embed_dim=None, seed=None, save_plots=False):
    """
    Create IDT_config.cfg in the output directory.
    Args:
        output_dir: str
        data_file: str
        embeddings_file: str
        embed_dim: int or None, default 100
        seed: int or None, default 1
        save_plots: boolean
    Returns:
        config_path: str
    """
    overrides = {}
    if embed_dim is not None:
        overrides["embed_dim"] = embed_dim
    if seed is not None:
        overrides["seed"] = seed
    cfg = train.TrainConfig(**overrides)
    if not os.path.isdir(output_dir):
        os.makedirs(output_dir)
    config_path = os.path.join(output_dir, "IDT_config.cfg")
    write_idt_cfg(config_path, data_file, embeddings_file, output_dir, cfg, save_plots=save_plots)
    print(" * IDT configuration file written: ", config_path)
    return config_path


def main():
    parser = argparse.ArgumentParser(description='Create the IDT configuration file with the default values.')
    parser.add_argument("output_directory",
                        action='store',
                        default=None,
                        help='Directory where IDT will place its output, e.g. run1')
    parser.add_argument("data_file",
                        action='store',
                        default=None,
                        help='Dataset TSV file, e.g. SemEval2018-T3-train-taskA.txt')
    parser.add_argument("embeddings_file",
                        action='store',
                        default=None,
                        help='GloVe text file, e.g. glove.twitter.27B.100d.txt')
    parser.add_argument("-d",
                        dest="embed_dim",
                        type=int,
                        action='store',
                        default=None,
                        help='Use -d=50 to set the embedding size (25, 50 or 100).')
    parser.add_argument("-s",
                        dest="seed",
                        type=int,
                        action='store',
                        default=None,
                        help='Use -s=7 to set the global seed.')
    parser.add_argument("-p",
                        dest="save_plots",
                        action='store_true',
                        default=False,
                        help='Use -p to save the learning curve plots.')
    args = parser.parse_args()

    mk_idt_cfg(args.output_directory, args.data_file, args.embeddings_file, embed_dim=args.embed_dim,
               seed=args.seed, save_plots=args.save_plots)


if __name__ == '__main__':
    sys.exit(main())
