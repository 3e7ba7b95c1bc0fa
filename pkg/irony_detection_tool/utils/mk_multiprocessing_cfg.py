"""
This script creates a sample configuration file needed to run the run_with_multiprocess.py script. A
configuration file will be created in the working directory.
"""

import os
import sys
import configparser

# HEADER
__author__ = "IDT team"
__version__ = "1.0"

# HISTORY
# Mar 2026 - Version 1.0: initial version completed


def write_idt_multiprocessing_cfg(output_dir=None):
    """
    Write multiprocessing_IDT_config.cfg.
    Args:
        output_dir: str or None, defaults to the current working directory
    Returns:
        idt_m_config: str, path of the file written
    """
    config = configparser.ConfigParser(allow_no_value=True)

    config.add_section("runs_to_do")
    config.set("runs_to_do", "# path shared by all runs", None)
    config.set("runs_to_do", "common_path", "path_to_runs")

    config.set("runs_to_do", "# run directories separated by a comma, each holding one *IDT*.cfg file", None)
    config.set("runs_to_do", "runs", "dim25,dim50,dim100")

    config.set("runs_to_do", "# one of prep, train, eval, predict, ablate, baseline", None)
    config.set("runs_to_do", "subcommand", "train")

    config.set("runs_to_do", "# cores to use for multiprocessing - to use all set variable as cores2use=all", None)
    config.set("runs_to_do", "cores2use", "3")

    if output_dir is None:
        output_dir = os.getcwd()
    idt_m_config = os.path.join(output_dir, "multiprocessing_IDT_config.cfg")
    with open(idt_m_config, "w") as cf:
        config.write(cf)
    return idt_m_config


def main():
    # create the sample multiprocessing configuration file in the current working directory
    print(" * Written ", write_idt_multiprocessing_cfg())


if __name__ == '__main__':
    sys.exit(main())
