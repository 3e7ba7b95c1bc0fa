"""
This script runs IDT for several configuration files with multiprocessing, e.g. the same
experiment with embeddings of size 25, 50 and 100.

Example usage:
    The code works from the terminal or called as a module.

    Terminal
        Simply type the command
        $ idt_run_with_multiprocess idt_multiprocessing_config.cfg

    As a module
        import irony_detection_tool as idt
        idt.utils.run_with_multiprocess.run_idt_with_multiprocess("idt_multiprocessing_config.cfg")
"""

import os
import multiprocessing
import sys
import argparse
import time
from glob import glob

from irony_detection_tool import core_utils
from irony_detection_tool.utils import run_tool

# HEADER
__author__ = "IDT team"
__version__ = "1.0"

# HISTORY
# Mar 2026 - Version 1.0: initial version completed


def read_multiprocess_config_file(config_path):
    """
    This function reads the multiprocess IDT configuration file to get needed info.
    Args:
        config_path: str, full path and name of the IDT multiprocessing configuration file
    Returns:
        cfg_info: list, common path, run directories, subcommand and cores to use
    """
    config = core_utils.read_config_file(config_path)
    common_path = config.get("runs_to_do", "common_path")
    runs = core_utils.getlist(config.get("runs_to_do", "runs"))
    subcommand = config.get("runs_to_do", "subcommand")
    if subcommand not in run_tool.SUBCOMMANDS:
        raise ValueError("{}: unknown subcommand '{}'".format(config_path, subcommand))
    cores2use = config.get("runs_to_do", "cores2use")
    return [common_path, runs, subcommand, cores2use]


def get_cfg_files2run_idt(common_path, runs):
    """
    Get all the configuration files that will be used as input to run IDT.
    Args:
        common_path: str, common part of the path
        runs: list of str, run directories under common_path
    Returns:
        cfg_files2run_idt: list, configuration files to run IDT
    """
    cfg_files2run_idt = []
    for run_dir in runs:
        cfg_files2run_idt += sorted(glob(os.path.join(common_path, run_dir, "*IDT*.cfg")))
    return cfg_files2run_idt


def run_config(subcommand, config_path):
    """Run one configuration file; members are trained sequentially inside the pool workers."""
    argv = [subcommand, "--config", config_path]
    if subcommand in ("train", "ablate"):
        argv += ["--cores", "1"]
    return run_tool.run(argv)


def run_idt_with_multiprocess(multiprocessing_idt_config_file):
    """
    Run IDT once per configuration file found in the run directories.
    Args:
        multiprocessing_idt_config_file: str, name and path of the multiprocessing configuration file
    Returns:
        exit_codes: list of int, one per configuration file
    """
    print('Running IDT with multiprocessing. This may take a while...')
    start_time = time.time()

    common_path, runs, subcommand, cores2use = read_multiprocess_config_file(multiprocessing_idt_config_file)
    cfg_files2run_idt = get_cfg_files2run_idt(common_path, runs)
    if not cfg_files2run_idt:
        raise FileNotFoundError("no *IDT*.cfg files found under " + common_path)

    if cores2use == "all":
        cores2use = os.cpu_count()
    else:
        cores2use = int(cores2use)

    p = multiprocessing.Pool(cores2use)
    exit_codes = p.starmap(run_config, [(subcommand, cfg_file) for cfg_file in cfg_files2run_idt])
    p.close()
    p.join()

    for cfg_file, code in zip(cfg_files2run_idt, exit_codes):
        if code != 0:
            print(" * Run with {} failed with exit status {}".format(cfg_file, code))

    _, total_time_str = core_utils.calc_run_time(start_time)
    print(f'\n * It took {total_time_str} to process {len(cfg_files2run_idt)} IDT runs with {cores2use} cores * \n')
    return exit_codes


def main():
    parser = argparse.ArgumentParser(description='Run IDT for several configuration files in parallel.')
    parser.add_argument('config',
                        action='store',
                        default=None,
                        help="Path and name of multiprocessing configuration file to use.")
    args = parser.parse_args()

    exit_codes = run_idt_with_multiprocess(args.config)
    return max(exit_codes)


if __name__ == '__main__':
    sys.exit(main())
