import os
import json
import time
import logging
import configparser
from logging.handlers import RotatingFileHandler

'''
This script contains functions frequently used across the tool: logging set up,
configuration file helpers, JSON output and run time reporting.
'''

# HEADER
__author__ = "IDT team"
__version__ = "1.3"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed
# Mar 2026 - Version 1.1: logger now attaches to the package logger so library modules share the file
# Sep 2026 - Version 1.2: added write_json and read_config_file
# Oct 2026 - Version 1.3: malformed configuration files raise ValueError


PACKAGE_LOGGER = "irony_detection_tool"
LOG_FORMAT = '%(asctime)s : %(levelname)s : %(name)s : %(message)s'


def getlist(option, sep=',', chars=None):
    """Return a list from a ConfigParser option. By default,
       split on a comma and strip whitespaces. Empty chunks are dropped."""
    return [chunk.strip(chars) for chunk in option.split(sep) if chunk.strip(chars)]


def str_to_bool(s):
    """
    Convert a string from a configuration file or the command line into a boolean.
    Args:
        s: string or bool
    Returns:
        boolean
    """
    if isinstance(s, bool):
        return s
    if s.strip().lower() in ("true", "t", "yes", "y", "1", "on"):
        return True
    if s.strip().lower() in ("false", "f", "no", "n", "0", "off"):
        return False
    raise ValueError("Cannot interpret '" + s + "' as a boolean")


def mk_idt_log(log_path, reset=True):
    """
    Wrapper for setting up the standard tool logger. Every module logs through
    logging.getLogger(__name__), so all messages end up in this file.

    Usage:
    lg = mk_idt_log("/path/to/output/IDT_train.log")
    lg.info("This is some info I want to give")
    lg.warning("This is a warning")

    Args:
        log_path: str, path and name of the log file
        reset: boolean, start a new file or append to an existing one

    Returns:
        logger instance
    """
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(logging.INFO)
    # only one file handler per log file
    for handler in list(logger.handlers):
        if isinstance(handler, logging.FileHandler):
            if os.path.abspath(handler.baseFilename) == os.path.abspath(log_path):
                return logger
            logger.removeHandler(handler)
            handler.close()
    if reset:
        file_handler = RotatingFileHandler(log_path, mode='w')
    else:
        file_handler = logging.FileHandler(log_path)
    file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(file_handler)
    print("\n * IDT screen output will be logged in file: ", log_path)
    return logger


def close_idt_log():
    """Detach and close the file handlers of the package logger."""
    logger = logging.getLogger(PACKAGE_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()


def calc_run_time(start_time):
    """
    Calculate the total running time.
    Args:
        start_time: float, starting time - UTC in seconds
    Returns:
        end_time_sec: float, run time in seconds
        end_time: string, end time in seconds and corresponding min or hr conversion
    """
    end_time_sec = time.time() - start_time
    if end_time_sec > 60.0:
        end_time_min = end_time_sec / 60.  # this is in minutes
        if end_time_min > 60.0:
            end_time_hr = end_time_min / 60.  # this is in hours
            end_time = repr(round(end_time_sec, 1)) + "sec = " + repr(round(end_time_hr, 1)) + "hr"
        else:
            end_time = repr(round(end_time_sec, 1)) + "sec = " + repr(round(end_time_min, 1)) + "min"
    else:
        end_time = repr(round(end_time_sec, 1)) + "sec"
    return end_time_sec, end_time


def write_json(obj, path):
    """
    Write a JSON document with sorted keys, so identical content gives identical bytes.
    Args:
        obj: JSON serializable object
        path: str, output file
    Returns:
        nothing
    """
    with open(path, "w", encoding="utf-8") as jf:
        json.dump(obj, jf, indent=2, sort_keys=True)
        jf.write("\n")


def read_json(path):
    """Read a JSON document, raising FileNotFoundError with the path if missing."""
    if not os.path.isfile(path):
        raise FileNotFoundError(path)
    with open(path, "r", encoding="utf-8") as jf:
        return json.load(jf)


def read_config_file(config_path):
    """
    Read an IDT configuration file.
    Args:
        config_path: str, path of the .cfg file
    Returns:
        config: ConfigParser instance
    """
    if not os.path.exists(config_path):
        raise FileNotFoundError(config_path)
    config = configparser.ConfigParser()
    try:
        config.read([config_path])
    except configparser.Error as e:
        raise ValueError("{}: not a valid configuration file: {}".format(config_path, e))
    return config
