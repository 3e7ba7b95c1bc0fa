"""
py.test configuration for the *entire* test suite
"""

import os
import pytest

from irony_detection_tool import core_utils

# HEADER
__author__ = "IDT team"
__version__ = "1.1"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed
# Jun 2026 - Version 1.1: options for the real dataset and GloVe file (soft checks)


def pytest_addoption(parser):
    """
    Specifies the files used for certain tests
    """
    parser.addoption("--config_file", action="store", default=None,
                     help="IDT configuration file; its data and embeddings files are used by the soft checks")
    parser.addoption("--data_file", action="store", default=None,
                     help="real shared-task training file (index, label, tweet)")
    parser.addoption("--glove_file", action="store", default=None,
                     help="GloVe Twitter file with 100-dimensional vectors")


@pytest.fixture(scope="session")
def config(request):
    config_file = request.config.getoption("--config_file")
    if config_file is None:
        return None
    return core_utils.read_config_file(config_file)


def _option_or_config(request, config, option, section, key):
    value = request.config.getoption(option)
    if value is None and config is not None and config.has_option(section, key):
        value = config.get(section, key).strip() or None
    return value


@pytest.fixture(scope="session")
def data_file(request, config):
    path = _option_or_config(request, config, "--data_file", "data", "data_file")
    if path is None or not os.path.isfile(path):
        pytest.skip("real dataset not supplied (use --data_file)")
    return path


@pytest.fixture(scope="session")
def glove_file(request, config):
    path = _option_or_config(request, config, "--glove_file", "embeddings", "embeddings_file")
    if path is None or not os.path.isfile(path):
        pytest.skip("GloVe file not supplied (use --glove_file)")
    return path
