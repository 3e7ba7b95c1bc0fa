import os

from . import auxiliary_code

TESTSDIR = os.path.abspath(os.path.dirname(__file__))
