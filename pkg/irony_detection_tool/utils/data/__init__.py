import os


DATADIR = os.path.abspath(os.path.dirname(__file__))
