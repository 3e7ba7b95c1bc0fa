from . import synthetic_data
