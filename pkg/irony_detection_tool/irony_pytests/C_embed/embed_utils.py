"""
Verification functions for the embed module.
"""

import numpy as np

# HEADER
__author__ = "IDT team"
__version__ = "1.0"

# HISTORY
# Jan 2026 - Version 1.0: initial version completed


# VERIFICATION FUNCTIONS

def on_sphere(vec, centroid, radius, tol=1e-9):
    """
    Check that a vector lies on the sphere of given center and radius.
    Args:
        vec: numpy array
        centroid: numpy array
        radius: float
        tol: float, absolute tolerance on the distance
    Returns:
        result: boolean
    """
    return abs(float(np.linalg.norm(vec - centroid)) - radius) < tol


def mean_direction_norm(vectors, centroid):
    """Norm of the average unit direction from the centroid, close to 0 for uniform samples."""
    directions = [(v - centroid) / np.linalg.norm(v - centroid) for v in vectors]
    return float(np.linalg.norm(np.mean(directions, axis=0)))
