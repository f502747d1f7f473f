"""Shared helpers for the test suite."""

import numpy as np


def rel_l2(x, y):
    """Relative L2 distance between two complex vectors."""
    x = np.asarray(x)
    y = np.asarray(y)
    return np.linalg.norm(x - y) / np.linalg.norm(y)


def rel_l2_up_to_phase(x, y):
    """Relative L2 distance after removing the optimal global phase from x."""
    x = np.asarray(x)
    y = np.asarray(y)
    inner = np.vdot(x, y)
    phase = inner / abs(inner) if abs(inner) > 0 else 1.0
    return np.linalg.norm(x * phase - y) / np.linalg.norm(y)
