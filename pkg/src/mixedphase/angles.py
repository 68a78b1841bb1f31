"""Phase arithmetic on the circle."""

import math


def principal_angle(x: float) -> float:
    """Reduce an angle to the principal branch (-pi, pi]."""
    r = math.remainder(x, math.tau)
    # remainder lands in [-pi, pi]; fold the open endpoint onto +pi
    return math.pi if r <= -math.pi else r


def circular_distance(a: float, b: float) -> float:
    """min(|a - b|, 2*pi - |a - b|), the metric for all phase comparisons."""
    return abs(math.remainder(a - b, math.tau))
