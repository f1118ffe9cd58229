"""Shared strategies and distance helpers for the test suite."""

import math

from hypothesis import strategies as st

from symbidisc import SymPoint, make_moebius, symmetrize


def polar(r: float, theta: float) -> complex:
    return complex(r * math.cos(theta), r * math.sin(theta))


def disc_complex(max_radius: float = 0.9):
    return st.builds(polar, st.floats(0.0, max_radius), st.floats(0.0, 2.0 * math.pi))


def unit_complex():
    return st.builds(lambda t: polar(1.0, t), st.floats(0.0, 2.0 * math.pi))


def moebius(max_a: float = 0.9):
    return st.builds(make_moebius, unit_complex(), disc_complex(max_a))


def interior_point(max_radius: float = 0.95):
    return st.builds(symmetrize, disc_complex(max_radius), disc_complex(max_radius))


def pt_dist(a: SymPoint, b: SymPoint) -> float:
    return max(abs(a.s - b.s), abs(a.p - b.p))


def unordered_dist(pair1, pair2) -> float:
    """Distance between unordered pairs: best of the two pairings."""
    x1, x2 = pair1
    y1, y2 = pair2
    straight = max(abs(x1 - y1), abs(x2 - y2))
    crossed = max(abs(x1 - y2), abs(x2 - y1))
    return min(straight, crossed)
