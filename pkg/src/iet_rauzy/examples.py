"""Ready-made transformations over Q[sqrt(5)]."""

from .iet import Iet
from .qfield import QuadNum

# alpha = (3 - sqrt(5))/2, the inverse square of the golden ratio
ALPHA = QuadNum(3, 0, 5) / 2 - QuadNum(0, 1, 5) / 2


def running_example():
    """Three intervals a, b, c of lengths 1-2*alpha, alpha, alpha on [0, 1[,
    images in the order b, c, a."""
    a = ALPHA
    return Iet("abc", "bca", [1 - 2 * a, a, a], 0)


def fibonacci_rotation():
    """Rotation by alpha on [0, 1[ as a two interval exchange."""
    a = ALPHA
    return Iet("ab", "ba", [1 - a, a], 0)


def rotation_with_connection():
    """The running example's lengths exchanged in the order c, a, b.

    This is again the rotation by alpha, cut at one extra point, so the
    separation points have colliding orbits.
    """
    a = ALPHA
    return Iet("abc", "cab", [1 - 2 * a, a, a], 0)
