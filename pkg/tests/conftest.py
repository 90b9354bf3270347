import math
import random

from trigonlab.kernel import Point, Triangle


def random_triangle(rng: random.Random, span: float = 10.0, margin: float = 1e-3) -> Triangle:
    """A uniformly sampled triangle, rejection-sampled away from slivers."""
    while True:
        a = Point(rng.uniform(-span, span), rng.uniform(-span, span))
        b = Point(rng.uniform(-span, span), rng.uniform(-span, span))
        c = Point(rng.uniform(-span, span), rng.uniform(-span, span))
        two_area = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
        longest = max(a.distance_to(b), b.distance_to(c), c.distance_to(a))
        if longest > 0 and abs(two_area) > margin * longest * longest:
            return Triangle(a, b, c)


def random_scalene(rng: random.Random, span: float = 10.0, margin: float = 1e-3) -> Triangle:
    """Like random_triangle but also bounded away from the equilateral shape."""
    while True:
        t = random_triangle(rng, span, margin)
        angles = t.angles()
        if max(angles) - min(angles) > 1e-2:
            return t
