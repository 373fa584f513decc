import random
from fractions import Fraction

from leibniz import settings


def make_rng(seed):
    """Seeded generator; equal seeds give identical draws on every platform."""
    return random.Random(seed)


def random_rational(rng, bound=None):
    """Draw p/q with |p| <= bound and 1 <= q <= bound."""
    bound = bound or settings.RANDOM_COEFF_BOUND
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_vector(rng, length, bound=None):
    return tuple(random_rational(rng, bound) for _ in range(length))
