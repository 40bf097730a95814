import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tnormcat import RCat, interval_collapse, lukasiewicz, min_transitive_closure, \
    minimum, nilpotent_minimum, product_tnorm

F = Fraction


@pytest.fixture(scope="session")
def all_families():
    return {
        "minimum": minimum(),
        "product": product_tnorm(),
        "lukasiewicz": lukasiewicz(),
        "nilpotent-minimum": nilpotent_minimum(),
        "interval-collapse": interval_collapse([(F(1, 5), F(1, 2))]),
    }


@pytest.fixture
def two_chain():
    """Elements x, y with hom(x,y) = 1/2 and hom(y,x) = 0."""
    return RCat(("x", "y"), ((1, F(1, 2)), (0, 1)))


def make_random_category(rng: random.Random, max_n: int, grid) -> RCat:
    """A valid category under any t-norm: random matrix, min-closed."""
    n = rng.randint(1, max_n)
    hom = [[rng.choice(grid) for _ in range(n)] for _ in range(n)]
    closed = min_transitive_closure(hom)
    return RCat(tuple(f"v{i}" for i in range(n)), closed)


EIGHT_GRID = tuple(F(k, 7) for k in range(8))
