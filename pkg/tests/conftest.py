import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd

import pytest

from seifert_calc.graph import StarGraph

E8 = StarGraph(0, 2, ((2, 1), (3, 2), (5, 4)))
FOUR_ONE = StarGraph(0, 3, ((4, 1),) * 3)
ELLIPTIC = StarGraph(1, 3, ())
TRIANGLE_237 = StarGraph(0, 1, ((2, 1), (3, 1), (7, 1)))


def arm_types(n_max):
    return [(n, q) for n in range(2, n_max + 1) for q in range(1, n) if gcd(n, q) == 1]


def random_star_corpus(count, seed=20240601, t_max=5, n_max=25, d_max=12, genera=(0, 0, 0, 1, 2)):
    """Valid star graphs outside the cyclic-quotient range."""
    rng = random.Random(seed)
    types = arm_types(n_max)
    out = []
    while len(out) < count:
        g = rng.choice(genera)
        t = rng.randint(0 if g else 3, t_max)
        sg = StarGraph(g, rng.randint(1, d_max), tuple(rng.choice(types) for _ in range(t)))
        if sg.e > 0:
            out.append(sg)
    return out


def genus0_sweep(t_values, d_max, n_max):
    types = arm_types(n_max)
    for t in t_values:
        for arms in combinations_with_replacement(types, t):
            slack = sum(Fraction(q, n) for n, q in arms)
            for d in range(1, d_max + 1):
                if d > slack:
                    yield StarGraph(0, d, arms)


@pytest.fixture(scope="session")
def corpus():
    return random_star_corpus(500)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
