import random

import pytest
from hypothesis import HealthCheck, settings

from woi.corpus import load_corpus

settings.register_profile(
    "ci", derandomize=True, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def figs(corpus):
    return {name: entry.graph() for name, entry in corpus.items()}


@pytest.fixture(scope="session")
def sink_corpus():
    """The seeded 200-graph corpus of sink-oriented weighted graphs."""
    from woi.generators import random_sink_oriented_graph
    rng = random.Random(0x5EED01)
    return [random_sink_oriented_graph(rng, nmax=7, wmax=4) for _ in range(200)]


@pytest.fixture(scope="session")
def ideal_corpus():
    """The seeded 100-ideal corpus for engine agreement."""
    from woi.generators import random_ideal
    rng = random.Random(0x5EED02)
    return [random_ideal(rng, nmax=5, max_degree=8) for _ in range(100)]
