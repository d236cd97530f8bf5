"""
Seeded random primitive digraphs.

An instance starts from a random Hamiltonian cycle, gains every other arc
(loops included) independently with probability p, and is kept only if it
is primitive. Each sample index draws from its own ``random.Random`` seeded
from (seed, index), so any slice of a sample stream can be regenerated
independently of the others.
"""
import logging
import random

from .digraph import Digraph, is_primitive
from .errors import ParameterError

log = logging.getLogger(__name__)

ARC_PROBABILITIES = (0.05, 0.1, 0.2)
MAX_TRIES = 10000


def random_primitive(n, p, rng):
    if n < 2:
        raise ParameterError('order n={0} must be >= 2'.format(n))
    for attempt in range(MAX_TRIES):
        order = list(range(1, n + 1))
        rng.shuffle(order)
        arcs = set((order[i], order[(i + 1) % n]) for i in range(n))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if (i, j) not in arcs and rng.random() < p:
                    arcs.add((i, j))
        d = Digraph(n, arcs)
        if is_primitive(d):
            return d
    raise ParameterError('no primitive digraph of order {0} after {1} tries at p={2}'.format(n, MAX_TRIES, p))


def sample_rng(seed, index):
    return random.Random('{0}:{1}'.format(seed, index))


def sample(seed, index, n_max, n_min=2):
    """Sample number ``index`` of the stream for ``seed``: order in n_min..n_max, p swept cyclically."""
    if n_max < n_min:
        raise ParameterError('n_max={0} below n_min={1}'.format(n_max, n_min))
    rng = sample_rng(seed, index)
    n = rng.randint(n_min, n_max)
    p = ARC_PROBABILITIES[index % len(ARC_PROBABILITIES)]
    return random_primitive(n, p, rng), p
