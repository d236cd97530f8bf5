"""
gcd utilities and the Frobenius number (conductor) of a generator set.

Here the Frobenius number of {s_1..s_l} is the smallest m >= 0 such that
every integer k >= m is a nonnegative combination of the generators, so a
coprime pair gives (s1-1)(s2-1), one more than the classical convention.
"""
from functools import reduce
from math import gcd

from .errors import ParameterError, UndefinedFrobeniusError


class GeneratorSet(object):
    __slots__ = ('values',)

    def __init__(self, values):
        values = [int(v) for v in values]
        if not values:
            raise ParameterError('generator set is empty')
        if any(v < 1 for v in values):
            raise ParameterError('generators must be positive: {0}'.format(values))
        if len(set(values)) != len(values):
            raise ParameterError('generators must be distinct: {0}'.format(values))
        self.values = tuple(sorted(values))

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, GeneratorSet):
            return NotImplemented
        return self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return 'GeneratorSet({0!r})'.format(self.values)


def _as_generators(g):
    return g if isinstance(g, GeneratorSet) else GeneratorSet(g)


def gcd_set(g):
    return reduce(gcd, _as_generators(g).values)


def _representable_table(values, bound):
    table = bytearray(bound + 1)
    table[0] = 1
    for m in range(1, bound + 1):
        for s in values:
            if s > m:
                break
            if table[m - s]:
                table[m] = 1
                break
    return table


def is_representable(g, m):
    """True iff m is a nonnegative integer combination of the generators."""
    if m < 0:
        return False
    return bool(_representable_table(_as_generators(g).values, m)[m])


def frobenius(g):
    """Conductor of the numerical semigroup generated by ``g``, by DP over representable integers."""
    g = _as_generators(g)
    if gcd_set(g) != 1:
        raise UndefinedFrobeniusError('gcd{0} = {1}, Frobenius number undefined'.format(g.values, gcd_set(g)))
    values = g.values
    if values[0] == 1:
        return 0
    # exceeds every conductor of the set by at least s_min
    bound = (values[0] - 1) * values[-1] + values[-1]
    table = _representable_table(values, bound)
    last_gap = max(m for m in range(bound + 1) if not table[m])
    return last_gap + 1


def frobenius_pair(s1, s2):
    """Closed form (s1-1)(s2-1) for a coprime pair; a cross-check for frobenius()."""
    if gcd(s1, s2) != 1:
        raise UndefinedFrobeniusError('gcd({0}, {1}) != 1'.format(s1, s2))
    return (s1 - 1) * (s2 - 1)
