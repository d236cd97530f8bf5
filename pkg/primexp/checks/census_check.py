from ..digraph import cycle_profile, from_matrix, girth, is_primitive
from ..errors import ParameterError
from ..exponent import exponent
from ..iso import canonical_form
from ..matrix import BoolMatrix
from .interface import Check

MAX_CENSUS_ORDER = 5


class CensusCheck(Check):
    """Canonical form, girth, C(S) and exponent of every primitive matrix in an index range."""
    name = 'census'

    def __init__(self, n=4, start=0, stop=None, **kwargs):
        super(CensusCheck, self).__init__(**kwargs)
        if not 2 <= n <= MAX_CENSUS_ORDER:
            raise ParameterError('census order n={0} outside 2..{1}'.format(n, MAX_CENSUS_ORDER))
        total = 1 << (n * n)
        stop = total if stop is None else stop
        if not 0 <= start <= stop <= total:
            raise ParameterError('index range {0}..{1} outside 0..{2}'.format(start, stop, total))
        self.n = n
        self.start = start
        self.stop = stop

    def size(self):
        return self.stop - self.start

    def process(self, index):
        d = from_matrix(BoolMatrix.from_index(self.n, self.start + index))
        if not is_primitive(d):
            return []
        profile = cycle_profile(d, self.cycle_cap)
        lengths = list(profile.lengths) if profile.exact else None
        return [(canonical_form(d).canonical_bits, girth(d), lengths, exponent(d).value)]

    def params(self):
        return {'n': self.n, 'start': self.start, 'stop': self.stop}
