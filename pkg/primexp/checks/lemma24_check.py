import logging
from math import factorial

from ..digraph import from_matrix, girth, is_primitive
from ..errors import ParameterError
from ..exponent import exponent
from ..families import d1, d2
from ..iso import are_isomorphic, automorphism_count, cycle_notation
from ..matrix import BoolMatrix
from ..report import VerificationRow
from .interface import Check

log = logging.getLogger(__name__)


class Lemma24Check(Check):
    """Exhaustive check that exp = (n-1)^2+1 and exp = (n-1)^2 single out D1 and D2."""
    name = 'lemma24'

    def __init__(self, n=4, **kwargs):
        super(Lemma24Check, self).__init__(**kwargs)
        if not 4 <= n <= 5:
            raise ParameterError('exhaustive order n={0} outside 4..5'.format(n))
        self.n = n
        self.top = (n - 1) ** 2 + 1
        self.extremal = {'D1': d1(n), 'D2': d2(n)}

    def size(self):
        return 1 << (self.n * self.n)

    def _identify(self, d):
        for name in ('D1', 'D2'):
            result = are_isomorphic(d, self.extremal[name], self.cycle_cap)
            if result:
                return name, result.witness
        return 'other', None

    def process(self, index):
        d = from_matrix(BoolMatrix.from_index(self.n, index))
        if not is_primitive(d):
            return []
        exp = exponent(d).value
        low_girth = girth(d) == self.n - 1
        if exp < self.top - 1 and not low_girth:
            return []

        name, witness = self._identify(d)
        notes = cycle_notation(witness) if witness else ''
        instance = [('n', self.n), ('index', index)]
        rows = []
        if exp == self.top:
            rows.append(VerificationRow('L2.4', instance, 'D1', name, rule='eq', asserted=True,
                                        notes=notes, phase='d1'))
        elif exp == self.top - 1:
            rows.append(VerificationRow('L2.4', instance, 'D2', name, rule='eq', asserted=True,
                                        notes=notes, phase='d2'))
        if low_girth:
            rows.append(VerificationRow('L2.4', instance, ['D1', 'D2'], name, rule='in',
                                        notes='girth {0}, exp {1}'.format(self.n - 1, exp), phase='girth'))
        return rows

    def finalize(self, rows):
        out = []
        for name, phase in (('D1', 'd1'), ('D2', 'd2')):
            automorphisms = automorphism_count(self.extremal[name], self.cycle_cap)
            orbit = factorial(self.n) // automorphisms
            count = sum(1 for row in rows if row.phase == phase)
            out.append(VerificationRow(
                'L2.4', [('n', self.n)], orbit, count, rule='eq', asserted=True,
                notes='labeled {0} copies: {1}!/|Aut| = {1}!/{2}'.format(name, self.n, automorphisms),
                phase=phase + '-class'))
        return out

    def summarize(self, rows):
        strays = [row for row in rows if row.phase == 'girth' and not row.agree]
        if strays:
            return ['girth {0}: {1} primitive matrices are isomorphic to neither D1 nor D2'.format(
                self.n - 1, len(strays))]
        return []

    def params(self):
        return {'n': self.n}
