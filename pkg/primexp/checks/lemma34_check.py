import logging
from math import gcd

from ..bounds import lemma34_bound, lemma34_case_bound
from ..errors import ParameterError
from ..exponent import c_walk_distances, exact_profile, exponent, lemma22_bound
from ..families import FamilySpec
from ..report import VerificationRow
from .interface import Check

log = logging.getLogger(__name__)


def h_specs(n_max, n_min=2):
    for n in range(n_min, n_max + 1):
        for g in range(1, n // 2 + 1):
            if gcd(n, g) != 1:
                continue
            for k in range(g + 1, n - g + 2):
                yield FamilySpec('h', n, g, k=k)


class Lemma34Check(Check):
    """exp(H) <= (n-1)g + n - 2g over every valid (n, g, k), with the proof's case data recorded."""
    name = 'lemma34'

    def __init__(self, n_max=12, **kwargs):
        super(Lemma34Check, self).__init__(**kwargs)
        if not 2 <= n_max <= 12:
            raise ParameterError('n_max={0} outside 2..12'.format(n_max))
        self.n_max = n_max
        self.specs = list(h_specs(n_max))

    def size(self):
        return len(self.specs)

    def process(self, index):
        spec = self.specs[index]
        n, g, k = spec.n, spec.g, spec.k
        d = spec.build()
        exp = exponent(d).value
        bound = lemma34_bound(n, g)
        case, claimed_dc, case_bound = lemma34_case_bound(n, g, k)
        profile = exact_profile(d, self.cycle_cap)
        walks = c_walk_distances(d, profile=profile)
        notes = 'case {0}: claimed d(C)={1} computed d(C)={2} at {3}; case bound {4}; {5}'.format(
            case, claimed_dc, walks.max, walks.arg_max, case_bound, 'tight' if exp == bound else 'slack')
        return [
            VerificationRow('L3.4', spec.key(), bound, exp, asserted=True, notes=notes),
            VerificationRow('L2.2', spec.key(), lemma22_bound(d, profile=profile, walks=walks), exp,
                            asserted=True, notes='C={0}'.format(list(profile.lengths))),
        ]

    def summarize(self, rows):
        l34 = [row for row in rows if row.claim == 'L3.4']
        tight = [row for row in l34 if row.predicted == row.oracle]
        findings = ['L3.4: {0} of {1} H instances meet the bound with equality'.format(len(tight), len(l34))]
        for finding in findings:
            log.info(finding)
        return findings

    def params(self):
        return {'n_max': self.n_max}
