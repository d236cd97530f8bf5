import logging
from collections import Counter
from fractions import Fraction
from math import gcd

from ..bounds import (chord_limit, girth_threshold_proof, girth_threshold_stated, h_exclusion_holds,
                      proof_inequality_holds, thm36_range, z_of_w)
from ..digraph import cycle_profile, from_matrix, girth, is_primitive, to_matrix
from ..errors import ParameterError
from ..exponent import exponent
from ..families import enumerate_Dr, FamilySpec
from ..iso import classify_against
from ..matrix import first_positive_power
from ..report import VerificationRow
from .interface import Check, matrix_instance

log = logging.getLogger(__name__)


class Thm36Check(Check):
    """Characterization of exponents in the window above the two-cycle-length bound.

    Three phases share one index space: forward (every D^z member against
    its predicted exponent), converse (every chord-family member with girth
    g and exponent in the window, classified against D^z, once as a digraph
    and once from its matrix powers) and audit (the girth thresholds for
    each g).
    """
    name = 'thm36'

    def __init__(self, n=10, g=3, **kwargs):
        super(Thm36Check, self).__init__(**kwargs)
        if n < 4 or not 2 <= g <= n - 1 or gcd(n, g) != 1:
            raise ParameterError('need n >= 4, 2 <= g <= n-1 and gcd(n, g) = 1, got n={0} g={1}'.format(n, g))
        self.n = n
        self.g = g
        self.t = chord_limit(n, g)
        self.low, self.high = thm36_range(n, g)
        self.forward = [(z, spec) for z in range(1, self.t + 1) for spec in enumerate_Dr(n, g, z)]
        self.families = dict((z, [spec.build() for spec in enumerate_Dr(n, g, z)])
                             for z in range(1, self.t + 1))
        self.converse_total = (1 << n) - 1
        self.audit = list(range(1, n))

    def size(self):
        return len(self.forward) + self.converse_total + len(self.audit)

    def in_window(self, w):
        return self.low < w <= self.high

    def classify(self, d, w):
        """(z, index of the first isomorphic D^z member or None); z is None outside the window."""
        if not self.in_window(w):
            return None, None
        z = z_of_w(self.n, self.g, w)
        if z not in self.families:
            return z, None
        return z, classify_against(d, self.families[z], self.cycle_cap)

    def process(self, index):
        if index < len(self.forward):
            return self.process_forward(*self.forward[index])
        index -= len(self.forward)
        if index < self.converse_total:
            return self.process_converse(index + 1)
        return self.process_audit(self.audit[index - self.converse_total])

    def process_forward(self, z, spec):
        n, g = self.n, self.g
        d = spec.build()
        exp = exponent(d).value
        predicted = (n - 2) * g + 1 + n - z
        own_z, match = self.classify(d, exp)
        if own_z is None:
            notes = 'exp outside window ({0}, {1}]'.format(self.low, self.high)
        elif match is None:
            notes = 'does not classify into D^{0}'.format(own_z)
        else:
            notes = 'classifies into D^{0}[{1}]'.format(own_z, match)
        rows = [VerificationRow('T3.6', spec.key(), predicted, exp, rule='eq', notes=notes, phase='forward')]
        if spec.N == (1,):
            rows.append(VerificationRow('C3.8', spec.key(), (n - 2) * g + n, exp, rule='eq',
                                        notes='Q1', phase='forward'))
        elif spec.N == (1, 2):
            rows.append(VerificationRow('C3.8', spec.key(), (n - 2) * g + n - 1, exp, rule='eq',
                                        notes='Q2', phase='forward'))
        return rows

    def process_converse(self, mask):
        n, g = self.n, self.g
        spec = FamilySpec('chord', n, g, mask=mask)
        d = spec.build()
        if not is_primitive(d) or girth(d) != g:
            return []
        exp = exponent(d).value
        if not self.in_window(exp):
            return []

        rows = []
        z, match = self.classify(d, exp)
        if match is not None:
            notes = 'w={0}; D^{1}[{2}] N={3}'.format(exp, z, match, list(enumerate_Dr(n, g, z))[match].N)
        elif z > self.t:
            notes = 'w={0}; z={1} exceeds t={2}'.format(exp, z, self.t)
        else:
            notes = 'w={0}; no isomorphic member of D^{1}'.format(exp, z)
        rows.append(VerificationRow('T3.6', spec.key(), z, z if match is not None else None, rule='eq',
                                    notes=notes, phase='converse'))

        a = to_matrix(d)
        w = first_positive_power(a, self.high)
        matrix_z = n + 1 + g * (n - 2) - w
        _, matrix_match = self.classify(from_matrix(a), w)
        rows.append(VerificationRow('C3.7', matrix_instance(d), matrix_z,
                                    matrix_z if matrix_match is not None else None, rule='eq',
                                    notes='mask={0}; exp(A)={1}'.format(mask, w), phase='converse'))

        profile = cycle_profile(d, self.cycle_cap)
        if profile.cycle_count_cap_hit:
            log.warning('excluding chord mask %d from the cycle-set check: profile truncated', mask)
        else:
            rows.append(VerificationRow('T3.6', spec.key(), [g, n], list(profile.lengths), rule='eq',
                                        asserted=True, notes='w={0}'.format(exp), phase='cycles'))
        return rows

    def process_audit(self, g):
        n = self.n
        stated = girth_threshold_stated(n)
        proof = girth_threshold_proof(n)
        remark = Fraction(n * n - 4 * n, 4 * (n - 3)) >= 2
        notes = 'stated threshold g>={0}; proof inequality needs g>={1}; H-exclusion {2}; threshold>=2 {3}'.format(
            stated, proof, 'holds' if h_exclusion_holds(n, g) else 'fails', 'holds' if remark else 'fails')
        return [VerificationRow('T3.6', [('n', n), ('g', g)], g >= stated, proof_inequality_holds(n, g),
                                rule='eq', notes=notes, phase='audit')]

    def summarize(self, rows):
        findings = []
        forward = [row for row in rows if row.phase == 'forward' and row.claim == 'T3.6']
        findings.append('T3.6 forward: {0} of {1} D^z members have the predicted exponent'.format(
            sum(1 for row in forward if row.agree), len(forward)))
        unclassified = [row for row in forward
                        if row.notes.startswith('does not classify') or row.notes.startswith('exp outside')]
        if unclassified:
            findings.append('T3.6 forward: {0} D^z members do not classify into the class their own '
                            'exponent predicts'.format(len(unclassified)))

        converse = [row for row in rows if row.phase == 'converse' and row.claim == 'T3.6']
        outcomes = Counter((row.predicted, row.agree) for row in converse)
        for z in sorted(set(z for z, _ in outcomes)):
            findings.append('T3.6 converse: z={0}: {1} classified, {2} unclassified'.format(
                z, outcomes[(z, True)], outcomes[(z, False)]))
        if not converse:
            findings.append('T3.6 converse: no chord-family member of girth {0} has exponent in ({1}, {2}]'.format(
                self.g, self.low, self.high))
        matrix_rows = [row for row in rows if row.claim == 'C3.7']
        if matrix_rows:
            findings.append('C3.7: {0} of {1} matrices with exponent in the window classify through D(A)'.format(
                sum(1 for row in matrix_rows if row.agree), len(matrix_rows)))

        separated = [dict(row.instance)['g'] for row in rows if row.phase == 'audit' and not row.agree]
        if separated:
            findings.append('T3.6 audit: n={0}: girths {1} satisfy the printed threshold but not the proof '
                            'inequality (or vice versa)'.format(self.n, separated))
        if self.g < girth_threshold_stated(self.n) or self.g < girth_threshold_proof(self.n):
            findings.append('T3.6 audit: (n, g) = ({0}, {1}) is below the stated threshold {2} or the proof '
                            'threshold {3}'.format(self.n, self.g, girth_threshold_stated(self.n),
                                                   girth_threshold_proof(self.n)))
        for finding in findings:
            log.warning(finding)
        return findings

    def params(self):
        return {'n': self.n, 'g': self.g}
