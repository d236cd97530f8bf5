import logging

from ..arithmetic import frobenius
from ..bounds import lemma23_bound, lemma25_bound, lemma26_bound, lemma32_bound
from ..digraph import cycle_profile, girth, is_primitive
from ..errors import ParameterError
from ..exponent import c_walk_distances, exponent
from ..families import chord_member, FamilySpec, theta_specs
from ..report import VerificationRow
from ..sampler import sample
from .interface import Check, matrix_instance

log = logging.getLogger(__name__)

DEFAULT_CHORD_PARAMS = ((10, 3), (10, 7), (10, 9), (11, 3))
MAX_SAMPLE_ORDER = 10
# two-cycle instances below this order carry no L3.2 row
THETA_MIN_ORDER = 6
MAX_THETA_ORDER = 12


def bound_rows(d, instance, cap):
    """Rows for every established upper bound that applies to the primitive digraph ``d``."""
    if not is_primitive(d):
        log.debug('skipping non-primitive %r', instance)
        return []
    profile = cycle_profile(d, cap)
    if profile.cycle_count_cap_hit:
        log.warning('excluding %r: cycle profile truncated at %d', instance, cap)
        return []
    n = d.order
    exp = exponent(d).value
    lengths = profile.lengths
    g = lengths[0]
    if girth(d) != g:
        log.error('girth mismatch on %r: bfs=%s cycles=%s', instance, girth(d), g)

    walks = c_walk_distances(d, profile=profile)
    phi = frobenius(lengths)
    rows = [
        VerificationRow('L2.2', instance, walks.max + phi, exp, asserted=True,
                        notes='d(C)={0} at {1} phi={2}'.format(walks.max, walks.arg_max, phi)),
        VerificationRow('L2.3', instance, lemma23_bound(n, g), exp, asserted=True,
                        notes='g={0}'.format(g)),
    ]
    cap25 = lemma25_bound(n)
    if len(lengths) >= 3:
        rows.append(VerificationRow('L2.5', instance, cap25, exp, asserted=True,
                                    notes='C={0}'.format(list(lengths))))
    if exp > cap25:
        rows.append(VerificationRow('C2.1', instance, 2, len(lengths), rule='eq', asserted=True,
                                    notes='exp {0} > {1}; C={2}'.format(exp, cap25, list(lengths))))
    if len(lengths) == 2:
        q = lengths[1]
        rows.append(VerificationRow('L2.6', instance, lemma26_bound(n, g, q), exp, asserted=True,
                                    notes='C={0}'.format(list(lengths))))
        if n >= 6 and q <= n - 1:
            rows.append(VerificationRow('L3.2', instance, lemma32_bound(n, g), exp, asserted=True,
                                        notes='C={0}'.format(list(lengths))))
    return rows


class BoundsCheck(Check):
    """Established bounds over chord-family members, two-cycle theta digraphs
    and seeded random primitive digraphs, indexed in that order."""
    name = 'bounds'

    def __init__(self, n_max=8, samples=10000, seed=0, chord_params=DEFAULT_CHORD_PARAMS, theta_n_max=9,
                 **kwargs):
        super(BoundsCheck, self).__init__(**kwargs)
        if samples and not 2 <= n_max <= MAX_SAMPLE_ORDER:
            raise ParameterError('n_max={0} outside 2..{1} for random sampling'.format(n_max, MAX_SAMPLE_ORDER))
        if theta_n_max > MAX_THETA_ORDER:
            raise ParameterError('theta_n_max={0} above {1}'.format(theta_n_max, MAX_THETA_ORDER))
        self.theta_n_max = theta_n_max
        self.thetas = list(theta_specs(theta_n_max, THETA_MIN_ORDER))
        self.n_max = n_max
        self.samples = samples
        self.seed = seed
        self.chord_params = tuple(tuple(p) for p in chord_params)
        self.offsets = []
        total = 0
        for n, g in self.chord_params:
            # validates (n, g)
            chord_member(n, g, 1)
            self.offsets.append((total, n, g))
            total += (1 << n) - 1
        self.chord_total = total

    def size(self):
        return self.chord_total + len(self.thetas) + self.samples

    def instance(self, index):
        if index < self.chord_total:
            for offset, n, g in reversed(self.offsets):
                if index >= offset:
                    spec = FamilySpec('chord', n, g, mask=index - offset + 1)
                    return spec.build(), spec.key()
        i = index - self.chord_total
        if i < len(self.thetas):
            spec = self.thetas[i]
            return spec.build(), spec.key()
        i -= len(self.thetas)
        d, p = sample(self.seed, i, self.n_max)
        return d, matrix_instance(d, sample=i)

    def process(self, index):
        d, instance = self.instance(index)
        return bound_rows(d, instance, self.cycle_cap)

    def params(self):
        return {'n_max': self.n_max, 'samples': self.samples, 'seed': self.seed,
                'chord': [list(p) for p in self.chord_params], 'theta_n_max': self.theta_n_max}
