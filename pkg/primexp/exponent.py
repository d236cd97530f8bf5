"""
Exponents, walk existence and C(S)-walk distances.

A walk "meets" a p-cycle when it shares at least one vertex with some simple
cycle of length p; the zero-length walk at v meets exactly the cycles
through v. d(C(S)) is the maximum of d_{C(S)}(u, v) over all ordered pairs,
u = v included.
"""
import logging

from .arithmetic import GeneratorSet, frobenius
from .digraph import DEFAULT_CYCLE_CAP, check_vertex, cycle_profile, is_primitive, to_matrix
from .errors import CycleCapError, NotPrimitiveError, TooManyCycleLengthsError
from .matrix import is_all_positive, multiply, power

log = logging.getLogger(__name__)

MAX_CYCLE_LENGTHS = 20


class ExponentResult(object):
    """exp(A) and, when exp >= 2, the lexicographically least pair with no walk of length exp-1."""
    __slots__ = ('value', 'certificate')

    def __init__(self, value, certificate=None):
        self.value = value
        self.certificate = certificate

    @property
    def certificate_length(self):
        return self.value - 1 if self.certificate else None

    def __int__(self):
        return self.value

    def __repr__(self):
        return 'ExponentResult({0}, certificate={1!r})'.format(self.value, self.certificate)


class CWalkResult(object):
    __slots__ = ('per_pair', 'max', 'arg_max')

    def __init__(self, per_pair, max_value, arg_max):
        self.per_pair = per_pair
        self.max = max_value
        self.arg_max = arg_max

    def get(self, u, v):
        """d_{C(S)}(v_u, v_v), 1-based."""
        return self.per_pair[u - 1][v - 1]

    def __repr__(self):
        return 'CWalkResult(max={0}, arg_max={1!r})'.format(self.max, self.arg_max)


def wielandt_cap(n):
    return (n - 1) ** 2 + 1


def _first_zero(a):
    full = a.full_row
    for i, row in enumerate(a.rows):
        if row != full:
            missing = full & ~row
            return i + 1, (missing & -missing).bit_length()
    return None


def exponent(d):
    """Smallest k >= 1 with A^k all-positive, by successive multiplication."""
    if not is_primitive(d):
        raise NotPrimitiveError('digraph of order {0} is not primitive'.format(d.order))
    a = to_matrix(d)
    cap = wielandt_cap(d.order)
    current = a
    previous = None
    k = 1
    while not is_all_positive(current):
        if k >= cap:
            raise NotPrimitiveError('no all-positive power up to {0}'.format(cap))
        previous = current
        current = multiply(current, a)
        k += 1
    certificate = _first_zero(previous) if previous is not None else None
    return ExponentResult(k, certificate)


def walk_exists(d, source, target, length):
    """True iff some walk of exactly ``length`` arcs leads from source to target."""
    check_vertex(d, source)
    check_vertex(d, target)
    if length < 0:
        raise ValueError('walk length must be nonnegative, got {0}'.format(length))
    return bool(power(to_matrix(d), length).entry(source - 1, target - 1))


def exact_profile(d, cap=DEFAULT_CYCLE_CAP):
    profile = cycle_profile(d, cap)
    if profile.cycle_count_cap_hit:
        raise CycleCapError('cycle enumeration truncated at {0}; C(S) unknown'.format(cap))
    return profile


def c_walk_distances(d, cap=DEFAULT_CYCLE_CAP, profile=None):
    """All-pairs C(S)-walk distances by BFS over (vertex, lengths-met) states."""
    if not is_primitive(d):
        raise NotPrimitiveError('digraph of order {0} is not primitive'.format(d.order))
    if profile is None:
        profile = exact_profile(d, cap)
    elif profile.cycle_count_cap_hit:
        raise CycleCapError('cycle profile is truncated; C(S) unknown')
    lengths = profile.lengths
    if len(lengths) > MAX_CYCLE_LENGTHS:
        raise TooManyCycleLengthsError('|C(S)| = {0} exceeds {1}'.format(len(lengths), MAX_CYCLE_LENGTHS))

    bit_of = dict((p, 1 << i) for i, p in enumerate(lengths))
    met = [0] * d.order
    for v, ls in profile.per_vertex.items():
        for p in ls:
            met[v - 1] |= bit_of[p]
    full = (1 << len(lengths)) - 1
    successors = [[w - 1 for w in d.successors(v)] for v in d.vertices()]

    per_pair = []
    for s in range(d.order):
        row = [None] * d.order
        remaining = d.order
        start = (s, met[s])
        seen = set([start])
        frontier = [start]
        depth = 0
        while frontier and remaining:
            for v, mask in frontier:
                if mask == full and row[v] is None:
                    row[v] = depth
                    remaining -= 1
            if not remaining:
                break
            depth += 1
            nxt = []
            for v, mask in frontier:
                for w in successors[v]:
                    state = (w, mask | met[w])
                    if state not in seen:
                        seen.add(state)
                        nxt.append(state)
            frontier = nxt
        per_pair.append(tuple(row))

    best = None
    arg_max = None
    for i, row in enumerate(per_pair):
        for j, value in enumerate(row):
            if best is None or value > best:
                best = value
                arg_max = (i + 1, j + 1)
    return CWalkResult(tuple(per_pair), best, arg_max)


def lemma22_bound(d, cap=DEFAULT_CYCLE_CAP, profile=None, walks=None):
    """d(C(S)) + phi(C(S))."""
    if profile is None:
        profile = exact_profile(d, cap)
    if walks is None:
        walks = c_walk_distances(d, cap, profile)
    return walks.max + frobenius(GeneratorSet(profile.lengths))
