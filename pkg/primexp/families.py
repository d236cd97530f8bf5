"""
Constructors for the named extremal digraphs and enumerators over their
parameter spaces.

The standard cycle runs *descending* (arcs v_j -> v_{j-1} and v_1 -> v_n);
H is built on an *ascending* n-cycle. Both orientations are kept as
written; comparisons across them go through :mod:`primexp.iso`.
"""
from math import gcd

from .bounds import chord_limit
from .digraph import Digraph
from .errors import FamilySpecError, ParameterError

KINDS = ('cycle', 'd1', 'd2', 'd_gN', 'q1', 'q2', 'h', 'chord', 'theta')

# parameters each kind cannot be built without, besides n
REQUIRED = {
    'd_gN': ('g', 'N'),
    'q1': ('g',),
    'q2': ('g',),
    'h': ('g', 'k'),
    'chord': ('g', 'mask'),
    'theta': ('g', 'q'),
}


def _cycle_arcs(n):
    return [(j, j - 1) for j in range(2, n + 1)] + [(1, n)]


def _check_dgn(n, g, N):
    if n < 2:
        raise ParameterError('order n={0} must be >= 2'.format(n))
    if not 1 <= g <= n - 1:
        raise ParameterError('range: girth g={0} outside 1..{1}'.format(g, n - 1))
    if gcd(n, g) != 1:
        raise ParameterError('gcd: gcd(n={0}, g={1}) = {2}, must be 1'.format(n, g, gcd(n, g)))
    if not N:
        raise ParameterError('emptiness: chord index set N is empty')
    t = chord_limit(n, g)
    bad = [i for i in N if not 1 <= i <= t]
    if bad:
        raise ParameterError('range: chord indices {0} outside F = 1..{1}'.format(bad, t))


def _check_h(n, g, k):
    if g < 1:
        raise ParameterError('girth g={0} must be >= 1'.format(g))
    if gcd(n, g) != 1:
        raise ParameterError('gcd: gcd(n={0}, g={1}) = {2}, must be 1'.format(n, g, gcd(n, g)))
    if n < 2 * g:
        raise ParameterError('range: need n >= 2g, got n={0} g={1}'.format(n, g))
    if not (g + 1 <= k and g + k - 1 <= n):
        raise ParameterError('range: anchor k={0} outside {1}..{2}'.format(k, g + 1, n - g + 1))


class FamilySpec(object):
    """Parameters selecting one constructed digraph."""
    __slots__ = ('kind', 'n', 'g', 'N', 'k', 'mask', 'q')

    def __init__(self, kind, n, g=None, N=(), k=None, mask=None, q=None):
        if kind not in KINDS:
            raise FamilySpecError('unknown family {0!r}; expected one of {1}'.format(kind, ', '.join(KINDS)))
        if n is None:
            raise FamilySpecError('family {0} needs n'.format(kind))
        given = {'g': g is not None, 'N': bool(N), 'k': k is not None,
                 'mask': mask is not None, 'q': q is not None}
        missing = [key for key in REQUIRED.get(kind, ()) if not given[key]]
        if missing:
            raise FamilySpecError('family {0} needs {1}'.format(kind, ', '.join(missing)))
        self.kind = kind
        self.n = n
        self.g = g
        self.N = tuple(sorted(set(N)))
        self.k = k
        self.mask = mask
        self.q = q

    @property
    def r(self):
        return max(self.N) if self.N else None

    @property
    def t(self):
        return chord_limit(self.n, self.g) if self.g is not None else None

    def build(self):
        if self.kind == 'cycle':
            return standard_cycle(self.n)
        elif self.kind == 'd1':
            return d1(self.n)
        elif self.kind == 'd2':
            return d2(self.n)
        elif self.kind == 'd_gN':
            return d_gN(self.n, self.g, self.N)
        elif self.kind == 'q1':
            return q1(self.n, self.g)
        elif self.kind == 'q2':
            return q2(self.n, self.g)
        elif self.kind == 'h':
            return h_graph(self.n, self.g, self.k)
        elif self.kind == 'theta':
            return theta_graph(self.n, self.g, self.q)
        return chord_member(self.n, self.g, self.mask)

    def key(self):
        """Instance fields for report rows, in a fixed order."""
        out = [('kind', self.kind), ('n', self.n)]
        if self.g is not None:
            out.append(('g', self.g))
        if self.N:
            out.append(('N', list(self.N)))
        if self.k is not None:
            out.append(('k', self.k))
        if self.mask is not None:
            out.append(('mask', self.mask))
        if self.q is not None:
            out.append(('q', self.q))
        return out

    def __eq__(self, other):
        if not isinstance(other, FamilySpec):
            return NotImplemented
        return all(getattr(self, f) == getattr(other, f) for f in self.__slots__)

    def __hash__(self):
        return hash(tuple(getattr(self, f) for f in self.__slots__))

    def __repr__(self):
        return 'FamilySpec({0})'.format(format_family_spec(self))


def standard_cycle(n):
    if n < 2:
        raise ParameterError('order n={0} must be >= 2'.format(n))
    return Digraph(n, _cycle_arcs(n))


def d1(n):
    if n < 3:
        raise ParameterError('order n={0} must be >= 3'.format(n))
    return Digraph(n, _cycle_arcs(n) + [(1, n - 1)])


def d2(n):
    if n < 3:
        raise ParameterError('order n={0} must be >= 3'.format(n))
    return Digraph(n, _cycle_arcs(n) + [(1, n - 1), (2, n)])


def d_gN(n, g, N):
    """Standard n-cycle plus chords v_i -> v_{g+i-1} for i in N, each closing a g-cycle."""
    N = sorted(set(N))
    _check_dgn(n, g, N)
    return Digraph(n, _cycle_arcs(n) + [(i, g + i - 1) for i in N])


def q1(n, g):
    return d_gN(n, g, [1])


def q2(n, g):
    return d_gN(n, g, [1, 2])


def h_graph(n, g, k):
    """Ascending n-cycle with g-cycles closed by chords v_g -> v_1 and v_{k+g-1} -> v_k."""
    _check_h(n, g, k)
    arcs = [(j, j + 1) for j in range(1, n)] + [(n, 1)]
    arcs += [(g, 1), (k + g - 1, k)]
    return Digraph(n, arcs)


def _check_theta(n, g, q):
    if not 2 <= g < q:
        raise ParameterError('range: need 2 <= g < q, got g={0} q={1}'.format(g, q))
    if gcd(g, q) != 1:
        raise ParameterError('gcd: gcd(g={0}, q={1}) = {2}, must be 1'.format(g, q, gcd(g, q)))
    if not q + 1 <= n <= g + q - 1:
        raise ParameterError('range: order n={0} outside {1}..{2}'.format(n, q + 1, g + q - 1))


def theta_graph(n, g, q):
    """A g-cycle and a q-cycle sharing the path v_1 -> ... -> v_{s+1}, s = g+q-1-n.

    Every vertex lies on one of the two cycles and no other cycle exists, so
    the cycle lengths are exactly {g, q} with q <= n-1.
    """
    _check_theta(n, g, q)
    s = g + q - 1 - n
    arcs = [(i, i + 1) for i in range(1, s + 1)]
    arcs += [(i, i + 1) for i in range(s + 1, g)] + [(g, 1)]
    arcs += [(s + 1, g + 1)] + [(i, i + 1) for i in range(g + 1, n)] + [(n, 1)]
    return Digraph(n, arcs)


def theta_specs(n_max, n_min=2):
    """Every valid theta spec with order in n_min..n_max, by n, then g, then q."""
    for n in range(n_min, n_max + 1):
        for g in range(2, n):
            for q in range(g + 1, n):
                if gcd(g, q) == 1 and n <= g + q - 1:
                    yield FamilySpec('theta', n, g, q=q)


def _check_chord_params(n, g):
    if n < 3 or not 2 <= g <= n - 1:
        raise ParameterError('need 2 <= g <= n-1, got n={0} g={1}'.format(n, g))


def chord_member(n, g, mask):
    """Standard n-cycle plus the span-g chord at every cyclic position whose bit is set in ``mask``."""
    _check_chord_params(n, g)
    if not 1 <= mask < (1 << n):
        raise ParameterError('chord mask {0} outside 1..{1}'.format(mask, (1 << n) - 1))
    chords = [(i, (g + i - 2) % n + 1) for i in range(1, n + 1) if mask >> (i - 1) & 1]
    return Digraph(n, _cycle_arcs(n) + chords)


def chord_family_specs(n, g, start=1):
    """All chord-family members as specs, in ascending mask order, resumable from ``start``."""
    _check_chord_params(n, g)
    for mask in range(max(start, 1), 1 << n):
        yield FamilySpec('chord', n, g, mask=mask)


def chord_family(n, g, start=1):
    for spec in chord_family_specs(n, g, start):
        yield spec.build()


def _check_enum(n, g):
    if not 1 <= g <= n - 1 or gcd(n, g) != 1:
        raise ParameterError('need gcd(n, g) = 1 and 1 <= g <= n-1, got n={0} g={1}'.format(n, g))


def _mask_to_set(mask):
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def enumerate_DgN(n, g, start=0):
    """Every nonempty N within F = {1..t}, ordered by its bit pattern."""
    _check_enum(n, g)
    t = chord_limit(n, g)
    for mask in range(1, 1 << t)[start:]:
        yield FamilySpec('d_gN', n, g, N=_mask_to_set(mask))


def enumerate_Dr(n, g, r, start=0):
    """The D^r class: every N within F with max(N) = r."""
    _check_enum(n, g)
    t = chord_limit(n, g)
    if not 1 <= r <= t:
        raise ParameterError('r={0} outside 1..t={1}'.format(r, t))
    for mask in range(1 << (r - 1), 1 << r)[start:]:
        yield FamilySpec('d_gN', n, g, N=_mask_to_set(mask))


def parse_family_spec(text):
    """Parse the inline syntax ``kind:key=value,...``, e.g. ``d_gN:n=10,g=3,N=1,2``."""
    kind, sep, rest = text.strip().partition(':')
    if kind not in KINDS:
        raise FamilySpecError('unknown family {0!r} in {1!r}'.format(kind, text))
    params = {}
    last = None
    for token in (rest.split(',') if rest else []):
        token = token.strip()
        if '=' in token:
            key, _, value = token.partition('=')
            last = key.strip()
            params.setdefault(last, []).append(value.strip())
        elif last == 'N' and token:
            params['N'].append(token)
        else:
            raise FamilySpecError('cannot parse {0!r} in {1!r}'.format(token, text))

    try:
        values = dict((key, [int(v) for v in vs]) for key, vs in params.items())
    except ValueError:
        raise FamilySpecError('non-integer value in {0!r}'.format(text))
    unknown = set(values) - set(['n', 'g', 'N', 'k', 'mask', 'q'])
    if unknown:
        raise FamilySpecError('unknown keys {0} in {1!r}'.format(sorted(unknown), text))
    if 'n' not in values:
        raise FamilySpecError('missing n in {0!r}'.format(text))

    def single(key):
        vs = values.get(key)
        return vs[0] if vs else None

    return FamilySpec(kind, single('n'), g=single('g'), N=values.get('N', ()),
                      k=single('k'), mask=single('mask'), q=single('q'))


def format_family_spec(spec):
    parts = []
    for key, value in spec.key()[1:]:
        if key == 'N':
            value = ','.join(str(i) for i in value)
        parts.append('{0}={1}'.format(key, value))
    return '{0}:{1}'.format(spec.kind, ','.join(parts))
