"""
Digraphs associated with Boolean matrices and their cycle structure.

Vertices are 1-based (``v_1 .. v_n``). Reachability, distance, girth and
period kernels run directly on the adjacency bit-rows; simple-cycle
enumeration uses networkx's Johnson implementation.
"""
import itertools
import logging
from functools import reduce
from math import gcd

import networkx as nx

from .errors import ParameterError, VertexError
from .matrix import BoolMatrix

log = logging.getLogger(__name__)

DEFAULT_CYCLE_CAP = 10 ** 6


class Digraph(object):
    """Vertex/arc structure of order n; loops allowed, no multi-arcs."""
    __slots__ = ('order', 'arcs', 'out_rows', 'in_rows')

    def __init__(self, order, arcs):
        arcs = frozenset((int(i), int(j)) for i, j in arcs)
        out_rows = [0] * order
        in_rows = [0] * order
        for i, j in arcs:
            if not (1 <= i <= order and 1 <= j <= order):
                raise VertexError('arc ({0}, {1}) outside 1..{2}'.format(i, j, order))
            out_rows[i - 1] |= 1 << (j - 1)
            in_rows[j - 1] |= 1 << (i - 1)
        object.__setattr__(self, 'order', order)
        object.__setattr__(self, 'arcs', arcs)
        object.__setattr__(self, 'out_rows', tuple(out_rows))
        object.__setattr__(self, 'in_rows', tuple(in_rows))

    def __setattr__(self, name, value):
        raise AttributeError('Digraph is immutable')

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.order == other.order and self.arcs == other.arcs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.order, self.arcs))

    def __repr__(self):
        return 'Digraph({0}, {1!r})'.format(self.order, sorted(self.arcs))

    def vertices(self):
        return range(1, self.order + 1)

    def has_arc(self, i, j):
        return (i, j) in self.arcs

    def out_degree(self, v):
        return bin(self.out_rows[v - 1]).count('1')

    def in_degree(self, v):
        return bin(self.in_rows[v - 1]).count('1')

    def successors(self, v):
        return _bits(self.out_rows[v - 1])

    def predecessors(self, v):
        return _bits(self.in_rows[v - 1])

    def to_networkx(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices())
        graph.add_edges_from(sorted(self.arcs))
        return graph


class CycleProfile(object):
    """Cycle-length set C(S) and, per vertex, the lengths of simple cycles through it."""
    __slots__ = ('lengths', 'per_vertex', 'cycle_count_cap_hit')

    def __init__(self, lengths, per_vertex, cycle_count_cap_hit=False):
        self.lengths = tuple(sorted(lengths))
        self.per_vertex = dict((v, frozenset(ls)) for v, ls in per_vertex.items())
        self.cycle_count_cap_hit = cycle_count_cap_hit

    @property
    def exact(self):
        return not self.cycle_count_cap_hit

    @property
    def girth(self):
        return self.lengths[0] if self.lengths else None

    def __eq__(self, other):
        if not isinstance(other, CycleProfile):
            return NotImplemented
        return (self.lengths == other.lengths and self.per_vertex == other.per_vertex
                and self.cycle_count_cap_hit == other.cycle_count_cap_hit)

    def __repr__(self):
        return 'CycleProfile(lengths={0!r}, cap_hit={1!r})'.format(self.lengths, self.cycle_count_cap_hit)


def _bits(row):
    """1-based vertex labels of the set bits of ``row``, ascending."""
    out = []
    while row:
        low = row & -row
        out.append(low.bit_length())
        row ^= low
    return out


def from_matrix(a):
    arcs = [(i + 1, j) for i, row in enumerate(a.rows) for j in _bits(row)]
    return Digraph(a.order, arcs)


def to_matrix(d):
    return BoolMatrix(d.order, d.out_rows)


def _reach(rows, start_bit):
    seen = start_bit
    frontier = start_bit
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strongly_connected(d):
    full = (1 << d.order) - 1
    return _reach(d.out_rows, 1) == full and _reach(d.in_rows, 1) == full


def _bfs_levels(rows, order, source):
    """Shortest path lengths from 0-based ``source``; None marks unreachable."""
    levels = [None] * order
    levels[source] = 0
    seen = 1 << source
    frontier = seen
    depth = 0
    while frontier:
        depth += 1
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
        for v in _bits(frontier):
            levels[v - 1] = depth
    return levels


def check_vertex(d, v):
    if not 1 <= v <= d.order:
        raise VertexError('vertex {0} outside 1..{1}'.format(v, d.order))


def distances_from(d, source):
    """Shortest path lengths from ``source`` to every vertex, as a 1-based dict."""
    check_vertex(d, source)
    levels = _bfs_levels(d.out_rows, d.order, source - 1)
    return dict((v + 1, level) for v, level in enumerate(levels))


def distance(d, source, target):
    """Length of the shortest path ``source -> target``, or None if unreachable."""
    check_vertex(d, source)
    check_vertex(d, target)
    return _bfs_levels(d.out_rows, d.order, source - 1)[target - 1]


def girth(d):
    """Shortest cycle length by per-vertex BFS; None for an acyclic digraph."""
    best = None
    for s in range(d.order):
        levels = _bfs_levels(d.out_rows, d.order, s)
        for u in _bits(d.in_rows[s]):
            if levels[u - 1] is None:
                continue
            length = levels[u - 1] + 1
            if best is None or length < best:
                best = length
        if best == 1:
            break
    return best


def period(d):
    """gcd of all cycle lengths of a strongly connected digraph, from BFS levels.

    Returns None when the digraph is not strongly connected.
    """
    if not is_strongly_connected(d):
        return None
    levels = _bfs_levels(d.out_rows, d.order, 0)
    result = 0
    for i, j in d.arcs:
        result = gcd(result, abs(levels[i - 1] + 1 - levels[j - 1]))
        if result == 1:
            break
    return result


def is_primitive(d):
    return period(d) == 1


def _normalize_cycle(cycle):
    k = cycle.index(min(cycle))
    return tuple(cycle[k:] + cycle[:k])


def simple_cycles(d, cap=DEFAULT_CYCLE_CAP):
    """Enumerate simple cycles (at most ``cap``) and build the CycleProfile.

    Cycles are rotated to start at their smallest vertex and sorted by
    (length, vertices). When more than ``cap`` cycles exist the profile is
    flagged as truncated and must not be used to certify anything.
    """
    if cap < 1:
        raise ParameterError('cycle cap must be >= 1, got {0}'.format(cap))
    found = list(itertools.islice(nx.simple_cycles(d.to_networkx()), cap + 1))
    cap_hit = len(found) > cap
    if cap_hit:
        log.warning('cycle enumeration hit cap %d on order-%d digraph', cap, d.order)
        found = found[:cap]
    cycles = sorted((_normalize_cycle(list(c)) for c in found), key=lambda c: (len(c), c))

    per_vertex = dict((v, set()) for v in d.vertices())
    for cycle in cycles:
        for v in cycle:
            per_vertex[v].add(len(cycle))
    lengths = reduce(lambda acc, ls: acc | ls, per_vertex.values(), set())
    return cycles, CycleProfile(lengths, per_vertex, cap_hit)


def cycle_profile(d, cap=DEFAULT_CYCLE_CAP):
    return simple_cycles(d, cap)[1]


def is_spanning_subgraph(sub, sup):
    return sub.order == sup.order and sub.arcs <= sup.arcs


def relabel(d, perm):
    """Image of ``d`` under the vertex bijection ``perm`` (dict or 1-based sequence)."""
    if not isinstance(perm, dict):
        perm = dict((i + 1, v) for i, v in enumerate(perm))
    if sorted(perm) != list(d.vertices()) or sorted(perm.values()) != list(d.vertices()):
        raise ParameterError('relabeling is not a permutation of 1..{0}'.format(d.order))
    return Digraph(d.order, [(perm[i], perm[j]) for i, j in d.arcs])
