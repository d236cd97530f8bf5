"""
Isomorphism testing and canonical forms for small digraphs.

Pairwise tests use networkx's VF2 matcher with vertices labelled by cheap
invariants (out-degree, in-degree, lengths of cycles through the vertex),
which prunes the search to almost nothing on near-cycle digraphs.

Canonical forms use individualization-refinement: colour refinement splits
vertices by invariants, the first non-singleton cell is individualized
vertex by vertex, and the lexicographically least row-major adjacency
bit-string over all discrete leaves is the canonical form. Automorphisms
found between equal leaves prune the tree, so highly symmetric digraphs up
to the order cap stay cheap.
"""
import logging

from networkx.algorithms.isomorphism import DiGraphMatcher
from networkx.utils import UnionFind

from .digraph import DEFAULT_CYCLE_CAP, cycle_profile
from .errors import OrderCapError
from .families import FamilySpec

log = logging.getLogger(__name__)

ISO_ORDER_CAP = 14
CANONICAL_ORDER_CAP = 12


class IsoResult(object):
    """Outcome of an isomorphism test; truthy when isomorphic."""
    __slots__ = ('isomorphic', 'witness')

    def __init__(self, isomorphic, witness=None):
        self.isomorphic = isomorphic
        self.witness = witness

    def __bool__(self):
        return self.isomorphic

    __nonzero__ = __bool__

    def __repr__(self):
        if not self.isomorphic:
            return 'IsoResult(False)'
        return 'IsoResult(True, {0})'.format(cycle_notation(self.witness))


class CanonicalForm(object):
    __slots__ = ('order', 'canonical_bits')

    def __init__(self, order, canonical_bits):
        self.order = order
        self.canonical_bits = canonical_bits

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.order == other.order and self.canonical_bits == other.canonical_bits

    def __lt__(self, other):
        return (self.order, self.canonical_bits) < (other.order, other.canonical_bits)

    def __hash__(self):
        return hash((self.order, self.canonical_bits))

    def __repr__(self):
        return 'CanonicalForm({0}, {1!r})'.format(self.order, self.canonical_bits)


def cycle_notation(perm):
    """One-line cycle notation of a permutation dict, fixed points omitted."""
    seen = set()
    parts = []
    for start in sorted(perm):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cycle = [start]
        seen.add(start)
        v = perm[start]
        while v != start:
            cycle.append(v)
            seen.add(v)
            v = perm[v]
        parts.append('(' + ' '.join(str(v) for v in cycle) + ')')
    return ''.join(parts) or '()'


def vertex_signatures(d, cap=DEFAULT_CYCLE_CAP):
    """Per-vertex (out-degree, in-degree, cycle lengths through it); lengths omitted if the profile is truncated."""
    profile = cycle_profile(d, cap)
    signatures = {}
    for v in d.vertices():
        lengths = tuple(sorted(profile.per_vertex[v])) if profile.exact else ()
        signatures[v] = (d.out_degree(v), d.in_degree(v), lengths)
    return signatures, profile.exact


def _labelled_graph(d, signatures):
    graph = d.to_networkx()
    for v, sig in signatures.items():
        graph.nodes[v]['sig'] = sig
    return graph


def _same_signature(x, y):
    return x['sig'] == y['sig']


def _check_cap(d, cap):
    if d.order > cap:
        raise OrderCapError('order {0} exceeds cap {1}'.format(d.order, cap))


def are_isomorphic(a, b, cap=DEFAULT_CYCLE_CAP):
    """Test for an arc-preserving bijection a -> b; the witness maps a's vertices to b's."""
    _check_cap(a, ISO_ORDER_CAP)
    _check_cap(b, ISO_ORDER_CAP)
    if a.order != b.order or len(a.arcs) != len(b.arcs):
        return IsoResult(False)
    degrees_a = sorted((a.out_degree(v), a.in_degree(v)) for v in a.vertices())
    degrees_b = sorted((b.out_degree(v), b.in_degree(v)) for v in b.vertices())
    if degrees_a != degrees_b:
        return IsoResult(False)

    sig_a, exact_a = vertex_signatures(a, cap)
    sig_b, exact_b = vertex_signatures(b, cap)
    if not (exact_a and exact_b):
        sig_a = dict((v, s[:2] + ((),)) for v, s in sig_a.items())
        sig_b = dict((v, s[:2] + ((),)) for v, s in sig_b.items())
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return IsoResult(False)

    matcher = DiGraphMatcher(_labelled_graph(a, sig_a), _labelled_graph(b, sig_b),
                             node_match=_same_signature)
    if matcher.is_isomorphic():
        return IsoResult(True, dict(matcher.mapping))
    return IsoResult(False)


def automorphism_count(d, cap=DEFAULT_CYCLE_CAP):
    _check_cap(d, ISO_ORDER_CAP)
    signatures, exact = vertex_signatures(d, cap)
    graph = _labelled_graph(d, signatures)
    matcher = DiGraphMatcher(graph, graph, node_match=_same_signature)
    return sum(1 for _ in matcher.isomorphisms_iter())


def _refine(colors, out_nbrs, in_nbrs):
    """Colour refinement to the coarsest equitable partition finer than ``colors``.

    Colours are renumbered by sorted signature, so the result depends only on
    the isomorphism type of (digraph, colouring).
    """
    cells = len(set(colors))
    while True:
        signatures = [
            (colors[v],
             tuple(sorted(colors[w] for w in out_nbrs[v])),
             tuple(sorted(colors[w] for w in in_nbrs[v])))
            for v in range(len(colors))
        ]
        rank = dict((s, i) for i, s in enumerate(sorted(set(signatures))))
        colors = [rank[s] for s in signatures]
        if len(rank) == cells:
            return colors
        cells = len(rank)


def _leaf_bits(colors, out_rows):
    n = len(colors)
    position = [0] * n
    for v, c in enumerate(colors):
        position[c] = v
    chars = []
    for p in range(n):
        row = out_rows[position[p]]
        chars.extend('1' if row >> position[q] & 1 else '0' for q in range(n))
    return ''.join(chars)


class CanonicalSearch(object):
    """Depth-first walk of the individualization-refinement tree of one digraph.

    Two leaves with equal bit-strings yield an automorphism (0-based vertex
    permutation). Automorphisms fixing the current path pointwise merge
    sibling candidates into orbits, and only one candidate per orbit is
    expanded. A leaf equal to an earlier one also abandons the rest of the
    subtree rooted below their common ancestor, which is the image of a
    subtree already walked.
    """

    def __init__(self, d):
        self.n = d.order
        self.out_rows = d.out_rows
        self.out_nbrs = [[w - 1 for w in d.successors(v)] for v in d.vertices()]
        self.in_nbrs = [[w - 1 for w in d.predecessors(v)] for v in d.vertices()]
        initial = [(d.out_degree(v), d.in_degree(v), d.has_arc(v, v)) for v in d.vertices()]
        rank = dict((s, i) for i, s in enumerate(sorted(set(initial))))
        self.initial = [rank[s] for s in initial]
        self.best = None
        self.leaf_count = 0
        self.generators = []
        # bits -> (path, colours) of the first leaf carrying them
        self.leaves = {}

    def run(self):
        self.visit(self.initial, [])
        return self.best

    def visit(self, colors, path):
        """Expand the node reached by individualizing ``path``; returns the depth to resume at."""
        colors = _refine(colors, self.out_nbrs, self.in_nbrs)
        if len(set(colors)) == self.n:
            return self.leaf(colors, path)
        target = min(c for c in set(colors) if colors.count(c) > 1)
        expanded = []
        for v in range(self.n):
            if colors[v] != target or (expanded and self.in_expanded_orbit(v, expanded, path)):
                continue
            expanded.append(v)
            child = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
            resume = self.visit(child, path + [v])
            if resume < len(path):
                return resume
        return len(path)

    def leaf(self, colors, path):
        self.leaf_count += 1
        bits = _leaf_bits(colors, self.out_rows)
        if self.best is None or bits < self.best:
            self.best = bits
        seen = self.leaves.get(bits)
        if seen is None:
            self.leaves[bits] = (path, colors)
            return len(path)
        earlier_path, earlier_colors = seen
        vertex_at = dict((c, v) for v, c in enumerate(colors))
        self.generators.append([vertex_at[c] for c in earlier_colors])
        common = 0
        while common < min(len(path), len(earlier_path)) and path[common] == earlier_path[common]:
            common += 1
        return common

    def in_expanded_orbit(self, v, expanded, path):
        orbits = UnionFind(range(self.n))
        for gen in self.generators:
            if all(gen[x] == x for x in path):
                for x in range(self.n):
                    orbits.union(x, gen[x])
        return orbits[v] in set(orbits[u] for u in expanded)


def canonical_form(d):
    _check_cap(d, CANONICAL_ORDER_CAP)
    return CanonicalForm(d.order, CanonicalSearch(d).run())


def classify_against(d, family, cap=DEFAULT_CYCLE_CAP):
    """Index of the first member of ``family`` (Digraphs or FamilySpecs) isomorphic to ``d``, or None."""
    for index, member in enumerate(family):
        if isinstance(member, FamilySpec):
            member = member.build()
        if are_isomorphic(d, member, cap):
            return index
    return None
