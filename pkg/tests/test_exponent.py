import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from primexp.arithmetic import frobenius
from primexp.bounds import formula_thm33
from primexp.digraph import cycle_profile, Digraph, distance, is_primitive, relabel, simple_cycles
from primexp.errors import CycleCapError, NotPrimitiveError
from primexp.exponent import c_walk_distances, exponent, lemma22_bound, walk_exists, wielandt_cap
from primexp.families import d1, d2, d_gN, standard_cycle

from .oracles import c_walk_oracle, exponent_oracle, walk_sets
from .strategies import permutations, primitive_digraphs


class TestExponent:
    def test_wielandt_digraphs(self):
        assert exponent(d1(5)).value == 17
        assert exponent(d2(5)).value == 16
        assert exponent(d1(6)).value == 26
        assert exponent(d2(6)).value == 25

    def test_q_families(self, q1_10_3, q2_10_3):
        assert exponent(q1_10_3).value == 34
        assert exponent(q2_10_3).value == 33

    def test_complete_with_loops(self):
        complete = Digraph(3, [(i, j) for i in range(1, 4) for j in range(1, 4)])
        result = exponent(complete)
        assert result.value == 1
        assert result.certificate is None

    def test_not_primitive(self):
        with pytest.raises(NotPrimitiveError):
            exponent(standard_cycle(6))

    def test_certificate_is_least_missing_pair(self, q1_10_3):
        result = exponent(q1_10_3)
        u, v = result.certificate
        assert result.certificate_length == 33
        assert not walk_exists(q1_10_3, u, v, 33)
        missing = sorted((s, t) for s, reach in walk_sets(q1_10_3, 33).items()
                         for t in q1_10_3.vertices() if t not in reach)
        assert missing[0] == (u, v)

    def test_cap(self):
        assert wielandt_cap(4) == 10
        assert exponent(d1(4)).value == wielandt_cap(4)

    @settings(max_examples=100, deadline=None)
    @given(primitive_digraphs(n_max=8))
    def test_agrees_with_walk_oracle(self, d):
        assert exponent(d).value == exponent_oracle(d)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_relabeling_keeps_the_exponent(self, data):
        d = data.draw(primitive_digraphs(n_max=8))
        perm = data.draw(permutations(d.order))
        image = relabel(d, perm)
        assert exponent(image).value == exponent(d).value
        assert exponent(image).certificate_length == exponent(d).certificate_length

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_deleting_an_arc_never_lowers_the_exponent(self, data):
        d = data.draw(primitive_digraphs(n_max=8))
        removable = [arc for arc in sorted(d.arcs) if is_primitive(Digraph(d.order, d.arcs - set([arc])))]
        assume(removable)
        arc = data.draw(st.sampled_from(removable))
        assert exponent(Digraph(d.order, d.arcs - set([arc]))).value >= exponent(d).value


class TestWalkExists:
    def test_standard_cycle(self, cycle10):
        assert walk_exists(cycle10, 10, 4, 6)
        assert not walk_exists(cycle10, 10, 4, 7)
        assert walk_exists(cycle10, 10, 4, 16)

    def test_no_walk_one_short_of_the_exponent(self, q1_10_3):
        assert not walk_exists(q1_10_3, 10, 4, formula_thm33(10, 3, 1) - 1)

    def test_zero_length(self, cycle10):
        assert walk_exists(cycle10, 3, 3, 0)
        assert not walk_exists(cycle10, 3, 4, 0)


class TestCWalk:
    def test_q1_attaining_pair(self, q1_10_3):
        walks = c_walk_distances(q1_10_3)
        assert walks.get(10, 4) == 16
        assert walks.max == 16

    def test_lemma22_on_q1(self, q1_10_3):
        assert lemma22_bound(q1_10_3) == 16 + 18
        assert lemma22_bound(q1_10_3) == exponent(q1_10_3).value

    def test_full_coverage_reduces_to_distance(self):
        # every vertex lies on a loop and on the 3-cycle
        d = Digraph(3, [(1, 2), (2, 3), (3, 1), (1, 1), (2, 2), (3, 3)])
        walks = c_walk_distances(d)
        for u in d.vertices():
            assert walks.get(u, u) == 0
            for v in d.vertices():
                assert walks.get(u, v) == distance(d, u, v)

    def test_loop_means_no_frobenius_term(self):
        d = Digraph(3, [(1, 2), (2, 3), (3, 1), (1, 1)])
        walks = c_walk_distances(d)
        assert frobenius(cycle_profile(d).lengths) == 0
        assert lemma22_bound(d) == walks.max

    def test_arg_max_is_first_in_row_major_order(self, q1_10_3):
        walks = c_walk_distances(q1_10_3)
        firsts = [(i, j) for i in q1_10_3.vertices() for j in q1_10_3.vertices()
                  if walks.get(i, j) == walks.max]
        assert walks.arg_max == firsts[0]

    def test_requires_exact_profile(self):
        complete = Digraph(5, [(i, j) for i in range(1, 6) for j in range(1, 6)])
        _, truncated = simple_cycles(complete, cap=5)
        with pytest.raises(CycleCapError):
            c_walk_distances(complete, profile=truncated)
        with pytest.raises(CycleCapError):
            c_walk_distances(complete, cap=5)

    def test_not_primitive(self):
        with pytest.raises(NotPrimitiveError):
            c_walk_distances(standard_cycle(4))

    @settings(max_examples=40, deadline=None)
    @given(primitive_digraphs(n_max=6))
    def test_agrees_with_walk_oracle(self, d):
        walks = c_walk_distances(d)
        expected = c_walk_oracle(d)
        for u in d.vertices():
            for v in d.vertices():
                assert walks.get(u, v) == expected[(u, v)]

    @settings(max_examples=100, deadline=None)
    @given(primitive_digraphs(n_max=8))
    def test_lemma22_holds(self, d):
        assert exponent(d).value <= lemma22_bound(d)


class TestDgnExponent:
    def test_singleton_chords_share_the_q1_exponent(self):
        # d_gN(10, 3, {3}) is a rotation of Q1
        assert exponent(d_gN(10, 3, [3])).value == 34
