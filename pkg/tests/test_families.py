import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primexp.digraph import cycle_profile, girth, is_primitive, is_spanning_subgraph
from primexp.errors import FamilySpecError, ParameterError
from primexp.families import (chord_family, chord_family_specs, chord_member, d1, d2, d_gN, enumerate_DgN,
                              enumerate_Dr, FamilySpec, format_family_spec, h_graph, parse_family_spec, q1,
                              q2, standard_cycle, theta_graph, theta_specs)
from primexp.sampler import ARC_PROBABILITIES, random_primitive, sample


class TestConstructors:
    def test_standard_cycle_runs_descending(self):
        assert standard_cycle(3).arcs == frozenset([(3, 2), (2, 1), (1, 3)])
        with pytest.raises(ParameterError):
            standard_cycle(1)

    def test_d1_d2(self):
        assert d1(4).arcs == frozenset([(4, 3), (3, 2), (2, 1), (1, 4), (1, 3)])
        assert d2(4).arcs == d1(4).arcs | frozenset([(2, 4)])
        with pytest.raises(ParameterError):
            d1(2)

    def test_dgn_chords_close_g_cycles(self):
        d = d_gN(10, 3, [1])
        assert d.arcs - standard_cycle(10).arcs == frozenset([(1, 3)])
        assert girth(d) == 3
        assert cycle_profile(d_gN(10, 3, [1, 2, 3])).lengths == (3, 10)

    def test_q_families(self):
        assert q1(10, 3) == d_gN(10, 3, [1])
        assert q2(10, 3) == d_gN(10, 3, [1, 2])

    def test_extremal_families_coincide_at_large_girth(self):
        for n in range(4, 10):
            assert q1(n, n - 1) == d1(n)
            assert q2(n, n - 1) == d2(n)

    @pytest.mark.parametrize('args,constraint', [
        ((10, 4, [1]), 'gcd'),
        ((10, 3, []), 'emptiness'),
        ((10, 3, [4]), 'range'),
        ((10, 10, [1]), 'range'),
    ])
    def test_dgn_violations_name_the_constraint(self, args, constraint):
        with pytest.raises(ParameterError) as excinfo:
            d_gN(*args)
        assert str(excinfo.value).startswith(constraint)

    def test_h_graph(self):
        d = h_graph(10, 3, 5)
        assert (1, 2) in d.arcs and (10, 1) in d.arcs
        assert (3, 1) in d.arcs and (7, 5) in d.arcs
        assert cycle_profile(d).lengths == (3, 10)
        assert is_primitive(d)

    @pytest.mark.parametrize('args', [(10, 4, 5), (5, 3, 4), (10, 3, 3), (10, 3, 9)])
    def test_h_violations(self, args):
        with pytest.raises(ParameterError):
            h_graph(*args)

    def test_theta_graph_shares_a_path(self):
        d = theta_graph(6, 3, 5)
        assert d.arcs == frozenset([(1, 2), (2, 3), (3, 1), (2, 4), (4, 5), (5, 6), (6, 1)])
        assert cycle_profile(d).lengths == (3, 5)
        assert theta_graph(7, 3, 5).arcs == frozenset([(1, 2), (2, 3), (3, 1),
                                                      (1, 4), (4, 5), (5, 6), (6, 7), (7, 1)])

    def test_theta_cycles_are_exactly_two(self):
        for spec in theta_specs(9, 3):
            d = spec.build()
            assert d.order == spec.n
            assert cycle_profile(d).lengths == (spec.g, spec.q)
            assert spec.q <= spec.n - 1
            assert is_primitive(d)

    @pytest.mark.parametrize('args', [(6, 1, 5), (6, 2, 4), (6, 4, 3), (8, 3, 5), (5, 3, 5)])
    def test_theta_violations(self, args):
        with pytest.raises(ParameterError):
            theta_graph(*args)


class TestEnumeration:
    def test_dgn_stream(self):
        specs = list(enumerate_DgN(10, 3))
        assert len(specs) == 7
        assert [s.N for s in specs[:4]] == [(1,), (2,), (1, 2), (3,)]

    def test_dr_stream(self):
        assert [s.N for s in enumerate_Dr(10, 3, 2)] == [(2,), (1, 2)]
        for r in (1, 2, 3):
            specs = list(enumerate_Dr(10, 3, r))
            assert len(specs) == 2 ** (r - 1)
            assert all(s.r == r for s in specs)

    def test_resumable(self):
        assert list(enumerate_DgN(10, 3, start=3)) == list(enumerate_DgN(10, 3))[3:]
        assert list(chord_family_specs(6, 5, start=10))[0].mask == 10

    def test_dr_out_of_range(self):
        with pytest.raises(ParameterError):
            list(enumerate_Dr(10, 3, 4))

    def test_chord_family(self):
        members = list(chord_family(6, 5))
        assert len(members) == 2 ** 6 - 1
        assert all(is_spanning_subgraph(standard_cycle(6), d) for d in members)

    def test_chord_family_contains_dgn(self):
        t = 3
        for spec in enumerate_DgN(10, 3):
            mask = sum(1 << (i - 1) for i in spec.N)
            assert mask < 1 << t
            assert chord_member(10, 3, mask) == spec.build()

    def test_chord_wraps_around(self):
        d = chord_member(10, 3, 1 << 9)
        assert d.arcs - standard_cycle(10).arcs == frozenset([(10, 2)])
        assert girth(d) == 3

    def test_chord_mask_range(self):
        with pytest.raises(ParameterError):
            chord_member(6, 5, 0)
        with pytest.raises(ParameterError):
            chord_member(6, 5, 64)


class TestFamilySpec:
    def test_parse(self):
        spec = parse_family_spec('d_gN:n=10,g=3,N=1,2')
        assert spec == FamilySpec('d_gN', 10, 3, N=[1, 2])
        assert spec.r == 2
        assert spec.t == 3
        assert spec.build() == q2(10, 3)

    def test_parse_other_kinds(self):
        assert parse_family_spec('d1:n=5').build() == d1(5)
        assert parse_family_spec('h:n=10,g=3,k=5').build() == h_graph(10, 3, 5)
        assert parse_family_spec('chord:n=10,g=3,mask=5').build() == d_gN(10, 3, [1, 3])
        assert parse_family_spec('theta:n=6,g=3,q=5').build() == theta_graph(6, 3, 5)

    def test_format(self):
        spec = FamilySpec('d_gN', 10, 3, N=[2, 1])
        assert format_family_spec(spec) == 'd_gN:n=10,g=3,N=1,2'
        assert parse_family_spec(format_family_spec(spec)) == spec

    def test_key_order(self):
        assert FamilySpec('h', 10, 3, k=5).key() == [('kind', 'h'), ('n', 10), ('g', 3), ('k', 5)]
        assert format_family_spec(FamilySpec('theta', 6, 3, q=5)) == 'theta:n=6,g=3,q=5'

    @pytest.mark.parametrize('text', [
        'nope:n=3',
        'd1:x=3',
        'd1:n=three',
        'd1:g=3',
        'd_gN:n=10,g=3,1',
    ])
    def test_syntax_errors(self, text):
        with pytest.raises(FamilySpecError):
            parse_family_spec(text)

    @pytest.mark.parametrize('kind,kwargs,missing', [
        ('d_gN', {'N': [1]}, 'g'),
        ('d_gN', {'g': 3}, 'N'),
        ('q1', {}, 'g'),
        ('q2', {}, 'g'),
        ('h', {'g': 3}, 'k'),
        ('chord', {'g': 3}, 'mask'),
        ('theta', {'g': 3}, 'q'),
    ])
    def test_required_parameters(self, kind, kwargs, missing):
        with pytest.raises(FamilySpecError) as excinfo:
            FamilySpec(kind, 10, **kwargs)
        assert str(excinfo.value).endswith('needs ' + missing)

    @pytest.mark.parametrize('text', ['q1:n=10', 'h:n=10,g=3', 'chord:n=10,g=3', 'theta:n=6,q=5'])
    def test_inline_spec_missing_parameters(self, text):
        with pytest.raises(FamilySpecError):
            parse_family_spec(text)


class TestSampler:
    def test_deterministic(self):
        a, p = sample(7, 12, 8)
        b, q = sample(7, 12, 8)
        assert a == b and p == q
        assert p == ARC_PROBABILITIES[12 % 3]

    @given(st.integers(0, 1000), st.integers(0, 1000))
    def test_samples_are_primitive(self, seed, index):
        d, p = sample(seed, index, 8)
        assert 2 <= d.order <= 8
        assert is_primitive(d)

    def test_random_primitive_contains_a_hamiltonian_cycle(self):
        d = random_primitive(6, 0.05, random.Random(3))
        assert is_primitive(d)
        assert len(d.arcs) >= 6

    def test_bad_range(self):
        with pytest.raises(ParameterError):
            sample(0, 0, 1, n_min=2)
