"""Index actions, orbit streaming, stabilizers, and the free multi-index
construction."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dicysym.dicyclic import DicyclicGroup
from dicysym.orbits import (
    DegreeTooSmallError,
    act_poly,
    act_tensor,
    compositions,
    construct_free_multiindex,
    orbit_poly,
    orbit_reps_poly,
    orbit_reps_tensor,
    orbit_tensor,
    sequences,
    stabilizer_poly,
    stabilizer_tensor,
)

G2 = DicyclicGroup(2)
G3 = DicyclicGroup(3)

elements2 = st.sampled_from(G2.elements)
multiindices2 = st.lists(st.integers(min_value=0, max_value=3),
                         min_size=8, max_size=8).map(tuple)
sequences2 = st.lists(st.integers(min_value=1, max_value=2),
                      min_size=8, max_size=8).map(tuple)


class TestActions:
    def test_identity_acts_trivially(self):
        alpha = (2, 0, 0, 0, 0, 0, 0, 0)
        assert act_poly(alpha, G2.identity, G2) == alpha
        gamma = (1, 2, 1, 1, 2, 2, 1, 2)
        assert act_tensor(gamma, G2.identity, G2) == gamma

    @settings(max_examples=120)
    @given(multiindices2, elements2, elements2)
    def test_poly_right_action_axiom(self, alpha, g, h):
        assert act_poly(act_poly(alpha, g, G2), h, G2) == act_poly(alpha, g * h, G2)

    @settings(max_examples=120)
    @given(sequences2, elements2, elements2)
    def test_tensor_left_action_axiom(self, gamma, g, h):
        assert act_tensor(act_tensor(gamma, h, G2), g, G2) == act_tensor(gamma, g * h, G2)

    @settings(max_examples=60)
    @given(multiindices2, elements2)
    def test_inverse_action_round_trip(self, alpha, g):
        assert act_poly(act_poly(alpha, g, G2), g.inverse(), G2) == alpha

    def test_single_entry_moves_by_bookkeeping(self):
        # a lone exponent at position p moves to the position that the
        # permutation sends there; cross-checked through the inverse action
        alpha = (2,) + (0,) * 7
        g = G2.r
        moved = act_poly(alpha, g, G2)
        perm = G2.regular_permutation(g)
        assert moved.index(2) == perm.index(0)
        assert act_poly(moved, g.inverse(), G2) == alpha

    @settings(max_examples=60)
    @given(sequences2, elements2)
    def test_tensor_is_inverse_relabel_of_poly_action(self, gamma, g):
        assert act_tensor(gamma, g, G2) == act_poly(gamma, g.inverse(), G2)

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            act_poly((1, 0), G2.r, G2)


class TestOrbitStreams:
    def test_transitive_on_positions_at_n_one(self):
        G1 = DicyclicGroup(1)
        reps = list(orbit_reps_poly(G1, 1))
        assert len(reps) == 1
        assert reps[0].size == 4

    def test_counts_match_stars_and_bars(self):
        reps = list(orbit_reps_poly(G2, 2))
        assert sum(ob.size for ob in reps) == math.comb(8 + 2 - 1, 2)
        treps = list(orbit_reps_tensor(G2, 2))
        assert sum(ob.size for ob in treps) == 2**8

    def test_burnside_average(self):
        # independent count: orbits = (1/|G|) sum_g #fixed points, with the
        # fixed multi-indices counted per cycle structure by a knapsack
        def fixed_count(g, d):
            perm = G2.regular_permutation(g)
            seen = [False] * len(perm)
            lengths = []
            for start in range(len(perm)):
                if seen[start]:
                    continue
                size = 1
                seen[start] = True
                nxt = perm[start]
                while nxt != start:
                    seen[nxt] = True
                    size += 1
                    nxt = perm[nxt]
                lengths.append(size)
            dp = [0] * (d + 1)
            dp[0] = 1
            for length in lengths:
                for v in range(length, d + 1):
                    dp[v] += dp[v - length]
            return dp[d]

        total = sum(fixed_count(g, 2) for g in G2.elements)
        assert total % G2.order == 0
        assert total // G2.order == len(list(orbit_reps_poly(G2, 2)))

    def test_burnside_average_tensor(self):
        def fixed_count(g, dim_v):
            perm = G2.regular_permutation(g)
            seen = [False] * len(perm)
            cycles = 0
            for start in range(len(perm)):
                if seen[start]:
                    continue
                cycles += 1
                nxt = perm[start]
                seen[start] = True
                while nxt != start:
                    seen[nxt] = True
                    nxt = perm[nxt]
            return dim_v**cycles

        total = sum(fixed_count(g, 2) for g in G2.elements)
        assert total // G2.order == len(list(orbit_reps_tensor(G2, 2)))

    def test_representatives_are_lex_minimal_and_increasing(self):
        reps = list(orbit_reps_poly(G3, 2))
        for ob in reps:
            assert ob.representative == min(ob.members)
        assert [ob.representative for ob in reps] == sorted(
            ob.representative for ob in reps)

    def test_orbit_stabilizer_identity(self):
        for ob in orbit_reps_poly(G2, 2):
            assert len(ob.transversal) * len(ob.stabilizer) == G2.order
        for ob in orbit_reps_tensor(G2, 2):
            assert len(ob.transversal) * len(ob.stabilizer) == G2.order

    def test_canonicalization_idempotent(self):
        for ob in orbit_reps_poly(G2, 2):
            again = orbit_poly(ob.representative, G2)
            assert again.representative == ob.representative
            assert set(again.members) == set(ob.members)

    def test_orbit_sizes_agree_between_conventions(self):
        # the right and left actions partition the sequence space into
        # orbits of identical sizes
        sizes_left = sorted(ob.size for ob in orbit_reps_tensor(G2, 2))
        seen = set()
        sizes_right = []
        for gamma in sequences(8, 2):
            if gamma in seen:
                continue
            members = {act_poly(gamma, g, G2) for g in G2.elements}
            seen |= members
            sizes_right.append(len(members))
        assert sizes_left == sorted(sizes_right)

    def test_tensor_orbit_roundtrip(self):
        ob = orbit_tensor((1, 2) + (1,) * 6, G2)
        assert ob.representative == min(ob.members)
        assert len(ob.members) == len(set(ob.members))


class TestStabilizers:
    def test_lone_maximal_entry_is_free(self):
        alpha = (2,) + (0,) * 7
        assert stabilizer_poly(alpha, G2) == (G2.identity,)

    def test_constant_tuple_fixed_by_everything(self):
        assert len(stabilizer_poly((1,) * 8, G2)) == 8
        assert len(stabilizer_tensor((2,) * 8, G2)) == 8

    def test_stabilizer_is_subgroup(self):
        alpha = (0, 0, 1, 0, 0, 0, 1, 0)
        stab = stabilizer_poly(alpha, G2)
        stab_set = set(stab)
        for a in stab:
            assert a.inverse() in stab_set
            for b in stab:
                assert a * b in stab_set

    def test_central_pair_stabilizer(self):
        # positions {x, r^n x} are swapped by a central element
        idx = G2.index(G2.element(2))  # r^2 = r^n at n=2
        alpha = [0] * 8
        alpha[0] = 1
        alpha[idx] = 1
        stab = stabilizer_poly(tuple(alpha), G2)
        assert set(stab) == {G2.identity, G2.element(2)}


class TestFreeMultiIndex:
    @pytest.mark.parametrize("g_spec", [(1, 0), (2, 0), (0, 1), (3, 1)])
    def test_trivial_stabilizer_for_generators(self, g_spec):
        g = G2.element(*g_spec)
        alpha = construct_free_multiindex(g, 30, G2)
        assert sum(alpha) == 30
        assert stabilizer_poly(alpha, G2) == (G2.identity,)

    def test_identity_degenerates_to_all_distinct(self):
        d = sum(range(8)) + 3
        alpha = construct_free_multiindex(G2.identity, d, G2)
        assert sum(alpha) == d
        assert len(set(alpha)) == 8
        assert stabilizer_poly(alpha, G2) == (G2.identity,)

    def test_degree_too_small(self):
        with pytest.raises(DegreeTooSmallError):
            construct_free_multiindex(G2.identity, 3, G2)
        with pytest.raises(DegreeTooSmallError):
            construct_free_multiindex(G2.r, 1, G2)

    def test_single_peak_special_case_is_free(self):
        # the familiar witness (d, 0, ..., 0) has trivial stabilizer
        for d in (1, 2, 5):
            alpha = (d,) + (0,) * 7
            assert stabilizer_poly(alpha, G2) == (G2.identity,)

    def test_deterministic(self):
        a1 = construct_free_multiindex(G3.r, 25, G3)
        a2 = construct_free_multiindex(G3.r, 25, G3)
        assert a1 == a2


class TestGenerators:
    def test_compositions_lex_and_complete(self):
        all_comps = list(compositions(4, 3))
        assert all_comps == sorted(all_comps)
        assert len(all_comps) == math.comb(4 + 3 - 1, 3)
        assert all(sum(c) == 3 for c in all_comps)

    def test_sequences_lex_and_complete(self):
        seqs = list(sequences(3, 2))
        assert seqs == sorted(seqs)
        assert len(seqs) == 8
