"""Homomorphism search, verification, and the exact chromatic number."""

import random
from itertools import permutations

import pytest

from signedgrids import (
    NEG,
    POS,
    BudgetExceededError,
    SearchBudget,
    SignedGraph,
    build_T4,
    build_SP9,
    canonical_complete_targets,
    complete_signed_graph,
    find_ec_hom,
    find_isomorphism,
    find_signed_hom,
    induced_target,
    rho_t4,
    signed_chromatic_number,
    switch,
    unbalanced_c6,
    unbalanced_wheel7,
    verify_ec,
    verify_signed,
    verify_signed_with_mapping,
)
from signedgrids.hom import (
    Homomorphism,
    all_complete_targets,
    ec_to_signed,
    first_ec_violation,
    signed_to_ec,
)

from helpers import ec_hom_exists_brute, random_signed_graph, signed_hom_exists_brute


def all_positive_cycle(k):
    return SignedGraph(k, [(t, (t + 1) % k, POS) for t in range(k)])


class TestVerifyEc:
    def test_identity(self):
        g = random_signed_graph(random.Random(0), 6, 0.5)
        assert verify_ec(g, g, list(range(g.n)))

    def test_bipartite_folding(self):
        c6 = all_positive_cycle(6)
        edge = SignedGraph(2, [(0, 1, POS)])
        assert verify_ec(c6, edge, [0, 1, 0, 1, 0, 1])

    def test_unbalanced_c6_fails_on_both_two_vertex_targets(self):
        c6 = unbalanced_c6()
        alternating = [v % 2 for v in range(6)]
        for s in (POS, NEG):
            h = SignedGraph(2, [(0, 1, s)])
            assert not verify_ec(c6, h, alternating)
            assert find_ec_hom(c6, h) is None

    def test_first_violation_reported(self):
        g = SignedGraph(2, [(0, 1, NEG)])
        h = SignedGraph(2, [(0, 1, POS)])
        assert first_ec_violation(g, h, [0, 1]) == (0, 1)
        assert first_ec_violation(g, g, [0, 1]) is None

    def test_requires_total_mapping(self):
        g = SignedGraph(2, [(0, 1, POS)])
        with pytest.raises(ValueError):
            verify_ec(g, g, [0])


class TestFindEcHom:
    def test_agrees_with_mapping_enumeration(self):
        # independent oracle: try every possible mapping
        for i in range(40):
            rng = random.Random(600 + i)
            g = random_signed_graph(rng, rng.randint(1, 6), 0.5)
            h = random_signed_graph(rng, rng.randint(1, 3), 0.7)
            found = find_ec_hom(g, h)
            assert (found is not None) == ec_hom_exists_brute(g, h)
            if found is not None:
                assert verify_ec(g, h, found.mapping)

    def test_edge_into_t4(self):
        g = SignedGraph(2, [(0, 1, POS)])
        found = find_ec_hom(g, build_T4())
        assert found is not None and build_T4().sign(*sorted(found.mapping)) == POS

    def test_unbalanced_c6_into_doubled_t4(self):
        found = find_ec_hom(unbalanced_c6(), rho_t4().graph)
        assert found is not None
        assert verify_ec(unbalanced_c6(), rho_t4().graph, found.mapping)

    def test_all_positive_triangle_into_sp9(self):
        k3 = SignedGraph(3, [(0, 1, POS), (0, 2, POS), (1, 2, POS)])
        assert find_ec_hom(k3, build_SP9()) is not None

    def test_domains_are_respected(self):
        c6 = all_positive_cycle(6)
        edge = SignedGraph(2, [(0, 1, POS)])
        domains = [(v % 2,) for v in range(6)]
        found = find_ec_hom(c6, edge, domains=domains)
        assert found is not None and found.mapping == (0, 1, 0, 1, 0, 1)
        # forcing both endpoints of an edge to one target vertex must fail
        assert find_ec_hom(c6, edge, domains=[(0,)] * 6) is None

    def test_deterministic(self):
        g = random_signed_graph(random.Random(8), 8, 0.4)
        h = rho_t4().graph
        a = find_ec_hom(g, h)
        b = find_ec_hom(g, h)
        assert a == b

    def test_budget_exhaustion_raises(self):
        g = all_positive_cycle(8)
        with pytest.raises(BudgetExceededError):
            find_ec_hom(g, rho_t4().graph, budget=SearchBudget(2))
        # a generous budget changes nothing
        rich = find_ec_hom(g, rho_t4().graph, budget=SearchBudget(10**6))
        assert rich == find_ec_hom(g, rho_t4().graph)


class TestFindSignedHom:
    def test_c6_into_t4(self):
        found = find_signed_hom(unbalanced_c6(), build_T4())
        assert found is not None and found.kind == "signed"
        assert verify_signed(unbalanced_c6(), build_T4(), found)

    def test_c6_has_no_order3_target(self):
        c6 = unbalanced_c6()
        for mask in range(8):
            assert find_signed_hom(c6, complete_signed_graph(3, mask)) is None

    def test_agrees_with_switch_enumeration(self):
        for i in range(15):
            rng = random.Random(700 + i)
            g = random_signed_graph(rng, rng.randint(1, 8), 0.4)
            h = random_signed_graph(rng, rng.randint(1, 4), 0.7)
            assert (find_signed_hom(g, h) is not None) == signed_hom_exists_brute(g, h)

    def test_monotone_under_target_extension(self):
        rng = random.Random(41)
        hits = 0
        while hits < 10:
            g = random_signed_graph(rng, rng.randint(2, 7), 0.4)
            h = random_signed_graph(rng, 4, 0.5)
            if find_signed_hom(g, h) is None:
                continue
            hits += 1
            extra = [
                (u, v, POS if rng.random() < 0.5 else NEG)
                for u in range(4)
                for v in range(u + 1, 4)
                if not h.has_edge(u, v)
            ]
            bigger = SignedGraph(4, list(h.edges) + extra)
            assert find_signed_hom(g, bigger) is not None

    def test_projection_roundtrip(self):
        g = unbalanced_c6()
        signed = find_signed_hom(g, build_T4())
        lifted = signed_to_ec(signed, 4)
        assert verify_ec(g, rho_t4().graph, lifted.mapping)
        assert ec_to_signed(lifted, 4) == signed


class TestVerifySignedWithMapping:
    def test_identity_coloring_accepts_empty_switch(self):
        t4 = build_T4()
        assert verify_signed_with_mapping(t4, t4, list(range(4))) == frozenset()

    def test_constant_coloring_of_an_edge_rejected(self):
        g = SignedGraph(2, [(0, 1, POS)])
        assert verify_signed_with_mapping(g, build_T4(), [0, 0]) is None

    def test_switched_identity_recovers_the_switch(self):
        t4 = build_T4()
        g = switch(t4, {1})
        found = verify_signed_with_mapping(g, t4, list(range(4)))
        assert found is not None
        assert switch(g, found) == t4


class TestChromaticNumber:
    def test_c6_is_exactly_4_with_t4_witness(self):
        order, target, hom = signed_chromatic_number(unbalanced_c6(), 6)
        assert order == 4
        assert find_isomorphism(target, build_T4()) is not None
        assert verify_signed(unbalanced_c6(), target, hom)

    def test_wheel_exceeds_5_and_hits_6(self):
        w7 = unbalanced_wheel7()
        assert signed_chromatic_number(w7, 5) is None
        order, target, hom = signed_chromatic_number(w7, 6)
        assert order == 6
        assert verify_signed(w7, target, hom)

    def test_trivial_cases(self):
        isolated = SignedGraph(3, [])
        assert signed_chromatic_number(isolated, 3)[0] == 1
        path = SignedGraph(3, [(0, 1, POS), (1, 2, POS)])
        assert signed_chromatic_number(path, 3)[0] == 2
        empty = SignedGraph(0, [])
        assert signed_chromatic_number(empty, 2)[0] == 1

    def test_switch_invariance(self):
        rng = random.Random(4242)
        for _ in range(6):
            g = random_signed_graph(rng, rng.randint(2, 7), 0.5)
            subset = [v for v in range(g.n) if rng.random() < 0.5]
            a = signed_chromatic_number(g, 5)
            b = signed_chromatic_number(switch(g, subset), 5)
            assert (a is None) == (b is None)
            if a is not None:
                assert a[0] == b[0]

    def test_budget_propagates(self):
        with pytest.raises(BudgetExceededError):
            signed_chromatic_number(
                unbalanced_wheel7(), 5, budget=SearchBudget(50)
            )


class TestTargetEnumeration:
    def test_all_targets_count(self):
        assert sum(1 for _ in all_complete_targets(3)) == 8

    def test_canonical_counts(self):
        assert [len(canonical_complete_targets(n)) for n in range(1, 7)] == [
            1,
            2,
            4,
            11,
            34,
            156,
        ]

    def test_canonical_reps_match_bruteforce_minimum(self):
        # oracle for small orders: the minimum over all vertex permutations
        for n in range(2, 5):
            m = n * (n - 1) // 2
            pair_idx = {}
            k = 0
            for i in range(n):
                for j in range(i + 1, n):
                    pair_idx[(i, j)] = k
                    k += 1

            def canon(mask):
                best = None
                for perm in permutations(range(n)):
                    out = 0
                    for (i, j), b in pair_idx.items():
                        if (mask >> b) & 1:
                            a, c = perm[i], perm[j]
                            out |= 1 << pair_idx[(a, c) if a < c else (c, a)]
                    best = out if best is None else min(best, out)
                return best

            expected = sorted({canon(mask) for mask in range(1 << m)})
            assert list(canonical_complete_targets(n)) == expected

    def test_mask_encoding(self):
        h = complete_signed_graph(3, 0b001)
        assert h.sign(0, 1) == NEG and h.sign(0, 2) == POS and h.sign(1, 2) == POS


class TestInducedTarget:
    def test_recovers_quotient(self):
        g = all_positive_cycle(6)
        target = induced_target(g, [0, 1, 0, 1, 0, 1], 2)
        assert target.edges == ((0, 1, POS),)

    def test_conflicting_signs_rejected(self):
        g = SignedGraph(3, [(0, 1, POS), (1, 2, NEG)])
        with pytest.raises(ValueError):
            induced_target(g, [0, 1, 0], 2)

    def test_identified_edge_rejected(self):
        g = SignedGraph(2, [(0, 1, POS)])
        with pytest.raises(ValueError):
            induced_target(g, [0, 0], 1)


def test_homomorphism_kind_validation():
    with pytest.raises(ValueError):
        Homomorphism((0,), kind="weird")
