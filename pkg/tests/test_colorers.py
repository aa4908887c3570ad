"""The two constructive coloring algorithms and their normalization step."""

import random
from itertools import product

import pytest

from signedgrids import (
    NEG,
    POS,
    GridSpec,
    SignedGraph,
    all_c4_unbalanced_grid,
    color_hex,
    color_tri,
    compatible_colors,
    find_isomorphism,
    induced_target,
    make_grid,
    normalize_hex,
    random_signature,
    rho_sp9_plus,
    rho_t4,
    sp5_plus,
    switch,
    unbalanced_c6,
    verify_ec,
    verify_signed_with_mapping,
)
from signedgrids.hom import ec_to_signed

RHO_T4 = rho_t4()
RHO_SP9P = rho_sp9_plus()


def random_grid(kind, seed, max_dim=12, p=None):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, max_dim), rng.randint(1, max_dim)
    p = p if p is not None else rng.choice((0.2, 0.5, 0.8))
    spec = GridSpec(kind, rows, cols)
    return make_grid(spec, random_signature(spec, seed, p))


def scaffold_edges(spec):
    """Edges the normalization must make positive, derived from first principles:
    every horizontal edge, plus each vertical edge whose lower endpoint has
    odd coordinate parity."""
    out = []
    for i in range(1, spec.rows + 1):
        for j in range(1, spec.cols + 1):
            if (i + j) % 2 == 0 and j < spec.cols:
                out.append(((i, j), (i, j + 1)))
            if i >= 2 and (i + j) % 2 == 1:
                out.append(((i - 1, j), (i, j)))
    return out


class TestNormalizeHex:
    def test_all_positive_grid_is_already_normal(self):
        spec = GridSpec("hex", 5, 6)
        g = make_grid(spec, {e: POS for e in spec.edges()})
        normalized, switched = normalize_hex(g)
        assert switched == frozenset()
        assert normalized == g

    def test_scaffold_positive_on_random_grids(self):
        for seed in range(40):
            spec = GridSpec("hex", 6, 6)
            g = make_grid(spec, random_signature(spec, seed, 0.5))
            normalized, switched = normalize_hex(g)
            assert switch(g, switched) == normalized
            vid = lambda c: (c[0] - 1) * spec.cols + (c[1] - 1)
            for a, b in scaffold_edges(spec):
                assert normalized.sign(vid(a), vid(b)) == POS

    def test_idempotent(self):
        g = random_grid("hex", 123)
        normalized, _ = normalize_hex(g)
        again, switched = normalize_hex(normalized)
        assert again == normalized and switched == frozenset()

    def test_rejects_non_hex_and_masks(self):
        with pytest.raises(ValueError):
            normalize_hex(random_grid("tri", 5))
        spec = GridSpec("hex", 3, 3, mask=frozenset({(1, 1), (1, 2)}))
        g = make_grid(spec, {e: POS for e in spec.edges()})
        with pytest.raises(ValueError):
            normalize_hex(g)


class TestColorHex:
    def test_unbalanced_hexagon(self):
        g = unbalanced_c6()
        hom = color_hex(g)
        assert verify_ec(g, RHO_T4.graph, hom.mapping)

    def test_all_positive_grid(self):
        spec = GridSpec("hex", 4, 4)
        g = make_grid(spec, {e: POS for e in spec.edges()})
        assert verify_ec(g, RHO_T4.graph, color_hex(g).mapping)

    def test_random_grids_all_verify(self):
        for seed in range(120):
            g = random_grid("hex", 20000 + seed)
            hom = color_hex(g)
            assert verify_ec(g, RHO_T4.graph, hom.mapping)

    def test_at_most_four_identities(self):
        for seed in range(30):
            g = random_grid("hex", 21000 + seed)
            signed = ec_to_signed(color_hex(g), 4)
            assert len(set(signed.mapping)) <= 4

    def test_robust_under_switching(self):
        rng = random.Random(5555)
        for seed in range(20):
            g = random_grid("hex", 22000 + seed, max_dim=8)
            subset = [v for v in range(g.n) if rng.random() < 0.5]
            sw = switch(g, subset)
            assert verify_ec(sw, RHO_T4.graph, color_hex(sw).mapping)

    def test_masked_grid(self):
        rng = random.Random(61)
        for seed in range(25):
            full = GridSpec("hex", 6, 6)
            kept = frozenset(c for c in full.cells() if rng.random() < 0.65)
            if not kept:
                continue
            spec = GridSpec("hex", 6, 6, mask=kept)
            g = make_grid(spec, random_signature(spec, seed, 0.5))
            hom = color_hex(g)
            assert verify_ec(g, RHO_T4.graph, hom.mapping)

    def test_requires_grid_metadata(self):
        with pytest.raises(ValueError):
            color_hex(SignedGraph(2, [(0, 1, POS)]))


class TestColorTri:
    def test_all_positive_3x3(self):
        spec = GridSpec("tri", 3, 3)
        g = make_grid(spec, {e: POS for e in spec.edges()})
        hom, trace = color_tri(g)
        assert verify_ec(g, RHO_SP9P.graph, hom.mapping)
        assert trace.min_size() >= 2

    def test_random_grids_all_verify_with_fat_candidate_sets(self):
        for seed in range(120):
            g = random_grid("tri", 30000 + seed)
            hom, trace = color_tri(g)
            assert verify_ec(g, RHO_SP9P.graph, hom.mapping)
            assert trace.min_size() >= 2

    def test_at_most_ten_identities(self):
        for seed in range(20):
            g = random_grid("tri", 31000 + seed)
            signed = ec_to_signed(color_tri(g)[0], 10)
            assert len(set(signed.mapping)) <= 10

    def test_masked_grid(self):
        rng = random.Random(62)
        for seed in range(25):
            full = GridSpec("tri", 5, 5)
            kept = frozenset(c for c in full.cells() if rng.random() < 0.65)
            if not kept:
                continue
            spec = GridSpec("tri", 5, 5, mask=kept)
            g = make_grid(spec, random_signature(spec, seed, 0.5))
            hom, _ = color_tri(g)
            assert verify_ec(g, RHO_SP9P.graph, hom.mapping)


class TestCandidateMachinery:
    def test_case_table_pair(self):
        target = RHO_SP9P.graph
        got = {target.label(c) for c in compatible_colors(target, [(0, POS), (1, POS)])}
        assert got == {"2+", "inf+", "x+2-", "2x+2-"}

    def test_first_vertex_candidates_stay_in_the_nine_set(self):
        target = RHO_SP9P.graph
        nine = compatible_colors(target, [(0, POS)])
        assert len(nine) == 9
        assert {target.label(c) for c in nine} == {
            "1+",
            "2+",
            "x+",
            "2x+",
            "inf+",
            "x+1-",
            "x+2-",
            "2x+1-",
            "2x+2-",
        }

    def test_every_pair_of_first_candidates_leaves_two_colors(self):
        # the inductive core: whatever two candidates the previous vertex
        # kept, the next vertex still has at least two compatible colors
        target = RHO_SP9P.graph
        second = compatible_colors(target, [(0, POS), (1, POS)])
        first = compatible_colors(target, [(0, POS)])
        for i, p1 in enumerate(first):
            for p2 in first[i + 1 :]:
                reachable = [
                    c
                    for c in second
                    if target.status(p1, c) == POS or target.status(p2, c) == POS
                ]
                assert len(reachable) >= 2

    def test_all_sixteen_local_sign_patterns_leave_two_colors(self):
        # forward DP step for every signature of the four local edges,
        # anchored at adjacent colors 0+ and 1+ for the two upper vertices
        target = RHO_SP9P.graph
        for s1, s2, s3, s4 in product((POS, NEG), repeat=4):
            first = compatible_colors(target, [(0, s1)])
            second = [
                c
                for c in compatible_colors(target, [(0, s2), (1, s3)])
                if any(target.status(p, c) == s4 for p in first)
            ]
            assert len(second) >= 2

    def test_no_constraints_means_every_vertex(self):
        assert compatible_colors(RHO_SP9P.graph, []) == list(range(20))


class TestPeriodicFixtureColoring:
    def test_six_by_six_certificate(self):
        g, coloring = all_c4_unbalanced_grid(6, 6)
        target = induced_target(g, [coloring[v] for v in range(g.n)], 6)
        iso = find_isomorphism(target, sp5_plus())
        assert iso is not None
        mapped = [iso[coloring[v]] for v in range(g.n)]
        assert verify_signed_with_mapping(g, sp5_plus(), mapped) is not None
