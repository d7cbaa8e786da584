"""Exhaustive small-size search, cross-validated by a from-scratch recount."""

import pytest

from hypermaps.catalog import brute_oracle, fixed_point_free_involutions

import bruteforce as bf


def double_factorial_odd(n: int) -> int:
    out = 1
    for k in range(n - 1, 0, -2):
        out *= k
    return out


class TestInvolutionEnumeration:
    def test_counts_follow_the_pairing_formula(self):
        for n in (2, 4, 6, 8):
            assert fixed_point_free_involutions(n).shape[0] == double_factorial_odd(n)

    def test_rows_are_fixed_point_free_involutions(self):
        for n in (2, 4, 6):
            for row in fixed_point_free_involutions(n):
                img = tuple(int(v) for v in row)
                assert bf.compose(img, img) == bf.identity(n)
                assert all(img[x] != x for x in range(n))

    def test_rows_are_distinct(self):
        rows = fixed_point_free_involutions(8)
        assert len({tuple(int(v) for v in r) for r in rows}) == rows.shape[0]

    def test_odd_size_rejected(self):
        with pytest.raises(ValueError):
            fixed_point_free_involutions(5)


def independent_classes(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """From-scratch enumeration of spherical classes with n flags.

    Every class has a representative whose h0 is the standard pairing
    (conjugate h0 onto it), so scanning (h1, h2) pairs is exhaustive.
    Dedupe is by pairwise equivariant-extension isomorphism search.
    """
    invs = [tuple(int(v) for v in row) for row in fixed_point_free_involutions(n)]
    std = tuple(i ^ 1 for i in range(n))
    reps: list[tuple[tuple[int, ...], ...]] = []
    for h1 in invs:
        for h2 in invs:
            triple = (std, h1, h2)
            if len(bf.triple_orbits(triple, (0, 1, 2))) != 1:
                continue
            if bf.triple_euler(triple) != 2:
                continue
            if not any(bf.isomorphism_exists(triple, rep) for rep in reps):
                reps.append(triple)
    return reps


class TestBruteOracleSmall:
    def test_four_flag_report(self):
        report = brute_oracle(max_flags=4)
        assert report.ok
        assert report.violations == ()
        assert report.sizes == (2, 4)
        assert report.triples_scanned == {2: 1, 4: 27}
        assert report.class_counts == report.recount_class_counts

    def test_four_flag_spherical_triple_count_independent(self):
        invs = [tuple(int(v) for v in row) for row in fixed_point_free_involutions(4)]
        count = 0
        for a in invs:
            for b in invs:
                for c in invs:
                    triple = (a, b, c)
                    if len(bf.triple_orbits(triple, (0, 1, 2))) != 1:
                        continue
                    if bf.triple_euler(triple) == 2:
                        count += 1
        report = brute_oracle(max_flags=4)
        assert report.spherical_triples[4] == count
        assert report.spherical_triples[2] == 1

    def test_other_caps_rejected(self):
        for bad in (0, 2, 6, 10):
            with pytest.raises(ValueError):
                brute_oracle(max_flags=bad)


class TestBruteOracleFull:
    def test_no_violations(self, oracle8):
        assert oracle8.ok
        assert oracle8.violations == ()
        assert oracle8.sizes == (2, 4, 6, 8)
        assert oracle8.class_counts == oracle8.recount_class_counts

    def test_class_counts_match_independent_enumeration(self, oracle8):
        counts = {n: len(independent_classes(n)) for n in (2, 4, 6, 8)}
        assert oracle8.class_counts == counts

    def test_classification_totals_match_independent_enumeration(self, oracle8):
        uniform = bipartite = bip_uniform = 0
        for n in (2, 4, 6, 8):
            for triple in independent_classes(n):
                vsets = [
                    {len(o) // 2 for o in bf.triple_orbits(triple, picks)}
                    for picks in ((1, 2), (0, 2), (0, 1))
                ]
                if all(len(s) == 1 for s in vsets):
                    uniform += 1
                    # spherical uniform hypermaps must be regular
                    assert bf.automorphism_count(triple) == n
                colors = bf.triple_vertex_coloring(triple)
                if colors is None:
                    continue
                bipartite += 1
                per_class = [set(), set()]
                for orbit in bf.triple_orbits(triple, (1, 2)):
                    per_class[colors[orbit[0]]].add(len(orbit) // 2)
                if (
                    all(len(s) == 1 for s in per_class)
                    and len(vsets[1]) == 1
                    and len(vsets[2]) == 1
                ):
                    bip_uniform += 1
                    # and bipartite-uniform ones must be bipartite-regular
                    class0 = [x for x in range(n) if colors[x] == 0]
                    hits = sum(
                        1
                        for t in class0
                        if (phi := bf.extend_morphism(triple, triple, t)) is not None
                        and len(set(phi)) == n
                    )
                    assert hits == len(class0)
        assert oracle8.uniform_classes == uniform
        assert oracle8.bipartite_classes == bipartite
        assert oracle8.bipartite_uniform_classes == bip_uniform

    def test_json_dict_shape(self, oracle8):
        data = oracle8.to_json_dict()
        assert data["ok"] is True
        assert data["violations"] == []
        assert data["class_counts"] == {str(k): v for k, v in oracle8.class_counts.items()}
