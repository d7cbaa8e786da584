"""Permutation and finite-group layer, checked against naive references."""

import numpy as np
import pytest

from hypermaps import (
    EmptyGenerators,
    FiniteGroup,
    GroupName,
    NotAMember,
    NotNormal,
    Permutation,
    derived_subgroup,
    generate_group,
    normal_closure,
    orbits,
    point_stabilizer,
    quotient_action,
    recognize_group,
)
from hypermaps.build import build_platonic, pin, regular_from_type
from hypermaps.quotients import monodromy

import bruteforce as bf


def perm(*cycles, degree):
    return Permutation.from_cycles(degree, cycles)


class TestPermutation:
    def test_identity_and_call(self):
        e = Permutation.identity(5)
        assert [e(i) for i in range(5)] == list(range(5))
        assert e.is_identity()

    def test_composition_is_left_to_right(self):
        a = Permutation([1, 0, 2])
        b = Permutation([0, 2, 1])
        # (a*b)(0) = b(a(0)) = b(1) = 2
        assert (a * b)(0) == 2
        assert list((a * b).images) == [bf.compose((1, 0, 2), (0, 2, 1))[i] for i in range(3)]

    def test_inverse_and_power(self):
        c = perm((0, 1, 2, 3), degree=5)
        assert (c * ~c).is_identity()
        assert c ** 4 == Permutation.identity(5)
        assert c ** -1 == ~c
        assert c ** 3 == ~c

    def test_order_matches_naive(self):
        c = perm((0, 1, 2), (3, 4), degree=6)
        assert c.order() == 6
        assert c.order() == bf.perm_order(tuple(int(v) for v in c.images))

    def test_involution_and_fixed_points(self):
        t = perm((0, 1), degree=4)
        assert t.is_involution()
        assert list(t.fixed_points()) == [2, 3]

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])

    def test_conjugation(self):
        a = perm((0, 1), degree=3)
        g = perm((0, 1, 2), degree=3)
        assert a.conjugated_by(g) == ~g * a * g


class TestGenerateGroup:
    def test_klein_four_from_commuting_involutions(self):
        g = generate_group([perm((0, 1), (2, 3), degree=4), perm((0, 3), (1, 2), degree=4)])
        assert g.order == 4
        assert sorted(int(o) for o in g.element_orders()) == [1, 2, 2, 2]

    def test_full_monodromy_of_24_flag_map(self):
        h = build_platonic("T")
        g = monodromy(h)
        assert g.order == 24
        # naive closure over the same three involutions agrees
        naive = bf.closure([tuple(int(v) for v in p.images) for p in h.h])
        assert len(naive) == 24

    def test_single_cycle(self):
        g = generate_group([perm((0, 1, 2), degree=3)])
        assert g.order == 3

    def test_empty_generators_rejected(self):
        with pytest.raises(EmptyGenerators):
            generate_group([])

    def test_identity_first_and_membership(self):
        g = generate_group([perm((0, 1, 2), degree=3)])
        assert g.element(0).is_identity()
        assert perm((0, 2, 1), degree=3) in g
        assert Permutation([1, 0, 2]) not in g

    def test_index_arithmetic(self):
        g = generate_group(bf.dihedral_gens(4), degree=4)
        for i in range(g.order):
            assert g.multiply_indices(i, g.inverse_index(i)) == 0


class TestOrbits:
    def test_vertex_orbits_of_24_flag_map(self):
        h = regular_from_type(2, 3, 3)
        assert len(orbits([h.h1, h.h2], h.n_flags)) == 6
        assert len(orbits([h.h0, h.h1], h.n_flags)) == 4

    def test_no_generators_gives_singletons(self):
        assert orbits([], 4) == ((0,), (1,), (2,), (3,))

    def test_orbit_stabilizer_product(self):
        g = generate_group(bf.dihedral_gens(6), degree=6)
        orb = orbits(list(g.generators), 6)[0]
        stab = point_stabilizer(g, 0)
        assert len(orb) * stab.order == g.order


class TestPointStabilizer:
    def test_regular_action_has_trivial_stabilizer(self):
        g = generate_group([perm((0, 1, 2, 3, 4), degree=5)])
        assert point_stabilizer(g, 2).order == 1

    def test_natural_dihedral_stabilizer_has_order_two(self):
        for n in (3, 4, 5):
            g = generate_group(bf.dihedral_gens(n), degree=n)
            assert point_stabilizer(g, 0).order == 2

    def test_flag_stabilizer_of_doubled_tetrahedron(self):
        g = monodromy(pin(build_platonic("T")))
        assert g.degree == 48
        assert point_stabilizer(g, 0).order == 12

    def test_out_of_range_point(self):
        g = generate_group([perm((0, 1), degree=2)])
        with pytest.raises(ValueError):
            point_stabilizer(g, 5)


def _alt5_group() -> FiniteGroup:
    return generate_group([perm((0, 1, 2, 3, 4), degree=5), perm((0, 1, 2), degree=5)])


class TestNormalClosure:
    def test_identity_seed_gives_trivial_subgroup(self):
        g = generate_group(bf.dihedral_gens(4), degree=4)
        assert normal_closure(g, [Permutation.identity(4)]).order == 1

    def test_simple_group_closure_is_everything(self):
        # reference first: the order-60 perfect group has no proper
        # nontrivial normal subgroup, so every nonidentity seed fills it
        g = _alt5_group()
        gens = [tuple(int(v) for v in p.images) for p in g.generators]
        elems = bf.closure(gens)
        assert len(elems) == 60
        minimal = bf.minimal_normal_subgroups(elems, gens)
        assert [len(m) for m in minimal] == [60]
        for i in (1, g.order // 2, g.order - 1):
            assert normal_closure(g, [g.element(i)]).order == 60

    def test_seed_outside_group_rejected(self):
        g = generate_group([perm((0, 1), degree=4)])
        with pytest.raises(NotAMember):
            normal_closure(g, [perm((0, 2), degree=4)])

    def test_conjugation_invariance(self):
        g = generate_group(bf.dihedral_gens(6), degree=6)
        n = normal_closure(g, [g.element(3)])
        sub = {tuple(int(v) for v in e.images) for e in n.elements}
        gens = [tuple(int(v) for v in p.images) for p in g.generators]
        assert bf.is_normal(gens, frozenset(sub))

    def test_dodecahedral_pin_stabilizer_closure(self):
        # reference first: conjugation-closed closure of the flag-0
        # stabilizer inside the order-14400 monodromy group, all in
        # plain tuples, must reach exactly 3600 elements
        g = monodromy(pin(build_platonic("D")))
        assert g.order == 14400
        stab = point_stabilizer(g, 0)
        gens = [tuple(int(v) for v in p.images) for p in g.generators]
        seeds = [tuple(int(v) for v in p.images) for p in stab.generators]
        naive = bf.normal_closure_brute(gens, seeds)
        assert len(naive) == 3600
        closure = normal_closure(g, list(stab.generators))
        assert closure.order == 3600
        assert closure.order == (g.order // g.degree) ** 2


class TestQuotientAction:
    def test_quotient_by_whole_group(self):
        g = generate_group(bf.dihedral_gens(4), degree=4)
        count, images = quotient_action(g, g)
        assert count == 1
        assert all(p.is_identity() for p in images)

    def test_quotient_by_trivial_subgroup(self):
        g = generate_group(bf.dihedral_gens(3), degree=3)
        trivial = generate_group([Permutation.identity(3)])
        count, images = quotient_action(g, trivial)
        assert count == g.order
        assert generate_group(images).order == g.order

    def test_quotient_by_unique_minimal_normal_subgroup(self):
        # reference first: scan the order-24 monodromy group of the
        # 24-flag spherical map for minimal normal subgroups
        g = monodromy(build_platonic("T"))
        gens = [tuple(int(v) for v in p.images) for p in g.generators]
        elems = bf.closure(gens)
        minimal = bf.minimal_normal_subgroups(elems, gens)
        assert len(minimal) == 1 and len(minimal[0]) == 4
        assert bf.coset_count(elems, minimal[0]) == 6

        seeds = [Permutation(list(p)) for p in sorted(minimal[0])][1:]
        normal = normal_closure(g, seeds)
        assert normal.order == 4
        count, images = quotient_action(g, normal)
        assert count == 6
        assert generate_group(images).order == 6

    def test_rejects_non_normal_subgroup(self):
        g = generate_group(bf.dihedral_gens(3), degree=3)
        reflection = generate_group([g.generators[1]], degree=3)
        with pytest.raises(NotNormal):
            quotient_action(g, reflection)

    def test_quotient_respects_relations(self):
        # generator images must satisfy every short relation the
        # originals satisfy
        g = monodromy(build_platonic("C"))
        stab = point_stabilizer(g, 0)
        normal = normal_closure(g, list(stab.generators))
        _, images = quotient_action(g, normal)
        originals = list(g.generators)
        import itertools

        for length in range(1, 5):
            for word in itertools.product(range(len(originals)), repeat=length):
                before = originals[word[0]]
                after = images[word[0]]
                for k in word[1:]:
                    before = before * originals[k]
                    after = after * images[k]
                if before.is_identity():
                    assert after.is_identity()


class TestRecognizeGroup:
    def test_trivial(self):
        g = generate_group([Permutation.identity(1)])
        assert recognize_group(g) == GroupName.trivial()

    def test_cyclic_six(self):
        g = generate_group([perm((0, 1, 2, 3, 4, 5), degree=6)])
        assert recognize_group(g) == GroupName.cyclic(6)

    def test_klein_four(self):
        g = generate_group([perm((0, 1), (2, 3), degree=4), perm((0, 3), (1, 2), degree=4)])
        assert recognize_group(g) == GroupName.klein_four()

    def test_dihedral(self):
        for n in (3, 4, 5, 6):
            g = generate_group(bf.dihedral_gens(n), degree=n)
            assert recognize_group(g) == GroupName.dihedral(n)

    def test_alt4(self):
        g = generate_group(
            [perm((0, 1), (2, 3), degree=4), perm((0, 1, 2), degree=4)]
        )
        assert g.order == 12
        assert recognize_group(g) == GroupName.alt4()

    def test_sym4(self):
        g = generate_group([perm((0, 1), degree=4), perm((0, 1, 2, 3), degree=4)])
        assert g.order == 24
        assert recognize_group(g) == GroupName.sym4()

    def test_order_60_perfect_group(self):
        # reference first: an explicit even-permutation model of the
        # same order with matching element-order multiset, and a brute
        # perfectness check on the group under test
        g = _alt5_group()
        gens = [tuple(int(v) for v in p.images) for p in g.generators]
        elems = bf.closure(gens)
        model = bf.even_permutations(5)
        assert len(model) == 60
        assert bf.element_orders(elems) == bf.element_orders(model)
        assert bf.commutator_closure(elems) == elems
        assert recognize_group(g) == GroupName.alt5()

    def test_flag_stabilizer_of_doubled_tetrahedron_is_alt4(self):
        g = monodromy(pin(build_platonic("T")))
        stab = point_stabilizer(g, 0)
        assert recognize_group(stab) == GroupName.alt4()

    def test_unrecognized_order(self):
        g = generate_group([perm((0, 1, 2, 3, 4, 5, 6), degree=7)])
        name = recognize_group(g)
        assert name == GroupName.cyclic(7)
        q = generate_group(
            [perm((0, 1, 2, 3, 4, 5, 6, 7), degree=8), perm((1, 3), (2, 6), (5, 7), degree=8)]
        )
        if q.order == 16:
            assert recognize_group(q).group_order == 16

    def test_agrees_with_order_multiset_fingerprint_up_to_24(self):
        cases = [
            generate_group([Permutation.identity(2)]),
            generate_group([perm((0, 1), degree=2)]),
            generate_group([perm((0, 1, 2), degree=3)]),
            generate_group(bf.dihedral_gens(3), degree=3),
            generate_group(bf.dihedral_gens(4), degree=4),
            generate_group([perm((0, 1), (2, 3), degree=4), perm((0, 1, 2), degree=4)]),
            generate_group([perm((0, 1), degree=4), perm((0, 1, 2, 3), degree=4)]),
        ]
        for g in cases:
            name = recognize_group(g)
            assert name.group_order == g.order
            elems = bf.closure([tuple(int(v) for v in p.images) for p in g.generators])
            assert tuple(sorted(int(o) for o in g.element_orders())) == bf.element_orders(elems)


class TestDerivedSubgroup:
    def test_abelian_gives_trivial(self):
        g = generate_group([perm((0, 1, 2, 3), degree=4)])
        assert derived_subgroup(g).order == 1

    def test_perfect_group_is_its_own_derived_subgroup(self):
        # reference first: brute commutator closure on the plain-tuple model
        g = _alt5_group()
        elems = bf.closure([tuple(int(v) for v in p.images) for p in g.generators])
        assert bf.commutator_closure(elems) == elems
        assert derived_subgroup(g).order == 60

    def test_dihedral_of_order_twelve(self):
        # reference first: brute commutator enumeration gives the
        # rotation cube subgroup of order 3
        gens = bf.dihedral_gens(6)
        elems = bf.closure(gens)
        naive = bf.commutator_closure(elems)
        assert len(naive) == 3
        g = generate_group(gens, degree=6)
        derived = derived_subgroup(g)
        assert derived.order == 3
        assert recognize_group(derived) == GroupName.cyclic(3)


class TestFiniteGroupInvariants:
    def test_orbit_stabilizer_exhaustive_small_degrees(self):
        groups = [
            generate_group(bf.dihedral_gens(5), degree=5),
            monodromy(build_platonic("T")),
            generate_group([perm((0, 1), (2, 3), degree=4), perm((0, 1, 2), degree=4)]),
        ]
        for g in groups:
            assert g.degree <= 48
            for x in range(g.degree):
                orbit = {int(row[x]) for row in g.matrix}
                assert len(orbit) * point_stabilizer(g, x).order == g.order

    def test_elements_are_closed_and_contain_inverses(self):
        g = generate_group(bf.dihedral_gens(4), degree=4)
        elems = set(g.elements)
        for a in elems:
            assert ~a in elems
            for b in elems:
                assert a * b in elems
