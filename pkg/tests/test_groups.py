import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from centauts import (
    direct_product,
    from_cayley_table,
    from_permutation_generators,
    invariants,
)
from centauts.corpus import abelian_group, cyclic_group, dicyclic_group, dihedral_group
from centauts.errors import (
    NotAGroup,
    NotNilpotent,
    NotNormal,
    NotPGroup,
    SizeLimitExceeded,
)

from oracles import (
    identity_of,
    naive_center,
    naive_commutator_subgroup,
    naive_normal_subgroups,
    naive_subgroups,
    relabel,
)


def d8():
    return from_permutation_generators(4, [[1, 2, 3, 0], [2, 1, 0, 3]], name="D8")


class TestFromCayleyTable:
    def test_trivial_group(self):
        g = from_cayley_table([[0]])
        assert g.n == 1 and g.identity == 0

    def test_c2(self):
        g = from_cayley_table([[0, 1], [1, 0]])
        assert g.n == 2
        assert g.inv.tolist() == [0, 1]

    def test_d8_table_from_generators(self):
        table = d8().mul
        g = from_cayley_table(table, name="D8-copy")
        assert g.n == 8
        assert [int(z) for z in g.center().members] == naive_center(table.tolist())
        assert len(g.center()) == 2

    def test_rejects_non_square(self):
        with pytest.raises(NotAGroup):
            from_cayley_table([[0, 1]])

    def test_rejects_out_of_range_entry(self):
        with pytest.raises(NotAGroup, match="outside"):
            from_cayley_table([[0, 1], [1, 5]])

    def test_rejects_non_associative(self):
        # a quasigroup (Latin square) that is not a group
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(NotAGroup, match="associativity"):
            from_cayley_table(table)

    def test_rejects_missing_identity(self):
        with pytest.raises(NotAGroup, match="identity"):
            from_cayley_table([[1, 1], [1, 1]])

    def test_element_cap(self):
        with pytest.raises(SizeLimitExceeded):
            from_cayley_table(cyclic_group(8).mul, max_order=4)


class TestFromPermutationGenerators:
    def test_single_four_cycle_gives_c4(self):
        g = from_permutation_generators(4, [[1, 2, 3, 0]])
        assert g.n == 4
        assert sorted(g.element_orders()) == [1, 2, 4, 4]

    def test_four_cycle_and_transposition_give_d8(self):
        g = d8()
        assert g.n == 8
        assert len(g.center()) == 2

    def test_quaternion_from_regular_representation(self):
        q8 = dicyclic_group(2)
        rows = q8.mul_rows()
        gen_a = [rows[x][1] for x in range(8)]  # right multiplication by a
        gen_b = [rows[x][4] for x in range(8)]  # right multiplication by b
        g = from_permutation_generators(8, [gen_a, gen_b], name="Q8perm")
        assert g.n == 8
        assert sum(1 for o in g.element_orders() if o == 2) == 1

    def test_rejects_non_bijection(self):
        with pytest.raises(NotAGroup, match="bijection"):
            from_permutation_generators(3, [[0, 0, 1]])

    def test_closure_cap(self):
        with pytest.raises(SizeLimitExceeded):
            from_permutation_generators(8, [[1, 2, 3, 4, 5, 6, 7, 0]], max_order=4)

    def test_discovery_order_is_deterministic(self):
        a = from_permutation_generators(4, [[1, 2, 3, 0], [2, 1, 0, 3]])
        b = from_permutation_generators(4, [[1, 2, 3, 0], [2, 1, 0, 3]])
        assert np.array_equal(a.mul, b.mul)


class TestDirectProduct:
    def test_c2_by_c2(self):
        g = direct_product(cyclic_group(2), cyclic_group(2))
        assert g.n == 4 and g.exponent() == 2

    def test_d8_by_c2_center(self):
        g = direct_product(dihedral_group(4), cyclic_group(2))
        assert g.n == 16 and len(g.center()) == 4

    def test_d8_by_q8_center_type(self):
        g = direct_product(dihedral_group(4), dicyclic_group(2))
        assert g.n == 64
        z = g.center()
        assert invariants(z.as_group(), 2).exps == (1, 1)

    def test_product_cap(self):
        with pytest.raises(SizeLimitExceeded):
            direct_product(cyclic_group(16), cyclic_group(16), max_order=64)


class TestCenterAndCommutator:
    def test_abelian_center_is_everything(self):
        g = abelian_group([2, 4])
        assert g.center().members == tuple(range(8))

    def test_d8_center_size_two(self):
        g = d8()
        assert [int(x) for x in g.center().members] == naive_center(g.mul.tolist())

    def test_heisenberg_center_size_three(self):
        from centauts.corpus import heisenberg_group

        g = heisenberg_group(3)
        assert len(g.center()) == 3
        assert [int(x) for x in g.center().members] == naive_center(g.mul.tolist())

    def test_abelian_commutator_trivial(self):
        g = abelian_group([3, 9])
        assert g.commutator_subgroup().is_trivial()

    def test_d8_commutator_inside_center(self):
        g = d8()
        gamma2 = g.commutator_subgroup()
        assert len(gamma2) == 2
        assert gamma2.member_set <= g.center().member_set
        assert list(gamma2.members) == naive_commutator_subgroup(g.mul.tolist())

    def test_d8xq8_commutator_equals_center(self):
        g = direct_product(dihedral_group(4), dicyclic_group(2))
        gamma2 = g.commutator_subgroup()
        assert len(gamma2) == 4
        assert gamma2.members == g.center().members


class TestSubgroupGeneration:
    def test_empty_seed(self):
        g = d8()
        assert g.subgroup_generated([]).members == (g.identity,)

    def test_cyclic_generator_gives_whole_group(self):
        g = cyclic_group(4)
        x = next(i for i in range(4) if g.element_order(i) == 4)
        assert len(g.subgroup_generated([x])) == 4

    def test_two_reflections_give_klein_four(self):
        g = d8()
        orders = g.element_orders()
        z = [m for m in g.center().members if m != g.identity][0]
        refl = [x for x in range(8) if orders[x] == 2 and x != z]
        a = refl[0]
        b = g.op(a, z)
        sub = g.subgroup_generated([a, b])
        assert len(sub) == 4 and sub.exponent() == 2

    def test_subgroup_validation(self):
        g = cyclic_group(4)
        with pytest.raises(NotAGroup):
            g.subgroup([0, 1])  # not closed


class TestQuotient:
    def test_quotient_by_whole_group(self):
        g = d8()
        q = g.quotient(g.full_subgroup())
        assert q.target.n == 1

    def test_d8_mod_center_is_klein_four(self):
        g = d8()
        q = g.quotient(g.center())
        assert q.target.n == 4
        assert q.target.exponent() == 2
        assert q.kernel().members == g.center().members

    def test_q8_mod_commutator_is_klein_four(self):
        g = dicyclic_group(2)
        q = g.quotient(g.commutator_subgroup())
        assert q.target.n == 4 and q.target.exponent() == 2

    def test_rejects_non_normal(self):
        g = d8()
        orders = g.element_orders()
        z = [m for m in g.center().members if m != g.identity][0]
        refl = [x for x in range(8) if orders[x] == 2 and x != z][0]
        with pytest.raises(NotNormal):
            g.quotient(g.subgroup_generated([refl]))

    def test_center_quotient_never_nontrivial_cyclic(self, corpus):
        for g in corpus:
            q = g.center_quotient().target
            assert q.n == 1 or not q.full_subgroup().is_cyclic(), g.name


class TestSeriesAndExponent:
    def test_abelian_class_one(self):
        assert abelian_group([2, 2]).nilpotency_class() == 1

    def test_trivial_class_zero(self):
        assert from_cayley_table([[0]]).nilpotency_class() == 0

    def test_d8_class_two(self):
        assert d8().nilpotency_class() == 2

    def test_d16_class_three(self):
        assert dihedral_group(8).nilpotency_class() == 3

    def test_s3_not_nilpotent(self):
        with pytest.raises(NotNilpotent):
            dihedral_group(3).nilpotency_class()

    def test_exponents(self):
        assert from_cayley_table([[0]]).exponent() == 1
        assert dicyclic_group(2).exponent() == 4
        assert abelian_group([2, 4]).exponent() == 4


class TestFrattini:
    def test_elementary_abelian_trivial(self):
        assert abelian_group([2, 2]).frattini_subgroup().is_trivial()

    def test_c4(self):
        assert len(cyclic_group(4).frattini_subgroup()) == 2

    def test_d8_frattini_is_center(self):
        g = d8()
        assert g.frattini_subgroup().members == g.center().members

    def test_not_p_group(self):
        with pytest.raises(NotPGroup):
            dihedral_group(3).frattini_subgroup()

    def test_matches_maximal_subgroup_intersection(self, corpus):
        for g in corpus:
            if g.n > 64:
                continue
            p = g.p_group_prime()
            maximal = [s for s in g.all_subgroups() if len(s) == g.n // p]
            meet = set(range(g.n))
            for s in maximal:
                meet &= s.member_set
            assert g.frattini_subgroup().member_set == meet, g.name


class TestPGroupPrime:
    def test_values(self):
        assert dihedral_group(4).p_group_prime() == 2
        assert cyclic_group(27).p_group_prime() == 3
        assert abelian_group([12]).p_group_prime() is None
        assert from_cayley_table([[0]]).p_group_prime() is None


class TestSubgroupEnumeration:
    def test_trivial(self):
        g = from_cayley_table([[0]])
        assert len(g.all_subgroups()) == 1

    def test_klein_four_has_five(self):
        g = abelian_group([2, 2])
        subs = g.all_subgroups()
        assert len(subs) == 5
        assert [s.members for s in subs] == [
            tuple(s) for s in naive_subgroups(g.mul.tolist())
        ]

    def test_c4_has_three(self):
        assert len(cyclic_group(4).all_subgroups()) == 3

    def test_d8_has_ten(self):
        g = d8()
        subs = g.all_subgroups()
        assert [s.members for s in subs] == [
            tuple(s) for s in naive_subgroups(g.mul.tolist())
        ]
        assert len(subs) == 10

    def test_abelian_normals_are_all_subgroups(self):
        g = abelian_group([2, 4])
        assert len(g.normal_subgroups()) == len(g.all_subgroups())

    def test_q8_six_normal(self):
        g = dicyclic_group(2)
        normals = g.normal_subgroups()
        assert len(normals) == 6
        assert len(g.all_subgroups()) == 6

    def test_d8_normals_match_powerset_scan(self):
        g = d8()
        normals = g.normal_subgroups()
        assert [s.members for s in normals] == [
            tuple(s) for s in naive_normal_subgroups(g.mul.tolist())
        ]
        assert len(normals) == 6

    def test_subgroup_count_cap(self):
        g = abelian_group([2, 2, 2])
        with pytest.raises(SizeLimitExceeded):
            g.full_subgroup().all_subgroups(subgroup_cap=3)


@settings(max_examples=25, deadline=None)
@given(seed=st.randoms(use_true_random=False))
def test_relabeling_invariance(seed):
    base = from_permutation_generators(4, [[1, 2, 3, 0], [2, 1, 0, 3]])
    perm = list(range(8))
    seed.shuffle(perm)
    table = relabel(base.mul.tolist(), perm)
    g = from_cayley_table(table)
    assert g.n == base.n
    assert sorted(g.element_orders()) == sorted(base.element_orders())
    assert g.exponent() == base.exponent()
    assert g.nilpotency_class() == base.nilpotency_class()
    assert len(g.center()) == len(base.center())
    assert len(g.commutator_subgroup()) == len(base.commutator_subgroup())
    assert identity_of(table) == g.identity


def test_lagrange_holds_corpuswide(corpus):
    for g in corpus:
        for s in (g.center(), g.commutator_subgroup(), g.frattini_subgroup()):
            assert g.n % len(s) == 0

def test_center_and_commutator_are_normal(corpus):
    for g in corpus:
        assert g.center().is_normal()
        assert g.commutator_subgroup().is_normal()

def test_commutator_in_center_iff_class_at_most_two(corpus):
    for g in corpus:
        inside = g.commutator_subgroup().member_set <= g.center().member_set
        assert inside == (g.nilpotency_class() <= 2), g.name
