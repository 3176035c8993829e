import pytest

from centauts import (
    all_automorphisms,
    aut_fixing_quotient,
    aut_fixing_subgroup,
    autcent,
    direct_product,
    theorem_condition,
    verify_attar,
    verify_corollary1,
    verify_lemma3,
    verify_lemma4_sweep,
    verify_proposition1,
    verify_theorem,
)
from centauts.corpus import (
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    heisenberg_group,
    metacyclic_group,
)
from centauts.errors import NotPGroup, WrongClass
from centauts.theory import build_factor_witness


def d8():
    return dihedral_group(4)


def q8():
    return dicyclic_group(2)


class TestTheoremCondition:
    def test_d8_all_true(self):
        cond = theorem_condition(d8())
        assert cond.r_eq_s and cond.residual_iso and cond.exp_eq and cond.all_met

    def test_modular16_fails_exponent_equality(self):
        cond = theorem_condition(metacyclic_group(8, 2, 5))
        assert cond.r_eq_s and cond.residual_iso and not cond.exp_eq
        assert not cond.all_met

    def test_d8xc2_fails_rank_equality(self):
        cond = theorem_condition(direct_product(d8(), cyclic_group(2)))
        assert not cond.r_eq_s and not cond.all_met

    def test_wrong_class_rejected(self):
        with pytest.raises(WrongClass):
            theorem_condition(cyclic_group(4))
        with pytest.raises(WrongClass):
            theorem_condition(dihedral_group(8))

    def test_non_p_group_rejected(self):
        with pytest.raises(NotPGroup):
            theorem_condition(dihedral_group(3))


class TestVerifyTheorem:
    def test_d8_agrees_with_sets_equal(self):
        rep = verify_theorem(d8())
        assert rep.verdict == "agree"
        assert rep.oracle.autcent_equals_aut_zz
        assert rep.oracle.autcent_order == rep.oracle.aut_zz_order == 4

    def test_d8xq8_agrees_at_order_64(self):
        rep = verify_theorem(direct_product(d8(), q8()))
        assert rep.verdict == "agree"
        assert rep.condition.all_met
        assert rep.oracle.autcent_equals_aut_zz
        assert rep.oracle.autcent_order == 256

    def test_d8xc2_condition_false_and_sets_differ(self):
        rep = verify_theorem(direct_product(d8(), cyclic_group(2)))
        assert rep.verdict == "agree"
        assert not rep.condition.all_met
        assert not rep.oracle.autcent_equals_aut_zz
        assert rep.oracle.autcent_order > rep.oracle.aut_zz_order

    def test_equivalence_corpuswide(self, class2_corpus):
        for g in class2_corpus:
            rep = verify_theorem(g)
            assert rep.verdict == "agree", g.name


class TestProposition1:
    def test_d8_center_case(self):
        g = d8()
        rows = {r.target_members: r for r in verify_proposition1(g)}
        z = g.center().members
        assert rows[z].set_equal_inner and rows[z].condition and rows[z].agree

    def test_d8_trivial_case_both_false(self):
        g = d8()
        rows = {r.target_members: r for r in verify_proposition1(g)}
        triv = (g.identity,)
        assert not rows[triv].set_equal_inner and not rows[triv].condition
        assert rows[triv].agree

    def test_d8xq8_noncyclic_center_both_false(self):
        g = direct_product(d8(), q8())
        rows = {r.target_members: r for r in verify_proposition1(g)}
        z = g.center().members
        assert not rows[z].set_equal_inner and not rows[z].condition
        assert rows[z].agree

    def test_abelian_rejected(self):
        with pytest.raises(WrongClass):
            verify_proposition1(cyclic_group(4))

    def test_equivalence_small_corpus(self, nonabelian_corpus):
        for g in nonabelian_corpus:
            if g.n > 32:
                continue
            for row in verify_proposition1(g):
                assert row.agree, (g.name, row.target_members)


class TestCorollary1:
    def test_positive_cases(self):
        for g in (d8(), q8(), heisenberg_group(3)):
            rep = verify_corollary1(g)
            assert rep.autcent_equals_inn and rep.condition and rep.agree

    def test_d8xq8_fails_both_sides(self):
        rep = verify_corollary1(direct_product(d8(), q8()))
        assert not rep.autcent_equals_inn and not rep.condition and rep.agree

    def test_equivalence_corpuswide(self, nonabelian_corpus):
        for g in nonabelian_corpus:
            assert verify_corollary1(g).agree, g.name


class TestLemma3:
    def test_d8_sets_equal_implies_purely_nonabelian(self):
        rep = verify_lemma3(d8())
        assert rep.sets_equal and rep.purely_nonabelian and rep.agree

    def test_d8xc2_witness(self):
        rep = verify_lemma3(direct_product(d8(), cyclic_group(2)))
        assert not rep.sets_equal and not rep.purely_nonabelian
        assert rep.witness_valid and rep.agree
        assert rep.witness_moved_central is not None

    def test_q8xc4_witness(self):
        rep = verify_lemma3(direct_product(q8(), cyclic_group(4)))
        assert not rep.sets_equal and rep.witness_valid and rep.agree

    def test_witness_properties_explicit(self):
        g = direct_product(d8(), cyclic_group(2))
        z, f = build_factor_witness(g)
        assert g.element_order(z) == 2
        assert z in g.frattini_subgroup()
        from centauts import alpha_from_f, is_central_automorphism

        aut = alpha_from_f(g, f)
        assert aut is not None
        assert is_central_automorphism(g, aut)
        assert any(aut.images[u] != u for u in g.center().members)

    def test_abelian_rejected(self):
        with pytest.raises(WrongClass):
            verify_lemma3(cyclic_group(2))

    def test_implication_corpuswide(self, nonabelian_corpus):
        for g in nonabelian_corpus:
            assert verify_lemma3(g).agree, g.name


class TestLemma4Sweep:
    @pytest.mark.parametrize("p", [2, 3])
    def test_small_sweeps_pass(self, p):
        sweep = verify_lemma4_sweep(p, 3)
        assert sweep.agree and sweep.triples_checked > 0

    def test_triple_counts_grow(self):
        small = verify_lemma4_sweep(2, 2)
        large = verify_lemma4_sweep(2, 3)
        assert large.triples_checked > small.triples_checked


class TestAttar:
    def test_abelian_case(self):
        rep = verify_attar(cyclic_group(4))
        assert rep.set_equal_inner and rep.abelian and rep.agree

    def test_d8(self):
        rep = verify_attar(d8())
        assert rep.set_equal_inner and rep.condition and rep.agree

    def test_d8xq8_fails_both_sides(self):
        rep = verify_attar(direct_product(d8(), q8()))
        assert not rep.set_equal_inner and not rep.condition and rep.agree

    def test_equivalence_corpuswide(self, corpus):
        for g in corpus:
            assert verify_attar(g).agree, g.name


def test_center_fixing_subset_is_monotone(corpus):
    for g in corpus:
        auts = all_automorphisms(g)
        center = g.center()
        azz = aut_fixing_subgroup(g, center, aut_fixing_quotient(g, center, auts))
        assert azz.is_subset_of(autcent(g)), g.name
