"""Two-sided verification of the central-automorphism characterizations.

Each verifier evaluates a structural condition and an exhaustive-enumeration
oracle independently and reports whether they agree; a disagreement is a
counterexample and carries a serializable witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .abelian import (
    AbelianType,
    class_two_invariants,
    lemma4_compare,
)
from .automorphisms import (
    AutSet,
    all_automorphisms,
    abelian_factor_split,
    alpha_from_f,
    aut_fixing_quotient,
    aut_fixing_subgroup,
    autcent,
    CentralHom,
    inner_automorphisms,
    is_purely_nonabelian,
    minimal_generating_set,
)
from .errors import InternalDisagreement, NotPGroup, WrongClass
from .groups import Group, Subgroup


@dataclass(frozen=True)
class ConditionSide:
    """Structural side of the center-fixing criterion for class-2 p-groups."""

    r_eq_s: bool
    residual_iso: bool
    exp_eq: bool

    @property
    def all_met(self) -> bool:
        return self.r_eq_s and self.residual_iso and self.exp_eq

    def to_json(self) -> dict:
        return {
            "rEqS": self.r_eq_s,
            "residualIso": self.residual_iso,
            "expEq": self.exp_eq,
            "all": self.all_met,
        }


@dataclass(frozen=True)
class OracleSide:
    """Enumeration side: orders of the automorphism families and set equalities."""

    autcent_order: int
    aut_zz_order: int
    inn_order: int
    autcent_equals_aut_zz: bool
    autcent_equals_inn: bool

    def to_json(self) -> dict:
        return {
            "autcentOrder": self.autcent_order,
            "autZZOrder": self.aut_zz_order,
            "innOrder": self.inn_order,
            "autcentEqualsAutZZ": self.autcent_equals_aut_zz,
            "autcentEqualsInn": self.autcent_equals_inn,
        }


@dataclass
class TheoremReport:
    """Per-group record: condition flags, oracle counts, lemma verdicts."""

    group_id: str
    order: int
    prime: int | None
    nilpotency_class: int | None
    condition: ConditionSide | None
    oracle: OracleSide | None
    lemma_checks: dict[str, str] = field(default_factory=dict)
    verdict: str = "agree"
    error: str | None = None
    witness: dict | None = None


def _center_fixing_subset(group: Group, budget: int | None) -> AutSet:
    """Aut^Z_Z(G): central automorphisms fixing the center element-wise."""
    auts = all_automorphisms(group, budget)
    center = group.center()
    return aut_fixing_subgroup(group, center, aut_fixing_quotient(group, center, auts))


def theorem_condition(group: Group) -> ConditionSide:
    """Evaluate the three structural conditions of the center-fixing criterion."""
    inv = class_two_invariants(group)
    return ConditionSide(
        r_eq_s=inv.r == inv.s,
        residual_iso=inv.z_residual.exps == inv.ab_residual.exps,
        exp_eq=inv.exp_center == inv.exp_commutator,
    )


def verify_theorem(group: Group, budget: int | None = None) -> TheoremReport:
    """Compare the structural criterion with exhaustive set equality.

    The oracle computes the central automorphisms and the subset fixing the
    center pointwise by full enumeration and tests equality as sets, never
    just cardinality.
    """
    condition = theorem_condition(group)  # raises WrongClass / NotPGroup first
    ac = autcent(group, budget)
    azz = _center_fixing_subset(group, budget)
    inner = inner_automorphisms(group)
    if not azz.is_subset_of(ac):
        raise InternalDisagreement(
            f"center-fixing central automorphisms escape Autcent on {group.name}"
        )
    oracle = OracleSide(
        autcent_order=len(ac),
        aut_zz_order=len(azz),
        inn_order=len(inner),
        autcent_equals_aut_zz=ac == azz,
        autcent_equals_inn=ac == inner,
    )
    agree = condition.all_met == oracle.autcent_equals_aut_zz
    witness = None
    if not agree:
        moved = sorted(ac.images_set ^ azz.images_set)
        witness = {
            "conditionSide": condition.to_json(),
            "automorphism": list(moved[0]) if moved else None,
        }
    return TheoremReport(
        group_id=group.name,
        order=group.n,
        prime=group.p_group_prime(),
        nilpotency_class=group.nilpotency_class(),
        condition=condition,
        oracle=oracle,
        verdict="agree" if agree else "COUNTEREXAMPLE",
        witness=witness,
    )


@dataclass(frozen=True)
class SubgroupCriterionReport:
    """One row of the inner-coincidence check, for a single central subgroup M."""

    group: str
    target_members: tuple[int, ...]
    set_equal_inner: bool
    class_is_two: bool
    commutator_contained: bool
    target_cyclic: bool

    @property
    def condition(self) -> bool:
        return self.class_is_two and self.commutator_contained and self.target_cyclic

    @property
    def agree(self) -> bool:
        return self.set_equal_inner == self.condition


def verify_proposition1(group: Group, budget: int | None = None) -> list[SubgroupCriterionReport]:
    """For every M <= Z(G): Aut^M_Z(G) = Inn(G) iff class 2, [G,G] <= M, M cyclic.

    Requires a non-abelian p-group; both sides are computed independently for
    every subgroup of the center.
    """
    if group.p_group_prime() is None:
        raise NotPGroup(f"{group.name} has order {group.n}, not a prime power")
    if group.is_abelian():
        raise WrongClass(f"{group.name} is abelian; the criterion needs a non-abelian group")

    auts = all_automorphisms(group, budget)
    center = group.center()
    inner = inner_automorphisms(group)
    gamma2 = group.commutator_subgroup()
    class_two = group.nilpotency_class() == 2

    reports = []
    for m_sub in center.all_subgroups():
        aut_m_z = aut_fixing_subgroup(
            group, center, aut_fixing_quotient(group, m_sub, auts)
        )
        reports.append(
            SubgroupCriterionReport(
                group=group.name,
                target_members=m_sub.members,
                set_equal_inner=aut_m_z == inner,
                class_is_two=class_two,
                commutator_contained=gamma2.member_set <= m_sub.member_set,
                target_cyclic=m_sub.is_cyclic(),
            )
        )
    return reports


@dataclass(frozen=True)
class InnerEqualityReport:
    """Autcent(G) = Inn(G) against (Z(G) = [G,G] and Z(G) cyclic)."""

    group: str
    autcent_equals_inn: bool
    center_equals_commutator: bool
    center_cyclic: bool

    @property
    def condition(self) -> bool:
        return self.center_equals_commutator and self.center_cyclic

    @property
    def agree(self) -> bool:
        return self.autcent_equals_inn == self.condition


def verify_corollary1(group: Group, budget: int | None = None) -> InnerEqualityReport:
    """Check Autcent(G) = Inn(G) iff the center is cyclic and equals [G,G]."""
    if group.p_group_prime() is None:
        raise NotPGroup(f"{group.name} has order {group.n}, not a prime power")
    if group.is_abelian():
        raise WrongClass(f"{group.name} is abelian; the criterion needs a non-abelian group")
    ac = autcent(group, budget)
    inner = inner_automorphisms(group)
    center = group.center()
    gamma2 = group.commutator_subgroup()
    return InnerEqualityReport(
        group=group.name,
        autcent_equals_inn=ac == inner,
        center_equals_commutator=center.members == gamma2.members,
        center_cyclic=center.is_cyclic(),
    )


@dataclass(frozen=True)
class PurelyNonabelianReport:
    """Necessity check: Autcent = Aut^Z_Z forces no abelian direct factor.

    When the group does split off an abelian factor, a witness central
    automorphism moving a central element is constructed from an order-p
    element of Z(H) inside the Frattini subgroup and validated.
    """

    group: str
    sets_equal: bool
    purely_nonabelian: bool
    witness_element: int | None = None
    witness_images: tuple[int, ...] | None = None
    witness_is_central: bool | None = None
    witness_moved_central: int | None = None

    @property
    def implication_holds(self) -> bool:
        return self.purely_nonabelian or not self.sets_equal

    @property
    def witness_valid(self) -> bool | None:
        if self.purely_nonabelian:
            return None
        return (
            self.witness_images is not None
            and bool(self.witness_is_central)
            and self.witness_moved_central is not None
        )

    @property
    def agree(self) -> bool:
        ok = self.implication_holds
        if not self.purely_nonabelian:
            ok = ok and bool(self.witness_valid)
        return ok


def build_factor_witness(group: Group) -> tuple[int, "CentralHom"]:
    """The witness data for a group with an abelian direct factor.

    Splits G = H x A, picks an order-p element z of Z(H) inside the Frattini
    subgroup, and returns z together with the homomorphism sending every
    member of a minimal generating set (generators of H followed by those of
    A) to z.  The induced map x -> x*f(x) is then a central automorphism
    moving the central generators of A.
    """
    split = abelian_factor_split(group)
    if split is None:
        raise InternalDisagreement(f"{group.name} has no abelian direct factor")
    h_sub, a_sub = split
    p = group.p_group_prime()
    if p is None:
        raise NotPGroup(f"{group.name} has order {group.n}, not a prime power")

    h_group = h_sub.as_group()
    h_center = {h_sub.members[i] for i in h_group.center().members}
    frattini = group.frattini_subgroup().member_set
    orders = group.element_orders()
    pool = sorted(h_center & frattini)
    candidates = [z for z in pool if orders[z] == p]
    if not candidates:
        raise InternalDisagreement(
            f"no order-{p} element of Z(H) lies in the Frattini subgroup of {group.name}"
        )
    z = candidates[0]

    gens_h = [h_sub.members[i] for i in minimal_generating_set(h_group)]
    a_group = a_sub.as_group()
    gens_a = [a_sub.members[i] for i in minimal_generating_set(a_group)]
    gens = gens_h + gens_a

    target = group.subgroup_generated([z])
    values = _extend_generator_map(group, gens, [z] * len(gens))
    return z, CentralHom.create(group, target, values)


def _extend_generator_map(group: Group, gens: list[int], images: list[int]) -> tuple[int, ...]:
    """Extend a generator assignment multiplicatively; the result must be total."""
    rows = group.mul_rows()
    values = [-1] * group.n
    values[group.identity] = group.identity
    img = {g: y for g, y in zip(gens, images)}
    pool = [group.identity]
    for g in gens:
        if values[g] == -1:
            values[g] = img[g]
            pool.append(g)
    qi = 0
    while qi < len(pool):
        x = pool[qi]
        qi += 1
        row = rows[x]
        for g in gens:
            t = row[g]
            v = rows[values[x]][img[g]]
            if values[t] == -1:
                values[t] = v
                pool.append(t)
            elif values[t] != v:
                raise InternalDisagreement(
                    f"generator assignment on {group.name} does not extend to a homomorphism"
                )
    if any(v == -1 for v in values):
        raise InternalDisagreement(f"generators do not generate {group.name}")
    return tuple(values)


def verify_lemma3(group: Group, budget: int | None = None) -> PurelyNonabelianReport:
    """Exercise both directions of the purely-non-abelian necessity.

    Applies to non-abelian p-groups.  If the central automorphisms all fix
    the center pointwise, the group must be purely non-abelian; when an
    abelian factor exists the constructed witness must be a central
    automorphism that moves a central element (so the two sets differ).
    """
    if group.p_group_prime() is None:
        raise NotPGroup(f"{group.name} has order {group.n}, not a prime power")
    if group.is_abelian():
        raise WrongClass(
            f"{group.name} is abelian; the necessity statement concerns non-abelian groups"
        )
    ac = autcent(group, budget)
    azz = _center_fixing_subset(group, budget)
    sets_equal = ac == azz
    purely = is_purely_nonabelian(group)
    if purely:
        return PurelyNonabelianReport(
            group=group.name, sets_equal=sets_equal, purely_nonabelian=True
        )

    z, f = build_factor_witness(group)
    aut = alpha_from_f(group, f)
    witness_images = aut.images if aut is not None else None
    is_central = aut is not None and aut in ac
    moved = None
    if aut is not None:
        for u in group.center().members:
            if aut.images[u] != u:
                moved = u
                break
    return PurelyNonabelianReport(
        group=group.name,
        sets_equal=sets_equal,
        purely_nonabelian=False,
        witness_element=z,
        witness_images=witness_images,
        witness_is_central=is_central,
        witness_moved_central=moved,
    )


@dataclass(frozen=True)
class HomGrowthSweep:
    """Exhaustive check of the Hom-order growth threshold over type triples."""

    prime: int
    max_exp: int
    triples_checked: int
    failures: tuple[str, ...]

    @property
    def agree(self) -> bool:
        return not self.failures


def _types_up_to(p: int, max_exp: int) -> list[AbelianType]:
    """All abelian types over p of total order at most p**max_exp (trivial included)."""
    types: list[AbelianType] = [AbelianType(p, ())]
    for total in range(1, max_exp + 1):
        for length in range(1, total + 1):
            for combo in combinations_with_replacement(range(1, total + 1), length):
                if sum(combo) == total:
                    types.append(AbelianType(p, tuple(sorted(combo, reverse=True))))
    return types


def verify_lemma4_sweep(p: int, max_exp: int) -> HomGrowthSweep:
    """Sweep every dominated same-length type pair (A, B) and every C.

    For each hypothesis-satisfying triple, the strictness of
    |Hom(A, C)| < |Hom(B, C)| must coincide with the exponent of C reaching
    p**(a_t + 1); the comparison itself is recomputed from Hom orders.
    """
    types = _types_up_to(p, max_exp)
    nonempty = [t for t in types if not t.is_trivial()]
    checked = 0
    failures: list[str] = []
    for a in nonempty:
        for b in nonempty:
            if a.rank != b.rank or a.exps == b.exps:
                continue
            if any(be < ae for ae, be in zip(a.exps, b.exps)):
                continue
            for c in types:
                checked += 1
                try:
                    lemma4_compare(a, b, c)
                except InternalDisagreement as exc:
                    failures.append(str(exc))
    return HomGrowthSweep(
        prime=p, max_exp=max_exp, triples_checked=checked, failures=tuple(failures)
    )


@dataclass(frozen=True)
class StrictCenterReport:
    """Aut^Z_Z(G) = Inn(G) against (abelian, or class 2 with cyclic center)."""

    group: str
    set_equal_inner: bool
    abelian: bool
    class_is_two: bool
    center_cyclic: bool

    @property
    def condition(self) -> bool:
        return self.abelian or (self.class_is_two and self.center_cyclic)

    @property
    def agree(self) -> bool:
        return self.set_equal_inner == self.condition


def verify_attar(group: Group, budget: int | None = None) -> StrictCenterReport:
    """Cross-check: center-fixing central automorphisms collapse to Inn(G)
    exactly for abelian groups and class-2 groups with cyclic center."""
    if group.p_group_prime() is None:
        raise NotPGroup(f"{group.name} has order {group.n}, not a prime power")
    azz = _center_fixing_subset(group, budget)
    inner = inner_automorphisms(group)
    return StrictCenterReport(
        group=group.name,
        set_equal_inner=azz == inner,
        abelian=group.is_abelian(),
        class_is_two=group.nilpotency_class() == 2,
        center_cyclic=group.center().is_cyclic(),
    )
