"""centauts: exhaustive central-automorphism analysis for small finite p-groups."""

__version__ = "0.1.0"

from . import errors
from .groups import (
    DEFAULT_ELEMENT_CAP,
    Group,
    QuotientMap,
    Subgroup,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
)
from .abelian import (
    AbelianType,
    ClassTwoInvariants,
    HomGrowth,
    class_two_invariants,
    hom_order,
    invariants,
    lemma4_compare,
)
from .automorphisms import (
    DEFAULT_SEARCH_BUDGET,
    AutSet,
    Automorphism,
    CentralHom,
    all_automorphisms,
    alpha_from_f,
    abelian_factor_split,
    aut_fixing_quotient,
    aut_fixing_subgroup,
    autcent,
    enumerate_homs,
    hom_from_automorphism,
    homs_to_central_subgroup,
    inner_automorphisms,
    is_central_automorphism,
    is_purely_nonabelian,
    minimal_generating_set,
    verify_lemma0,
    verify_lemma0a,
)
from .theory import (
    ConditionSide,
    OracleSide,
    TheoremReport,
    theorem_condition,
    verify_attar,
    verify_corollary1,
    verify_lemma3,
    verify_lemma4_sweep,
    verify_proposition1,
    verify_theorem,
)
from .corpus import (
    CHECK_NAMES,
    RunConfig,
    abelian_group,
    analyze_group,
    catalog,
    catalog_group,
    cyclic_group,
    central_product,
    dicyclic_group,
    dihedral_group,
    emit_report,
    group_file_text,
    heisenberg_group,
    metacyclic_group,
    parse_group_file,
    parse_group_text,
    scan_corpus,
    serialize_group,
)

__all__ = [
    "__version__",
    "errors",
    # groups
    "DEFAULT_ELEMENT_CAP",
    "Group",
    "Subgroup",
    "QuotientMap",
    "from_cayley_table",
    "from_permutation_generators",
    "direct_product",
    # abelian invariants
    "AbelianType",
    "ClassTwoInvariants",
    "HomGrowth",
    "invariants",
    "hom_order",
    "class_two_invariants",
    "lemma4_compare",
    # automorphism engine
    "DEFAULT_SEARCH_BUDGET",
    "Automorphism",
    "AutSet",
    "CentralHom",
    "minimal_generating_set",
    "all_automorphisms",
    "inner_automorphisms",
    "is_central_automorphism",
    "autcent",
    "aut_fixing_quotient",
    "aut_fixing_subgroup",
    "enumerate_homs",
    "homs_to_central_subgroup",
    "alpha_from_f",
    "hom_from_automorphism",
    "is_purely_nonabelian",
    "abelian_factor_split",
    "verify_lemma0",
    "verify_lemma0a",
    # theory
    "ConditionSide",
    "OracleSide",
    "TheoremReport",
    "theorem_condition",
    "verify_theorem",
    "verify_proposition1",
    "verify_corollary1",
    "verify_lemma3",
    "verify_lemma4_sweep",
    "verify_attar",
    # corpus and reporting
    "CHECK_NAMES",
    "RunConfig",
    "catalog",
    "catalog_group",
    "cyclic_group",
    "abelian_group",
    "dihedral_group",
    "dicyclic_group",
    "metacyclic_group",
    "heisenberg_group",
    "central_product",
    "parse_group_file",
    "parse_group_text",
    "serialize_group",
    "group_file_text",
    "analyze_group",
    "scan_corpus",
    "emit_report",
]
