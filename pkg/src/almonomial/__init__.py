"""Exact character-theory toolkit for almost monomial finite groups."""

__version__ = "0.1.0"

from .amcore import (
    AmVerdict,
    CoverageMatrix,
    coverage_matrix,
    is_almost_monomial,
    is_monomial,
    verify_witnesses,
)
from .chartab import (
    CharacterTable,
    ClassFunction,
    character_table,
    inner_product,
    regular_character,
)
from .charops import InducedCharacter, NotACharacterError, constituents, induce, restrict
from .cyclo import Cyclotomic
from .families import builtin
from .groups import (
    DEFAULT_CAP,
    CapExceededError,
    ConjugacyClass,
    PermGroup,
    coset_action_quotient,
    direct_product,
    group_from_generators,
)
from .lfun import (
    ConstraintSystem,
    SearchBudgetExceeded,
    build_constraints,
    enumerate_satisfying,
    find_pole_pattern,
    pattern_holomorphic,
    poles_force_two_zeros,
)
from .perm import Permutation, compose
from .subgroups import (
    LinearCharacter,
    Subgroup,
    SubgroupClass,
    linear_characters,
    normal_subgroups,
    sign_character,
    subgroup_classes,
    trivial_character,
    young_subgroup,
)
from .symcert import (
    SnCertificate,
    SnWitness,
    certify_symmetric_group,
    conjugate_partition,
    dominates,
    enumerate_ssyt,
    kostka_number,
    kostka_table,
    partitions,
    sn_witness,
    verify_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
