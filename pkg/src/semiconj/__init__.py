"""Conjugacy in finite semigroups and transformation monoids."""

from .transform import (
    UNDEFINED,
    BasicKind,
    PartialTransformation,
    compose,
    contains,
    identity,
    is_full,
    is_injective,
    is_zero,
    join,
    make_basic,
    zero,
)
from .digraph import ConjInvariant, classify, cycle_lengths, decompose, invariant, rank, sac, to_dot
from .rphom import (
    PartialMap,
    WitnessConstraint,
    assemble_hom,
    build_cho_hom,
    build_cycle_hom,
    search_rp_hom,
    verify_intertwining,
    verify_rp_hom,
)
from .conjugacy import Family, conj_oracle, conj_p_finite, conj_sym_finite, conj_t_finite, decide
from .abstract import (
    FiniteSemigroup,
    RelationKind,
    check_axioms,
    classes,
    cyclic_group,
    from_generators,
    group_conjugacy,
    load_table,
    p_set,
    relation,
)
from .census import census, enumerate_family

__version__ = "0.1.0"
