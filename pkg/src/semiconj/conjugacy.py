"""
Conjugacy deciders for the finite transformation monoids P(n), T(n), I(n), Sym(n).

The invariant deciders compare cycle sets and maximal root ranks; the oracle
searches for rp-homomorphisms in both directions under the witness shape
allowed in the family (arbitrary partial, total, injective, bijective).
I(n) has no invariant decider and is handled by the oracle alone.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .digraph import ChoType, ConjInvariant, CycleType, decompose, invariant
from .rphom import (
    PartialMap,
    WitnessConstraint,
    assemble_hom,
    build_cho_hom,
    build_cycle_hom,
    search_rp_hom,
)
from .transform import PartialTransformation, SizeMismatchError, is_full, is_injective, is_zero

__all__ = [
    "Family",
    "ConjugacyVerdict",
    "MembershipError",
    "conj_p_finite",
    "conj_t_finite",
    "conj_sym_finite",
    "conj_oracle",
    "decide",
    "cycle_type",
]


class MembershipError(ValueError):
    """An element does not belong to the requested family."""


class Family(enum.Enum):
    PX = "p"
    TX = "t"
    IX = "i"
    SYMX = "sym"

    @property
    def constraint(self) -> WitnessConstraint:
        return {
            Family.PX: WitnessConstraint.ANY_PARTIAL,
            Family.TX: WitnessConstraint.TOTAL,
            Family.IX: WitnessConstraint.INJECTIVE_PARTIAL,
            Family.SYMX: WitnessConstraint.INJECTIVE_TOTAL,
        }[self]

    def contains(self, a: PartialTransformation) -> bool:
        if self is Family.PX:
            return True
        if self is Family.TX:
            return is_full(a)
        if self is Family.IX:
            return is_injective(a)
        return is_full(a) and is_injective(a)


@dataclass(frozen=True)
class ConjugacyVerdict:
    conjugate: bool
    invariants_src: ConjInvariant
    invariants_dst: ConjInvariant
    witness_forward: Optional[PartialMap] = None
    witness_backward: Optional[PartialMap] = None

    def to_dict(self) -> dict:
        out = {
            "conjugate": self.conjugate,
            "cs_src": list(self.invariants_src.cs),
            "s_src": self.invariants_src.s,
            "cs_dst": list(self.invariants_dst.cs),
            "s_dst": self.invariants_dst.s,
        }
        if self.witness_forward is not None:
            out["witness_forward"] = self.witness_forward.to_dict()
        if self.witness_backward is not None:
            out["witness_backward"] = self.witness_backward.to_dict()
        return out


def _check(a: PartialTransformation, b: PartialTransformation, family: Family):
    if a.n != b.n:
        raise SizeMismatchError(f"ground sets differ: n={a.n} vs n={b.n}")
    for name, t in (("first", a), ("second", b)):
        if not family.contains(t):
            raise MembershipError(f"the {name} element is not in {family.name}: {list(t.image)}")


def _component_witness(a: PartialTransformation, b: PartialTransformation) -> PartialMap:
    """
    Witness from ``a`` to ``b`` for a pair already known to be conjugate in P(n).

    Each cycle component goes to the shortest cycle of ``b`` whose length
    divides its own; each cho component goes to the cho component of ``b``
    with the largest root rank.
    """
    if is_zero(a):
        return PartialMap.identity(a.n)
    b_comps = decompose(b)
    cyc = sorted((c for c in b_comps if isinstance(c.kind, CycleType)), key=lambda c: c.kind.length)
    cho = [c for c in b_comps if isinstance(c.kind, ChoType)]
    top = max(cho, key=lambda c: c.kind.root_rank) if cho else None
    maps = []
    for c in decompose(a):
        if isinstance(c.kind, CycleType):
            target = next(d for d in cyc if c.kind.length % d.kind.length == 0)
            maps.append(build_cycle_hom(c, target))
        else:
            maps.append(build_cho_hom(c, top))
    return assemble_hom(a, b, maps)


def _totalize(phi: PartialMap, a: PartialTransformation, b: PartialTransformation) -> PartialMap:
    # points outside span(a) are isolated in a; send them to a terminal point of b
    missing = [x for x in range(a.n) if x not in phi.entries]
    if not missing:
        return phi
    terminal = next(y for y in range(b.n) if b.image[y] is None)
    return PartialMap(a.n, b.n, {**phi.entries, **{x: terminal for x in missing}})


def conj_p_finite(
    a: PartialTransformation, b: PartialTransformation, witness: bool = False
) -> ConjugacyVerdict:
    """Decide conjugacy in P(n) by comparing (cycle set, maximal root rank)."""
    _check(a, b, Family.PX)
    ia, ib = invariant(a), invariant(b)
    ok = ia == ib
    fwd = bwd = None
    if ok and witness:
        fwd, bwd = _component_witness(a, b), _component_witness(b, a)
    return ConjugacyVerdict(ok, ia, ib, fwd, bwd)


def conj_t_finite(
    a: PartialTransformation, b: PartialTransformation, witness: bool = False
) -> ConjugacyVerdict:
    """Decide conjugacy in T(n) by comparing cycle sets; witnesses are total maps."""
    _check(a, b, Family.TX)
    ia, ib = invariant(a), invariant(b)
    ok = ia.cs == ib.cs
    fwd = bwd = None
    if ok and witness:
        fwd = _totalize(_component_witness(a, b), a, b)
        bwd = _totalize(_component_witness(b, a), b, a)
    return ConjugacyVerdict(ok, ia, ib, fwd, bwd)


def cycle_type(a: PartialTransformation) -> tuple[tuple[int, int], ...]:
    """Sorted ``(length, count)`` pairs over the cycles of ``a``."""
    counts = Counter(c.kind.length for c in decompose(a) if isinstance(c.kind, CycleType))
    return tuple(sorted(counts.items()))


def _cycles_by_length(a: PartialTransformation) -> list[tuple[int, ...]]:
    cycles = [c.kind.cycle for c in decompose(a) if isinstance(c.kind, CycleType)]
    return sorted(cycles, key=lambda c: (len(c), c))


def _bijection_witness(a: PartialTransformation, b: PartialTransformation) -> PartialMap:
    out = {}
    for ca, cb in zip(_cycles_by_length(a), _cycles_by_length(b)):
        out.update(zip(ca, cb))
    return PartialMap(a.n, b.n, out)


def conj_sym_finite(
    a: PartialTransformation, b: PartialTransformation, witness: bool = False
) -> ConjugacyVerdict:
    """Decide conjugacy in Sym(n): equal cycle types, fixed points included."""
    _check(a, b, Family.SYMX)
    ok = cycle_type(a) == cycle_type(b)
    fwd = bwd = None
    if ok and witness:
        fwd, bwd = _bijection_witness(a, b), _bijection_witness(b, a)
    return ConjugacyVerdict(ok, invariant(a), invariant(b), fwd, bwd)


def conj_oracle(
    a: PartialTransformation, b: PartialTransformation, family: Family = Family.PX
) -> ConjugacyVerdict:
    """Decide conjugacy by searching for witnesses in both directions."""
    family = Family(family)
    _check(a, b, family)
    fwd = search_rp_hom(a, b, family.constraint)
    bwd = search_rp_hom(b, a, family.constraint) if fwd is not None else None
    ok = fwd is not None and bwd is not None
    return ConjugacyVerdict(ok, invariant(a), invariant(b), fwd if ok else None, bwd if ok else None)


def decide(
    a: PartialTransformation, b: PartialTransformation, family: Family, witness: bool = False
) -> ConjugacyVerdict:
    """Dispatch to the fastest decider available for ``family``."""
    family = Family(family)
    if family is Family.PX:
        return conj_p_finite(a, b, witness)
    if family is Family.TX:
        return conj_t_finite(a, b, witness)
    if family is Family.SYMX:
        return conj_sym_finite(a, b, witness)
    return conj_oracle(a, b, family)
