"""
Exhaustive conjugacy-class censuses of P(n), T(n), I(n) and Sym(n).

Classes are computed by grouping on the conjugacy invariant and,
independently, by brute force: the ``C`` relation of the full Cayley table
when it fits, otherwise pairwise witness search.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .abstract import MAX_ORDER, RelationKind, classes, table_of_elements
from .conjugacy import Family, conj_oracle, cycle_type
from .digraph import ConjInvariant, invariant
from .transform import PartialTransformation

__all__ = [
    "CensusError",
    "ClassInfo",
    "CensusReport",
    "ENUMERATION_CAPS",
    "BRUTEFORCE_CAPS",
    "family_size",
    "enumerate_family",
    "invariant_partition",
    "bruteforce_partition",
    "oracle_partition",
    "census",
]

ENUMERATION_CAPS = {Family.PX: 6, Family.TX: 7, Family.SYMX: 8, Family.IX: 6}
BRUTEFORCE_CAPS = {Family.PX: 3, Family.TX: 4, Family.SYMX: 5, Family.IX: 4}


class CensusError(ValueError):
    pass


def family_size(family: Family, n: int) -> int:
    family = Family(family)
    if family is Family.PX:
        return (n + 1) ** n
    if family is Family.TX:
        return n**n
    if family is Family.SYMX:
        return math.factorial(n)
    return sum(math.comb(n, k) ** 2 * math.factorial(k) for k in range(n + 1))


def enumerate_family(family: Family, n: int, cap: Optional[int] = None) -> Iterator[PartialTransformation]:
    """Every element of the family once, in lexicographic image order (undefined first)."""
    family = Family(family)
    limit = ENUMERATION_CAPS[family] if cap is None else cap
    if n < 1:
        raise CensusError("n must be positive")
    if n > limit:
        raise CensusError(f"n={n} exceeds the enumeration cap {limit} for {family.name}")
    if family is Family.SYMX:
        for p in itertools.permutations(range(n)):
            yield PartialTransformation(n, p)
        return
    values = list(range(n)) if family is Family.TX else [None, *range(n)]
    for img in itertools.product(values, repeat=n):
        if family is Family.IX:
            defined = [y for y in img if y is not None]
            if len(defined) != len(set(defined)):
                continue
        yield PartialTransformation(n, img)


def _group(elems: list[PartialTransformation], key: Callable) -> list[list[PartialTransformation]]:
    groups: dict = {}
    for e in elems:
        groups.setdefault(key(e), []).append(e)
    return _canonical(groups.values())


def _canonical(parts) -> list[list[PartialTransformation]]:
    parts = [sorted(p, key=PartialTransformation.key) for p in parts]
    return sorted(parts, key=lambda p: p[0].key())


def _invariant_key(family: Family) -> Callable:
    if family is Family.PX:
        return invariant
    if family is Family.TX:
        return lambda a: invariant(a).cs
    if family is Family.SYMX:
        return cycle_type
    raise CensusError("I(n) has no invariant characterization; use bruteforce mode")


def invariant_partition(family: Family, n: int) -> list[list[PartialTransformation]]:
    family = Family(family)
    key = _invariant_key(family)
    return _group(list(enumerate_family(family, n)), key)


def oracle_partition(family: Family, elems: list[PartialTransformation]) -> list[list[PartialTransformation]]:
    """Partition by witness search against one representative per class found so far."""
    family = Family(family)
    parts: list[list[PartialTransformation]] = []
    for e in elems:
        for p in parts:
            if conj_oracle(p[0], e, family).conjugate:
                p.append(e)
                break
        else:
            parts.append([e])
    return _canonical(parts)


def bruteforce_partition(family: Family, n: int) -> list[list[PartialTransformation]]:
    family = Family(family)
    if n > BRUTEFORCE_CAPS[family]:
        raise CensusError(f"n={n} exceeds the bruteforce cap {BRUTEFORCE_CAPS[family]} for {family.name}")
    elems = list(enumerate_family(family, n))
    if len(elems) > MAX_ORDER:
        return oracle_partition(family, elems)
    s = table_of_elements(elems)
    return _canonical([[elems[i] for i in cls] for cls in classes(s, RelationKind.C)])


@dataclass
class ClassInfo:
    representative: PartialTransformation
    size: int
    invariant: ConjInvariant
    cycle_type: tuple = ()

    def to_dict(self) -> dict:
        out = {
            "representative": list(self.representative.image),
            "size": self.size,
            "cs": list(self.invariant.cs),
            "s": self.invariant.s,
        }
        if self.cycle_type:
            out["cycle_type"] = [list(p) for p in self.cycle_type]
        return out


@dataclass
class CensusReport:
    family: Family
    n: int
    total_elements: int
    class_count_invariant: Optional[int] = None
    class_count_bruteforce: Optional[int] = None
    classes: list[ClassInfo] = field(default_factory=list)
    partitions_agree: Optional[bool] = None

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "total_elements": self.total_elements,
            "class_count_invariant": self.class_count_invariant,
            "class_count_bruteforce": self.class_count_bruteforce,
            "partitions_agree": self.partitions_agree,
            "classes": [c.to_dict() for c in self.classes],
        }


def _infos(family: Family, parts) -> list[ClassInfo]:
    out = []
    for p in parts:
        ct = cycle_type(p[0]) if family is Family.SYMX else ()
        out.append(ClassInfo(p[0], len(p), invariant(p[0]), ct))
    return out


def census(family: Family, n: int, mode: str = "both") -> CensusReport:
    """
    Conjugacy classes of a family by ``mode`` in {"invariant", "bruteforce", "both"}.

    In "both" mode the two partitions must coincide for P, T and Sym, and a
    ``CensusError`` is raised otherwise; I(n) only gets the brute-force one.
    """
    family = Family(family)
    if mode not in ("invariant", "bruteforce", "both"):
        raise CensusError(f"unknown mode {mode!r}")
    if mode == "invariant" and family is Family.IX:
        raise CensusError("I(n) has no invariant characterization; use bruteforce mode")
    report = CensusReport(family, n, family_size(family, n))
    inv = brute = None
    if mode in ("invariant", "both") and family is not Family.IX:
        inv = invariant_partition(family, n)
        report.class_count_invariant = len(inv)
    if mode in ("bruteforce", "both"):
        brute = bruteforce_partition(family, n)
        report.class_count_bruteforce = len(brute)
    if inv is not None and brute is not None:
        report.partitions_agree = inv == brute
        if not report.partitions_agree:
            raise CensusError(f"invariant and bruteforce partitions differ for {family.name}({n})")
    report.classes = _infos(family, brute if brute is not None else inv)
    return report
