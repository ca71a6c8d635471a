"""
Functional digraphs of partial transformations.

``decompose`` splits a transformation into its connected components, each of
which is either cycle-type (a unique cycle with in-trees hanging off it) or
cho-type (an in-tree rooted at its unique terminal vertex).  The pair
(cycle set, maximal root rank) returned by ``invariant`` decides conjugacy
in the finite partial transformation monoid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from scipy.cluster.hierarchy import DisjointSet

from .transform import PartialTransformation, restrict

__all__ = [
    "CycleType",
    "ChoType",
    "Component",
    "ConjInvariant",
    "CyclicComponentError",
    "decompose",
    "classify",
    "rank",
    "cycle_lengths",
    "sac",
    "invariant",
    "to_dot",
]


class CyclicComponentError(ValueError):
    """Rank was requested for a component that contains a cycle."""


@dataclass(frozen=True)
class CycleType:
    length: int
    # cycle points starting at the least one, in arc order
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class ChoType:
    root: int
    root_rank: int


ComponentKind = Union[CycleType, ChoType]


@dataclass(frozen=True)
class Component:
    vertices: frozenset[int]
    restriction: PartialTransformation
    kind: ComponentKind

    @property
    def is_cycle_type(self) -> bool:
        return isinstance(self.kind, CycleType)


@dataclass(frozen=True, order=True)
class ConjInvariant:
    cs: tuple[int, ...]
    s: int

    def to_dict(self) -> dict:
        return {"cs": list(self.cs), "s": self.s}


def _find_cycle(g: PartialTransformation, start: int) -> Optional[tuple[int, ...]]:
    """Walk forward from ``start``; return the cycle reached or None at a terminal vertex."""
    seen: dict[int, int] = {}
    path: list[int] = []
    x: Optional[int] = start
    while x is not None and x not in seen:
        seen[x] = len(path)
        path.append(x)
        x = g.image[x]
    if x is None:
        return None
    cyc = path[seen[x]:]
    i = cyc.index(min(cyc))
    return tuple(cyc[i:] + cyc[:i])


def _component_vertices(a: PartialTransformation) -> list[frozenset[int]]:
    ds = DisjointSet(sorted(a.span))
    for x, y in a.arcs():
        ds.merge(x, y)
    return sorted((frozenset(s) for s in ds.subsets()), key=min)


def decompose(a: PartialTransformation) -> list[Component]:
    """Connected components of ``a`` ordered by least vertex; isolated points are dropped."""
    comps = []
    for verts in _component_vertices(a):
        g = restrict(a, verts)
        comps.append(Component(verts, g, _kind(g, verts)))
    return comps


def _kind(g: PartialTransformation, verts: frozenset[int]) -> ComponentKind:
    cyc = _find_cycle(g, min(verts))
    if cyc is not None:
        return CycleType(len(cyc), cyc)
    terminals = [x for x in verts if g.image[x] is None]
    assert len(terminals) == 1, f"corrupted component with terminals {terminals}"
    root = terminals[0]
    return ChoType(root, _ranks(g, verts)[root])


def classify(c: Union[Component, PartialTransformation]) -> ComponentKind:
    """
    Kind of a connected component.

    Accepts a ``Component`` or a connected ``PartialTransformation``.
    """
    if isinstance(c, Component):
        return c.kind
    comps = decompose(c)
    if len(comps) != 1:
        raise ValueError(f"expected a connected transformation, found {len(comps)} components")
    return comps[0].kind


def _ranks(g: PartialTransformation, verts: Iterable[int]) -> dict[int, int]:
    # Kahn's algorithm from the sources; fails to reach cycle points
    verts = list(verts)
    indeg = {x: 0 for x in verts}
    for x in verts:
        y = g.image[x]
        if y is not None:
            indeg[y] += 1
    rho = {x: 0 for x in verts}
    stack = [x for x in verts if indeg[x] == 0]
    done = 0
    while stack:
        x = stack.pop()
        done += 1
        y = g.image[x]
        if y is None:
            continue
        rho[y] = max(rho[y], rho[x] + 1)
        indeg[y] -= 1
        if indeg[y] == 0:
            stack.append(y)
    if done != len(verts):
        raise CyclicComponentError("rank is undefined on a component with a cycle")
    return rho


def rank(c: Union[Component, PartialTransformation]) -> dict[int, int]:
    """
    Rank of every vertex of a cycle-free component (or any cycle-free transformation).

    The rank of ``x`` is 0 on sources and otherwise one more than the largest
    rank among its preimages, i.e. the length of the longest path ending at ``x``.
    """
    if isinstance(c, Component):
        return _ranks(c.restriction, c.vertices)
    return _ranks(c, c.span)


def cycle_lengths(a: PartialTransformation) -> frozenset[int]:
    return frozenset(c.kind.length for c in decompose(a) if isinstance(c.kind, CycleType))


def sac(m: Iterable[int]) -> tuple[int, ...]:
    """
    Standard antichain of a set of positive integers under divisibility.

    >>> sac({4, 6, 8, 10, 18})
    (4, 6, 10)
    """
    kept: list[int] = []
    for x in sorted(set(m)):
        if x < 1:
            raise ValueError(f"elements must be positive, got {x}")
        if all(x % d for d in kept):
            kept.append(x)
    return tuple(kept)


def invariant(a: PartialTransformation) -> ConjInvariant:
    comps = decompose(a)
    lengths = {c.kind.length for c in comps if isinstance(c.kind, CycleType)}
    roots = [c.kind.root_rank for c in comps if isinstance(c.kind, ChoType)]
    return ConjInvariant(sac(lengths), max(roots, default=0))


def to_dot(a: PartialTransformation, show_isolated: bool = False, name: str = "G") -> str:
    """Render the digraph of ``a`` in Graphviz DOT."""
    nodes = range(a.n) if show_isolated else sorted(a.span)
    lines = [f"digraph {name} {{"]
    lines += [f"  {x};" for x in nodes]
    lines += [f"  {x} -> {y};" for x, y in a.arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"
