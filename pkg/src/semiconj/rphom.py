"""
Restrictive partial homomorphisms (rp-homomorphisms) between functional digraphs.

A partial map ``phi`` from the digraph of ``a`` to the digraph of ``b`` is an
rp-homomorphism when every arc ``x -> y`` of ``a`` has both ends in the
domain of ``phi`` with ``x phi -> y phi`` an arc of ``b``, and every terminal
vertex of ``a`` on which ``phi`` is defined lands on a terminal vertex of
``b``.  Such maps are exactly the intertwiners ``a phi = phi b`` whose domain
covers the span of ``a``, which makes them conjugacy witnesses.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .digraph import ChoType, Component, CycleType, decompose, rank
from .transform import PartialTransformation, is_zero

__all__ = [
    "PartialMap",
    "WitnessConstraint",
    "verify_rp_hom",
    "verify_intertwining",
    "search_rp_hom",
    "build_cycle_hom",
    "build_cho_hom",
    "assemble_hom",
]


class WitnessConstraint(enum.Enum):
    ANY_PARTIAL = "any"
    TOTAL = "total"
    INJECTIVE_PARTIAL = "injective"
    INJECTIVE_TOTAL = "injective_total"

    @property
    def total(self) -> bool:
        return self in (WitnessConstraint.TOTAL, WitnessConstraint.INJECTIVE_TOTAL)

    @property
    def injective(self) -> bool:
        return self in (WitnessConstraint.INJECTIVE_PARTIAL, WitnessConstraint.INJECTIVE_TOTAL)


@dataclass(frozen=True, eq=True)
class PartialMap:
    n_src: int
    n_dst: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        entries = {int(k): int(v) for k, v in dict(self.entries).items()}
        for x, y in entries.items():
            if not 0 <= x < self.n_src:
                raise ValueError(f"source point {x} is not in [0, {self.n_src})")
            if not 0 <= y < self.n_dst:
                raise ValueError(f"destination point {y} is not in [0, {self.n_dst})")
        object.__setattr__(self, "entries", dict(sorted(entries.items())))

    def __call__(self, x: Optional[int]) -> Optional[int]:
        if x is None:
            return None
        return self.entries.get(x)

    @property
    def dom(self) -> frozenset[int]:
        return frozenset(self.entries)

    @property
    def is_total(self) -> bool:
        return len(self.entries) == self.n_src

    @property
    def is_injective(self) -> bool:
        return len(set(self.entries.values())) == len(self.entries)

    def satisfies(self, constraint: WitnessConstraint) -> bool:
        if constraint.total and not self.is_total:
            return False
        if constraint.injective and not self.is_injective:
            return False
        return True

    def then(self, other: PartialMap) -> PartialMap:
        """Composite ``x -> (x self) other``."""
        out = {}
        for x, y in self.entries.items():
            z = other(y)
            if z is not None:
                out[x] = z
        return PartialMap(self.n_src, other.n_dst, out)

    def as_transformation(self) -> PartialTransformation:
        if self.n_src != self.n_dst:
            raise ValueError("only maps of a set into itself are transformations")
        return PartialTransformation.from_mapping(self.entries, self.n_src)

    @classmethod
    def from_transformation(cls, t: PartialTransformation) -> PartialMap:
        return cls(t.n, t.n, {i: y for i, y in enumerate(t.image) if y is not None})

    @classmethod
    def identity(cls, n: int, on: Optional[Iterable[int]] = None) -> PartialMap:
        points = range(n) if on is None else on
        return cls(n, n, {x: x for x in points})

    def to_dict(self) -> dict:
        return {"map": {str(k): v for k, v in self.entries.items()}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, n_src: int, n_dst: Optional[int] = None) -> PartialMap:
        if "map" not in data or not isinstance(data["map"], dict):
            raise ValueError("witness must be a JSON object with an object field 'map'")
        return cls(n_src, n_src if n_dst is None else n_dst, {int(k): v for k, v in data["map"].items()})


def _check(phi: PartialMap, a: PartialTransformation, b: PartialTransformation):
    if phi.n_src != a.n or phi.n_dst != b.n:
        raise ValueError(
            f"map sizes ({phi.n_src} -> {phi.n_dst}) do not match digraph sizes ({a.n} -> {b.n})"
        )


def verify_rp_hom(phi: PartialMap, a: PartialTransformation, b: PartialTransformation) -> bool:
    _check(phi, a, b)
    for x, y in enumerate(a.image):
        if y is None:
            # terminal vertex: if mapped, its image must be terminal
            if x in phi.entries and b.image[phi.entries[x]] is not None:
                return False
            continue
        px, py = phi(x), phi(y)
        if px is None or py is None or b.image[px] != py:
            return False
    return True


def verify_intertwining(phi: PartialMap, a: PartialTransformation, b: PartialTransformation) -> bool:
    """True iff ``a phi == phi b`` and ``phi`` is defined on the whole span of ``a``."""
    _check(phi, a, b)
    if not a.span <= phi.dom:
        return False
    return all(phi(a(x)) == b(phi(x)) for x in range(a.n))


# --- search -----------------------------------------------------------------


def _profile(t: PartialTransformation):
    """
    Per-vertex data preserved by rp-homomorphisms.

    Returns ``(heights, walks)``: ``heights[x]`` is the longest path ending at
    ``x`` (``inf`` on cycles); ``walks[x]`` is ``("cho", depth)`` when walking
    forward from ``x`` hits a terminal vertex after ``depth`` steps, else
    ``("cyc", length, steps_to_cycle)``.
    """
    n = t.n
    indeg = [0] * n
    for y in t.image:
        if y is not None:
            indeg[y] += 1
    height = [0.0] * n
    stack = [x for x in range(n) if indeg[x] == 0]
    while stack:
        x = stack.pop()
        y = t.image[x]
        if y is None:
            continue
        height[y] = max(height[y], height[x] + 1)
        indeg[y] -= 1
        if indeg[y] == 0:
            stack.append(y)
    for x in range(n):
        if indeg[x] > 0:
            height[x] = math.inf

    walks: list = [None] * n
    for x in range(n):
        if walks[x] is not None:
            continue
        path = []
        pos: dict[int, int] = {}
        y: Optional[int] = x
        while y is not None and walks[y] is None and y not in pos:
            pos[y] = len(path)
            path.append(y)
            y = t.image[y]
        if y is None:
            for i, u in enumerate(reversed(path)):
                walks[u] = ("cho", i)
            continue
        if y in pos:
            k = len(path) - pos[y]
            for u in path[pos[y]:]:
                walks[u] = ("cyc", k, 0)
            path = path[: pos[y]]
            base = ("cyc", k, 0)
        else:
            base = walks[y]
        for i, u in enumerate(reversed(path)):
            if base[0] == "cho":
                walks[u] = ("cho", base[1] + i + 1)
            else:
                walks[u] = ("cyc", base[1], base[2] + i + 1)
    return height, walks


def _compatible(src_walk, src_height, dst_walk, dst_height) -> bool:
    if src_height > dst_height:
        return False
    if src_walk[0] == "cho":
        return dst_walk[0] == "cho" and dst_walk[1] == src_walk[1]
    return dst_walk[0] == "cyc" and src_walk[1] % dst_walk[1] == 0 and dst_walk[2] <= src_walk[2]


def search_rp_hom(
    a: PartialTransformation,
    b: PartialTransformation,
    constraint: WitnessConstraint = WitnessConstraint.ANY_PARTIAL,
) -> Optional[PartialMap]:
    """
    Find an rp-homomorphism from the digraph of ``a`` to that of ``b``.

    Partial constraints yield a map defined exactly on the span of ``a``;
    total constraints define it on every point.  Vertices are assigned in
    ascending order, candidates tried in ascending order, and each choice
    is propagated along the forward orbit, so the result is deterministic.
    Returns None when no map satisfies the constraint.
    """
    constraint = WitnessConstraint(constraint)
    if is_zero(a) and not constraint.total:
        # every map is vacuously an rp-homomorphism out of the zero digraph
        if is_zero(b) and a.n == b.n:
            return PartialMap.identity(a.n)
        return PartialMap(a.n, b.n, {})

    verts = list(range(a.n)) if constraint.total else sorted(a.span)
    if constraint.injective and len(verts) > b.n:
        return None
    h_a, w_a = _profile(a)
    h_b, w_b = _profile(b)
    allowed = {
        x: [y for y in range(b.n) if _compatible(w_a[x], h_a[x], w_b[y], h_b[y])] for x in verts
    }
    if any(not c for c in allowed.values()):
        return None
    allowed_sets = {x: set(c) for x, c in allowed.items()}

    phi: dict[int, int] = {}
    used: set[int] = set()
    injective = constraint.injective

    def assign(x: int, y: int, trail: list[int]) -> bool:
        stack = [(x, y)]
        while stack:
            u, v = stack.pop()
            if u in phi:
                if phi[u] != v:
                    return False
                continue
            if v not in allowed_sets[u] or (injective and v in used):
                return False
            phi[u] = v
            used.add(v)
            trail.append(u)
            w = a.image[u]
            if w is not None:
                bv = b.image[v]
                if bv is None:
                    return False
                stack.append((w, bv))
        return True

    def undo(trail: list[int]):
        for u in trail:
            used.discard(phi.pop(u))

    def backtrack(i: int) -> bool:
        while i < len(verts) and verts[i] in phi:
            i += 1
        if i == len(verts):
            return True
        x = verts[i]
        for y in allowed[x]:
            trail: list[int] = []
            if assign(x, y, trail) and backtrack(i + 1):
                return True
            undo(trail)
        return False

    if not backtrack(0):
        return None
    return PartialMap(a.n, b.n, phi)


# --- constructive builders --------------------------------------------------


def _as_component(c: Union[Component, PartialTransformation]) -> Component:
    if isinstance(c, Component):
        return c
    comps = decompose(c)
    if len(comps) != 1:
        raise ValueError(f"expected a connected transformation, found {len(comps)} components")
    return comps[0]


def build_cycle_hom(
    src: Union[Component, PartialTransformation], dst: Union[Component, PartialTransformation]
) -> Optional[PartialMap]:
    """
    rp-homomorphism between cycle-type components, or None if the target
    cycle length does not divide the source cycle length.

    With ``x0`` the least point of the source cycle and ``y0`` that of the
    target cycle, a point ``x`` reaching ``x0`` in ``p`` steps is sent to
    ``y0`` advanced ``-p mod m`` steps.
    """
    g, d = _as_component(src), _as_component(dst)
    if not (isinstance(g.kind, CycleType) and isinstance(d.kind, CycleType)):
        raise ValueError("build_cycle_hom needs two cycle-type components")
    k, m = g.kind.length, d.kind.length
    if k % m:
        return None
    x0 = g.kind.cycle[0]
    ys = d.kind.cycle
    gamma = g.restriction

    # p_x = steps from x to x0, filled by walking backwards from x0
    steps = {x0: 0}
    pre = gamma.preimages()
    frontier = [x0]
    while frontier:
        nxt = []
        for x in frontier:
            for y in pre[x]:
                if y not in steps:
                    steps[y] = steps[x] + 1
                    nxt.append(y)
        frontier = nxt
    return PartialMap(gamma.n, d.restriction.n, {x: ys[(-p) % m] for x, p in steps.items()})


def build_cho_hom(
    src: Union[Component, PartialTransformation], dst: Union[Component, PartialTransformation]
) -> Optional[PartialMap]:
    """
    rp-homomorphism between cho-type components, or None when the source
    root outranks the target root.

    The root goes to the root; every preimage ``z`` of an already placed
    vertex ``x -> y`` goes to the highest-ranked preimage of ``y`` (least
    label on ties), which always has rank at least that of ``z``.
    """
    g, d = _as_component(src), _as_component(dst)
    if not (isinstance(g.kind, ChoType) and isinstance(d.kind, ChoType)):
        raise ValueError("build_cho_hom needs two cho-type components")
    if g.kind.root_rank > d.kind.root_rank:
        return None
    rho_d = rank(d)
    pre_g = g.restriction.preimages()
    pre_d = d.restriction.preimages()
    best = {}
    for y in d.vertices:
        if pre_d[y]:
            best[y] = min(pre_d[y], key=lambda w: (-rho_d[w], w))

    phi = {g.kind.root: d.kind.root}
    stack = [g.kind.root]
    while stack:
        x = stack.pop()
        for z in pre_g[x]:
            phi[z] = best[phi[x]]
            stack.append(z)
    return PartialMap(g.restriction.n, d.restriction.n, phi)


def assemble_hom(
    a: PartialTransformation, b: PartialTransformation, maps: Iterable[PartialMap]
) -> PartialMap:
    """Join per-component maps into one map on the span of ``a``."""
    maps = list(maps)
    out: dict[int, int] = {}
    for c in decompose(a):
        match = [m for m in maps if m.dom == c.vertices]
        if not match:
            raise ValueError(f"no map supplied for the component on {sorted(c.vertices)}")
        out.update(match[0].entries)
    return PartialMap(a.n, b.n, out)
