"""
Finite semigroups given by Cayley tables, and the conjugacy-type relations on them.

Relations are returned as ``m x m`` boolean numpy arrays ``R`` with
``R[a, b]`` true iff ``a`` is related to ``b``:

* ``L``     -- left conjugacy, ``ag = gb`` for some ``g`` in S^1
* ``O``     -- ``ag = gb`` and ``bh = ha`` for some ``g, h`` in S^1
* ``P``     -- primary conjugacy, ``a = uv`` and ``b = vu`` for ``u, v`` in S^1
* ``PSTAR`` -- transitive closure of ``P``
* ``C``     -- as ``O`` with ``g`` restricted to P^1(a) and ``h`` to P^1(b)

P(a) is the set of ``g`` such that ``(ma)g`` is nonzero for every nonzero
``ma`` in S^1 a; it is ``{0}`` for ``a = 0`` and all of S when S has no zero.
"""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .transform import PartialTransformation

__all__ = [
    "FiniteSemigroup",
    "RelationKind",
    "SemigroupError",
    "AxiomReport",
    "from_generators",
    "p_set",
    "relation",
    "classes",
    "check_axioms",
    "group_conjugacy",
    "cyclic_group",
    "load_table",
]

MAX_ORDER = 1000


class SemigroupError(ValueError):
    pass


class RelationKind(enum.Enum):
    L = "l"
    O = "o"
    P = "p"
    PSTAR = "pstar"
    C = "c"


_EQUIVALENCES = {RelationKind.O, RelationKind.PSTAR, RelationKind.C}


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    """
    A semigroup on ``{0, ..., m-1}`` given by its multiplication table.

    The table is validated for closure and associativity on construction.
    A zero is detected automatically; passing ``zero`` checks the claim
    instead.  ``elements`` optionally records what each index stands for.
    """

    table: np.ndarray
    zero: Optional[int] = None
    elements: Optional[tuple] = field(default=None, repr=False)

    def __post_init__(self):
        t = np.asarray(self.table)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise SemigroupError(f"table must be a non-empty square array, got shape {t.shape}")
        m = t.shape[0]
        if m > MAX_ORDER:
            raise SemigroupError(f"order {m} exceeds the limit of {MAX_ORDER}")
        if not np.issubdtype(t.dtype, np.integer):
            raise SemigroupError("table entries must be integers")
        if t.min() < 0 or t.max() >= m:
            raise SemigroupError(f"table entries must lie in [0, {m})")
        t = t.astype(np.int64)
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        # (ab)c == a(bc): row t[a,b] at c  vs  t[a, t[b,c]]
        for a in range(m):
            if not np.array_equal(t[t[a]], t[a][t]):
                raise SemigroupError(f"table is not associative (fails with left factor {a})")
        zeros = [z for z in range(m) if (t[z] == z).all() and (t[:, z] == z).all()]
        if self.zero is None:
            object.__setattr__(self, "zero", zeros[0] if zeros else None)
        elif self.zero not in zeros:
            raise SemigroupError(f"declared zero {self.zero} is not absorbing")
        if self.elements is not None and len(self.elements) != m:
            raise SemigroupError("elements list does not match the table order")

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @property
    def identity(self) -> Optional[int]:
        t = self.table
        ids = np.arange(self.order)
        for e in range(self.order):
            if np.array_equal(t[e], ids) and np.array_equal(t[:, e], ids):
                return e
        return None

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def is_cancellative(self) -> bool:
        # left: ab = ac => b = c, i.e. rows have distinct entries; right: columns
        t = self.table
        m = self.order
        rows = all(len(np.unique(t[a])) == m for a in range(m))
        cols = all(len(np.unique(t[:, a])) == m for a in range(m))
        return rows and cols

    def to_text(self) -> str:
        lines = []
        if self.zero is not None:
            lines.append(f"zero={self.zero}")
        lines.append(str(self.order))
        lines += [" ".join(str(int(v)) for v in row) for row in self.table]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        out = {"order": self.order, "table": self.table.tolist()}
        if self.zero is not None:
            out["zero"] = self.zero
        return out


def load_table(text: str) -> FiniteSemigroup:
    """
    Parse a Cayley table: JSON ``{"order", "table", "zero"?}`` or plain text
    (optional ``zero=z`` line, a line with ``m``, then ``m`` rows of ``m`` indices).
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        if "table" not in data:
            raise SemigroupError("missing field 'table'")
        table = np.array(data["table"])
        if "order" in data and table.shape[:1] != (data["order"],):
            raise SemigroupError(f"field 'order' = {data['order']} does not match the table")
        return FiniteSemigroup(table, data.get("zero"))
    lines = [ln.strip() for ln in stripped.splitlines() if ln.strip() and not ln.startswith("#")]
    zero = None
    if lines and lines[0].startswith("zero="):
        try:
            zero = int(lines[0].split("=", 1)[1])
        except ValueError:
            raise SemigroupError(f"bad zero header {lines[0]!r}") from None
        lines = lines[1:]
    if not lines:
        raise SemigroupError("empty table")
    try:
        m = int(lines[0])
        rows = [[int(v) for v in ln.split()] for ln in lines[1:]]
    except ValueError as e:
        raise SemigroupError(f"non-integer entry in table: {e}") from None
    if len(rows) != m or any(len(r) != m for r in rows):
        raise SemigroupError(f"expected {m} rows of {m} entries")
    return FiniteSemigroup(np.array(rows, dtype=np.int64), zero)


def _encode(images: np.ndarray, n: int) -> np.ndarray:
    # undefined is stored as -1 -> digit 0
    weights = (n + 1) ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (images + 1) @ weights


def from_generators(gens: Sequence[PartialTransformation], cap: int = MAX_ORDER) -> FiniteSemigroup:
    """
    Semigroup generated by partial transformations under composition.

    Elements are indexed in breadth-first discovery order (generators first)
    and recorded in ``elements``.
    """
    gens = list(dict.fromkeys(gens))
    if not gens:
        raise SemigroupError("need at least one generator")
    if len(gens) > cap:
        raise SemigroupError(f"closure exceeds the cap of {cap} elements")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise SemigroupError("generators live on different ground sets")
    elems = list(gens)
    index = {g: i for i, g in enumerate(elems)}
    queue = deque(elems)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in index:
                if len(elems) >= cap:
                    raise SemigroupError(f"closure exceeds the cap of {cap} elements")
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)
    return _table_of(elems, n)


def _table_of(elems: list[PartialTransformation], n: int) -> FiniteSemigroup:
    m = len(elems)
    imgs = np.array([e.key() for e in elems], dtype=np.int64)  # -1 for undefined
    ext = np.concatenate([imgs, np.full((m, 1), -1, dtype=np.int64)], axis=1)
    keys = _encode(imgs, n)
    order = np.argsort(keys)
    sorted_keys = keys[order]
    table = np.empty((m, m), dtype=np.int64)
    for a in range(m):
        # row a: (x a) b for all b; index -1 picks the appended undefined column
        prod = ext[:, imgs[a]]  # shape (m, n): prod[b, x] = (x a) b
        pk = _encode(prod, n)
        pos = np.searchsorted(sorted_keys, pk)
        if (pos >= m).any() or not np.array_equal(sorted_keys[np.minimum(pos, m - 1)], pk):
            raise SemigroupError("element list is not closed under composition")
        table[a] = order[pos]
    return FiniteSemigroup(table, elements=tuple(elems))


def table_of_elements(elems: Iterable[PartialTransformation]) -> FiniteSemigroup:
    """Cayley table of a list of transformations that is closed under composition."""
    elems = list(elems)
    return _table_of(elems, elems[0].n)


def _p_matrix(s: FiniteSemigroup) -> np.ndarray:
    """``P[a, g]`` is true iff ``g`` lies in P(a)."""
    m, t, z = s.order, s.table, s.zero
    if z is None:
        return np.ones((m, m), dtype=bool)
    # members[a, x]: x in S^1 a minus zero
    members = np.zeros((m, m), dtype=bool)
    for a in range(m):
        members[a, t[:, a]] = True
        members[a, a] = True
    members[:, z] = False
    kills = (t == z).astype(np.int64)  # kills[x, g]: xg = 0
    pm = (members.astype(np.int64) @ kills) == 0
    pm[z, :] = False
    pm[z, z] = True
    return pm


def p_set(s: FiniteSemigroup, a: int) -> frozenset[int]:
    if not 0 <= a < s.order:
        raise SemigroupError(f"element {a} is not in [0, {s.order})")
    return frozenset(int(g) for g in np.flatnonzero(_p_matrix(s)[a]))


def _left_relation(s: FiniteSemigroup, allowed: Optional[np.ndarray] = None) -> np.ndarray:
    """``R[a, b]`` iff ``ag = gb`` for some ``g`` in S^1 (with ``allowed[a, g]`` if given)."""
    m, t = s.order, s.table
    rel = np.eye(m, dtype=bool)
    for g in range(m):
        eq = t[:, g][:, None] == t[g, :][None, :]
        if allowed is not None:
            eq &= allowed[:, g][:, None]
        rel |= eq
    return rel


def _closure(rel: np.ndarray) -> np.ndarray:
    # reflexive-transitive closure by BFS from each element
    m = rel.shape[0]
    out = np.zeros_like(rel, dtype=bool)
    adj = [np.flatnonzero(rel[a]) for a in range(m)]
    for a in range(m):
        seen = {a}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(int(y))
                    queue.append(int(y))
        out[a, list(seen)] = True
    return out


def relation(s: FiniteSemigroup, kind: RelationKind) -> np.ndarray:
    kind = RelationKind(kind)
    m, t = s.order, s.table
    if kind is RelationKind.L:
        return _left_relation(s)
    if kind is RelationKind.O:
        rel = _left_relation(s)
        return rel & rel.T
    if kind is RelationKind.C:
        rel = _left_relation(s, _p_matrix(s))
        return rel & rel.T
    prim = np.eye(m, dtype=bool)
    prim[t, t.T] = True  # a = uv, b = vu
    if kind is RelationKind.P:
        return prim
    return _closure(prim)


def _partition(rel: np.ndarray) -> list[list[int]]:
    m = rel.shape[0]
    done = np.zeros(m, dtype=bool)
    parts = []
    for a in range(m):
        if done[a]:
            continue
        cls = [int(b) for b in np.flatnonzero(rel[a])]
        done[cls] = True
        parts.append(cls)
    return parts


def classes(s: FiniteSemigroup, kind: RelationKind) -> list[list[int]]:
    """Equivalence classes of ``kind``, each sorted and ordered by least element."""
    kind = RelationKind(kind)
    if kind not in _EQUIVALENCES:
        raise SemigroupError(f"relation {kind.name} is not an equivalence; cannot partition")
    return _partition(relation(s, kind))


def _is_equivalence(rel: np.ndarray) -> bool:
    r = rel.astype(np.int64)
    reflexive = bool(rel.diagonal().all())
    symmetric = bool(np.array_equal(rel, rel.T))
    transitive = bool(((r @ r > 0) <= rel).all())
    return reflexive and symmetric and transitive


def _subset(a: np.ndarray, b: np.ndarray) -> bool:
    return bool((a <= b).all())


@dataclass
class AxiomReport:
    """Outcome per check; ``None`` marks a check that does not apply."""

    checks: dict[str, Optional[bool]]
    c_is_identity: bool

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def lines(self) -> list[str]:
        label = {True: "pass", False: "FAIL", None: "skip"}
        return [f"{name}: {label[v]}" for name, v in self.checks.items()]


def check_axioms(s: FiniteSemigroup) -> AxiomReport:
    rc, ro, rl, rp = (relation(s, k) for k in (RelationKind.C, RelationKind.O, RelationKind.L, RelationKind.P))
    m = s.order
    delta = bool(np.array_equal(rc, np.eye(m, dtype=bool)))
    checks: dict[str, Optional[bool]] = {
        "c_equivalence": _is_equivalence(rc),
        "c_subset_o": _subset(rc, ro),
        "o_subset_l": _subset(ro, rl),
        "p_subset_o": _subset(rp, ro),
        "zero_free_c_equals_o": None,
        "zero_class_singleton": None,
        "c_identity_iff_commutative_cancellative": None,
    }
    if s.zero is None:
        checks["zero_free_c_equals_o"] = bool(np.array_equal(rc, ro))
        checks["c_identity_iff_commutative_cancellative"] = delta == (
            s.is_commutative() and s.is_cancellative()
        )
    else:
        checks["zero_class_singleton"] = np.flatnonzero(rc[s.zero]).tolist() == [s.zero]
    return AxiomReport(checks, delta)


def group_conjugacy(s: FiniteSemigroup) -> np.ndarray:
    """Usual conjugacy ``b = g^-1 a g`` of a group table; independent of ``relation``."""
    e = s.identity
    if e is None:
        raise SemigroupError("table has no identity")
    t = s.table
    m = s.order
    inv = {}
    for g in range(m):
        hits = np.flatnonzero(t[g] == e)
        if len(hits) != 1 or t[hits[0], g] != e:
            raise SemigroupError(f"element {g} has no two-sided inverse")
        inv[g] = int(hits[0])
    rel = np.zeros((m, m), dtype=bool)
    for a in range(m):
        for g in range(m):
            rel[a, t[t[inv[g], a], g]] = True
    return rel


def cyclic_group(k: int) -> FiniteSemigroup:
    i = np.arange(k)
    return FiniteSemigroup((i[:, None] + i[None, :]) % k)
