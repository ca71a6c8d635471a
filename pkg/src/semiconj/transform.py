"""
Partial transformations on a finite ground set {0, ..., n-1}.

A partial transformation is stored as a tuple ``image`` of length ``n`` where
``image[i]`` is the image of ``i`` or ``None`` when ``i`` is outside the
domain.  Maps are written on the right and composed left to right, so
``compose(a, b)`` sends ``x`` to ``(x a) b``.

>>> a = make_basic(BasicKind.CHAIN, [0, 1], 3)
>>> b = make_basic(BasicKind.CHAIN, [1, 2], 3)
>>> compose(a, b).image
(2, None, None)
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "UNDEFINED",
    "BasicKind",
    "PartialTransformation",
    "SizeMismatchError",
    "compose",
    "contains",
    "join",
    "make_basic",
    "identity",
    "zero",
    "restrict",
    "is_full",
    "is_injective",
    "is_zero",
]

# Stands for the diamond value: xa is UNDEFINED iff x is outside dom(a).
UNDEFINED = None


class SizeMismatchError(ValueError):
    """Raised when two transformations live on ground sets of different size."""


class BasicKind(enum.Enum):
    CYCLE = "cycle"
    CHAIN = "chain"


@dataclass(frozen=True)
class PartialTransformation:
    n: int
    image: tuple[Optional[int], ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        image = tuple(self.image)
        if len(image) != self.n:
            raise ValueError(f"image has length {len(image)}, expected n={self.n}")
        for i, y in enumerate(image):
            if y is None:
                continue
            if isinstance(y, bool) or not isinstance(y, int) or not 0 <= y < self.n:
                raise ValueError(f"image[{i}] = {y!r} is not a point of [0, {self.n})")
        object.__setattr__(self, "image", image)

    def __call__(self, x: Optional[int]) -> Optional[int]:
        """Apply to a point; the undefined value maps to itself."""
        if x is None:
            return None
        return self.image[x]

    def __mul__(self, other: PartialTransformation) -> PartialTransformation:
        return compose(self, other)

    def __repr__(self):
        return f"PartialTransformation(n={self.n}, image={list(self.image)})"

    @property
    def dom(self) -> frozenset[int]:
        return frozenset(i for i, y in enumerate(self.image) if y is not None)

    @property
    def im(self) -> frozenset[int]:
        return frozenset(y for y in self.image if y is not None)

    @property
    def span(self) -> frozenset[int]:
        return self.dom | self.im

    def arcs(self) -> list[tuple[int, int]]:
        return [(i, y) for i, y in enumerate(self.image) if y is not None]

    def preimages(self) -> list[list[int]]:
        """``preimages()[x]`` lists every ``y`` with ``y -> x``, ascending."""
        pre: list[list[int]] = [[] for _ in range(self.n)]
        for i, y in enumerate(self.image):
            if y is not None:
                pre[y].append(i)
        return pre

    def power(self, k: int) -> PartialTransformation:
        if k < 0:
            raise ValueError("negative power")
        result = identity(self.n)
        for _ in range(k):
            result = compose(result, self)
        return result

    def key(self) -> tuple[int, ...]:
        """Sort key giving lexicographic order on images, undefined first."""
        return tuple(-1 if y is None else y for y in self.image)

    def to_dict(self) -> dict:
        return {"n": self.n, "image": list(self.image)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> PartialTransformation:
        if not isinstance(data, dict):
            raise ValueError("transformation must be a JSON object with fields 'n' and 'image'")
        for field in ("n", "image"):
            if field not in data:
                raise ValueError(f"missing field {field!r}")
        if not isinstance(data["image"], list):
            raise ValueError("field 'image' must be a list")
        return cls(data["n"], tuple(data["image"]))

    @classmethod
    def from_json(cls, text: str) -> PartialTransformation:
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_mapping(cls, mapping: dict[int, int], n: int) -> PartialTransformation:
        image: list[Optional[int]] = [None] * n
        for x, y in mapping.items():
            if not 0 <= x < n:
                raise ValueError(f"point {x} is not in [0, {n})")
            image[x] = y
        return cls(n, tuple(image))


def _check_sizes(a: PartialTransformation, b: PartialTransformation):
    if a.n != b.n:
        raise SizeMismatchError(f"ground sets differ: n={a.n} vs n={b.n}")


def identity(n: int, on: Optional[Iterable[int]] = None) -> PartialTransformation:
    """The identity on ``on`` (all of X by default)."""
    if on is None:
        return PartialTransformation(n, tuple(range(n)))
    image: list[Optional[int]] = [None] * n
    for x in on:
        image[x] = x
    return PartialTransformation(n, tuple(image))


def zero(n: int) -> PartialTransformation:
    return PartialTransformation(n, (None,) * n)


def restrict(a: PartialTransformation, points: Iterable[int]) -> PartialTransformation:
    """Restriction of ``a`` to ``points`` (intersected with its domain)."""
    keep = set(points)
    return PartialTransformation(a.n, tuple(y if i in keep else None for i, y in enumerate(a.image)))


def compose(a: PartialTransformation, b: PartialTransformation) -> PartialTransformation:
    _check_sizes(a, b)
    bi = b.image
    return PartialTransformation(a.n, tuple(None if y is None else bi[y] for y in a.image))


def contains(b: PartialTransformation, a: PartialTransformation) -> bool:
    """True iff ``b`` is contained in ``a``: ``b`` agrees with ``a`` wherever ``b`` is defined."""
    _check_sizes(b, a)
    return all(y is None or y == a.image[i] for i, y in enumerate(b.image))


def join(parts: Iterable[PartialTransformation], n: Optional[int] = None) -> PartialTransformation:
    """
    Join of pairwise disjoint partial transformations.

    ``n`` is only needed for the empty join.  Overlapping domains raise
    ``ValueError`` naming the first clashing point.
    """
    parts = list(parts)
    if not parts:
        if n is None:
            raise ValueError("n is required to join an empty collection")
        return zero(n)
    size = parts[0].n if n is None else n
    image: list[Optional[int]] = [None] * size
    for p in parts:
        if p.n != size:
            raise SizeMismatchError(f"ground sets differ: n={size} vs n={p.n}")
        for i, y in enumerate(p.image):
            if y is None:
                continue
            if image[i] is not None:
                raise ValueError(f"domains overlap at point {i}")
            image[i] = y
    return PartialTransformation(size, tuple(image))


def make_basic(kind: BasicKind, points: Sequence[int], n: int) -> PartialTransformation:
    """
    Build a cycle ``(x0 ... x_{k-1})`` or a chain ``[x0 ... xk]`` on ``n`` points.

    >>> make_basic(BasicKind.CYCLE, [0, 1, 2], 3).image
    (1, 2, 0)
    """
    points = list(points)
    if len(set(points)) != len(points):
        raise ValueError(f"points must be distinct: {points}")
    for x in points:
        if not 0 <= x < n:
            raise ValueError(f"point {x} is not in [0, {n})")
    kind = BasicKind(kind)
    image: list[Optional[int]] = [None] * n
    if kind is BasicKind.CYCLE:
        if len(points) < 1:
            raise ValueError("a cycle needs at least one point")
        for i, x in enumerate(points):
            image[x] = points[(i + 1) % len(points)]
    else:
        if len(points) < 2:
            raise ValueError("a chain needs at least two points")
        for x, y in zip(points, points[1:]):
            image[x] = y
    return PartialTransformation(n, tuple(image))


def is_full(a: PartialTransformation) -> bool:
    return all(y is not None for y in a.image)


def is_injective(a: PartialTransformation) -> bool:
    values = [y for y in a.image if y is not None]
    return len(values) == len(set(values))


def is_zero(a: PartialTransformation) -> bool:
    return all(y is None for y in a.image)
