import itertools

import pytest
from hypothesis import strategies as st

from semiconj.transform import PartialTransformation


@st.composite
def partial_transformations(draw, min_n=1, max_n=6, n=None, full=False, injective=False):
    size = draw(st.integers(min_n, max_n)) if n is None else n
    if injective:
        image = list(draw(st.permutations(range(size))))
        if not full:
            holes = draw(st.lists(st.booleans(), min_size=size, max_size=size))
            image = [None if h else y for y, h in zip(image, holes)]
    else:
        values = st.integers(0, size - 1)
        if not full:
            values = st.one_of(st.none(), values)
        image = draw(st.lists(values, min_size=size, max_size=size))
    return PartialTransformation(size, tuple(image))


def same_size_pairs(max_n=5, **kw):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(partial_transformations(n=n, **kw), partial_transformations(n=n, **kw))
    )


def all_partial_maps(n_src, n_dst, domain):
    """Every map from ``domain`` into range(n_dst), as dicts."""
    domain = sorted(domain)
    for img in itertools.product(range(n_dst), repeat=len(domain)):
        yield dict(zip(domain, img))


def all_maps_covering(n, span):
    """Every partial map of range(n) whose domain contains ``span``."""
    extra = [x for x in range(n) if x not in span]
    for k in range(len(extra) + 1):
        for chosen in itertools.combinations(extra, k):
            yield from all_partial_maps(n, n, set(span) | set(chosen))


@pytest.fixture
def pt():
    return lambda image: PartialTransformation(len(image), tuple(image))
