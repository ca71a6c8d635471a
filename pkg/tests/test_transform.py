import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semiconj.transform import (
    BasicKind,
    PartialTransformation,
    SizeMismatchError,
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

from conftest import partial_transformations, same_size_pairs


def cycle(points, n):
    return make_basic(BasicKind.CYCLE, points, n)


def chain(points, n):
    return make_basic(BasicKind.CHAIN, points, n)


class TestCompose:
    def test_zero_absorbs_on_left(self):
        beta = cycle([0, 1, 2], 3)
        assert compose(zero(3), beta) == zero(3)

    def test_identity_law(self):
        assert compose(identity(3), cycle([0, 1, 2], 3)) == cycle([0, 1, 2], 3)

    def test_chains_compose_pointwise(self):
        # 0 -> 1 -> 2 is the only path through both maps
        assert compose(chain([0, 1], 3), chain([1, 2], 3)).image == (2, None, None)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            compose(identity(2), identity(3))

    @given(st.integers(1, 5).flatmap(lambda n: st.tuples(*[partial_transformations(n=n)] * 3)))
    def test_associative(self, triple):
        a, b, c = triple
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @given(same_size_pairs())
    def test_domain_of_product(self, pair):
        a, b = pair
        r = compose(a, b)
        assert r.dom == {x for x in a.dom if a.image[x] in b.dom}
        for x in range(a.n):
            assert r(x) == b(a(x))


class TestContains:
    def test_zero_is_contained_everywhere(self, pt):
        assert contains(zero(3), pt([1, 2, None]))

    def test_reflexive(self, pt):
        a = pt([1, 2, None])
        assert contains(a, a)

    def test_examples(self, pt):
        alpha = pt([1, 2, None])
        assert contains(pt([1, None, None]), alpha)
        assert not contains(pt([2, None, None]), alpha)

    @given(same_size_pairs())
    def test_matches_restricted_identity_product(self, pair):
        b, a = pair
        eps = identity(b.n, b.dom)
        assert contains(b, a) == (b == compose(eps, a))


class TestJoin:
    def test_empty_join(self):
        assert join([], n=4) == zero(4)

    def test_two_chains(self):
        assert join([chain([0, 1], 4), chain([2, 3], 4)]).image == (1, None, 3, None)

    def test_disjoint_not_completely_disjoint(self):
        j = join([chain([3, 4, 5], 6), chain([0, 1, 2, 5], 6)])
        assert j == PartialTransformation.from_mapping({3: 4, 4: 5, 0: 1, 1: 2, 2: 5}, 6)

    def test_overlap_names_point(self):
        with pytest.raises(ValueError, match="point 1"):
            join([chain([1, 2], 3), chain([1, 0], 3)])

    @given(partial_transformations())
    def test_singleton(self, a):
        assert join([a]) == a

    @given(partial_transformations(), st.randoms())
    def test_order_independent(self, a, rnd):
        parts = [PartialTransformation.from_mapping({x: y}, a.n) for x, y in a.arcs()]
        shuffled = parts[:]
        rnd.shuffle(shuffled)
        assert join(parts, n=a.n) == join(shuffled, n=a.n) == a


class TestMakeBasic:
    def test_fixed_point(self):
        assert cycle([5], 6).image == (None,) * 5 + (5,)

    def test_three_cycle(self):
        assert cycle([0, 1, 2], 3).image == (1, 2, 0)

    def test_chain(self):
        assert chain([0, 1, 2, 5], 6) == PartialTransformation.from_mapping({0: 1, 1: 2, 2: 5}, 6)

    def test_chain_brackets(self):
        c = chain([0, 1, 2, 5], 6)
        assert 0 not in c.im and 5 not in c.dom

    @pytest.mark.parametrize("points", [[0, 0], [0, 7]])
    def test_rejects_bad_points(self, points):
        with pytest.raises(ValueError):
            make_basic(BasicKind.CHAIN, points, 6)

    def test_chain_needs_two_points(self):
        with pytest.raises(ValueError):
            chain([1], 3)

    @given(st.integers(1, 7), st.randoms())
    def test_cycle_order(self, k, rnd):
        n = k + rnd.randint(0, 3)
        pts = rnd.sample(range(n), k)
        theta = cycle(pts, n)
        ident = identity(n, pts)
        assert theta.power(k) == ident
        assert all(theta.power(j) != ident for j in range(1, k))


class TestPredicates:
    def test_identity(self):
        e = identity(3)
        assert is_full(e) and is_injective(e) and not is_zero(e)

    def test_zero(self):
        z = zero(3)
        assert not is_full(z) and is_injective(z) and is_zero(z)

    def test_repeated_value(self, pt):
        a = pt([1, None, 1])
        assert not is_full(a) and not is_injective(a)


class TestJson:
    def test_round_trip(self):
        text = '{"n": 6, "image": [1, 2, 5, 4, 5, null]}'
        a = PartialTransformation.from_json(text)
        assert a.image == (1, 2, 5, 4, 5, None)
        assert json.loads(a.to_json()) == json.loads(text)

    @pytest.mark.parametrize(
        "data, field",
        [({"image": [0]}, "n"), ({"n": 1}, "image"), ({"n": 2, "image": [0]}, "length"), ({"n": 1, "image": [3]}, "image")],
    )
    def test_errors_name_field(self, data, field):
        with pytest.raises(ValueError, match=field):
            PartialTransformation.from_dict(data)


def test_values_are_hashable_and_immutable():
    a = identity(3)
    assert {a: 1}[identity(3)] == 1
    with pytest.raises(AttributeError):
        a.n = 4
