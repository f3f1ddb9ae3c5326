import pytest

from hajoscodes.groups import (
    FactorizationVerdict,
    GroupOrderError,
    full_subset,
    generated_subgroup,
    is_direct_sum,
    make_group,
    quotient,
    subset,
    sumset,
    translate,
)


def test_make_group_basic():
    g = make_group([9])
    assert g.cardinality == 9
    assert make_group([3, 3]).cardinality == 9
    assert make_group([2, 2, 2, 2]).cardinality == 16


@pytest.mark.parametrize("orders", [[], [0], [-3], [2, 0]])
def test_make_group_rejects(orders):
    with pytest.raises(ValueError):
        make_group(orders)


def test_element_arithmetic():
    g = make_group([4, 2])
    assert g.add((3, 1), (2, 1)) == (1, 0)
    z9 = make_group([9])
    assert z9.neg((4,)) == (5,)
    assert g.add((2, 1), g.zero()) == (2, 1)
    assert g.add(g.element((7, 5)), g.zero()) == (3, 1)


def test_encode_decode_roundtrip_is_lexicographic():
    g = make_group([3, 4, 2])
    elems = list(g.elements())
    assert elems == sorted(elems)
    assert [g.decode(g.encode(e)) for e in elems] == elems
    assert [g.encode(e) for e in elems] == list(range(g.cardinality))


def test_subset_canonical():
    g = make_group([5, 5])
    s = subset(g, [(6, 0), (1, 0), (0, 1)])
    assert s.elements == ((0, 1), (1, 0))
    assert (1, 0) in s and (2, 2) not in s


def test_sumset_examples():
    z6 = make_group([6])
    a = subset(z6, [(0,), (3,)])
    b = subset(z6, [(0,), (1,), (2,)])
    assert sumset(a, b).elements == tuple((i,) for i in range(6))
    z55 = make_group([5, 5])
    s = sumset(subset(z55, [(1, 0)]), subset(z55, [(0, 1), (2, 2)]))
    assert s.elements == ((1, 1), (3, 2))
    # translation by identity
    assert sumset(subset(z6, [(0,)]), b).elements == b.elements


def test_sumset_rejects_mismatch_and_empty():
    z6 = make_group([6])
    z4 = make_group([4])
    with pytest.raises(ValueError):
        sumset(subset(z6, [(0,)]), subset(z4, [(0,)]))
    with pytest.raises(ValueError):
        sumset(subset(z6, []), subset(z6, [(0,)]))


def test_is_direct_sum():
    z6 = make_group([6])
    v = is_direct_sum(subset(z6, [(0,), (3,)]), subset(z6, [(0,), (1,), (2,)]))
    assert v and v.is_factorization
    z4 = make_group([4])
    v = is_direct_sum(subset(z4, [(0,), (2,)]), subset(z4, [(0,), (2,)]))
    assert not v and v.collision is not None
    g = make_group([3, 2])
    v = is_direct_sum(subset(g, [(0, 0)]), full_subset(g))
    assert v and v.is_factorization


def test_direct_sum_difference_criterion_agrees():
    # (A-A) cap (B-B) = {0} criterion vs multiset test, |A||B| = |G|
    import itertools
    import random

    from hajoscodes.groups import difference_set

    rng = random.Random(7)
    for orders in [(6,), (8,), (2, 4), (3, 3), (12,), (2, 2, 3)]:
        g = make_group(orders)
        n = g.cardinality
        elems = list(g.elements())
        for _ in range(25):
            sa = [d for d in range(2, n) if n % d == 0]
            if not sa:
                continue
            la = rng.choice(sa)
            a = subset(g, rng.sample(elems, la))
            b = subset(g, rng.sample(elems, n // la))
            if len(a) * len(b) != n:
                continue
            v = is_direct_sum(a, b)
            da = set(difference_set(a).elements)
            db = set(difference_set(b).elements)
            crit = (da & db) == {g.zero()}
            assert bool(v) == crit


def test_generated_subgroup():
    g = make_group([4, 2])
    assert generated_subgroup(subset(g, [(2, 1)])).carrier.elements == ((0, 0), (2, 1))
    z9 = make_group([9])
    assert generated_subgroup(subset(z9, [(3,)])).carrier.elements == ((0,), (3,), (6,))
    z55 = make_group([5, 5])
    assert len(generated_subgroup(subset(z55, [(1, 0), (0, 1)]))) == 25


def test_translate():
    z9 = make_group([9])
    a = subset(z9, [(0,), (3,), (6,)])
    assert translate(a, (1,)).elements == ((1,), (4,), (7,))
    assert translate(a, (0,)).elements == a.elements
    z55 = make_group([5, 5])
    col = subset(z55, [(0, n) for n in range(5)])
    assert translate(col, (2, 0)).elements == tuple((2, n) for n in range(5))
    assert translate(translate(col, (2, 3)), z55.neg((2, 3))).elements == col.elements


def test_quotient_examples():
    z4 = make_group([4])
    h = generated_subgroup(subset(z4, [(2,)]))
    q = quotient(z4, h)
    assert len(q) == 2 and q.iso_orders == (2,)

    g42 = make_group([4, 2])
    h = generated_subgroup(subset(g42, [(2, 1)]))
    q = quotient(g42, h)
    assert sorted(q.iso_orders) == [4]

    q = quotient(z4, generated_subgroup(subset(z4, [(1,)])))
    assert len(q) == 1 and q.iso_orders == (1,)


def test_quotient_projection_homomorphism():
    for orders in [(8,), (4, 2), (2, 2, 2), (9,), (6, 2)]:
        g = make_group(orders)
        for gen in [(1,) * g.rank, tuple(2 % o for o in orders)]:
            h = generated_subgroup(subset(g, [gen]))
            q = quotient(g, h)
            for x in g.elements():
                for y in g.elements():
                    assert q.add(q.project(x), q.project(y)) == q.project(g.add(x, y))
            # kernel is exactly H
            kernel = [x for x in g.elements() if q.project(x) == q.project(g.zero())]
            assert kernel == list(h.carrier.elements)


def test_quotient_iso_structure():
    g = make_group([4, 2, 2])
    h = generated_subgroup(subset(g, [(2, 0, 0)]))
    q = quotient(g, h)
    import math

    assert math.prod(q.iso_orders) == len(q)
    iso = q.as_group()
    # iso map is an isomorphism
    for x in iso.elements():
        for y in iso.elements():
            assert q.add(q.from_iso(x), q.from_iso(y)) == q.from_iso(iso.add(x, y))


def test_sumset_associative_commutative_small():
    import random

    rng = random.Random(3)
    for orders in [(6,), (2, 4), (3, 3)]:
        g = make_group(orders)
        elems = list(g.elements())
        for _ in range(10):
            a = subset(g, rng.sample(elems, rng.randint(1, len(elems))))
            b = subset(g, rng.sample(elems, rng.randint(1, len(elems))))
            c = subset(g, rng.sample(elems, rng.randint(1, len(elems))))
            assert sumset(a, b).elements == sumset(b, a).elements
            assert sumset(a, sumset(b, c)).elements == sumset(sumset(a, b), c).elements


def test_order_guard():
    import os

    g = make_group([10**7])
    with pytest.raises(GroupOrderError):
        generated_subgroup(subset(g, [(1,)]))
