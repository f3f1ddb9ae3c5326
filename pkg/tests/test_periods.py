import random

import pytest

from hajoscodes.groups import generated_subgroup, make_group, subset
from hajoscodes.periods import (
    check_generation_transfer,
    lift_representatives,
    period_decomposition,
    quotient_factorization,
    stabilizer_periods,
    subgroup_of_periods,
)


def test_subgroup_of_periods_examples():
    z4 = make_group([4])
    assert subgroup_of_periods(subset(z4, [(0,), (1,)])).carrier.elements == ((0,),)
    z8 = make_group([8])
    a = subset(z8, [(0,), (1,), (4,), (5,)])
    assert subgroup_of_periods(a).carrier.elements == ((0,), (4,))
    # a subgroup is its own period group
    g = make_group([4, 2])
    h = generated_subgroup(subset(g, [(2, 1)])).carrier
    assert subgroup_of_periods(h).carrier.elements == h.elements


def test_periods_match_stabilizer_definition():
    rng = random.Random(11)
    for orders in [(8,), (4, 2), (2, 2, 2), (9,), (12,), (6, 2)]:
        g = make_group(orders)
        elems = list(g.elements())
        for _ in range(30):
            a = subset(g, rng.sample(elems, rng.randint(1, len(elems))))
            lhs = subgroup_of_periods(a).carrier.elements
            rhs = stabilizer_periods(a).carrier.elements
            assert lhs == rhs


def test_period_decomposition_examples():
    z8 = make_group([8])
    dec = period_decomposition(subset(z8, [(0,), (1,), (4,), (5,)]))
    assert dec.periods.carrier.elements == ((0,), (4,))
    assert dec.transversal.elements == ((0,), (1,))
    assert dec.is_periodic

    aper = period_decomposition(subset(z8, [(0,), (1,), (3,)]))
    assert not aper.is_periodic
    assert aper.transversal.elements == aper.subject.elements

    g = make_group([5, 3, 3])
    a = subset(g, [(0, i, j) for i in range(3) for j in range(3)])
    dec = period_decomposition(a)
    assert dec.periods.carrier.elements == a.elements
    assert dec.transversal.elements == ((0, 0, 0),)


def test_quotient_factorization_examples():
    z6 = make_group([6])
    qf = quotient_factorization(
        z6, subset(z6, [(0,), (3,)]), subset(z6, [(0,), (1,), (2,)])
    )
    assert len(qf.quotient) == 3
    assert len(qf.factor_from_periodic) == 1
    assert len(qf.cofactor) == 3
    assert qf.cardinality_witness == (1, 3)

    z4 = make_group([4])
    qf = quotient_factorization(z4, subset(z4, [(0,), (2,)]), subset(z4, [(0,), (1,)]))
    assert len(qf.quotient) == 2 and len(qf.cofactor) == 2

    z9 = make_group([9])
    qf = quotient_factorization(
        z9, subset(z9, [(0,), (3,), (6,)]), subset(z9, [(0,), (1,), (2,)])
    )
    assert len(qf.factor_from_periodic) == 1 and len(qf.cofactor) == 3


def test_quotient_factorization_rejects():
    z6 = make_group([6])
    with pytest.raises(ValueError):
        quotient_factorization(z6, subset(z6, [(0,), (2,)]), subset(z6, [(0,), (1,)]))
    z8 = make_group([8])
    with pytest.raises(ValueError):  # aperiodic A
        quotient_factorization(
            z8, subset(z8, [(0,), (1,)]), subset(z8, [(0,), (2,), (4,), (6,)])
        )


def test_lift_representatives():
    z8 = make_group([8])
    qf = quotient_factorization(
        z8, subset(z8, [(0,), (1,), (4,), (5,)]), subset(z8, [(0,), (2,)])
    )
    lifts = lift_representatives(qf, subset(z8, [(0,), (5,)]))
    by_rep = dict(lifts)
    assert by_rep == {(0,): (0,), (1,): (4,)}
    # a transversal of least representatives lifts trivially
    lifts = lift_representatives(qf, subset(z8, [(0,), (1,)]))
    assert all(l == (0,) for _, l in lifts)

    g = make_group([4, 2])
    qf = quotient_factorization(
        g,
        subset(g, [(0, 0), (0, 1), (1, 0), (1, 1)]),
        subset(g, [(0, 0), (2, 0)]),
    )
    lifts = lift_representatives(qf, subset(g, [(0, 0), (1, 1)]))
    assert dict(lifts) == {(0, 0): (0, 0), (1, 0): (0, 1)}


def test_check_generation_transfer():
    z8 = make_group([8])
    assert check_generation_transfer(z8, subset(z8, [(0,), (1,), (4,), (5,)])) == (
        True,
        True,
    )
    gen, zero = check_generation_transfer(z8, subset(z8, [(0,), (2,)]))
    assert not gen and zero
    g = make_group([2, 2])
    from hajoscodes.groups import full_subset

    assert check_generation_transfer(g, full_subset(g)) == (True, True)


def test_decomposition_invariant_random():
    rng = random.Random(5)
    for orders in [(8,), (4, 4), (2, 2, 3), (9, 3)]:
        g = make_group(orders)
        elems = list(g.elements())
        for _ in range(20):
            a = subset(g, rng.sample(elems, rng.randint(1, len(elems))))
            dec = period_decomposition(a)
            # least-rep property: each transversal member least in its coset
            for d in dec.transversal:
                coset = sorted(g.add(d, l) for l in dec.periods.carrier)
                assert coset[0] == d
