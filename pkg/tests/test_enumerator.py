import pytest

from hajoscodes.codes import cayley, is_perfect_code
from hajoscodes.enumerator import (
    enumerate_admitting_specs,
    enumerate_perfect_codes,
    naive_perfect_codes,
)
from hajoscodes.groups import GroupOrderError, make_group, subset


def test_enumerate_z9():
    z9 = make_group([9])
    res = enumerate_perfect_codes(cayley(z9, [(1,), (2,)]))
    assert [c.elements for c in res.normalized_codes] == [((0,), (3,), (6,))]
    assert res.total_codes == 3


def test_enumerate_z4_directed():
    z4 = make_group([4])
    res = enumerate_perfect_codes(cayley(z4, [(1,)]))
    assert [c.elements for c in res.normalized_codes] == [((0,), (2,))]
    assert res.total_codes == 2


def test_enumerate_empty_when_size_does_not_divide():
    g = make_group([2, 2])
    res = enumerate_perfect_codes(cayley(g, [(1, 0), (0, 1)]))
    assert res.normalized_codes == () and res.total_codes == 0


def test_enumerate_matches_naive_micro():
    # oracle completeness cross-check on all specs over small groups
    from itertools import combinations

    for orders in [(6,), (8,), (2, 4), (3, 3), (2, 2, 2)]:
        g = make_group(orders)
        n = g.cardinality
        nonzero = [e for e in g.elements() if e != g.zero()]
        for size in range(1, n):
            if n % (size + 1) != 0:
                continue
            for s_elems in combinations(nonzero, size):
                spec = cayley(g, s_elems)
                fast = [c.elements for c in enumerate_perfect_codes(spec)]
                slow = [c.elements for c in naive_perfect_codes(spec)]
                assert fast == slow, f"{g} S={s_elems}"


def test_emitted_codes_verify():
    g = make_group([5, 5])
    spec = cayley(g, [(1, 0), (2, 2), (3, 2), (4, 1)])
    res = enumerate_perfect_codes(spec)
    assert res.normalized_codes
    for c in res.normalized_codes:
        assert is_perfect_code(spec, c, "both")


def test_limit_flag():
    g = make_group([5, 5])
    spec = cayley(g, [(1, 0), (2, 2), (3, 2), (4, 1)])
    res = enumerate_perfect_codes(spec, limit=1)
    assert res.truncated and len(res.normalized_codes) == 1


def test_size_bound():
    g = make_group([101, 101])
    with pytest.raises(GroupOrderError):
        enumerate_perfect_codes(cayley(g, [(1, 0)]))


def test_admitting_specs_z4():
    z4 = make_group([4])
    found = enumerate_admitting_specs(z4, 2)
    s0s = [a.s_zero.elements for a in found]
    # admitting S0 of size 2 in Z_4: {0, odd}
    assert s0s == [((0,), (1,)), ((0,), (3,))]


def test_admitting_specs_z33_matches_zpp_conditions():
    g = make_group([3, 3])
    found = enumerate_admitting_specs(g, 3)
    for adm in found:
        s0 = adm.s_zero
        firsts = {e[0] for e in s0}
        cond1 = len(firsts) == 3
        cond2 = any(
            len({(a * e[0] - e[1]) % 3 for e in s0}) == 3 for a in range(3)
        )
        assert cond1 or cond2
        for c in adm.normalized_codes:
            spec = cayley(g, [e for e in s0 if e != (0, 0)])
            assert is_perfect_code(spec, c)


def test_strategies_agree():
    for orders in [(8,), (2, 4), (3, 3), (2, 2, 2), (12,), (2, 2, 2, 2)]:
        g = make_group(orders)
        n = g.cardinality
        for size in [d for d in range(2, n) if n % d == 0]:
            a = enumerate_admitting_specs(g, size, strategy="exhaustive")
            b = enumerate_admitting_specs(g, size, strategy="pairs")
            assert [(x.s_zero.elements, tuple(c.elements for c in x.normalized_codes)) for x in a] == [
                (x.s_zero.elements, tuple(c.elements for c in x.normalized_codes)) for x in b
            ], (orders, size)


def test_symmetry_reduction_subset():
    g = make_group([2, 2, 2])
    full = enumerate_admitting_specs(g, 4, strategy="pairs")
    reduced = enumerate_admitting_specs(g, 4, strategy="pairs", symmetry_reduction=True)
    assert len(reduced) <= len(full)
    reduced_keys = {a.s_zero.elements for a in reduced}
    assert reduced_keys <= {a.s_zero.elements for a in full}
