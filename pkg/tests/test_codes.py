import random

import pytest

from hajoscodes.codes import (
    all_translates,
    cayley,
    is_connected,
    is_perfect_code,
    normalize_code,
)
from hajoscodes.groups import full_subset, make_group, subset, translate


def test_is_connected():
    z9 = make_group([9])
    assert is_connected(cayley(z9, [(1,), (2,)]))
    g = make_group([4, 2])
    assert not is_connected(cayley(g, [(2, 0)]))
    z55 = make_group([5, 5])
    assert is_connected(cayley(z55, [(1, 0), (2, 2), (3, 2), (4, 1)]))


def test_undirected_flag():
    z9 = make_group([9])
    assert not cayley(z9, [(1,), (2,)]).is_undirected
    assert cayley(z9, [(1,), (8,)]).is_undirected


def test_is_perfect_code_examples():
    g = make_group([3, 2])
    spec = cayley(g, [(1, 0), (2, 0)])
    code = subset(g, [(0, 0), (0, 1)])
    for method in ("graph", "algebraic", "both"):
        assert is_perfect_code(spec, code, method)

    z4 = make_group([4])
    assert is_perfect_code(cayley(z4, [(1,)]), subset(z4, [(0,), (2,)]))

    z22 = make_group([2, 2])
    cert = is_perfect_code(cayley(z22, [(1, 0), (0, 1)]), subset(z22, [(0, 0)]))
    assert not cert and cert.counterexample is not None
    # the counterexample is independently recheckable: coverage count != 1
    g22 = z22
    v = cert.counterexample
    s0 = [(0, 0), (1, 0), (0, 1)]
    hits = sum(1 for u in [(0, 0)] for s in s0 if g22.add(u, s) == v)
    assert hits != 1


def test_rejects_bad_inputs():
    z4 = make_group([4])
    spec = cayley(z4, [(1,)])
    with pytest.raises(ValueError):
        is_perfect_code(spec, subset(z4, []))
    with pytest.raises(ValueError):
        cayley(z4, [(0,), (1,)])  # 0 in S
    with pytest.raises(ValueError):
        is_perfect_code(spec, subset(make_group([5]), [(0,)]))


def test_methods_agree_random():
    rng = random.Random(23)
    for orders in [(8,), (2, 4), (3, 3), (12,), (2, 2, 3), (16,), (6, 2)]:
        g = make_group(orders)
        elems = [e for e in g.elements()]
        nonzero = [e for e in elems if e != g.zero()]
        for _ in range(40):
            s = subset(g, rng.sample(nonzero, rng.randint(1, len(nonzero))))
            c = subset(g, rng.sample(elems, rng.randint(1, len(elems))))
            spec = cayley(g, s.elements)
            a = is_perfect_code(spec, c, "graph")
            b = is_perfect_code(spec, c, "algebraic")
            assert a.verdict == b.verdict
            is_perfect_code(spec, c, "both")  # asserts agreement internally


def test_translates_of_code_are_codes():
    z9 = make_group([9])
    spec = cayley(z9, [(1,), (2,)])
    code = subset(z9, [(0,), (3,), (6,)])
    assert is_perfect_code(spec, code)
    for t in all_translates(code):
        assert is_perfect_code(spec, t)


def test_normalize_code():
    z9 = make_group([9])
    norm, shift = normalize_code(subset(z9, [(1,), (4,), (7,)]))
    assert norm.elements == ((0,), (3,), (6,))
    assert shift in ((1,), (4,), (7,))
    # idempotent
    again, shift2 = normalize_code(norm)
    assert again.elements == norm.elements and shift2 == (0,)

    z55 = make_group([5, 5])
    c = subset(z55, [(1, (n + 3) % 5) for n in range(5)])
    norm, shift = normalize_code(c)
    assert norm.elements == tuple((0, n) for n in range(5))
    assert translate(c, z55.neg(shift)).elements == norm.elements


def test_normalize_picks_least_translate():
    z4 = make_group([4])
    c = subset(z4, [(1,), (2,)])
    norm, shift = normalize_code(c)
    # zero-containing translates: {0,1} (shift 1), {0,3} (shift 2); least is {0,1}
    assert norm.elements == ((0,), (1,)) and shift == (1,)


def test_all_translates_counts():
    z9 = make_group([9])
    assert len(all_translates(subset(z9, [(0,), (3,), (6,)]))) == 3
    z4 = make_group([4])
    assert len(all_translates(subset(z4, [(0,), (1,)]))) == 4
    g = make_group([2, 2])
    assert len(all_translates(full_subset(g))) == 1
