"""Periodicity machinery: subgroup of periods, A = L_A (+) D splits, and the
induced factorization of G/L_A with its lifting witnesses."""

from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    Coords,
    Group,
    GroupSubset,
    QuotientGroup,
    Subgroup,
    generated_subgroup,
    is_direct_sum,
    quotient,
    subset,
    translate,
)


def subgroup_of_periods(a: GroupSubset) -> Subgroup:
    """L_A as the intersection of the translates A - a."""
    if not a.elements:
        raise ValueError("empty subset has no subgroup of periods")
    grp = a.group
    sub = grp.sub
    elems = set(a.elements)
    common: set[Coords] | None = None
    for anchor in a:
        shifted = {sub(x, anchor) for x in elems}
        common = shifted if common is None else common & shifted
        if len(common) == 1:
            break
    assert common is not None and grp.zero() in common
    carrier = subset(grp, common)
    sub_obj = Subgroup(carrier, carrier)
    assert sub_obj.is_closed(), "periods set failed closure; arithmetic bug"
    return sub_obj


def stabilizer_periods(a: GroupSubset) -> Subgroup:
    """Direct definition {g : g + A = A}; used as a test oracle."""
    grp = a.group
    carrier = subset(
        grp, (g for g in grp.elements() if translate(a, g).elements == a.elements)
    )
    return Subgroup(carrier, carrier)


@dataclass(frozen=True)
class PeriodDecomposition:
    subject: GroupSubset
    periods: Subgroup
    transversal: GroupSubset
    is_periodic: bool

    def to_json(self) -> dict:
        return {
            "periods": [list(g) for g in self.periods.carrier],
            "transversal": [list(g) for g in self.transversal],
            "is_periodic": self.is_periodic,
        }


def period_decomposition(a: GroupSubset) -> PeriodDecomposition:
    """Split A = L_A (+) D with D the least representative of each coset."""
    periods = subgroup_of_periods(a)
    grp = a.group
    add = grp.add
    seen: set[Coords] = set()
    reps: list[Coords] = []
    for x in a:  # sorted, so the first element of each coset is the least
        if x in seen:
            continue
        reps.append(x)
        for l in periods.carrier:
            seen.add(add(x, l))
    transversal = GroupSubset(grp, tuple(reps))
    verdict = is_direct_sum(periods.carrier, transversal)
    recomposed = {add(l, d) for l in periods.carrier for d in transversal}
    if not verdict or recomposed != set(a.elements):
        raise AssertionError("L (+) D != A; arithmetic bug in period split")
    return PeriodDecomposition(a, periods, transversal, len(periods) > 1)


@dataclass(frozen=True)
class QuotientFactorization:
    """Image of a factorization G = A (+) B in G/L_A (A periodic)."""

    quotient: QuotientGroup
    factor_from_periodic: GroupSubset  # (D + L_A)/L_A, as representatives
    cofactor: GroupSubset  # (B + L_A)/L_A, as representatives
    cardinality_witness: tuple[int, int]


def _project_subset(q: QuotientGroup, s: GroupSubset) -> GroupSubset:
    reps = sorted({q.reps[q.project(x)] for x in s})
    return GroupSubset(q.parent, tuple(reps))


def quotient_factorization(
    group: Group, a: GroupSubset, b: GroupSubset
) -> QuotientFactorization:
    """Build G/L_A and verify all conclusions of the transfer lemma."""
    verdict = is_direct_sum(a, b)
    if not (verdict and verdict.is_factorization):
        raise ValueError("G = A (+) B must be a verified factorization")
    dec = period_decomposition(a)
    if not dec.is_periodic:
        raise ValueError("A is aperiodic; quotient transfer needs |L_A| > 1")
    q = quotient(group, dec.periods)
    d_proj = _project_subset(q, dec.transversal)
    b_proj = _project_subset(q, b)

    if len(d_proj) != len(dec.transversal) or len(b_proj) != len(b):
        raise AssertionError("projection changed factor cardinalities")
    # the projected pair factorizes the quotient: check on coset indices
    seen = set()
    for x in d_proj:
        for y in b_proj:
            s = q.add(q.project(x), q.project(y))
            if s in seen:
                raise AssertionError("projected pair is not a direct sum")
            seen.add(s)
    if len(seen) != len(q):
        raise AssertionError("projected pair does not cover the quotient")
    if _quotient_periodic(q, d_proj):
        raise AssertionError("projected transversal is periodic in G/L_A")
    return QuotientFactorization(q, d_proj, b_proj, (len(dec.transversal), len(b)))


def _quotient_periodic(q: QuotientGroup, s: GroupSubset) -> bool:
    idxs = frozenset(q.project(x) for x in s)
    for g in range(1, len(q)):
        if frozenset(q.add(g, i) for i in idxs) == idxs:
            return True
    return False


def lift_representatives(
    qf: QuotientFactorization, target: GroupSubset
) -> tuple[tuple[Coords, Coords], ...]:
    """Witnesses l_k with target = {b_k + l_k}, l_k in L_A.

    `target` must project bijectively onto one of the two quotient factors;
    returns (representative, lift) pairs in representative order.
    """
    q = qf.quotient
    proj = {q.project(x): x for x in target}
    if len(proj) != len(target):
        raise ValueError("target does not project injectively onto the quotient")
    for factor in (qf.factor_from_periodic, qf.cofactor):
        idxs = {q.project(x) for x in factor}
        if idxs == set(proj):
            parent = q.parent
            out = []
            for rep in factor:
                x = proj[q.project(rep)]
                lift = parent.sub(x, rep)
                assert lift in qf.quotient.modulus.carrier
                out.append((rep, lift))
            return tuple(out)
    raise ValueError("target does not project onto either quotient factor")


def check_generation_transfer(group: Group, a: GroupSubset) -> tuple[bool, bool]:
    """Both equivalences of the generation/zero transfer lemma, each computed
    on both sides and asserted equal; returns (generates, contains_zero)."""
    dec = period_decomposition(a)
    q = quotient(group, dec.periods)

    generates_g = len(generated_subgroup(a)) == group.cardinality
    # closure of projected transversal inside the quotient, on coset indices
    idxs = [q.project(x) for x in dec.transversal]
    closure = {0}
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            for g in idxs:
                y = q.add(x, g)
                if y not in closure:
                    closure.add(y)
                    new.append(y)
        frontier = new
    generates_quot = len(closure) == len(q)
    assert generates_g == generates_quot, "generation transfer violated"

    zero_in_a = group.zero() in a
    zero_coset_in_d = any(q.project(x) == q.project(group.zero()) for x in dec.transversal)
    assert zero_in_a == zero_coset_in_d, "zero transfer violated"
    return generates_g, zero_in_a
