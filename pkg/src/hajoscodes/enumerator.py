"""Brute-force oracle: exhaustive perfect-code enumeration by exact cover,
and enumeration of admitting connection sets for a small group."""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator

from . import _cover
from .codes import CayleySpec, CodeCertificate, cayley, is_connected, is_perfect_code, normalize_code
from .groups import Coords, Group, GroupSubset, GroupOrderError, subset
from .periods import subgroup_of_periods

DEFAULT_EXHAUSTIVE_BOUND = 10**4
DEFAULT_SPEC_GROUP_BOUND = 256
DEFAULT_CANDIDATE_CEILING = 5 * 10**6


def exhaustive_bound() -> int:
    return int(os.environ.get("HAJOS_ENUM_MAX_ORDER", DEFAULT_EXHAUSTIVE_BOUND))


@dataclass(frozen=True)
class EnumerationResult:
    spec: CayleySpec
    normalized_codes: tuple[GroupSubset, ...]
    total_codes: int
    nodes_expanded: int
    wall_time: float
    truncated: bool = False

    def __iter__(self) -> Iterator[GroupSubset]:
        return iter(self.normalized_codes)


def _addition_tables(group: Group) -> tuple[list[list[int]], list[list[int]]]:
    n = group.cardinality
    orders = group.orders
    elems = [group.decode(i) for i in range(n)]
    enc = group.encode
    add = [[0] * n for _ in range(n)]
    sub = [[0] * n for _ in range(n)]
    for i, g in enumerate(elems):
        for j, h in enumerate(elems):
            s = enc(tuple((a + b) % m for a, b, m in zip(g, h, orders)))
            add[i][j] = s
            sub[s][j] = i  # i = s - h
    return add, sub


def enumerate_perfect_codes(spec: CayleySpec, limit: int | None = None) -> EnumerationResult:
    """Every normalized perfect code of Cay(G, S), via exact cover.

    Rows are the translates g + S0; a solution's chosen g's form a code.
    Codes are deduplicated under translation and reported in normal form,
    sorted, so output is deterministic.
    """
    grp = spec.group
    n = grp.cardinality
    if n > exhaustive_bound():
        raise GroupOrderError(
            f"group order {n} above exhaustive bound {exhaustive_bound()} "
            "(override with HAJOS_ENUM_MAX_ORDER)"
        )
    start = time.perf_counter()
    if n % len(spec.s_zero) != 0:
        return EnumerationResult(spec, (), 0, 0, time.perf_counter() - start)

    enc = grp.encode
    add = grp.add
    s0 = spec.s_zero.elements
    row_masks = []
    for g in grp.elements():
        m = 0
        for s in s0:
            m |= 1 << enc(add(g, s))
        row_masks.append(m)

    raw, nodes, truncated_raw = _cover.exact_cover(n, row_masks, None)
    normalized: dict[tuple[Coords, ...], GroupSubset] = {}
    total = 0
    for rows in raw:
        code = GroupSubset(grp, tuple(grp.decode(r) for r in sorted(rows)))
        norm, _ = normalize_code(code)
        if norm.elements not in normalized:
            normalized[norm.elements] = norm
    truncated = False
    codes = [normalized[k] for k in sorted(normalized)]
    if limit is not None and len(codes) > limit:
        codes = codes[:limit]
        truncated = True
    for c in codes:
        total += n // len(subgroup_of_periods(c))
    elapsed = time.perf_counter() - start
    return EnumerationResult(spec, tuple(codes), total, nodes, elapsed, truncated)


def naive_perfect_codes(spec: CayleySpec) -> tuple[GroupSubset, ...]:
    """Independent oracle: scan all subsets of size |G|/|S0| directly.

    Test-suite cross-check for micro instances; not part of the public API
    surface used by the CLI.
    """
    grp = spec.group
    n = grp.cardinality
    k, rem = divmod(n, len(spec.s_zero))
    if rem:
        return ()
    enc = grp.encode
    add = grp.add
    full = (1 << n) - 1
    masks = []
    for g in grp.elements():
        m = 0
        for s in spec.s_zero:
            m |= 1 << enc(add(g, s))
        masks.append(m)
    found: set[tuple[Coords, ...]] = set()
    for combo in combinations(range(n), k):
        acc = 0
        ok = True
        for r in combo:
            if acc & masks[r]:
                ok = False
                break
            acc |= masks[r]
        if ok and acc == full:
            code = GroupSubset(grp, tuple(grp.decode(r) for r in combo))
            norm, _ = normalize_code(code)
            found.add(norm.elements)
    return tuple(GroupSubset(grp, e) for e in sorted(found))


@dataclass(frozen=True)
class AdmittingSpec:
    s_zero: GroupSubset
    normalized_codes: tuple[GroupSubset, ...]

    @property
    def code_count(self) -> int:
        return len(self.normalized_codes)


def _candidate_count(n: int, s0_size: int) -> int:
    return math.comb(n - 1, s0_size - 1)


def _coordinate_symmetries(group: Group) -> list[tuple[int, ...]]:
    """Permutations of coordinates with equal orders (identity included)."""
    idx = range(group.rank)
    return [
        p
        for p in permutations(idx)
        if all(group.orders[p[i]] == group.orders[i] for i in idx)
    ]


def _canonical_under_symmetry(group: Group, elems: tuple[Coords, ...], perms) -> tuple[Coords, ...]:
    best = None
    for p in perms:
        cand = tuple(sorted(tuple(e[p[i]] for i in range(len(p))) for e in elems))
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def _passes(group: Group, s0: GroupSubset, constraints: frozenset[str]) -> bool:
    s = subset(group, (e for e in s0 if e != group.zero()))
    spec = CayleySpec(group, s)
    if "connected" in constraints and not is_connected(spec):
        return False
    if "non-complete" in constraints and spec.is_complete:
        return False
    if "undirected" in constraints and not spec.is_undirected:
        return False
    return True


def enumerate_admitting_specs(
    group: Group,
    s0_size: int,
    constraints: frozenset[str] | set[str] = frozenset({"connected", "non-complete"}),
    *,
    strategy: str = "auto",
    symmetry_reduction: bool = False,
    candidate_ceiling: int = DEFAULT_CANDIDATE_CEILING,
    spec_group_bound: int = DEFAULT_SPEC_GROUP_BOUND,
) -> list[AdmittingSpec]:
    """All connection sets S0 (with 0) of the given size admitting a code,
    each with its full normalized-code list.

    strategy "exhaustive" iterates candidate S0 sets (guarded by
    `candidate_ceiling`); "pairs" enumerates two-factor factorizations
    directly and groups them by S0.  Both orders output identically.
    With `symmetry_reduction`, S0 candidates are canonicalized under
    permutations of equal-order coordinates (a completeness-preserving
    reduction only up to that symmetry).
    """
    constraints = frozenset(constraints)
    n = group.cardinality
    if n > spec_group_bound:
        raise GroupOrderError(
            f"group order {n} above admitting-spec bound {spec_group_bound}"
        )
    if s0_size < 1 or n % s0_size != 0:
        return []
    if strategy == "auto":
        strategy = "exhaustive" if _candidate_count(n, s0_size) <= 50_000 else "pairs"

    perms = _coordinate_symmetries(group) if symmetry_reduction else None
    results: dict[tuple[Coords, ...], AdmittingSpec] = {}

    if strategy == "exhaustive":
        if _candidate_count(n, s0_size) > candidate_ceiling:
            raise GroupOrderError(
                f"candidate count C({n - 1},{s0_size - 1}) exceeds ceiling {candidate_ceiling}"
            )
        nonzero = [g for g in group.elements() if g != group.zero()]
        seen_canon: set[tuple[Coords, ...]] = set()
        for combo in combinations(nonzero, s0_size - 1):
            elems = tuple(sorted(combo + (group.zero(),)))
            if perms is not None:
                canon = _canonical_under_symmetry(group, elems, perms)
                if canon in seen_canon:
                    continue
                seen_canon.add(canon)
                elems = canon
            s0 = GroupSubset(group, elems)
            if not _passes(group, s0, constraints):
                continue
            s = subset(group, (e for e in s0 if e != group.zero()))
            res = enumerate_perfect_codes(CayleySpec(group, s))
            if res.normalized_codes:
                results[elems] = AdmittingSpec(s0, res.normalized_codes)
    elif strategy == "pairs":
        add_t, sub_t = _addition_tables(group)
        pairs = _cover.factor_pairs(n, add_t, sub_t, s0_size, n // s0_size)
        by_s0: dict[tuple[Coords, ...], set[tuple[Coords, ...]]] = {}
        seen_canon = set()
        for a_idx, b_idx in pairs:
            elems = tuple(group.decode(i) for i in a_idx)
            if perms is not None:
                canon = _canonical_under_symmetry(group, elems, perms)
                if elems != canon:
                    continue  # keep only canonical-form S0
            code = GroupSubset(group, tuple(group.decode(i) for i in b_idx))
            norm, _ = normalize_code(code)
            by_s0.setdefault(elems, set()).add(norm.elements)
        for elems in sorted(by_s0):
            s0 = GroupSubset(group, elems)
            if not _passes(group, s0, constraints):
                continue
            codes = tuple(GroupSubset(group, e) for e in sorted(by_s0[elems]))
            results[elems] = AdmittingSpec(s0, codes)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    return [results[k] for k in sorted(results)]
