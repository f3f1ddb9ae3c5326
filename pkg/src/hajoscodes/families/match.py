"""Pair-coverage machinery: deciding whether an (S0, code) pair produced by
the search oracle is reproduced by some catalog entry and assignment.

A CoverageIndex binds the applicable catalog entries to one concrete group.
Each concrete matcher either materializes its family lazily (small ones) or
decodes membership; generator-change freedoms are realized by composing
matchers with block automorphisms, applied to the query pair with caching.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Sequence

from ..groups import Coords, Group, GroupSubset, make_group
from .catalog import (
    FamilySpecEntry,
    pattern_assignments,
    row_variants,
    table_catalog,
)
from .expr import CompiledSide

MATERIALIZE_CAP = 300_000

ElemMap = Callable[[Coords], Coords]


# ---------------------------------------------------------------------------
# coordinate transforms
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _gl_matrices(dim: int, mod: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    mats = []
    for flat in product(range(mod), repeat=dim * dim):
        m = tuple(tuple(flat[i * dim : (i + 1) * dim]) for i in range(dim))
        if _invertible(m, mod):
            mats.append(m)
    return tuple(mats)


def _invertible(m, mod: int) -> bool:
    dim = len(m)
    a = [list(r) for r in m]
    for col in range(dim):
        piv = next((r for r in range(col, dim) if a[r][col] % mod), None)
        if piv is None:
            return False
        a[col], a[piv] = a[piv], a[col]
        inv = pow(a[col][col], -1, mod)
        a[col] = [(x * inv) % mod for x in a[col]]
        for r in range(dim):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [(x - f * y) % mod for x, y in zip(a[r], a[col])]
    return True


@lru_cache(maxsize=None)
def automorphism_images(group: Group) -> tuple[tuple[Coords, ...], ...]:
    """Generator images (one per coordinate) of every automorphism."""
    elems = list(group.elements())
    gens = [tuple(1 if i == j else 0 for j in range(group.rank)) for i in range(group.rank)]
    out = []
    for images in product(elems, repeat=group.rank):
        if any(
            group.element_order(img) != group.element_order(g)
            for img, g in zip(images, gens)
        ):
            continue
        seen = set()
        ok = True
        for x in elems:
            acc = group.zero()
            for xi, img in zip(x, images):
                acc = group.add(acc, group.scale(xi, img))
            if acc in seen:
                ok = False
                break
            seen.add(acc)
        if ok:
            out.append(tuple(images))
    return tuple(out)


def group_automorphisms(group: Group) -> list[ElemMap]:
    out: list[ElemMap] = []
    for images in automorphism_images(group):

        def apply(x: Coords, images=images) -> Coords:
            acc = group.zero()
            for xi, img in zip(x, images):
                acc = group.add(acc, group.scale(xi, img))
            return acc

        out.append(apply)
    return out


def scope_transforms(entry: FamilySpecEntry, group: Group, perm: tuple[int, ...]) -> list[ElemMap]:
    """Element maps from group coordinates into pattern coordinates, one per
    automorphism in the entry's scope (identity scope gives one map).

    The plain coordinate permutation comes first; coverage checks try it
    before paying for the rest of the scope.
    """

    def permute(x: Coords) -> Coords:
        return tuple(x[perm[i]] for i in range(len(perm)))

    scope = entry.aut_scope
    if scope is None:
        return [permute]
    pat_orders = [group.orders[p] for p in perm]
    if scope[0] == "aut":
        autos = group_automorphisms(make_group(pat_orders))
        return _identity_first(group, permute, [lambda x, f=f: f(permute(x)) for f in autos])
    if scope[0] == "autblock":
        coords = scope[1]
        block = make_group([pat_orders[c] for c in coords])
        out: list[ElemMap] = []
        for images in automorphism_images(block):

            def apply(x: Coords, images=images) -> Coords:
                y = list(permute(x))
                vals = tuple(y[c] for c in coords)
                acc = block.zero()
                for xi, img in zip(vals, images):
                    acc = block.add(acc, block.scale(xi, img))
                for c, v in zip(coords, acc):
                    y[c] = v
                return tuple(y)

            out.append(apply)
        return _identity_first(group, permute, out)
    _, coords, mod_sym = scope
    mod = mod_sym if isinstance(mod_sym, int) else pat_orders[coords[0]]
    out = []
    for m in _gl_matrices(len(coords), mod):

        def apply(x: Coords, m=m) -> Coords:
            y = list(permute(x))
            vals = [y[c] for c in coords]
            for row_i, c in enumerate(coords):
                y[c] = sum(m[row_i][j] * vals[j] for j in range(len(coords))) % mod
            return tuple(y)

        out.append(apply)
    return _identity_first(group, permute, out)


def _identity_first(group: Group, permute: ElemMap, maps: list[ElemMap]) -> list[ElemMap]:
    elems = list(group.elements())
    for i, f in enumerate(maps):
        if all(f(x) == permute(x) for x in elems):
            if i:
                maps[0], maps[i] = maps[i], maps[0]
            return maps
    return maps


# ---------------------------------------------------------------------------
# matchers
# ---------------------------------------------------------------------------


class SideMatcher:
    """Membership test for one side family; materializes small schedule-less
    families lazily, decodes otherwise."""

    __slots__ = ("cs", "_family", "_strategy")

    def __init__(self, cs: CompiledSide):
        self.cs = cs
        self._family: frozenset | None = None
        self._strategy: str | None = None

    def _pick(self) -> str:
        if self._strategy is None:
            if self.cs._schedule() is None and self.cs.assignment_count() <= MATERIALIZE_CAP:
                self._strategy = "materialize"
            else:
                self._strategy = "decode"
        return self._strategy

    def matches(self, target: frozenset[Coords]) -> bool:
        if self._pick() == "materialize":
            if self._family is None:
                self._family = frozenset(frozenset(s) for s in self.cs.enumerate_sets())
            return target in self._family
        return self.cs.decode(target) is not None


class PairMatcher:
    def __init__(self, entry_id: str, label: str, s: SideMatcher, c: SideMatcher):
        self.entry_id = entry_id
        self.label = label
        self.s = s
        self.c = c
        self.s_size = s.cs.size()
        self.c_size = c.cs.size()

    def covers(self, s0: frozenset[Coords], c_translates: Sequence[frozenset[Coords]]) -> bool:
        # the code side is usually the cheaper filter
        if not any(self.c.matches(ct) for ct in c_translates):
            return False
        return self.s.matches(s0)


class CoverageIndex:
    """All matchers applicable to one concrete group, bucketed by pair
    sizes, with per-query caching of transformed pairs."""

    def __init__(self, group: Group, entries: Iterable[FamilySpecEntry] | None = None):
        self.group = group
        # (s_size or None, coprime_pool): matchers bucketed by sizes; derived
        # matchers have data-dependent sizes and live in the wildcard bucket
        self.buckets: dict[tuple[int, int], list] = {}
        self.wildcard: list = []
        self.has_row23_shape = False
        self.has_row25_shape = self._row25_shape(group)
        entries = table_catalog() if entries is None else entries
        for entry in entries:
            for perm, env in pattern_assignments(entry, group):
                pat_group = make_group([group.orders[p] for p in perm])
                transforms = scope_transforms(entry, group, perm)
                noncoprime = entry.regime == "noncoprime"
                if noncoprime:
                    self.has_row23_shape = True
                if entry.kind in ("row", "chain"):
                    for v in row_variants(entry, pat_group, env):
                        pm = PairMatcher(entry.entry_id, v.label, SideMatcher(v.s), SideMatcher(v.c))
                        key = (pm.s_size, pm.c_size)
                        self.buckets.setdefault(key, []).append((pm, transforms, noncoprime))
                else:
                    from .composed import derived_matchers

                    for dm in derived_matchers(entry, pat_group, env):
                        self.wildcard.append((dm, transforms, noncoprime))

    @staticmethod
    def _row25_shape(group: Group) -> bool:
        from .hajos import primary_exponents

        prim = primary_exponents(group.orders)
        return len(prim) >= 4 and all(v == [1] for v in prim.values())

    def covered_by(self, s0: GroupSubset, norm_code: GroupSubset, phase: str = "all") -> str | None:
        """Entry id reproducing (S0, normalized code), or None.

        phase "first" tries only each matcher's leading transform (the plain
        permutation); "rest" the remaining scope transforms; "all" both.
        """
        grp = self.group
        s0_f = frozenset(s0.elements)
        cts: list[frozenset[Coords]] = []
        seen = set()
        for c in norm_code:
            t = frozenset(grp.sub(x, c) for x in norm_code)
            if t not in seen:
                seen.add(t)
                cts.append(t)
        coprime = math.gcd(len(s0_f), len(norm_code)) == 1
        cache: dict[int, tuple[frozenset, list]] = {}

        def transformed(f):
            key = id(f)
            got = cache.get(key)
            if got is None:
                got = (frozenset(map(f, s0_f)), [frozenset(map(f, ct)) for ct in cts])
                cache[key] = got
            return got

        pool = list(self.buckets.get((len(s0_f), len(norm_code)), [])) + self.wildcard
        for pm, transforms, noncoprime in pool:
            if noncoprime and coprime:
                continue
            if phase == "first":
                transforms = transforms[:1]
            elif phase == "rest":
                transforms = transforms[1:]
            for f in transforms:
                ts0, tcts = transformed(f)
                if pm.covers(ts0, tcts):
                    return pm.entry_id
        return None

    def oracle_only(self, s0_size: int, code_size: int) -> bool:
        """True when the pair sizes fall in the regime delegated to the
        search oracle (coprime sizes on the multi-prime cyclic shapes)."""
        if self.has_row25_shape:
            return True
        return self.has_row23_shape and math.gcd(s0_size, code_size) == 1
