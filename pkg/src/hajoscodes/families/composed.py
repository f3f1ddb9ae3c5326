"""Derived families built by subgroup-quotient composition.

Every classification proof in scope reduces a factorization with a periodic
factor to a factorization of G/L plus lifting data.  Conversely, lifting any
quotient factorization with one side L-saturated is a factorization:

    G/L = X (+) Y   =>   G = (L (+) X^) (+) {y^ + l_y}   (any lifts l_y in L)

The derived entries enumerate canonical subgroups L (up to the entry's
generator-change scope) and delegate the quotient pair to the catalog
recursively.  They serve three group shapes whose explicit tables are
unavailable: Z_{p^3} x Z_2^2, Z_{p^2} x Z_2^3 and Z_4 x Z_4.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from ..groups import (
    Coords,
    Group,
    GroupSubset,
    Subgroup,
    make_group,
    quotient,
    subgroup_from_generators,
    subset,
)
from ..codes import normalize_code
from .catalog import FamilyInstance, FamilySpecEntry, pattern_orders

# ---------------------------------------------------------------------------
# prime-power coordinate refinement (CRT splitting)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Refinement:
    group: Group
    refined: Group
    # refined coordinate j comes from original coordinate src[j] with modulus
    # refined.orders[j]
    src: tuple[int, ...]

    def to_refined(self, x: Coords) -> Coords:
        return tuple(x[s] % m for s, m in zip(self.src, self.refined.orders))

    def from_refined(self, y: Coords) -> Coords:
        out = []
        pos = 0
        for c, n in enumerate(self.group.orders):
            parts = [(m, y[j]) for j, (s, m) in enumerate(zip(self.src, self.refined.orders)) if s == c]
            out.append(_crt_combine(parts) % n)
        return tuple(out)


def _crt_combine(parts: Sequence[tuple[int, int]]) -> int:
    x, m = 0, 1
    for mod, r in parts:
        g = math.gcd(m, mod)
        assert g == 1
        inv = pow(m % mod, -1, mod) if mod > 1 else 0
        x = x + m * ((r - x) * inv % mod)
        m *= mod
    return x


def refine_group(group: Group) -> Refinement:
    orders: list[int] = []
    src: list[int] = []
    for c, n in enumerate(group.orders):
        if n == 1:
            orders.append(1)
            src.append(c)
            continue
        m = n
        d = 2
        while d * d <= m:
            if m % d == 0:
                pe = 1
                while m % d == 0:
                    m //= d
                    pe *= d
                orders.append(pe)
                src.append(c)
            d += 1
        if m > 1:
            orders.append(m)
            src.append(c)
    return Refinement(group, make_group(orders), tuple(src))


# ---------------------------------------------------------------------------
# composition context: one canonical subgroup of the shape's pattern group
# ---------------------------------------------------------------------------


@dataclass
class Context:
    label: str
    group: Group
    sub: Subgroup
    q: "object"  # QuotientGroup
    ref: Refinement
    inner_cov: "object | None"  # CoverageIndex on the refined quotient

    def project(self, x: Coords) -> Coords:
        return self.ref.to_refined(self.q.iso_index(self.q.project(x)))

    def section(self, y: Coords) -> Coords:
        return self.q.reps[self.q.from_iso(self.ref.from_refined(y))]


def _canonical_subgroups(entry: FamilySpecEntry, group: Group) -> list[tuple[str, list[Coords]]]:
    if entry.entry_id == "z44":
        return [
            ("L=<(2,0)>", [(2, 0)]),
            ("L=<(1,0)>", [(1, 0)]),
            ("L=<(2,0),(0,2)>", [(2, 0), (0, 2)]),
            ("L=<(1,0),(0,2)>", [(1, 0), (0, 2)]),
        ]
    # Z_{p^e} x Z_2^l shapes: coprime parts, so L = <p^a e0> x <e1..ew>
    n0 = group.orders[0]
    p = _smallest_prime_factor(n0)
    k = 0
    m = n0
    while m > 1:
        m //= p
        k += 1
    twos = group.rank - 1
    out = []
    for a in range(k + 1):
        for w in range(twos + 1):
            size = p ** (k - a) * 2**w
            if size in (1, group.cardinality):
                continue
            gens: list[Coords] = []
            if a < k:
                gens.append(tuple([p**a] + [0] * twos))
            for j in range(w):
                e = [0] * group.rank
                e[1 + j] = 1
                gens.append(tuple(e))
            out.append((f"L=p^{a}x2^{w}", gens))
    return out


def _smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


@lru_cache(maxsize=64)
def _contexts(entry_id: str, orders: tuple[int, ...]) -> tuple[Context, ...]:
    from .catalog import entry_by_id, table_catalog
    from .match import CoverageIndex

    entry = entry_by_id(entry_id)
    group = make_group(orders)
    out = []
    for label, gens in _canonical_subgroups(entry, group):
        sub = subgroup_from_generators(group, gens)
        q = quotient(group, sub)
        ref = refine_group(q.as_group())
        inner = None
        if ref.refined.cardinality > 1:
            inner = CoverageIndex(ref.refined)
            if not inner.matchers and not inner.noncoprime_only:
                inner = None
        out.append(Context(label, group, sub, q, ref, inner))
    return tuple(out)


# ---------------------------------------------------------------------------
# matchers
# ---------------------------------------------------------------------------


class CosetMatcher:
    """C is exactly the subgroup L; S0 is any transversal of its cosets."""

    def __init__(self, entry_id: str, ctx: Context):
        self.entry_id = entry_id
        self.ctx = ctx
        self.carrier = frozenset(ctx.sub.carrier.elements)

    def covers(self, s0: frozenset[Coords], c_translates) -> bool:
        if len(c_translates[0]) != len(self.carrier):
            return False
        if self.carrier not in c_translates:
            return False
        q = self.ctx.q
        if len(s0) * len(self.carrier) != self.ctx.group.cardinality:
            return False
        return len({q.project(x) for x in s0}) == len(s0)


class ComposedMatcher:
    """Lift of a quotient factorization: one side L-saturated, the other side
    projecting injectively, with the projected pair covered recursively."""

    def __init__(self, entry_id: str, ctx: Context, saturated_side: str):
        self.entry_id = entry_id
        self.ctx = ctx
        self.saturated_side = saturated_side  # "s" or "c"

    def _saturated(self, xs: frozenset[Coords]) -> bool:
        grp = self.ctx.group
        for g in self.ctx.sub.carrier:
            if frozenset(grp.add(x, g) for x in xs) != xs:
                return False
        return True

    def covers(self, s0: frozenset[Coords], c_translates) -> bool:
        ctx = self.ctx
        if ctx.inner_cov is None:
            return False
        lsize = len(ctx.sub.carrier)
        c0 = c_translates[0]
        if self.saturated_side == "s":
            if len(s0) % lsize or not self._saturated(s0):
                return False
            inner_s = subset(ctx.ref.refined, {ctx.project(x) for x in s0})
            if len(inner_s) * lsize != len(s0):
                return False
            for ct in c_translates:
                proj = {ctx.project(x) for x in ct}
                if len(proj) != len(ct):
                    continue
                inner_c = subset(ctx.ref.refined, proj)
                norm, _ = normalize_code(inner_c)
                if ctx.inner_cov.covered_by(inner_s, norm) is not None:
                    return True
            return False
        # code side saturated
        if len(c0) % lsize:
            return False
        sat = next((ct for ct in c_translates if self._saturated(ct)), None)
        if sat is None:
            return False
        proj_s = {ctx.project(x) for x in s0}
        if len(proj_s) != len(s0):
            return False
        inner_s = subset(ctx.ref.refined, proj_s)
        inner_c = subset(ctx.ref.refined, {ctx.project(x) for x in sat})
        if len(inner_c) * lsize != len(c0):
            return False
        norm, _ = normalize_code(inner_c)
        return ctx.inner_cov.covered_by(inner_s, norm) is not None


def derived_matchers(entry: FamilySpecEntry, pat_group: Group, env: dict) -> list:
    out: list = []
    for ctx in _contexts(entry.entry_id, pat_group.orders):
        out.append(CosetMatcher(entry.entry_id, ctx))
        if ctx.inner_cov is not None:
            out.append(ComposedMatcher(entry.entry_id, ctx, "s"))
            out.append(ComposedMatcher(entry.entry_id, ctx, "c"))
    return out


# ---------------------------------------------------------------------------
# sampling and replayable instantiation
# ---------------------------------------------------------------------------


def _sample_inner_pair(ctx: Context, rng: random.Random):
    """Random (entry_id, assignment-blob, S-set, C-set) on the refined
    quotient, drawn from catalog entries applicable there."""
    from .catalog import _tables_from_values, pattern_assignments, row_variants, table_catalog

    refined = ctx.ref.refined
    options = []
    for entry in table_catalog():
        if entry.kind == "derived":
            continue
        for perm, env in pattern_assignments(entry, refined):
            options.append((entry, perm, env))
    if not options:
        return None
    entry, perm, env = rng.choice(options)
    pat_group = make_group([refined.orders[p] for p in perm])
    variants = row_variants(entry, pat_group, env)
    variant = rng.choice(variants)
    for _ in range(50):
        s_vals = variant.s.sample_values(rng)
        c_vals = variant.c.sample_values(rng)
        try:
            s_set = variant.s.evaluate(s_vals)
            c_set = variant.c.evaluate(c_vals)
            break
        except ValueError:
            continue
    else:
        return None

    def unpermute(x: Coords) -> Coords:
        y = [0] * refined.rank
        for i, v in enumerate(x):
            y[perm[i]] = v
        return tuple(y)

    blob = {
        "entry": entry.entry_id,
        "perm": list(perm),
        "primes": env,
        "variant": variant.label,
        "s_tables": _tables_from_values(variant.s, s_vals),
        "c_tables": _tables_from_values(variant.c, c_vals),
    }
    return blob, [unpermute(x) for x in s_set], [unpermute(x) for x in c_set]


def _lift_pair(ctx: Context, mode: str, inner_s, inner_c, rng: random.Random):
    grp = ctx.group
    carrier = list(ctx.sub.carrier)
    if mode == "s":
        s0 = {grp.add(ctx.section(x), l) for x in inner_s for l in carrier}
        lifts = {}
        c = set()
        for y in sorted(inner_c):
            l = grp.zero() if all(v == 0 for v in y) else rng.choice(carrier)
            lifts[",".join(map(str, y))] = list(l)
            c.add(grp.add(ctx.section(y), l))
        return s0, c, lifts
    s0 = set()
    lifts = {}
    for x in sorted(inner_s):
        l = grp.zero() if all(v == 0 for v in x) else rng.choice(carrier)
        lifts[",".join(map(str, x))] = list(l)
        s0.add(grp.add(ctx.section(x), l))
    c = {grp.add(ctx.section(y), l) for y in inner_c for l in carrier}
    return s0, c, lifts


def random_derived_instance(entry: FamilySpecEntry, env: dict, rng: random.Random, checked: bool) -> FamilyInstance:
    from .catalog import _verify_instance

    group = make_group(pattern_orders(entry, env))
    contexts = [c for c in _contexts(entry.entry_id, group.orders)]
    rng.shuffle(contexts)
    for ctx in contexts:
        mode = rng.choice(["s", "c", "coset"])
        if mode == "coset":
            carrier = list(ctx.sub.carrier)
            s0 = set()
            lifts = {}
            for i, rep in enumerate(ctx.q.reps):
                l = ctx.group.zero() if ctx.q.project(rep) == ctx.q.project(ctx.group.zero()) else rng.choice(carrier)
                lifts[str(i)] = list(l)
                s0.add(ctx.group.add(rep, l))
            c = set(ctx.sub.carrier.elements)
            blob = {"primes": env, "mode": "coset", "context": ctx.label, "lifts": lifts}
        else:
            if ctx.inner_cov is None:
                continue
            got = _sample_inner_pair(ctx, rng)
            if got is None:
                continue
            inner_blob, inner_s, inner_c = got
            s0, c, lifts = _lift_pair(ctx, mode, inner_s, inner_c, rng)
            blob = {
                "primes": env,
                "mode": mode,
                "context": ctx.label,
                "inner": inner_blob,
                "lifts": lifts,
            }
        inst = FamilyInstance(entry.entry_id, group, blob, subset(group, s0), subset(group, c))
        if checked:
            _verify_instance(inst)
        return inst
    raise AssertionError(f"no composable context for {entry.entry_id} at {env}")


def instantiate_derived(entry: FamilySpecEntry, assignment: dict, checked: bool) -> FamilyInstance:
    from .catalog import _values_from_tables, _verify_instance, entry_by_id, row_variants

    env = dict(assignment["primes"])
    group = make_group(pattern_orders(entry, env))
    ctx = next(c for c in _contexts(entry.entry_id, group.orders) if c.label == assignment["context"])
    mode = assignment["mode"]
    if mode == "coset":
        carrier = set(ctx.sub.carrier.elements)
        s0 = set()
        for i, rep in enumerate(ctx.q.reps):
            l = tuple(assignment["lifts"][str(i)])
            if l not in carrier:
                raise ValueError(f"lift {l} not in the subgroup")
            s0.add(ctx.group.add(rep, l))
        c = carrier
    else:
        inner_blob = assignment["inner"]
        inner_entry = entry_by_id(inner_blob["entry"])
        perm = tuple(inner_blob["perm"])
        refined = ctx.ref.refined
        pat_group = make_group([refined.orders[p] for p in perm])
        variants = row_variants(inner_entry, pat_group, inner_blob["primes"])
        variant = next(v for v in variants if v.label == inner_blob["variant"])
        s_set = variant.s.evaluate(_values_from_tables(variant.s, _parse_tables(inner_blob["s_tables"])))
        c_set = variant.c.evaluate(_values_from_tables(variant.c, _parse_tables(inner_blob["c_tables"])))

        def unpermute(x: Coords) -> Coords:
            y = [0] * refined.rank
            for i, v in enumerate(x):
                y[perm[i]] = v
            return tuple(y)

        inner_s = [unpermute(x) for x in s_set]
        inner_c = [unpermute(x) for x in c_set]
        lifts = {k: tuple(v) for k, v in assignment["lifts"].items()}
        grp = ctx.group
        carrier = list(ctx.sub.carrier)
        if mode == "s":
            s0 = {grp.add(ctx.section(x), l) for x in inner_s for l in carrier}
            c = {
                grp.add(ctx.section(y), lifts[",".join(map(str, y))])
                for y in inner_c
            }
        else:
            s0 = {
                grp.add(ctx.section(x), lifts[",".join(map(str, x))])
                for x in inner_s
            }
            c = {grp.add(ctx.section(y), l) for y in inner_c for l in carrier}
    inst = FamilyInstance(entry.entry_id, group, assignment, subset(group, s0), subset(group, c))
    if checked:
        _verify_instance(inst)
    return inst


def _parse_tables(tables: dict) -> dict:
    out: dict[str, dict] = {}
    for name, cells in tables.items():
        out[name] = {tuple(int(x) for x in k.split(",") if x != ""): v for k, v in cells.items()}
    return out
