"""The family catalog: every constructive (S0, C) family, addressable by
entry id, with instantiation, random sampling, and JSON export."""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import permutations
from typing import Iterator, Sequence

from ..groups import Coords, Group, GroupSubset, make_group, subset
from ..codes import CayleySpec, cayley, is_perfect_code
from . import _table_data
from .expr import CompiledSide, Side, compile_side, side, sym_eval
from .recursive import ChainVariant, chain_variants

CATALOG_VERSION = "1"
_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)

CHAIN_PATTERNS = {
    "zpk": ("p^k",),
    "zpkq": ("p^k", "q"),
    "z2k2": ("2^k", 2),
}
DERIVED_SHAPES = {
    "zp3z22": (("p^3", 2, 2), ("odd(p)",), ("gl", (1, 2), 2)),
    "zp2z222": (("p^2", 2, 2, 2), ("odd(p)",), ("gl", (1, 2, 3), 2)),
    "z44": ((4, 4), (), ("aut",)),
}


@dataclass(frozen=True)
class FamilySpecEntry:
    entry_id: str
    kind: str  # "row" | "chain" | "derived"
    group_pattern: tuple
    conditions: tuple[str, ...]
    aut_scope: tuple | None
    provenance: str  # "primary" | "derived"
    repaired: bool = False
    regime: str = "all"  # "all" | "noncoprime"
    s_spec: dict | None = None
    c_spec: dict | None = None

    def to_json(self) -> dict:
        out = {
            "id": self.entry_id,
            "kind": self.kind,
            "group": list(self.group_pattern),
            "conditions": list(self.conditions),
            "aut_scope": list(self.aut_scope) if self.aut_scope else None,
            "provenance": self.provenance,
            "repaired": self.repaired,
            "regime": self.regime,
        }
        if self.s_spec is not None:
            out["s0"] = self.s_spec
            out["c"] = self.c_spec
        return out


def _row_entry(row: dict) -> FamilySpecEntry:
    table = row["table"]
    pattern, table_conds, aut = _table_data.TABLE_META[table]
    return FamilySpecEntry(
        entry_id=f"{table}:{row['row']}",
        kind="row",
        group_pattern=tuple(pattern),
        conditions=tuple(table_conds) + tuple(row["conds"]),
        aut_scope=aut,
        provenance="primary",
        repaired=row["repaired"],
        regime="noncoprime" if table in _table_data.NONCOPRIME_TABLES else "all",
        s_spec=row["s"],
        c_spec=row["c"],
    )


@lru_cache(maxsize=1)
def table_catalog() -> tuple[FamilySpecEntry, ...]:
    """The complete machine-readable catalog, static rows first."""
    entries = [_row_entry(row) for row in _table_data.ROWS]
    for kind, pattern in CHAIN_PATTERNS.items():
        entries.append(
            FamilySpecEntry(
                entry_id=kind,
                kind="chain",
                group_pattern=pattern,
                conditions=() if kind != "zpkq" else ("p!=q",),
                aut_scope=None,
                provenance="primary",
            )
        )
    for name, (pattern, conds, aut) in DERIVED_SHAPES.items():
        entries.append(
            FamilySpecEntry(
                entry_id=name,
                kind="derived",
                group_pattern=pattern,
                conditions=conds,
                aut_scope=aut,
                provenance="derived",
            )
        )
    return tuple(entries)


def entry_by_id(entry_id: str) -> FamilySpecEntry:
    for e in table_catalog():
        if e.entry_id == entry_id:
            return e
    raise KeyError(f"no catalog entry {entry_id!r}")


def catalog_json() -> dict:
    return {
        "schema_version": 1,
        "catalog_version": CATALOG_VERSION,
        "entries": [e.to_json() for e in table_catalog()],
    }


def packaged_catalog_json() -> dict:
    text = resources.files("hajoscodes.families").joinpath("catalog.json").read_text()
    return json.loads(text)


# ---------------------------------------------------------------------------
# symbolic pattern machinery
# ---------------------------------------------------------------------------


def _pattern_atom(atom) -> tuple[str | int, int | str]:
    """(base symbol or literal prime, exponent); exponent "k" is free."""
    if isinstance(atom, int):
        return atom, 1
    if "^" in atom:
        base, exp = atom.split("^")
        return (int(base) if base.isdigit() else base), (exp if exp == "k" else int(exp))
    return atom, 1


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def _cond_ok(conds: Sequence[str], env: dict[str, int]) -> bool:
    ns = {**env, "odd": lambda x: x % 2 == 1}
    return all(eval(c, {"__builtins__": {}}, ns) for c in conds)  # noqa: S307 - trusted catalog data


def check_assignment(entry: FamilySpecEntry, env: dict[str, int]) -> None:
    """Validate primality, distinctness and the entry's side conditions."""
    for sym, val in env.items():
        if sym in "pqrs" and not _is_prime(val):
            raise ValueError(f"{sym}={val} is not prime")
    syms = [s for s in env if s in "pqrs"]
    if len({env[s] for s in syms}) != len(syms):
        raise ValueError(f"prime symbols must be distinct, got {env}")
    literals = {a for a, _ in map(_pattern_atom, entry.group_pattern) if isinstance(a, int)}
    lit_primes = {x for lit in literals for x in _prime_factors(lit)}
    for s in syms:
        if env[s] in lit_primes:
            raise ValueError(f"{s}={env[s]} collides with a literal prime in {entry.entry_id}")
    if not _cond_ok(entry.conditions, env):
        raise ValueError(f"assignment {env} violates conditions {entry.conditions}")


def _prime_factors(n: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def pattern_orders(entry: FamilySpecEntry, env: dict[str, int]) -> tuple[int, ...]:
    out = []
    for atom in entry.group_pattern:
        base, exp = _pattern_atom(atom)
        b = base if isinstance(base, int) else env[base]
        e = env["k"] if exp == "k" else exp
        out.append(b**e)
    return tuple(out)


def pattern_assignments(entry: FamilySpecEntry, group: Group) -> Iterator[tuple[tuple[int, ...], dict[str, int]]]:
    """(coordinate permutation, prime env) pairs matching `group`.

    perm[i] is the group coordinate providing pattern coordinate i.
    """
    pattern = entry.group_pattern
    if len(pattern) != group.rank:
        return
    seen = set()
    for perm in permutations(range(group.rank)):
        env: dict[str, int] = {}
        ok = True
        for i, atom in enumerate(pattern):
            n = group.orders[perm[i]]
            base, exp = _pattern_atom(atom)
            if isinstance(base, int):
                if exp == "k":
                    if n < base or not _is_power_of(n, base):
                        ok = False
                        break
                    env["k"] = _log(n, base)
                elif n != base**exp:
                    ok = False
                    break
                continue
            if exp == "k":
                root = None
                for cand in _prime_factors(n):
                    if _is_power_of(n, cand):
                        root = cand
                if root is None:
                    ok = False
                    break
                if env.get(base, root) != root or env.get("k", _log(n, root)) != _log(n, root):
                    ok = False
                    break
                env[base] = root
                env["k"] = _log(n, root)
                continue
            root = _exact_root(n, exp)
            if root is None or not _is_prime(root):
                ok = False
                break
            if env.get(base, root) != root:
                ok = False
                break
            env[base] = root
        if not ok:
            continue
        try:
            check_assignment(entry, env)
        except ValueError:
            continue
        key = (perm, tuple(sorted(env.items())))
        if key in seen:
            continue
        seen.add(key)
        yield perm, env


def _is_power_of(n: int, b: int) -> bool:
    while n % b == 0:
        n //= b
    return n == 1


def _log(n: int, b: int) -> int:
    e = 0
    while n > 1:
        n //= b
        e += 1
    return e


def _exact_root(n: int, e: int) -> int | None:
    r = round(n ** (1 / e))
    for cand in (r - 1, r, r + 1):
        if cand >= 1 and cand**e == n:
            return cand
    return None


# ---------------------------------------------------------------------------
# enumeration-domain truncation (digit absorption)
# ---------------------------------------------------------------------------


def apply_digit_truncation(cs: CompiledSide) -> None:
    """Shrink enumeration domains where a strictly higher digit term absorbs
    the table's excess (the absorbing term must occur nowhere else)."""
    term_occurrences: dict[tuple, int] = {}
    for terms in cs.coord_terms:
        for term in terms:
            if term[0] == "index":
                term_occurrences[("i", term[1])] = term_occurrences.get(("i", term[1]), 0) + 1
            elif term[0] == "table":
                term_occurrences[("t", term[1])] = term_occurrences.get(("t", term[1]), 0) + 1

    trunc: dict[str, int] = {}
    for c, terms in enumerate(cs.coord_terms):
        n = cs.group.orders[c]
        for term in terms:
            if term[0] != "table":
                continue
            name, k = term[1], term[2] % n
            if k == 0:
                continue
            full = n // math.gcd(k, n)
            best = full
            for other in terms:
                if other is term or other[0] == "const":
                    continue
                ko = other[2] % n
                if ko <= k or ko % k:
                    continue
                if other[0] == "index":
                    if term_occurrences[("i", other[1])] != 1:
                        continue
                    span = ko * cs.ranges[other[1]]
                else:
                    if term_occurrences[("t", other[1])] != 1:
                        continue
                    if not set(cs.table_keypos[name]) <= set(cs.table_keypos[other[1]]):
                        continue
                    span = ko  # conservative: only trust one step
                best = min(best, ko // k)
            cur = trunc.get(name, 1)
            trunc[name] = math.lcm(cur, best)
    for i, (name, _key) in enumerate(cs.cells):
        if name in trunc:
            t = trunc[name]
            if cs.cell_enum_domain[i] % t == 0:
                cs.cell_enum_domain[i] = t


# ---------------------------------------------------------------------------
# variants: a concrete (group, prime env) binding of an entry
# ---------------------------------------------------------------------------


@dataclass
class RowVariant:
    entry: FamilySpecEntry
    label: str
    s: CompiledSide
    c: CompiledSide


def _compile_row(entry: FamilySpecEntry, group: Group, env: dict[str, int]) -> RowVariant:
    s = compile_spec_side(entry.s_spec, group, env)
    c = compile_spec_side(entry.c_spec, group, env)
    return RowVariant(entry, "", s, c)


def compile_spec_side(spec: dict, group: Group, env: dict[str, int]) -> CompiledSide:
    sd = side(
        [(n, r if isinstance(r, str) else str(r)) for n, r in spec["indices"]],
        spec["coords"],
    )
    cs = compile_side(sd, group, env)
    apply_digit_truncation(cs)
    return cs


def row_variants(entry: FamilySpecEntry, group: Group, env: dict[str, int]) -> list[RowVariant]:
    """Concrete variants of an entry on a pattern-ordered group."""
    if entry.kind == "row":
        return [_compile_row(entry, group, env)]
    if entry.kind == "chain":
        p = 2 if entry.entry_id == "z2k2" else env["p"]
        q = None
        if entry.entry_id == "zpkq":
            q = env["q"]
        elif entry.entry_id == "z2k2":
            q = 2
        out = []
        for v in chain_variants(entry.entry_id, p, env["k"], q):
            s = compile_side(v.s_side, group, {})
            c = compile_side(v.c_side, group, {})
            apply_digit_truncation(s)
            apply_digit_truncation(c)
            out.append(RowVariant(entry, v.label, s, c))
        return out
    raise ValueError(f"entry {entry.entry_id} has no row variants")


# ---------------------------------------------------------------------------
# instantiation and sampling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyInstance:
    entry_id: str
    group: Group
    assignment: dict
    s0: GroupSubset
    c: GroupSubset

    def spec(self) -> CayleySpec:
        return cayley(self.group, [e for e in self.s0 if e != self.group.zero()])

    def to_json(self) -> dict:
        return {
            "entry": self.entry_id,
            "group": {"orders": list(self.group.orders)},
            "assignment": self.assignment,
            "s0": [list(e) for e in self.s0],
            "c": [list(e) for e in self.c],
        }


def _values_from_tables(cs: CompiledSide, tables: dict) -> list[int]:
    values = [0] * len(cs.cells)
    for i, (name, key) in enumerate(cs.cells):
        tab = tables.get(name, {})
        v = tab.get(key, tab.get(",".join(map(str, key)), 0))
        if cs.pinned[i] and v % max(cs.cell_domain[i], 1) != 0:
            raise ValueError(f"table {name} must vanish at the all-zero key")
        values[i] = v % max(cs.cell_domain[i], 1)
    return values


def _tables_from_values(cs: CompiledSide, values: Sequence[int]) -> dict:
    out: dict[str, dict[str, int]] = {}
    for i, (name, key) in enumerate(cs.cells):
        out.setdefault(name, {})[",".join(map(str, key))] = values[i]
    return out


def instantiate(entry: FamilySpecEntry | str, assignment: dict, checked: bool = True) -> FamilyInstance:
    """Evaluate an entry at a concrete assignment.

    assignment = {"primes": {...}, "variant": label (chain entries),
                  "s_tables": {...}, "c_tables": {...}} plus derived-entry
    fields; in checked mode the result is verified to factorize.
    """
    if isinstance(entry, str):
        entry = entry_by_id(entry)
    env = dict(assignment.get("primes", {}))
    check_assignment(entry, env)
    if entry.kind == "derived":
        from .composed import instantiate_derived

        return instantiate_derived(entry, assignment, checked)
    group = make_group(pattern_orders(entry, env))
    variants = row_variants(entry, group, env)
    if entry.kind == "chain":
        label = assignment.get("variant")
        picked = [v for v in variants if v.label == label]
        if not picked:
            raise ValueError(f"unknown structural variant {label!r} for {entry.entry_id}")
        variant = picked[0]
    else:
        variant = variants[0]
    s_vals = _values_from_tables(variant.s, assignment.get("s_tables", {}))
    c_vals = _values_from_tables(variant.c, assignment.get("c_tables", {}))
    s0 = subset(group, variant.s.evaluate(s_vals))
    c = subset(group, variant.c.evaluate(c_vals))
    inst = FamilyInstance(entry.entry_id, group, assignment, s0, c)
    if checked:
        _verify_instance(inst)
    return inst


def _verify_instance(inst: FamilyInstance) -> None:
    cert = is_perfect_code(inst.spec(), inst.c, "both")
    if not cert:
        raise AssertionError(
            f"instance of {inst.entry_id} failed verification at {inst.assignment}"
        )


def admissible_assignments(entry: FamilySpecEntry, budget: int, cap: int = 4000) -> list[dict[str, int]]:
    """Prime/exponent assignments with group order within budget."""
    syms = sorted({b for b, _ in map(_pattern_atom, entry.group_pattern) if isinstance(b, str) and b != "k"})
    has_k = any(e == "k" for _, e in map(_pattern_atom, entry.group_pattern))
    pool = [p for p in _PRIMES if p <= budget]
    out: list[dict[str, int]] = []

    def rec(i: int, env: dict[str, int]):
        if len(out) >= cap:
            return
        if i == len(syms):
            ks = range(1, budget.bit_length() + 2) if has_k else [None]
            for k in ks:
                e = dict(env)
                if k is not None:
                    e["k"] = k
                try:
                    check_assignment(entry, e)
                    if math.prod(pattern_orders(entry, e)) <= budget:
                        out.append(e)
                except (ValueError, KeyError, OverflowError):
                    continue
            return
        for p in pool:
            if p in env.values():
                continue
            rec(i + 1, {**env, syms[i]: p})

    rec(0, {})
    return out


def sample_primes(entry: FamilySpecEntry, rng: random.Random, budget: int) -> dict[str, int] | None:
    """A uniformly chosen admissible assignment within budget, or None."""
    options = admissible_assignments(entry, budget)
    if not options:
        return None
    return rng.choice(options)


def random_instance(entry_id: str, seed: int, size_budget: int = 512, checked: bool = True) -> FamilyInstance:
    """Reproducible random instance of a catalog entry within a group-order
    budget."""
    entry = entry_by_id(entry_id)
    rng = random.Random(seed)
    env = sample_primes(entry, rng, size_budget)
    if env is None:
        raise ValueError(f"no admissible assignment for {entry_id} within budget {size_budget}")
    if entry.kind == "derived":
        from .composed import random_derived_instance

        return random_derived_instance(entry, env, rng, checked)
    group = make_group(pattern_orders(entry, env))
    variants = row_variants(entry, group, env)
    variant = rng.choice(variants)
    s_vals = variant.s.sample_values(rng)
    c_vals = variant.c.sample_values(rng)
    # resample on the (rare) degenerate assignments that collapse elements
    for _ in range(50):
        try:
            s0 = subset(group, variant.s.evaluate(s_vals))
            c = subset(group, variant.c.evaluate(c_vals))
            break
        except ValueError:
            s_vals = variant.s.sample_values(rng)
            c_vals = variant.c.sample_values(rng)
    else:
        raise AssertionError(f"could not sample a valid instance of {entry_id}")
    assignment = {
        "primes": env,
        "variant": variant.label,
        "s_tables": _tables_from_values(variant.s, s_vals),
        "c_tables": _tables_from_values(variant.c, c_vals),
    }
    inst = FamilyInstance(entry.entry_id, group, assignment, s0, c)
    if checked:
        _verify_instance(inst)
    return inst
