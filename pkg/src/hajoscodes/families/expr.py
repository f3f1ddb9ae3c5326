"""Set-expression DSL for the constructive families.

A side (the connection-set side or the code side) is a family of subsets of a
group: index variables range over symbolic intervals, parameter tables map
index-tuples to residues, and each coordinate is a sum of terms
``coefficient * atom`` where the atom is an index variable, a table lookup, or
1.  Coefficients and ranges are symbolic products of prime symbols, integer
literals, and powers such as ``p^2``.

Compiled against a concrete group this supports: evaluating an assignment to
a subset, sampling assignments, exhaustively enumerating assignments (with
optionally truncated table domains), and decoding, i.e. deciding whether a
given subset belongs to the family and recovering a witness assignment.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from ..groups import Coords, Group


def sym_eval(expr: str | int, env: dict[str, int]) -> int:
    """Evaluate a symbolic product like ``p^2*q`` or ``4``."""
    if isinstance(expr, int):
        return expr
    total = 1
    for part in expr.split("*"):
        part = part.strip()
        if "^" in part:
            base, exp = part.split("^")
            total *= _atom(base.strip(), env) ** int(exp)
        else:
            total *= _atom(part, env)
    return total


def _atom(tok: str, env: dict[str, int]) -> int:
    if tok.isdigit():
        return int(tok)
    if tok in env:
        return env[tok]
    raise KeyError(f"unbound symbol {tok!r}")


@dataclass(frozen=True)
class Term:
    coeff: str  # symbolic product
    kind: str  # "index" | "table" | "const"
    name: str = ""
    key: tuple[str, ...] = ()


def parse_coord(expr: str) -> tuple[Term, ...]:
    terms = []
    for raw in expr.split("+"):
        raw = raw.strip()
        if not raw or raw == "0":
            continue
        factors = [f.strip() for f in raw.split("*")]
        coeffs: list[str] = []
        atom: Term | None = None
        for f in factors:
            m = re.fullmatch(r"([A-Z]\w*)\[([^\]]*)\]", f)
            if m:
                if atom is not None:
                    raise ValueError(f"two atoms in term {raw!r}")
                key = tuple(k.strip() for k in m.group(2).split(",") if k.strip())
                atom = Term("", "table", m.group(1), key)
            else:
                coeffs.append(f)
        coeff = "*".join(coeffs) if coeffs else "1"
        if atom is None:
            terms.append(Term(coeff, "const"))
        else:
            terms.append(Term(coeff, atom.kind, atom.name, atom.key))
    return tuple(terms)


@dataclass(frozen=True)
class Side:
    """One parsed family side: ordered index vars, coordinate expressions."""

    indices: tuple[tuple[str, str], ...]  # (name, symbolic range)
    coords: tuple[tuple[Term, ...], ...]
    # table name -> (key var names, optional explicit symbolic domain)
    tables: dict[str, tuple[tuple[str, ...], str | None]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        index_names = {n for n, _ in self.indices}
        tables: dict[str, tuple[tuple[str, ...], str | None]] = dict(self.tables)
        fixed_coords = []
        for coord in self.coords:
            fixed = []
            for t in coord:
                if t.kind == "const":
                    # a "const" whose factors mention an index var is really
                    # coefficient * index
                    parts = t.coeff.split("*")
                    ivars = [p for p in parts if p in index_names]
                    if len(ivars) > 1:
                        raise ValueError(f"two index vars multiplied in {t.coeff!r}")
                    if ivars:
                        rest = [p for p in parts if p != ivars[0]] or ["1"]
                        fixed.append(Term("*".join(rest), "index", ivars[0]))
                        continue
                if t.kind == "table":
                    bad = [k for k in t.key if k not in index_names]
                    if bad:
                        raise ValueError(f"table {t.name} keyed by unknown {bad}")
                    known = tables.get(t.name)
                    if known is not None and known[0] != t.key:
                        raise ValueError(f"table {t.name} used with differing keys")
                    if known is None:
                        tables[t.name] = (t.key, None)
                fixed.append(t)
            fixed_coords.append(tuple(fixed))
        object.__setattr__(self, "coords", tuple(fixed_coords))
        object.__setattr__(self, "tables", tables)


def side(
    indices: Sequence[tuple[str, str]],
    coords: Sequence[str],
    domains: dict[str, str] | None = None,
) -> Side:
    parsed = tuple(parse_coord(c) for c in coords)
    s = Side(tuple(indices), parsed)
    if domains:
        tabs = dict(s.tables)
        for name, dom in domains.items():
            key, _ = tabs[name]
            tabs[name] = (key, dom)
        object.__setattr__(s, "tables", tabs)
    return s


@dataclass
class CompiledSide:
    """A side bound to a concrete group and prime assignment."""

    group: Group
    index_names: tuple[str, ...]
    ranges: tuple[int, ...]
    cells: list[tuple[str, tuple[int, ...]]]
    cell_index: dict[tuple[str, tuple[int, ...]], int]
    cell_domain: list[int]  # sampling domain (full reduced)
    cell_enum_domain: list[int]  # enumeration domain (possibly truncated)
    pinned: list[bool]
    # per coordinate, terms: ("const", value) | ("index", var_pos, coeff)
    #                      | ("table", name, coeff)
    coord_terms: list[list[tuple]]
    table_keypos: dict[str, tuple[int, ...]]

    # -- evaluation ---------------------------------------------------------

    def index_tuples(self) -> Iterator[tuple[int, ...]]:
        return product(*(range(r) for r in self.ranges))

    def size(self) -> int:
        return math.prod(self.ranges)

    def cell_of(self, table: str, idx: Sequence[int]) -> int:
        key = tuple(idx[p] for p in self.table_keypos[table])
        return self.cell_index[(table, key)]

    def element(self, idx: tuple[int, ...], values: Sequence[int]) -> Coords:
        orders = self.group.orders
        out = []
        for c, terms in enumerate(self.coord_terms):
            acc = 0
            for term in terms:
                kind = term[0]
                if kind == "index":
                    acc += term[2] * idx[term[1]]
                elif kind == "table":
                    acc += term[2] * values[self.cell_of(term[1], idx)]
                else:
                    acc += term[1]
            out.append(acc % orders[c])
        return tuple(out)

    def evaluate(self, values: Sequence[int]) -> tuple[Coords, ...]:
        """Evaluate to a set; duplicate elements are a hard error."""
        elems = [self.element(idx, values) for idx in self.index_tuples()]
        if len(set(elems)) != len(elems):
            raise ValueError(
                "family evaluated with duplicate elements; invalid assignment"
            )
        return tuple(sorted(elems))

    def sample_values(self, rng) -> list[int]:
        return [
            0 if self.pinned[i] else rng.randrange(self.cell_domain[i])
            for i in range(len(self.cells))
        ]

    def assignment_count(self, enum: bool = True) -> int:
        doms = self.cell_enum_domain if enum else self.cell_domain
        return math.prod(1 if self.pinned[i] else doms[i] for i in range(len(self.cells)))

    def enumerate_values(self, cap: int | None = None) -> Iterator[list[int]]:
        if cap is not None and self.assignment_count() > cap:
            raise ValueError(
                f"family has {self.assignment_count()} assignments, above cap {cap}"
            )
        doms = [
            1 if self.pinned[i] else self.cell_enum_domain[i]
            for i in range(len(self.cells))
        ]
        for combo in product(*(range(d) for d in doms)):
            yield list(combo)

    def enumerate_sets(self, cap: int | None = None) -> Iterator[tuple[Coords, ...]]:
        seen = set()
        for values in self.enumerate_values(cap):
            try:
                s = self.evaluate(values)
            except ValueError:
                continue
            if s not in seen:
                seen.add(s)
                yield s

    # -- decoding -----------------------------------------------------------

    def decode(self, target: frozenset[Coords]) -> list[int] | None:
        """Return an assignment reproducing `target`, or None.

        Runs a precomputed digit-extraction schedule per element, merges
        table-cell knowledge across elements (CRT + consistency), and always
        re-evaluates the candidate, so a non-None result is correct.  A None
        can in principle be a false negative only for sides without a valid
        schedule; those fall back to exhaustive scanning.
        """
        if len(target) != self.size():
            return None
        sched = self._schedule()
        if sched is None:
            return self._decode_bruteforce(target)

        partial: dict[int, tuple[int, int]] = {}  # cell -> (residue, modulus)
        used: set[tuple[int, ...]] = set()
        for x in sorted(target):
            got = self._decode_element(x, sched, partial)
            if got is None:
                return None
            idx, pend = got
            if idx in used:
                return None
            used.add(idx)
            for cell, v, m in pend:
                if m <= 1:
                    continue
                if cell in partial:
                    merged = _crt(partial[cell][0], partial[cell][1], v, m)
                    if merged is None:
                        return None
                    partial[cell] = merged
                else:
                    partial[cell] = (v % m, m)

        out = [
            partial.get(i, (0, 1))[0] % max(self.cell_enum_domain[i], 1)
            for i in range(len(self.cells))
        ]
        for i, v in enumerate(out):
            if self.pinned[i] and v != 0:
                return None
        try:
            got_set = self.evaluate(out)
        except ValueError:
            return None
        return out if frozenset(got_set) == target else None

    def _schedule(self):
        """Extraction plan: steps ("index"|"cell", payload...) in order.

        An extraction (c, g, inv, M) reads an unknown u from coordinate c:
        with every other still-unknown term vanishing mod g*M, the residual
        r satisfies r = g*unit*u mod g*M, so u = (r/g)*inv mod M.
        """
        if getattr(self, "_sched_cache", "?") != "?":
            return self._sched_cache
        orders = self.group.orders
        resolved_idx: set[int] = set()
        table_enum: dict[str, int] = {}
        for name, key in self.cells:
            table_enum[name] = self.cell_enum_domain[self.cell_index[(name, key)]]
        table_known: dict[str, int] = {t: 1 for t in self.table_keypos}
        # index vars with a single occurrence may absorb consistent-per-key
        # table pollution (the extracted value is relabeled, which the final
        # re-evaluation validates)
        idx_occurrences = [0] * len(self.ranges)
        for terms in self.coord_terms:
            for term in terms:
                if term[0] == "index":
                    idx_occurrences[term[1]] += 1

        def uncertainty(term, c: int) -> int:
            """Modulus u: the term's contribution is known up to multiples
            of u (0 means exactly known)."""
            n = orders[c]
            k = term[2] % n
            if term[0] == "const" or k == 0:
                return 0
            if term[0] == "index":
                if term[1] in resolved_idx or self.ranges[term[1]] == 1:
                    return 0
                return k
            K = table_known[term[1]]
            if K % table_enum.get(term[1], 1) == 0:
                return 0  # fully known in the truncated sense
            return k * K if K > 1 else k

        def extraction_ok(c, me, g, M, absorb: bool) -> bool:
            for term in self.coord_terms[c]:
                if term is me:
                    continue
                u = uncertainty(term, c)
                if u == 0:
                    continue
                if u % (g * M) == 0:
                    continue
                # absorption: pollution consistent per table key may shift an
                # index that occurs nowhere else
                if (
                    absorb
                    and term[0] == "table"
                    and table_known[term[1]] > 1
                    and u % g == 0
                ):
                    continue
                return False
            return True

        def max_cell_extraction(c, me, g) -> int:
            n = orders[c]
            bound = n // g
            for term in self.coord_terms[c]:
                if term is me:
                    continue
                u = uncertainty(term, c)
                if u == 0:
                    continue
                if u % g != 0:
                    return 0
                bound = math.gcd(bound, u // g)
            return bound

        steps: list[tuple] = []
        progress = True
        while progress:
            progress = False
            for c, terms in enumerate(self.coord_terms):
                n = orders[c]
                for term in terms:
                    if term[0] == "index" and term[1] not in resolved_idx:
                        k = term[2] % n
                        M = self.ranges[term[1]]
                        if M == 1:
                            resolved_idx.add(term[1])
                            progress = True
                            continue
                        if k == 0:
                            continue
                        g = math.gcd(k, n)
                        if g * M > n or n % (g * M):
                            continue
                        absorb = idx_occurrences[term[1]] == 1
                        if not extraction_ok(c, term, g, M, absorb):
                            continue
                        unit = (k // g) % M
                        steps.append(("index", term[1], c, g, pow(unit, -1, M), M))
                        resolved_idx.add(term[1])
                        progress = True
                    elif term[0] == "table":
                        name = term[1]
                        k = term[2] % n
                        if k == 0:
                            continue
                        K = table_known[name]
                        if K % table_enum.get(name, 1) == 0:
                            continue  # already fully known
                        if any(p not in resolved_idx for p in self.table_keypos[name]):
                            continue
                        g = math.gcd(k, n)
                        M = max_cell_extraction(c, term, g)
                        if M <= 1 or math.lcm(K, M) == K:
                            continue  # nothing new learned
                        inv = pow((k // g) % M, -1, M) if M > 1 else 0
                        steps.append(("cell", name, c, g, inv, M))
                        table_known[name] = math.lcm(K, M)
                        progress = True
        ok = len(resolved_idx) == len(self.ranges) and all(
            table_known[t] % table_enum.get(t, 1) == 0 for t in self.table_keypos
        )
        self._sched_cache = steps if ok else None
        return self._sched_cache

    def _decode_element(self, x, sched, partial):
        idx: list[int | None] = [None] * len(self.ranges)
        for pos, r in enumerate(self.ranges):
            if r == 1:
                idx[pos] = 0
        pend: list[tuple[int, int, int]] = []
        pend_by_cell: dict[int, tuple[int, int]] = {}
        for step in sched:
            kind, name, c, g, inv, M = step
            skip = None
            if kind == "cell":
                if any(idx[p] is None for p in self.table_keypos[name]):
                    return None
                skip = self.cell_of(name, [i if i is not None else 0 for i in idx])
            resid = self._residual(x, c, idx, partial, pend_by_cell, skip)
            if resid is None:
                return None
            r = resid % (g * M)
            if r % g:
                return None
            v = ((r // g) * inv) % M if M > 1 else 0
            if kind == "index":
                if v >= self.ranges[name]:
                    return None
                idx[name] = v
            else:
                cell = skip
                pend.append((cell, v, M))
                prev = pend_by_cell.get(cell)
                if prev is not None:
                    merged = _crt(prev[0], prev[1], v, M)
                    if merged is None:
                        return None
                    pend_by_cell[cell] = merged
                elif cell in partial:
                    merged = _crt(partial[cell][0], partial[cell][1], v, M)
                    if merged is None:
                        return None
                    pend_by_cell[cell] = merged
                else:
                    pend_by_cell[cell] = (v, M)
        if any(i is None for i in idx):
            return None
        return tuple(idx), pend

    def _residual(self, x, c, idx, partial, pend_by_cell, skip_cell=None):
        n = self.group.orders[c]
        acc = x[c]
        for term in self.coord_terms[c]:
            kind = term[0]
            if kind == "const":
                acc -= term[1]
            elif kind == "index":
                v = idx[term[1]]
                if v is not None:
                    acc -= term[2] * v
            else:
                keypos = self.table_keypos[term[1]]
                if any(idx[p] is None for p in keypos):
                    continue
                cell = self.cell_of(term[1], [i for i in idx])
                if cell == skip_cell:
                    continue
                if cell in pend_by_cell:
                    acc -= term[2] * pend_by_cell[cell][0]
                elif cell in partial:
                    acc -= term[2] * partial[cell][0]
        return acc % n

    def _decode_bruteforce(self, target):
        cap = 200_000
        for values in self.enumerate_values(cap):
            try:
                if frozenset(self.evaluate(values)) == target:
                    return values
            except ValueError:
                continue
        return None


def _crt(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    g = math.gcd(m1, m2)
    if (r1 - r2) % g != 0:
        return None
    lcm = m1 // g * m2
    _, x, _ = _egcd(m1 // g, m2 // g)
    k = ((r2 - r1) // g * x) % (m2 // g)
    return ((r1 + m1 * k) % lcm, lcm)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return a, 1, 0
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def compile_side(
    s: Side,
    group: Group,
    env: dict[str, int],
    *,
    enum_domains: dict[str, int] | None = None,
) -> CompiledSide:
    """Bind a side to a concrete group.

    `enum_domains` optionally overrides per-table enumeration domains (the
    truncated digit domains used in exhaustive sweeps).
    """
    index_names = tuple(n for n, _ in s.indices)
    ranges = tuple(sym_eval(r, env) for _, r in s.indices)
    pos_of = {n: i for i, n in enumerate(index_names)}

    table_keypos: dict[str, tuple[int, ...]] = {}
    for name, (key, _) in s.tables.items():
        table_keypos[name] = tuple(pos_of[k] for k in key)

    coord_terms: list[list[tuple]] = []
    occurrences: dict[str, list[tuple[int, int]]] = {t: [] for t in s.tables}
    for c, terms in enumerate(s.coords):
        out: list[tuple] = []
        for t in terms:
            coeff = sym_eval(t.coeff, env)
            if t.kind == "index":
                out.append(("index", pos_of[t.name], coeff))
            elif t.kind == "table":
                out.append(("table", t.name, coeff))
                occurrences[t.name].append((c, coeff))
            else:
                out.append(("const", coeff))
        coord_terms.append(out)

    table_domain: dict[str, int] = {}
    for name, occ in occurrences.items():
        explicit = s.tables[name][1]
        if explicit is not None:
            table_domain[name] = sym_eval(explicit, env)
            continue
        m = 1
        for c, k in occ:
            n = group.orders[c]
            m = math.lcm(m, n // math.gcd(k, n))
        table_domain[name] = max(m, 1)

    cells: list[tuple[str, tuple[int, ...]]] = []
    cell_index: dict[tuple[str, tuple[int, ...]], int] = {}
    cell_domain: list[int] = []
    cell_enum: list[int] = []
    pinned: list[bool] = []
    for name in sorted(s.tables):
        keypos = table_keypos[name]
        key_ranges = [ranges[p] for p in keypos]
        for key in product(*(range(r) for r in key_ranges)):
            cell_index[(name, key)] = len(cells)
            cells.append((name, key))
            cell_domain.append(table_domain[name])
            enum = table_domain[name]
            if enum_domains and name in enum_domains:
                enum = math.gcd(enum, max(enum_domains[name], 1)) if enum % max(enum_domains[name], 1) == 0 else min(enum, enum_domains[name])
                enum = max(enum, 1)
            cell_enum.append(enum)
            pinned.append(all(k == 0 for k in key))

    return CompiledSide(
        group=group,
        index_names=index_names,
        ranges=ranges,
        cells=cells,
        cell_index=cell_index,
        cell_domain=cell_domain,
        cell_enum_domain=cell_enum,
        pinned=pinned,
        coord_terms=coord_terms,
        table_keypos=table_keypos,
    )
