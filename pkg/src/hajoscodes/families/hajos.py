"""Decision procedure for the Hajós property of a finite abelian group.

The Hajós groups are exactly fourteen parameterized families and all their
subgroups.  A finite abelian group embeds in another iff, prime by prime,
the sorted exponent lists of its primary decomposition fit componentwise
under the target's.  We test embedding into each family over prime
assignments drawn from the group's own prime support plus fresh primes
(assigning a prime outside the support never blocks a fit).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable

INF = 10**9  # stand-in for an unbounded exponent (the 2^k / p^k factors)

# factor = (base, exponent); base is a prime symbol or a literal prime,
# exponent is an int or INF; symbols denote primes distinct from each other
# and from every literal prime in the same family
_FAMILIES: list[tuple[int, str, tuple[tuple[object, int], ...]]] = [
    (1, "Zp x Zp", (("p", 1), ("p", 1))),
    (2, "Zp x Z3 x Z3", (("p", 1), (3, 1), (3, 1))),
    (3, "Zp x Zq x Z2 x Z2", (("p", 1), ("q", 1), (2, 1), (2, 1))),
    (4, "Zp x Z4 x Z2", (("p", 1), (2, 2), (2, 1))),
    (5, "Zp^3 x Z2 x Z2", (("p", 3), (2, 1), (2, 1))),
    (6, "Zp^2 x Z2 x Z2 x Z2", (("p", 2), (2, 1), (2, 1), (2, 1))),
    (7, "Zp x Z2 x Z2 x Z2 x Z2", (("p", 1), (2, 1), (2, 1), (2, 1), (2, 1))),
    (8, "Z2^k x Z2", ((2, INF), (2, 1))),
    (9, "Zp^k x Zq", (("p", INF), ("q", 1))),
    (10, "Zp^2 x Zq^2", (("p", 2), ("q", 2))),
    (11, "Zp^2 x Zq x Zr", (("p", 2), ("q", 1), ("r", 1))),
    (12, "Zp x Zq x Zr x Zs", (("p", 1), ("q", 1), ("r", 1), ("s", 1))),
    (13, "Z9 x Z3", ((3, 2), (3, 1))),
    (14, "Z4 x Z4", ((2, 2), (2, 2))),
]


def primary_exponents(orders: Iterable[int]) -> dict[int, list[int]]:
    """prime -> exponents (descending) of the primary decomposition."""
    out: dict[int, list[int]] = {}
    for n in orders:
        m = int(n)
        d = 2
        while d * d <= m:
            if m % d == 0:
                e = 0
                while m % d == 0:
                    m //= d
                    e += 1
                out.setdefault(d, []).append(e)
            d += 1
        if m > 1:
            out.setdefault(m, []).append(1)
    for v in out.values():
        v.sort(reverse=True)
    return out


def _fits(sub: dict[int, list[int]], sup: dict[int, list[int]]) -> bool:
    for prime, exps in sub.items():
        target = sup.get(prime, [])
        if len(exps) > len(target):
            return False
        if any(e > t for e, t in zip(exps, target)):
            return False
    return True


@dataclass(frozen=True)
class HajosVerdict:
    hajos: bool
    family_item: int | None
    family: str | None
    assignment: dict[str, int] | None

    def __bool__(self) -> bool:
        return self.hajos

    def to_json(self) -> dict:
        return {
            "hajos": self.hajos,
            "family_item": self.family_item,
            "family": self.family,
            "assignment": self.assignment,
        }


def _fresh_primes(avoid: set[int], count: int) -> list[int]:
    out: list[int] = []
    n = 2
    while len(out) < count:
        if all(n % d for d in range(2, int(n**0.5) + 1)) and n not in avoid:
            out.append(n)
        n += 1
    return out


def is_hajos(orders: Iterable[int]) -> HajosVerdict:
    prim = primary_exponents(orders)
    own = sorted(prim)
    for item, name, factors in _FAMILIES:
        symbols = sorted({f for f, _ in factors if isinstance(f, str)})
        literals = {f for f, _ in factors if isinstance(f, int)}
        pool = own + _fresh_primes(set(own) | literals, len(symbols))
        for combo in permutations(pool, len(symbols)):
            if any(v in literals for v in combo):
                continue
            env = dict(zip(symbols, combo))
            sup: dict[int, list[int]] = {}
            for f, e in factors:
                prime = f if isinstance(f, int) else env[f]
                sup.setdefault(prime, []).append(e)
            for v in sup.values():
                v.sort(reverse=True)
            if _fits(prim, sup):
                return HajosVerdict(True, item, name, dict(env))
    return HajosVerdict(False, None, None, None)
