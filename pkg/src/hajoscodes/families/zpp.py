"""The Z_p x Z_p criteria: linear-form distinctness over the connection set
and the two-condition characterization with its explicit code families."""

from __future__ import annotations

from dataclasses import dataclass

from ..codes import CayleySpec
from ..groups import GroupSubset, subset


def _is_odd_prime(p: int) -> bool:
    return p > 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _require_zpp(spec: CayleySpec) -> int:
    orders = spec.group.orders
    if len(orders) != 2 or orders[0] != orders[1] or not _is_odd_prime(orders[0]):
        raise ValueError(f"group {spec.group} is not Z_p x Z_p for an odd prime p")
    return orders[0]


def check_as_bs(spec: CayleySpec, a: int, b: int) -> bool:
    """Whether the p values a*s1 - b*s2 over S0 are pairwise distinct mod p."""
    p = _require_zpp(spec)
    if a % p == 0 and b % p == 0:
        raise ValueError("(a, b) must be nonzero mod p")
    if len(spec.s_zero) != p:
        raise ValueError(f"|S0| must be {p}, got {len(spec.s_zero)}")
    vals = {(a * s1 - b * s2) % p for s1, s2 in spec.s_zero}
    return len(vals) == p


@dataclass(frozen=True)
class ZppVerdict:
    condition1: bool  # first coordinates exhaust Z_p
    condition2: bool  # some a with {a*s1 - s2} = Z_p
    witness_a: int | None
    codes_condition1: tuple[GroupSubset, ...]  # {(b, n) : n}, one per b
    codes_condition2: tuple[GroupSubset, ...]  # {(n, a*n + b) : n}, one per b

    @property
    def admits(self) -> bool:
        return self.condition1 or self.condition2

    def to_json(self) -> dict:
        return {
            "condition1": self.condition1,
            "condition2": self.condition2,
            "witness_a": self.witness_a,
            "admits": self.admits,
        }


def check_zpp_conditions(spec: CayleySpec) -> ZppVerdict:
    """Evaluate both admissibility conditions and return the code families
    the satisfied conditions provide."""
    p = _require_zpp(spec)
    if len(spec.s_zero) != p:
        raise ValueError(f"|S0| must be {p}, got {len(spec.s_zero)}")
    grp = spec.group
    cond1 = check_as_bs(spec, 1, 0)
    witness = None
    for a in range(p):
        if check_as_bs(spec, a, 1):
            witness = a
            break
    cond2 = witness is not None
    codes1 = tuple(
        subset(grp, [(b, n) for n in range(p)]) for b in range(p)
    ) if cond1 else ()
    codes2 = tuple(
        subset(grp, [(n, (witness * n + b) % p) for n in range(p)])
        for b in range(p)
    ) if cond2 else ()
    return ZppVerdict(cond1, cond2, witness, codes1, codes2)
