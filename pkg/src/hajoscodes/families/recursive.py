"""Builders for the digit-block families over Z_{p^k}, Z_{p^k} x Z_q and
Z_{2^k} x Z_2.

Each structural variant fixes an exponent chain 0 = m_0 < ... < m_n = k,
block widths l_t, and (for the two-coordinate groups) a distinguished level r
plus a pair letter; the variant's two sides are then ordinary compiled
set-expressions with concrete coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .expr import Side, side

PAIRS = {"zpk": ("",), "zpkq": ("a", "b", "c", "d"), "z2k2": ("a", "b", "c", "d", "e", "f")}


@dataclass(frozen=True)
class ChainVariant:
    label: str
    m: tuple[int, ...]
    l: tuple[int, ...]
    r: int | None
    pair: str
    s_side: Side
    c_side: Side


def _chains(k: int, allow_degenerate_top: bool = False) -> Iterator[tuple[int, ...]]:
    """All 0 = m_0 < ... < m_n = k, optionally also with one repeated top
    value (m_n = m_{n+1} = k).

    The repeated top realizes the constructions that append a width-zero
    level above the whole chain (the order-2 period subgroups <(2^{k-1},1)>
    and <(0,1)>); the block-width bookkeeping then forces l = 0 there and
    at least 1 elsewhere, so spurious variants are filtered naturally.
    """

    def rec(prefix):
        last = prefix[-1]
        if last == k:
            yield tuple(prefix)
            if allow_degenerate_top:
                yield tuple(prefix) + (k,)
            return
        for nxt in range(last + 1, k + 1):
            yield from rec(prefix + [nxt])

    yield from rec([0])


def _l_choices(deltas: tuple[int, ...], r: int | None, r_rule: str) -> Iterator[tuple[int, ...]]:
    ranges = []
    for t, d in enumerate(deltas):
        if r is not None and t == r:
            if r_rule == "full":  # m_r + l_r = m_{r+1}
                ranges.append([d])
            elif r_rule == "zero":
                ranges.append([0])
            else:  # free: 0..d
                ranges.append(list(range(0, d + 1)))
        else:
            ranges.append(list(range(1, d + 1)))
    yield from product(*ranges)


def _sum_terms(parts: list[str]) -> str:
    parts = [x for x in parts if x]
    return " + ".join(parts) if parts else "0"


def _tab(name: str, upto: int, extra: str = "") -> str:
    key = ",".join(f"i{x}" for x in range(upto + 1))
    if extra:
        key = key + "," + extra if key else extra
    return f"{name}[{key}]"


def _coeff(v: int, expr: str) -> str:
    return expr if v == 1 else f"{v}*{expr}"


def chain_variants(kind: str, p: int, k: int, q: int | None = None) -> list[ChainVariant]:
    """All structural variants of the given family for concrete parameters."""
    out: list[ChainVariant] = []
    pk = p**k
    for m in _chains(k, allow_degenerate_top=kind != "zpk"):
        n = len(m) - 1
        deltas = tuple(m[t + 1] - m[t] for t in range(n))
        if kind == "zpk":
            for l in _l_choices(deltas, None, ""):
                out.append(_build_zpk(p, k, m, l))
            continue
        assert q is not None
        for pair in PAIRS[kind]:
            r_rule = {"a": "full", "c": "zero", "d": "zero"}.get(pair, "free")
            if kind == "zpkq":
                r_rule = {"a": "full", "b": "free", "c": "zero", "d": "free"}[pair]
            else:
                r_rule = {"a": "full", "b": "free", "c": "free", "d": "zero", "e": "free", "f": "free"}[pair]
            for r in range(n):
                for l in _l_choices(deltas, r, r_rule):
                    if kind == "z2k2":
                        if pair == "b" and m[r] + l[r] < 1:
                            continue
                        if pair == "e" and m[r] < 1:
                            continue
                    v = _build_two_coord(kind, p, k, q, m, l, r, pair)
                    if v is not None:
                        out.append(v)
    return out


def _build_zpk(p: int, k: int, m, l) -> ChainVariant:
    n = len(l)
    pk = p**k
    s_idx = [(f"i{t}", p ** l[t]) for t in range(n)]
    s_parts = []
    for t in range(n):
        s_parts.append(_coeff(p ** m[t], f"i{t}"))
        if p ** (m[t] + l[t]) % pk:
            s_parts.append(_coeff(p ** (m[t] + l[t]), _tab(f"A{t}", t)))
    c_idx = [(f"i{t}", p ** (m[t + 1] - m[t] - l[t])) for t in range(n)]
    c_parts = []
    for t in range(n):
        if p ** (m[t] + l[t]) % pk:
            c_parts.append(_coeff(p ** (m[t] + l[t]), f"i{t}"))
        if p ** m[t + 1] % pk:
            c_parts.append(_coeff(p ** m[t + 1], _tab(f"B{t}", t)))
    label = f"m={list(m)} l={list(l)}"
    return ChainVariant(
        label, tuple(m), tuple(l), None, "",
        side(s_idx, [_sum_terms(s_parts)]),
        side(c_idx, [_sum_terms(c_parts)]),
    )


def _build_two_coord(kind, p, k, q, m, l, r, pair) -> ChainVariant | None:
    n = len(l)
    pk = p**k

    def live(c):  # keep only nonvanishing coefficients
        return c % pk != 0

    s_idx: list[tuple[str, int]] = []
    c_idx: list[tuple[str, int]] = []
    s0: list[str] = []
    s1 = "0"
    c0: list[str] = []
    c1 = "0"

    if pair == "a":
        for t in range(n):
            s_idx.append((f"i{t}", p ** l[t]))
            s0.append(_coeff(p ** m[t], f"i{t}"))
            if t != r and live(p ** (m[t] + l[t])):
                s0.append(_coeff(p ** (m[t] + l[t]), _tab(f"A{t}", t)))
        s1 = _tab("Ar", r)
        for t in range(n):
            c_idx.append((f"i{t}", q if t == r else p ** (m[t + 1] - m[t] - l[t])))
            if t != r and live(p ** (m[t] + l[t])):
                c0.append(_coeff(p ** (m[t] + l[t]), f"i{t}"))
            if live(p ** m[t + 1]):
                c0.append(_coeff(p ** m[t + 1], _tab(f"B{t}", t)))
        c1 = f"i{r}"

    elif pair == "b" and kind == "zpkq":
        for t in range(n):
            s_idx.append((f"i{t}", p ** l[t]))
            s0.append(_coeff(p ** m[t], f"i{t}"))
            if live(p ** (m[t] + l[t])):
                s0.append(_coeff(p ** (m[t] + l[t]), _tab("Ar" if t == r else f"A{t}", t)))
        s1 = _tab("Ar", r)
        for t in range(n):
            c_idx.append((f"i{t}", p ** (m[t + 1] - m[t] - l[t])))
        c_idx.append(("j", q))
        for t in range(n):
            if live(p ** (m[t] + l[t])):
                c0.append(_coeff(p ** (m[t] + l[t]), f"i{t}"))
            if live(p ** m[t + 1]):
                extra = "j" if t >= r else ""
                c0.append(_coeff(p ** m[t + 1], _tab(f"B{t}", t, extra)))
        c1 = "j"

    elif (pair == "c" and kind == "zpkq") or (pair == "d" and kind == "z2k2"):
        # l_r = 0; q-valued index in the second coordinate of S0
        for t in range(n):
            s_idx.append((f"i{t}", q if t == r else p ** l[t]))
            if t != r:
                s0.append(_coeff(p ** m[t], f"i{t}"))
            if live(p ** (m[t] + l[t])):
                s0.append(_coeff(p ** (m[t] + l[t]), _tab(f"A{t}", t)))
        s1 = f"i{r}"
        for t in range(n):
            c_idx.append((f"i{t}", p ** (m[t + 1] - m[t] - l[t])))
            if live(p ** (m[t] + l[t])):
                c0.append(_coeff(p ** (m[t] + l[t]), f"i{t}"))
            if t != r - 1 and live(p ** m[t + 1]):
                c0.append(_coeff(p ** m[t + 1], _tab(f"B{t}", t)))
        c1 = _tab("Br", r - 1) if r >= 1 else "0"

    elif (pair == "d" and kind == "zpkq") or (pair == "f" and kind == "z2k2"):
        for t in range(n):
            s_idx.append((f"i{t}", p ** l[t]))
            s0.append(_coeff(p ** m[t], f"i{t}"))
        s_idx.append(("j", q))
        for t in range(n):
            if live(p ** (m[t] + l[t])):
                extra = "j" if t >= r else ""
                s0.append(_coeff(p ** (m[t] + l[t]), _tab(f"A{t}", t, extra)))
        s1 = "j"
        for t in range(n):
            c_idx.append((f"i{t}", p ** (m[t + 1] - m[t] - l[t])))
            if live(p ** (m[t] + l[t])):
                c0.append(_coeff(p ** (m[t] + l[t]), f"i{t}"))
            shared = t == r - 1 and pair == "d" and kind == "zpkq"
            if live(p ** m[t + 1]):
                c0.append(_coeff(p ** m[t + 1], _tab("Br" if shared else f"B{t}", t)))
        if kind == "zpkq":
            c1 = _tab("Br", r - 1) if r >= 1 else "0"
        else:
            c1 = _tab("G", r - 1) if r >= 1 else "0"

    elif pair == "b" and kind == "z2k2":
        half = 2 ** (m[r] + l[r] - 1)
        for t in range(n):
            s_idx.append((f"i{t}", 2 ** l[t]))
            s0.append(_coeff(2 ** m[t], f"i{t}"))
            if t != r and live(2 ** (m[t] + l[t])):
                s0.append(_coeff(2 ** (m[t] + l[t]), _tab(f"A{t}", t)))
        if live(half):
            s0.append(_coeff(half, _tab("Ar", r)))
        s1 = _tab("Ar", r)
        for t in range(n):
            rng = 2 ** (m[t + 1] - m[t] - l[t] + 1) if t == r else 2 ** (m[t + 1] - m[t] - l[t])
            c_idx.append((f"i{t}", rng))
            coeff = half if t == r else 2 ** (m[t] + l[t])
            if live(coeff):
                c0.append(_coeff(coeff, f"i{t}"))
            if live(2 ** m[t + 1]):
                c0.append(_coeff(2 ** m[t + 1], _tab(f"B{t}", t)))
        c1 = f"i{r}"

    elif pair == "c" and kind == "z2k2":
        for t in range(n):
            s_idx.append((f"i{t}", 2 ** l[t]))
            s0.append(_coeff(2 ** m[t], f"i{t}"))
            if live(2 ** (m[t] + l[t])):
                s0.append(_coeff(2 ** (m[t] + l[t]), _tab(f"A{t}", t)))
        s1 = _tab("G", r)
        for t in range(n):
            c_idx.append((f"i{t}", 2 ** (m[t + 1] - m[t] - l[t])))
        c_idx.append(("j", 2))
        for t in range(n):
            if live(2 ** (m[t] + l[t])):
                c0.append(_coeff(2 ** (m[t] + l[t]), f"i{t}"))
            if live(2 ** m[t + 1]):
                extra = "j" if t >= r else ""
                c0.append(_coeff(2 ** m[t + 1], _tab(f"B{t}", t, extra)))
        c1 = "j"

    elif pair == "e" and kind == "z2k2":
        half = 2 ** (m[r] - 1)
        for t in range(n):
            rng = 2 ** (l[r] + 1) if t == r else 2 ** l[t]
            s_idx.append((f"i{t}", rng))
            coeff = half if t == r else 2 ** m[t]
            if live(coeff):
                s0.append(_coeff(coeff, f"i{t}"))
            if live(2 ** (m[t] + l[t])):
                s0.append(_coeff(2 ** (m[t] + l[t]), _tab(f"A{t}", t)))
        s1 = f"i{r}"
        for t in range(n):
            c_idx.append((f"i{t}", 2 ** (m[t + 1] - m[t] - l[t])))
            if live(2 ** (m[t] + l[t])):
                c0.append(_coeff(2 ** (m[t] + l[t]), f"i{t}"))
            if t != r - 1 and live(2 ** m[t + 1]):
                c0.append(_coeff(2 ** m[t + 1], _tab(f"B{t}", t)))
        if live(half):
            c0.append(_coeff(half, _tab("Br", r - 1)))
        c1 = _tab("Br", r - 1)

    else:
        return None

    label = f"m={list(m)} l={list(l)} r={r} pair={pair}"
    return ChainVariant(
        label, tuple(m), tuple(l), r, pair,
        side(s_idx, [_sum_terms(s0), s1]),
        side(c_idx, [_sum_terms(c0), c1]),
    )
