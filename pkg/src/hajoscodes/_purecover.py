"""Pure-Python search kernels over bitmask integers.

Mirrors the compiled `_fastcover` extension; the public functions must stay
behaviourally identical (same solutions, same ordering guarantees: outputs
are returned sorted, so results are schedule- and backend-independent).
"""

from __future__ import annotations

BACKEND = "pure"


def exact_cover(n: int, row_masks: list[int], limit: int | None = None) -> tuple[list[tuple[int, ...]], int, bool]:
    """All subsets of rows whose masks partition {0..n-1}.

    Rows are bitmasks over n columns.  Column-selection: fewest remaining
    candidate rows first.  Returns (sorted solutions as row-index tuples,
    nodes expanded, truncated flag).
    """
    full = (1 << n) - 1
    col_rows: list[list[int]] = [[] for _ in range(n)]
    for r, m in enumerate(row_masks):
        mm = m
        while mm:
            low = mm & -mm
            col_rows[low.bit_length() - 1].append(r)
            mm ^= low

    solutions: list[tuple[int, ...]] = []
    chosen: list[int] = []
    nodes = 0
    truncated = False

    def rec(covered: int) -> bool:
        nonlocal nodes, truncated
        nodes += 1
        if covered == full:
            solutions.append(tuple(sorted(chosen)))
            if limit is not None and len(solutions) >= limit:
                truncated = True
                return True
            return False
        # most-constrained uncovered column
        best_col = -1
        best_cands: list[int] | None = None
        rem = full & ~covered
        while rem:
            low = rem & -rem
            c = low.bit_length() - 1
            rem ^= low
            cands = [r for r in col_rows[c] if not (row_masks[r] & covered)]
            if best_cands is None or len(cands) < len(best_cands):
                best_col, best_cands = c, cands
                if not cands:
                    return False
        assert best_cands is not None
        for r in best_cands:
            chosen.append(r)
            if rec(covered | row_masks[r]):
                return True
            chosen.pop()
        return False

    rec(0)
    solutions.sort()
    return solutions, nodes, truncated


def factor_pairs(
    n: int,
    add_table: list[list[int]],
    sub_table: list[list[int]],
    size_a: int,
    size_b: int,
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All pairs (A, B) with 0 in A, 0 in B, |A|=size_a, |B|=size_b and
    A (+) B = Z (every element one sum), elements as indices 0..n-1.

    Branches on the least uncovered element g: every way g = a + b adds the
    missing side(s); the covering pair of g is unique per completion, so
    branches are disjoint and exhaustive.
    """
    if size_a * size_b != n:
        return []
    full = (1 << n) - 1
    sols: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    A: list[int] = [0]
    B: list[int] = [0]

    def try_add(side: list[int], other: list[int], x: int, covered: int) -> int:
        # new sums x + other must be fresh; returns new covered or -1
        acc = covered
        for y in other:
            bit = 1 << add_table[x][y]
            if acc & bit:
                return -1
            acc |= bit
        side.append(x)
        return acc

    def rec(covered: int) -> None:
        if covered == full:
            sols.append((tuple(sorted(A)), tuple(sorted(B))))
            return
        g = ((covered + 1) & ~covered).bit_length() - 1  # least uncovered
        in_a = set(A)
        in_b = set(B)
        can_a = len(A) < size_a
        can_b = len(B) < size_b
        for a in range(n):
            b = sub_table[g][a]
            a_in, b_in = a in in_a, b in in_b
            if a_in and b_in:
                continue  # g would already be covered
            if a_in:
                if not can_b:
                    continue
                new = try_add(B, A, b, covered)
                if new >= 0:
                    rec(new)
                    B.pop()
            elif b_in:
                if not can_a:
                    continue
                new = try_add(A, B, a, covered)
                if new >= 0:
                    rec(new)
                    A.pop()
            else:
                if not (can_a and can_b):
                    continue
                new = try_add(A, B, a, covered)
                if new < 0:
                    continue
                new2 = try_add(B, A, b, new)
                if new2 >= 0:
                    rec(new2)
                    B.pop()
                A.pop()

    rec(1)  # 0 + 0 covers 0
    sols.sort()
    return sols


def pair_walk(
    n: int,
    add_table: list[list[int]],
    sub_table: list[list[int]],
    size_a: int,
    size_b: int,
    visit,
) -> int:
    """Streaming variant of factor_pairs: calls visit(a_tuple, b_tuple) for
    every factorization pair instead of accumulating them.  Returns the pair
    count.  Traversal order is deterministic but unsorted."""
    if size_a * size_b != n:
        return 0
    full = (1 << n) - 1
    count = 0
    A: list[int] = [0]
    B: list[int] = [0]

    def try_add(side: list[int], other: list[int], x: int, covered: int) -> int:
        acc = covered
        for y in other:
            bit = 1 << add_table[x][y]
            if acc & bit:
                return -1
            acc |= bit
        side.append(x)
        return acc

    def rec(covered: int) -> None:
        nonlocal count
        if covered == full:
            count += 1
            visit(tuple(sorted(A)), tuple(sorted(B)))
            return
        g = ((covered + 1) & ~covered).bit_length() - 1
        in_a = set(A)
        in_b = set(B)
        can_a = len(A) < size_a
        can_b = len(B) < size_b
        for a in range(n):
            b = sub_table[g][a]
            a_in, b_in = a in in_a, b in in_b
            if a_in and b_in:
                continue
            if a_in:
                if not can_b:
                    continue
                new = try_add(B, A, b, covered)
                if new >= 0:
                    rec(new)
                    B.pop()
            elif b_in:
                if not can_a:
                    continue
                new = try_add(A, B, a, covered)
                if new >= 0:
                    rec(new)
                    A.pop()
            else:
                if not (can_a and can_b):
                    continue
                new = try_add(A, B, a, covered)
                if new < 0:
                    continue
                new2 = try_add(B, A, b, new)
                if new2 >= 0:
                    rec(new2)
                    B.pop()
                A.pop()

    rec(1)
    return count


def coverage_counts(n: int, add_table: list[list[int]], code: list[int], s_zero: list[int]) -> list[int]:
    counts = [0] * n
    for u in code:
        row = add_table[u]
        for s in s_zero:
            counts[row[s]] += 1
    return counts
