# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels: exact cover and two-factor factorization search
over bitmask words.  Behaviourally identical to `_purecover` (same solutions
and ordering guarantees); selected at import by `_cover`."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

BACKEND = "fast"

cdef int WORD = 64


cdef inline bint _get(unsigned long long* mask, int nw, int bit):
    return (mask[bit >> 6] >> (bit & 63)) & 1


def exact_cover(int n, list row_masks, limit=None):
    """All subsets of rows whose masks partition {0..n-1}; see _purecover."""
    cdef int nrows = len(row_masks)
    cdef int nw = (n + 63) >> 6
    cdef int lim = -1 if limit is None else int(limit)
    cdef unsigned long long* rows = <unsigned long long*> malloc(nrows * nw * sizeof(unsigned long long))
    cdef unsigned long long* covered = <unsigned long long*> malloc(nw * sizeof(unsigned long long))
    cdef int* col_start = <int*> malloc((n + 1) * sizeof(int))
    cdef int* chosen = <int*> malloc((n + 1) * sizeof(int))
    if not rows or not covered or not col_start or not chosen:
        raise MemoryError
    cdef list col_rows_py = [[] for _ in range(n)]
    cdef int r, w, c, i
    cdef object m
    try:
        for r in range(nrows):
            m = row_masks[r]
            for w in range(nw):
                rows[r * nw + w] = <unsigned long long> ((m >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
            mm = m
            while mm:
                low = mm & -mm
                col_rows_py[low.bit_length() - 1].append(r)
                mm ^= low
        # flatten column->rows
        total = sum(len(x) for x in col_rows_py)
        col_flat_arr = <int*> malloc(max(total, 1) * sizeof(int))
        if not col_flat_arr:
            raise MemoryError
        i = 0
        for c in range(n):
            col_start[c] = i
            for r in col_rows_py[c]:
                col_flat_arr[i] = r
                i += 1
        col_start[n] = i

        memset(covered, 0, nw * sizeof(unsigned long long))
        solutions: list = []
        nodes = [0]
        truncated = [False]
        _cover_rec(n, nw, rows, covered, col_start, col_flat_arr, chosen, 0,
                   solutions, nodes, lim, truncated)
        free(col_flat_arr)
        solutions.sort()
        return solutions, nodes[0], truncated[0]
    finally:
        free(rows)
        free(covered)
        free(col_start)
        free(chosen)


cdef bint _cover_rec(int n, int nw, unsigned long long* rows,
                     unsigned long long* covered, int* col_start, int* col_flat,
                     int* chosen, int depth, list solutions, list nodes,
                     int lim, list truncated):
    nodes[0] += 1
    cdef int c, w, b, best_col, best_count, count, r, i, j
    cdef bint full = True
    cdef unsigned long long word
    best_col = -1
    best_count = 0x7FFFFFFF
    for c in range(n):
        if _get(covered, nw, c):
            continue
        full = False
        count = 0
        for i in range(col_start[c], col_start[c + 1]):
            r = col_flat[i]
            if not _overlaps(rows + r * nw, covered, nw):
                count += 1
        if count < best_count:
            best_count = count
            best_col = c
            if count == 0:
                return False
    if full:
        sol = tuple(sorted([chosen[j] for j in range(depth)]))
        solutions.append(sol)
        if lim >= 0 and len(solutions) >= lim:
            truncated[0] = True
            return True
        return False
    for i in range(col_start[best_col], col_start[best_col + 1]):
        r = col_flat[i]
        if _overlaps(rows + r * nw, covered, nw):
            continue
        for w in range(nw):
            covered[w] ^= rows[r * nw + w]
        chosen[depth] = r
        if _cover_rec(n, nw, rows, covered, col_start, col_flat, chosen,
                      depth + 1, solutions, nodes, lim, truncated):
            for w in range(nw):
                covered[w] ^= rows[r * nw + w]
            return True
        for w in range(nw):
            covered[w] ^= rows[r * nw + w]
    return False


cdef inline bint _overlaps(unsigned long long* a, unsigned long long* b, int nw):
    cdef int w
    for w in range(nw):
        if a[w] & b[w]:
            return True
    return False


cdef class _PairSearch:
    cdef int n, nw, size_a, size_b, na, nb
    cdef int* add_t
    cdef int* sub_t
    cdef unsigned long long* covered
    cdef int* A
    cdef int* B
    cdef signed char* in_a
    cdef signed char* in_b
    cdef object visit
    cdef list sols
    cdef long long count
    cdef bint collect

    def __cinit__(self, int n, list add_table, list sub_table, int size_a, int size_b):
        cdef int i, j
        self.n = n
        self.nw = (n + 63) >> 6
        self.size_a = size_a
        self.size_b = size_b
        self.add_t = <int*> malloc(n * n * sizeof(int))
        self.sub_t = <int*> malloc(n * n * sizeof(int))
        self.covered = <unsigned long long*> malloc(self.nw * sizeof(unsigned long long))
        self.A = <int*> malloc((n + 1) * sizeof(int))
        self.B = <int*> malloc((n + 1) * sizeof(int))
        self.in_a = <signed char*> malloc(n)
        self.in_b = <signed char*> malloc(n)
        if not (self.add_t and self.sub_t and self.covered and self.A and self.B and self.in_a and self.in_b):
            raise MemoryError
        for i in range(n):
            row_a = add_table[i]
            row_s = sub_table[i]
            for j in range(n):
                self.add_t[i * n + j] = row_a[j]
                self.sub_t[i * n + j] = row_s[j]

    def __dealloc__(self):
        free(self.add_t)
        free(self.sub_t)
        free(self.covered)
        free(self.A)
        free(self.B)
        free(self.in_a)
        free(self.in_b)

    cdef inline bint covered_bit(self, int bit):
        return (self.covered[bit >> 6] >> (bit & 63)) & 1

    cdef inline void flip(self, int bit):
        self.covered[bit >> 6] ^= (<unsigned long long> 1) << (bit & 63)

    cdef int try_add_a(self, int x):
        # add x to A; new sums x + B must be fresh; returns count added or -1
        cdef int i, s, added = 0
        for i in range(self.nb):
            s = self.add_t[x * self.n + self.B[i]]
            if self.covered_bit(s):
                # rollback
                for i in range(added):
                    s = self.add_t[x * self.n + self.B[i]]
                    self.flip(s)
                return -1
            self.flip(s)
            added += 1
        self.A[self.na] = x
        self.na += 1
        self.in_a[x] = 1
        return added

    cdef void undo_add_a(self, int x):
        cdef int i, s
        self.na -= 1
        self.in_a[x] = 0
        for i in range(self.nb):
            s = self.add_t[x * self.n + self.B[i]]
            self.flip(s)

    cdef int try_add_b(self, int x):
        cdef int i, s, added = 0
        for i in range(self.na):
            s = self.add_t[self.A[i] * self.n + x]
            if self.covered_bit(s):
                for i in range(added):
                    s = self.add_t[self.A[i] * self.n + x]
                    self.flip(s)
                return -1
            self.flip(s)
            added += 1
        self.B[self.nb] = x
        self.nb += 1
        self.in_b[x] = 1
        return added

    cdef void undo_add_b(self, int x):
        cdef int i, s
        self.nb -= 1
        self.in_b[x] = 0
        for i in range(self.na):
            s = self.add_t[self.A[i] * self.n + x]
            self.flip(s)

    cdef void rec(self):
        cdef int g = -1, w, a, b, bit
        cdef unsigned long long word
        for w in range(self.nw):
            word = ~self.covered[w]
            if w == self.nw - 1 and (self.n & 63):
                word &= ((<unsigned long long> 1) << (self.n & 63)) - 1
            if word:
                bit = 0
                while not (word & 1):
                    word >>= 1
                    bit += 1
                g = w * 64 + bit
                break
        if g < 0:
            self.count += 1
            a_tup = tuple(sorted([self.A[i] for i in range(self.na)]))
            b_tup = tuple(sorted([self.B[i] for i in range(self.nb)]))
            if self.collect:
                self.sols.append((a_tup, b_tup))
            else:
                self.visit(a_tup, b_tup)
            return
        cdef bint can_a = self.na < self.size_a
        cdef bint can_b = self.nb < self.size_b
        cdef int i
        for a in range(self.n):
            b = self.sub_t[g * self.n + a]
            if self.in_a[a]:
                if self.in_b[b] or not can_b:
                    continue
                if self.try_add_b(b) >= 0:
                    self.rec()
                    self.undo_add_b(b)
            elif self.in_b[b]:
                if not can_a:
                    continue
                if self.try_add_a(a) >= 0:
                    self.rec()
                    self.undo_add_a(a)
            else:
                if not (can_a and can_b):
                    continue
                if self.try_add_a(a) < 0:
                    continue
                if self.try_add_b(b) >= 0:
                    self.rec()
                    self.undo_add_b(b)
                self.undo_add_a(a)

    def run(self, visit, bint collect):
        cdef int i
        memset(self.covered, 0, self.nw * sizeof(unsigned long long))
        memset(self.in_a, 0, self.n)
        memset(self.in_b, 0, self.n)
        self.na = 0
        self.nb = 0
        self.count = 0
        self.visit = visit
        self.sols = [] if collect else None
        self.collect = collect
        if self.size_a * self.size_b != self.n:
            return self.sols if collect else 0
        # 0 in A, 0 in B, 0+0 covers 0
        self.A[0] = 0
        self.B[0] = 0
        self.na = 1
        self.nb = 1
        self.in_a[0] = 1
        self.in_b[0] = 1
        self.flip(self.add_t[0])
        self.rec()
        if collect:
            self.sols.sort()
            return self.sols
        return self.count


def factor_pairs(int n, list add_table, list sub_table, int size_a, int size_b):
    """All factorization pairs (A, B); see _purecover.factor_pairs."""
    ps = _PairSearch(n, add_table, sub_table, size_a, size_b)
    return ps.run(None, True)


def pair_walk(int n, list add_table, list sub_table, int size_a, int size_b, visit):
    """Streaming factorization-pair search; see _purecover.pair_walk."""
    ps = _PairSearch(n, add_table, sub_table, size_a, size_b)
    return ps.run(visit, False)


def coverage_counts(int n, list add_table, list code, list s_zero):
    counts = [0] * n
    for u in code:
        row = add_table[u]
        for s in s_zero:
            counts[row[s]] += 1
    return counts
