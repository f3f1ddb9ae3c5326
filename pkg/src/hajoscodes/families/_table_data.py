"""Static catalog rows: one entry per row of the per-shape classification
tables.

Conventions
-----------
Group patterns are symbolic coordinate orders ("p", "q", "r", "s" distinct
primes; integer literals are themselves).  Coordinate expressions use
lowercase index variables, uppercase parameter tables (``A[i,j]``), and
symbolic coefficients.  A table repeated inside ONE side with the same key is
a single shared value (a lift along a cyclic subgroup generator); the same
letter on the two sides denotes independent tables (the code side's values
are independent lifting witnesses).  Every table is pinned to 0 at its
all-zero key.

Rows repaired from the proof case-tables (garbled in the source material)
are flagged ``repaired=True``.
"""

from __future__ import annotations


def _r(table, row, s_idx, s_coords, c_idx, c_coords, conds=(), repaired=False):
    return {
        "table": table,
        "row": row,
        "s": {"indices": s_idx, "coords": s_coords},
        "c": {"indices": c_idx, "coords": c_coords},
        "conds": tuple(conds),
        "repaired": repaired,
    }


# table name -> (group pattern, table-level conditions, aut scope)
# aut scope: ("gl", coordinate positions, modulus symbol) or None
TABLE_META = {
    "zpq": (("p", "q"), (), None),
    "zpp": (("p", "p"), ("odd(p)",), ("gl", (0, 1), "p")),
    "zpqq": (("p", "q", "q"), ("p>=3", "q<=3"), ("gl", (1, 2), "q")),
    "zp2": (("p^2",), (), None),
    "zp3": (("p^3",), (), None),
    "zp2q": (("p^2", "q"), (), None),
    "z222": ((2, 2, 2), (), ("gl", (0, 1, 2), 2)),
    "zp3z2": (("p^3", 2), ("odd(p)",), None),
    "zp2z22": (("p^2", 2, 2), ("odd(p)",), ("gl", (1, 2), 2)),
    "zpz222": (("p", 2, 2, 2), ("odd(p)",), ("gl", (1, 2, 3), 2)),
    "z2222": ((2, 2, 2, 2), (), ("gl", (0, 1, 2, 3), 2)),
    "zpqr": (("p", "q", "r"), (), None),
    "zpqz22": (("p", "q", 2, 2), ("odd(p)", "odd(q)"), ("gl", (2, 3), 2)),
    "zp2p": (("p^2", "p"), ("p<=3",), ("autblock", (0, 1))),
    "zp4": (("p", 4), ("odd(p)",), None),
    "zp4z2": (("p", 4, 2), ("odd(p)",), None),
    "zp2q2": (("p^2", "q^2"), (), None),
    "zp2qr": (("p^2", "q", "r"), (), None),
}

# tables whose rows only claim the non-coprime regime gcd(|S0|,|C|) > 1;
# the coprime regime on those shapes is delegated to the search oracle
NONCOPRIME_TABLES = {"zp2q2", "zp2qr"}

ROWS = [
    # ----- Z_p x Z_q --------------------------------------------------------
    _r("zpq", 1, (("i", "p"),), ("i", "A[i]"), (("i", "q"),), ("0", "i")),
    _r("zpq", 2, (("i", "q"),), ("A[i]", "i"), (("i", "p"),), ("i", "0")),
    # ----- Z_p x Z_p (normal form; closed under GL(2,p)) -------------------
    _r("zpp", 1, (("i", "p"),), ("A[i]", "i"), (("i", "p"),), ("i", "0")),
    # ----- Z_p x Z_q x Z_q --------------------------------------------------
    _r("zpqq", 1, (("i", "p"),), ("i", "A[i]", "B[i]"),
       (("i", "q"), ("j", "q")), ("0", "i", "j")),
    _r("zpqq", 2, (("i", "q"),), ("A[i]", "A[i]", "i"),
       (("i", "p"), ("j", "q")), ("i", "j", "0"), conds=("q==3",)),
    _r("zpqq", 3, (("i", "q"), ("j", "p")), ("j", "A[i]", "i"),
       (("i", "q"),), ("A[i]", "i", "0"), conds=("q==3",), repaired=True),
    _r("zpqq", 4, (("i", "p"), ("j", "q")), ("i", "j", "A[i]"),
       (("i", "q"),), ("0", "A[i]", "i")),
    _r("zpqq", 5, (("i", "p"), ("j", "q")), ("i", "A[i,j]", "j"),
       (("i", "q"),), ("0", "i", "0")),
    _r("zpqq", 6, (("i", "q"), ("j", "q")), ("A[i]", "j", "i"),
       (("i", "p"),), ("i", "A[i]", "0")),
    _r("zpqq", 7, (("i", "q"), ("j", "q")), ("A[i,j]", "i", "j"),
       (("i", "p"),), ("i", "0", "0")),
    # ----- Z_{p^2} ----------------------------------------------------------
    _r("zp2", 1, (("i", "p"),), ("i + A[i]*p",), (("i", "p"),), ("i*p",)),
    # ----- Z_{p^3} ----------------------------------------------------------
    _r("zp3", 1, (("i", "p"),), ("i + A[i]*p",),
       (("i", "p^2"),), ("i*p",), repaired=True),
    _r("zp3", 2, (("i", "p"), ("j", "p")), ("i + A[i]*p + j*p^2",),
       (("i", "p"),), ("i*p + A[i]*p^2",)),
    _r("zp3", 3, (("i", "p^2"),), ("i + A[i]*p^2",), (("i", "p"),), ("i*p^2",)),
    # ----- Z_{p^2} x Z_q ----------------------------------------------------
    _r("zp2q", 1, (("i", "p"),), ("i + A[i]*p", "A[i]"),
       (("i", "p"), ("j", "q")), ("i*p", "j")),
    _r("zp2q", 2, (("i", "q"),), ("A[i]", "i"), (("i", "p^2"),), ("i", "0")),
    _r("zp2q", 3, (("i", "p"), ("j", "p")), ("i + j*p", "A[i]"),
       (("i", "q"),), ("A[i]*p", "i")),
    _r("zp2q", 4, (("i", "p^2"),), ("i", "A[i]"), (("i", "q"),), ("0", "i")),
    _r("zp2q", 5, (("i", "p"), ("j", "q")), ("i + A[i]*p", "j"),
       (("i", "p"),), ("i*p", "A[i]")),
    _r("zp2q", 6, (("i", "q"), ("j", "p")), ("A[i] + j*p", "i"),
       (("i", "p"),), ("i + A[i]*p", "0")),
    _r("zp2q", 7, (("i", "p"), ("j", "q")), ("i + A[i,j]*p", "j"),
       (("i", "p"),), ("i*p", "0")),
    # ----- Z_2 x Z_2 x Z_2 --------------------------------------------------
    _r("z222", 1, (("i", 2), ("j", 2)), ("A[i,j]", "i", "j"),
       (("i", 2),), ("i", "0", "0")),
    # ----- Z_{p^3} x Z_2 ----------------------------------------------------
    _r("zp3z2", 1, (("i", "p"),), ("i + A[i]*p", "A[i]"),
       (("i", "p^2"), ("j", 2)), ("i*p", "j")),
    _r("zp3z2", 2, (("i", 2),), ("A[i]", "i"), (("i", "p^3"),), ("i", "0")),
    _r("zp3z2", 3, (("i", "p"), ("j", "p")), ("i + A[i]*p + j*p^2", "A[i]"),
       (("i", "p"), ("j", 2)), ("i*p + A[i,j]*p^2", "j")),
    _r("zp3z2", 4, (("i", "p"), ("j", "p")), ("i + A[i]*p + j*p^2", "B[i,j]"),
       (("i", "p"), ("j", 2)), ("i*p + A[i]*p^2", "j")),
    _r("zp3z2", 5, (("i", "p"), ("j", "p")), ("i + j*p + A[i,j]*p^2", "B[i]"),
       (("i", 2), ("j", "p")), ("A[i]*p + j*p^2", "i")),
    _r("zp3z2", 6, (("i", "p^2"),), ("i + A[i]*p^2", "A[i]"),
       (("i", "p"), ("j", 2)), ("i*p^2", "j")),
    _r("zp3z2", 7, (("i", "p"), ("j", 2)), ("i + A[i]*p", "j"),
       (("i", "p^2"),), ("i*p", "A[i]"), repaired=True),
    _r("zp3z2", 8, (("i", 2), ("j", "p")), ("A[i] + j*p^2", "i"),
       (("i", "p^2"),), ("i + A[i]*p^2", "0")),
    _r("zp3z2", 9, (("i", "p"), ("j", 2)), ("i + A[i]*p + B[i,j]*p^2", "j"),
       (("i", "p"), ("j", "p")), ("i*p + j*p^2", "A[i]")),
    _r("zp3z2", 10, (("i", 2), ("j", "p")), ("A[i] + j*p + B[i,j]*p^2", "i"),
       (("i", "p"), ("j", "p")), ("i + A[i]*p + j*p^2", "0")),
    _r("zp3z2", 11, (("i", "p"), ("j", 2)), ("i + A[i,j]*p", "j"),
       (("i", "p^2"),), ("i*p", "0")),
    _r("zp3z2", 12, (("i", "p^2"), ("j", "p")), ("i + j*p^2", "A[i]"),
       (("i", 2),), ("A[i]*p^2", "i")),
    _r("zp3z2", 13, (("i", "p"), ("j", "p^2")), ("i + j*p", "A[i]"),
       (("i", 2),), ("A[i]*p", "i")),
    _r("zp3z2", 14, (("i", "p^3"),), ("i", "A[i]"), (("i", 2),), ("0", "i")),
    _r("zp3z2", 15, (("i", "p^2"), ("j", 2)), ("i + A[i]*p^2", "j"),
       (("i", "p"),), ("i*p^2", "A[i]")),
    _r("zp3z2", 16, (("i", "p"), ("j", "p"), ("k", 2)),
       ("i + A[i,k]*p + j*p^2", "k"),
       (("i", "p"),), ("i*p + A[i]*p^2", "0")),
    _r("zp3z2", 17, (("i", "p"), ("j", "p"), ("k", 2)),
       ("i + A[i]*p + j*p^2", "k"),
       (("i", "p"),), ("i*p + A[i]*p^2", "A[i]")),
    _r("zp3z2", 18, (("i", 2), ("j", "p^2")), ("A[i] + j*p", "i"),
       (("i", "p"),), ("i + A[i]*p", "0")),
    _r("zp3z2", 19, (("i", "p^2"), ("j", 2)), ("i + A[i,j]*p^2", "j"),
       (("i", "p"),), ("i*p^2", "0")),
    # ----- Z_{p^2} x Z_2 x Z_2 ---------------------------------------------
    _r("zp2z22", 1, (("i", "p"),), ("i + A[i]*p", "A[i]", "B[i]"),
       (("i", "p"), ("j", 2), ("k", 2)), ("i*p", "j", "k")),
    _r("zp2z22", 2, (("i", "p"), ("j", "p")), ("i + j*p", "A[i]", "B[i]"),
       (("i", 2), ("j", 2)), ("A[i,j]*p", "i", "j")),
    _r("zp2z22", 3, (("i", "p"), ("j", "p")), ("i + j*p", "A[i,j]", "B[i]"),
       (("i", 2), ("j", 2)), ("A[i]*p", "j", "i")),
    _r("zp2z22", 4, (("i", "p^2"),), ("i", "A[i]", "B[i]"),
       (("i", 2), ("j", 2)), ("0", "i", "j")),
    _r("zp2z22", 5, (("i", "p"), ("j", 2)), ("i + A[i]*p", "j", "A[i]"),
       (("i", "p"), ("j", 2)), ("i*p", "A[i,j]", "j")),
    _r("zp2z22", 6, (("i", "p"), ("j", 2)), ("i + A[i,j]*p", "j", "B[i]"),
       (("i", 2), ("j", "p")), ("j*p", "A[i]", "i")),
    _r("zp2z22", 7, (("i", "p"), ("j", 2)), ("i + A[i]*p", "B[i,j]", "j"),
       (("i", "p"), ("j", 2)), ("i*p", "j", "A[i]")),
    _r("zp2z22", 8, (("i", 2), ("j", "p")), ("A[i] + j*p", "B[i,j]", "i"),
       (("i", "p"), ("j", 2)), ("i + A[i]*p", "j", "0")),
    _r("zp2z22", 9, (("i", "p"), ("j", 2)), ("i + A[i,j]*p", "A[i,j]", "j"),
       (("i", "p"), ("j", 2)), ("i*p", "j", "0")),
    _r("zp2z22", 10, (("i", 2), ("j", 2)), ("A[i]", "j", "i"),
       (("i", "p^2"),), ("i", "A[i]", "0")),
    _r("zp2z22", 11, (("i", 2), ("j", 2)), ("A[i] + B[i,j]*p", "j", "i"),
       (("i", "p"), ("j", "p")), ("i + j*p", "A[i]", "0")),
    _r("zp2z22", 12, (("i", 2), ("j", 2)), ("A[i,j]", "i", "j"),
       (("i", "p^2"),), ("i", "0", "0")),
    _r("zp2z22", 13, (("i", "p^2"), ("j", 2)), ("i", "j", "A[i]"),
       (("i", 2),), ("0", "A[i]", "i")),
    _r("zp2z22", 14, (("i", "p"), ("k", "p"), ("j", 2)),
       ("i + k*p", "A[i,j]", "j"),
       (("i", 2),), ("A[i]*p", "i", "0")),
    _r("zp2z22", 15, (("i", "p"), ("j", "p"), ("k", 2)),
       ("i + j*p", "k", "A[i]"),
       (("i", 2),), ("A[i]*p", "A[i]", "i")),
    _r("zp2z22", 16, (("i", "p^2"), ("j", 2)), ("i", "A[i,j]", "j"),
       (("i", 2),), ("0", "i", "0")),
    _r("zp2z22", 17, (("i", "p"), ("j", 2), ("k", 2)),
       ("i + A[i,j]*p", "k", "j"),
       (("i", "p"),), ("i*p", "A[i]", "0")),
    _r("zp2z22", 18, (("i", 2), ("j", 2), ("k", "p")),
       ("A[i,j] + k*p", "i", "j"),
       (("i", "p"),), ("i + A[i]*p", "0", "0")),
    _r("zp2z22", 19, (("i", 2), ("j", "p"), ("k", 2)),
       ("A[i] + j*p", "k", "i"),
       (("i", "p"),), ("i + A[i]*p", "A[i]", "0")),
    _r("zp2z22", 20, (("i", "p"), ("j", 2), ("k", 2)),
       ("i + A[i]*p", "j", "k"),
       (("i", "p"),), ("i*p", "A[i]", "B[i]")),
    _r("zp2z22", 21, (("i", "p"), ("j", 2), ("k", 2)),
       ("i + A[i,j,k]*p", "j", "k"),
       (("i", "p"),), ("i*p", "0", "0")),
    # ----- Z_p x Z_2 x Z_2 x Z_2 -------------------------------------------
    _r("zpz222", 1, (("i", "p"),), ("i", "A[i]", "B[i]", "G[i]"),
       (("i", 2), ("j", 2), ("k", 2)), ("0", "i", "j", "k")),
    _r("zpz222", 2, (("i", "p"), ("j", 2)), ("i", "j", "A[i]", "B[i]"),
       (("i", 2), ("j", 2)), ("0", "A[i,j]", "i", "j")),
    _r("zpz222", 3, (("i", "p"), ("j", 2)), ("i", "A[i,j]", "j", "B[i]"),
       (("i", 2), ("j", 2)), ("0", "j", "A[i]", "i"), repaired=True),
    _r("zpz222", 4, (("i", "p"), ("j", 2)), ("i", "A[i,j]", "B[i,j]", "j"),
       (("i", 2), ("j", 2)), ("0", "i", "j", "0")),
    _r("zpz222", 5, (("i", 2), ("j", 2)), ("A[i]", "B[i,j]", "j", "i"),
       (("i", "p"), ("j", 2)), ("i", "j", "A[i]", "0")),
    _r("zpz222", 6, (("i", 2), ("j", 2)), ("A[i,j]", "A[i,j]", "i", "j"),
       (("i", "p"), ("j", 2)), ("i", "j", "0", "0")),
    _r("zpz222", 7, (("i", "p"), ("j", 2), ("k", 2)),
       ("i", "k", "A[i,j]", "j"),
       (("i", 2),), ("0", "A[i]", "i", "0")),
    _r("zpz222", 8, (("i", 2), ("j", 2), ("k", "p")),
       ("k", "A[i,j]", "i", "j"),
       (("i", 2),), ("A[i]", "i", "0", "0")),
    _r("zpz222", 9, (("i", "p"), ("j", 2), ("k", 2)),
       ("i", "j", "k", "A[i]"),
       (("i", 2),), ("0", "A[i]", "B[i]", "i")),
    _r("zpz222", 10, (("i", "p"), ("j", 2), ("k", 2)),
       ("i", "A[i,j,k]", "j", "k"),
       (("i", 2),), ("0", "i", "0", "0")),
    _r("zpz222", 11, (("i", 2), ("j", 2), ("k", 2)),
       ("A[i,j]", "k", "i", "j"),
       (("i", "p"),), ("i", "A[i]", "0", "0")),
    _r("zpz222", 12, (("i", 2), ("j", 2), ("k", 2)),
       ("A[i]", "j", "k", "i"),
       (("i", "p"),), ("i", "A[i]", "B[i]", "0")),
    _r("zpz222", 13, (("i", 2), ("j", 2), ("k", 2)),
       ("A[i,j,k]", "i", "j", "k"),
       (("i", "p"),), ("i", "0", "0", "0")),
    # ----- Z_2^4 ------------------------------------------------------------
    _r("z2222", 1, (("i", 2), ("j", 2), ("k", 2)),
       ("k", "A[i,j]", "i", "j"),
       (("i", 2),), ("A[i]", "i", "0", "0"), repaired=True),
    _r("z2222", 2, (("i", 2), ("j", 2), ("k", 2)),
       ("A[i,j,k]", "i", "j", "k"),
       (("i", 2),), ("i", "0", "0", "0")),
    # ----- Z_p x Z_q x Z_r --------------------------------------------------
    _r("zpqr", 1, (("i", "p"),), ("i", "A[i]", "B[i]"),
       (("i", "q"), ("j", "r")), ("0", "i", "j")),
    _r("zpqr", 2, (("i", "q"),), ("A[i]", "i", "B[i]"),
       (("i", "p"), ("j", "r")), ("i", "0", "j")),
    _r("zpqr", 3, (("i", "r"),), ("A[i]", "B[i]", "i"),
       (("i", "p"), ("j", "q")), ("i", "j", "0")),
    _r("zpqr", 4, (("i", "q"), ("j", "p")), ("j", "i", "A[i]"),
       (("i", "r"),), ("A[i]", "0", "i")),
    _r("zpqr", 5, (("i", "p"), ("j", "q")), ("i", "j", "A[i]"),
       (("i", "r"),), ("0", "A[i]", "i")),
    _r("zpqr", 6, (("i", "r"), ("j", "p")), ("j", "A[i]", "i"),
       (("i", "q"),), ("A[i]", "i", "0")),
    _r("zpqr", 7, (("i", "p"), ("j", "r")), ("i", "A[i]", "j"),
       (("i", "q"),), ("0", "i", "A[i]")),
    _r("zpqr", 8, (("i", "r"), ("j", "q")), ("A[i]", "j", "i"),
       (("i", "p"),), ("i", "A[i]", "0")),
    _r("zpqr", 9, (("i", "q"), ("j", "r")), ("A[i]", "i", "j"),
       (("i", "p"),), ("i", "0", "A[i]")),
    _r("zpqr", 10, (("i", "p"), ("j", "q")), ("i", "j", "A[i,j]"),
       (("i", "r"),), ("0", "0", "i")),
    _r("zpqr", 11, (("i", "p"), ("j", "r")), ("i", "A[i,j]", "j"),
       (("i", "q"),), ("0", "i", "0")),
    _r("zpqr", 12, (("i", "q"), ("j", "r")), ("A[i,j]", "i", "j"),
       (("i", "p"),), ("i", "0", "0")),
    # ----- Z_p x Z_q x Z_2 x Z_2 -------------------------------------------
    _r("zpqz22", 1, (("i", "p"),), ("i", "A[i]", "B[i]", "G[i]"),
       (("i", "q"), ("j", 2), ("k", 2)), ("0", "i", "j", "k")),
    _r("zpqz22", 2, (("i", "q"),), ("A[i]", "i", "B[i]", "G[i]"),
       (("i", "p"), ("j", 2), ("k", 2)), ("i", "0", "j", "k")),
    _r("zpqz22", 3, (("i", "q"), ("j", "p")), ("j", "i", "A[i]", "B[i]"),
       (("i", 2), ("j", 2)), ("A[i,j]", "0", "i", "j")),
    _r("zpqz22", 4, (("i", "p"), ("j", "q")), ("i", "j", "A[i]", "B[i]"),
       (("i", 2), ("j", 2)), ("0", "A[i,j]", "i", "j")),
    _r("zpqz22", 5, (("i", "q"), ("j", "p")), ("j", "i", "A[i,j]", "B[i]"),
       (("i", 2), ("j", 2)), ("A[i]", "0", "j", "i")),
    _r("zpqz22", 6, (("i", "p"), ("j", "q")), ("i", "j", "A[i,j]", "B[i]"),
       (("i", 2), ("j", 2)), ("0", "A[i]", "j", "i")),
    _r("zpqz22", 7, (("i", "p"), ("j", "q")), ("i", "j", "A[i,j]", "B[i,j]"),
       (("i", 2), ("j", 2)), ("0", "0", "i", "j")),
    _r("zpqz22", 8, (("i", "p"), ("j", 2)), ("i", "A[i]", "j", "B[i]"),
       (("i", "q"), ("j", 2)), ("0", "i", "A[i,j]", "j")),
    _r("zpqz22", 9, (("i", 2), ("j", "p")), ("j", "A[i]", "B[i,j]", "i"),
       (("i", "q"), ("j", 2)), ("A[i]", "i", "j", "0")),
    _r("zpqz22", 10, (("i", "p"), ("j", 2)), ("i", "A[i]", "B[i,j]", "j"),
       (("i", "q"), ("j", 2)), ("0", "i", "j", "A[i]")),
    _r("zpqz22", 11, (("i", "p"), ("j", 2)), ("i", "A[i,j]", "j", "B[i]"),
       (("i", 2), ("j", "q")), ("0", "j", "A[i]", "i")),
    _r("zpqz22", 12, (("i", "p"), ("j", 2)), ("i", "A[i,j]", "A[i,j]", "j"),
       (("i", "q"), ("j", 2)), ("0", "i", "j", "0")),
    _r("zpqz22", 13, (("i", "q"), ("j", 2)), ("A[i]", "i", "j", "B[i]"),
       (("i", "p"), ("j", 2)), ("i", "0", "A[i,j]", "j")),
    _r("zpqz22", 14, (("i", 2), ("j", "q")), ("A[i]", "j", "B[i,j]", "i"),
       (("i", "p"), ("j", 2)), ("i", "A[i]", "j", "0")),
    _r("zpqz22", 15, (("i", "q"), ("j", 2)), ("A[i]", "i", "B[i,j]", "j"),
       (("i", "p"), ("j", 2)), ("i", "0", "j", "A[i]")),
    _r("zpqz22", 16, (("i", "q"), ("j", 2)), ("A[i,j]", "i", "j", "B[i]"),
       (("i", 2), ("j", "p")), ("j", "0", "A[i]", "i")),
    _r("zpqz22", 17, (("i", "q"), ("j", 2)), ("A[i,j]", "i", "A[i,j]", "j"),
       (("i", "p"), ("j", 2)), ("i", "0", "j", "0")),
    _r("zpqz22", 18, (("i", 2), ("j", 2)), ("A[i]", "B[i]", "j", "i"),
       (("i", "p"), ("j", "q")), ("i", "j", "A[i,j]", "0"), repaired=True),
    _r("zpqz22", 19, (("i", 2), ("j", 2)), ("A[i,j]", "B[i]", "j", "i"),
       (("i", "q"), ("j", "p")), ("j", "i", "A[i]", "0")),
    _r("zpqz22", 20, (("i", 2), ("j", 2)), ("A[i]", "B[i,j]", "j", "i"),
       (("i", "p"), ("j", "q")), ("i", "j", "A[i]", "0")),
    _r("zpqz22", 21, (("i", 2), ("j", 2)), ("A[i,j]", "A[i,j]", "i", "j"),
       (("i", "p"), ("j", "q")), ("i", "j", "0", "0")),
    _r("zpqz22", 22, (("i", "p"), ("j", "q"), ("k", 2)),
       ("i", "j", "k", "A[i,j]"),
       (("i", 2),), ("0", "0", "A[i]", "i")),
    _r("zpqz22", 23, (("i", "q"), ("j", 2), ("k", "p")),
       ("k", "i", "A[i,j]", "j"),
       (("i", 2),), ("A[i]", "0", "i", "0")),
    _r("zpqz22", 24, (("i", "p"), ("j", 2), ("k", "q")),
       ("i", "k", "A[i,j]", "j"),
       (("i", 2),), ("0", "A[i]", "i", "0")),
    _r("zpqz22", 25, (("i", "q"), ("j", "p"), ("k", 2)),
       ("j", "i", "k", "A[i]"),
       (("i", 2),), ("A[i]", "0", "A[i]", "i")),
    _r("zpqz22", 26, (("i", "p"), ("j", "q"), ("k", 2)),
       ("i", "j", "k", "A[i]"),
       (("i", 2),), ("0", "A[i]", "A[i]", "i")),
    _r("zpqz22", 27, (("i", "p"), ("j", "q"), ("k", 2)),
       ("i", "j", "A[i,j,k]", "k"),
       (("i", 2),), ("0", "0", "i", "0")),
    _r("zpqz22", 28, (("i", "p"), ("j", 2), ("k", 2)),
       ("i", "A[i,j]", "k", "j"),
       (("i", "q"),), ("0", "i", "A[i]", "0")),
    _r("zpqz22", 29, (("i", 2), ("j", 2), ("k", "p")),
       ("k", "A[i,j]", "i", "j"),
       (("i", "q"),), ("A[i]", "i", "0", "0")),
    _r("zpqz22", 30, (("i", "p"), ("j", 2), ("k", 2)),
       ("i", "A[i]", "j", "k"),
       (("i", "q"),), ("0", "i", "A[i]", "B[i]"), repaired=True),
    _r("zpqz22", 31, (("i", 2), ("j", "p"), ("k", 2)),
       ("j", "A[i]", "k", "i"),
       (("i", "q"),), ("A[i]", "i", "A[i]", "0")),
    _r("zpqz22", 32, (("i", "p"), ("j", 2), ("k", 2)),
       ("i", "A[i,j,k]", "j", "k"),
       (("i", "q"),), ("0", "i", "0", "0")),
    _r("zpqz22", 33, (("i", "q"), ("j", 2), ("k", 2)),
       ("A[i,j]", "i", "k", "j"),
       (("i", "p"),), ("i", "0", "A[i]", "0")),
    _r("zpqz22", 34, (("i", 2), ("j", 2), ("k", "q")),
       ("A[i,j]", "k", "i", "j"),
       (("i", "p"),), ("i", "A[i]", "0", "0")),
    _r("zpqz22", 35, (("i", "q"), ("j", 2), ("k", 2)),
       ("A[i]", "i", "j", "k"),
       (("i", "p"),), ("i", "0", "A[i]", "B[i]")),
    _r("zpqz22", 36, (("i", 2), ("j", "q"), ("k", 2)),
       ("A[i]", "j", "k", "i"),
       (("i", "p"),), ("i", "A[i]", "A[i]", "0")),
    _r("zpqz22", 37, (("i", "q"), ("j", 2), ("k", 2)),
       ("A[i,j,k]", "i", "j", "k"),
       (("i", "p"),), ("i", "0", "0", "0")),
    # ----- Z_{p^2} x Z_p (p <= 3) -------------------------------------------
    _r("zp2p", 1, (("i", 3),), ("A[i]", "i"),
       (("i", "p^2"),), ("i", "0"), conds=("p==3",)),
    _r("zp2p", 2, (("i", 3),), ("i + 3*A[i]", "B[i]"),
       (("i", 3), ("j", 3)), ("3*i", "j"), conds=("p==3",)),
    _r("zp2p", 3, (("i", 3), ("j", 3)), ("A[i] + 3*j", "i"),
       (("i", 3),), ("i + 3*A[i]", "0"), conds=("p==3",), repaired=True),
    _r("zp2p", "3b", (("i", 3), ("j", 3)), ("i + 3*j", "A[i]"),
       (("i", 3),), ("3*B[i]", "i"), conds=("p==3",), repaired=True),
    _r("zp2p", 4, (("i", 3), ("j", 3)), ("i + 3*A[i] + 3*j", "j"),
       (("i", 3),), ("3*i + 3*A[i]", "A[i]"), conds=("p==3",), repaired=True),
    _r("zp2p", 5, (("i", "p"), ("j", "p")), ("i + A[i]*p", "j"),
       (("i", "p"),), ("i*p", "A[i]")),
    _r("zp2p", 6, (("i", "p"), ("j", "p")), ("i + A[i,j]*p", "j"),
       (("i", "p"),), ("i*p", "0")),
    _r("zp2p", 7, (("i", "p"), ("j", "p")), ("i + A[i,j]*p", "j + A[i,j]"),
       (("i", "p"),), ("i*p", "i")),
    _r("zp2p", 8, (("i", "p^2"),), ("i", "A[i]"), (("i", "p"),), ("0", "i")),
    # ----- Z_p x Z_4 --------------------------------------------------------
    _r("zp4", 1, (("i", 2),), ("A[i]", "i + 2*A[i]"),
       (("i", "p"), ("j", 2)), ("i", "2*j")),
    _r("zp4", 2, (("i", "p"),), ("i", "A[i]"), (("i", 4),), ("0", "i")),
    _r("zp4", 3, (("i", "p"), ("j", 2)), ("i", "A[i] + 2*j"),
       (("i", 2),), ("0", "i + 2*A[i]")),
    _r("zp4", 4, (("i", 2), ("j", "p")), ("j", "i + 2*A[i]"),
       (("i", 2),), ("A[i]", "2*i")),
    _r("zp4", 5, (("i", "p"), ("j", 2)), ("i", "j + 2*A[i,j]"),
       (("i", 2),), ("0", "2*i")),
    _r("zp4", 6, (("i", 2), ("j", 2)), ("A[i]", "i + 2*j"),
       (("i", "p"),), ("i", "2*A[i]")),
    _r("zp4", 7, (("i", 4),), ("A[i]", "i"), (("i", "p"),), ("i", "0")),
    # ----- Z_p x Z_4 x Z_2 --------------------------------------------------
    _r("zp4z2", 1, (("i", "p"),), ("i", "A[i]", "B[i]"),
       (("i", 4), ("j", 2)), ("0", "i", "j")),
    _r("zp4z2", 2, (("i", "p"), ("j", 2)), ("i", "A[i] + 2*j", "B[i]"),
       (("i", 2), ("j", 2)), ("0", "i + 2*A[i,j]", "j")),
    _r("zp4z2", 3, (("i", "p"), ("j", 2)), ("i", "A[i] + 2*j", "B[i] + j"),
       (("i", 2), ("j", 2)), ("0", "i + 2*A[i,j]", "j + A[i,j]")),
    _r("zp4z2", 4, (("i", "p"), ("j", 2)), ("i", "A[i]", "j"),
       (("i", 4),), ("0", "i", "A[i]")),
    _r("zp4z2", 5, (("i", "p"), ("j", 2)), ("i", "j + 2*A[i,j]", "B[i]"),
       (("i", 2), ("j", 2)), ("0", "A[i] + 2*j", "i")),
    _r("zp4z2", "6a", (("i", "p"), ("j", 2)),
       ("i", "A[i] + 2*j + 2*G[i,j]", "G[i,j]"),
       (("i", 2), ("k", 2)), ("0", "i + 2*A[i] + 2*k", "k"), repaired=True),
    _r("zp4z2", "6b", (("i", 2), ("j", "p")),
       ("j", "i + 2*A[i] + 2*G[i,j]", "G[i,j]"),
       (("i", 2), ("k", 2)), ("A[i]", "2*i + 2*k", "k"), repaired=True),
    _r("zp4z2", 7, (("i", "p"), ("j", 2)), ("i", "A[i] + 2*j", "B[i,j]"),
       (("i", 2), ("j", 2)), ("0", "i + 2*A[i]", "j")),
    _r("zp4z2", 8, (("i", 2), ("j", "p")), ("j", "i + 2*A[i]", "B[i,j]"),
       (("i", 2), ("j", 2)), ("A[i]", "2*i", "j")),
    _r("zp4z2", 9, (("i", "p"), ("j", 2)), ("i", "A[i,j]", "j"),
       (("i", 4),), ("0", "i", "0")),
    _r("zp4z2", 10, (("i", "p"), ("j", 2)), ("i", "A[i,j]", "j + A[i,j]"),
       (("i", 4),), ("0", "i", "i")),
    _r("zp4z2", 11, (("i", "p"), ("j", 2)),
       ("i", "j + 2*A[i,j]", "j + B[i,j]"),
       (("i", 2), ("j", 2)), ("0", "2*i", "j")),
    _r("zp4z2", 12, (("i", 2), ("j", 2)), ("A[i]", "i + 2*A[i]", "j"),
       (("i", "p"), ("j", 2)), ("i", "2*j", "A[i,j]")),
    _r("zp4z2", 13, (("i", 2), ("j", 2)), ("A[i]", "j + 2*B[i,j]", "i"),
       (("i", "p"), ("j", 2)), ("i", "A[i] + 2*j", "0")),
    _r("zp4z2", "14a", (("i", 2), ("j", 2)),
       ("A[i]", "i + 2*j + 2*G[i,j]", "G[i,j]"),
       (("i", "p"), ("k", 2)), ("i", "2*A[i] + 2*k", "k"), repaired=True),
    _r("zp4z2", "14b", (("i", 4),),
       ("A[i]", "i + 2*G[i]", "G[i]"),
       (("i", "p"), ("k", 2)), ("i", "2*k", "k"), repaired=True),
    _r("zp4z2", 15, (("i", 2), ("j", 2)), ("A[i]", "i + 2*j", "B[i,j]"),
       (("i", "p"), ("j", 2)), ("i", "2*A[i]", "j")),
    _r("zp4z2", 16, (("i", 2), ("j", 2)), ("A[i,j]", "i + 2*B[i]", "j"),
       (("i", 2), ("j", "p")), ("j", "2*i", "A[i]")),
    _r("zp4z2", 17, (("i", 2), ("j", 2)), ("A[i,j]", "i + 2*A[i,j]", "j"),
       (("i", "p"), ("j", 2)), ("i", "2*j", "0")),
    _r("zp4z2", 18, (("i", 2), ("j", 2)),
       ("A[i,j]", "i + 2*A[i,j]", "j + A[i,j]"),
       (("i", "p"), ("j", 2)), ("i", "2*j", "j")),
    _r("zp4z2", 19, (("i", 4),), ("A[i]", "i", "A[i]"),
       (("i", "p"), ("j", 2)), ("i", "0", "j")),
    _r("zp4z2", 20, (("i", "p"), ("j", 2), ("k", 2)),
       ("i", "A[i,j] + 2*k", "j"),
       (("i", 2),), ("0", "i + 2*A[i]", "0")),
    _r("zp4z2", 21, (("i", "p"), ("j", 2), ("k", 2)),
       ("i", "j + 2*A[i,j] + 2*k", "k"),
       (("i", 2),), ("0", "2*i + 2*G[i]", "G[i]"), repaired=True),
    _r("zp4z2", 22, (("i", "p"), ("j", 2), ("k", 2)),
       ("i", "j + 2*A[i,j]", "k"),
       (("i", 2),), ("0", "2*i", "A[i]")),
    _r("zp4z2", 23, (("i", 2), ("j", 2), ("k", "p")),
       ("k", "i + 2*A[i,j]", "j"),
       (("i", 2),), ("A[i]", "2*i", "0")),
    _r("zp4z2", 24, (("i", 2), ("j", 2), ("k", "p")),
       ("k", "i + 2*A[i,j]", "j + A[i,j]"),
       (("i", 2),), ("A[i]", "2*i", "i")),
    _r("zp4z2", 25, (("i", 4), ("j", "p")), ("j", "i", "A[i]"),
       (("i", 2),), ("A[i]", "0", "i")),
    _r("zp4z2", 26, (("i", "p"), ("j", 4)), ("i", "j", "A[i]"),
       (("i", 2),), ("0", "A[i]", "i")),
    _r("zp4z2", 27, (("i", "p"), ("j", 4)), ("i", "j", "A[i] + j"),
       (("i", 2),), ("0", "A[i]", "i + A[i]")),
    _r("zp4z2", 28, (("i", "p"), ("j", 2), ("k", 2)),
       ("i", "A[i] + 2*j", "k"),
       (("i", 2),), ("0", "i + 2*A[i]", "B[i]")),
    _r("zp4z2", 29, (("i", 2), ("j", "p"), ("k", 2)),
       ("j", "i + 2*A[i]", "k"),
       (("i", 2),), ("A[i]", "2*i", "A[i]")),
    _r("zp4z2", 30, (("i", "p"), ("j", 2), ("k", 2)),
       ("i", "j + 2*A[i,j,k]", "k"),
       (("i", 2),), ("0", "2*i", "0")),
    _r("zp4z2", 31, (("i", "p"), ("j", 2), ("k", 2)),
       ("i", "j + 2*A[i,j,k]", "k + A[i,j,k]"),
       (("i", 2),), ("0", "2*i", "i")),
    _r("zp4z2", 32, (("i", "p"), ("j", 4)), ("i", "j", "A[i,j]"),
       (("i", 2),), ("0", "0", "i")),
    _r("zp4z2", 33, (("i", 2), ("j", 2), ("k", 2)),
       ("A[i,j]", "i + 2*k", "j"),
       (("i", "p"),), ("i", "2*A[i]", "0")),
    _r("zp4z2", 34, (("i", 2), ("j", 2), ("k", 2)),
       ("A[i,j]", "i + 2*k", "j + k"),
       (("i", "p"),), ("i", "2*A[i]", "A[i]")),
    _r("zp4z2", 35, (("i", 4), ("j", 2)), ("A[i]", "i", "j"),
       (("i", "p"),), ("i", "0", "A[i]")),
    _r("zp4z2", 36, (("i", 2), ("j", 4)), ("A[i]", "j", "i"),
       (("i", "p"),), ("i", "A[i]", "0")),
    _r("zp4z2", 37, (("i", 2), ("j", 4)), ("A[i]", "j", "i + j"),
       (("i", "p"),), ("i", "A[i]", "A[i]")),
    _r("zp4z2", 38, (("i", 2), ("j", 2), ("k", 2)),
       ("A[i]", "i + 2*j", "k"),
       (("i", "p"),), ("i", "2*A[i]", "B[i]")),
    _r("zp4z2", 39, (("i", 4), ("j", 2)), ("A[i,j]", "i", "j"),
       (("i", "p"),), ("i", "0", "0")),
    # ----- Z_{p^2} x Z_{q^2}, non-coprime regime ----------------------------
    _r("zp2q2", 1, (("i", "p"),), ("i + A[i]*p", "B[i]"),
       (("i", "p"), ("j", "q^2")), ("i*p", "j")),
    _r("zp2q2", 2, (("i", "q"),), ("A[i]", "i + B[i]*q"),
       (("i", "p^2"), ("j", "q")), ("i", "j*q")),
    _r("zp2q2", 3, (("i", "p"), ("j", "q")), ("i + A[i]*p", "A[i] + j*q"),
       (("i", "p"), ("j", "q")), ("i*p", "j + A[i,j]*q")),
    _r("zp2q2", 4, (("i", "q"), ("j", "p")), ("A[i] + j*p", "i + A[i]*q"),
       (("i", "p"), ("j", "q")), ("i + A[i,j]*p", "j*q")),
    _r("zp2q2", 5, (("i", "q"), ("j", "p")), ("j + A[i,j]*p", "i + B[i]*q"),
       (("i", "q"), ("j", "p")), ("A[i] + j*p", "i*q")),
    _r("zp2q2", 6, (("i", "p"), ("j", "q")), ("i + A[i]*p", "A[i] + j*q"),
       (("i", "q"), ("j", "p")), ("j*p", "i + A[i]*q")),
    _r("zp2q2", 7, (("i", "p"), ("j", "q")), ("i + A[i]*p", "j + B[i,j]*q"),
       (("i", "p"), ("j", "q")), ("i*p", "A[i] + j*q")),
    _r("zp2q2", 8, (("i", "q"), ("j", "p")), ("A[i] + j*p", "i + B[i,j]*q"),
       (("i", "p"), ("j", "q")), ("i + A[i]*p", "j*q")),
    _r("zp2q2", 9, (("i", "p"), ("j", "q")), ("i + A[i,j]*p", "j + A[i,j]*q"),
       (("i", "p"), ("j", "q")), ("i*p", "j*q")),
    _r("zp2q2", 10, (("i", "q"), ("j", "p"), ("k", "p")),
       ("j + k*p", "i + A[i,j]*q"),
       (("i", "q"),), ("A[i]*p", "i*q")),
    _r("zp2q2", 11, (("i", "p^2"), ("j", "q")), ("i", "A[i] + j*q"),
       (("i", "q"),), ("0", "i + A[i]*q")),
    _r("zp2q2", 12, (("i", "q"), ("j", "p^2")), ("j", "i + A[i]*q"),
       (("i", "q"),), ("A[i]", "i*q")),
    _r("zp2q2", 13, (("i", "p"), ("j", "p"), ("k", "q")),
       ("i + j*p", "A[i] + k*q"),
       (("i", "q"),), ("A[i]*p", "i + A[i]*q")),
    _r("zp2q2", 14, (("i", "p^2"), ("j", "q")), ("i", "j + A[i,j]*q"),
       (("i", "q"),), ("0", "i*q")),
    _r("zp2q2", 15, (("i", "p"), ("j", "q"), ("k", "q")),
       ("i + A[i,j]*p", "j + k*q"),
       (("i", "p"),), ("i*p", "A[i]*q")),
    _r("zp2q2", 16, (("i", "q^2"), ("j", "p")), ("A[i] + j*p", "i"),
       (("i", "p"),), ("i + A[i]*p", "0")),
    _r("zp2q2", 17, (("i", "p"), ("j", "q^2")), ("i + A[i]*p", "j"),
       (("i", "p"),), ("i*p", "A[i]")),
    _r("zp2q2", 18, (("i", "q"), ("k", "q"), ("j", "p")),
       ("A[i] + j*p", "i + k*q"),
       (("i", "p"),), ("i + A[i]*p", "A[i]*q")),
    _r("zp2q2", 19, (("i", "p"), ("j", "q^2")), ("i + A[i,j]*p", "j"),
       (("i", "p"),), ("i*p", "0")),
    # ----- Z_{p^2} x Z_q x Z_r, non-coprime regime --------------------------
    _r("zp2qr", 1, (("i", "p"),), ("i + A[i]*p", "A[i]", "A[i]"),
       (("i", "p"), ("j", "q"), ("k", "r")), ("i*p", "j", "k")),
    _r("zp2qr", 2, (("i", "q"), ("j", "p")), ("A[i] + j*p", "i", "B[i]"),
       (("i", "p"), ("j", "r")), ("i + A[i,j]*p", "0", "j")),
    _r("zp2qr", 3, (("i", "p"), ("j", "q")), ("i + A[i]*p", "j", "A[i]"),
       (("i", "p"), ("j", "r")), ("i*p", "A[i,j]", "j")),
    _r("zp2qr", 4, (("i", "p"), ("j", "q")), ("i + A[i,j]*p", "j", "B[j]"),
       (("i", "r"), ("j", "p")), ("A[i] + j*p", "0", "i"), repaired=True),
    _r("zp2qr", 5, (("i", "p"), ("j", "q")), ("i + A[i,j]*p", "j", "B[i]"),
       (("i", "r"), ("j", "p")), ("j*p", "A[i]", "i")),
    _r("zp2qr", 6, (("i", "p"), ("j", "q")), ("i + A[i]*p", "j", "B[i,j]"),
       (("i", "p"), ("j", "r")), ("i*p", "A[i]", "j")),
    _r("zp2qr", 7, (("i", "q"), ("j", "p")), ("A[i] + j*p", "i", "B[i,j]"),
       (("i", "p"), ("j", "r")), ("i + A[i]*p", "0", "j"), repaired=True),
    _r("zp2qr", 8, (("i", "p"), ("j", "q")), ("i + A[i,j]*p", "j", "B[i,j]"),
       (("i", "p"), ("j", "r")), ("i*p", "0", "j")),
    _r("zp2qr", 9, (("i", "r"), ("j", "p")), ("A[i] + j*p", "B[i]", "i"),
       (("i", "p"), ("j", "q")), ("i + A[i,j]*p", "j", "0")),
    _r("zp2qr", 10, (("i", "p"), ("j", "r")), ("i + A[i]*p", "A[i]", "j"),
       (("i", "p"), ("j", "q")), ("i*p", "j", "A[i,j]")),
    _r("zp2qr", 11, (("i", "p"), ("j", "r")), ("i + A[i,j]*p", "B[j]", "j"),
       (("i", "q"), ("j", "p")), ("A[i] + j*p", "i", "0"), repaired=True),
    _r("zp2qr", 12, (("i", "p"), ("j", "r")), ("i + A[i,j]*p", "B[i]", "j"),
       (("i", "q"), ("j", "p")), ("j*p", "i", "A[i]")),
    _r("zp2qr", 13, (("i", "p"), ("j", "r")), ("i + A[i]*p", "B[i,j]", "j"),
       (("i", "p"), ("j", "q")), ("i*p", "j", "A[i]")),
    _r("zp2qr", 14, (("i", "r"), ("j", "p")), ("A[i] + j*p", "B[i,j]", "i"),
       (("i", "p"), ("j", "q")), ("i + A[i]*p", "j", "0"), repaired=True),
    _r("zp2qr", 15, (("i", "p"), ("j", "r")), ("i + A[i,j]*p", "B[i,j]", "j"),
       (("i", "p"), ("j", "q")), ("i*p", "j", "0"), repaired=True),
    _r("zp2qr", 16, (("i", "q"), ("j", "r"), ("k", "p")),
       ("A[i,j] + k*p", "i", "j"),
       (("i", "p"),), ("i + A[i]*p", "0", "0")),
    _r("zp2qr", 17, (("i", "p"), ("j", "r"), ("k", "q")),
       ("i + A[i,j]*p", "k", "j"),
       (("i", "p"),), ("i*p", "A[i]", "0")),
    _r("zp2qr", 18, (("i", "p"), ("j", "q"), ("k", "r")),
       ("i + A[i,j]*p", "j", "k"),
       (("i", "p"),), ("i*p", "0", "A[i]")),
    _r("zp2qr", 19, (("i", "r"), ("j", "p"), ("k", "q")),
       ("A[i] + j*p", "k", "i"),
       (("i", "p"),), ("i + A[i]*p", "A[i]", "0")),
    _r("zp2qr", 20, (("i", "q"), ("j", "p"), ("k", "r")),
       ("A[i] + j*p", "i", "k"),
       (("i", "p"),), ("i + A[i]*p", "0", "A[i]")),
    _r("zp2qr", 21, (("i", "p"), ("j", "q"), ("k", "r")),
       ("i + A[i]*p", "j", "k"),
       (("i", "p"),), ("i*p", "A[i]", "A[i]")),
    _r("zp2qr", 22, (("i", "p"), ("j", "q"), ("k", "r")),
       ("i + A[i,j,k]*p", "j", "k"),
       (("i", "p"),), ("i*p", "0", "0")),
]
