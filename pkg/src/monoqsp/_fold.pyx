# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled QSP product fold over Z[t]/(t^n - 1) with int64 coefficients.

Every coefficient of the product counts signal paths, so it is bounded by
2^(n-1); int64 is exact for n <= MAX_ORDER.
"""

from cpython cimport array
import array

MAX_ORDER = 62


def fold_cyclic(int n):
    """Coefficient tensor of prod_{i=1..n} T(x, y) S(w^i).

    Returns ``out[r][c][a]``: the length-n vector over 1, t, ..., t^(n-1)
    multiplying x^a y^(n-a) in entry (r, c).
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n > MAX_ORDER:
        raise OverflowError(f"order {n} exceeds int64 kernel limit {MAX_ORDER}")

    cdef Py_ssize_t width = n + 1
    cdef Py_ssize_t block = width * n
    cdef Py_ssize_t size = 4 * block
    cdef array.array tmpl = array.array("q")
    cdef array.array buf_a = array.clone(tmpl, size, True)
    cdef array.array buf_b = array.clone(tmpl, size, True)
    cdef long long[::1] cur = buf_a
    cdef long long[::1] nxt = buf_b
    cdef long long[::1] tmp
    cdef Py_ssize_t i, r, a, j, up, dn
    cdef Py_ssize_t left, right, dst0, dst1
    cdef long long u, v

    # identity: entries (0,0) and (1,1) hold the constant 1
    cur[0] = 1
    cur[3 * block] = 1

    for i in range(1, n + 1):
        up = i % n
        dn = (n - up) % n
        for r in range(2):
            left = (2 * r) * block
            right = (2 * r + 1) * block
            for a in range(i + 1):
                dst0 = left + a * n
                dst1 = right + a * n
                for j in range(n):
                    # (M T)[r][0] = M[r][0] x + M[r][1] y, then times w^i
                    u = 0
                    if a >= 1:
                        u = cur[left + (a - 1) * n + j]
                    if a < i:
                        u = u + cur[right + a * n + j]
                    # (M T)[r][1] = M[r][0] y + M[r][1] x, then times w^-i
                    v = 0
                    if a < i:
                        v = cur[left + a * n + j]
                    if a >= 1:
                        v = v + cur[right + (a - 1) * n + j]
                    nxt[dst0 + (j + up) % n] = u
                    nxt[dst1 + (j + dn) % n] = v
        tmp = cur
        cur = nxt
        nxt = tmp

    out = []
    for r in range(2):
        row = []
        for c in range(2):
            base = (2 * r + c) * block
            row.append([[cur[base + a * n + j] for j in range(n)] for a in range(n + 1)])
        out.append(row)
    return out
