# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: mod-p tree DP sweep and batch inverse tables.

Same contract as fmzv._pure.  128-bit intermediates keep products exact
for any prime below 2**62.
"""

import numpy as np

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"


cdef inline u64 mulmod(u64 a, u64 b, u64 p) noexcept nogil:
    return <u64>((<u128>a * b) % p)


cdef u64 inv_euclid_c(u64 a, u64 p) noexcept nogil:
    # Bezout coefficients stay below p < 2**62, so i64 suffices.
    cdef i64 t = 0, newt = 1, r = <i64>p, newr = <i64>a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += <i64>p
    return <u64>t


def backend_name():
    return "compiled"


def inverse_table(p):
    """Inverses of 1..p-1 mod p as a numpy uint64 array; entry 0 unused."""
    cdef u64 pp = p
    out = np.zeros(p, dtype=np.uint64)
    cdef u64[::1] inv = out
    cdef u64 j
    if pp >= 2:
        inv[1] = 1
        with nogil:
            for j in range(2, pp):
                inv[j] = pp - mulmod(pp // j, inv[pp % j], pp)
    return out


def tree_dp(p, src, dst, lab, node_count, table_budget=1 << 27):
    """One full mod-p DP sweep over a tree given as post-order edges."""
    cdef u64 pp = p
    cdef i64[::1] s = np.ascontiguousarray(src, dtype=np.int64)
    cdef i64[::1] d = np.ascontiguousarray(dst, dtype=np.int64)
    cdef i64[::1] a = np.ascontiguousarray(lab, dtype=np.int64)
    cdef Py_ssize_t n_edges = s.shape[0]
    cdef Py_ssize_t n = node_count

    vals_arr = np.zeros(n, dtype=np.uint64)
    cdef u64[::1] vals = vals_arr
    vals[0] = 1
    if n_edges == 0:
        return [int(v) for v in vals_arr]

    cdef i64 max_lab = 0
    cdef Py_ssize_t e
    for e in range(n_edges):
        if a[e] > max_lab:
            max_lab = a[e]

    cdef bint use_table = pp <= <u64>table_budget
    cdef u64[::1] inv_view
    inv_arr = inverse_table(p) if use_table else None
    if use_table:
        inv_view = inv_arr

    powers_arr = np.ones(max_lab + 1, dtype=np.uint64)
    cdef u64[::1] powers = powers_arr

    cdef u64 j, iv, acc
    cdef i64 k
    with nogil:
        for j in range(1, pp):
            iv = inv_view[j] if use_table else inv_euclid_c(j, pp)
            acc = 1
            for k in range(1, max_lab + 1):
                acc = mulmod(acc, iv, pp)
                powers[k] = acc
            # post-order: vals[s[e]] is still the previous-j value here
            for e in range(n_edges):
                vals[d[e]] = (vals[d[e]] + mulmod(vals[s[e]], powers[a[e]], pp)) % pp
    return [int(v) for v in vals_arr]
