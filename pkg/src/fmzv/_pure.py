"""Pure-Python kernels.

Fallback used when the compiled extension is unavailable (or when
FMZV_PURE_PYTHON is set).  Same contract as fmzv._ext, correct for any
prime below 2**62 thanks to Python integers.
"""

from array import array


def backend_name() -> str:
    return "pure"


def _inv_euclid(a, p):
    t, newt, r, newr = 0, 1, p, a
    while newr:
        q = r // newr
        t, newt = newt, t - q * newt
        r, newr = newr, r - q * newr
    return t + p if t < 0 else t


def inverse_table(p: int):
    """Inverses of 1..p-1 mod p as an unsigned-64 array; entry 0 is unused."""
    inv = array("Q", bytes(8 * p))
    inv[1] = 1
    for j in range(2, p):
        inv[j] = p - (p // j) * inv[p % j] % p
    return inv


def tree_dp(p, src, dst, lab, node_count, table_budget=1 << 27):
    """One full mod-p DP sweep over a tree given as post-order edges.

    src/dst/lab are parallel edge arrays (parent id, child id, appended
    part).  Returns the per-node values at the final pass j = p-1 as a
    list of ints; node 0 is the root and always holds 1.
    """
    vals = [0] * node_count
    vals[0] = 1
    edges = list(zip(list(src), list(dst), list(lab)))
    if not edges:
        return vals
    max_lab = max(e[2] for e in edges)
    use_table = p <= table_budget
    inv = inverse_table(p) if use_table else None
    powers = [1] * (max_lab + 1)
    for j in range(1, p):
        iv = inv[j] if use_table else _inv_euclid(j, p)
        acc = 1
        for a in range(1, max_lab + 1):
            acc = acc * iv % p
            powers[a] = acc
        # post-order guarantees vals[s] is still the previous-j value here
        for s, d, a in edges:
            vals[d] = (vals[d] + vals[s] * powers[a]) % p
    return vals
