"""Mod-p multiple harmonic sums.

The partial sum hsum_p(k, j) runs over strictly increasing tuples
0 < m_0 < ... < m_{L-1} <= j of the inverse-power products
prod m_l**(-k_l) in F_p; hsum_p(k, p-1) is the full mod-p sum whose
residue sequence defines the finite multiple zeta value of index k.

Engines:
  naive       direct enumeration, Theta(j**depth); the in-module oracle
  horizontal  in-place over prefixes, Theta(p * depth) time, Theta(depth) space
  vertical    in-place over j, Theta(p * depth) time, Theta(p) space
  tree        one DP sweep for every node of a tree of indices at once,
              Theta(p * #nodes) time; this is the hot path and runs on the
              compiled kernel when available

All values are returned as plain ints reduced mod p.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from . import _kernels
from .indices import Index, IndexTree, bounded_weight_tree, tree_from_indices
from .modarith import Prime, build_inverse_table, inv_euclid

# Inverse-table memory budget for the bulk per-j engines, in table entries.
INVERSE_TABLE_BUDGET = 1 << 27


class DuplicatePrime(ValueError):
    """Raised when a prime list contains repeats."""


@dataclass(frozen=True)
class ResidueVector:
    """Residues of one index across a fixed prime list."""

    index: Index
    entries: tuple[int, ...]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)


@dataclass(frozen=True)
class HarmonicTable:
    """hsum_p(k, p-1) for every node k of a source tree of indices."""

    prime: Prime
    values: dict  # Index -> int

    def value(self, index: Index) -> int:
        return self.values[index]


def _as_prime(p) -> Prime:
    return p if isinstance(p, Prime) else Prime(p)


def _inverse_powers(inv_j: int, max_part: int, p: int) -> list[int]:
    """inv_j**a for a = 0..max_part by repeated multiplication."""
    powers = [1] * (max_part + 1)
    acc = 1
    for a in range(1, max_part + 1):
        acc = acc * inv_j % p
        powers[a] = acc
    return powers


def mhs_naive(p, index: Index, upper: int) -> int:
    """Direct enumeration of hsum_p(index, upper).

    Cost Theta(upper**depth); this is the module's own reference engine
    (the independent oracle lives in fmzv.oracle).
    """
    p = _as_prime(p)
    if not 0 <= upper < p:
        raise ValueError(f"upper must lie in [0, {p}), got {upper}")
    if index.depth == 0:
        return 1
    pows = []
    for k in index.parts:
        col = [0] * (upper + 1)
        for m in range(1, upper + 1):
            col[m] = pow(inv_euclid(m, p), k, p)
        pows.append(col)
    total = 0
    for ms in combinations(range(1, upper + 1), index.depth):
        term = 1
        for pos, m in enumerate(ms):
            term = term * pows[pos][m] % p
        total = (total + term) % p
    return total


def mhs_horizontal(p, index: Index) -> list[int]:
    """Sums for every prefix of index at j = p-1, by horizontal DP.

    Entry l is hsum_p(prefix of length l, p-1).  One in-place array over
    prefixes; inverses come from a single Euclid inversion per j.
    """
    p = _as_prime(p)
    parts = index.parts
    res = [0] * (len(parts) + 1)
    res[0] = 1
    if not parts:
        return res
    max_part = max(parts)
    for j in range(1, p):
        powers = _inverse_powers(inv_euclid(j, p), max_part, p)
        # descending prefix order: res[l-1] is still the previous-j value
        for l in range(len(parts), 0, -1):
            res[l] = (res[l] + res[l - 1] * powers[parts[l - 1]]) % p
    return res


def mhs_vertical(p, index: Index) -> int:
    """hsum_p(index, p-1) by vertical DP (one in-place array over j).

    Theta(p) space; uses the batch inverse table.
    """
    p = _as_prime(p)
    if index.depth == 0:
        return 1
    inv = build_inverse_table(p).inverses
    row = [1] * p  # empty-prefix row: hsum_p((), j) = 1
    for part in index.parts:
        prev = row[0]  # previous-prefix value at j-1
        row[0] = 0
        for j in range(1, p):
            cur = row[j]
            row[j] = (row[j - 1] + prev * pow(int(inv[j]), part, p)) % p
            prev = cur
    return row[p - 1]


def choose_engine(p, index: Index) -> str:
    """Auto rule: horizontal while depth <= log2(p), else vertical."""
    return "horizontal" if index.depth <= math.log2(int(p)) else "vertical"


def _tree_values(p: Prime, tree: IndexTree) -> list[int]:
    src, dst, lab = tree.edges_postorder()
    return _kernels.tree_dp(
        int(p), src, dst, lab, tree.node_count, table_budget=INVERSE_TABLE_BUDGET
    )


def tree_mhs(p, tree: IndexTree) -> HarmonicTable:
    """hsum_p(k, p-1) for every node k of the tree in one DP sweep.

    Theta(p * #nodes) time: each pass j performs one update per edge, and
    the post-order edge list makes every update read the parent's
    previous-j value.
    """
    p = _as_prime(p)
    vals = _tree_values(p, tree)
    return HarmonicTable(p, {tree.index_at(n): vals[n] for n in range(tree.node_count)})


def _check_primes(primes, min_exclusive: int) -> tuple[Prime, ...]:
    ps = tuple(_as_prime(p) for p in primes)
    if len(set(ps)) != len(ps):
        raise DuplicatePrime(f"prime list contains repeats: {ps}")
    for p in ps:
        if p <= min_exclusive:
            raise ValueError(f"prime {p} must exceed {min_exclusive}")
    return ps


def _per_prime_tree_values(primes, tree: IndexTree, workers: int) -> list[list[int]]:
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda p: _tree_values(p, tree), primes))
    return [_tree_values(p, tree) for p in primes]


def multi_prime_mhs(primes, weight: int, workers: int = 1) -> dict:
    """Residue vectors for every composition of the weight, across primes.

    One tree DP per prime over the bounded-weight tree, restricted to the
    weight-w nodes; keys are emitted in canonical composition order.  The
    per-prime sweeps are independent and may run on several workers; the
    output is assembled in prime-list order, so results do not depend on
    scheduling.
    """
    ps = _check_primes(primes, weight)
    tree = bounded_weight_tree(weight)
    per_prime = _per_prime_tree_values(ps, tree, workers)
    out = {}
    for nid in tree.nodes_of_weight(weight):
        k = tree.index_at(nid)
        out[k] = ResidueVector(k, tuple(vals[nid] for vals in per_prime))
    return out


def residues_for_indices(primes, indexes, workers: int = 1) -> dict:
    """Residue vectors for an arbitrary set of indices.

    Builds the prefix closure of the given indices and runs one tree DP
    per prime, so shared prefixes are computed once.
    """
    wanted = list(indexes)
    top = max((k.weight for k in wanted), default=0)
    ps = _check_primes(primes, top)
    tree = tree_from_indices(wanted)
    per_prime = _per_prime_tree_values(ps, tree, workers)
    node_of = {}
    for nid in tree.preorder():
        node_of[tree.index_at(nid)] = nid
    return {
        k: ResidueVector(k, tuple(vals[node_of[k]] for vals in per_prime))
        for k in wanted
    }
