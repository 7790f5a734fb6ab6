"""Meet-in-the-middle search for bounded additive relations.

The general decipher problem asks for an x with f(x) = y over a finite
domain X.  When X splits as a subset of X0 x X1 and f factors through a
half-sum, a dictionary over X0 turns the search into #X0 insertions plus
#X1 probes instead of #X evaluations (a space-time trade-off).

The specialisation used everywhere else in this package: given elements
x_0..x_{D-1} of a finite abelian group and the coefficient alphabet
0, 1, -1, 2, -2, ..., B, -B, find an admissible tuple of coefficient
indices whose weighted sum vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class CoefficientArray:
    """The integers in [-B, B] ordered by ascending absolute value.

    Ties break positive-first: 0, 1, -1, 2, -2, ..., B, -B.  Coefficient
    index 0 is always the zero coefficient, which makes "nonzero index"
    and "nonzero coefficient" interchangeable.
    """

    __slots__ = ("bound", "values")

    def __init__(self, bound: int):
        if bound < 0:
            raise ValueError("bound must be non-negative")
        vals = [0]
        for a in range(1, bound + 1):
            vals.append(a)
            vals.append(-a)
        self.bound = bound
        self.values = tuple(vals)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, b: int) -> int:
        return self.values[b]

    def __iter__(self):
        return iter(self.values)

    def nonzero_indices(self) -> range:
        return range(1, len(self.values))


class ZmodN:
    """The cyclic group Z/NZ with elements as reduced ints (any N >= 1)."""

    __slots__ = ("n",)

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("group order must be positive")
        self.n = int(n)

    def zero(self) -> int:
        return 0

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def neg(self, a: int) -> int:
        return (-a) % self.n

    def scale(self, c: int, a: int) -> int:
        return c * a % self.n

    def encode(self, a: int):
        return a % self.n

    def element(self, a: int) -> int:
        return a % self.n

    def __repr__(self) -> str:
        return f"ZmodN({self.n})"


@dataclass(frozen=True)
class RelationSolution:
    """A witness tuple: coefficient indices plus the resolved coefficients."""

    indices: tuple[int, ...]
    coefficients: tuple[int, ...]


def mitm_decipher(left_domain, right_domain, project_left, project_right, membership):
    """Generic MITM search.

    Builds the dictionary mapping project_left(x0) to the list of x0 over
    the whole left domain, then scans the right domain: a pair (x0, x1)
    with project_left(x0) == project_right(x1) and membership(x0, x1) is
    returned as soon as found, in dictionary insertion order within a
    bucket.  Returns None when no admissible pair exists.
    """
    buckets: dict = {}
    for x0 in left_domain:
        buckets.setdefault(project_left(x0), []).append(x0)
    for x1 in right_domain:
        for x0 in buckets.get(project_right(x1), ()):
            if membership(x0, x1):
                return (x0, x1)
    return None


class MitmDictionary:
    """Left-half sums of coefficient-index tuples over a group.

    Maps the encoding of sum(c[b_d] * x_d, d < left_len) to the list of
    tuples (b_0, ..., b_{left_len-1}) producing it, in ascending tuple
    order.  Covers the full tuple space (len(coeffs))**left_len; for
    left_len = 0 this is the single empty tuple in the bucket of zero.
    With keys_only=True only the key set is kept.
    """

    __slots__ = ("left_len", "buckets", "keys_only")

    def __init__(self, left_len: int, buckets, keys_only: bool = False):
        self.left_len = left_len
        self.buckets = buckets
        self.keys_only = keys_only

    @classmethod
    def build(cls, group, elements, coeffs: CoefficientArray, left_len: int,
              keys_only: bool = False) -> "MitmDictionary":
        if left_len > len(elements):
            raise ValueError("left_len exceeds element count")
        if keys_only:
            keys = set()
            for tup in product(range(len(coeffs)), repeat=left_len):
                keys.add(group.encode(_weighted_sum(group, coeffs, tup, elements)))
            return cls(left_len, keys, True)
        buckets: dict = {}
        for tup in product(range(len(coeffs)), repeat=left_len):
            key = group.encode(_weighted_sum(group, coeffs, tup, elements))
            buckets.setdefault(key, []).append(tup)
        return cls(left_len, buckets, False)

    def bucket(self, key):
        if self.keys_only:
            raise ValueError("dictionary was built keys-only")
        return self.buckets.get(key, ())

    def contains(self, key) -> bool:
        return key in self.buckets

    def tuple_count(self) -> int:
        if self.keys_only:
            raise ValueError("dictionary was built keys-only")
        return sum(len(v) for v in self.buckets.values())


def _weighted_sum(group, coeffs: CoefficientArray, tup, elements):
    acc = group.zero()
    for b, x in zip(tup, elements):
        acc = group.add(acc, group.scale(coeffs[b], x))
    return acc


def _not_all_zero(coeffs: CoefficientArray):
    def admissible(tup) -> bool:
        return any(coeffs[b] != 0 for b in tup)

    return admissible


def solve_bounded_relation(group, elements, bound: int, admissible=None,
                           coeffs: CoefficientArray | None = None,
                           left_len: int | None = None):
    """First admissible tuple b with sum(c[b_d] * x_d) = 0, or None.

    The dictionary is built over the floor(D/2) left elements, then right
    tuples are scanned in ascending order; existence does not depend on
    the split (left_len is exposed for exactly that cross-check).  The
    default admissibility excludes only the all-zero coefficient tuple.
    """
    elements = list(elements)
    d = len(elements)
    if d < 1:
        raise ValueError("need at least one element")
    if coeffs is None:
        coeffs = CoefficientArray(bound)
    elif coeffs.bound != bound:
        raise ValueError("coefficient array does not match bound")
    if admissible is None:
        admissible = _not_all_zero(coeffs)
    d_left = d // 2 if left_len is None else left_len
    if not 0 <= d_left <= d:
        raise ValueError(f"left length must lie in [0, {d}]")
    left, right = elements[:d_left], elements[d_left:]

    def project_left(tup):
        return group.encode(_weighted_sum(group, coeffs, tup, left))

    def project_right(tup):
        return group.encode(group.neg(_weighted_sum(group, coeffs, tup, right)))

    def membership(b_left, b_right):
        return admissible(b_left + b_right)

    hit = mitm_decipher(
        product(range(len(coeffs)), repeat=d_left),
        product(range(len(coeffs)), repeat=d - d_left),
        project_left,
        project_right,
        membership,
    )
    if hit is None:
        return None
    full = hit[0] + hit[1]
    return RelationSolution(full, tuple(coeffs[b] for b in full))


def generates_over(group, elements, bound: int, coeffs: CoefficientArray | None,
                   target):
    """Does `elements` generate `target` over the coefficient alphabet?

    Solves the bounded relation problem on elements + [target] restricted
    to tuples whose target coefficient is nonzero; returns the witness
    (whose last coefficient belongs to the target) or None.
    """
    if coeffs is None:
        coeffs = CoefficientArray(bound)

    def admissible(tup) -> bool:
        return coeffs[tup[-1]] != 0

    return solve_bounded_relation(
        group, list(elements) + [target], bound, admissible, coeffs
    )
