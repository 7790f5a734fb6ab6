"""Independent brute-force reference implementations for tests.

Everything here is deliberately written from the definitions, without
reusing the optimized engines, so tests can cross-check the two sides.
Guards refuse instances that would enumerate more than ~10**8 states.
"""

from __future__ import annotations

from .mitm import CoefficientArray, RelationSolution

ENUMERATION_LIMIT = 10**8


class TooLarge(ValueError):
    """Instance exceeds the brute-force enumeration guard."""


def brute_relation(group, elements, bound: int, admissible=None,
                   coeffs: CoefficientArray | None = None):
    """First admissible zero-sum coefficient tuple in canonical order, or None.

    Full enumeration of all (2B+1)**D index tuples with incremental
    partial sums.
    """
    elements = list(elements)
    if coeffs is None:
        coeffs = CoefficientArray(bound)
    n = len(coeffs)
    if n ** len(elements) > ENUMERATION_LIMIT:
        raise TooLarge(f"{n}**{len(elements)} tuples exceed the guard")
    if admissible is None:
        def admissible(tup):
            return any(coeffs[b] != 0 for b in tup)

    prefix = []

    def descend(pos, acc):
        if pos == len(elements):
            if acc == group.zero() and admissible(tuple(prefix)):
                return tuple(prefix)
            return None
        for b in range(n):
            prefix.append(b)
            hit = descend(pos + 1, group.add(acc, group.scale(coeffs[b], elements[pos])))
            if hit is not None:
                return hit
            prefix.pop()
        return None

    hit = descend(0, group.zero())
    if hit is None:
        return None
    return RelationSolution(hit, tuple(coeffs[b] for b in hit))


def brute_generates(group, elements, bound, coeffs, target):
    """Generation test by brute force: nonzero coefficient on the target."""
    if coeffs is None:
        coeffs = CoefficientArray(bound)

    def admissible(tup):
        return coeffs[tup[-1]] != 0

    return brute_relation(group, list(elements) + [target], bound, admissible, coeffs)


def brute_generating_system(group, candidates, bound: int,
                            coeffs: CoefficientArray | None = None) -> list:
    """Reference greedy loop: one full brute-force generation test per element."""
    if coeffs is None:
        coeffs = CoefficientArray(bound)
    accepted: list = []
    for element in candidates:
        if brute_generates(group, accepted, bound, coeffs, element) is None:
            accepted.append(element)
    return accepted


def harmonic_oracle(p: int, index, upper: int) -> int:
    """Nested-loop mod-p harmonic sum, straight from the definition.

    Sums prod(m_l**(-k_l)) over strictly increasing tuples m ending at or
    below `upper`.  Inverse powers come from Python's built-in modular
    pow, tabulated once per position.
    """
    parts = tuple(index)
    if not parts:
        return 1
    if upper ** len(parts) > ENUMERATION_LIMIT:
        raise TooLarge(f"{upper}**{len(parts)} summands exceed the guard")
    depth = len(parts)
    tab = []
    for k in parts:
        col = [0] * (upper + 1)
        for m in range(1, upper + 1):
            col[m] = pow(m, -k, p)
        tab.append(col)

    def descend(pos, lo):
        col = tab[pos]
        if pos == depth - 1:
            return sum(col[lo:]) % p
        total = 0
        for m in range(lo, upper - (depth - pos) + 2):
            total += col[m] * descend(pos + 1, m + 1)
        return total % p

    return descend(0, 1)
