"""Greedy minimal-generating-system construction with a persistent MITM dictionary.

The naive greedy loop rebuilds its MITM dictionary from scratch for every
candidate element.  Here the dictionary persists across the whole scan:
when a new generator is accepted, either the dictionary side grows by one
position (one rebuild over the enlarged left tuple space) or the scan side
does (no rebuild), whichever the cost model predicts to be cheaper for the
remaining elements.

The returned generator list is the same under every rebuild policy; the
policy only moves work between dictionary construction and scanning.
"""

from __future__ import annotations

from itertools import product

from .mitm import CoefficientArray, MitmDictionary

# Saturation sentinel for cost estimates (keeps comparisons cheap and total).
COST_CAP = (1 << 63) - 1

_POLICIES = ("cost", "always", "never")


def scan_cost(bound: int, right_len: int, total: int, done: int) -> int:
    """Expected remaining scan work: bound**right_len * (total - done).

    Saturates at a sentinel instead of growing without bound.
    """
    if done > total:
        raise ValueError("done exceeds total")
    try:
        est = bound**right_len * (total - done)
    except OverflowError:  # pragma: no cover - ints do not overflow
        return COST_CAP
    return min(est, COST_CAP)


def should_grow_left(bound: int, left_len: int, right_len: int, total: int,
                     done: int, policy: str = "cost") -> bool:
    """Decide whether the dictionary side should absorb a new generator.

    Growing left costs one rebuild (bound**(left_len+1) insertions) but
    keeps per-element scans at bound**right_len; growing right is free now
    but multiplies every remaining scan by the alphabet size.
    """
    if policy == "always":
        return True
    if policy == "never":
        return False
    if policy != "cost":
        raise ValueError(f"unknown policy {policy!r}")
    rebuild = min(bound ** (left_len + 1), COST_CAP)
    keep_scan = scan_cost(bound, right_len, total, done)
    grew_scan = scan_cost(bound, right_len + 1, total, done)
    return grew_scan > rebuild + keep_scan


def minimal_generating_system(group, candidates, bound: int,
                              coeffs: CoefficientArray | None = None, *,
                              policy: str = "cost",
                              keys_only: bool = False) -> list:
    """Greedy minimal generating system of the candidate list.

    Scans the candidates in the given order; an element that no bounded
    combination of the accepted generators can cancel (together with a
    nonzero coefficient on the element itself) becomes a generator.  By
    construction no accepted generator is generated by its predecessors.

    keys_only stores bare dictionary keys instead of witness tuples, per
    the observation that this loop only ever tests bucket emptiness.
    """
    if policy not in _POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    if coeffs is None:
        coeffs = CoefficientArray(bound)
    candidates = list(candidates)
    total = len(candidates)
    accepted: list = []
    left_len = 0
    right_len = 0
    dictionary = MitmDictionary.build(group, accepted, coeffs, 0, keys_only)

    for done, element in enumerate(candidates):
        generated = False
        for b in coeffs.nonzero_indices():
            target_part = group.scale(coeffs[b], element)
            for right in product(range(len(coeffs)), repeat=right_len):
                y = target_part
                for d, br in enumerate(right):
                    y = group.add(y, group.scale(coeffs[br], accepted[left_len + d]))
                if dictionary.contains(group.encode(group.neg(y))):
                    generated = True
                    break
            if generated:
                break
        if generated:
            continue
        accepted.append(element)
        if should_grow_left(bound, left_len, right_len, total, done, policy):
            left_len += 1
            dictionary = MitmDictionary.build(
                group, accepted[:left_len], coeffs, left_len, keys_only
            )
        else:
            right_len += 1
    return accepted
