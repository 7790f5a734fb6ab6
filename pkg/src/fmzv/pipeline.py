"""End-to-end relation discovery for finite multiple zeta values.

For a weight w, a prime list p_0..p_{L-1} and a coefficient bound B, the
pipeline precomputes the residue vector of every weight-w composition
across all primes, then runs the greedy generating-system scan directly on
those residue tuples: the MITM dictionary is keyed by the first L^L
coordinates only (packed to bytes), a key hit is confirmed on the
remaining coordinates, and both the dictionary length D^L and the key
length L^L grow under explicit cost models as generators accumulate.

Working with residue tuples keeps every operation inside machine-word
moduli; the product N of all primes is only ever formed for the
accidental-vanishing guard, which insists that N dwarfs the number of
ways a bounded rational combination could vanish by chance.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from itertools import product

from .dynamic_mitm import COST_CAP, should_grow_left
from .harmonic import multi_prime_mhs, residues_for_indices
from .indices import Index, compositions
from .mitm import CoefficientArray
from .modarith import Prime

logger = logging.getLogger(__name__)

_KEY_POLICIES = ("cost", "zero", "full")


class ConfigError(ValueError):
    """Invalid pipeline configuration."""


class WeightMismatch(ValueError):
    """Relation indices do not share a single weight."""


@dataclass(frozen=True)
class PipelineConfig:
    """Inputs of one discovery run.

    Primes must be pairwise distinct and exceed both the coefficient
    bound and the weight.
    """

    weight: int
    primes: tuple
    bound: int
    safety_factor: int = 10**6
    workers: int = 1
    keys_only: bool = False

    def __post_init__(self):
        if self.weight < 0:
            raise ConfigError("weight must be non-negative")
        if self.bound < 0:
            raise ConfigError("bound must be non-negative")
        if self.safety_factor < 1:
            raise ConfigError("safety_factor must be at least 1")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if not self.primes:
            raise ConfigError("at least one prime is required")
        try:
            ps = tuple(p if isinstance(p, Prime) else Prime(p) for p in self.primes)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if len(set(ps)) != len(ps):
            raise ConfigError(f"duplicate primes in {ps}")
        for p in ps:
            if p <= self.bound:
                raise ConfigError(f"prime {p} must exceed the bound {self.bound}")
            if p <= self.weight:
                raise ConfigError(f"prime {p} must exceed the weight {self.weight}")
        object.__setattr__(self, "primes", ps)

    @property
    def modulus(self) -> int:
        """N, the exact product of all primes."""
        n = 1
        for p in self.primes:
            n *= int(p)
        return n


def parse_config_text(text: str, default_workers: int = 1) -> PipelineConfig:
    """Parse the key = value configuration format.

    Keys: weight, primes (comma list), bound, safety_factor, workers,
    keys_only.  Lines starting with '#' are comments.  default_workers
    applies when the file does not set a worker count (the CLI passes the
    FMZV_WORKERS value here).
    """
    known = {"weight", "primes", "bound", "safety_factor", "workers", "keys_only"}
    data: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        key, sep, value = s.partition("=")
        if not sep:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key = key.strip()
        if key not in known:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in data:
            raise ConfigError(f"line {lineno}: repeated key {key!r}")
        data[key] = value.strip()
    for required in ("weight", "primes", "bound"):
        if required not in data:
            raise ConfigError(f"missing required key {required!r}")

    def as_int(key: str, default=None) -> int:
        if key not in data:
            return default
        try:
            return int(data[key])
        except ValueError:
            raise ConfigError(f"key {key!r}: expected an integer, got {data[key]!r}") from None

    keys_only = data.get("keys_only", "false").lower()
    if keys_only not in ("true", "false", "0", "1"):
        raise ConfigError(f"key 'keys_only': expected a boolean, got {data['keys_only']!r}")
    try:
        primes = tuple(int(t) for t in data["primes"].split(",") if t.strip())
    except ValueError:
        raise ConfigError(f"key 'primes': expected a comma list of integers") from None
    return PipelineConfig(
        weight=as_int("weight"),
        primes=primes,
        bound=as_int("bound"),
        safety_factor=as_int("safety_factor", 10**6),
        workers=as_int("workers", default_workers),
        keys_only=keys_only in ("true", "1"),
    )


def expected_dimension(weight: int) -> int:
    """Conjectured dimension of the weight-w span: d_w = d_{w-2} + d_{w-3}.

    Base cases: 1 for weights 0 and 3, 0 for weights 1 and 2.
    """
    if weight < 0:
        raise ValueError("weight must be non-negative")
    d = [1, 0, 0, 1]
    for w in range(4, weight + 1):
        d.append(d[w - 2] + d[w - 3])
    return d[weight]


def keyed_scan_cost(bound: int, _gen_count: int, left_len: int, right_len: int,
                    total: int, done: int, key_len: int, key_modulus: int) -> int:
    """Cost model for the key length: rebuild work plus expected bucket scans.

    bound**left_len * key_len insertions for the rebuild, and for each of
    the remaining elements bound**(right_len+1) probes that each touch
    roughly bound**left_len / key_modulus bucket entries (integer
    division, so a key space larger than the dictionary zeroes the term).
    """
    if done > total:
        raise ValueError("done exceeds total")
    if key_modulus < 1:
        raise ValueError("key modulus must be positive")
    rebuild = bound**left_len * key_len
    probes = (total - done) * bound ** (right_len + 1) * (bound**left_len // key_modulus)
    return min(rebuild + probes, COST_CAP)


@dataclass(frozen=True)
class GuardReport:
    """Accidental-vanishing check: is N comfortably above the threshold?

    threshold is #K_w * B**(2d+2); weak_threshold is the looser
    #K_w * B**d comparison figure.  passed means
    n >= safety_factor * threshold.
    """

    passed: bool
    n: int
    threshold: int
    weak_threshold: int
    safety_factor: int

    @property
    def ratio(self) -> float:
        if self.threshold == 0:
            return math.inf
        try:
            return self.n / self.threshold
        except OverflowError:
            return math.inf


def vanishing_guard(config: PipelineConfig, d_estimate: int | None = None) -> GuardReport:
    """Compare N against the accidental-vanishing threshold, exactly.

    d_estimate defaults to the conjectured dimension for the weight.
    """
    d = expected_dimension(config.weight) if d_estimate is None else d_estimate
    if d < 0:
        raise ValueError("dimension estimate must be non-negative")
    count = len(compositions(config.weight))
    threshold = count * config.bound ** (2 * d + 2)
    weak = count * config.bound**d
    n = config.modulus
    return GuardReport(
        passed=n >= config.safety_factor * threshold,
        n=n,
        threshold=threshold,
        weak_threshold=weak,
        safety_factor=config.safety_factor,
    )


@dataclass(frozen=True)
class RelationRecord:
    """One discovered relation: sum(coeff_i * z(basis_i)) + coeff_last * z(target) = 0.

    The final coefficient belongs to the target and is always in [1, B];
    a row for an index whose residue vector vanished outright has all
    basis coefficients zero and target coefficient 1.
    """

    basis: tuple
    target: Index
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != len(self.basis) + 1:
            raise ValueError("need one coefficient per basis element plus the target")
        if self.coefficients[-1] < 1:
            raise ValueError("target coefficient must be positive")

    @property
    def is_zero_row(self) -> bool:
        return all(c == 0 for c in self.coefficients[:-1]) and self.coefficients[-1] == 1

    @property
    def weight(self) -> int:
        return self.target.weight


@dataclass(frozen=True)
class PipelineResult:
    """Basis plus one relation record per non-basis composition."""

    config: PipelineConfig
    basis: tuple
    relations: tuple
    guard: GuardReport

    @property
    def zero_rows(self) -> tuple:
        return tuple(r for r in self.relations if r.is_zero_row)

    @property
    def related_rows(self) -> tuple:
        return tuple(r for r in self.relations if not r.is_zero_row)


def _key_widths(primes) -> list[int]:
    return [(int(p).bit_length() + 7) // 8 for p in primes]


def _encode_key(sums, widths, key_len) -> bytes:
    return b"".join(int(sums[l]).to_bytes(widths[l], "little") for l in range(key_len))


class _SplitDictionary:
    """MITM dictionary over residue tuples truncated to the first key_len primes.

    Buckets map packed keys to left coefficient-index tuples in ascending
    tuple order.  In keys-only mode the tuples are dropped and re-derived
    on a hit by replaying the same enumeration, which preserves both
    verdicts and witness order at the price of extra work per hit.
    """

    __slots__ = ("left_len", "key_len", "buckets", "keys_only",
                 "_coeffs", "_basis_z", "_primes", "_widths")

    def __init__(self, coeffs, basis_z, primes, widths, left_len, key_len, keys_only):
        self.left_len = left_len
        self.key_len = key_len
        self.keys_only = keys_only
        self._coeffs = coeffs
        self._basis_z = basis_z
        self._primes = primes
        self._widths = widths
        self.buckets = set() if keys_only else {}
        for tup in product(range(len(coeffs)), repeat=left_len):
            key = self._key_of(tup)
            if keys_only:
                self.buckets.add(key)
            else:
                self.buckets.setdefault(key, []).append(tup)

    def _key_of(self, tup) -> bytes:
        sums = [0] * self.key_len
        for d, b in enumerate(tup):
            c = self._coeffs[b]
            zd = self._basis_z[d]
            for l in range(self.key_len):
                sums[l] = (sums[l] + c * zd[l]) % self._primes[l]
        return _encode_key(sums, self._widths, self.key_len)

    def candidates(self, key: bytes):
        """Left tuples whose partial sums match the key, in canonical order."""
        if not self.keys_only:
            return self.buckets.get(key, ())
        if key not in self.buckets:
            return ()
        return (
            tup
            for tup in product(range(len(self._coeffs)), repeat=self.left_len)
            if self._key_of(tup) == key
        )


def run_pipeline(config: PipelineConfig, *, dict_policy: str = "cost",
                 key_policy: str = "cost") -> PipelineResult:
    """Discover a generating basis and one relation per remaining composition.

    Compositions are scanned in canonical order.  An index whose residue
    vector is zero at every prime is recorded as a trivial relation; an
    index some bounded combination of the current basis can cancel gets a
    witness record (first witness in scan order: target coefficient
    ascending 1..B, then right tuples in ascending order, then bucket
    order); anything else joins the basis.  Witness coefficient vectors
    are padded with zeros up to the final basis size, so records made
    early stay valid verbatim.

    dict_policy and key_policy override the two growth rules (values:
    "cost", "always"/"never" for the dictionary, "cost", "zero"/"full"
    for the key length); outputs are identical under every combination,
    only the work distribution moves.
    """
    if key_policy not in _KEY_POLICIES:
        raise ValueError(f"unknown key policy {key_policy!r}")
    guard = vanishing_guard(config)
    if not guard.passed:
        logger.warning(
            "accidental-vanishing guard: N=%.3e is below %d * threshold=%.3e",
            float(guard.n), guard.safety_factor, float(guard.threshold),
        )

    weight, bound, primes = config.weight, config.bound, config.primes
    n_primes = len(primes)
    table = multi_prime_mhs(primes, weight, config.workers)
    targets = compositions(weight)
    total = len(targets)
    coeffs = CoefficientArray(bound)
    widths = _key_widths(primes)

    basis: list[Index] = []
    basis_z: list[tuple] = []
    raw: list[tuple] = []  # (target, witness-or-None, basis size at the time)
    left_len = 0
    right_len = 0
    key_len = n_primes if key_policy == "full" else 0
    key_modulus = 1
    for p in primes[:key_len]:
        key_modulus *= int(p)

    def rebuild() -> _SplitDictionary:
        return _SplitDictionary(
            coeffs, basis_z, primes, widths, left_len, key_len, config.keys_only
        )

    dictionary = rebuild()

    for done, target in enumerate(targets):
        z = table[target].entries
        if all(v == 0 for v in z):
            raw.append((target, None, len(basis)))
            continue
        found = None
        for c in range(1, bound + 1):
            for right in product(range(len(coeffs)), repeat=right_len):
                sums = [c * z[l] % primes[l] for l in range(key_len)]
                for d, b in enumerate(right):
                    cb = coeffs[b]
                    zd = basis_z[left_len + d]
                    for l in range(key_len):
                        sums[l] = (sums[l] + cb * zd[l]) % primes[l]
                key = _encode_key(
                    [(-sums[l]) % primes[l] for l in range(key_len)], widths, key_len
                )
                for left in dictionary.candidates(key):
                    full = left + right
                    ok = True
                    for l in range(key_len, n_primes):
                        s = c * z[l]
                        for d, b in enumerate(full):
                            s += coeffs[b] * basis_z[d][l]
                        if s % primes[l] != 0:
                            ok = False
                            break
                    if ok:
                        found = (full, c)
                        break
                if found:
                    break
            if found:
                break
        if found:
            raw.append((target, found, len(basis)))
            continue

        basis.append(target)
        basis_z.append(z)
        if should_grow_left(bound, left_len, right_len, total, done, dict_policy):
            left_len += 1
            if key_policy == "cost" and key_len < n_primes:
                cost_keep = keyed_scan_cost(
                    bound, len(basis), left_len, right_len, total, done,
                    key_len, key_modulus,
                )
                cost_grow = keyed_scan_cost(
                    bound, len(basis), left_len, right_len, total, done,
                    key_len + 1, key_modulus * int(primes[key_len]),
                )
                if cost_keep > cost_grow:
                    key_len += 1
                    key_modulus *= int(primes[key_len - 1])
            dictionary = rebuild()
        else:
            right_len += 1

    final = len(basis)
    relations = []
    for target, witness, size_then in raw:
        if witness is None:
            vec = (0,) * final + (1,)
        else:
            full, c = witness
            vec = (
                tuple(coeffs[b] for b in full)
                + (0,) * (final - size_then)
                + (c,)
            )
        relations.append(RelationRecord(tuple(basis), target, vec))
    return PipelineResult(config, tuple(basis), tuple(relations), guard)


def _combination_residues(record: RelationRecord, vectors: dict, primes) -> dict:
    out = {}
    for l, p in enumerate(primes):
        s = record.coefficients[-1] * vectors[record.target].entries[l]
        for c, k in zip(record.coefficients, record.basis):
            s += c * vectors[k].entries[l]
        out[int(p)] = s % int(p)
    return out


def verify_relation(record: RelationRecord, primes, workers: int = 1) -> dict:
    """Recompute the record's combination mod each prime, from scratch.

    Returns {prime: residue}; the relation holds at a prime exactly when
    its residue is 0.  All indices must share one weight and every prime
    must exceed it.
    """
    weights = {k.weight for k in record.basis} | {record.target.weight}
    if len(weights) != 1:
        raise WeightMismatch(f"indices span weights {sorted(weights)}")
    vectors = residues_for_indices(primes, list(record.basis) + [record.target], workers)
    return _combination_residues(record, vectors, [Prime(p) for p in primes])


def verify_records(records, primes, workers: int = 1) -> list:
    """Bulk verify_relation: one harmonic sweep per prime for all records.

    Returns the per-record residue dicts in input order.
    """
    records = list(records)
    if not records:
        return []
    weights = set()
    needed = set()
    for rec in records:
        weights |= {k.weight for k in rec.basis} | {rec.target.weight}
        needed |= set(rec.basis) | {rec.target}
    if len(weights) != 1:
        raise WeightMismatch(f"indices span weights {sorted(weights)}")
    ps = [Prime(p) for p in primes]
    vectors = residues_for_indices(ps, sorted(needed, key=lambda k: k.parts), workers)
    return [_combination_residues(rec, vectors, ps) for rec in records]
