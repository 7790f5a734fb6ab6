"""Exact arithmetic in prime fields and Z/NZ.

Moduli are capped below 2**62 so that a product of two reduced values fits
in a 128-bit intermediate; this keeps the compiled kernels free of bignum
arithmetic.  Garner reconstruction is the one place where results may
exceed the machine-word range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels

MAX_MODULUS = 1 << 62

# Deterministic Miller-Rabin witnesses for all candidates below 3.3 * 10**24,
# which covers the 2**62 cap with a wide margin.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ZeroInverse(ZeroDivisionError):
    """Raised when asked to invert 0 in a modular ring."""


class NotCoprime(ValueError):
    """Raised when an operation requires coprime moduli and they are not."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for n < 2**62."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Prime(int):
    """An odd prime in [3, 2**62), verified on construction."""

    __slots__ = ()

    def __new__(cls, value: int) -> "Prime":
        v = int(value)
        if v < 3:
            raise ValueError(f"prime must be at least 3, got {v}")
        if v >= MAX_MODULUS:
            raise ValueError(f"prime must be below 2**62, got {v}")
        if not is_prime(v):
            raise ValueError(f"{v} is not prime")
        return super().__new__(cls, v)


class Modulus(int):
    """A modulus in [2, 2**62); no primality requirement."""

    __slots__ = ()

    def __new__(cls, value: int) -> "Modulus":
        v = int(value)
        if v < 2:
            raise ValueError(f"modulus must be at least 2, got {v}")
        if v >= MAX_MODULUS:
            raise ValueError(f"modulus must be below 2**62, got {v}")
        return super().__new__(cls, v)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b)."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def inv_euclid(a: int, modulus: int) -> int:
    """Inverse of a mod modulus via the extended Euclidean algorithm.

    Works for any modulus as long as gcd(a, modulus) = 1.
    """
    a = a % modulus
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {modulus}")
    g, s, _ = xgcd(a, modulus)
    if g != 1:
        raise NotCoprime(f"{a} is not invertible mod {modulus} (gcd {g})")
    return s % modulus


def inv_pow(a: int, p: int) -> int:
    """Inverse of a in F_p as a**(p-2), by binary exponentiation.

    Valid only for prime p.
    """
    a = a % p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


class ModResidue:
    """An element of Z/NZ, reduced to [0, N) on construction."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        m = modulus if isinstance(modulus, (Prime, Modulus)) else Modulus(modulus)
        object.__setattr__(self, "modulus", m)
        object.__setattr__(self, "value", int(value) % m)

    def __setattr__(self, name, _value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _coerce(self, other) -> "ModResidue":
        if isinstance(other, ModResidue):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}"
                )
            return other
        if isinstance(other, int):
            return type(self)(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return type(self)(self.value + o.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return type(self)(self.value - o.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return type(self)(self.value * o.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return type(self)(-self.value, self.modulus)

    def inverse(self) -> "ModResidue":
        return type(self)(inv_euclid(self.value, self.modulus), self.modulus)

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, ModResidue):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, int(self.modulus)))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.value}, {int(self.modulus)})"


class Residue(ModResidue):
    """An element of the prime field F_p."""

    __slots__ = ()

    def __init__(self, value: int, modulus: int):
        p = modulus if isinstance(modulus, Prime) else Prime(modulus)
        super().__init__(value, p)

    def inv_euclid(self) -> "Residue":
        return Residue(inv_euclid(self.value, self.modulus), self.modulus)

    def inv_pow(self) -> "Residue":
        return Residue(inv_pow(self.value, self.modulus), self.modulus)


@dataclass(frozen=True)
class InverseTable:
    """All inverses mod p: entry j (1 <= j < p) is j**-1 mod p.

    Built in Theta(p) time by the recurrence
    inv[j] = -(p // j) * inv[p % j] mod p.  Entry 0 is unused.
    """

    modulus: Prime
    inverses: "object"  # sequence of ints, length p

    def __getitem__(self, j: int) -> int:
        if not 1 <= j < self.modulus:
            raise IndexError(f"no inverse for {j} mod {self.modulus}")
        return int(self.inverses[j])

    def __len__(self) -> int:
        return int(self.modulus)


def build_inverse_table(p: int) -> InverseTable:
    """Batch inverse table for F_p (p >= 3)."""
    prime = p if isinstance(p, Prime) else Prime(p)
    return InverseTable(prime, _kernels.inverse_table(int(prime)))


def garner(residues) -> int:
    """Reconstruct x in [0, prod(moduli)) from (value, modulus) pairs.

    Mixed-radix (Garner) reconstruction.  Moduli must be pairwise coprime;
    this is the one routine here that deliberately works with arbitrarily
    large integers.
    """
    pairs = [(int(v), int(m)) for v, m in residues]
    for v, m in pairs:
        if m < 2:
            raise ValueError(f"modulus must be at least 2, got {m}")
        if not 0 <= v < m:
            raise ValueError(f"value {v} not reduced mod {m}")
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            g = math.gcd(pairs[i][1], pairs[j][1])
            if g != 1:
                raise NotCoprime(
                    f"moduli {pairs[i][1]} and {pairs[j][1]} share factor {g}"
                )
    x = 0
    partial = 1
    for v, m in pairs:
        # digit t solves x + partial * t = v (mod m)
        t = (v - x) * inv_euclid(partial % m, m) % m
        x += partial * t
        partial *= m
    return x
