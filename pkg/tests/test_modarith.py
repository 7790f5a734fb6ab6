import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fmzv.modarith import (
    ModResidue,
    Modulus,
    NotCoprime,
    Prime,
    Residue,
    ZeroInverse,
    build_inverse_table,
    garner,
    inv_euclid,
    inv_pow,
    is_prime,
)

SMALL_PRIMES = [3, 5, 7, 11, 13, 101, 997, 10007]


def test_is_prime_against_sieve():
    limit = 2000
    sieve = [True] * (limit + 1)
    sieve[0] = sieve[1] = False
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            for j in range(i * i, limit + 1, i):
                sieve[j] = False
    for n in range(limit + 1):
        assert is_prime(n) == sieve[n], n


def test_is_prime_large_values():
    assert is_prime(2**61 - 1)  # Mersenne prime
    assert not is_prime(2**61 + 1)
    assert is_prime(10**18 + 9)
    assert not is_prime(10**18 + 7)


def test_prime_constructor_validates():
    assert Prime(10007) == 10007
    with pytest.raises(ValueError):
        Prime(4)
    with pytest.raises(ValueError):
        Prime(2)  # below the >= 3 floor
    with pytest.raises(ValueError):
        Prime(1)
    with pytest.raises(ValueError):
        Prime(2**62 + 1)


def test_modulus_constructor_validates():
    assert Modulus(2) == 2
    assert Modulus(100) == 100
    with pytest.raises(ValueError):
        Modulus(1)


def test_inv_euclid_examples():
    assert inv_euclid(1, Prime(7)) == 1
    assert inv_euclid(2, Prime(5)) == 3  # 2*3 = 6 = 1 mod 5
    # brute-force scan oracle for 4 mod 10007
    expected = next(x for x in range(1, 10007) if 4 * x % 10007 == 1)
    assert inv_euclid(4, Prime(10007)) == expected


def test_inv_pow_examples():
    assert inv_pow(3, Prime(5)) == 2
    for p in SMALL_PRIMES:
        assert inv_pow(1, Prime(p)) == 1


def test_zero_has_no_inverse():
    with pytest.raises(ZeroInverse):
        inv_euclid(0, Prime(7))
    with pytest.raises(ZeroInverse):
        inv_pow(0, Prime(7))
    with pytest.raises(ZeroInverse):
        inv_euclid(14, Prime(7))


def test_inv_euclid_composite_modulus():
    assert inv_euclid(3, Modulus(10)) == 7
    with pytest.raises(NotCoprime):
        inv_euclid(4, Modulus(10))


@pytest.mark.parametrize("p", [101, 997])
def test_inverse_strategies_agree_exhaustively(p):
    table = build_inverse_table(p)
    for a in range(1, p):
        e = inv_euclid(a, p)
        assert e == inv_pow(a, p) == table[a]
        assert a * e % p == 1


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_inverse_table_cross_check(p):
    table = build_inverse_table(p)
    assert len(table) == p
    step = max(1, p // 257)
    for a in range(1, p, step):
        assert table[a] == inv_euclid(a, p)
        assert a * table[a] % p == 1


def test_inverse_table_small_values():
    assert list(build_inverse_table(5).inverses)[1:] == [1, 3, 2, 4]
    assert list(build_inverse_table(3).inverses)[1:] == [1, 2]
    with pytest.raises(IndexError):
        build_inverse_table(5)[0]
    with pytest.raises(IndexError):
        build_inverse_table(5)[5]


def test_garner_examples():
    assert garner([(0, 3), (0, 5)]) == 0
    # scan oracle over 0..14
    expected = next(x for x in range(15) if x % 3 == 2 and x % 5 == 3)
    assert garner([(2, 3), (3, 5)]) == expected == 8
    assert garner([(1, 10007), (1, 10009)]) == 1
    assert garner([]) == 0


def test_garner_eleven_prime_reconstruction():
    from fmzv.tableio import DISCOVERY_PRIMES_W10

    n = math.prod(DISCOVERY_PRIMES_W10)
    x = n - 123456789
    assert garner([(x % p, p) for p in DISCOVERY_PRIMES_W10]) == x


def test_garner_rejects_common_factors():
    with pytest.raises(NotCoprime):
        garner([(1, 6), (2, 10)])


def test_garner_rejects_unreduced_values():
    with pytest.raises(ValueError):
        garner([(3, 3), (0, 5)])


@given(st.data())
@settings(max_examples=200, deadline=None)
def test_garner_round_trip(data):
    moduli = data.draw(
        st.lists(
            st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23, 10007, 10009]),
            min_size=1,
            max_size=5,
            unique=True,
        )
    )
    n = math.prod(moduli)
    x = data.draw(st.integers(0, n - 1))
    assert garner([(x % m, m) for m in moduli]) == x


def test_residue_arithmetic_matches_wide_integers():
    rng = random.Random(2024)
    moduli = [Prime(10007), Prime(10009), Prime(2**61 - 1)]
    for _ in range(100_000):
        m = rng.choice(moduli)
        a, b = rng.randrange(m), rng.randrange(m)
        ra, rb = Residue(a, m), Residue(b, m)
        assert (ra + rb).value == (a + b) % m
        assert (ra - rb).value == (a - b) % m
        assert (ra * rb).value == (a * b) % m


def test_residue_basics():
    r = Residue(12, 7)
    assert r.value == 5 and int(r) == 5
    assert (-r).value == 2
    assert r == 5 and r == Residue(5, 7)
    assert r.inv_euclid() == r.inv_pow()
    assert (r * r.inv_euclid()).value == 1
    with pytest.raises(ValueError):
        Residue(1, 6)  # composite modulus is ModResidue territory
    with pytest.raises(ValueError):
        Residue(1, 7) + Residue(1, 11)


def test_mod_residue_composite():
    r = ModResidue(7, 10)
    assert (r + 5).value == 2
    assert (r * 3).value == 1
    assert r.inverse().value == 3
    assert hash(ModResidue(7, 10)) == hash(r)


def test_residue_is_immutable():
    r = Residue(1, 7)
    with pytest.raises(AttributeError):
        r.value = 3
