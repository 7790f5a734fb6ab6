import pytest

from fmzv.harmonic import (
    DuplicatePrime,
    choose_engine,
    mhs_horizontal,
    mhs_naive,
    mhs_vertical,
    multi_prime_mhs,
    residues_for_indices,
    tree_mhs,
)
from fmzv.indices import Index, bounded_weight_tree, compositions, prefix_tree
from fmzv.modarith import Prime
from fmzv.oracle import harmonic_oracle

K = Index


def test_naive_base_cases():
    assert mhs_naive(5, K(), 3) == 1
    assert mhs_naive(5, K((2, 1)), 0) == 0
    with pytest.raises(ValueError):
        mhs_naive(5, K(), 5)


def test_naive_hand_values():
    # 1 + 1/2 = 1 + 3 = 4 mod 5
    assert mhs_naive(5, K((1,)), 2) == 4
    # 1 + 3 + 2 + 4 = 10 = 0 mod 5
    assert mhs_naive(5, K((1,)), 4) == 0
    assert mhs_naive(5, K((1, 1)), 4) == 0


def test_horizontal_per_prefix():
    assert mhs_horizontal(7, K((2,))) == [1, 0]
    assert mhs_horizontal(5, K()) == [1]
    res = mhs_horizontal(13, K((1, 2)))
    assert res == [
        mhs_naive(13, K(), 12),
        mhs_naive(13, K((1,)), 12),
        mhs_naive(13, K((1, 2)), 12),
    ]


@pytest.mark.parametrize("p", [5, 7, 13])
@pytest.mark.parametrize("parts", [(), (2,), (1, 2), (2, 1, 1)])
def test_vertical_matches_horizontal(p, parts):
    assert mhs_vertical(p, K(parts)) == mhs_horizontal(p, K(parts))[-1]


def test_tree_mhs_examples():
    table = tree_mhs(5, prefix_tree(K((1,))))
    assert table.values == {K(): 1, K((1,)): 0}
    assert tree_mhs(11, bounded_weight_tree(0)).values == {K(): 1}


def test_tree_mhs_against_naive_sweep():
    p = Prime(11)
    table = tree_mhs(p, bounded_weight_tree(4))
    assert len(table.values) == 16
    for k, v in table.values.items():
        assert v == mhs_naive(p, k, 10), k


@pytest.mark.parametrize("p", [5, 13])
def test_engines_against_oracle_small(p):
    for w in range(0, 5):
        for k in compositions(w):
            want = harmonic_oracle(p, k, p - 1)
            assert mhs_naive(p, k, p - 1) == want
            assert mhs_horizontal(p, k)[-1] == want
            assert mhs_vertical(p, k) == want


def test_base_row_is_one_for_all_engines():
    for j in (0, 1, 6):
        assert mhs_naive(7, K(), j) == 1
    assert mhs_horizontal(7, K())[0] == 1
    assert mhs_vertical(7, K()) == 1
    assert tree_mhs(7, bounded_weight_tree(2)).value(K()) == 1


@pytest.mark.parametrize("p", [5, 7, 11, 101, 997])
def test_depth_zero_vanishing(p):
    # sum over F_p* of m**-k is 0 whenever (p-1) does not divide k
    for k in range(1, min(p - 1, 12)):
        assert mhs_horizontal(p, K((k,)))[-1] == 0


def test_power_sum_nonvanishing_at_divisor():
    # k = p-1 makes every term 1, so the sum is p-1, not 0
    assert mhs_horizontal(5, K((4,)))[-1] == 4


@pytest.mark.parametrize("p", [11, 31, 101])
def test_stuffle_identity(p):
    # z(a)z(b) = z(a,b) + z(b,a) + z(a+b); the left side vanishes for
    # p-1 not dividing a or b, forcing the right side to 0
    for a in range(1, 5):
        for b in range(1, 5):
            t = tree_mhs(p, bounded_weight_tree(a + b))
            combo = (
                t.value(K((a, b))) + t.value(K((b, a))) + t.value(K((a + b,)))
            ) % p
            assert combo == 0, (p, a, b)


def test_multi_prime_examples():
    assert {k.parts: rv.entries for k, rv in multi_prime_mhs((5, 7), 1).items()} == {
        (1,): (0, 0)
    }
    assert {k.parts: rv.entries for k, rv in multi_prime_mhs((5,), 0).items()} == {
        (): (1,)
    }


def test_multi_prime_canonical_order_and_validation():
    table = multi_prime_mhs((11, 13), 4)
    assert list(table.keys()) == compositions(4)
    with pytest.raises(DuplicatePrime):
        multi_prime_mhs((11, 11), 2)
    with pytest.raises(ValueError):
        multi_prime_mhs((5, 7), 5)  # prime must exceed the weight


def test_multi_prime_worker_count_is_invisible():
    one = multi_prime_mhs((101, 103, 107), 6, workers=1)
    many = multi_prime_mhs((101, 103, 107), 6, workers=3)
    assert one == many


def test_residues_for_indices_matches_table():
    primes = (11, 13)
    table = multi_prime_mhs(primes, 5)
    wanted = [K((4, 1)), K((3, 2)), K((1, 1, 3))]
    sub = residues_for_indices(primes, wanted)
    for k in wanted:
        assert sub[k] == table[k]


def test_residue_vector_zero_flag():
    table = multi_prime_mhs((11, 13), 2)
    assert table[K((2,))].is_zero()


def test_single_part_weight10_vanishes_at_large_primes():
    # z_p((10)) = 0 whenever p-1 does not divide 10 ...
    rv = residues_for_indices((10007, 10009), [K((10,))])[K((10,))]
    assert rv.entries == (0, 0)
    # ... but not at p = 11, where every term is 1 and the sum is -1
    assert mhs_horizontal(11, K((10,)))[-1] == 10


def test_choose_engine_crossover():
    assert choose_engine(101, K((1,) * 6)) == "horizontal"
    assert choose_engine(101, K((1,) * 8)) == "vertical"
