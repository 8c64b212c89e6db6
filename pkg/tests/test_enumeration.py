import pytest

from abacus_partitions.config import load_settings, use_settings
from abacus_partitions.enumeration import (
    CountKind,
    count_distinct_parts_brute,
    count_self_conjugate_brute,
    count_table,
    p_table,
    pairs_of,
    partitions_of,
    q_table,
    s_table,
    t_table,
    t_value,
    triangular_numbers,
)
from abacus_partitions.errors import IndexOutOfRange, LimitExceeded
from abacus_partitions.series.identities import euler_product


def test_triangular_numbers():
    assert list(triangular_numbers(10)) == [0, 1, 3, 6, 10]
    assert list(triangular_numbers(0)) == [0]


def test_p_matches_brute_force():
    table = p_table(30)
    for n in range(31):
        assert table[n] == len(partitions_of(n))


def test_p_matches_euler_product_coefficients():
    assert p_table(500).values == euler_product(500).coeffs


def test_p_of_ten_through_the_pairs_recurrence():
    t = t_table(5)
    assert (t[5], t[2], t[0]) == (36, 5, 1)
    assert p_table(10)[10] == 42 == t[5] + t[2] + t[0]


def test_known_large_value():
    assert p_table(100)[100] == 190569292


def test_t_matches_double_enumeration():
    table = t_table(20)
    for n in range(21):
        assert table[n] == len(pairs_of(n))


def test_t_value_accepts_plain_sequences():
    p = p_table(8).values
    assert t_value(8, list(p)) == t_table(8)[8]
    with pytest.raises(IndexOutOfRange):
        t_value(9, p)


def test_s_and_q_match_brute_force():
    s, q = s_table(25), q_table(25)
    for n in range(26):
        assert s[n] == count_self_conjugate_brute(n)
        assert q[n] == count_distinct_parts_brute(n)


def test_small_s_and_q_values():
    assert q_table(6)[6] == 4
    assert s_table(4)[3] == 1
    assert s_table(4)[4] == 1
    assert q_table(10)[5] == 3
    assert q_table(10)[10] == 10


def test_s_and_q_accept_a_precomputed_p_table():
    p = p_table(50)
    assert s_table(200, p) == s_table(200)
    assert q_table(100, p) == q_table(100)
    with pytest.raises(IndexOutOfRange):
        q_table(200, p)


def test_tables_are_monotone():
    p = p_table(300)
    assert all(p[n] <= p[n + 1] for n in range(300))
    q = q_table(300, p)
    assert all(q[n] <= q[n + 1] for n in range(300))
    assert all(q[n] <= p[n] for n in range(301))


def test_count_table_dispatch():
    assert count_table(CountKind.P, 10)[10] == 42
    assert count_table(CountKind("q"), 10)[10] == 10
    assert count_table(CountKind.T, 2).as_rows() == [(0, 1), (1, 2), (2, 5)]


def test_table_indexing_outside_range():
    table = p_table(10)
    with pytest.raises(IndexOutOfRange):
        table[11]
    with pytest.raises(IndexOutOfRange):
        table[-1]
    with pytest.raises(IndexOutOfRange):
        p_table(-1)


def test_brute_force_guard():
    use_settings(load_settings(brute_force_limit=10))
    assert len(partitions_of(10)) == 42
    with pytest.raises(LimitExceeded):
        partitions_of(11)
    with pytest.raises(LimitExceeded):
        count_self_conjugate_brute(41)
