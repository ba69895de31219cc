import math
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from safeset import (
    InvalidInputError,
    Partition2,
    UnsupportedInputError,
    alpha,
    check_lemma26,
    closed_form,
    enumerate_partitions,
    safe_number,
)
from safeset.alpha import ceil_half


def alpha_by_fractions(m, n):
    """Direct transcription of the minimum using exact rationals and math.ceil."""
    values = []
    for m1 in range(1, m):
        for n1 in range(1, n):
            m2, n2 = m - m1, n - n1
            sep = m * n - (m1 * n1 + m2 * n2)
            values.append(sep + max(math.ceil(Fraction(max(m1 * n1, m2 * n2) - sep, 2)), 1))
    return min(values)


@given(st.integers(-1000, 1000))
def test_ceil_half_matches_math_ceil(x):
    assert ceil_half(x) == math.ceil(Fraction(x, 2))


def test_ceil_half_negative():
    assert ceil_half(-3) == -1


@pytest.mark.parametrize("m,n,count", [(3, 3, 4), (4, 4, 9), (2, 2, 1), (5, 3, 8)])
def test_partition_counts(m, n, count):
    parts = enumerate_partitions(m, n)
    assert len(parts) == count
    assert [(p.m1, p.n1) for p in parts] == sorted((p.m1, p.n1) for p in parts)
    assert all(p.m == m and p.n == n for p in parts)


def test_p2_of_2_2():
    assert enumerate_partitions(2, 2) == [Partition2(1, 1, 1, 1)]


def test_partition_rejects_small():
    with pytest.raises(InvalidInputError):
        enumerate_partitions(1, 4)
    with pytest.raises(InvalidInputError):
        Partition2(0, 3, 1, 1)


@pytest.mark.parametrize("m,n,value", [(3, 3, 5), (4, 4, 8), (3, 4, 6), (5, 5, 12)])
def test_alpha_values(m, n, value):
    assert alpha(m, n).value == value


def test_alpha_5_5_against_fraction_oracle():
    assert alpha_by_fractions(5, 5) == 12


def test_alpha_3_3_detail():
    res = alpha(3, 3)
    assert res.argmin == Partition2(1, 2, 1, 2)
    assert (res.nu1, res.nu2) == (-1, 0)
    assert res.clamp_active


def test_alpha_rejects_small():
    with pytest.raises(InvalidInputError):
        alpha(2, 5)


def test_alpha_matches_fraction_oracle_grid():
    for m in range(3, 25):
        for n in range(3, 25):
            assert alpha(m, n).value == alpha_by_fractions(m, n), (m, n)


@given(st.integers(3, 40), st.integers(3, 40))
def test_alpha_result_invariants(m, n):
    res = alpha(m, n)
    p = res.argmin
    assert res.value == p.objective()
    assert (res.nu1, res.nu2) == p.nu()
    assert sum(nu >= 1 for nu in (res.nu1, res.nu2)) <= 1
    assert res.clamp_active == (max(res.nu1, res.nu2) < 1)
    assert res.value <= ceil_half(m * n - 1) + 1
    # first minimiser in enumeration order
    objectives = [q.objective() for q in enumerate_partitions(m, n)]
    assert enumerate_partitions(m, n)[objectives.index(min(objectives))] == p


@pytest.mark.parametrize("m,n,value", [(1, 5, 3), (2, 7, 7), (4, 6, 11), (3, 3, 5), (4, 4, 8), (1, 1, 1)])
def test_closed_form_values(m, n, value):
    assert closed_form(m, n) == value


@pytest.mark.parametrize("m,n", [(5, 5), (0, 3), (4, 3)])
def test_closed_form_unsupported(m, n):
    with pytest.raises(UnsupportedInputError):
        closed_form(m, n)


@pytest.mark.parametrize("m,n,value", [(2, 7, 7), (3, 3, 5), (5, 5, 12), (7, 2, 7), (1, 1, 1)])
def test_safe_number_values(m, n, value):
    assert safe_number(m, n) == value


def test_symmetry():
    for m in range(3, 101):
        for n in range(m + 1, 101):
            assert alpha(m, n).value == alpha(n, m).value


def test_cap_below_half():
    assert alpha(3, 3).value == 5
    for m in range(3, 40):
        for n in range(m, 40):
            if (m, n) != (3, 3):
                assert alpha(m, n).value <= ceil_half(m * n - 1)


def test_monotone_in_n():
    bad = [(m, n) for m in range(1, 40) for n in range(m, 80) if safe_number(m, n) > safe_number(m, n + 1)]
    if bad:
        warnings.warn(f"safe_number not monotone in n at {bad[:5]}")


@pytest.mark.parametrize(
    "part,m,n",
    [(Partition2(1, 3, 1, 3), 4, 4), (Partition2(2, 2, 2, 2), 4, 4), (Partition2(1, 1, 1, 1), 2, 2)],
)
def test_lemma26_examples(part, m, n):
    assert check_lemma26(part, m, n)


def test_lemma26_counts():
    p = Partition2(1, 3, 1, 3)
    assert p.separator == 6 and p.blocks == (1, 9)
    p = Partition2(2, 2, 2, 2)
    assert p.separator == 8 and p.blocks == (4, 4)


def test_lemma26_rejects_foreign_partition():
    with pytest.raises(InvalidInputError):
        check_lemma26(Partition2(1, 1, 1, 1), 3, 3)
