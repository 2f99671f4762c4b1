from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from gln_invariants.decay import (
    CharacterList,
    decay_t,
    decay_t_arthur,
    dominates,
    maximizer_certificate,
    prefix_sums,
)
from gln_invariants.partitions import Partition, partition_tuples
from gln_invariants.verify import arthur_rep_from_partition

from conftest import unitary_reps

H = Fraction(1, 2)


def test_prefix_sums_examples():
    assert prefix_sums([1, 2, 3]) == (1, 3, 6)
    assert prefix_sums([H, H, -H, -H]) == (H, 1, H, 0)
    assert prefix_sums([0, 0, 0]) == (0, 0, 0)


def test_dominates_examples():
    assert dominates([1, 2, 3], [1, 2, 3])
    assert dominates([1, 0], [0, 1])
    assert not dominates([0, 1], [1, 0])
    with pytest.raises(ValueError):
        dominates([1], [1, 2])


def test_character_list_sorting_and_symmetry():
    xi = CharacterList([-H, H, 0])
    assert list(xi) == [H, 0, -H]
    assert xi.is_negation_symmetric()
    assert not CharacterList([H, H, -H, H]).is_negation_symmetric()


def test_decay_t_examples():
    tempered = decay_t([0] * 6)
    assert tempered.t == 0 and not tempered.p_is_infinite
    assert tempered.p == 2

    half = decay_t([H, H, -H, -H])  # ratios 1/3, 1/2, 1/3
    assert half.t == H
    assert half.maximizers == {2}
    assert half.p == 4

    # N = 2: the single ratio is 2*sigma_1 / (1*(2-1))
    assert decay_t([Fraction(1, 4), -Fraction(1, 4)]).t == H
    assert decay_t([H, -H]).t == 1  # the d = 2 string, a character of GL_2

    with pytest.raises(ValueError):
        decay_t([Fraction(0)])


def test_decay_t_infinite_case():
    n = 5
    full = decay_t([Fraction(n - 1 - 2 * i, 2) for i in range(n)])
    assert full.t == 1 and full.p_is_infinite
    assert full.p is None


def test_decay_t_arthur_examples():
    assert decay_t_arthur([1] * 7) == 0
    assert decay_t_arthur([7]) == 1
    assert decay_t_arthur(Partition([2, 2])) == H
    with pytest.raises(ValueError):
        decay_t_arthur([1])
    with pytest.raises(ValueError):
        decay_t_arthur([])


def test_formula_equivalence_small():
    for n in range(2, 13):
        for parts in partition_tuples(n):
            pi = arthur_rep_from_partition(parts)
            assert decay_t(pi.character()).t == decay_t_arthur(parts)


def test_t_zero_iff_trivial_arthur_sl2():
    for n in range(2, 13):
        for parts in partition_tuples(n):
            pi = arthur_rep_from_partition(parts)
            is_zero = decay_t(pi.character()).t == 0
            assert is_zero == (parts == (1,) * n)


@settings(max_examples=150)
@given(unitary_reps())
def test_t_in_unit_interval_for_unitarizable(pi):
    if pi.N < 2:
        return
    t = decay_t(pi.character()).t
    assert 0 <= t <= 1


@settings(max_examples=200)
@given(st.lists(st.integers(-8, 8), min_size=2, max_size=10))
def test_negation_reversal_invariance_for_sum_zero(values):
    # center the multiset so it sums to zero, as unitary central characters do
    total = sum(values)
    n = len(values)
    xs = [Fraction(v * n - total, n) for v in values]
    assert sum(xs) == 0
    flipped = [-v for v in xs]
    assert decay_t(xs).t == decay_t(flipped).t


def test_maximizer_certificate_examples():
    report = maximizer_certificate([H, H, -H, -H])
    assert report.argmax == {2}
    assert report.block_boundaries == {2}
    assert report.contained

    degenerate = maximizer_certificate([0] * 6)
    assert degenerate.contained and not degenerate.block_boundaries

    # partition [3,1,1,1] of 6: character (1, 0, 0, 0, 0, -1)
    xi = arthur_rep_from_partition([3, 1, 1, 1]).character()
    assert list(xi) == [1, 0, 0, 0, 0, -1]
    report = maximizer_certificate(xi)
    assert report.argmax == {1}
    assert report.block_boundaries == {1}
    assert report.contained


def test_maximizer_location_small():
    for n in range(2, 13):
        for parts in partition_tuples(n):
            xi = arthur_rep_from_partition(parts).character()
            assert maximizer_certificate(xi).contained


@settings(max_examples=300)
@given(
    st.integers(0, 50),
    st.integers(1, 50),
    st.integers(0, 50),
    st.integers(1, 50),
)
def test_ratio_mediant_inequality(a, b, c, d):
    f1, f2 = Fraction(a, b), Fraction(c, d)
    mediant = Fraction(a + c, b + d)
    assert max(f1, f2) >= mediant >= min(f1, f2)
