import math
from fractions import Fraction

import pytest

from frankl_lab import (SearchBudget, SetFamily, bar_f, check_fg_duality,
                        compute_f, compute_g, enumerate_union_closed,
                        frankl_witness, is_union_closed, max_frequency,
                        random_union_closed)

from conftest import all_subfamilies, is_union_closed_reference

# Exhaustively derived value tables (full 2^(2^n) scans, cross-checked
# against the frozenset reference below for n <= 2).
UC_FAMILY_COUNTS = {1: 4, 2: 14, 3: 122, 4: 4960}
F_TABLE_N3 = {1: 2, 2: 4, 3: 5, 4: 8}
F_TABLE_N4 = {0: 1, 1: 2, 2: 4, 3: 5, 4: 8, 5: 9, 6: 10, 7: 12, 8: 16}
G_TABLE_N3 = {1: 0, 2: 1, 3: 2, 4: 2, 5: 3, 6: 4, 7: 4, 8: 4}
G_TABLE_N4 = {1: 0, 2: 1, 3: 2, 4: 2, 5: 3, 6: 4, 7: 4, 8: 4,
              9: 5, 10: 6, 11: 7, 12: 7, 13: 8, 14: 8, 15: 8, 16: 8}


# --- enumeration -------------------------------------------------------------

def test_n1_enumeration_lists_all_four_families():
    fams = [f.masks for f in enumerate_union_closed(1)]
    assert fams == [(), (0,), (1,), (0, 1)]


@pytest.mark.parametrize("n", [1, 2])
def test_enumeration_matches_frozenset_reference(n):
    got = {frozenset(f.sets()) for f in enumerate_union_closed(n)}
    want = {frozenset(tuple(sorted(s)) for s in fam)
            for fam in all_subfamilies(n) if is_union_closed_reference(fam)}
    assert len(got) == UC_FAMILY_COUNTS[n]
    assert got == want


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_counts_and_closedness(n):
    count = 0
    for fam in enumerate_union_closed(n):
        assert is_union_closed(fam)
        count += 1
    assert count == UC_FAMILY_COUNTS[n]


def test_enumeration_is_in_bitset_order():
    seen = [sum(1 << m for m in f.masks) for f in enumerate_union_closed(3)]
    assert seen == sorted(seen)


def test_enumeration_rejects_large_n():
    with pytest.raises(ValueError):
        next(enumerate_union_closed(5))


def test_every_nonempty_union_closed_family_has_a_witness():
    # the conjecture itself, exhaustively on n <= 4
    for n in range(1, 5):
        for fam in enumerate_union_closed(n):
            if len(fam) and fam.masks != (0,):
                assert frankl_witness(fam) is not None


# --- compute_f ----------------------------------------------------------------

@pytest.mark.parametrize("n,expected", [(1, 2), (2, 4), (3, 5), (4, 8)])
def test_f_diagonal_small(n, expected):
    result = compute_f(n, n)
    assert result.value == expected
    assert result.proven_optimal
    assert is_union_closed(result.witness)
    assert max_frequency(result.witness).count <= n
    assert len(result.witness) == expected


def test_f_full_tables_against_frozen_scan():
    for a, v in F_TABLE_N3.items():
        assert compute_f(3, a).value == v
    for a, v in F_TABLE_N4.items():
        assert compute_f(4, a).value == v


def test_f11_witness_needs_the_empty_set():
    result = compute_f(1, 1)
    assert result.witness.masks == (0, 1)  # {emptyset, {1}}


def test_f33_witness_is_lexicographically_smallest():
    assert compute_f(3, 3).witness.masks == (0, 1, 2, 3, 7)


def test_f_at_power_set_threshold():
    for n in range(1, 5):
        result = compute_f(n, 1 << (n - 1))
        assert result.value == 1 << n
        assert result.witness == SetFamily.power_set(n)


def test_f_branch_and_bound_agrees_with_exhaustive_on_lifted_instances():
    # f(5,a) must coincide with f(4,a) once the plateau has started
    assert compute_f(5, 1).value == 2
    assert compute_f(5, 2).value == 4
    assert compute_f(5, 3).value == 5


def test_f55_is_9():
    result = compute_f(5, 5)
    assert result.value == 9
    assert result.proven_optimal


@pytest.mark.stretch
def test_f66_is_10():
    result = compute_f(6, 6)
    assert result.value == 10
    assert result.proven_optimal


def test_f_respects_certificate_cap():
    # B&B at n=7 terminates early once the certified bound is met; with
    # a=1 the bound is far from tight, so this just checks consistency
    result = compute_f(7, 1)
    assert result.value == 2
    assert result.proven_optimal
    assert result.value <= math.floor(bar_f(7, 1))


def test_f_is_monotone_in_both_arguments():
    values = {(n, a): compute_f(n, a).value
              for n in range(1, 5) for a in range(1, 9)}
    for n in range(1, 5):
        for a in range(1, 8):
            assert values[(n, a)] <= values[(n, a + 1)]
    for n in range(1, 4):
        for a in range(1, 9):
            assert values[(n, a)] <= values[(n + 1, a)]


def test_f_plateau_at_a4_spans_the_branch_and_bound_route():
    # f(3,4) = f(4,4) = f(5,4) = 8; the last value exercises n >= 5 search
    assert compute_f(3, 4).value == 8
    assert compute_f(4, 4).value == 8
    result = compute_f(5, 4)
    assert result.value == 8
    assert result.proven_optimal


def test_f_budget_exhaustion_returns_valid_lower_bound():
    result = compute_f(5, 5, SearchBudget(max_nodes=50))
    assert not result.proven_optimal
    assert is_union_closed(result.witness)
    assert max_frequency(result.witness).count <= 5
    assert len(result.witness) == result.value <= 9


def test_f_argument_validation():
    with pytest.raises(ValueError):
        compute_f(0, 1)
    with pytest.raises(ValueError):
        compute_f(3, -1)
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)


def test_f_result_json_schema():
    blob = compute_f(2, 1).to_json()
    assert blob["n"] == 2 and blob["a"] == 1 and blob["value"] == 2
    assert blob["proven_optimal"] is True
    assert blob["witness"] == {"n": 2, "masks": [0, 1]}
    assert blob["nodes"] == 1 << 4  # one full scan of the 2^(2^2) subfamilies
    assert "seconds" in blob


# --- compute_g ----------------------------------------------------------------

def test_g_at_full_power_set():
    result = compute_g(3, 8)
    assert result.value == 4
    assert result.witness == SetFamily.power_set(3)


@pytest.mark.parametrize("n,m,expected", [(3, 6, 4), (3, 7, 4), (4, 13, 8), (4, 16, 8)])
def test_g_near_the_top(n, m, expected):
    result = compute_g(n, m)
    assert result.value == expected
    assert result.proven_optimal
    assert len(result.witness) == m
    assert max_frequency(result.witness).count == expected


def test_g_full_tables_against_frozen_scan():
    for m, v in G_TABLE_N3.items():
        assert compute_g(3, m).value == v
    for m, v in G_TABLE_N4.items():
        assert compute_g(4, m).value == v


def test_g_of_single_set_family_is_zero():
    # {emptyset} has no element at all, so the best size-1 family scores 0
    result = compute_g(2, 1)
    assert result.value == 0
    assert result.witness.masks == (0,)


def test_g_b_and_b_route_matches_exhaustive():
    # 2^4 - m > 4 forces the generic branch-and-bound at n=4 sizes below 12
    from frankl_lab.search import _bb_g, NO_BUDGET
    for m in (5, 9, 11):
        assert _bb_g(4, m, NO_BUDGET).value == G_TABLE_N4[m]


def test_g_on_n5_plateau():
    for i in range(5):
        result = compute_g(5, 32 - i)
        assert result.value == 16, (i, result.value)
        assert result.proven_optimal


def test_g_argument_validation():
    with pytest.raises(ValueError):
        compute_g(3, 0)
    with pytest.raises(ValueError):
        compute_g(3, 9)


# --- random families -----------------------------------------------------------

def test_random_family_is_deterministic_and_closed():
    a = random_union_closed(6, seed=42, density=Fraction(1, 8))
    b = random_union_closed(6, seed=42, density=Fraction(1, 8))
    assert a == b
    assert is_union_closed(a)


def test_random_family_golden_value():
    # pins the PRNG permanently: SplitMix64, one draw per mask
    fam = random_union_closed(6, seed=42, density=Fraction(1, 8))
    assert fam.masks == (4, 16, 18, 20, 21, 22, 23, 24, 26, 28, 29, 30, 31,
                         36, 39, 46, 47, 52, 53, 54, 55, 59, 60, 61, 62, 63)


def test_random_family_density_extremes():
    assert random_union_closed(5, 7, 0).masks == ()
    assert random_union_closed(4, 7, 1) == SetFamily.power_set(4)


def test_random_family_accepts_float_and_string_densities():
    a = random_union_closed(5, 3, "1/4")
    b = random_union_closed(5, 3, Fraction(1, 4))
    assert a == b
    with pytest.raises(ValueError):
        random_union_closed(5, 3, 2)


def test_random_family_seed_sensitivity():
    a = random_union_closed(6, 1, Fraction(1, 8))
    b = random_union_closed(6, 2, Fraction(1, 8))
    assert a != b


# --- f/g duality ----------------------------------------------------------------

@pytest.mark.parametrize("n,a_max", [(1, 2), (2, 4), (3, 4), (3, 8), (4, 8)])
def test_fg_duality_no_violations(n, a_max):
    report = check_fg_duality(n, a_max)
    assert report.verified
    assert report.violations == []


def test_fg_duality_rejects_large_n():
    with pytest.raises(ValueError):
        check_fg_duality(5, 2)
