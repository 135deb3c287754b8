import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frankl_lab import (SetFamily, complement, family_from_json,
                        family_to_json, frankl_witness, frequencies,
                        is_union_closed, max_frequency, union_closure)
from frankl_lab.families import elements_of_mask, mask_from_elements

from conftest import closure_reference, is_union_closed_reference, to_setset


@st.composite
def families(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    masks = draw(st.sets(st.integers(0, (1 << n) - 1), max_size=12))
    return SetFamily.from_masks(n, masks)


# --- construction and validation -------------------------------------------

def test_masks_must_be_sorted_distinct_and_in_range():
    with pytest.raises(ValueError):
        SetFamily(2, (1, 1))
    with pytest.raises(ValueError):
        SetFamily(2, (2, 1))
    with pytest.raises(ValueError):
        SetFamily(2, (4,))
    with pytest.raises(ValueError):
        SetFamily(0, ())
    with pytest.raises(ValueError):
        SetFamily(17, ())
    with pytest.raises(ValueError):
        SetFamily.from_masks(3, [1, 1])


def test_empty_set_is_a_legal_member():
    fam = SetFamily.from_sets(1, [(), (1,)])
    assert fam.masks == (0, 1)
    assert len(fam) == 2


def test_mask_element_round_trip():
    assert mask_from_elements((2, 4), 4) == 0b1010
    assert elements_of_mask(0b1010) == (2, 4)
    with pytest.raises(ValueError):
        mask_from_elements((5,), 4)


# --- is_union_closed ---------------------------------------------------------

def test_example_family_is_union_closed(example_family):
    assert is_union_closed(example_family)


def test_empty_family_is_union_closed_vacuously():
    assert is_union_closed(SetFamily.empty(3))


def test_missing_pair_union_detected():
    assert not is_union_closed(SetFamily.from_sets(2, [(1,), (2,)]))


# --- union_closure -----------------------------------------------------------

def test_closure_adds_missing_union():
    fam = SetFamily.from_sets(2, [(1,), (2,)])
    assert union_closure(fam).sets() == ((1,), (2,), (1, 2))


def test_closure_of_three_singletons_gives_all_nonempty_subsets():
    fam = SetFamily.from_sets(3, [(1,), (2,), (3,)])
    closed = union_closure(fam)
    assert to_setset(closed) == closure_reference([{1}, {2}, {3}])
    assert len(closed) == 7
    assert 0 not in closed.masks  # the empty set never appears from unions


@given(families())
@settings(max_examples=75, deadline=None)
def test_closure_matches_reference_and_is_idempotent_extensive(fam):
    closed = union_closure(fam)
    assert to_setset(closed) == closure_reference(to_setset(fam))
    assert is_union_closed(closed)
    assert set(fam.masks) <= set(closed.masks)
    assert union_closure(closed) == closed


@given(families(max_n=4), st.data())
@settings(max_examples=50, deadline=None)
def test_closure_is_monotone_under_inclusion(fam, data):
    extra = data.draw(st.sets(st.integers(0, (1 << fam.n) - 1), max_size=4))
    bigger = SetFamily.from_masks(fam.n, set(fam.masks) | extra)
    assert set(union_closure(fam).masks) <= set(union_closure(bigger).masks)


@given(families())
@settings(max_examples=50, deadline=None)
def test_removing_an_inclusion_minimal_member_keeps_closure(fam):
    closed = union_closure(fam)
    if not closed.masks:
        return
    minimal = next(m for m in closed.masks
                   if not any(o != m and o & m == o for o in closed.masks))
    rest = SetFamily(fam.n, tuple(x for x in closed.masks if x != minimal))
    assert is_union_closed(rest)


# --- frequencies / max_frequency --------------------------------------------

def test_power_set_frequencies():
    assert tuple(frequencies(SetFamily.power_set(3))) == (4, 4, 4)


def test_example_family_frequencies(example_family):
    assert tuple(frequencies(example_family)) == (3, 3, 3, 1)


def test_empty_family_frequencies_are_zero():
    assert tuple(frequencies(SetFamily.empty(4))) == (0, 0, 0, 0)


@given(families())
@settings(max_examples=75, deadline=None)
def test_frequency_sum_equals_total_membership(fam):
    assert sum(frequencies(fam)) == sum(len(s) for s in fam.sets())


def test_max_frequency_of_pruned_power_set():
    fam = SetFamily.from_masks(4, [m for m in range(16) if bin(m).count("1") != 1])
    assert max_frequency(fam).count == 7  # 2^3 - 1


def test_max_frequency_conventions(example_family):
    assert max_frequency(SetFamily.from_masks(3, [0])) == (1, 0)
    assert max_frequency(example_family) == (1, 3)  # smallest index on ties


# --- complement ---------------------------------------------------------------

def test_complement_of_power_set_is_empty():
    assert complement(SetFamily.power_set(3)).masks == ()


def test_complement_of_empty_family_is_power_set():
    assert complement(SetFamily.empty(2)).masks == (0, 1, 2, 3)


def test_complement_of_pruned_power_set_is_the_singletons():
    fam = SetFamily.from_masks(3, [m for m in range(8) if bin(m).count("1") != 1])
    assert complement(fam).sets() == ((1,), (2,), (3,))


@given(families())
@settings(max_examples=75, deadline=None)
def test_complement_is_an_involution(fam):
    assert complement(complement(fam)) == fam


# --- frankl_witness ------------------------------------------------------------

def test_example_family_witness(example_family):
    assert frankl_witness(example_family) == 1


def test_family_of_just_the_empty_set_has_no_witness():
    assert frankl_witness(SetFamily.from_masks(2, [0])) is None


def test_witness_rejects_empty_family():
    with pytest.raises(ValueError):
        frankl_witness(SetFamily.empty(2))


def test_witness_threshold_is_exact_half():
    # 2 of 4 sets is exactly half and must count
    fam = SetFamily.from_sets(2, [(), (1,), (1, 2), (2,)])
    assert frankl_witness(fam) == 1


# --- JSON round trips ------------------------------------------------------------

def test_json_masks_form_round_trip(example_family):
    blob = family_to_json(example_family)
    assert blob == {"n": 4, "masks": [1, 6, 7, 15]}
    assert family_from_json(blob) == example_family
    assert family_from_json(json.dumps(blob)) == example_family


def test_json_sets_form_is_lexicographically_sorted():
    fam = SetFamily.from_masks(4, [0, 2, 3])  # {}, {2}, {1,2}
    blob = family_to_json(fam, form="sets")
    assert blob == {"n": 4, "sets": [[], [1, 2], [2]]}
    assert family_from_json(blob) == fam


def test_json_rejects_ambiguous_or_missing_encoding():
    with pytest.raises(ValueError):
        family_from_json({"n": 2})
    with pytest.raises(ValueError):
        family_from_json({"n": 2, "masks": [0], "sets": [[]]})
    with pytest.raises(ValueError):
        family_from_json({"n": 2, "masks": [0, 0]})
