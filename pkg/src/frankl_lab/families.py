"""Set families on a ground set [n] = {1, ..., n}, represented by bitmasks.

A subset S of [n] is stored as an unsigned integer mask with bit e-1 set
iff element e is in S.  A family is a strictly increasing tuple of such
masks, so distinctness and a canonical order come for free.  The empty
set (mask 0) is an ordinary member: extremal values such as f(1,1) = 2
are only attainable with it.

Conventions used across the package:
  - elements are 1-indexed, bits are 0-indexed (element e <-> bit e-1);
  - "at least half" is tested as 2*count >= len(family), so no rational
    arithmetic is needed in the membership-counting hot path;
  - ties are broken toward the smallest element index and the
    lexicographically smallest mask.

Ground sizes are capped at n = 16: every mask fits in 16 bits and a full
membership table fits in a single 65536-bit integer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional

MAX_GROUND_SIZE = 16


def mask_from_elements(elements: Iterable[int], n: int) -> int:
    """Build a bitmask from 1-indexed elements, validating the range."""
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside ground set [{n}]")
        mask |= 1 << (e - 1)
    return mask


def elements_of_mask(mask: int) -> tuple[int, ...]:
    """1-indexed elements of a bitmask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class SetFamily:
    """A collection of distinct subsets of [n], as sorted bitmasks."""

    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_GROUND_SIZE:
            raise ValueError(f"ground size must be in [1, {MAX_GROUND_SIZE}], got {self.n}")
        limit = 1 << self.n
        prev = -1
        for m in self.masks:
            if not isinstance(m, int) or not 0 <= m < limit:
                raise ValueError(f"mask {m!r} outside [0, 2^{self.n})")
            if m <= prev:
                raise ValueError("masks must be strictly increasing (distinct and sorted)")
            prev = m

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SetFamily":
        """Normalize an arbitrary-order mask iterable; duplicates are an error."""
        ms = sorted(masks)
        for a, b in zip(ms, ms[1:]):
            if a == b:
                raise ValueError(f"duplicate mask {a}")
        return cls(n, tuple(ms))

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        """Build from element collections, e.g. [(1,), (2, 3)]."""
        return cls.from_masks(n, (mask_from_elements(s, n) for s in sets))

    @classmethod
    def power_set(cls, n: int) -> "SetFamily":
        return cls(n, tuple(range(1 << n)))

    @classmethod
    def empty(cls, n: int) -> "SetFamily":
        return cls(n, ())

    @cached_property
    def member_bits(self) -> int:
        """Membership table as one integer: bit m set iff mask m is a member."""
        bits = 0
        for m in self.masks:
            bits |= 1 << m
        return bits

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, mask: int) -> bool:
        return (self.member_bits >> mask) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.masks)

    def sets(self) -> tuple[tuple[int, ...], ...]:
        """Members as 1-indexed element tuples, in mask order."""
        return tuple(elements_of_mask(m) for m in self.masks)


@dataclass(frozen=True)
class FrequencyVector:
    """Per-element membership counts: counts[e-1] = |{S in F : e in S}|."""

    counts: tuple[int, ...]

    def of(self, element: int) -> int:
        return self.counts[element - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)


class MaxFrequency(NamedTuple):
    element: int
    count: int


def is_union_closed(family: SetFamily) -> bool:
    """True iff S | T is a member for every pair of members.

    Pairwise O(|F|^2) check with bitset membership lookup; exits on the
    first missing union.
    """
    masks = family.masks
    bits = family.member_bits
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            u = a | b
            if u != b and not (bits >> u) & 1:
                return False
    return True


def union_closure(family: SetFamily) -> SetFamily:
    """Smallest union-closed superfamily: fixed point of adding pairwise unions."""
    known = set(family.masks)
    members: list[int] = []
    queue = list(family.masks)
    while queue:
        x = queue.pop()
        for y in members:
            u = x | y
            if u not in known:
                known.add(u)
                queue.append(u)
        members.append(x)
    return SetFamily(family.n, tuple(sorted(known)))


def frequencies(family: SetFamily) -> FrequencyVector:
    """Exact per-element membership counts."""
    counts = [0] * family.n
    for mask in family.masks:
        m = mask
        while m:
            low = m & -m
            counts[low.bit_length() - 1] += 1
            m ^= low
    return FrequencyVector(tuple(counts))


def max_frequency(family: SetFamily) -> MaxFrequency:
    """Most frequent element (smallest index on ties) and its count.

    The empty family has no frequencies at all; by convention it reports
    element 1 with count 0.
    """
    if not family.masks:
        return MaxFrequency(1, 0)
    counts = frequencies(family).counts
    best = max(counts)
    return MaxFrequency(counts.index(best) + 1, best)


def complement(family: SetFamily) -> SetFamily:
    """All masks of the full power set on [n] that are not members."""
    bits = family.member_bits
    missing = tuple(m for m in range(1 << family.n) if not (bits >> m) & 1)
    return SetFamily(family.n, missing)


def frankl_witness(family: SetFamily) -> Optional[int]:
    """Smallest element present in at least half of the sets, or None.

    "At least half" is exact: 2*count >= |F|.  Raises on the empty
    family, for which the conjecture is not stated.  Note that {emptyset}
    is accepted and yields None: it has no elements at all.
    """
    if not family.masks:
        raise ValueError("witness undefined for the empty family")
    size = len(family.masks)
    for e, count in enumerate(frequencies(family).counts, start=1):
        if 2 * count >= size:
            return e
    return None


def family_to_json(family: SetFamily, form: str = "masks") -> dict:
    """Canonical JSON object for a family.

    form="masks" (the emitted default): {"n": 4, "masks": [0, 1, 6]}.
    form="sets": {"n": 4, "sets": [[], [1], [2, 3]]} with the element
    arrays sorted and the list of arrays sorted lexicographically.
    """
    if form == "masks":
        return {"n": family.n, "masks": list(family.masks)}
    if form == "sets":
        return {"n": family.n, "sets": sorted(list(s) for s in family.sets())}
    raise ValueError(f"unknown form {form!r}")


def family_from_json(obj: dict | str) -> SetFamily:
    """Parse either accepted encoding ("masks" or "sets")."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "n" not in obj:
        raise ValueError("family JSON must be an object with an 'n' key")
    n = obj["n"]
    has_masks = "masks" in obj
    has_sets = "sets" in obj
    if has_masks == has_sets:
        raise ValueError("family JSON needs exactly one of 'masks' or 'sets'")
    if has_masks:
        return SetFamily.from_masks(n, obj["masks"])
    return SetFamily.from_sets(n, obj["sets"])
