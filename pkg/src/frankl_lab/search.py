"""Exact computation of the extremal functions f(n,a) and g(n,m).

f(n,a) = maximum size of a union-closed family on [n] in which every
element lies in at most a members.  g(n,m) = minimum, over union-closed
families of exactly m sets on [n], of the most frequent element's count.

Three engines, chosen per instance:

  exhaustive   all 2^(2^n) subfamilies, n <= 4 only.  A single scan per n
               is cached and answers every (a) and (m) query, with
               lexicographically smallest witnesses among the optima.
  complement   for g when few sets are missing (2^n - m <= n): choose the
               missing masks instead of the present ones.  A choice is
               admissible iff no missing mask is a union of two present
               ones, and the objective is 2^(n-1) minus the least-covered
               element's cover count.
  branch&bound depth-first over masks ordered by descending popcount, so
               any union of included sets lies strictly earlier in the
               order and closure can be enforced incrementally.  Prunes on
               frequency caps, on incumbent size plus remaining capacity,
               and (for n >= 7) on the certified upper bound fbar(n,a).

Witness policy: exhaustive scans return the lexicographically smallest
optimal family; branch and bound returns the first optimum met in its
fixed order (its size-based prune discards later ties by design).  Both
are deterministic run to run.
"""

from __future__ import annotations

import itertools
import math
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from . import certificate as _certificate
from .families import (SetFamily, is_union_closed, max_frequency, popcount,
                       union_closure)
from .reports import VerificationReport, report


@dataclass(frozen=True)
class SearchBudget:
    """Optional node and wall-clock limits; absent means unlimited."""

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None

    def __post_init__(self) -> None:
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


NO_BUDGET = SearchBudget()


class _Ticker:
    """Budget bookkeeping shared by the search loops."""

    __slots__ = ("budget", "nodes", "t0", "exhausted")

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.t0 = time.perf_counter()
        self.exhausted = False

    def tick(self) -> bool:
        """Count one node; True while within budget."""
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            self.exhausted = True
        elif b.max_seconds is not None and self.nodes % 4096 == 0:
            if time.perf_counter() - self.t0 > b.max_seconds:
                self.exhausted = True
        return not self.exhausted

    @property
    def seconds(self) -> float:
        return time.perf_counter() - self.t0


@dataclass(frozen=True)
class FResult:
    n: int
    a: int
    value: int
    witness: SetFamily
    proven_optimal: bool
    nodes: int
    seconds: float

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "value": self.value,
            "proven_optimal": self.proven_optimal,
            "witness": {"n": self.witness.n, "masks": list(self.witness.masks)},
            "nodes": self.nodes,
            "seconds": self.seconds,
        }


@dataclass(frozen=True)
class GResult:
    n: int
    m: int
    value: int
    witness: SetFamily
    proven_optimal: bool
    nodes: int
    seconds: float

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "value": self.value,
            "proven_optimal": self.proven_optimal,
            "witness": {"n": self.witness.n, "masks": list(self.witness.masks)},
            "nodes": self.nodes,
            "seconds": self.seconds,
        }


# ---------------------------------------------------------------------------
# exhaustive enumeration, n <= 4

EXHAUSTIVE_MAX_N = 4


@lru_cache(maxsize=None)
def _union_closed_bitsets(n: int) -> tuple[int, ...]:
    """Every union-closed subfamily of 2^[n], encoded as a 2^n-bit integer
    (bit m set iff mask m is a member), ascending.  n <= 4 only."""
    full = 1 << n
    out = []
    for bits in range(1 << full):
        g = bits
        masks = []
        while g:
            low = g & -g
            masks.append(low.bit_length() - 1)
            g ^= low
        closed = True
        for i in range(len(masks)):
            mi = masks[i]
            for j in range(i + 1, len(masks)):
                if not (bits >> (mi | masks[j])) & 1:
                    closed = False
                    break
            if not closed:
                break
        if closed:
            out.append(bits)
    return tuple(out)


def _family_from_bitset(n: int, bits: int) -> SetFamily:
    masks = []
    while bits:
        low = bits & -bits
        masks.append(low.bit_length() - 1)
        bits ^= low
    return SetFamily(n, tuple(masks))


def enumerate_union_closed(n: int) -> Iterator[SetFamily]:
    """Yield every union-closed subfamily of 2^[n] once, in mask-bitset order.

    Guarded to n <= 4: there are 2^(2^n) candidates to sift.
    """
    if n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive enumeration capped at n = {EXHAUSTIVE_MAX_N}, got {n}")
    for bits in _union_closed_bitsets(n):
        yield _family_from_bitset(n, bits)


def _bitset_stats(n: int, bits: int) -> tuple[int, int]:
    """(size, max element frequency) of a family bitset."""
    size = 0
    freq = [0] * n
    g = bits
    while g:
        low = g & -g
        mask = low.bit_length() - 1
        g ^= low
        size += 1
        while mask:
            lo = mask & -mask
            freq[lo.bit_length() - 1] += 1
            mask ^= lo
    return size, (max(freq) if freq else 0)


@lru_cache(maxsize=None)
def _exhaustive_tables(n: int) -> tuple[dict, dict]:
    """Best families per max-frequency class and per exact size, n <= 4.

    Returns (by_freq, by_size):
      by_freq[mf] = (largest size among families with max frequency mf,
                     lexicographically smallest such witness mask tuple)
      by_size[m]  = (smallest max frequency among families of size m,
                     lexicographically smallest such witness mask tuple)
    """
    by_freq: dict[int, tuple[int, tuple[int, ...]]] = {}
    by_size: dict[int, tuple[int, tuple[int, ...]]] = {}
    for bits in _union_closed_bitsets(n):
        size, mf = _bitset_stats(n, bits)
        masks = tuple(_family_from_bitset(n, bits).masks)
        cur = by_freq.get(mf)
        if cur is None or size > cur[0] or (size == cur[0] and masks < cur[1]):
            by_freq[mf] = (size, masks)
        if size:
            curs = by_size.get(size)
            if curs is None or mf < curs[0] or (mf == curs[0] and masks < curs[1]):
                by_size[size] = (mf, masks)
    return by_freq, by_size


def _exhaustive_f(n: int, a: int) -> tuple[int, tuple[int, ...]]:
    by_freq, _ = _exhaustive_tables(n)
    best_size = -1
    best_masks: tuple[int, ...] = ()
    for mf, (size, masks) in by_freq.items():
        if mf <= a and (size > best_size or (size == best_size and masks < best_masks)):
            best_size, best_masks = size, masks
    return best_size, best_masks


# ---------------------------------------------------------------------------
# branch and bound for f, n >= 5

_BB_MAX_N = 11  # recursion depth is 2^n + O(1)


def _branch_order(n: int) -> list[int]:
    """Masks by descending popcount, then ascending value; the empty set
    lands last, and S|T of two incomparable masks precedes both."""
    return sorted(range(1 << n), key=lambda m: (-popcount(m), m))


def _seed_incumbent_f(n: int, a: int) -> tuple[int, tuple[int, ...]]:
    """Lower bound from the exhaustive n=4 table; any family on [4] is a
    family on [n] for n >= 4 with unchanged frequencies."""
    return _exhaustive_f(EXHAUSTIVE_MAX_N, min(a, 1 << EXHAUSTIVE_MAX_N))


def _bb_f(n: int, a: int, budget: SearchBudget) -> FResult:
    if n > _BB_MAX_N:
        raise ValueError(f"branch-and-bound search capped at n = {_BB_MAX_N}, got {n}")
    order = _branch_order(n)
    length = len(order)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), length + 1000))
    pcs = [popcount(m) for m in order]
    tick = _Ticker(budget)

    best_size, best_masks = _seed_incumbent_f(n, a)
    cert_cap = math.floor(_certificate.bar_f(n, a)) if n >= 7 and a >= 1 else None
    done_by_cap = cert_cap is not None and best_size >= cert_cap

    freq = [0] * n
    included: list[int] = []
    inc_bits = 0

    def rec(i: int, size: int, slots_left: int) -> None:
        nonlocal best_size, best_masks, inc_bits, done_by_cap
        if done_by_cap or not tick.tick():
            return
        if size > best_size:
            best_size = size
            best_masks = tuple(sorted(included))
            if cert_cap is not None and best_size >= cert_cap:
                done_by_cap = True
                return
        if i == length:
            return
        rem = length - i
        # the empty set sits at the end of the order and costs no slots
        bound = size + 1 + min(rem - 1, slots_left)
        if bound <= best_size:
            return
        mask = order[i]
        k = pcs[i]
        feasible = k <= slots_left
        if feasible and k:
            m = mask
            while m:
                low = m & -m
                if freq[low.bit_length() - 1] >= a:
                    feasible = False
                    break
                m ^= low
        if feasible:
            for t in included:
                u = mask | t
                if u != t and not (inc_bits >> u) & 1:
                    feasible = False
                    break
        if feasible:
            m = mask
            while m:
                low = m & -m
                freq[low.bit_length() - 1] += 1
                m ^= low
            included.append(mask)
            inc_bits |= 1 << mask
            rec(i + 1, size + 1, slots_left - k)
            inc_bits &= ~(1 << mask)
            included.pop()
            m = mask
            while m:
                low = m & -m
                freq[low.bit_length() - 1] -= 1
                m ^= low
        rec(i + 1, size, slots_left)

    rec(0, 0, n * a)
    proven = not tick.exhausted
    witness = SetFamily(n, best_masks)
    return FResult(n, a, best_size, witness, proven, tick.nodes, tick.seconds)


def compute_f(n: int, a: int, budget: SearchBudget = NO_BUDGET) -> FResult:
    """Exact f(n,a) with witness; proven_optimal is False only on budget stop.

    a = 0 is accepted (the only admissible members are none or the empty
    set, so f(n,0) = 1); it arises from the f(n, 2^(n-1)-1) theorem at n=1.
    """
    if n < 1:
        raise ValueError(f"ground size must be >= 1, got {n}")
    if a < 0:
        raise ValueError(f"frequency cap must be >= 0, got {a}")
    t0 = time.perf_counter()
    if a >= 1 << (n - 1):
        # the full power set is feasible and no family can be larger
        return FResult(n, a, 1 << n, SetFamily.power_set(n), True, 1,
                       time.perf_counter() - t0)
    if n <= EXHAUSTIVE_MAX_N:
        value, masks = _exhaustive_f(n, a)
        witness = SetFamily(n, masks)
        nodes = 1 << (1 << n)
        return FResult(n, a, value, witness, True, nodes, time.perf_counter() - t0)
    result = _bb_f(n, a, budget)
    _validate_f_witness(result, a)
    return result


def _validate_f_witness(result: FResult, a: int) -> None:
    w = result.witness
    if len(w) != result.value or not is_union_closed(w) or max_frequency(w).count > a:
        raise AssertionError(f"search produced an invalid witness for f({result.n},{a})")


# ---------------------------------------------------------------------------
# g(n, m)


def _cover_counts(n: int, missing: tuple[int, ...]) -> list[int]:
    cover = [0] * n
    for u in missing:
        m = u
        while m:
            low = m & -m
            cover[low.bit_length() - 1] += 1
            m ^= low
    return cover


def _submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, including 0 and mask itself."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def _complement_is_union_closed(n: int, missing_set: frozenset[int]) -> bool:
    """Is 2^[n] minus the given masks union-closed?

    Fails iff some missing mask U equals S | T for present S, T; it
    suffices to scan S over submasks of U and ask for any present T with
    U \\ S <= T <= U.
    """
    for u in missing_set:
        for s in _submasks(u):
            if s == u or s in missing_set:
                continue
            rest = u & ~s
            for w in _submasks(s):
                if (rest | w) not in missing_set:
                    return False  # forced union: S | (rest|w) = u, both present
    return True


def _g_by_complement(n: int, m: int, budget: SearchBudget) -> GResult:
    """Enumerate the k = 2^n - m missing masks directly (k <= n)."""
    full = 1 << n
    k = full - m
    half = 1 << (n - 1)
    tick = _Ticker(budget)
    best_value: Optional[int] = None
    best_masks: Optional[tuple[int, ...]] = None
    all_masks = range(full)
    for missing in itertools.combinations(all_masks, k):
        if not tick.tick():
            break
        mset = frozenset(missing)
        if not _complement_is_union_closed(n, mset):
            continue
        value = half - min(_cover_counts(n, missing))
        if best_value is None or value < best_value:
            best_value = value
            best_masks = tuple(x for x in all_masks if x not in mset)
        elif value == best_value:
            masks = tuple(x for x in all_masks if x not in mset)
            if best_masks is None or masks < best_masks:
                best_masks = masks
    if best_value is None or best_masks is None:
        raise AssertionError(f"no union-closed family of size {m} on [{n}]")
    witness = SetFamily(n, best_masks)
    return GResult(n, m, best_value, witness, not tick.exhausted, tick.nodes, tick.seconds)


def _top_slice_family(n: int, m: int) -> tuple[int, ...]:
    """A union-closed family of exactly m sets: drop the 2^n - m smallest
    masks in (popcount, value) order from the power set.  Dropping always
    removes an inclusion-minimal member, which preserves closure."""
    drop = sorted(range(1 << n), key=lambda x: (popcount(x), x))[: (1 << n) - m]
    dropped = set(drop)
    return tuple(x for x in range(1 << n) if x not in dropped)


def _bb_g(n: int, m: int, budget: SearchBudget) -> GResult:
    if n > _BB_MAX_N:
        raise ValueError(f"branch-and-bound search capped at n = {_BB_MAX_N}, got {n}")
    order = _branch_order(n)
    length = len(order)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), length + 1000))
    pcs = [popcount(m_) for m_ in order]
    tick = _Ticker(budget)

    seed_masks = _top_slice_family(n, m)
    best_masks = seed_masks
    best_value = max_frequency(SetFamily(n, seed_masks)).count

    freq = [0] * n
    included: list[int] = []
    inc_bits = 0

    def rec(i: int, size: int, used_slots: int, cur_max: int) -> None:
        nonlocal best_value, best_masks, inc_bits
        if not tick.tick():
            return
        if size == m:
            if cur_max < best_value:
                best_value = cur_max
                best_masks = tuple(sorted(included))
            return
        if i == length or size + (length - i) < m:
            return
        need = m - size
        empty_avail = 0 if (inc_bits & 1) else 1  # mask 0 still addable?
        nonempty_needed = max(0, need - empty_avail)
        lb = max(cur_max, -(-(used_slots + nonempty_needed) // n))
        if lb >= best_value:
            return
        mask = order[i]
        k = pcs[i]
        feasible = True
        for t in included:
            u = mask | t
            if u != t and not (inc_bits >> u) & 1:
                feasible = False
                break
        if feasible:
            new_max = cur_max
            m_ = mask
            while m_:
                low = m_ & -m_
                e = low.bit_length() - 1
                freq[e] += 1
                if freq[e] > new_max:
                    new_max = freq[e]
                m_ ^= low
            included.append(mask)
            inc_bits |= 1 << mask
            if new_max < best_value:
                rec(i + 1, size + 1, used_slots + k, new_max)
            inc_bits &= ~(1 << mask)
            included.pop()
            m_ = mask
            while m_:
                low = m_ & -m_
                freq[low.bit_length() - 1] -= 1
                m_ ^= low
        rec(i + 1, size, used_slots, cur_max)

    rec(0, 0, 0, 0)
    witness = SetFamily(n, best_masks)
    return GResult(n, m, best_value, witness, not tick.exhausted, tick.nodes, tick.seconds)


def compute_g(n: int, m: int, budget: SearchBudget = NO_BUDGET) -> GResult:
    """Exact g(n,m) with witness.

    Union-closed families of every size 1 <= m <= 2^n exist (peel
    inclusion-minimal members off the power set), so there is no
    infeasible case inside that range.
    """
    if n < 1:
        raise ValueError(f"ground size must be >= 1, got {n}")
    if not 1 <= m <= 1 << n:
        raise ValueError(f"family size must be in [1, 2^{n}], got {m}")
    t0 = time.perf_counter()
    if (1 << n) - m <= n:
        result = _g_by_complement(n, m, budget)
    elif n <= EXHAUSTIVE_MAX_N:
        _, by_size = _exhaustive_tables(n)
        value, masks = by_size[m]
        nodes = 1 << (1 << n)
        result = GResult(n, m, value, SetFamily(n, masks), True, nodes,
                         time.perf_counter() - t0)
    else:
        result = _bb_g(n, m, budget)
    _validate_g_witness(result)
    return result


def _validate_g_witness(result: GResult) -> None:
    w = result.witness
    if (len(w) != result.m or not is_union_closed(w)
            or max_frequency(w).count != result.value):
        raise AssertionError(f"search produced an invalid witness for g({result.n},{result.m})")


# ---------------------------------------------------------------------------
# reproducible random families

_SM64_MASK = (1 << 64) - 1
_SM64_GAMMA = 0x9E3779B97F4A7C15
_SM64_MIX1 = 0xBF58476D1CE4E5B9
_SM64_MIX2 = 0x94D049BB133111EB


def _splitmix64_stream(seed: int) -> Iterator[int]:
    """SplitMix64 (Steele-Lea-Flood 2014 constants): a 64-bit splittable
    generator, fixed permanently so corpora reproduce byte for byte."""
    state = seed & _SM64_MASK
    while True:
        state = (state + _SM64_GAMMA) & _SM64_MASK
        z = state
        z = ((z ^ (z >> 30)) * _SM64_MIX1) & _SM64_MASK
        z = ((z ^ (z >> 27)) * _SM64_MIX2) & _SM64_MASK
        yield z ^ (z >> 31)


def random_union_closed(n: int, seed: int, density: Fraction | float | int | str) -> SetFamily:
    """Union closure of a density-p random subset of all masks.

    Deterministic in (n, seed, density): mask i is included iff the i-th
    SplitMix64 draw u satisfies u/2^64 < density, compared in exact
    rational arithmetic (no floats in the decision).
    """
    if not 1 <= n <= 16:
        raise ValueError(f"ground size must be in [1, 16], got {n}")
    d = Fraction(density)
    if not 0 <= d <= 1:
        raise ValueError(f"density must be in [0, 1], got {d}")
    threshold = d.numerator << 64
    den = d.denominator
    stream = _splitmix64_stream(seed)
    masks = [m for m, u in zip(range(1 << n), stream) if u * den < threshold]
    return union_closure(SetFamily(n, tuple(masks)))


# ---------------------------------------------------------------------------
# f/g consistency


def check_fg_duality(n: int, a_max: int) -> VerificationReport:
    """Check f(n,a) >= m <=> g(n,m) <= a over the whole (a, m) grid.

    Both directions are definitional once minimal-member removal is
    available: a size-m subfamily of an f-witness keeps frequencies below
    a, and a g-witness of size m is itself an f candidate.  A violation
    can only mean a solver bug, so this doubles as a cross-check of the
    two searches.  Exhaustive regime only (n <= 4).
    """
    if n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"duality check needs exhaustive tables, n <= {EXHAUSTIVE_MAX_N}")
    if a_max < 1:
        raise ValueError("a_max must be >= 1")
    full = 1 << n
    f_vals = {a: compute_f(n, a).value for a in range(1, a_max + 1)}
    g_vals = {m: compute_g(n, m).value for m in range(1, full + 1)}
    violations = []
    for a in range(1, a_max + 1):
        for m in range(1, full + 1):
            if (f_vals[a] >= m) != (g_vals[m] <= a):
                violations.append({"a": a, "m": m, "f": f_vals[a], "g": g_vals[m]})
    return report("fg-duality", {"n": n, "a_max": a_max, "m_max": full}, violations)
