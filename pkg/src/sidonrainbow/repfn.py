"""Representation functions r_{A+B}, interval compression, and t-fold additive energy.

All counts are exact integers. Profiles are built by direct pairwise
accumulation; the energy fold convolves profiles with numpy's integer
convolution, which performs the same exact accumulation in C (verified
bit-identical against the pure-Python fold in tests).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class IntSet:
    """Finite set of distinct integers, kept strictly increasing."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int]):
        vals = tuple(sorted(values))
        for a, b in zip(vals, vals[1:]):
            if a == b:
                raise ValueError(f"duplicate element {a}")
        self.values: tuple[int, ...] = vals

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, x):
        return x in self.values

    def __eq__(self, other):
        return isinstance(other, IntSet) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"IntSet({list(self.values)})"


@dataclass(frozen=True)
class RepProfile:
    """Exact counts m -> r(m) on the support window [lo, hi]; zero outside."""

    lo: int
    hi: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.hi - self.lo + 1:
            raise ValueError("counts length does not match [lo, hi]")

    def __getitem__(self, m: int) -> int:
        if self.lo <= m <= self.hi:
            return self.counts[m - self.lo]
        return 0

    def total(self) -> int:
        return sum(self.counts)

    def support(self) -> range:
        return range(self.lo, self.hi + 1)


def rep_profile(A: IntSet, B: IntSet) -> RepProfile:
    """r_{A+B}(m) = #{(a,b) in A x B : a+b = m} for every m, by direct accumulation."""
    if not len(A) or not len(B):
        raise ValueError("rep_profile needs nonempty sets")
    lo = A.values[0] + B.values[0]
    hi = A.values[-1] + B.values[-1]
    counts = [0] * (hi - lo + 1)
    for a in A.values:
        for b in B.values:
            counts[a + b - lo] += 1
    return RepProfile(lo, hi, tuple(counts))


def cyclic_rep_profile(A: IntSet, B: IntSet, n: int) -> RepProfile:
    """r_{A+B} over Z_n: counts indexed by residues {1..n}, n standing for 0."""
    if not len(A) or not len(B):
        raise ValueError("cyclic_rep_profile needs nonempty sets")
    for s in (A, B):
        for x in s:
            if not 1 <= x <= n:
                raise ValueError(f"element {x} outside {{1..{n}}}")
    counts = [0] * n
    for a in A.values:
        for b in B.values:
            counts[(a + b - 1) % n] += 1
    return RepProfile(1, n, tuple(counts))


def interval_compress(size: int) -> IntSet:
    """The symmetric interval [-ceil(size/2), ceil(size/2)]; depends only on cardinality."""
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    half = (size + 1) // 2
    return IntSet(range(-half, half + 1))


def negate_set(A: IntSet) -> IntSet:
    """{-a : a in A}."""
    return IntSet(-a for a in A.values)


def _indicator(A: IntSet) -> tuple[int, np.ndarray]:
    lo = A.values[0]
    arr = np.zeros(A.values[-1] - lo + 1, dtype=np.int64)
    for a in A.values:
        arr[a - lo] = 1
    return lo, arr


def additive_energy(sets: Sequence[IntSet]) -> int:
    """E_t: number of tuples (a_1..a_t), a_i from sets[i], with zero sum.

    Folds indicator arrays by integer convolution, then reads the count at 0.
    Any empty set gives 0. Intermediate counts stay below prod(|A_i|), well
    inside int64 for the sizes this library targets.
    """
    if len(sets) < 2:
        raise ValueError("need at least two sets")
    if any(len(s) == 0 for s in sets):
        return 0
    lo, acc = _indicator(sets[0])
    for s in sets[1:]:
        slo, sarr = _indicator(s)
        acc = np.convolve(acc, sarr)
        lo += slo
    if lo <= 0 < lo + len(acc):
        return int(acc[-lo])
    return 0


def _fold_energy_slow(sets: Sequence[IntSet]) -> int:
    """Pure-Python reference fold; must be bit-identical to additive_energy."""
    if any(len(s) == 0 for s in sets):
        return 0
    acc = {0: 1}
    for s in sets:
        nxt: dict[int, int] = {}
        for m, cnt in acc.items():
            for a in s.values:
                key = m + a
                nxt[key] = nxt.get(key, 0) + cnt
        acc = nxt
    return acc.get(0, 0)


def closed_rep_two_intervals(alpha: int, beta: int, m: int) -> int:
    """r_{[-alpha,alpha]+[-beta,beta]}(m): a plateau of height 2*alpha+1 for
    |m| <= beta-alpha, linear decay alpha+beta+1-|m| out to |m| = alpha+beta, then 0."""
    if alpha < 1 or alpha > beta:
        raise ValueError(f"need 1 <= alpha <= beta, got alpha={alpha}, beta={beta}")
    am = abs(m)
    if am <= beta - alpha:
        return 2 * alpha + 1
    if am <= alpha + beta:
        return alpha + beta + 1 - am
    return 0


def closed_rep_one_interval(alpha: int, m: int) -> int:
    """r_{J+J}(m) for J = [-alpha, alpha]: the triangle 2*alpha+1-|m|, clipped at 0."""
    if alpha < 1:
        raise ValueError(f"need alpha >= 1, got {alpha}")
    am = abs(m)
    return 2 * alpha + 1 - am if am <= 2 * alpha else 0


def closed_energy4_interval(alpha: int) -> int:
    """E_4 of four copies of [-alpha, alpha]: 16a^3/3 + 8a^2 + 14a/3 + 1, exactly.

    16a^3 + 14a is always divisible by 3, so the value is an integer.
    """
    if alpha < 1:
        raise ValueError(f"need alpha >= 1, got {alpha}")
    cubic = 16 * alpha**3 + 14 * alpha
    assert cubic % 3 == 0
    return cubic // 3 + 8 * alpha**2 + 1


def check_sum_dominance(a1: int, a2: int, a3: int, a4: int, m: int) -> bool:
    """With A_i = [-a_i, a_i] and J = [-s/4, s/4] for s = a1+a2+a3+a4 (4 | s),
    test r_{A1+A2}(m) + r_{A3+A4}(m) <= 2 r_{J+J}(m).

    Truthful evaluation: the inequality provably holds whenever |m| lies within
    both pair supports (|m| <= a1+a2 and |m| <= a3+a4) but can fail once one
    pair's profile has dropped to zero while the other is still positive, e.g.
    radii (1,1,1,5) at m=4 give 3 > 2. Callers asserting dominance must stay
    inside both supports; check_energy_dominance covers the aggregate form that
    needs no such restriction.
    """
    for a in (a1, a2, a3, a4):
        if a < 1:
            raise ValueError("interval radii must be >= 1")
    s = a1 + a2 + a3 + a4
    if s % 4 != 0:
        raise ValueError(f"sum of radii must be divisible by 4, got {s}")
    if abs(m) > s // 2:
        raise ValueError(f"|m| = {abs(m)} exceeds {s // 2}")
    lhs = closed_rep_two_intervals(min(a1, a2), max(a1, a2), m) + closed_rep_two_intervals(
        min(a3, a4), max(a3, a4), m
    )
    rhs = 2 * closed_rep_one_interval(s // 4, m)
    return lhs <= rhs


def check_energy_dominance(a1: int, a2: int, a3: int, a4: int) -> bool:
    """Aggregate form: sum_m r_{A1+A2}(m) * r_{A3+A4}(m) <= sum_{|m| <= s/2} r_{J+J}(m)^2.

    Holds for every radius tuple with 4 | s: where both factors are positive the
    pointwise bound applies, and elsewhere the product is zero.
    """
    s = a1 + a2 + a3 + a4
    if s % 4 != 0:
        raise ValueError(f"sum of radii must be divisible by 4, got {s}")
    p12 = rep_profile(IntSet(range(-a1, a1 + 1)), IntSet(range(-a2, a2 + 1)))
    p34 = rep_profile(IntSet(range(-a3, a3 + 1)), IntSet(range(-a4, a4 + 1)))
    lhs = sum(p12[m] * p34[m] for m in p12.support())
    half = s // 2
    rhs = sum(closed_rep_one_interval(s // 4, m) ** 2 for m in range(-half, half + 1))
    return lhs <= rhs


def check_lev(sets: Sequence[IntSet]) -> bool:
    """Lev's compression inequality: E_t of the sets is at most E_t of the
    symmetric intervals holding the same cardinalities."""
    if len(sets) < 2:
        raise ValueError("need at least two sets")
    if any(len(s) == 0 for s in sets):
        return True
    compressed = [interval_compress(len(s)) for s in sets]
    return additive_energy(sets) <= additive_energy(compressed)
