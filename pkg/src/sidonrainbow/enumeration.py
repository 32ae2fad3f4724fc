"""Enumeration and exact counting of Sidon 4-sets in [n] and Z_k.

Pairs {a < b} of [n] with a + b = l exist for max(1, l-n) <= a <= (l-1)//2, and
two distinct pairs with the same sum are automatically disjoint, so every
unordered pair of same-sum pairs is one Sidon 4-set. That observation drives
both the enumerator and the fast counting oracle.
"""
from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from .core import ModularSidonQuad, SidonQuad


def pairs_with_sum(n: int, l: int) -> int:
    """Number of pairs {a < b} within [n] with a + b = l."""
    lo = max(1, l - n)
    hi = (l - 1) // 2
    return max(0, hi - lo + 1)


def enumerate_quads(n: int) -> Iterator[SidonQuad]:
    """Yield every canonical Sidon 4-set of [n] exactly once.

    Order is part of the contract: pair-sum l ascending, then the tuple
    (x1, x2, x3, x4) lexicographically ascending within each l.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    for l in range(5, 2 * n):
        lo = max(1, l - n)
        hi = (l - 1) // 2
        # descending smaller elements give ascending (x1, x2) since x1 = l - x4
        for x4 in range(hi - 1, lo - 1, -1):
            for x3 in range(hi, x4, -1):
                yield SidonQuad(l - x4, l - x3, x3, x4)


def total_quads_formula(n: int) -> int:
    """Closed-form total: n^3/12 - 3n^2/8 + 5n/12 - (0 if n even else 1/8), exactly."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    num = 2 * n**3 - 9 * n**2 + 10 * n
    if n % 2:
        num -= 3
    assert num % 24 == 0
    return num // 24


def count_quads_by_sums(n: int) -> int:
    """Independent total via sum buckets: sum over l of C(p(l), 2)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n < 4:
        return 0
    l = np.arange(3, 2 * n, dtype=np.int64)
    p = (l - 1) // 2 - np.maximum(1, l - n) + 1
    p = np.maximum(p, 0)
    return int((p * (p - 1) // 2).sum())


def enumerate_modular_quads(k: int) -> list[ModularSidonQuad]:
    """All canonical balanced pairings of four distinct residues mod k.

    Direct scan over 4-subsets and their three pairings; deliberately free of
    any closed-form shortcut so it can serve as the oracle for the count
    formula. Sorted output.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    out = []
    for w, x, y, z in itertools.combinations(range(1, k + 1), 4):
        # the pair holding w first keeps the object canonical
        for pa, pb in (((w, x), (y, z)), ((w, y), (x, z)), ((w, z), (x, y))):
            if (pa[0] + pa[1]) % k == (pb[0] + pb[1]) % k:
                out.append(ModularSidonQuad(pa, pb, k))
    out.sort()
    return out


def modular_count_formula(k: int) -> int:
    """|S(k)| = k^3/8 - k^2/2 + theta*k with theta = 1/2 (k even), 3/8 (k odd).

    Validated for k >= 4; smaller k short-circuits to 0 since four distinct
    residues do not exist there.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if k < 4:
        return 0
    if k % 2 == 0:
        num = k**3 - 4 * k**2 + 4 * k
    else:
        num = k**3 - 4 * k**2 + 3 * k
    assert num % 8 == 0
    return num // 8


def partition_modular(k: int) -> dict[int, list[ModularSidonQuad]]:
    """Bucket the balanced pairings mod k by their common pair sum u in {1..k}."""
    if k < 4:
        raise ValueError(f"need k >= 4, got {k}")
    buckets: dict[int, list[ModularSidonQuad]] = {u: [] for u in range(1, k + 1)}
    for q in enumerate_modular_quads(k):
        buckets[q.side_sum].append(q)
    return buckets


def f_n_exact(n: int, b: int, a: int) -> int:
    """Exact number of Sidon 4-sets of [n] containing both a and b (b < a).

    Splits on whether {a, b} is a side of the forced pairing:
      same side:      the other side is any different pair with sum a + b;
      opposite sides: partners x and x + (a - b) with x, x + d avoiding a, b.
    The two families are disjoint and each 4-set appears once.
    """
    if not 1 <= b < a <= n:
        raise ValueError(f"need 1 <= b < a <= n, got b={b}, a={a}, n={n}")
    same_side = pairs_with_sum(n, a + b) - 1
    d = a - b
    # x runs over partners of a; y = x + d partners b; exclusions keep all four distinct
    hi = n - d
    opposite = hi
    for bad in {a, b, 2 * b - a}:
        if 1 <= bad <= hi:
            opposite -= 1
    return same_side + opposite


def f_n_scan(n: int, b: int, a: int) -> int:
    """Test oracle for f_n_exact: scan every quad for membership of both values."""
    if not 1 <= b < a <= n:
        raise ValueError(f"need 1 <= b < a <= n, got b={b}, a={a}, n={n}")
    return sum(1 for q in enumerate_quads(n) if a in q.elements and b in q.elements)
